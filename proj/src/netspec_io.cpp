#include "insideness/netspec_io.hpp"

#include <cstdio>
#include <map>
#include <sstream>
#include <type_traits>

#include "insideness/errors.hpp"

namespace insideness {
namespace {

constexpr const char* kHeader = "# insideness netspec v1";

std::string real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_layer(std::ostream& os, const ConvLayerSpec& l) {
  os << "layer " << l.name << '\n'
     << "shape " << l.kh << ' ' << l.kw << ' ' << l.cin << ' ' << l.cout << '\n'
     << "anchor " << l.anchor_row << ' ' << l.anchor_col << '\n'
     << "dilation " << l.dilation << '\n'
     << "activation " << to_string(l.activation) << ' ' << real(l.gain) << '\n'
     << "pad " << real(l.pad_value) << '\n'
     << "bias";
  for (double b : l.bias) os << ' ' << real(b);
  os << "\nweights";
  for (double w : l.weights) os << ' ' << real(w);
  os << "\nend\n";
}

struct Parsed {
  std::string kind;
  std::string name;
  std::map<std::string, std::string> params;
  std::vector<ConvLayerSpec> layers;
};

class Reader {
 public:
  explicit Reader(const std::string& text) : in_(text) {}

  Parsed parse() {
    std::string line;
    if (!std::getline(in_, line) || line != kHeader) fail("missing header");
    Parsed p;
    while (next(line)) {
      std::istringstream ls(line);
      std::string key;
      ls >> key;
      if (key == "net") {
        if (!(ls >> p.kind >> p.name)) fail("bad net line");
      } else if (key == "param") {
        std::string k, v;
        if (!(ls >> k >> v)) fail("bad param line");
        p.params[k] = v;
      } else if (key == "layer") {
        std::string name;
        if (!(ls >> name)) fail("layer without a name");
        p.layers.push_back(layer(name));
      } else {
        fail("unexpected '" + key + "'");
      }
    }
    return p;
  }

 private:
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line[0] != '#') return true;
    }
    return false;
  }

  std::istringstream expect(const std::string& key) {
    std::string line;
    if (!next(line)) fail("unexpected end of input, wanted '" + key + "'");
    std::istringstream ls(line);
    std::string k;
    ls >> k;
    if (k != key) fail("wanted '" + key + "', got '" + k + "'");
    return ls;
  }

  std::vector<double> reals(std::istringstream& ls, std::size_t n, const char* what) {
    std::vector<double> out;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        out.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail(std::string("bad number in ") + what + ": " + tok);
      }
    }
    if (out.size() != n) fail(std::string(what) + ": expected " + std::to_string(n) + " values");
    return out;
  }

  ConvLayerSpec layer(const std::string& name) {
    ConvLayerSpec l;
    l.name = name;
    auto shape = expect("shape");
    if (!(shape >> l.kh >> l.kw >> l.cin >> l.cout)) fail("bad shape");
    auto anchor = expect("anchor");
    if (!(anchor >> l.anchor_row >> l.anchor_col)) fail("bad anchor");
    auto dil = expect("dilation");
    if (!(dil >> l.dilation)) fail("bad dilation");
    auto act = expect("activation");
    std::string act_name;
    if (!(act >> act_name)) fail("bad activation");
    try {
      l.activation = parse_activation(act_name);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    l.gain = reals(act, 1, "activation gain")[0];
    auto pad = expect("pad");
    l.pad_value = reals(pad, 1, "pad")[0];
    if (l.kh < 1 || l.kw < 1 || l.cin < 1 || l.cout < 1) fail("non-positive shape");
    auto bias = expect("bias");
    l.bias = reals(bias, static_cast<std::size_t>(l.cout), "bias");
    auto w = expect("weights");
    l.weights = reals(w, static_cast<std::size_t>(l.kh) * static_cast<std::size_t>(l.kw) *
                             static_cast<std::size_t>(l.cin) * static_cast<std::size_t>(l.cout),
                      "weights");
    expect("end");
    try {
      l.check();
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    return l;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw FormatError("netspec line " + std::to_string(line_no_) + ": " + msg);
  }

  std::istringstream in_;
  int line_no_ = 1;
};

const std::string& param(const Parsed& p, const std::string& key) {
  auto it = p.params.find(key);
  if (it == p.params.end()) throw FormatError("netspec: missing param " + key);
  return it->second;
}

template <typename T>
T number(const Parsed& p, const std::string& key) {
  const std::string& s = param(p, key);
  try {
    std::size_t used = 0;
    T v;
    if constexpr (std::is_same_v<T, double>) {
      v = std::stod(s, &used);
    } else {
      v = static_cast<T>(std::stoll(s, &used));
    }
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw FormatError("netspec: bad value for param " + key + ": " + s);
  }
}

}  // namespace

std::string write_netspec(const RayNetSpec& net) {
  std::ostringstream os;
  os << kHeader << '\n'
     << "net ray " << net.name << '\n'
     << "param N " << net.N << '\n'
     << "param C " << net.C << '\n'
     << "param head_begin " << net.head_begin << '\n';
  for (const auto& l : net.layers) write_layer(os, l);
  return os.str();
}

std::string write_netspec(const ConvLstmSpec& cell) {
  std::ostringstream os;
  os << kHeader << '\n'
     << "net convlstm " << cell.name << '\n'
     << "param q " << real(cell.q) << '\n'
     << "param border_hidden_init " << real(cell.border_hidden_init) << '\n';
  for (const auto* g : cell.gates()) write_layer(os, *g);
  return os.str();
}

RayNetSpec parse_ray_netspec(const std::string& text) {
  Parsed p = Reader(text).parse();
  if (p.kind != "ray") throw FormatError("netspec: expected a ray net, got '" + p.kind + "'");
  RayNetSpec net;
  net.name = p.name;
  net.N = number<int>(p, "N");
  net.C = number<int>(p, "C");
  net.head_begin = number<std::size_t>(p, "head_begin");
  net.layers = std::move(p.layers);
  if (net.head_begin > net.layers.size()) throw FormatError("netspec: head_begin past the last layer");
  return net;
}

ConvLstmSpec parse_convlstm_netspec(const std::string& text) {
  Parsed p = Reader(text).parse();
  if (p.kind != "convlstm") throw FormatError("netspec: expected a convlstm cell, got '" + p.kind + "'");
  if (p.layers.size() != 4) throw FormatError("netspec: a convlstm cell needs 4 gate layers");
  ConvLstmSpec cell;
  cell.name = p.name;
  cell.q = number<double>(p, "q");
  cell.border_hidden_init = number<double>(p, "border_hidden_init");
  cell.input_gate = p.layers[0];
  cell.forget_gate = p.layers[1];
  cell.cell_gate = p.layers[2];
  cell.output_gate = p.layers[3];
  return cell;
}

}  // namespace insideness
