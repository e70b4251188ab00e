#include "insideness/netpbm.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "insideness/errors.hpp"

namespace insideness {
namespace {

// Tokenizer for the plain netpbm formats.
class Tokens {
 public:
  explicit Tokens(const std::string& text) : s_(text) {}

  std::string magic() {
    skip();
    if (pos_ + 2 > s_.size()) throw FormatError("netpbm: missing magic number");
    std::string m = s_.substr(pos_, 2);
    pos_ += 2;
    return m;
  }

  int integer(const char* what) {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw FormatError(std::string("netpbm: expected ") + what);
    if (pos_ - start > 9) throw FormatError(std::string("netpbm: ") + what + " out of range");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  // A single bit; P1 allows bits without separating whitespace.
  int bit() {
    skip();
    if (pos_ >= s_.size()) throw FormatError("netpbm: truncated pixel data");
    const char c = s_[pos_++];
    if (c != '0' && c != '1') throw FormatError(std::string("netpbm: bad pixel '") + c + "'");
    return c - '0';
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) throw FormatError("netpbm: trailing data after pixels");
  }

 private:
  void skip() {
    while (pos_ < s_.size()) {
      if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

template <typename Get>
std::string grid(const char* magic, int height, int width, const char* maxval, Get get) {
  std::ostringstream os;
  os << magic << '\n' << width << ' ' << height << '\n';
  if (maxval) os << maxval << '\n';
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) os << (c ? " " : "") << get(r, c);
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string write_pbm(const BinaryImage& img) {
  return grid("P1", img.height(), img.width(), nullptr, [&](int r, int c) { return img(r, c) ? 1 : 0; });
}

BinaryImage read_pbm(const std::string& text) {
  Tokens t(text);
  if (t.magic() != "P1") throw FormatError("pbm: expected magic P1");
  const int w = t.integer("width");
  const int h = t.integer("height");
  BinaryImage img(h, w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) img.set({r, c}, t.bit() == 1);
  }
  t.finish();
  return img;
}

std::string write_pgm_mask(const InsidenessMask& mask) {
  return grid("P2", mask.height(), mask.width(), "2",
              [&](int r, int c) { return static_cast<int>(mask(r, c)); });
}

InsidenessMask read_pgm_mask(const std::string& text) {
  Tokens t(text);
  if (t.magic() != "P2") throw FormatError("pgm: expected magic P2");
  const int w = t.integer("width");
  const int h = t.integer("height");
  if (t.integer("maxval") != 2) throw FormatError("pgm: mask maxval must be 2");
  InsidenessMask mask(h, w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const int v = t.integer("pixel value");
      if (v > 2) throw FormatError("pgm: mask value " + std::to_string(v) + " out of range");
      mask.set({r, c}, static_cast<Label>(v));
    }
  }
  t.finish();
  return mask;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace insideness
