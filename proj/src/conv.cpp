#include "insideness/conv.hpp"

#include <cmath>
#include <stdexcept>

namespace insideness {

FeatureTensor::FeatureTensor(int height, int width, int channels, double fill)
    : height_(height), width_(width), channels_(channels) {
  if (height < 0 || width < 0 || channels < 0) {
    throw std::invalid_argument("FeatureTensor: negative dimension");
  }
  values_.assign(static_cast<std::size_t>(height) * static_cast<std::size_t>(width) *
                     static_cast<std::size_t>(channels),
                 fill);
}

FeatureTensor FeatureTensor::from_image(const BinaryImage& img) {
  FeatureTensor t(img.height(), img.width(), 1);
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) t(r, c, 0) = img(r, c) ? 1.0 : 0.0;
  }
  return t;
}

FeatureTensor concat_channels(const FeatureTensor& a, const FeatureTensor& b) {
  if (a.height() != b.height() || a.width() != b.width()) {
    throw std::invalid_argument("concat_channels: spatial size mismatch");
  }
  FeatureTensor out(a.height(), a.width(), a.channels() + b.channels());
  for (int r = 0; r < a.height(); ++r) {
    for (int c = 0; c < a.width(); ++c) {
      for (int k = 0; k < a.channels(); ++k) out(r, c, k) = a(r, c, k);
      for (int k = 0; k < b.channels(); ++k) out(r, c, a.channels() + k) = b(r, c, k);
    }
  }
  return out;
}

std::string to_string(Activation a) {
  switch (a) {
    case Activation::Identity: return "identity";
    case Activation::ReLU: return "relu";
    case Activation::Sigmoid: return "sigmoid";
    case Activation::Tanh: return "tanh";
  }
  return "unknown";
}

Activation parse_activation(const std::string& name) {
  if (name == "identity") return Activation::Identity;
  if (name == "relu") return Activation::ReLU;
  if (name == "sigmoid") return Activation::Sigmoid;
  if (name == "tanh") return Activation::Tanh;
  throw std::invalid_argument("unknown activation: " + name);
}

ConvLayerSpec ConvLayerSpec::zeros(std::string name, int kh, int kw, int cin, int cout) {
  ConvLayerSpec l;
  l.name = std::move(name);
  l.kh = kh;
  l.kw = kw;
  l.cin = cin;
  l.cout = cout;
  l.bias.assign(static_cast<std::size_t>(cout), 0.0);
  l.weights.assign(static_cast<std::size_t>(kh) * static_cast<std::size_t>(kw) *
                       static_cast<std::size_t>(cin) * static_cast<std::size_t>(cout),
                   0.0);
  return l;
}

void ConvLayerSpec::check() const {
  if (kh < 1 || kw < 1 || cin < 1 || cout < 1) {
    throw std::invalid_argument("layer " + name + ": kernel dimensions must be positive");
  }
  if (dilation < 1) throw std::invalid_argument("layer " + name + ": dilation must be >= 1");
  if (anchor_row < 0 || anchor_row >= kh || anchor_col < 0 || anchor_col >= kw) {
    throw std::invalid_argument("layer " + name + ": anchor outside kernel");
  }
  if (bias.size() != static_cast<std::size_t>(cout)) {
    throw std::invalid_argument("layer " + name + ": bias size != cout");
  }
  if (weights.size() != static_cast<std::size_t>(kh) * static_cast<std::size_t>(kw) *
                            static_cast<std::size_t>(cin) * static_cast<std::size_t>(cout)) {
    throw std::invalid_argument("layer " + name + ": weight count mismatch");
  }
}

double activate(Activation a, double x) {
  switch (a) {
    case Activation::Identity: return x;
    case Activation::ReLU: return x > 0.0 ? x : 0.0;
    case Activation::Sigmoid: return 1.0 / (1.0 + std::exp(-x));
    case Activation::Tanh: return std::tanh(x);
  }
  return x;
}

FeatureTensor conv2d(const FeatureTensor& input, const ConvLayerSpec& layer) {
  layer.check();
  if (input.channels() != layer.cin) {
    throw std::invalid_argument("conv2d: layer " + layer.name + " expects " +
                                std::to_string(layer.cin) + " channels, got " +
                                std::to_string(input.channels()));
  }
  const int h = input.height();
  const int w = input.width();
  FeatureTensor out(h, w, layer.cout);
  std::vector<double> acc(static_cast<std::size_t>(layer.cout));
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      acc = layer.bias;
      for (int a = 0; a < layer.kh; ++a) {
        const int r = i + layer.dilation * (a - layer.anchor_row);
        for (int b = 0; b < layer.kw; ++b) {
          const int c = j + layer.dilation * (b - layer.anchor_col);
          const bool inside = r >= 0 && r < h && c >= 0 && c < w;
          for (int ch = 0; ch < layer.cin; ++ch) {
            const double x = inside ? input(r, c, ch) : layer.pad_value;
            if (x == 0.0) continue;
            for (int o = 0; o < layer.cout; ++o) {
              acc[static_cast<std::size_t>(o)] += x * layer.weight(a, b, ch, o);
            }
          }
        }
      }
      for (int o = 0; o < layer.cout; ++o) {
        out(i, j, o) = activate(layer.activation, layer.gain * acc[static_cast<std::size_t>(o)]);
      }
    }
  }
  return out;
}

FeatureTensor run_layers(FeatureTensor x, const std::vector<ConvLayerSpec>& layers,
                         std::size_t begin, std::size_t end) {
  for (std::size_t k = begin; k < end && k < layers.size(); ++k) x = conv2d(x, layers[k]);
  return x;
}

namespace {

void require_binary(const FeatureTensor& x, const char* who) {
  if (x.channels() != 1) throw std::invalid_argument(std::string(who) + ": expects one channel");
  for (double v : x.values()) {
    if (v != 0.0 && v != 1.0) throw std::domain_error(std::string(who) + ": input is not binary");
  }
}

}  // namespace

ConvLayerSpec boolean_not_layer() {
  auto l = ConvLayerSpec::zeros("not", 1, 1, 1, 1);
  l.weight(0, 0, 0, 0) = -1.0;
  l.bias[0] = 1.0;
  l.activation = Activation::ReLU;
  return l;
}

ConvLayerSpec boolean_and_layer() {
  auto l = ConvLayerSpec::zeros("and", 1, 1, 2, 1);
  l.weight(0, 0, 0, 0) = 1.0;
  l.weight(0, 0, 1, 0) = 1.0;
  l.bias[0] = -1.0;
  l.activation = Activation::ReLU;
  return l;
}

FeatureTensor boolean_not_net(const FeatureTensor& x) {
  require_binary(x, "boolean_not_net");
  return conv2d(x, boolean_not_layer());
}

FeatureTensor boolean_and_net(const FeatureTensor& x1, const FeatureTensor& x2) {
  if (x1.height() != x2.height() || x1.width() != x2.width() || x1.channels() != x2.channels()) {
    throw std::invalid_argument("boolean_and_net: shape mismatch");
  }
  require_binary(x1, "boolean_and_net");
  require_binary(x2, "boolean_and_net");
  return conv2d(concat_channels(x1, x2), boolean_and_layer());
}

}  // namespace insideness
