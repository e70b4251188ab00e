#pragma once

#include <string>
#include <vector>

#include "insideness/binary_image.hpp"

namespace insideness {

// H x W x C activations, channel-minor.
class FeatureTensor {
 public:
  FeatureTensor() = default;
  FeatureTensor(int height, int width, int channels, double fill = 0.0);

  static FeatureTensor from_image(const BinaryImage& img);

  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }

  double operator()(int row, int col, int ch) const { return values_[index(row, col, ch)]; }
  double& operator()(int row, int col, int ch) { return values_[index(row, col, ch)]; }
  const std::vector<double>& values() const { return values_; }

  friend bool operator==(const FeatureTensor&, const FeatureTensor&) = default;

 private:
  std::size_t index(int row, int col, int ch) const {
    return (static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(col)) * static_cast<std::size_t>(channels_) +
           static_cast<std::size_t>(ch);
  }

  int height_ = 0;
  int width_ = 0;
  int channels_ = 0;
  std::vector<double> values_;
};

// Channels of a followed by channels of b.
FeatureTensor concat_channels(const FeatureTensor& a, const FeatureTensor& b);

enum class Activation { Identity, ReLU, Sigmoid, Tanh };

std::string to_string(Activation a);
Activation parse_activation(const std::string& name);

// Kernel tap (a, b) of a layer with anchor (ar, ac) and dilation d reads the
// input at (i + d(a - ar), j + d(b - ac)); reads outside the input see
// pad_value. The output is act(gain * (sum + bias[o])).
struct ConvLayerSpec {
  std::string name;
  int kh = 1;
  int kw = 1;
  int cin = 1;
  int cout = 1;
  int anchor_row = 0;
  int anchor_col = 0;
  int dilation = 1;
  Activation activation = Activation::Identity;
  double gain = 1.0;
  double pad_value = 0.0;
  std::vector<double> bias;     // cout
  std::vector<double> weights;  // kh * kw * cin * cout, index [a][b][c][o]

  static ConvLayerSpec zeros(std::string name, int kh, int kw, int cin, int cout);

  double& weight(int a, int b, int c, int o) { return weights[weight_index(a, b, c, o)]; }
  double weight(int a, int b, int c, int o) const { return weights[weight_index(a, b, c, o)]; }

  // Throws std::invalid_argument if sizes, anchor or dilation are inconsistent.
  void check() const;

  friend bool operator==(const ConvLayerSpec&, const ConvLayerSpec&) = default;

 private:
  std::size_t weight_index(int a, int b, int c, int o) const {
    return ((static_cast<std::size_t>(a) * static_cast<std::size_t>(kw) +
             static_cast<std::size_t>(b)) * static_cast<std::size_t>(cin) +
            static_cast<std::size_t>(c)) * static_cast<std::size_t>(cout) +
           static_cast<std::size_t>(o);
  }
};

double activate(Activation a, double x);

// Same spatial size as the input. Throws std::invalid_argument when the input
// channel count differs from layer.cin.
FeatureTensor conv2d(const FeatureTensor& input, const ConvLayerSpec& layer);

FeatureTensor run_layers(FeatureTensor x, const std::vector<ConvLayerSpec>& layers,
                         std::size_t begin, std::size_t end);

// NOT(x) = [1 - x]_+ and AND(x1, x2) = [x1 + x2 - 1]_+ as 1x1 ReLU convolutions.
// Inputs must be single-channel and {0,1}-valued (std::domain_error otherwise);
// AND also requires equal shapes (std::invalid_argument).
ConvLayerSpec boolean_not_layer();
ConvLayerSpec boolean_and_layer();
FeatureTensor boolean_not_net(const FeatureTensor& x);
FeatureTensor boolean_and_net(const FeatureTensor& x1, const FeatureTensor& x2);

}  // namespace insideness
