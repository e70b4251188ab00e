#include "insideness/ray_net.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace insideness {
namespace {

ConvLayerSpec layer1() {
  auto l = ConvLayerSpec::zeros("rows_and", 2, 1, 1, 1);
  l.weight(0, 0, 0, 0) = 1.0;
  l.weight(1, 0, 0, 0) = 1.0;
  l.bias[0] = -1.0;
  l.activation = Activation::ReLU;
  return l;
}

void check_side(const RayNetSpec& net, const BinaryImage& img) {
  if (img.height() > net.N || img.width() > net.N) {
    throw std::invalid_argument("net " + net.name + " accepts images up to " +
                                std::to_string(net.N) + " pixels per side");
  }
}

}  // namespace

std::vector<ConvLayerSpec> build_parity_head(int C) {
  if (C < 0) throw std::invalid_argument("build_parity_head: C must be >= 0");
  const int triplets = C / 2 + 1;
  auto hidden = ConvLayerSpec::zeros("parity_hidden", 1, 1, 1, 3 * triplets);
  auto out = ConvLayerSpec::zeros("parity_out", 1, 1, 3 * triplets, 1);
  for (int u = 0; u < triplets; ++u) {
    const double two_u = 2.0 * u;
    const double biases[3] = {-(two_u - 0.5), -two_u, -(two_u + 0.5)};
    const double weights[3] = {-2.0, 4.0, -2.0};
    for (int t = 0; t < 3; ++t) {
      hidden.weight(0, 0, 0, 3 * u + t) = 1.0;
      hidden.bias[static_cast<std::size_t>(3 * u + t)] = biases[t];
      out.weight(0, 0, 3 * u + t, 0) = weights[t];
    }
  }
  hidden.activation = Activation::ReLU;
  out.bias[0] = 1.0;
  out.activation = Activation::ReLU;
  return {hidden, out};
}

double eval_parity_head(const std::vector<ConvLayerSpec>& head, int n) {
  FeatureTensor x(1, 1, 1, static_cast<double>(n));
  return run_layers(std::move(x), head, 0, head.size())(0, 0, 0);
}

RayNetSpec build_ray_net(int N, int C) {
  if (N < 3) throw std::invalid_argument("build_ray_net: N must be >= 3");
  if (C < 0) throw std::invalid_argument("build_ray_net: C must be >= 0");
  RayNetSpec net;
  net.name = "ray";
  net.N = N;
  net.C = C;
  net.layers.push_back(layer1());
  auto sum = ConvLayerSpec::zeros("ray_sum", 1, N, 1, 1);
  for (int b = 0; b < N; ++b) sum.weight(0, b, 0, 0) = 1.0;
  net.layers.push_back(sum);
  net.head_begin = net.layers.size();
  for (auto& l : build_parity_head(C)) net.layers.push_back(std::move(l));
  return net;
}

RayNetSpec build_dilated_ray_net(int N) {
  if (N < 2 || !std::has_single_bit(static_cast<unsigned>(N))) {
    throw std::invalid_argument("build_dilated_ray_net: N must be a power of two >= 2");
  }
  RayNetSpec net;
  net.name = "dilated_ray";
  net.N = N;
  net.C = N;
  net.layers.push_back(layer1());
  for (int d = 1; d < N; d *= 2) {
    auto l = ConvLayerSpec::zeros("ray_sum_d" + std::to_string(d), 3, 3, 1, 1);
    l.anchor_row = 1;
    l.anchor_col = 1;
    l.dilation = d;
    l.weight(1, 1, 0, 0) = 1.0;
    l.weight(1, 2, 0, 0) = 1.0;
    l.activation = Activation::ReLU;
    net.layers.push_back(l);
  }
  net.head_begin = net.layers.size();
  for (auto& l : build_parity_head(N)) net.layers.push_back(std::move(l));
  return net;
}

RayNetSpec dilated_ray_net_for(int side) {
  if (side < 1) throw std::invalid_argument("dilated_ray_net_for: side must be positive");
  return build_dilated_ray_net(static_cast<int>(std::bit_ceil(static_cast<unsigned>(std::max(side, 2)))));
}

FeatureTensor crossing_field(const RayNetSpec& net, const BinaryImage& img) {
  check_side(net, img);
  return run_layers(FeatureTensor::from_image(img), net.layers, 0, net.head_begin);
}

FeatureTensor forward(const RayNetSpec& net, const BinaryImage& img) {
  check_side(net, img);
  return run_layers(FeatureTensor::from_image(img), net.layers, 0, net.layers.size());
}

InsidenessMask eval_net(const RayNetSpec& net, const BinaryImage& img) {
  const FeatureTensor y = forward(net, img);
  std::vector<std::uint8_t> inside(img.data().size());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      inside[static_cast<std::size_t>(r) * static_cast<std::size_t>(img.width()) +
             static_cast<std::size_t>(c)] = y(r, c, 0) > 0.5 ? 1 : 0;
    }
  }
  return mask_from_inside_map(img, inside);
}

}  // namespace insideness
