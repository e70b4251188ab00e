#pragma once

#include <string>
#include <vector>

#include "insideness/conv.hpp"
#include "insideness/oracle.hpp"

namespace insideness {

// Layers [0, head_begin) compute the horizontal crossing field; the remaining
// two layers are the parity head.
struct RayNetSpec {
  std::string name;
  int N = 0;  // largest image side the net accepts
  int C = 0;  // largest crossing count the parity head decodes
  std::vector<ConvLayerSpec> layers;
  std::size_t head_begin = 0;

  friend bool operator==(const RayNetSpec&, const RayNetSpec&) = default;
};

// Hidden 1x1 layer of 3(floor(C/2)+1) ReLU units with biases -(2u-1/2), -2u,
// -(2u+1/2), then a 1x1 output unit weighting each triplet (-2, 4, -2) with
// bias +1. On an integer n in [0, C] the output is n mod 2.
// Throws std::invalid_argument for C < 0.
std::vector<ConvLayerSpec> build_parity_head(int C);
double eval_parity_head(const std::vector<ConvLayerSpec>& head, int n);

// Layer 1: [X(i,j) + X(i+1,j) - 1]_+ (2x1 kernel).  Layer 2: 1xN all-ones
// kernel summing the row from column j rightwards.  Layers 3-4: parity head.
// Throws std::invalid_argument unless N >= 3 and 0 <= C.
RayNetSpec build_ray_net(int N, int C);
inline RayNetSpec build_ray_net(int N) { return build_ray_net(N, N); }

// Layer 2 replaced by log2(N) layers with kernel [[0,0,0],[0,1,1],[0,0,0]] and
// dilations 1, 2, ..., N/2. Throws std::invalid_argument unless N is a power
// of two >= 2.
RayNetSpec build_dilated_ray_net(int N);

// Dilated net for images of the given side: N rounded up to a power of two.
// Zero padding makes running on the smaller image the same as embedding it
// in the N x N canvas and cropping.
RayNetSpec dilated_ray_net_for(int side);

// Output of the layers before the parity head (one channel).
FeatureTensor crossing_field(const RayNetSpec& net, const BinaryImage& img);
FeatureTensor forward(const RayNetSpec& net, const BinaryImage& img);

// Final activation thresholded at 0.5 gives Inside at 0-pixels; curve pixels
// are labelled Curve. Throws std::invalid_argument if the image is larger
// than N in either dimension.
InsidenessMask eval_net(const RayNetSpec& net, const BinaryImage& img);

}  // namespace insideness
