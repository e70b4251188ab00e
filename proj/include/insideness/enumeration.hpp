#pragma once

#include <cstdint>
#include <vector>

#include "insideness/binary_image.hpp"

namespace insideness {

// A simple cycle on a rows x cols vertex grid, closed (front == back).
using GridCycle = std::vector<PixelCoord>;

inline constexpr int kMaxGridVertices = 30;
inline constexpr int kMaxExactImageSide = 9;

struct CycleEnumeration {
  std::uint64_t count = 0;
  std::vector<GridCycle> cycles;  // filled only when requested
};

// Each cycle counted once: it is anchored at its smallest vertex and walked in
// the orientation whose second vertex is smaller than its last.
// Throws SizeTooLarge when rows * cols > kMaxGridVertices and
// std::invalid_argument when rows or cols < 2.
CycleEnumeration enumerate_grid_cycles(int rows, int cols, bool want_cycles = false);

// Vertex (r, c) goes to pixel (2r, 2c); each edge adds its midpoint pixel.
// Result is (2 rows - 1) x (2 cols - 1). Throws std::invalid_argument if the
// input is not a closed 4-adjacent vertex sequence.
BinaryImage upsample_cycle(const GridCycle& cycle, int rows, int cols);

BinaryImage pad(const BinaryImage& img, int margin = 1);

// Number of cycles in the k x k grid, k = (N - 1) / 2: each one upsampled and
// padded is a distinct Jordan curve in an N x N image.
// Throws std::invalid_argument unless N is odd and >= 5, SizeTooLarge if k*k
// exceeds kMaxGridVertices.
std::uint64_t jordan_lower_bound(int N);

struct CurveEnumeration {
  std::uint64_t count = 0;
  std::vector<BinaryImage> curves;  // row-major pixel-set order
};

// Every digital Jordan curve in an N x N image, found by closed-walk search
// over the (N-2) x (N-2) interior with induced-path pruning.
// Throws SizeTooLarge for N > kMaxExactImageSide, std::invalid_argument for N < 1.
CurveEnumeration enumerate_jordan_curves_exact(int N, bool want_curves = true);

}  // namespace insideness
