#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "insideness/binary_image.hpp"

namespace insideness {

// Numeric values double as the on-disk mask encoding.
enum class Label : std::uint8_t { Outside = 0, Inside = 1, Curve = 2 };

class InsidenessMask {
 public:
  InsidenessMask() = default;
  InsidenessMask(int height, int width, Label fill = Label::Outside);
  InsidenessMask(int height, int width, std::vector<Label> labels);

  int height() const { return height_; }
  int width() const { return width_; }
  Dims dims() const { return {height_, width_}; }

  Label at(PixelCoord p) const { return labels_[index(p)]; }
  Label operator()(int row, int col) const { return at({row, col}); }
  void set(PixelCoord p, Label l) { labels_[index(p)] = l; }
  std::span<const Label> labels() const { return labels_; }

  std::vector<PixelCoord> pixels_with(Label l) const;
  InsidenessMask transposed() const;

  friend bool operator==(const InsidenessMask&, const InsidenessMask&) = default;

 private:
  std::size_t index(PixelCoord p) const {
    return static_cast<std::size_t>(p.row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(p.col);
  }

  int height_ = 0;
  int width_ = 0;
  std::vector<Label> labels_;
};

// Per-pixel count of horizontal crossings: the inner product of row i and row
// i+1 restricted to columns >= j (row H reads as zeros).
class CrossingsField {
 public:
  CrossingsField(int height, int width) : height_(height), width_(width),
      counts_(static_cast<std::size_t>(height) * static_cast<std::size_t>(width), 0) {}

  int height() const { return height_; }
  int width() const { return width_; }
  int operator()(int row, int col) const { return counts_[index(row, col)]; }
  int& operator()(int row, int col) { return counts_[index(row, col)]; }

  friend bool operator==(const CrossingsField&, const CrossingsField&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int height_;
  int width_;
  std::vector<int> counts_;
};

// Ground truth by definition: background pixels with an 8-connected path of
// background pixels to the image border are Outside, the remaining background
// pixels are Inside. Works on any binary image.
InsidenessMask flood_fill_outside(const BinaryImage& img);

CrossingsField horizontal_crossings(const BinaryImage& img);

// Inside iff the horizontal crossing count is odd. Throws InvalidCurve unless
// img is a digital Jordan curve.
InsidenessMask ray_parity_insideness(const BinaryImage& img);

// Same characterisation with vertical rays (crossings computed on the transpose).
InsidenessMask ray_parity_insideness_vertical(const BinaryImage& img);

// Curve where the image is 1; Inside/Outside from a per-pixel "inside" map.
InsidenessMask mask_from_inside_map(const BinaryImage& img, std::span<const std::uint8_t> inside);

struct Accuracy {
  double per_pixel = 0.0;     // fraction of compared pixels that match
  int per_image = 0;          // 1 iff every compared pixel matches
  std::size_t compared = 0;
  std::size_t mismatched = 0;
};

// With include_curve == false, pixels labelled Curve in truth are skipped.
// Throws std::invalid_argument on dimension mismatch.
Accuracy per_image_accuracy(const InsidenessMask& pred, const InsidenessMask& truth,
                            bool include_curve);

}  // namespace insideness
