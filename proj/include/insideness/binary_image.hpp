#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace insideness {

struct PixelCoord {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const PixelCoord&, const PixelCoord&) = default;
};

std::string to_string(PixelCoord p);

struct Dims {
  int height = 0;
  int width = 0;

  bool contains(PixelCoord p) const {
    return p.row >= 0 && p.row < height && p.col >= 0 && p.col < width;
  }
  friend bool operator==(const Dims&, const Dims&) = default;
};

// H x W grid of {0,1}, row-major. 1 marks a curve pixel.
class BinaryImage {
 public:
  BinaryImage() = default;
  BinaryImage(int height, int width);
  // Throws std::invalid_argument if any value is not 0 or 1.
  BinaryImage(int height, int width, std::vector<std::uint8_t> data);

  // Rows of '0'/'1' characters ('.' and '#' are accepted too); all rows must
  // have equal length. Handy for tests and fixtures.
  static BinaryImage from_rows(const std::vector<std::string>& rows);

  int height() const { return height_; }
  int width() const { return width_; }
  Dims dims() const { return {height_, width_}; }
  bool contains(PixelCoord p) const { return dims().contains(p); }

  std::uint8_t operator()(int row, int col) const { return data_[index(row, col)]; }
  std::uint8_t at(PixelCoord p) const { return data_[index(p.row, p.col)]; }
  void set(PixelCoord p, bool on) { data_[index(p.row, p.col)] = on ? 1 : 0; }

  std::span<const std::uint8_t> data() const { return data_; }

  // The 1-pixels in row-major order.
  std::vector<PixelCoord> ones() const;
  std::size_t count_ones() const;

  BinaryImage transposed() const;

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int height_ = 0;
  int width_ = 0;
  std::vector<std::uint8_t> data_;
};

}  // namespace insideness
