#include "insideness/binary_image.hpp"

#include <algorithm>
#include <stdexcept>

namespace insideness {

std::string to_string(PixelCoord p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

BinaryImage::BinaryImage(int height, int width)
    : height_(height), width_(width) {
  if (height < 0 || width < 0) {
    throw std::invalid_argument("BinaryImage: negative dimensions");
  }
  data_.assign(static_cast<std::size_t>(height) * static_cast<std::size_t>(width), 0);
}

BinaryImage::BinaryImage(int height, int width, std::vector<std::uint8_t> data)
    : height_(height), width_(width), data_(std::move(data)) {
  if (height < 0 || width < 0) {
    throw std::invalid_argument("BinaryImage: negative dimensions");
  }
  if (data_.size() != static_cast<std::size_t>(height) * static_cast<std::size_t>(width)) {
    throw std::invalid_argument("BinaryImage: data size does not match dimensions");
  }
  if (std::any_of(data_.begin(), data_.end(), [](std::uint8_t v) { return v > 1; })) {
    throw std::invalid_argument("BinaryImage: values must be 0 or 1");
  }
}

BinaryImage BinaryImage::from_rows(const std::vector<std::string>& rows) {
  const int h = static_cast<int>(rows.size());
  const int w = h == 0 ? 0 : static_cast<int>(rows.front().size());
  std::vector<std::uint8_t> data;
  data.reserve(static_cast<std::size_t>(h) * static_cast<std::size_t>(w));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != w) {
      throw std::invalid_argument("BinaryImage::from_rows: ragged rows");
    }
    for (char ch : row) {
      switch (ch) {
        case '0':
        case '.':
          data.push_back(0);
          break;
        case '1':
        case '#':
          data.push_back(1);
          break;
        default:
          throw std::invalid_argument(std::string("BinaryImage::from_rows: bad character '") +
                                      ch + "'");
      }
    }
  }
  return BinaryImage(h, w, std::move(data));
}

std::vector<PixelCoord> BinaryImage::ones() const {
  std::vector<PixelCoord> out;
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      if ((*this)(r, c)) out.push_back({r, c});
    }
  }
  return out;
}

std::size_t BinaryImage::count_ones() const {
  return static_cast<std::size_t>(std::count(data_.begin(), data_.end(), std::uint8_t{1}));
}

BinaryImage BinaryImage::transposed() const {
  BinaryImage t(width_, height_);
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) t.set({c, r}, (*this)(r, c) != 0);
  }
  return t;
}

}  // namespace insideness
