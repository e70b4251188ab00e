#include "insideness/oracle.hpp"

#include <deque>
#include <stdexcept>

#include "insideness/digital_geometry.hpp"
#include "insideness/errors.hpp"

namespace insideness {

InsidenessMask::InsidenessMask(int height, int width, Label fill)
    : height_(height), width_(width),
      labels_(static_cast<std::size_t>(height) * static_cast<std::size_t>(width), fill) {}

InsidenessMask::InsidenessMask(int height, int width, std::vector<Label> labels)
    : height_(height), width_(width), labels_(std::move(labels)) {
  if (labels_.size() != static_cast<std::size_t>(height) * static_cast<std::size_t>(width)) {
    throw std::invalid_argument("InsidenessMask: label count does not match dimensions");
  }
}

std::vector<PixelCoord> InsidenessMask::pixels_with(Label l) const {
  std::vector<PixelCoord> out;
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      if (at({r, c}) == l) out.push_back({r, c});
    }
  }
  return out;
}

InsidenessMask InsidenessMask::transposed() const {
  InsidenessMask t(width_, height_);
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) t.set({c, r}, at({r, c}));
  }
  return t;
}

InsidenessMask flood_fill_outside(const BinaryImage& img) {
  const Dims dims = img.dims();
  InsidenessMask mask(dims.height, dims.width, Label::Inside);
  std::vector<std::uint8_t> seen(img.data().size(), 0);
  std::deque<PixelCoord> work;
  auto idx = [&](PixelCoord p) {
    return static_cast<std::size_t>(p.row) * static_cast<std::size_t>(dims.width) +
           static_cast<std::size_t>(p.col);
  };

  for (int r = 0; r < dims.height; ++r) {
    for (int c = 0; c < dims.width; ++c) {
      PixelCoord p{r, c};
      if (img.at(p)) {
        mask.set(p, Label::Curve);
      } else if (is_border(p, dims)) {
        seen[idx(p)] = 1;
        work.push_back(p);
      }
    }
  }
  while (!work.empty()) {
    PixelCoord p = work.front();
    work.pop_front();
    mask.set(p, Label::Outside);
    for (auto q : neighbors8(p, dims)) {
      if (!img.at(q) && !seen[idx(q)]) {
        seen[idx(q)] = 1;
        work.push_back(q);
      }
    }
  }
  return mask;
}

CrossingsField horizontal_crossings(const BinaryImage& img) {
  const int h = img.height();
  const int w = img.width();
  CrossingsField field(h, w);
  for (int r = 0; r < h; ++r) {
    int suffix = 0;
    for (int c = w - 1; c >= 0; --c) {
      if (r + 1 < h && img(r, c) && img(r + 1, c)) ++suffix;
      field(r, c) = suffix;
    }
  }
  return field;
}

InsidenessMask mask_from_inside_map(const BinaryImage& img, std::span<const std::uint8_t> inside) {
  if (inside.size() != img.data().size()) {
    throw std::invalid_argument("mask_from_inside_map: size mismatch");
  }
  InsidenessMask mask(img.height(), img.width());
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      const std::size_t i = static_cast<std::size_t>(r) * static_cast<std::size_t>(img.width()) +
                            static_cast<std::size_t>(c);
      if (img(r, c)) {
        mask.set({r, c}, Label::Curve);
      } else {
        mask.set({r, c}, inside[i] ? Label::Inside : Label::Outside);
      }
    }
  }
  return mask;
}

InsidenessMask ray_parity_insideness(const BinaryImage& img) {
  JordanCurve::from_image(img);
  const auto field = horizontal_crossings(img);
  std::vector<std::uint8_t> inside(img.data().size(), 0);
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      inside[static_cast<std::size_t>(r) * static_cast<std::size_t>(img.width()) +
             static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(field(r, c) % 2);
    }
  }
  return mask_from_inside_map(img, inside);
}

InsidenessMask ray_parity_insideness_vertical(const BinaryImage& img) {
  return ray_parity_insideness(img.transposed()).transposed();
}

Accuracy per_image_accuracy(const InsidenessMask& pred, const InsidenessMask& truth,
                            bool include_curve) {
  if (pred.dims() != truth.dims()) {
    throw std::invalid_argument("per_image_accuracy: dimension mismatch");
  }
  Accuracy acc;
  const auto p = pred.labels();
  const auto t = truth.labels();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!include_curve && t[i] == Label::Curve) continue;
    ++acc.compared;
    if (p[i] != t[i]) ++acc.mismatched;
  }
  acc.per_pixel = acc.compared == 0
                      ? 1.0
                      : static_cast<double>(acc.compared - acc.mismatched) /
                            static_cast<double>(acc.compared);
  acc.per_image = acc.mismatched == 0 ? 1 : 0;
  return acc;
}

}  // namespace insideness
