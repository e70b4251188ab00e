#include "insideness/digital_geometry.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

#include "insideness/errors.hpp"

namespace insideness {
namespace {

constexpr std::array<PixelCoord, 4> kOffsets4{{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}};

void require_in_bounds(PixelCoord p, Dims dims) {
  if (!dims.contains(p)) {
    throw std::domain_error("pixel " + to_string(p) + " outside " + std::to_string(dims.height) +
                            "x" + std::to_string(dims.width) + " image");
  }
}

int degree4(const BinaryImage& img, PixelCoord p) {
  int n = 0;
  for (auto off : kOffsets4) {
    PixelCoord q{p.row + off.row, p.col + off.col};
    if (img.contains(q) && img.at(q)) ++n;
  }
  return n;
}

bool in_solid_2x2(const BinaryImage& img, PixelCoord p) {
  for (int dr = -1; dr <= 0; ++dr) {
    for (int dc = -1; dc <= 0; ++dc) {
      bool all = true;
      for (int r = 0; r < 2 && all; ++r) {
        for (int c = 0; c < 2 && all; ++c) {
          PixelCoord q{p.row + dr + r, p.col + dc + c};
          all = img.contains(q) && img.at(q);
        }
      }
      if (all) return true;
    }
  }
  return false;
}

Violation make_violation(ViolationKind kind, std::optional<PixelCoord> p, std::string detail) {
  std::string msg = to_string(kind);
  if (p) msg += " at " + to_string(*p);
  if (!detail.empty()) msg += ": " + detail;
  return Violation{kind, p, std::move(msg)};
}

}  // namespace

std::vector<PixelCoord> neighbors4(PixelCoord p, Dims dims) {
  require_in_bounds(p, dims);
  std::vector<PixelCoord> out;
  for (auto off : kOffsets4) {
    PixelCoord q{p.row + off.row, p.col + off.col};
    if (dims.contains(q)) out.push_back(q);
  }
  return out;
}

std::vector<PixelCoord> neighbors8(PixelCoord p, Dims dims) {
  require_in_bounds(p, dims);
  std::vector<PixelCoord> out;
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      PixelCoord q{p.row + dr, p.col + dc};
      if (dims.contains(q)) out.push_back(q);
    }
  }
  return out;
}

bool is_border(PixelCoord p, Dims dims) {
  require_in_bounds(p, dims);
  return p.row == 0 || p.col == 0 || p.row == dims.height - 1 || p.col == dims.width - 1;
}

bool are_4_adjacent(PixelCoord a, PixelCoord b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

bool are_8_adjacent(PixelCoord a, PixelCoord b) {
  const int dr = std::abs(a.row - b.row);
  const int dc = std::abs(a.col - b.col);
  return (dr | dc) != 0 && dr <= 1 && dc <= 1;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotClosed: return "NotClosed";
    case ViolationKind::SelfTouching: return "SelfTouching";
    case ViolationKind::DegreeNotTwo: return "DegreeNotTwo";
    case ViolationKind::Disconnected: return "Disconnected";
    case ViolationKind::TooShort: return "TooShort";
    case ViolationKind::TouchesBorder: return "TouchesBorder";
  }
  return "Unknown";
}

JordanCurve JordanCurve::from_image(const BinaryImage& img) {
  auto result = validate_jordan_curve(img);
  if (auto* v = std::get_if<Violation>(&result)) throw InvalidCurve(v->message);
  return std::get<JordanCurve>(std::move(result));
}

CurveValidation validate_jordan_curve(const BinaryImage& img) {
  const auto ones = img.ones();
  if (ones.empty()) {
    return make_violation(ViolationKind::TooShort, std::nullopt, "image has no 1-pixels");
  }

  for (auto p : ones) {
    if (degree4(img, p) < 2) {
      return make_violation(ViolationKind::NotClosed, p, "curve ends here");
    }
  }
  for (auto p : ones) {
    if (degree4(img, p) > 2 && !in_solid_2x2(img, p)) {
      return make_violation(ViolationKind::SelfTouching, p,
                            std::to_string(degree4(img, p)) + " curve neighbours");
    }
  }
  for (auto p : ones) {
    if (degree4(img, p) > 2 || in_solid_2x2(img, p)) {
      return make_violation(ViolationKind::DegreeNotTwo, p, "curve is thicker than one pixel");
    }
  }

  // Every 1-pixel has exactly two 4-neighbours in the figure, so the component
  // of the first pixel is a simple cycle; trace it.
  std::vector<PixelCoord> cycle{ones.front()};
  PixelCoord prev = ones.front();
  PixelCoord cur = neighbors4(ones.front(), img.dims()).front();
  for (auto q : neighbors4(ones.front(), img.dims())) {
    if (img.at(q)) {
      cur = q;
      break;
    }
  }
  while (cur != ones.front()) {
    cycle.push_back(cur);
    PixelCoord next = cur;
    for (auto q : neighbors4(cur, img.dims())) {
      if (img.at(q) && q != prev) {
        next = q;
        break;
      }
    }
    prev = cur;
    cur = next;
  }
  cycle.push_back(ones.front());

  const int length = static_cast<int>(cycle.size()) - 1;
  if (static_cast<std::size_t>(length) != ones.size()) {
    BinaryImage traced = render(cycle, img.dims());
    for (auto p : ones) {
      if (!traced.at(p)) {
        return make_violation(ViolationKind::Disconnected, p,
                              "1-pixel not on the cycle through " + to_string(ones.front()));
      }
    }
  }
  if (length < 8) {
    return make_violation(ViolationKind::TooShort, ones.front(),
                          "cycle length " + std::to_string(length) + " < 8");
  }
  for (auto p : ones) {
    if (is_border(p, img.dims())) {
      return make_violation(ViolationKind::TouchesBorder, p, "");
    }
  }
  return JordanCurve(img, std::move(cycle));
}

BinaryImage render(const std::vector<PixelCoord>& pixels, Dims dims) {
  BinaryImage img(dims.height, dims.width);
  for (auto p : pixels) {
    require_in_bounds(p, dims);
    img.set(p, true);
  }
  return img;
}

std::optional<std::pair<PixelCoord, PixelCoord>> diagonal_self_contact(const JordanCurve& curve) {
  const auto& img = curve.image();
  for (auto p : img.ones()) {
    for (int dc : {-1, 1}) {
      PixelCoord q{p.row + 1, p.col + dc};
      if (!img.contains(q) || !img.at(q)) continue;
      // p and q are diagonal; they are consecutive-but-one iff one of the two
      // shared 4-neighbours is on the curve.
      const bool turn = img.at({p.row, q.col}) || img.at({q.row, p.col});
      if (!turn) return std::make_pair(p, q);
    }
  }
  return std::nullopt;
}

}  // namespace insideness
