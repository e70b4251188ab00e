#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "insideness/binary_image.hpp"

namespace insideness {

// In-bounds 4-neighbours of p (up, left, right, down; i.e. row-major order).
// Throws std::domain_error if p is outside dims.
std::vector<PixelCoord> neighbors4(PixelCoord p, Dims dims);

// In-bounds 8-neighbours of p in row-major order.
std::vector<PixelCoord> neighbors8(PixelCoord p, Dims dims);

bool is_border(PixelCoord p, Dims dims);

bool are_4_adjacent(PixelCoord a, PixelCoord b);
bool are_8_adjacent(PixelCoord a, PixelCoord b);

class JordanCurve;

enum class ViolationKind {
  NotClosed,     // some 1-pixel has fewer than two 4-neighbours in the figure
  SelfTouching,  // the figure meets itself (a pixel with 3+ 4-neighbours)
  DegreeNotTwo,  // thickness is not unitary (2x2 block of 1-pixels)
  Disconnected,  // 1-pixels outside the traced cycle
  TooShort,      // fewer than 8 pixels on the cycle
  TouchesBorder, // a curve pixel lies on the image border
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::optional<PixelCoord> pixel;
  std::string message;
};

using CurveValidation = std::variant<JordanCurve, Violation>;

// A binary image whose 1-pixels form a digital Jordan curve (closed, 4-connected,
// unit thickness, no self contact, length >= 8, off the border), together with
// the witness cycle s_0 ... s_L where s_0 == s_L.
class JordanCurve {
 public:
  // Throws InvalidCurve with the violation message when img is not a curve.
  static JordanCurve from_image(const BinaryImage& img);

  const BinaryImage& image() const { return image_; }
  // Closed sequence: cycle().front() == cycle().back().
  const std::vector<PixelCoord>& cycle() const { return cycle_; }
  // Number of distinct pixels L.
  int length() const { return static_cast<int>(cycle_.size()) - 1; }
  Dims dims() const { return image_.dims(); }

 private:
  friend CurveValidation validate_jordan_curve(const BinaryImage& img);
  JordanCurve(BinaryImage image, std::vector<PixelCoord> cycle)
      : image_(std::move(image)), cycle_(std::move(cycle)) {}

  BinaryImage image_;
  std::vector<PixelCoord> cycle_;
};

// Checks run in a fixed order with a row-major scan inside each check, so the
// reported violation is deterministic:
//   NotClosed, SelfTouching, DegreeNotTwo, Disconnected, TooShort, TouchesBorder.
CurveValidation validate_jordan_curve(const BinaryImage& img);

inline bool is_valid(const CurveValidation& v) { return std::holds_alternative<JordanCurve>(v); }

// Draws the pixels of a (closed or open) pixel sequence into an empty image.
BinaryImage render(const std::vector<PixelCoord>& pixels, Dims dims);

// Two cycle pixels that are diagonal neighbours but do not share a cycle
// neighbour (i.e. are not the two ends of a turn). Such contacts are legal
// for a Jordan curve but let 8-connected background leak through a corner
// that 4-connected propagation cannot cross.
std::optional<std::pair<PixelCoord, PixelCoord>> diagonal_self_contact(const JordanCurve& curve);

}  // namespace insideness
