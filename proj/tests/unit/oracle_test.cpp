#include <gtest/gtest.h>

#include "insideness/enumeration.hpp"
#include "insideness/errors.hpp"
#include "insideness/generators.hpp"
#include "insideness/oracle.hpp"
#include "oracles.hpp"

using namespace insideness;

namespace {

std::vector<JordanCurve> sample_curves() {
  std::vector<JordanCurve> out;
  for (std::uint64_t s = 0; s < 25; ++s) {
    out.push_back(gen_polar(s, 24));
    out.push_back(gen_spiral(s));
    out.push_back(gen_digs(s));
    out.push_back(gen_random_walk(s, 24));
  }
  return out;
}

}  // namespace

TEST(FloodFill, RingHasSingleInsidePixel) {
  const auto m = flood_fill_outside(oracle::ring5());
  EXPECT_EQ(m.pixels_with(Label::Inside), (std::vector<PixelCoord>{{2, 2}}));
  EXPECT_EQ(m.pixels_with(Label::Curve).size(), 8u);
  EXPECT_EQ(m.pixels_with(Label::Outside).size(), 16u);
}

TEST(FloodFill, AllZeroIsOutside) {
  const auto m = flood_fill_outside(BinaryImage(4, 7));
  EXPECT_EQ(m.pixels_with(Label::Outside).size(), 28u);
}

TEST(FloodFill, MatchesUnionFindLabellingOnArbitraryImages) {
  for (std::uint32_t s = 0; s < 300; ++s) {
    const auto img = oracle::random_binary(9 + s % 5, 7 + s % 3, 0.2 + 0.05 * (s % 8), s);
    EXPECT_EQ(flood_fill_outside(img), oracle::union_find_outside(img)) << "seed " << s;
  }
}

TEST(FloodFill, PartitionAndOutsideBorder) {
  for (const auto& c : sample_curves()) {
    const auto m = flood_fill_outside(c.image());
    const Dims d = c.dims();
    for (int r = 0; r < d.height; ++r) {
      for (int col = 0; col < d.width; ++col) {
        EXPECT_EQ(m(r, col) == Label::Curve, c.image()(r, col) == 1);
        if (is_border({r, col}, d)) {
          EXPECT_EQ(m(r, col), Label::Outside);
        }
      }
    }
    EXPECT_FALSE(m.pixels_with(Label::Inside).empty());
  }
}

TEST(Crossings, RingExampleAndZeroImage) {
  const auto f = horizontal_crossings(oracle::ring5());
  EXPECT_EQ(f(2, 2), 1);
  const auto z = horizontal_crossings(BinaryImage(5, 5));
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) EXPECT_EQ(z(r, c), 0);
  }
}

TEST(Crossings, MatchDirectSumEverywhere) {
  for (std::uint32_t s = 0; s < 100; ++s) {
    const auto img = oracle::random_binary(8, 11, 0.5, s);
    const auto f = horizontal_crossings(img);
    for (int r = 0; r < img.height(); ++r) {
      for (int c = 0; c < img.width(); ++c) {
        EXPECT_EQ(f(r, c), oracle::crossings_at(img, r, c));
        EXPECT_LE(f(r, c), img.width());
      }
    }
  }
}

TEST(RayParity, RingAndInvalidInput) {
  EXPECT_EQ(ray_parity_insideness(oracle::ring5()).pixels_with(Label::Inside),
            (std::vector<PixelCoord>{{2, 2}}));
  auto blobs = BinaryImage::from_rows({"000000000", "011101110", "010101010", "011101110", "000000000"});
  EXPECT_THROW(ray_parity_insideness(blobs), InvalidCurve);
}

TEST(RayParity, EqualsFloodFillOnGeneratedCurves) {
  for (const auto& c : sample_curves()) {
    const auto truth = flood_fill_outside(c.image());
    EXPECT_EQ(ray_parity_insideness(c.image()), truth);
    EXPECT_EQ(ray_parity_insideness_vertical(c.image()), truth);
  }
}

TEST(RayParity, EqualsFloodFillOnAllSmallCurves) {
  for (int n = 5; n <= 7; ++n) {
    for (const auto& img : enumerate_jordan_curves_exact(n).curves) {
      EXPECT_EQ(ray_parity_insideness(img), flood_fill_outside(img));
    }
  }
}

TEST(RayParity, EvenCountsLeftOfCurvesAreOutside) {
  // Pixels left of everything on their row with crossings present: the count
  // is even and the pixel is outside.
  int checked = 0;
  for (const auto& c : sample_curves()) {
    const auto f = horizontal_crossings(c.image());
    for (int r = 0; r < c.dims().height; ++r) {
      if (f(r, 0) > 0) {
        EXPECT_EQ(f(r, 0) % 2, 0);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Accuracy, Semantics) {
  const auto truth = flood_fill_outside(oracle::ring5());
  auto a = per_image_accuracy(truth, truth, false);
  EXPECT_EQ(a.per_pixel, 1.0);
  EXPECT_EQ(a.per_image, 1);
  EXPECT_EQ(a.compared, 17u);

  auto one_off = truth;
  one_off.set({0, 0}, Label::Inside);
  a = per_image_accuracy(one_off, truth, false);
  EXPECT_EQ(a.per_image, 0);
  EXPECT_EQ(a.mismatched, 1u);
  EXPECT_DOUBLE_EQ(a.per_pixel, 16.0 / 17.0);

  auto curve_off = truth;
  curve_off.set({1, 1}, Label::Outside);
  a = per_image_accuracy(curve_off, truth, false);
  EXPECT_EQ(a.per_image, 1);
  EXPECT_EQ(per_image_accuracy(curve_off, truth, true).per_image, 0);

  EXPECT_THROW(per_image_accuracy(InsidenessMask(4, 4), truth, false), std::invalid_argument);
}
