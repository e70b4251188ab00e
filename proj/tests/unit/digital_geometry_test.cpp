#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "insideness/digital_geometry.hpp"
#include "insideness/enumeration.hpp"
#include "insideness/errors.hpp"
#include "insideness/generators.hpp"
#include "oracles.hpp"

using namespace insideness;

namespace {

std::set<PixelCoord> as_set(const std::vector<PixelCoord>& v) { return {v.begin(), v.end()}; }

ViolationKind violation_of(const BinaryImage& img) {
  auto v = validate_jordan_curve(img);
  EXPECT_FALSE(is_valid(v));
  return std::get<Violation>(v).kind;
}

}  // namespace

TEST(Neighbors, FourNeighbourhoodCornerInteriorEdge) {
  EXPECT_EQ(as_set(neighbors4({0, 0}, {3, 3})), (std::set<PixelCoord>{{0, 1}, {1, 0}}));
  EXPECT_EQ(as_set(neighbors4({1, 1}, {3, 3})), (std::set<PixelCoord>{{0, 1}, {1, 0}, {1, 2}, {2, 1}}));
  EXPECT_EQ(as_set(neighbors4({2, 1}, {3, 3})), (std::set<PixelCoord>{{1, 1}, {2, 0}, {2, 2}}));
}

TEST(Neighbors, EightNeighbourhood) {
  EXPECT_EQ(as_set(neighbors8({0, 0}, {3, 3})), (std::set<PixelCoord>{{0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(neighbors8({1, 1}, {3, 3}).size(), 8u);
  EXPECT_EQ(as_set(neighbors8({0, 1}, {2, 3})),
            (std::set<PixelCoord>{{0, 0}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}));
}

TEST(Neighbors, OutOfBoundsIsDomainError) {
  EXPECT_THROW(neighbors4({3, 0}, {3, 3}), std::domain_error);
  EXPECT_THROW(neighbors8({0, -1}, {3, 3}), std::domain_error);
  EXPECT_THROW(is_border({5, 5}, {5, 5}), std::domain_error);
}

TEST(Neighbors, FourSubsetOfEightEverywhere) {
  const Dims d{4, 6};
  for (int r = 0; r < d.height; ++r) {
    for (int c = 0; c < d.width; ++c) {
      auto n8 = as_set(neighbors8({r, c}, d));
      for (auto q : neighbors4({r, c}, d)) {
        EXPECT_TRUE(n8.count(q));
        EXPECT_TRUE(are_4_adjacent({r, c}, q));
      }
      for (auto q : n8) EXPECT_TRUE(are_8_adjacent({r, c}, q));
    }
  }
}

TEST(Border, Examples) {
  EXPECT_TRUE(is_border({0, 3}, {5, 5}));
  EXPECT_FALSE(is_border({2, 2}, {5, 5}));
  EXPECT_TRUE(is_border({4, 0}, {5, 5}));
}

TEST(Validate, SmallestRingIsCurveOfLengthEight) {
  auto v = validate_jordan_curve(oracle::ring5());
  ASSERT_TRUE(is_valid(v));
  const auto& c = std::get<JordanCurve>(v);
  EXPECT_EQ(c.length(), 8);
  EXPECT_EQ(c.cycle().front(), c.cycle().back());
}

TEST(Validate, SolidTwoByTwoBlockIsDegreeNotTwo) {
  auto img = BinaryImage::from_rows({"00000", "01100", "01100", "00000", "00000"});
  EXPECT_EQ(violation_of(img), ViolationKind::DegreeNotTwo);
}

TEST(Validate, NonJordanGridCyclesDrawnAsPixelsAreRejected) {
  // The domino (both orientations) and L-tromino cycles of the 3x3 vertex
  // grid, drawn directly as 3x3 pixel patterns and padded off the border.
  const std::vector<std::vector<std::string>> patterns{
      {"111", "111", "000"}, {"110", "110", "110"}, {"111", "111", "110"}};
  for (const auto& rows : patterns) {
    const auto img = pad(BinaryImage::from_rows(rows));
    EXPECT_FALSE(is_valid(validate_jordan_curve(img)));
    EXPECT_FALSE(oracle::is_jordan_by_definition(img));
  }
}

TEST(Validate, ViolationKinds) {
  EXPECT_EQ(violation_of(BinaryImage(5, 5)), ViolationKind::TooShort);
  EXPECT_EQ(violation_of(BinaryImage::from_rows({"00000", "01110", "00000"})), ViolationKind::NotClosed);
  // A ring with a spur: the spur tip has a single curve neighbour.
  EXPECT_EQ(violation_of(BinaryImage::from_rows(
                {"0000000", "0111000", "0101000", "0111110", "0000000"})),
            ViolationKind::NotClosed);
  // Two rings sharing a side: junctions of degree 3.
  EXPECT_EQ(violation_of(BinaryImage::from_rows(
                {"0000000", "0111110", "0101010", "0111110", "0000000"})),
            ViolationKind::SelfTouching);
  EXPECT_EQ(violation_of(BinaryImage::from_rows(
                {"000000000", "011101110", "010101010", "011101110", "000000000"})),
            ViolationKind::Disconnected);
  EXPECT_EQ(violation_of(oracle::rect_ring(5, 5, 0, 0, 2, 2)), ViolationKind::TouchesBorder);
}

TEST(Validate, FromImageThrowsInvalidCurve) {
  EXPECT_THROW(JordanCurve::from_image(BinaryImage(4, 4)), InvalidCurve);
}

TEST(Validate, RectangularImagesAllowed) {
  auto v = validate_jordan_curve(oracle::rect_ring(5, 9, 1, 1, 3, 7));
  ASSERT_TRUE(is_valid(v));
  EXPECT_EQ(std::get<JordanCurve>(v).length(), 16);
}

TEST(Validate, WitnessCycleRoundTripsOnGeneratedCurves) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto curve = gen_polar(s, 24);
    const auto& cyc = curve.cycle();
    EXPECT_EQ(render(cyc, curve.dims()), curve.image());
    for (std::size_t i = 0; i + 1 < cyc.size(); ++i) EXPECT_TRUE(are_4_adjacent(cyc[i], cyc[i + 1]));
    std::set<PixelCoord> distinct(cyc.begin(), cyc.end() - 1);
    EXPECT_EQ(distinct.size(), cyc.size() - 1);
  }
}

TEST(Validate, AgreesWithDefinitionUnderSinglePixelFlips) {
  // Every single-pixel flip of every 6x6 curve; the definition oracle decides.
  const auto curves = enumerate_jordan_curves_exact(6).curves;
  int valid_flips = 0;
  for (const auto& base : curves) {
    for (int r = 0; r < 6; ++r) {
      for (int c = 0; c < 6; ++c) {
        BinaryImage img = base;
        img.set({r, c}, !img(r, c));
        const bool ok = is_valid(validate_jordan_curve(img));
        EXPECT_EQ(ok, oracle::is_jordan_by_definition(img));
        valid_flips += ok;
      }
    }
  }
  EXPECT_EQ(valid_flips, 0);  // a single flip always breaks a curve
}

TEST(Validate, AgreesWithDefinitionOnRandomImages) {
  for (std::uint32_t s = 0; s < 2000; ++s) {
    const auto img = oracle::random_binary(6, 6, 0.4, s);
    EXPECT_EQ(is_valid(validate_jordan_curve(img)), oracle::is_jordan_by_definition(img));
  }
}

TEST(DiagonalContact, NoneOnRectangles) {
  EXPECT_FALSE(diagonal_self_contact(JordanCurve::from_image(oracle::ring5())));
  EXPECT_FALSE(diagonal_self_contact(JordanCurve::from_image(oracle::rect_ring(9, 9, 2, 1, 6, 7))));
}

TEST(DiagonalContact, PinchedCurveReportsThePair) {
  const auto img = BinaryImage::from_rows({
      "00000000",
      "01110000",
      "01010000",
      "01011110",
      "01100010",
      "00111110",
      "00000000",
  });
  auto c = JordanCurve::from_image(img);
  auto pair = diagonal_self_contact(c);
  ASSERT_TRUE(pair);
  EXPECT_TRUE(are_8_adjacent(pair->first, pair->second));
  EXPECT_FALSE(are_4_adjacent(pair->first, pair->second));
}
