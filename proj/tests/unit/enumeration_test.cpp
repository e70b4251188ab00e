#include <gtest/gtest.h>

#include <set>

#include "insideness/digital_geometry.hpp"
#include "insideness/enumeration.hpp"
#include "insideness/errors.hpp"
#include "oracles.hpp"

using namespace insideness;

TEST(GridCycles, KnownCounts) {
  EXPECT_EQ(enumerate_grid_cycles(2, 2).count, 1u);
  EXPECT_EQ(enumerate_grid_cycles(2, 3).count, 3u);
  EXPECT_EQ(enumerate_grid_cycles(3, 3).count, 13u);
  EXPECT_EQ(enumerate_grid_cycles(4, 4).count, 213u);
  EXPECT_EQ(enumerate_grid_cycles(5, 5).count, 9349u);
  EXPECT_EQ(enumerate_grid_cycles(3, 4).count, enumerate_grid_cycles(4, 3).count);
}

TEST(GridCycles, ListedCyclesAreDistinctSimpleCycles) {
  const auto e = enumerate_grid_cycles(4, 4, true);
  ASSERT_EQ(e.cycles.size(), e.count);
  std::set<std::set<PixelCoord>> seen;
  for (const auto& c : e.cycles) {
    ASSERT_GE(c.size(), 5u);
    EXPECT_EQ(c.front(), c.back());
    for (std::size_t i = 0; i + 1 < c.size(); ++i) EXPECT_TRUE(are_4_adjacent(c[i], c[i + 1]));
    std::set<PixelCoord> verts(c.begin(), c.end() - 1);
    EXPECT_EQ(verts.size(), c.size() - 1);
    // Edge midpoints identify a cycle regardless of start and direction.
    std::set<PixelCoord> edges;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) edges.insert({c[i].row + c[i + 1].row, c[i].col + c[i + 1].col});
    EXPECT_TRUE(seen.insert(edges).second);
  }
}

TEST(GridCycles, Errors) {
  EXPECT_THROW(enumerate_grid_cycles(5, 7), SizeTooLarge);
  EXPECT_THROW(enumerate_grid_cycles(1, 5), std::invalid_argument);
}

TEST(Upsample, SmallestCycleIsTheRing) {
  const auto e = enumerate_grid_cycles(2, 2, true);
  const auto img = upsample_cycle(e.cycles.front(), 2, 2);
  EXPECT_EQ(img.height(), 3);
  EXPECT_EQ(img.count_ones(), 8u);
  EXPECT_EQ(pad(img), oracle::ring5());
  EXPECT_THROW(upsample_cycle({{0, 0}, {1, 1}, {0, 0}}, 2, 2), std::invalid_argument);
}

TEST(Upsample, ThreeByThreeCyclesGiveThirteenDistinctCurves) {
  std::set<std::vector<std::uint8_t>> distinct;
  for (const auto& c : enumerate_grid_cycles(3, 3, true).cycles) {
    const auto img = pad(upsample_cycle(c, 3, 3));
    EXPECT_EQ(img.height(), 7);
    EXPECT_TRUE(is_valid(validate_jordan_curve(img)));
    distinct.insert({img.data().begin(), img.data().end()});
  }
  EXPECT_EQ(distinct.size(), 13u);
}

TEST(Pad, SizesAndValidityPreserved) {
  EXPECT_EQ(pad(BinaryImage(3, 3)).height(), 5);
  EXPECT_EQ(pad(BinaryImage(5, 5)).width(), 7);
  EXPECT_EQ(pad(BinaryImage(2, 3), 2).width(), 7);
  for (std::uint32_t s = 0; s < 500; ++s) {
    const auto img = oracle::random_binary(5, 5, 0.5, s);
    const auto padded = pad(img);
    // Padding moves curves off the border but keeps the other conditions.
    const auto a = validate_jordan_curve(img);
    const auto b = validate_jordan_curve(padded);
    if (is_valid(a)) {
      EXPECT_TRUE(is_valid(b));
    }
    EXPECT_EQ(is_valid(validate_jordan_curve(pad(padded))), is_valid(b));
  }
}

TEST(LowerBound, TableValues) {
  EXPECT_EQ(jordan_lower_bound(5), 1u);
  EXPECT_EQ(jordan_lower_bound(7), 13u);
  EXPECT_EQ(jordan_lower_bound(9), 213u);
  EXPECT_EQ(jordan_lower_bound(11), 9349u);
  EXPECT_THROW(jordan_lower_bound(8), std::invalid_argument);
  EXPECT_THROW(jordan_lower_bound(3), std::invalid_argument);
  EXPECT_THROW(jordan_lower_bound(13), SizeTooLarge);
}

TEST(ExactEnumeration, SmallCounts) {
  EXPECT_EQ(enumerate_jordan_curves_exact(4).count, 0u);
  EXPECT_EQ(enumerate_jordan_curves_exact(5).count, 1u);
  EXPECT_EQ(enumerate_jordan_curves_exact(6).count, 15u);
  EXPECT_EQ(enumerate_jordan_curves_exact(7).count, 213u);
  EXPECT_THROW(enumerate_jordan_curves_exact(10), SizeTooLarge);
}

TEST(ExactEnumeration, EveryCurveValidatesAndIsDistinct) {
  for (int n = 5; n <= 7; ++n) {
    const auto e = enumerate_jordan_curves_exact(n);
    ASSERT_EQ(e.curves.size(), e.count);
    std::set<std::vector<std::uint8_t>> distinct;
    for (const auto& img : e.curves) {
      EXPECT_TRUE(is_valid(validate_jordan_curve(img)));
      EXPECT_TRUE(oracle::is_jordan_by_definition(img));
      distinct.insert({img.data().begin(), img.data().end()});
    }
    EXPECT_EQ(distinct.size(), e.count);
  }
}

TEST(ExactEnumeration, ContainsTheConstructedCurves) {
  for (int n : {5, 7, 9}) {
    const int k = (n - 1) / 2;
    std::set<std::vector<std::uint8_t>> exact;
    for (const auto& img : enumerate_jordan_curves_exact(n).curves) exact.insert({img.data().begin(), img.data().end()});
    EXPECT_GE(exact.size(), jordan_lower_bound(n));
    for (const auto& c : enumerate_grid_cycles(k, k, true).cycles) {
      const auto img = pad(upsample_cycle(c, k, k));
      EXPECT_TRUE(exact.count({img.data().begin(), img.data().end()}));
    }
  }
}
