#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "metrikos/error.hpp"
#include "metrikos/plane_metrics.hpp"
#include "support.hpp"

namespace metrikos {
namespace {

using testing::Rng;

TEST(RealLineDistance, Examples) {
  EXPECT_EQ(real_line_distance(5, 2), 3);
  EXPECT_EQ(real_line_distance(-1, 1), 2);
  EXPECT_EQ(real_line_distance(0.37, 0.37), 0);
}

TEST(RealLineDistance, RejectsNonFinite) {
  EXPECT_THROW(real_line_distance(std::numeric_limits<double>::infinity(), 0), InvalidArgumentError);
  EXPECT_THROW(real_line_distance(0, std::nan("")), InvalidArgumentError);
}

TEST(RealLineDistance, AbsoluteValueTriangleInequality) {
  Rng rng(11);
  for (int k = 0; k < 100000; ++k) {
    const double r = testing::uniform(rng, -1e3, 1e3);
    const double t = testing::uniform(rng, -1e3, 1e3);
    ASSERT_LE(std::abs(r + t), std::abs(r) + std::abs(t));
    if (r * t >= 0) ASSERT_EQ(std::abs(r + t), std::abs(r) + std::abs(t));
  }
  // zero case
  EXPECT_EQ(std::abs(0.0 + -4.5), std::abs(0.0) + std::abs(-4.5));
}

TEST(EuclideanDistance, Examples) {
  EXPECT_NEAR(euclidean_distance({0, 0}, {1, 1}), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(euclidean_distance({0, 0}, {1, 0}), 1);
  EXPECT_EQ(euclidean_distance({0, 0}, {3, 4}), 5);
}

TEST(EuclideanDistance, DimensionMismatch) {
  EXPECT_THROW(euclidean_distance({0, 0}, {0, 0, 0}), DimensionMismatchError);
  EXPECT_THROW(taxicab_distance({0}, {0, 0}), DimensionMismatchError);
  EXPECT_THROW(chebyshev_distance({0}, {0, 0}), DimensionMismatchError);
  EXPECT_THROW(discrete_distance({0}, {0, 0}), DimensionMismatchError);
}

TEST(EuclideanDistance, ExtremeCoordinatesDoNotOverflow) {
  const double d = euclidean_distance({0, 0}, {1e300, 1e300});
  EXPECT_TRUE(std::isfinite(d));
  EXPECT_NEAR(d / 1e300, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(euclidean_distance({0, 0}, {3e-300, 4e-300}) / 1e-300, 5.0, 1e-14);
}

TEST(EuclideanDistance, OneDimensionMatchesRealLine) {
  Rng rng(3);
  for (int k = 0; k < 1000; ++k) {
    const double a = testing::uniform(rng, -50, 50);
    const double b = testing::uniform(rng, -50, 50);
    ASSERT_EQ(euclidean_distance({a}, {b}), real_line_distance(a, b));
  }
}

TEST(EuclideanDistance, PythagoreanDecomposition) {
  // Legs of the right triangle p, q, (q1, p2).
  Rng rng(5);
  for (int k = 0; k < 10000; ++k) {
    const PointN p = testing::random_point(rng, 2);
    const PointN q = testing::random_point(rng, 2);
    const PointN corner{q[0], p[1]};
    const double leg1 = euclidean_distance(p, corner);
    const double leg2 = euclidean_distance(corner, q);
    const double hyp = euclidean_distance(p, q);
    ASSERT_NEAR(hyp * hyp, leg1 * leg1 + leg2 * leg2, 1e-12 * (hyp * hyp) + 1e-300);
  }
}

TEST(TaxicabDistance, Examples) {
  EXPECT_EQ(taxicab_distance({0, 0}, {1, 1}), 2);
  EXPECT_EQ(taxicab_distance({0, 0}, {1, 0}), 1);
  EXPECT_EQ(taxicab_distance({1, 2}, {1, 2}), 0);
  EXPECT_EQ(taxicab_distance({0, 0}, {3, 4}), 7);
}

TEST(ChebyshevDistance, Examples) {
  EXPECT_EQ(chebyshev_distance({0, 0}, {1, 1}), 1);
  EXPECT_EQ(chebyshev_distance({0, 0}, {3, 4}), 4);
  EXPECT_EQ(chebyshev_distance({0, 0}, {1, 0}), 1);
}

TEST(ChebyshevDistance, CaseSplit) {
  Rng rng(8);
  for (int k = 0; k < 1000; ++k) {
    const PointN p = testing::random_point(rng, 2);
    const PointN q = testing::random_point(rng, 2);
    const double a = std::abs(p[0] - q[0]);
    const double b = std::abs(p[1] - q[1]);
    ASSERT_EQ(chebyshev_distance(p, q), a >= b ? a : b);
  }
}

TEST(DiscreteDistance, Examples) {
  EXPECT_EQ(discrete_distance({0, 0}, {0, 0}), 0);
  EXPECT_EQ(discrete_distance({0, 0}, {1e-300, 0}), 1);
  EXPECT_EQ(discrete_distance({1, 2}, {2, 1}), 1);
}

TEST(PlaneMetrics, NormOrdering) {
  Rng rng(21);
  for (std::size_t dim : {2u, 3u}) {
    for (int k = 0; k < 100000; ++k) {
      const PointN p = testing::random_point(rng, dim);
      const PointN q = testing::random_point(rng, dim);
      const double cheb = chebyshev_distance(p, q);
      const double euc = euclidean_distance(p, q);
      const double taxi = taxicab_distance(p, q);
      ASSERT_LE(cheb, euc);
      ASSERT_LE(euc, taxi);
      ASSERT_LE(taxi, static_cast<double>(dim) * cheb);
    }
  }
}

}  // namespace
}  // namespace metrikos
