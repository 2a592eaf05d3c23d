// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "heiscf/lab/enumeration.hpp"
#include "heiscf/oracle/naive_enumeration.hpp"
#include "heiscf/siegel.hpp"

namespace heiscf {
namespace {

GaugeRegion kd_box() { return kprime_region(0.0); }

TEST(Enumeration, UnitDenominatorGivesIntegerPoints) {
  const auto region = kprime_region(0.5);
  const auto got = enumerate_rationals_qnorm(1, region, true);
  const auto naive = oracle::naive_enumerate_qnorm(1, region, true);
  EXPECT_EQ(got.points, naive.points);
  ASSERT_FALSE(got.points.empty());
  for (const auto& t : got.points) {
    EXPECT_EQ(t.qa, 1);
    EXPECT_EQ(t.qb, 0);
    // (1 : r : p) is the integer point (r, p).
    EXPECT_EQ(2 * t.pa, t.ra * t.ra + t.rb * t.rb);
    EXPECT_TRUE(is_integer_point(GaussInt(t.ra, t.rb), GaussInt(t.pa, t.pb)));
  }
  // Integer points with |v|^2 <= bound, counted directly.
  const double bound = region.bound.convert_to<double>();
  std::size_t direct = 0;
  for (long a = -4; a <= 4; ++a) {
    for (long b = -4; b <= 4; ++b) {
      if ((a + b) % 2 != 0) continue;
      const long re = (a * a + b * b) / 2;
      for (long c = -4; c <= 4; ++c) direct += (re * re + c * c) <= bound;
    }
  }
  EXPECT_EQ(got.points.size(), direct);
}

TEST(Enumeration, NoPointsWithoutRepresentations) {
  for (std::int64_t m : {3, 6, 7, 11, 12, 19, 21}) {
    EXPECT_TRUE(enumerate_rationals_qnorm(m, kd_box(), false).points.empty()) << m;
  }
}

TEST(Enumeration, StructuredMatchesNaive) {
  for (const double delta : {0.0, 1.0}) {
    const auto region = kprime_region(delta);
    for (std::int64_t m = 1; m <= 200; ++m) {
      for (const bool lowest : {false, true}) {
        const auto a = enumerate_rationals_qnorm(m, region, lowest);
        const auto b = oracle::naive_enumerate_qnorm(m, region, lowest);
        ASSERT_EQ(a.points, b.points) << "m=" << m << " lowest=" << lowest << " delta=" << delta;
      }
    }
  }
}

TEST(Enumeration, PointsAreOnTheSurfaceAndCanonical) {
  const auto region = kprime_region(1.0);
  for (std::int64_t m : {2, 25, 50, 65, 100}) {
    for (const auto& t : enumerate_rationals_qnorm(m, region, false).points) {
      const IntTriple tr = t.to_triple();
      ASSERT_TRUE(on_siegel_surface(tr));
      ASSERT_EQ(tr.q, canonical_associate(tr.q));
      ASSERT_EQ(norm(tr.q), m);
      ASSERT_EQ(t.lowest, gcd(gcd(tr.q, tr.r), tr.p).is_unit());
      const Rational gauge4 = Rational(norm(tr.p), norm(tr.q));
      ASSERT_LE(gauge4, region.bound);
    }
  }
}

TEST(Enumeration, LowestTermsIsSubset) {
  const auto region = kprime_region(1.0);
  for (std::int64_t m = 1; m <= 60; ++m) {
    const auto all = enumerate_rationals_qnorm(m, region, false);
    const auto low = enumerate_rationals_qnorm(m, region, true);
    std::size_t flagged = 0;
    for (const auto& t : all.points) flagged += t.lowest;
    EXPECT_EQ(flagged, low.points.size());
  }
}

TEST(Enumeration, CoprimeTriple) {
  EXPECT_TRUE(coprime_triple(1, 0, 0, 0, 0, 0));
  EXPECT_FALSE(coprime_triple(2, 0, 2, 2, 4, 0));
  EXPECT_FALSE(coprime_triple(1, 1, 2, 0, 0, 2));
  EXPECT_TRUE(coprime_triple(2, 1, 1, 1, 1, 0));
}

TEST(Enumeration, RegionRounding) {
  const auto r = kprime_region(0.0);
  EXPECT_GE(r.bound, Rational(1, 2));
  EXPECT_LT(r.bound, Rational(1, 2) + Rational(1, 1024));
  const double delta = 1.0;
  const double expect = std::pow(std::pow(2.0, -0.25) + delta, 4);
  EXPECT_GE(kprime_region(delta).bound.convert_to<double>(), expect);
  EXPECT_THROW(enumerate_rationals_qnorm(0, r, true), std::invalid_argument);
}

TEST(GrowthFit, RecoversSyntheticExponent) {
  std::vector<std::int64_t> ms;
  std::vector<std::uint64_t> counts;
  for (std::int64_t k = 2; k <= 14; k += 2) {
    ms.push_back(k * k);
    counts.push_back(static_cast<std::uint64_t>(std::llround(3.0 * std::pow(k * k, 1.5))));
  }
  const auto f = fit_growth(ms, counts);
  EXPECT_NEAR(f.alpha, 1.5, 1e-3);
  EXPECT_NEAR(f.c_fitted, 3.0, 1e-2);
  EXPECT_LT(f.cv_three_halves, 1e-3);
  EXPECT_NEAR(f.c_three_halves, 3.0, 1e-3);
  EXPECT_THROW(fit_growth({4}, {1}), std::invalid_argument);
}

}  // namespace
}  // namespace heiscf
