// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "heiscf/lab/khinchin.hpp"
#include "heiscf/lab/random.hpp"

namespace heiscf {
namespace {

std::uint64_t naive_r2(std::uint64_t n) {
  std::uint64_t c = 0;
  const auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))) + 1;
  for (std::int64_t a = -s; a <= s; ++a) {
    for (std::int64_t b = -s; b <= s; ++b) c += static_cast<std::uint64_t>(a * a + b * b) == n;
  }
  return c;
}

double naive_term(std::uint64_t m, double C, double eps) {
  const double phi4 = std::pow(C, 4) * std::pow(static_cast<double>(m), -2 - 2 * eps);
  double t = 0;
  const auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(m))));
  if (root * root == m) t += naive_r2(m) * std::pow(static_cast<double>(m), 1.5);
  double inner = 0;
  for (std::uint64_t g = 1; g * g <= m; ++g) {
    if (m % (g * g) == 0) inner += static_cast<double>(g) * naive_r2(m / (g * g));
  }
  t += static_cast<double>(m) * inner;
  return phi4 * t;
}

TEST(Khinchin, TermsMatchDirectEvaluation) {
  for (std::uint64_t m = 1; m <= 600; ++m) {
    for (const double eps : {0.5, 1.0}) {
      const double a = khinchin_term(m, 1.3, eps), b = naive_term(m, 1.3, eps);
      ASSERT_NEAR(a, b, 1e-12 * b + 1e-300) << m;
    }
  }
}

TEST(Khinchin, PartialSumsMonotone) {
  const auto s = khinchin_partial_sums(1.0, 1.0, 5000);
  ASSERT_EQ(s.size(), 5000u);
  EXPECT_GT(s[0], 0);
  for (std::size_t k = 1; k < s.size(); ++k) ASSERT_GE(s[k], s[k - 1]);
  EXPECT_DOUBLE_EQ(s.back(), khinchin_partial_sum(1.0, 1.0, 5000));
  for (std::uint64_t m = 1; m <= 5000; ++m) ASSERT_GE(khinchin_term(m, 1.0, 1.0), 0.0);
}

TEST(Khinchin, TailBoundDominatesLaterTerms) {
  for (const double eps : {0.3, 0.5, 1.0, 2.0}) {
    for (const std::uint64_t M : {10ull, 100ull, 1000ull}) {
      const double later = khinchin_partial_sum(2.0, eps, 50000) - khinchin_partial_sum(2.0, eps, M);
      EXPECT_GE(khinchin_tail_bound(2.0, eps, M), later) << "eps=" << eps << " M=" << M;
    }
  }
}

TEST(Khinchin, TailBoundInfiniteForSmallEpsilon) {
  EXPECT_TRUE(std::isinf(khinchin_tail_bound(1.0, 0.25, 100)));
  EXPECT_TRUE(std::isinf(khinchin_tail_bound(1.0, 0.1, 100)));
  EXPECT_TRUE(std::isfinite(khinchin_tail_bound(1.0, 0.26, 100)));
}

TEST(Khinchin, ConvergesForUnitParameters) {
  const double S = khinchin_partial_sum(1.0, 1.0, 10000);
  const double tail = khinchin_tail_bound(1.0, 1.0, 10000);
  EXPECT_LT(tail, 1e-3 * S);
  EXPECT_LT(khinchin_term(10000, 1.0, 1.0), 1e-6);
}

TEST(Khinchin, DivisorIdentity) {
  Rng rng(1);
  for (const std::uint64_t M : {1ull, 10ull, 257ull, 4096ull}) {
    std::vector<std::int64_t> f(M + 1);
    for (auto& x : f) x = rng.between(-1000, 1000);
    const auto r = divisor_sum_identity(M, f);
    EXPECT_EQ(r.lhs, r.rhs);
    // Left side evaluated directly.
    std::int64_t lhs = 0;
    for (std::uint64_t m = 1; m <= M; ++m) {
      std::int64_t inner = 0;
      for (std::uint64_t g = 1; g * g <= m; ++g) {
        if (m % (g * g) == 0) inner += static_cast<std::int64_t>(g * naive_r2(m / (g * g)));
      }
      lhs += inner * f[m];
    }
    EXPECT_EQ(r.lhs, lhs);
  }
}

TEST(KhinchinExperiment, FractionMonotoneInC) {
  KhinchinConfig a;
  a.samples = 3000;
  a.k_lo = 3;
  a.k_hi = 5;
  a.seed = 5;
  KhinchinConfig b = a;
  b.C = 2.0;
  const auto ra = khinchin_experiment(a);
  const auto rb = khinchin_experiment(b);
  ASSERT_EQ(ra.ranges.size(), 3u);
  EXPECT_EQ(ra.attempts, rb.attempts);
  for (std::size_t k = 0; k < ra.ranges.size(); ++k) {
    EXPECT_GE(rb.ranges[k].hits_lowest, ra.ranges[k].hits_lowest);
    EXPECT_GE(rb.ranges[k].hits_any, ra.ranges[k].hits_any);
    EXPECT_GE(ra.ranges[k].hits_any, ra.ranges[k].hits_lowest);
  }
}

TEST(KhinchinExperiment, LargeEpsilonVanishes) {
  KhinchinConfig c;
  c.eps = 3.0;
  c.samples = 20000;
  c.seed = 6;
  const auto r = khinchin_experiment(c);
  EXPECT_LE(r.ranges.back().frac_any, r.ranges.front().frac_any);
  EXPECT_LT(r.ranges.back().frac_any, 1e-3);
}

TEST(KhinchinExperiment, GenerousRadiusCoversAlmostEverything) {
  KhinchinConfig c;
  c.C = 8.0;
  c.eps = 1e-3;
  c.k_lo = 4;
  c.k_hi = 4;
  c.samples = 500;
  c.seed = 7;
  const auto r = khinchin_experiment(c);
  ASSERT_EQ(r.ranges.size(), 1u);
  EXPECT_GT(r.ranges[0].frac_any, 0.9);
}

TEST(KhinchinExperiment, ReproducibleAcrossThreads) {
  KhinchinConfig c;
  c.samples = 20000;
  c.seed = 8;
  c.threads = 1;
  const auto a = khinchin_experiment(c);
  c.threads = 3;
  const auto b = khinchin_experiment(c);
  ASSERT_EQ(a.ranges.size(), b.ranges.size());
  EXPECT_EQ(a.attempts, b.attempts);
  for (std::size_t k = 0; k < a.ranges.size(); ++k) {
    EXPECT_EQ(a.ranges[k].hits_lowest, b.ranges[k].hits_lowest);
    EXPECT_EQ(a.ranges[k].hits_any, b.ranges[k].hits_any);
  }
}

}  // namespace
}  // namespace heiscf
