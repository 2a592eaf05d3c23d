// SPDX-License-Identifier: Apache-2.0
#pragma once

// Metric sums for phi(m) = C m^(-(1+eps)/2):
//   term(m) = phi(m)^4 [ r2(m) m^(3/2) if m is a square ]
//           + phi(m)^4 m sum_{g^2 | m} g r2(m/g^2).
// Exchanging the order of summation, the second part is
//   sum_g sum_d C^4 g^(-1-4 eps) d^(-1-2 eps) r2(d)  over pairs with g^2 d = m.

#include <cstdint>
#include <vector>

namespace heiscf {

double khinchin_term(std::uint64_t m, double C, double eps);

/// Running sums S(1), ..., S(M).
std::vector<double> khinchin_partial_sums(double C, double eps, std::uint64_t M);
double khinchin_partial_sum(double C, double eps, std::uint64_t M);

/// Upper bound for sum_{m > M} term(m). Infinite when eps <= 1/4, where the
/// bound r2(l^2) <= 8l used for the square part is too weak.
double khinchin_tail_bound(double C, double eps, std::uint64_t M);

struct DivisorSumCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

/// Both sides of
///   sum_{m<=M} sum_{g^2|m} g r2(m/g^2) f(m) = sum_g g sum_{d<=M/g^2} r2(d) f(g^2 d)
/// for a table f[1..M] (f[0] unused).
DivisorSumCheck divisor_sum_identity(std::uint64_t M, const std::vector<std::int64_t>& f);

struct KhinchinConfig {
  double C = 1.0;
  double eps = 1.0;
  int k_lo = 4;
  int k_hi = 8;
  std::size_t samples = 300000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct KhinchinRange {
  int k = 0;
  std::uint64_t m_lo = 0;
  std::uint64_t m_hi = 0;
  std::uint64_t rationals_lowest = 0;
  std::uint64_t rationals_any = 0;
  std::uint64_t hits_lowest = 0;
  std::uint64_t hits_any = 0;
  double frac_lowest = 0.0;
  double frac_any = 0.0;
};

struct KhinchinReport {
  KhinchinConfig config;
  std::uint64_t attempts = 0;
  double acceptance = 0.0;
  std::vector<KhinchinRange> ranges;
  bool decreasing_lowest = false;
  bool decreasing_any = false;
};

/// Fraction of uniform samples of K_D lying within phi(m) of a rational point
/// with |q|^2 = m, per dyadic range 2^k <= m < 2^(k+1). Rational points come
/// from the gauge ball of radius rad(K_D) + phi(m).
KhinchinReport khinchin_experiment(const KhinchinConfig& cfg);

}  // namespace heiscf
