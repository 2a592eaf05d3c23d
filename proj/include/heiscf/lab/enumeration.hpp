// SPDX-License-Identifier: Apache-2.0
#pragma once

// Rational points (q : r : p) of S with |q|^2 = m inside a gauge ball.
//
// Writing q = a+bi and p = c+di, the surface condition is |r|^2 = 2(ac + bd).
// For fixed q and r this is a line in (c, d): with g = gcd(a, b) it has
// integer points only when g divides |r|^2/2, and then
//   b = 0:  c = |r|^2/(2a), d free;
//   else:   d runs over one residue class mod a/g, c = (|r|^2 - 2bd)/(2a).
// A purely imaginary q is the associate of a real one, so with q normalised
// to re > 0, im >= 0 the case a = 0 never arises.
// The ball |p|^2 <= R m bounds d to
//   [(b|r|^2 - |a| sqrt(4Rm^2 - |r|^4)) / 2m, (b|r|^2 + |a| sqrt(4Rm^2 - |r|^4)) / 2m].

#include <cstdint>
#include <functional>
#include <vector>

#include "heiscf/gaussian.hpp"

namespace heiscf {

/// Planar points (r/q, p/q) with |p/q|^2 <= bound, i.e. gauge norm^4 <= bound.
struct GaugeRegion {
  Rational bound;
};

/// The points within gauge distance delta of K_D: gauge norm <= 2^(-1/4) + delta.
/// The bound is rounded up to a multiple of 1/1024.
GaugeRegion kprime_region(double delta);

struct Tri64 {
  std::int64_t qa, qb, ra, rb, pa, pb;
  bool lowest;

  IntTriple to_triple() const;
  friend bool operator==(const Tri64&, const Tri64&) = default;
  friend bool operator<(const Tri64& x, const Tri64& y);
};

/// True iff the Gaussian integers share no non-unit factor.
bool coprime_triple(std::int64_t qa, std::int64_t qb, std::int64_t ra, std::int64_t rb, std::int64_t pa,
                    std::int64_t pb);

/// Visits every triple with canonical q, |q|^2 = m, in the region. With
/// lowest_terms only primitive triples are visited.
void for_each_rational_qnorm(std::int64_t m, const GaugeRegion& region, bool lowest_terms,
                             const std::function<void(const Tri64&)>& visit);

struct RationalEnumeration {
  std::int64_t m = 0;
  GaugeRegion region;
  bool lowest_terms = false;
  /// Sorted lexicographically by (q, r, p) components.
  std::vector<Tri64> points;
};

RationalEnumeration enumerate_rationals_qnorm(std::int64_t m, const GaugeRegion& region, bool lowest_terms);

struct GrowthFit {
  /// count ~ C m^alpha by least squares in log-log coordinates.
  double alpha = 0.0;
  double c_fitted = 0.0;
  /// Coefficient of variation of count / m^alpha.
  double cv_fitted = 0.0;
  double c_three_halves = 0.0;
  /// Coefficient of variation of count / m^(3/2).
  double cv_three_halves = 0.0;
};

GrowthFit fit_growth(const std::vector<std::int64_t>& ms, const std::vector<std::uint64_t>& counts);

}  // namespace heiscf
