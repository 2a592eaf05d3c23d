// SPDX-License-Identifier: Apache-2.0
#pragma once

// Continued-fraction expansion on S:
//   gamma_0 = [h],  h_0 = gamma_0^-1 * h,
//   gamma_i = [iota h_{i-1}],  h_i = gamma_i^-1 * iota h_{i-1}.
// The continuants Q_i = Q_{i-1} A_{gamma_i} (Q_0 = I) have columns
// (q_i, r_i, p_i), (qq_i, rr_i, pp_i), -(q_{i-1}, r_{i-1}, p_{i-1}), and
// Q_i h_i = h_0.

#include <boost/multiprecision/integer.hpp>
#include <optional>
#include <stdexcept>
#include <vector>

#include "heiscf/domain.hpp"
#include "heiscf/moebius.hpp"

namespace heiscf {

template <class B>
struct CFExpansion {
  IntegerPoint gamma0;
  /// gamma_1 .. gamma_n
  std::vector<IntegerPoint> digits;
  /// h_0 .. h_n
  std::vector<SiegelPoint<B>> iterates;
  /// Q_0 .. Q_n
  std::vector<UMatrix> continuants;
  /// T_{gamma_0} Q_i (1:0:0) in lowest terms.
  std::vector<ProjIntPoint> convergents;
  /// Middle column of Q_i, unreduced.
  std::vector<IntTriple> second_column;
  bool terminated = false;
  bool depth_exhausted = false;
  /// Inexact backends: an iterate fell to |v| <= 2^(-bits/2) and was taken
  /// as the origin, i.e. h is rational at working precision.
  bool noise_floor = false;
  unsigned bits = 0;
  /// One entry per nearest-integer call: gamma_0 first, then each digit.
  std::vector<NearestCertificate> certificates;

  std::size_t depth() const { return digits.size(); }
  /// Unreduced (q_n, r_n, p_n) in the frame of h_0.
  IntTriple first_column(std::size_t n) const { return continuants.at(n).column(0); }
};

template <class B>
struct GaussStep {
  IntegerPoint gamma;
  SiegelPoint<B> next;
};

/// T h = [iota h]^-1 * iota h, with T(0,0) = (0,0).
template <class B, FundamentalDomain K>
GaussStep<B> gauss_map_step(const SiegelPoint<B>& h, const K& domain, NearestCertificate* cert = nullptr) {
  if (h.is_origin()) return {IntegerPoint(), h};
  const auto ih = koranyi_inversion(h);
  IntegerPoint g = domain.nearest(ih, cert);
  auto next = group_mul(integer_inv(g).template to_siegel<B>(ih.context()), ih);
  if constexpr (!B::is_exact) {
    auto v = next.v();
    v.re = norm(next.u()) * B::real(Rational(1, 2), ih.context());
    next = SiegelPoint<B>::trusted(next.u(), std::move(v));
  }
  return {std::move(g), std::move(next)};
}

/// Depth bound for exact rational input: 4 * bitlen(|q|^2), at least 8.
std::size_t exact_depth_guard(const SiegelPoint<ExactBackend>& h);

namespace detail {
ProjIntPoint translated_convergent(const IntegerPoint& gamma0, const UMatrix& q);
}

/// Expands h. On the exact backend the expansion runs to termination when
/// max_depth is absent, and std::logic_error signals a blown termination
/// guard. With max_depth the run stops there and sets depth_exhausted.
template <class B, FundamentalDomain K>
CFExpansion<B> expand(const SiegelPoint<B>& h, const K& domain, std::optional<std::size_t> max_depth) {
  CFExpansion<B> e;
  const auto ctx = h.context();
  e.bits = B::bits(ctx);
  std::size_t limit = 0;
  bool guarded = false;
  if (max_depth) {
    limit = *max_depth;
  } else if constexpr (B::is_exact) {
    limit = exact_depth_guard(h);
    guarded = true;
  } else {
    throw std::invalid_argument("max_depth is required on inexact backends");
  }

  NearestCertificate cert;
  e.gamma0 = domain.nearest(h, &cert);
  e.certificates.push_back(cert);
  auto cur = group_mul(integer_inv(e.gamma0).template to_siegel<B>(ctx), h);
  if constexpr (!B::is_exact) {
    auto v = cur.v();
    v.re = norm(cur.u()) * B::real(Rational(1, 2), ctx);
    cur = SiegelPoint<B>::trusted(cur.u(), std::move(v));
  }
  e.iterates.push_back(cur);
  e.continuants.push_back(UMatrix::identity());
  e.second_column.push_back(e.continuants.back().column(1));
  e.convergents.push_back(detail::translated_convergent(e.gamma0, e.continuants.back()));

  while (!cur.is_origin()) {
    if (e.digits.size() >= limit) {
      if (guarded) throw std::logic_error("exact expansion exceeded its termination guard");
      e.depth_exhausted = true;
      return e;
    }
    auto step = gauss_map_step(cur, domain, &cert);
    e.certificates.push_back(cert);
    e.continuants.push_back(e.continuants.back() * digit_matrix(step.gamma));
    e.second_column.push_back(e.continuants.back().column(1));
    e.convergents.push_back(detail::translated_convergent(e.gamma0, e.continuants.back()));
    e.digits.push_back(std::move(step.gamma));
    cur = std::move(step.next);
    if constexpr (!B::is_exact) {
      if (norm(cur.v()) <= B::tolerance_sq(ctx)) {
        cur = SiegelPoint<B>::origin(ctx);
        e.noise_floor = true;
      }
    }
    e.iterates.push_back(cur);
  }
  e.terminated = true;
  return e;
}

/// Throws std::out_of_range unless n <= depth.
template <class B>
const ProjIntPoint& convergent(const CFExpansion<B>& e, std::size_t n) {
  if (n >= e.convergents.size()) throw std::out_of_range("convergent index out of range");
  return e.convergents[n];
}

/// gamma_0 * iota(gamma_1 * iota(... gamma_n)). Throws
/// std::invalid_argument("invalid digit string") if some inversion hits v = 0.
SiegelPoint<ExactBackend> reconstruct(const IntegerPoint& gamma0, const std::vector<IntegerPoint>& digits);

/// A_{gamma_{i+1}} ... A_{gamma_n} (1:0:0), unreduced.
IntTriple tail_convergent(const std::vector<IntegerPoint>& digits, std::size_t i, std::size_t n);

template <class B>
IntTriple tail_convergents(const CFExpansion<B>& e, std::size_t i, std::size_t n) {
  if (i > n || n > e.depth()) throw std::out_of_range("tail convergent indices out of range");
  return tail_convergent(e.digits, i, n);
}

}  // namespace heiscf
