// SPDX-License-Identifier: Apache-2.0
#pragma once

// Fundamental domains for the left action of S(Z) on S. Only the Dirichlet
// domain K_D = {h : the nearest integer point of h is the origin} is shipped.
//
// Nearest-integer search. For an integer point g = (u_g, |u_g|^2/2 + c i),
//   d(g, h)^4 = (|u - u_g|^2 / 2)^2 + (Im(v - conj(u_g) u) - c)^2.
// A minimiser has d^4 <= rad(K_D)^4 = 1/2, so |u - u_g| <= 2^(1/4). We scan
// u_g over the lattice {a+bi : a = b mod 2} within 1.25 of u and, for each,
// the two integers c adjacent to Im(v - conj(u_g) u). Exact ties go to the
// lexicographically smallest (Re u_g, Im u_g, Im v_g).

#include <algorithm>
#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "heiscf/siegel.hpp"

namespace heiscf {

class CertificationError : public std::runtime_error {
 public:
  CertificationError() : std::runtime_error("ambiguous at working precision") {}
};

struct NearestCertificate {
  unsigned escalations = 0;
  unsigned bits = 0;
  /// d^4 gap between the winner and the runner-up.
  double gap = 0.0;
  /// Double backend only, which never escalates.
  bool ambiguous = false;
};

enum class Membership { inside, outside, ambiguous };

template <class B>
struct Candidate {
  IntegerPoint g;
  typename B::Real d4;
};

template <class B>
std::vector<Candidate<B>> nearest_candidates(const SiegelPoint<B>& h) {
  using Real = typename B::Real;
  const auto ctx = h.context();
  const auto& u = h.u();
  const Integer a0 = B::floor(re(u));
  const Integer b0 = B::floor(im(u));
  const Real bound = B::real(Rational(25, 16), ctx);
  const Real half = B::real(Rational(1, 2), ctx);
  std::vector<Candidate<B>> out;
  for (int da = -1; da <= 2; ++da) {
    for (int db = -1; db <= 2; ++db) {
      const Integer a = a0 + da;
      const Integer b = b0 + db;
      if ((a - b) % 2 != 0) continue;
      const GaussInt ug(a, b);
      const auto uc = B::from_gauss(ug, ctx);
      const Real n = norm(u - uc);
      if (n > bound) continue;
      const Real A = n * half;
      const Real x = im(h.v() - conj(uc) * u);
      const Integer c0 = B::floor(x);
      for (int dc = 0; dc <= 1; ++dc) {
        const Integer c = c0 + dc;
        const Real y = x - B::real(Rational(c), ctx);
        out.push_back({IntegerPoint::from_u_c(ug, c), A * A + y * y});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Candidate<B>& l, const Candidate<B>& r) {
    if (l.d4 < r.d4) return true;
    if (r.d4 < l.d4) return false;
    return lex_less(l.g, r.g);
  });
  return out;
}

/// 2^(-bits/2) * max(1, |v|)
template <class B>
typename B::Real certification_gap(const SiegelPoint<B>& h) {
  const auto ctx = h.context();
  typename B::Real scale = B::root2(norm(h.v()));
  const typename B::Real one = B::real(Rational(1), ctx);
  if (scale < one) scale = one;
  if constexpr (std::is_same_v<B, BigFloatBackend>) {
    return BigFloat::pow2(-static_cast<long>(ctx.bits() / 2), ctx) * scale;
  } else {
    return std::ldexp(1.0, -26) * scale;
  }
}

class DirichletDomain {
 public:
  static constexpr std::string_view id = "dirichlet";
  static constexpr int kMaxEscalations = 4;

  /// rad(K_D)^4 = 1/2
  static Rational radius4() { return Rational(1, 2); }
  /// rad(K_D) = 2^(-1/4)
  static double radius() { return std::pow(2.0, -0.25); }

  /// Throws CertificationError on the big-float backend when two candidates
  /// stay within tolerance after all precision escalations.
  template <class B>
  IntegerPoint nearest(const SiegelPoint<B>& h, NearestCertificate* cert = nullptr) const {
    if constexpr (B::is_exact) {
      const auto cands = nearest_candidates(h);
      if (cert) *cert = {0, 0, cands.size() > 1 ? B::to_double(cands[1].d4 - cands[0].d4) : 0.0, false};
      return cands.front().g;
    } else if constexpr (std::is_same_v<B, BigFloatBackend>) {
      unsigned bits = h.context().bits();
      for (int esc = 0; esc <= kMaxEscalations; ++esc, bits *= 2) {
        const auto hp = esc == 0 ? h : promote(h, PrecisionContext(bits));
        const auto cands = nearest_candidates(hp);
        const BigFloat gap = cands[1].d4 - cands[0].d4;
        if (gap >= certification_gap(hp)) {
          if (cert) *cert = {static_cast<unsigned>(esc), bits, gap.to_double(), false};
          return cands.front().g;
        }
      }
      throw CertificationError();
    } else {
      const auto cands = nearest_candidates(h);
      const double gap = cands[1].d4 - cands[0].d4;
      if (cert) *cert = {0, 53, gap, gap < certification_gap(h)};
      return cands.front().g;
    }
  }

  template <class B>
  Membership contains(const SiegelPoint<B>& h) const {
    const auto cands = nearest_candidates(h);
    if constexpr (B::is_exact) {
      return cands.front().g.is_origin() ? Membership::inside : Membership::outside;
    } else {
      const auto tol = certification_gap(h);
      const auto it = std::find_if(cands.begin(), cands.end(), [](const auto& c) { return c.g.is_origin(); });
      if (it == cands.end()) return Membership::outside;
      if (it == cands.begin()) return cands[1].d4 - cands[0].d4 >= tol ? Membership::inside : Membership::ambiguous;
      return it->d4 - cands[0].d4 >= tol ? Membership::outside : Membership::ambiguous;
    }
  }

  /// Origin strictly closer than every other integer point (exact backend).
  bool strictly_contains(const SiegelPoint<ExactBackend>& h) const;
};

template <class K>
concept FundamentalDomain = requires(const K& k, const SiegelPoint<ExactBackend>& h) {
  { K::radius() } -> std::convertible_to<double>;
  { k.nearest(h) } -> std::same_as<IntegerPoint>;
  { k.contains(h) } -> std::same_as<Membership>;
};

static_assert(FundamentalDomain<DirichletDomain>);

/// prod_{n>=1} (1 + rad^n)^2 to relative accuracy tol. Throws
/// std::domain_error("divergent product") when rad >= 1.
double rk_constant(double rad, double tol = 1e-12);

}  // namespace heiscf
