// SPDX-License-Identifier: Apache-2.0
#pragma once

// Checks of the continuant identities along an expansion, all evaluated at
// h_0 = (u, v) with the unreduced columns of Q_n:
//   prq       conj(p_n) - conj(r_n) u + conj(q_n) v = (-1)^n v_0 ... v_n
//   tildeprq  same with the middle column      = (-1)^(n-1) u_n v_0 ... v_(n-1)
//   fracq     (q_n + qq_n u_n - q_(n-1) v_n) v_0 ... v_(n-1) = (-1)^n
//   distance  d(conv_n, h_0)^4 = |v_0 ... v_n|^2 / |q_n|^2
//             d(conv_n, h_0)^4 = 1 / |q_n (q_(n+1) + qq_(n+1) u_(n+1) - q_n v_(n+1))|^2

#include <complex>
#include <string>
#include <vector>

#include "heiscf/cf_engine.hpp"

namespace heiscf {

struct IdentityReport {
  std::string id;
  std::size_t n = 0;
  std::complex<double> lhs;
  std::complex<double> rhs;
  double residual = 0.0;
  double scale = 1.0;
  bool pass = false;
};

namespace lab_detail {

template <class B>
std::complex<double> to_cd(const typename B::Complex& z) {
  return {B::to_double(re(z)), B::to_double(im(z))};
}

template <class B>
typename B::Complex gauss(const GaussInt& g, const typename B::Context& ctx) {
  return B::from_gauss(g, ctx);
}

/// v_lo * ... * v_hi (empty product is 1).
template <class B>
typename B::Complex v_product(const CFExpansion<B>& e, std::size_t lo, std::size_t hi_exclusive) {
  const auto ctx = e.iterates.front().context();
  typename B::Complex p = B::from_gauss(GaussInt(1), ctx);
  for (std::size_t i = lo; i < hi_exclusive; ++i) p = p * e.iterates[i].v();
  return p;
}

template <class B>
typename B::Complex sign(std::size_t n, bool negate_extra, const typename B::Context& ctx) {
  const bool neg = (n % 2 == 1) != negate_extra;
  return B::from_gauss(GaussInt(neg ? -1 : 1), ctx);
}

/// Fills residual/scale/pass from two backend values and the magnitudes of
/// the summands that produced them.
template <class B>
IdentityReport finish(std::string id, std::size_t n, const typename B::Complex& lhs, const typename B::Complex& rhs,
                      std::initializer_list<typename B::Real> magnitudes_sq) {
  IdentityReport r;
  r.id = std::move(id);
  r.n = n;
  r.lhs = to_cd<B>(lhs);
  r.rhs = to_cd<B>(rhs);
  const auto diff_sq = norm(lhs - rhs);
  r.residual = std::sqrt(B::to_double(diff_sq));
  if constexpr (B::is_exact) {
    r.scale = 1.0;
    r.pass = lhs == rhs;
  } else {
    const auto ctx = B::context_of(lhs);
    typename B::Real scale_sq = B::real(Rational(1), ctx);
    for (const auto& m : magnitudes_sq) {
      if (scale_sq < m) scale_sq = m;
    }
    r.scale = std::sqrt(B::to_double(scale_sq));
    r.pass = diff_sq <= B::tolerance_sq(ctx) * scale_sq;
  }
  return r;
}

}  // namespace lab_detail

template <class B>
IdentityReport verify_prq(const CFExpansion<B>& e, std::size_t n) {
  using namespace lab_detail;
  if (n > e.depth()) throw std::out_of_range("identity index out of range");
  const auto& h0 = e.iterates.front();
  const auto ctx = h0.context();
  const IntTriple c = e.first_column(n);
  const auto tp = conj(gauss<B>(c.p, ctx));
  const auto tr = conj(gauss<B>(c.r, ctx)) * h0.u();
  const auto tq = conj(gauss<B>(c.q, ctx)) * h0.v();
  const auto lhs = tp - tr + tq;
  const auto rhs = sign<B>(n, false, ctx) * v_product(e, 0, n + 1);
  return finish<B>("prq", n, lhs, rhs, {norm(tp), norm(tr), norm(tq), norm(rhs)});
}

template <class B>
IdentityReport verify_tildeprq(const CFExpansion<B>& e, std::size_t n) {
  using namespace lab_detail;
  if (n > e.depth()) throw std::out_of_range("identity index out of range");
  const auto& h0 = e.iterates.front();
  const auto ctx = h0.context();
  const IntTriple& c = e.second_column.at(n);
  const auto tp = conj(gauss<B>(c.p, ctx));
  const auto tr = conj(gauss<B>(c.r, ctx)) * h0.u();
  const auto tq = conj(gauss<B>(c.q, ctx)) * h0.v();
  const auto lhs = tp - tr + tq;
  const auto rhs = sign<B>(n, true, ctx) * e.iterates[n].u() * v_product(e, 0, n);
  return finish<B>("tildeprq", n, lhs, rhs, {norm(tp), norm(tr), norm(tq), norm(rhs)});
}

/// Requires 1 <= n <= depth and v_0 ... v_(n-1) all nonzero; throws
/// std::domain_error("identity undefined (some v_i = 0)") otherwise.
template <class B>
IdentityReport verify_fracq(const CFExpansion<B>& e, std::size_t n) {
  using namespace lab_detail;
  if (n == 0 || n > e.depth()) throw std::out_of_range("identity index out of range");
  const auto ctx = e.iterates.front().context();
  for (std::size_t i = 0; i < n; ++i) {
    if (B::is_zero(e.iterates[i].v())) throw std::domain_error("identity undefined (some v_i = 0)");
  }
  const GaussInt& qn = e.first_column(n).q;
  const GaussInt& qqn = e.second_column[n].q;
  const GaussInt& qprev = e.first_column(n - 1).q;
  const auto prod = v_product(e, 0, n);
  const auto t1 = gauss<B>(qn, ctx) * prod;
  const auto t2 = gauss<B>(qqn, ctx) * e.iterates[n].u() * prod;
  const auto t3 = gauss<B>(qprev, ctx) * e.iterates[n].v() * prod;
  const auto lhs = t1 + t2 - t3;
  const auto rhs = sign<B>(n, false, ctx);
  return finish<B>("fracq", n, lhs, rhs, {norm(t1), norm(t2), norm(t3)});
}

/// W_(n+1) = q_(n+1) + qq_(n+1) u_(n+1) - q_n v_(n+1); needs n+1 <= depth.
template <class B>
typename B::Complex continuant_word(const CFExpansion<B>& e, std::size_t n) {
  const auto ctx = e.iterates.front().context();
  const auto& h = e.iterates.at(n + 1);
  return B::from_gauss(e.first_column(n + 1).q, ctx) + B::from_gauss(e.second_column[n + 1].q, ctx) * h.u() -
         B::from_gauss(e.first_column(n).q, ctx) * h.v();
}

/// Distance from h_0 to the n-th convergent (h_0 frame) compared in fourth
/// powers with the product form and, when n+1 <= depth, the continuant form.
template <class B>
std::vector<IdentityReport> verify_distance_formula(const CFExpansion<B>& e, std::size_t n) {
  using namespace lab_detail;
  if (n > e.depth()) throw std::out_of_range("identity index out of range");
  const auto& h0 = e.iterates.front();
  const auto ctx = h0.context();
  const IntTriple c = e.first_column(n);
  const auto conv = planar_point<B>(c, ctx);
  const auto direct = norm(distance_word(conv, h0));
  const auto qn_sq = norm(B::from_gauss(c.q, ctx));
  const auto zero = B::real(Rational(0), ctx);
  std::vector<IdentityReport> out;
  const auto formula = norm(v_product(e, 0, n + 1)) / qn_sq;
  out.push_back(finish<B>("distance", n, B::complex(direct, zero), B::complex(formula, zero),
                          {direct * direct, formula * formula}));
  if (n + 1 <= e.depth()) {
    const auto w = continuant_word(e, n);
    const auto form2 = B::real(Rational(1), ctx) / (qn_sq * norm(w));
    out.push_back(finish<B>("distance_continuant", n, B::complex(direct, zero), B::complex(form2, zero),
                            {direct * direct, form2 * form2}));
  }
  return out;
}

/// Every identity at every index where it is defined.
template <class B>
std::vector<IdentityReport> verify_all(const CFExpansion<B>& e) {
  std::vector<IdentityReport> out;
  bool v_nonzero = true;
  for (std::size_t n = 0; n <= e.depth(); ++n) {
    out.push_back(verify_prq(e, n));
    out.push_back(verify_tildeprq(e, n));
    if (n >= 1 && v_nonzero) out.push_back(verify_fracq(e, n));
    for (auto& r : verify_distance_formula(e, n)) out.push_back(std::move(r));
    if (B::is_zero(e.iterates[n].v())) v_nonzero = false;
  }
  return out;
}

}  // namespace heiscf
