// SPDX-License-Identifier: Apache-2.0
#pragma once

// The Heisenberg group in the planar Siegel model
//   S = {(u, v) in C^2 : |u|^2 - 2 Re(v) = 0}
// with product (u1, v1) * (u2, v2) = (u1 + u2, v1 + conj(u1) u2 + v2),
// inverse (u, v)^-1 = (-u, conj(v)), Koranyi inversion (u, v) -> (-u/v, 1/v),
// gauge norm ||(u, v)|| = |v|^(1/2), and left-invariant distance
// d(h1, h2) = ||h1^-1 * h2||.

#include <stdexcept>
#include <string>
#include <type_traits>

#include "heiscf/backend.hpp"
#include "heiscf/gaussian.hpp"

namespace heiscf {

class ConstraintViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// |u|^2 - 2 Re(v)
template <class B>
typename B::Real constraint_residual(const typename B::Complex& u, const typename B::Complex& v) {
  return norm(u) - (re(v) + re(v));
}

template <class B>
bool satisfies_constraint(const typename B::Complex& u, const typename B::Complex& v, int slack = 8) {
  const auto res = constraint_residual<B>(u, v);
  if constexpr (B::is_exact) {
    return res == 0;
  } else {
    // |res| <= slack * 2^(-bits/2) * max(1, |v|), compared in squares
    const auto ctx = B::context_of(u);
    const auto nv = norm(v);
    const typename B::Real one = B::real(Rational(1), ctx);
    const auto scale_sq = nv > one ? nv : one;
    const typename B::Real slack_r = B::real(Rational(slack * slack), ctx);
    return res * res <= slack_r * B::tolerance_sq(ctx) * scale_sq;
  }
}

template <class B>
class SiegelPoint {
 public:
  using Complex = typename B::Complex;
  using Real = typename B::Real;
  using Context = typename B::Context;

  /// Validates the Siegel constraint (exactly, or to working tolerance).
  SiegelPoint(Complex u, Complex v) : u_(std::move(u)), v_(std::move(v)) {
    require_same_context<B>(u_, v_);
    if (!satisfies_constraint<B>(u_, v_)) throw ConstraintViolation("point is not on the Siegel surface");
  }

  /// Skips validation; for callers that maintain the constraint themselves.
  static SiegelPoint trusted(Complex u, Complex v) { return SiegelPoint(std::move(u), std::move(v), Unchecked{}); }

  static SiegelPoint origin(const Context& ctx) {
    return trusted(B::from_gauss(GaussInt(0), ctx), B::from_gauss(GaussInt(0), ctx));
  }

  const Complex& u() const { return u_; }
  const Complex& v() const { return v_; }
  Context context() const { return B::context_of(u_); }
  bool is_origin() const { return B::is_zero(u_) && B::is_zero(v_); }

  friend bool operator==(const SiegelPoint& a, const SiegelPoint& b) { return a.u_ == b.u_ && a.v_ == b.v_; }

 private:
  struct Unchecked {};
  SiegelPoint(Complex u, Complex v, Unchecked) : u_(std::move(u)), v_(std::move(v)) {}

  Complex u_;
  Complex v_;
};

/// (z, t) coordinates of C x R.
template <class B>
struct HeisPoint {
  typename B::Complex z;
  typename B::Real t;
};

/// (z, t) -> (z(1+i), |z|^2 + t i)
template <class B>
SiegelPoint<B> from_heis(const HeisPoint<B>& h) {
  const auto& z = h.z;
  typename B::Complex u = B::complex(re(z) - im(z), re(z) + im(z));
  typename B::Complex v = B::complex(norm(z), h.t);
  return SiegelPoint<B>::trusted(std::move(u), std::move(v));
}

/// Inverse of from_heis: z = u / (1+i), t = Im v.
template <class B>
HeisPoint<B> to_heis(const SiegelPoint<B>& h) {
  const auto ctx = h.context();
  const typename B::Real half = B::real(Rational(1, 2), ctx);
  const auto& u = h.u();
  return {B::complex((re(u) + im(u)) * half, (im(u) - re(u)) * half), im(h.v())};
}

template <class B>
SiegelPoint<B> group_mul(const SiegelPoint<B>& a, const SiegelPoint<B>& b) {
  require_same_context<B>(a.u(), b.u());
  return SiegelPoint<B>::trusted(a.u() + b.u(), a.v() + conj(a.u()) * b.u() + b.v());
}

template <class B>
SiegelPoint<B> group_inv(const SiegelPoint<B>& h) {
  return SiegelPoint<B>::trusted(-h.u(), conj(h.v()));
}

/// iota(u, v) = (-u/v, 1/v). Throws std::domain_error at the origin. On
/// inexact backends Re(v) is re-projected to |u|^2 / 2 afterwards.
template <class B>
SiegelPoint<B> koranyi_inversion(const SiegelPoint<B>& h) {
  if (B::is_zero(h.v())) throw std::domain_error("inversion at origin");
  const auto ctx = h.context();
  const typename B::Complex one = B::from_gauss(GaussInt(1), ctx);
  typename B::Complex u = -(h.u() / h.v());
  typename B::Complex v = one / h.v();
  if constexpr (!B::is_exact) {
    v.re = norm(u) * B::real(Rational(1, 2), ctx);
  }
  return SiegelPoint<B>::trusted(std::move(u), std::move(v));
}

/// ||h||^4 = |v|^2, exact on the exact backend.
template <class B>
typename B::Real gauge_norm4(const SiegelPoint<B>& h) {
  return norm(h.v());
}

template <class B>
typename B::Root gauge_norm(const SiegelPoint<B>& h) {
  return B::root4(gauge_norm4(h));
}

/// conj(v1) - conj(u1) u2 + v2, whose modulus is d(h1, h2)^2.
template <class B>
typename B::Complex distance_word(const SiegelPoint<B>& a, const SiegelPoint<B>& b) {
  require_same_context<B>(a.u(), b.u());
  return conj(a.v()) - conj(a.u()) * b.u() + b.v();
}

/// d(h1, h2)^4, exact on the exact backend.
template <class B>
typename B::Real distance4(const SiegelPoint<B>& a, const SiegelPoint<B>& b) {
  return norm(distance_word(a, b));
}

template <class B>
typename B::Root distance(const SiegelPoint<B>& a, const SiegelPoint<B>& b) {
  return B::root4(distance4(a, b));
}

/// Point of S(Z) = S with Gaussian-integer coordinates: u = a+bi with
/// a = b (mod 2) and Re(v) = |u|^2 / 2.
class IntegerPoint {
 public:
  IntegerPoint() = default;
  /// Throws ConstraintViolation unless 2 Re(v) = |u|^2.
  IntegerPoint(GaussInt u, GaussInt v);
  /// (u, |u|^2/2 + c i); requires |u|^2 even.
  static IntegerPoint from_u_c(const GaussInt& u, const Integer& c);

  const GaussInt& u() const { return u_; }
  const GaussInt& v() const { return v_; }
  bool is_origin() const { return u_.is_zero() && v_.is_zero(); }

  template <class B>
  SiegelPoint<B> to_siegel(const typename B::Context& ctx) const {
    return SiegelPoint<B>::trusted(B::from_gauss(u_, ctx), B::from_gauss(v_, ctx));
  }

  friend bool operator==(const IntegerPoint&, const IntegerPoint&) = default;

 private:
  GaussInt u_;
  GaussInt v_;
};

bool is_integer_point(const GaussInt& u, const GaussInt& v);
IntegerPoint integer_mul(const IntegerPoint& a, const IntegerPoint& b);
IntegerPoint integer_inv(const IntegerPoint& a);
/// Lexicographic (Re u, Im u, Im v).
bool lex_less(const IntegerPoint& a, const IntegerPoint& b);
/// Throws std::invalid_argument unless h has Gaussian-integer coordinates.
IntegerPoint to_integer_point(const SiegelPoint<ExactBackend>& h);
std::string to_string(const IntegerPoint& g);
IntegerPoint parse_integer_point(std::string_view text);

/// Rational point of S as a primitive integer triple (q : r : p) with
/// |r|^2 = 2 Re(conj(q) p) and q a canonical associate.
class ProjIntPoint {
 public:
  /// Reduces to lowest terms; throws ConstraintViolation if the triple is not
  /// on S and std::invalid_argument("point at infinity") if q = 0.
  explicit ProjIntPoint(const IntTriple& t);
  ProjIntPoint(const GaussInt& q, const GaussInt& r, const GaussInt& p) : ProjIntPoint(IntTriple{q, r, p}) {}

  const GaussInt& q() const { return t_.q; }
  const GaussInt& r() const { return t_.r; }
  const GaussInt& p() const { return t_.p; }
  const IntTriple& triple() const { return t_; }

  friend bool operator==(const ProjIntPoint&, const ProjIntPoint&) = default;

 private:
  IntTriple t_;
};

/// |r|^2 - 2 Re(conj(q) p) == 0
bool on_siegel_surface(const IntTriple& t);

SiegelPoint<ExactBackend> proj_to_planar(const ProjIntPoint& p);
ProjIntPoint planar_to_proj(const SiegelPoint<ExactBackend>& h);

/// Planar point (r/q, p/q) on an arbitrary backend. Throws at infinity.
template <class B>
SiegelPoint<B> planar_point(const IntTriple& t, const typename B::Context& ctx) {
  if (t.q.is_zero()) throw std::invalid_argument("point at infinity");
  const auto q = B::from_gauss(t.q, ctx);
  typename B::Complex u = B::from_gauss(t.r, ctx) / q;
  typename B::Complex v = B::from_gauss(t.p, ctx) / q;
  if constexpr (!B::is_exact) {
    v.re = norm(u) * B::real(Rational(1, 2), ctx);
  }
  return SiegelPoint<B>::trusted(std::move(u), std::move(v));
}

/// Re-expresses an exact point on another backend.
template <class B>
SiegelPoint<B> convert_point(const SiegelPoint<ExactBackend>& h, const typename B::Context& ctx) {
  if constexpr (std::is_same_v<B, ExactBackend>) {
    return h;
  } else {
    typename B::Complex u = B::from_rational(h.u().re(), h.u().im(), ctx);
    typename B::Complex v = B::from_rational(h.v().re(), h.v().im(), ctx);
    v.re = norm(u) * B::real(Rational(1, 2), ctx);
    return SiegelPoint<B>::trusted(std::move(u), std::move(v));
  }
}

/// Promotes a big-float point to a higher precision without changing its value.
SiegelPoint<BigFloatBackend> promote(const SiegelPoint<BigFloatBackend>& h, const PrecisionContext& ctx);

// Text forms: planar `(u; v)`, Heisenberg `heis(z; t)`, projective `[q : r : p]`.
std::string to_string(const SiegelPoint<ExactBackend>& h);
std::string to_string(const SiegelPoint<BigFloatBackend>& h, int digits = 30);
std::string to_string(const ProjIntPoint& p);
std::string to_string(const IntTriple& t);

SiegelPoint<ExactBackend> parse_planar_point(std::string_view text);
/// Accepts `heis(z; t)`, `(z; t)`, or `z, t` with decimal components.
SiegelPoint<BigFloatBackend> parse_heis_point(std::string_view text, const PrecisionContext& ctx);
ProjIntPoint parse_proj_point(std::string_view text);

}  // namespace heiscf
