// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "heiscf/gaussian.hpp"

namespace heiscf {

/// Working precision shared by every big-float value of one computation.
class PrecisionContext {
 public:
  static constexpr unsigned kMinBits = 64;

  explicit PrecisionContext(unsigned bits);

  unsigned bits() const { return bits_; }
  /// 2^(-bits/2): the comparison tolerance used for constraint and
  /// certification checks.
  double check_scale_log2() const { return -static_cast<double>(bits_) / 2.0; }

  PrecisionContext doubled() const { return PrecisionContext(bits_ * 2); }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  unsigned bits_;
};

/// RAII owner of an mpfr_t. Binary operations round to the larger of the two
/// operand precisions (round-to-nearest).
class BigFloat {
 public:
  BigFloat();
  explicit BigFloat(const PrecisionContext& ctx);
  BigFloat(double x, const PrecisionContext& ctx);
  BigFloat(long x, const PrecisionContext& ctx);
  BigFloat(const Integer& x, const PrecisionContext& ctx);
  BigFloat(const Rational& x, const PrecisionContext& ctx);
  BigFloat(std::string_view decimal, const PrecisionContext& ctx);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  PrecisionContext context() const { return PrecisionContext(precision()); }
  BigFloat with_precision(unsigned bits) const;

  /// 2^e at the given precision.
  static BigFloat pow2(long e, const PrecisionContext& ctx);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  Integer floor_integer() const;
  /// Exact value as a rational (mpfr values are dyadic).
  Rational to_rational() const;
  std::string to_string(int digits = 0) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

  friend BigFloat abs(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  void grow_to(const BigFloat& o);

  mpfr_t v_;
};

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);

/// Minimal complex number over an inexact real field (BigFloat or double).
template <class T>
struct Cplx {
  T re;
  T im;

  friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
  friend Cplx operator*(const Cplx& a, const Cplx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend Cplx operator/(const Cplx& a, const Cplx& b) {
    const T n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }
};

template <class T>
T norm(const Cplx<T>& z) {
  return z.re * z.re + z.im * z.im;
}
template <class T>
Cplx<T> conj(const Cplx<T>& z) {
  return {z.re, -z.im};
}
template <class T>
const T& re(const Cplx<T>& z) {
  return z.re;
}
template <class T>
const T& im(const Cplx<T>& z) {
  return z.im;
}

using BigComplex = Cplx<BigFloat>;
using DoubleComplex = Cplx<double>;

}  // namespace heiscf
