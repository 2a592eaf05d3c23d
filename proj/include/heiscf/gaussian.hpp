// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace heiscf {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Floor division of integers, rounding toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);

/// Nearest integer to the rational a/b; halves round toward negative infinity.
Integer round_div(const Integer& a, const Integer& b);

Integer floor(const Rational& x);

/// Element of Z[i]. Exact, unbounded.
class GaussInt {
 public:
  GaussInt() = default;
  GaussInt(Integer re, Integer im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussInt(Integer re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussInt(int re) : re_(re) {}                 // NOLINT(google-explicit-constructor)
  GaussInt(long re, long im) : re_(re), im_(im) {}
  GaussInt(int re, int im) : re_(re), im_(im) {}

  const Integer& re() const { return re_; }
  const Integer& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_unit() const;

  GaussInt& operator+=(const GaussInt& o);
  GaussInt& operator-=(const GaussInt& o);
  GaussInt& operator*=(const GaussInt& o);

  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
  friend GaussInt operator-(const GaussInt& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Integer re_;
  Integer im_;
};

inline const GaussInt kImagUnit{0, 1};

Integer norm(const GaussInt& g);
GaussInt conj(const GaussInt& g);

/// Lexicographic (re, im) order; used for deterministic tie-breaks only.
bool lex_less(const GaussInt& a, const GaussInt& b);

/// The unit multiple of g with re > 0 and im >= 0. Zero maps to zero.
GaussInt canonical_associate(const GaussInt& g);

/// Quotient of Euclidean division: coordinate-wise nearest integer of a/b.
GaussInt rounded_quotient(const GaussInt& a, const GaussInt& b);

bool divides(const GaussInt& d, const GaussInt& g);

/// a/b, which must be exact.
GaussInt divide_exact(const GaussInt& a, const GaussInt& b);

/// Canonical-associate GCD. Throws std::domain_error("gcd undefined") on (0, 0).
GaussInt gcd(const GaussInt& a, const GaussInt& b);

/// Unreduced integer triple (q, r, p). Unlike ProjIntPoint it need not satisfy
/// the Siegel constraint or be primitive.
struct IntTriple {
  GaussInt q;
  GaussInt r;
  GaussInt p;
  friend bool operator==(const IntTriple&, const IntTriple&) = default;
};

/// Divides out the common GCD and rotates so that q is a canonical associate.
/// Throws std::invalid_argument("point at infinity") when q = 0.
IntTriple reduce_triple(const GaussInt& q, const GaussInt& r, const GaussInt& p);

/// True if the triples agree up to a nonzero Gaussian-rational scalar.
bool projectively_equal(const IntTriple& a, const IntTriple& b);

/// #{(a, b) in Z^2 : a^2 + b^2 = n}, signs and order counted.
std::uint64_t r2_count(std::uint64_t n);

/// Fraction in Q(i) kept as num/den with gcd(num, den) a unit and den a
/// canonical associate.
class GaussRat {
 public:
  GaussRat() : den_(1) {}
  GaussRat(GaussInt num) : num_(std::move(num)), den_(1) {}  // NOLINT
  GaussRat(int n) : num_(n), den_(1) {}                      // NOLINT
  GaussRat(GaussInt num, GaussInt den);
  GaussRat(const Rational& re, const Rational& im);

  const GaussInt& num() const { return num_; }
  const GaussInt& den() const { return den_; }

  Rational re() const;
  Rational im() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_gauss_int() const { return den_ == GaussInt(1); }

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(const GaussRat& a);
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void canonicalize();

  GaussInt num_;
  GaussInt den_;
};

Rational norm(const GaussRat& z);
GaussRat conj(const GaussRat& z);
inline Rational re(const GaussRat& z) { return z.re(); }
inline Rational im(const GaussRat& z) { return z.im(); }

// Text form: `a+bi`, `a-bi`, `-5i`, `3`, `i`, no spaces. Rational components
// may be written as fractions (`1+4/5i`) or finite decimals (`0.25-i`).
std::string to_string(const GaussInt& g);
std::string to_string(const Rational& q);
std::string to_string(const GaussRat& z);
GaussInt parse_gauss_int(std::string_view text);
GaussRat parse_gauss_rat(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GaussInt& g);
std::ostream& operator<<(std::ostream& os, const GaussRat& z);

}  // namespace heiscf
