// SPDX-License-Identifier: Apache-2.0
#include "heiscf/bigfloat.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace heiscf {

PrecisionContext::PrecisionContext(unsigned bits) : bits_(bits) {
  if (bits < kMinBits) throw std::invalid_argument("precision must be at least 64 bits");
}

BigFloat::BigFloat() {
  mpfr_init2(v_, PrecisionContext::kMinBits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const PrecisionContext& ctx) {
  mpfr_init2(v_, ctx.bits());
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double x, const PrecisionContext& ctx) {
  mpfr_init2(v_, ctx.bits());
  mpfr_set_d(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(long x, const PrecisionContext& ctx) {
  mpfr_init2(v_, ctx.bits());
  mpfr_set_si(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& x, const PrecisionContext& ctx) {
  mpfr_init2(v_, ctx.bits());
  mpfr_set_z(v_, x.backend().data(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& x, const PrecisionContext& ctx) {
  mpfr_init2(v_, ctx.bits());
  mpfr_set_q(v_, x.backend().data(), MPFR_RNDN);
}

BigFloat::BigFloat(std::string_view decimal, const PrecisionContext& ctx) {
  mpfr_init2(v_, ctx.bits());
  const std::string s(decimal);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) {
    mpfr_clear(v_);
    throw std::invalid_argument("malformed decimal '" + s + "'");
  }
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(unsigned bits) const {
  BigFloat r{PrecisionContext(bits)};
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(long e, const PrecisionContext& ctx) {
  BigFloat r(1L, ctx);
  mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

Integer BigFloat::floor_integer() const {
  if (!is_finite()) throw std::domain_error("floor of non-finite value");
  Integer z;
  mpfr_get_z(z.backend().data(), v_, MPFR_RNDD);
  return z;
}

Rational BigFloat::to_rational() const {
  if (!is_finite()) throw std::domain_error("non-finite value");
  if (is_zero()) return Rational(0);
  Integer mant;
  const long exp = mpfr_get_z_2exp(mant.backend().data(), v_);
  Rational r(mant);
  if (exp >= 0) {
    r *= Rational(Integer(1) << exp);
  } else {
    r /= Rational(Integer(1) << -exp);
  }
  return r;
}

std::string BigFloat::to_string(int digits) const {
  const std::size_t n = digits > 0 ? static_cast<std::size_t>(digits) : 0;
  char* buf = nullptr;
  const std::string fmt = "%." + std::to_string(n == 0 ? 20 : n) + "Rg";
  if (mpfr_asprintf(&buf, fmt.c_str(), v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

void BigFloat::grow_to(const BigFloat& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  grow_to(o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  grow_to(o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  grow_to(o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  grow_to(o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r = a;
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r = a;
  mpfr_abs(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& a) {
  BigFloat r = a;
  mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
  return r;
}

}  // namespace heiscf
