// SPDX-License-Identifier: Apache-2.0
#include "heiscf/gaussian.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace heiscf {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer round_div(const Integer& a, const Integer& b) {
  // nearest integer to a/b with halves rounded down: ceil(a/b - 1/2)
  Integer num = 2 * a - b;
  Integer den = 2 * b;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  // ceil(num/den)
  return -floor_div(-num, den);
}

Integer floor(const Rational& x) {
  return floor_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

bool GaussInt::is_unit() const { return norm(*this) == 1; }

GaussInt& GaussInt::operator+=(const GaussInt& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussInt& GaussInt::operator-=(const GaussInt& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussInt& GaussInt::operator*=(const GaussInt& o) {
  Integer re = re_ * o.re_ - im_ * o.im_;
  Integer im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Integer norm(const GaussInt& g) { return g.re() * g.re() + g.im() * g.im(); }

GaussInt conj(const GaussInt& g) { return {g.re(), -g.im()}; }

bool lex_less(const GaussInt& a, const GaussInt& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

GaussInt canonical_associate(const GaussInt& g) {
  GaussInt x = g;
  for (int k = 0; k < 4; ++k) {
    if (x.re() > 0 && x.im() >= 0) return x;
    x *= kImagUnit;
  }
  return x;  // zero
}

GaussInt rounded_quotient(const GaussInt& a, const GaussInt& b) {
  const Integer n = norm(b);
  if (n.is_zero()) throw std::domain_error("division by zero");
  const GaussInt t = a * conj(b);
  return {round_div(t.re(), n), round_div(t.im(), n)};
}

bool divides(const GaussInt& d, const GaussInt& g) {
  if (d.is_zero()) return g.is_zero();
  const Integer n = norm(d);
  const GaussInt t = g * conj(d);
  return t.re() % n == 0 && t.im() % n == 0;
}

GaussInt divide_exact(const GaussInt& a, const GaussInt& b) {
  const Integer n = norm(b);
  if (n.is_zero()) throw std::domain_error("division by zero");
  const GaussInt t = a * conj(b);
  if (t.re() % n != 0 || t.im() % n != 0) throw std::domain_error("inexact Gaussian division");
  return {t.re() / n, t.im() / n};
}

GaussInt gcd(const GaussInt& a, const GaussInt& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
  GaussInt x = a;
  GaussInt y = b;
  while (!y.is_zero()) {
    GaussInt r = x - rounded_quotient(x, y) * y;
    x = std::move(y);
    y = std::move(r);
  }
  return canonical_associate(x);
}

IntTriple reduce_triple(const GaussInt& q, const GaussInt& r, const GaussInt& p) {
  if (q.is_zero()) throw std::invalid_argument("point at infinity");
  const GaussInt g = gcd(gcd(q, r), p);
  IntTriple t{divide_exact(q, g), divide_exact(r, g), divide_exact(p, g)};
  const GaussInt cq = canonical_associate(t.q);
  // multiply every entry by the unit cq / q
  const GaussInt unit = divide_exact(cq, t.q);
  t.q = cq;
  t.r *= unit;
  t.p *= unit;
  return t;
}

bool projectively_equal(const IntTriple& a, const IntTriple& b) {
  // a ~ b iff all 2x2 minors vanish
  const std::array<const GaussInt*, 3> x{&a.q, &a.r, &a.p};
  const std::array<const GaussInt*, 3> y{&b.q, &b.r, &b.p};
  bool a_zero = a.q.is_zero() && a.r.is_zero() && a.p.is_zero();
  bool b_zero = b.q.is_zero() && b.r.is_zero() && b.p.is_zero();
  if (a_zero || b_zero) return a_zero && b_zero;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(*x[i] * *y[j] - *x[j] * *y[i]).is_zero()) return false;
  return true;
}

std::uint64_t r2_count(std::uint64_t n) {
  if (n == 0) return 1;
  // r2(n) = 4 * prod_{p = 1 mod 4} (e + 1), zero if a prime = 3 mod 4 has odd exponent
  std::uint64_t result = 4;
  while (n % 2 == 0) n /= 2;
  for (std::uint64_t p = 3; p * p <= n; p += 2) {
    if (n % p != 0) continue;
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (p % 4 == 1) {
      result *= e + 1;
    } else if (e % 2 == 1) {
      return 0;
    }
  }
  if (n > 1) {
    if (n % 4 == 1) {
      result *= 2;
    } else {
      return 0;
    }
  }
  return result;
}

// ---------------------------------------------------------------- GaussRat

GaussRat::GaussRat(GaussInt num, GaussInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  canonicalize();
}

GaussRat::GaussRat(const Rational& re, const Rational& im) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const Integer& rd = denominator(re);
  const Integer& id = denominator(im);
  num_ = GaussInt(numerator(re) * id, numerator(im) * rd);
  den_ = GaussInt(rd * id);
  canonicalize();
}

void GaussRat::canonicalize() {
  if (num_.is_zero()) {
    den_ = GaussInt(1);
    return;
  }
  if (den_ == GaussInt(1)) return;
  const GaussInt g = gcd(num_, den_);
  if (!g.is_unit()) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  const GaussInt cd = canonical_associate(den_);
  if (!(cd == den_)) {
    const GaussInt unit = divide_exact(cd, den_);
    num_ *= unit;
    den_ = cd;
  }
}

Rational GaussRat::re() const {
  const GaussInt t = num_ * conj(den_);
  return Rational(t.re(), norm(den_));
}

Rational GaussRat::im() const {
  const GaussInt t = num_ * conj(den_);
  return Rational(t.im(), norm(den_));
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  canonicalize();
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  canonicalize();
  return *this;
}

GaussRat operator-(const GaussRat& a) {
  GaussRat r = a;
  r.num_ = -r.num_;
  return r;
}

Rational norm(const GaussRat& z) { return Rational(norm(z.num()), norm(z.den())); }

GaussRat conj(const GaussRat& z) { return GaussRat(conj(z.num()), conj(z.den())); }

// ---------------------------------------------------------------- text

std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

std::string str_of(const Integer& x) { return x.str(); }
std::string str_of(const Rational& x) { return heiscf::to_string(x); }

template <class T>
std::string render_complex(const T& re, const T& im) {
  const bool re_zero = re == 0;
  const bool im_zero = im == 0;
  if (im_zero) return str_of(re);
  std::string out;
  if (!re_zero) out = str_of(re);
  if (im < 0) {
    out += "-";
  } else if (!re_zero) {
    out += "+";
  }
  T mag = im < 0 ? T(-im) : im;
  if (!(mag == 1)) out += str_of(mag);
  out += "i";
  return out;
}

// Decimal digits to Integer; leading zeros would otherwise select octal.
Integer decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? Integer(0) : Integer(std::string(digits.substr(first)));
}

Rational parse_real(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  const auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    for (auto part : {num, den}) {
      if (part.empty() ||
          !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("malformed fraction '" + std::string(s) + "'");
    }
    const Integer d = decimal_integer(den);
    if (d.is_zero()) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    return Rational(decimal_integer(num), d);
  }
  const auto dot = s.find('.');
  std::string digits;
  std::size_t frac_len = 0;
  if (dot == std::string_view::npos) {
    digits = std::string(s);
  } else {
    digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    frac_len = s.size() - dot - 1;
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("malformed number '" + std::string(s) + "'");
  Integer scale = 1;
  for (std::size_t k = 0; k < frac_len; ++k) scale *= 10;
  return Rational(decimal_integer(digits), scale);
}

std::pair<Rational, Rational> parse_complex(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty complex number");
  Rational re = 0;
  Rational im = 0;
  bool have_re = false;
  bool have_im = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("malformed complex number '" + std::string(text) + "'");
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::string_view term = text.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("malformed complex number '" + std::string(text) + "'");
    const bool imaginary = term.back() == 'i';
    if (imaginary) term.remove_suffix(1);
    Rational value = term.empty() ? Rational(1) : parse_real(term);
    if (sign < 0) value = -value;
    if (imaginary) {
      if (have_im) throw std::invalid_argument("repeated imaginary part in '" + std::string(text) + "'");
      im = value;
      have_im = true;
    } else {
      if (have_re) throw std::invalid_argument("repeated real part in '" + std::string(text) + "'");
      re = value;
      have_re = true;
    }
    pos = end;
  }
  return {re, im};
}

}  // namespace

std::string to_string(const GaussInt& g) { return render_complex(g.re(), g.im()); }

std::string to_string(const GaussRat& z) { return render_complex(z.re(), z.im()); }

GaussInt parse_gauss_int(std::string_view text) {
  auto [re, im] = parse_complex(text);
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(re) != 1 || denominator(im) != 1)
    throw std::invalid_argument("not a Gaussian integer: '" + std::string(text) + "'");
  return {numerator(re), numerator(im)};
}

GaussRat parse_gauss_rat(std::string_view text) {
  auto [re, im] = parse_complex(text);
  return GaussRat(re, im);
}

std::ostream& operator<<(std::ostream& os, const GaussInt& g) { return os << to_string(g); }
std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << to_string(z); }

}  // namespace heiscf
