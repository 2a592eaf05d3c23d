// SPDX-License-Identifier: Apache-2.0
#include "heiscf/siegel.hpp"

#include <string>

namespace heiscf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Strips `prefix(` ... `)` if present.
std::string_view unwrap(std::string_view s, std::string_view prefix, char open, char close) {
  s = trim(s);
  if (!prefix.empty() && s.substr(0, prefix.size()) == prefix) s = trim(s.substr(prefix.size()));
  if (!s.empty() && s.front() == open) {
    if (s.back() != close) throw std::invalid_argument("unbalanced brackets");
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

std::pair<std::string_view, std::string_view> split_once(std::string_view s, char sep) {
  const auto pos = s.find(sep);
  if (pos == std::string_view::npos) throw std::invalid_argument(std::string("expected '") + sep + "'");
  return {trim(s.substr(0, pos)), trim(s.substr(pos + 1))};
}

std::string render(const BigComplex& z, int digits) {
  std::string re = z.re.to_string(digits);
  std::string im = z.im.to_string(digits);
  if (im.empty() || im.front() != '-') im = "+" + im;
  return re + im + "i";
}

}  // namespace

IntegerPoint::IntegerPoint(GaussInt u, GaussInt v) : u_(std::move(u)), v_(std::move(v)) {
  if (!is_integer_point(u_, v_)) throw ConstraintViolation("not an integer point of the Siegel surface");
}

IntegerPoint IntegerPoint::from_u_c(const GaussInt& u, const Integer& c) {
  const Integer n = norm(u);
  if (n % 2 != 0) throw ConstraintViolation("|u|^2 must be even");
  return IntegerPoint(u, GaussInt(Integer(n / 2), c));
}

bool is_integer_point(const GaussInt& u, const GaussInt& v) { return norm(u) == 2 * v.re(); }

IntegerPoint integer_mul(const IntegerPoint& a, const IntegerPoint& b) {
  return IntegerPoint(a.u() + b.u(), a.v() + conj(a.u()) * b.u() + b.v());
}

IntegerPoint integer_inv(const IntegerPoint& a) { return IntegerPoint(-a.u(), conj(a.v())); }

bool lex_less(const IntegerPoint& a, const IntegerPoint& b) {
  if (a.u().re() != b.u().re()) return a.u().re() < b.u().re();
  if (a.u().im() != b.u().im()) return a.u().im() < b.u().im();
  return a.v().im() < b.v().im();
}

IntegerPoint to_integer_point(const SiegelPoint<ExactBackend>& h) {
  if (!h.u().is_gauss_int() || !h.v().is_gauss_int()) throw std::invalid_argument("not an integer point");
  return IntegerPoint(h.u().num(), h.v().num());
}

std::string to_string(const IntegerPoint& g) { return "(" + to_string(g.u()) + "; " + to_string(g.v()) + ")"; }

IntegerPoint parse_integer_point(std::string_view text) {
  const auto [u, v] = split_once(unwrap(text, "", '(', ')'), ';');
  return IntegerPoint(parse_gauss_int(u), parse_gauss_int(v));
}

bool on_siegel_surface(const IntTriple& t) {
  const GaussInt qp = conj(t.q) * t.p;
  return norm(t.r) == 2 * qp.re();
}

ProjIntPoint::ProjIntPoint(const IntTriple& t) {
  if (t.q.is_zero()) throw std::invalid_argument("point at infinity");
  if (!on_siegel_surface(t)) throw ConstraintViolation("triple is not on the Siegel surface");
  t_ = reduce_triple(t.q, t.r, t.p);
}

SiegelPoint<ExactBackend> proj_to_planar(const ProjIntPoint& p) {
  return SiegelPoint<ExactBackend>(GaussRat(p.r(), p.q()), GaussRat(p.p(), p.q()));
}

ProjIntPoint planar_to_proj(const SiegelPoint<ExactBackend>& h) {
  const GaussInt& du = h.u().den();
  const GaussInt& dv = h.v().den();
  const GaussInt q = divide_exact(du * dv, gcd(du, dv));
  const GaussRat r = h.u() * GaussRat(q);
  const GaussRat p = h.v() * GaussRat(q);
  return ProjIntPoint(q, r.num(), p.num());
}

SiegelPoint<BigFloatBackend> promote(const SiegelPoint<BigFloatBackend>& h, const PrecisionContext& ctx) {
  const unsigned b = ctx.bits();
  BigComplex u{h.u().re.with_precision(b), h.u().im.with_precision(b)};
  BigComplex v{h.v().re.with_precision(b), h.v().im.with_precision(b)};
  return SiegelPoint<BigFloatBackend>::trusted(std::move(u), std::move(v));
}

std::string to_string(const SiegelPoint<ExactBackend>& h) {
  return "(" + to_string(h.u()) + "; " + to_string(h.v()) + ")";
}

std::string to_string(const SiegelPoint<BigFloatBackend>& h, int digits) {
  return "(" + render(h.u(), digits) + "; " + render(h.v(), digits) + ")";
}

std::string to_string(const IntTriple& t) {
  return "[" + to_string(t.q) + " : " + to_string(t.r) + " : " + to_string(t.p) + "]";
}

std::string to_string(const ProjIntPoint& p) { return to_string(p.triple()); }

SiegelPoint<ExactBackend> parse_planar_point(std::string_view text) {
  const auto [u, v] = split_once(unwrap(text, "", '(', ')'), ';');
  return SiegelPoint<ExactBackend>(parse_gauss_rat(u), parse_gauss_rat(v));
}

SiegelPoint<BigFloatBackend> parse_heis_point(std::string_view text, const PrecisionContext& ctx) {
  std::string_view body = unwrap(text, "heis", '(', ')');
  const char sep = body.find(';') != std::string_view::npos ? ';' : ',';
  const auto [zs, ts] = split_once(body, sep);
  const GaussRat z = parse_gauss_rat(zs);
  const GaussRat t = parse_gauss_rat(ts);
  if (!t.im().is_zero()) throw std::invalid_argument("t must be real");
  HeisPoint<BigFloatBackend> h{BigFloatBackend::from_rational(z.re(), z.im(), ctx), BigFloat(t.re(), ctx)};
  return from_heis(h);
}

ProjIntPoint parse_proj_point(std::string_view text) {
  std::string_view body = unwrap(text, "", '[', ']');
  const auto [q, rest] = split_once(body, ':');
  const auto [r, p] = split_once(rest, ':');
  return ProjIntPoint(parse_gauss_int(q), parse_gauss_int(r), parse_gauss_int(p));
}

}  // namespace heiscf
