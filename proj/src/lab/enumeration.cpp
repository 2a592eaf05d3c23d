// SPDX-License-Identifier: Apache-2.0
#include "heiscf/lab/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace heiscf {

namespace {

struct G64 {
  std::int64_t re, im;
};

std::int64_t norm64(G64 z) { return z.re * z.re + z.im * z.im; }

// Remainder of Euclidean division with the rounded quotient.
G64 gauss_mod(G64 a, G64 b) {
  const std::int64_t n = norm64(b);
  // a * conj(b)
  const std::int64_t xr = a.re * b.re + a.im * b.im;
  const std::int64_t xi = a.im * b.re - a.re * b.im;
  auto round_q = [n](std::int64_t x) {
    const std::int64_t twice = 2 * x + n;
    const std::int64_t den = 2 * n;
    std::int64_t q = twice / den;
    if ((twice % den != 0) && ((twice < 0) != (den < 0))) --q;
    return q;
  };
  const std::int64_t qr = round_q(xr);
  const std::int64_t qi = round_q(xi);
  return {a.re - (qr * b.re - qi * b.im), a.im - (qr * b.im + qi * b.re)};
}

G64 gauss_gcd(G64 a, G64 b) {
  while (b.re != 0 || b.im != 0) {
    const G64 r = gauss_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

std::int64_t ext_inverse(std::int64_t b, std::int64_t mod) {
  // b^-1 mod `mod` for coprime b, mod > 1.
  std::int64_t r0 = ((b % mod) + mod) % mod, r1 = mod, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_tuple(s1, s0 - q * s1);
  }
  return ((s0 % mod) + mod) % mod;
}

std::int64_t isqrt_floor(std::int64_t x) {
  if (x < 0) return -1;
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (s * s > x) --s;
  while ((s + 1) * (s + 1) <= x) ++s;
  return s;
}

}  // namespace

bool operator<(const Tri64& x, const Tri64& y) {
  return std::tie(x.qa, x.qb, x.ra, x.rb, x.pa, x.pb) < std::tie(y.qa, y.qb, y.ra, y.rb, y.pa, y.pb);
}

IntTriple Tri64::to_triple() const {
  return {GaussInt(Integer(qa), Integer(qb)), GaussInt(Integer(ra), Integer(rb)), GaussInt(Integer(pa), Integer(pb))};
}

bool coprime_triple(std::int64_t qa, std::int64_t qb, std::int64_t ra, std::int64_t rb, std::int64_t pa,
                    std::int64_t pb) {
  const G64 g = gauss_gcd(gauss_gcd({qa, qb}, {ra, rb}), {pa, pb});
  return norm64(g) == 1;
}

GaugeRegion kprime_region(double delta) {
  const double r = std::pow(2.0, -0.25) + delta;
  const double b = r * r * r * r;
  return {Rational(static_cast<long>(std::ceil(b * 1024.0)), 1024)};
}

void for_each_rational_qnorm(std::int64_t m, const GaugeRegion& region, bool lowest_terms,
                             const std::function<void(const Tri64&)>& visit) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const std::int64_t num = numerator(region.bound).convert_to<std::int64_t>();
  const std::int64_t den = denominator(region.bound).convert_to<std::int64_t>();
  // |p|^2 den <= num m
  auto in_ball = [&](std::int64_t c, std::int64_t d) { return (c * c + d * d) * den <= num * m; };
  const double R = static_cast<double>(num) / static_cast<double>(den);
  // |r|^2 <= 2 |q| |p| <= 2 m sqrt(R)
  const std::int64_t rmax = static_cast<std::int64_t>(std::sqrt(2.0 * static_cast<double>(m) * std::sqrt(R))) + 1;
  const std::int64_t pmax = static_cast<std::int64_t>(std::sqrt(R * static_cast<double>(m))) + 1;

  auto emit = [&](std::int64_t a, std::int64_t b, std::int64_t ra, std::int64_t rb, std::int64_t c, std::int64_t d) {
    const bool lowest = coprime_triple(a, b, ra, rb, c, d);
    if (lowest_terms && !lowest) return;
    visit(Tri64{a, b, ra, rb, c, d, lowest});
  };

  // Canonical q: re > 0 and im >= 0.
  std::vector<std::pair<std::int64_t, std::int64_t>> qs;
  for (std::int64_t a = 1, qmax = isqrt_floor(m); a <= qmax; ++a) {
    const std::int64_t b2 = m - a * a;
    const std::int64_t bb = isqrt_floor(b2);
    if (bb * bb == b2) qs.emplace_back(a, bb);
  }
  for (const auto& [a, b] : qs) {
    const std::int64_t g = std::gcd(a, std::abs(b));
    for (std::int64_t ra = -rmax; ra <= rmax; ++ra) {
      for (std::int64_t rb = -rmax; rb <= rmax; ++rb) {
        const std::int64_t N = ra * ra + rb * rb;
        if (N % 2 != 0) continue;
        if (N * N * den > 4 * m * m * num) continue;
        const std::int64_t X = N / 2;
        if (X % g != 0) continue;
        if (b == 0) {
          const std::int64_t c = X / a;
          for (std::int64_t d = -pmax; d <= pmax; ++d) {
            if (in_ball(c, d)) emit(a, b, ra, rb, c, d);
          }
        } else {
          // a' c + b' d = X' with a' = a/g, b' = b/g, X' = X/g.
          const std::int64_t ap = a / g, bp = b / g, Xp = X / g;
          const std::int64_t mod = std::abs(ap);
          const std::int64_t residue = mod == 1 ? 0 : ((Xp % mod + mod) % mod) * ext_inverse(bp, mod) % mod;
          const double disc = 4.0 * R * static_cast<double>(m) * static_cast<double>(m) - static_cast<double>(N) * N;
          const double half = static_cast<double>(std::abs(a)) * std::sqrt(std::max(0.0, disc)) / (2.0 * m);
          const double centre = static_cast<double>(b) * static_cast<double>(N) / (2.0 * m);
          const auto lo = static_cast<std::int64_t>(std::floor(centre - half)) - 1;
          const auto hi = static_cast<std::int64_t>(std::ceil(centre + half)) + 1;
          std::int64_t d = lo + ((residue - lo) % mod + mod) % mod;
          for (; d <= hi; d += mod) {
            const std::int64_t num_c = X - b * d;
            if (num_c % a != 0) continue;
            const std::int64_t c = num_c / a;
            if (in_ball(c, d)) emit(a, b, ra, rb, c, d);
          }
        }
      }
    }
  }
}

RationalEnumeration enumerate_rationals_qnorm(std::int64_t m, const GaugeRegion& region, bool lowest_terms) {
  RationalEnumeration out;
  out.m = m;
  out.region = region;
  out.lowest_terms = lowest_terms;
  for_each_rational_qnorm(m, region, lowest_terms, [&](const Tri64& t) { out.points.push_back(t); });
  std::sort(out.points.begin(), out.points.end());
  return out;
}

GrowthFit fit_growth(const std::vector<std::int64_t>& ms, const std::vector<std::uint64_t>& counts) {
  if (ms.size() != counts.size() || ms.size() < 2) throw std::invalid_argument("fit_growth needs two or more points");
  const std::size_t n = ms.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = std::log(static_cast<double>(ms[k]));
    const double y = std::log(static_cast<double>(std::max<std::uint64_t>(counts[k], 1)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  GrowthFit f;
  f.alpha = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  f.c_fitted = std::exp((sy - f.alpha * sx) / n);
  auto cv = [&](double alpha, double& mean_out) {
    std::vector<double> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = counts[k] / std::pow(static_cast<double>(ms[k]), alpha);
    const double mean = std::accumulate(c.begin(), c.end(), 0.0) / n;
    double var = 0;
    for (double x : c) var += (x - mean) * (x - mean);
    var /= n;
    mean_out = mean;
    return std::sqrt(var) / mean;
  };
  double mean_fit = 0;
  f.cv_fitted = cv(f.alpha, mean_fit);
  f.cv_three_halves = cv(1.5, f.c_three_halves);
  return f;
}

}  // namespace heiscf
