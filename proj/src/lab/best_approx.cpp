// SPDX-License-Identifier: Apache-2.0
#include "heiscf/lab/best_approx.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

namespace heiscf {

namespace {

std::int64_t isqrt_floor(std::int64_t n) {
  if (n <= 0) return 0;
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

std::int64_t isqrt_ceil(std::int64_t n) {
  if (n <= 0) return 0;
  const std::int64_t s = isqrt_floor(n);
  return s * s == n ? s : s + 1;
}

// s a + t b = gcd(a, b) >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return r0;
}

struct Q64 {
  std::int64_t a, b, n;
};

void visit_q(const NearCenter& h, const Q64& q, double D, const std::function<void(const Tri64&)>& visit) {
  constexpr double kRel = 1e-9;
  constexpr double kAbs = 1e-12;
  const double qabs = std::sqrt(static_cast<double>(q.n));
  const double rho = std::sqrt(2.0) * D * qabs * (1 + kRel) + kAbs;
  const double D2 = D * D * (1 + kRel) + kAbs;
  const double cx = static_cast<double>(q.a) * h.ur - static_cast<double>(q.b) * h.ui;
  const double cy = static_cast<double>(q.a) * h.ui + static_cast<double>(q.b) * h.ur;
  std::int64_t s = 0, t = 0;
  const std::int64_t g = ext_gcd(q.a, q.b, s, t);
  // P = P0 + k (-b, a)/g solves a Re P + b Im P = X.
  const std::int64_t sa = -q.b / g, sb = q.a / g;
  const std::int64_t step_num = q.n / g;
  const auto nd = static_cast<long double>(q.n);

  for (auto ra = static_cast<std::int64_t>(std::ceil(cx - rho)); ra <= static_cast<std::int64_t>(std::floor(cx + rho));
       ++ra) {
    const double dx = static_cast<double>(ra) - cx;
    const double rem = rho * rho - dx * dx;
    if (rem < 0) continue;
    const double w = std::sqrt(rem);
    for (auto rb = static_cast<std::int64_t>(std::ceil(cy - w)); rb <= static_cast<std::int64_t>(std::floor(cy + w));
         ++rb) {
      const std::int64_t x2 = ra * ra + rb * rb;
      if (x2 % 2 != 0) continue;
      const std::int64_t X = x2 / 2;
      if (X % g != 0) continue;
      std::int64_t pa = s * (X / g), pb = t * (X / g);
      // Im(P / Q) = num / n with num = Im(P conj Q).
      std::int64_t num = pb * q.a - pa * q.b;
      const long double uxp = static_cast<long double>(ra * q.a + rb * q.b) / nd;
      const long double uyp = static_cast<long double>(rb * q.a - ra * q.b) / nd;
      const long double y = h.vi - (uxp * h.ui - uyp * h.ur);
      const auto k0 = static_cast<std::int64_t>(std::floor((y * nd - num) / static_cast<long double>(step_num)));
      pa += k0 * sa;
      pb += k0 * sb;
      num += k0 * step_num;
      const long double t0 = static_cast<long double>(num) / nd;
      const auto k_lo = static_cast<std::int64_t>(std::ceil((y - D2 - t0) * g));
      const auto k_hi = static_cast<std::int64_t>(std::floor((y + D2 - t0) * g));
      for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        const std::int64_t c = pa + k * sa, d = pb + k * sb;
        if (!coprime_triple(q.a, q.b, ra, rb, c, d)) continue;
        visit(Tri64{q.a, q.b, ra, rb, c, d, true});
      }
    }
  }
}

}  // namespace

void for_each_rational_near(const NearCenter& h, std::int64_t q_norm_max, const std::function<double()>& radius,
                            const std::function<void(const Tri64&)>& visit) {
  constexpr std::int64_t kShell = 4096;
  std::vector<Q64> qs;
  for (std::int64_t lo = 1; lo <= q_norm_max; lo += kShell) {
    const std::int64_t hi = std::min(q_norm_max, lo + kShell - 1);
    qs.clear();
    // Canonical Q: re > 0 and im >= 0.
    for (std::int64_t a = 1; a * a <= hi; ++a) {
      const std::int64_t b_lo = isqrt_ceil(lo - a * a), b_hi = isqrt_floor(hi - a * a);
      for (std::int64_t b = b_lo; b <= b_hi; ++b) qs.push_back({a, b, a * a + b * b});
    }
    std::sort(qs.begin(), qs.end(),
              [](const Q64& x, const Q64& y) { return std::tie(x.n, x.a, x.b) < std::tie(y.n, y.a, y.b); });
    for (const Q64& q : qs) {
      const double D = radius();
      if (D > 0) visit_q(h, q, D, visit);
    }
  }
}

bool triple_less(const IntTriple& x, const IntTriple& y) {
  return std::tie(x.q.re(), x.q.im(), x.r.re(), x.r.im(), x.p.re(), x.p.im()) <
         std::tie(y.q.re(), y.q.im(), y.r.re(), y.r.im(), y.p.re(), y.p.im());
}

}  // namespace heiscf
