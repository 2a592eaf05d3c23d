// SPDX-License-Identifier: Apache-2.0
#include "heiscf/lab/sampling.hpp"

#include <algorithm>

#include "heiscf/kernels.hpp"

namespace heiscf {

BigFloat random_signed_unit(Rng& rng, const PrecisionContext& ctx) {
  const unsigned bits = ctx.bits();
  Integer m = 0;
  for (unsigned got = 0; got < bits; got += 64) m = (m << 64) + Integer(rng.next());
  const unsigned total = (bits + 63) / 64 * 64;
  // m / 2^(total-1) - 1 lies in [-1, 1).
  BigFloat x(m, PrecisionContext(total + 64));
  x = x * BigFloat::pow2(-static_cast<long>(total) + 1, PrecisionContext(total + 64)) -
      BigFloat(1L, PrecisionContext(total + 64));
  return x.with_precision(bits);
}

IntegerPoint random_integer_point(Rng& rng, int u_box, int c_box, bool allow_origin) {
  for (;;) {
    const std::int64_t a = rng.between(-u_box, u_box);
    std::int64_t b = rng.between(-u_box, u_box);
    if ((a - b) % 2 != 0) b += (b < u_box) ? 1 : -1;
    const std::int64_t c = rng.between(-c_box, c_box);
    auto g = IntegerPoint::from_u_c(GaussInt(Integer(a), Integer(b)), Integer(c));
    if (allow_origin || !g.is_origin()) return g;
  }
}

DigitString random_admissible_digits(Rng& rng, std::size_t max_len, const Integer& q_bound) {
  const DirichletDomain domain;
  const ExactBackend::Context ctx;
  const std::size_t len = static_cast<std::size_t>(rng.below(max_len + 1));
  const Integer q_bound_sq = q_bound * q_bound;
  std::vector<IntegerPoint> reversed;
  auto h = SiegelPoint<ExactBackend>::origin(ctx);
  constexpr int kAttempts = 200;
  while (reversed.size() < len) {
    bool placed = false;
    for (int attempt = 0; attempt < kAttempts && !placed; ++attempt) {
      // Mix short and long digits so that both regimes are exercised.
      const int box = rng.below(2) == 0 ? 2 : 6;
      const IntegerPoint g = random_integer_point(rng, box, 3 * box);
      const auto moved = group_mul(g.to_siegel<ExactBackend>(ctx), h);
      if (moved.v().is_zero()) continue;
      const auto prev = koranyi_inversion(moved);
      if (!domain.strictly_contains(prev)) continue;
      if (norm(planar_to_proj(prev).q()) > q_bound_sq) continue;
      reversed.push_back(g);
      h = prev;
      placed = true;
    }
    if (!placed) break;
  }
  DigitString out;
  out.gamma0 = random_integer_point(rng, 4, 8, true);
  out.digits.assign(reversed.rbegin(), reversed.rend());
  return out;
}

DigitString random_safe_digits(Rng& rng, std::size_t max_len) {
  DigitString out;
  out.gamma0 = random_integer_point(rng, 4, 8, true);
  const std::size_t len = static_cast<std::size_t>(rng.below(max_len + 1));
  for (std::size_t k = 0; k < len; ++k) {
    IntegerPoint g;
    do {
      g = random_integer_point(rng, 4, 30);
    } while (g.v().im() > -9 && g.v().im() < 9);
    out.digits.push_back(g);
  }
  return out;
}

VolumeEstimate heis_ball_volume(std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  constexpr std::uint64_t kChunk = 1 << 16;
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> inside(chunks, 0);
  parallel_for(chunks, threads, [&](std::size_t c) {
    Rng rng(derive_seed(seed, c));
    const std::size_t n = std::min<std::uint64_t>(kChunk, samples - c * kChunk);
    std::vector<double> x(n), y(n), t(n);
    for (std::size_t k = 0; k < n; ++k) {
      x[k] = rng.uniform(-1.0, 1.0);
      y[k] = rng.uniform(-1.0, 1.0);
      t[k] = rng.uniform(-1.0, 1.0);
    }
    inside[c] = kernels::count_heis_ball(x.data(), y.data(), t.data(), n);
  });
  std::uint64_t hits = 0;
  for (auto h : inside) hits += h;
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  return {8.0 * p, 8.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples)), samples};
}

}  // namespace heiscf
