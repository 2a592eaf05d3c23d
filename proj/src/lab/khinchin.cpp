// SPDX-License-Identifier: Apache-2.0
#include "heiscf/lab/khinchin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "heiscf/domain.hpp"
#include "heiscf/gaussian.hpp"
#include "heiscf/kernels.hpp"
#include "heiscf/lab/enumeration.hpp"
#include "heiscf/lab/sampling.hpp"

namespace heiscf {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

// Bound for sum_{d > D} r2(d) d^(-s), D >= 1, s > 1, by partial summation with
// #{0 < |z|^2 <= x} <= pi (sqrt(x) + 1/sqrt(2))^2.
double r2_tail(double D, double s) {
  const double pi = std::numbers::pi;
  return pi * (s * std::pow(D, 1.0 - s) / (s - 1.0) + std::sqrt(2.0) * s * std::pow(D, 0.5 - s) / (s - 0.5) +
               0.5 * std::pow(D, -s));
}

void check_params(double C, double eps) {
  if (!(C > 0.0) || !(eps > 0.0)) throw std::invalid_argument("C and eps must be positive");
}

}  // namespace

double khinchin_term(std::uint64_t m, double C, double eps) {
  check_params(C, eps);
  if (m == 0) throw std::invalid_argument("m must be positive");
  const double md = static_cast<double>(m);
  const double phi4 = std::pow(C, 4) * std::pow(md, -2.0 - 2.0 * eps);
  double inner = 0.0;
  const std::uint64_t root = isqrt(m);
  if (root * root == m) inner += static_cast<double>(r2_count(m)) * std::pow(md, 1.5);
  double div = 0.0;
  for (std::uint64_t g = 1; g * g <= m; ++g) {
    if (m % (g * g) == 0) div += static_cast<double>(g) * static_cast<double>(r2_count(m / (g * g)));
  }
  inner += md * div;
  return phi4 * inner;
}

std::vector<double> khinchin_partial_sums(double C, double eps, std::uint64_t M) {
  std::vector<double> out;
  out.reserve(M);
  double s = 0.0;
  for (std::uint64_t m = 1; m <= M; ++m) {
    s += khinchin_term(m, C, eps);
    out.push_back(s);
  }
  return out;
}

double khinchin_partial_sum(double C, double eps, std::uint64_t M) {
  const auto sums = khinchin_partial_sums(C, eps, M);
  return sums.empty() ? 0.0 : sums.back();
}

double khinchin_tail_bound(double C, double eps, std::uint64_t M) {
  check_params(C, eps);
  if (M == 0) throw std::invalid_argument("M must be positive");
  if (eps <= 0.25) return std::numeric_limits<double>::infinity();
  const double c4 = std::pow(C, 4);
  const double s = 1.0 + 2.0 * eps;
  const auto L = static_cast<double>(isqrt(M));
  // Squares l^2 > M, using r2(l^2) <= 4 tau(l^2) <= 8 l.
  const double square_part = 8.0 * c4 * std::pow(L, 1.0 - 4.0 * eps) / (4.0 * eps - 1.0);
  // Pairs (g, d) with g^2 d > M.
  double pair_part = 0.0;
  const std::uint64_t G = isqrt(M);
  for (std::uint64_t g = 1; g <= G; ++g) {
    const double D = static_cast<double>(M / (g * g));
    pair_part += std::pow(static_cast<double>(g), -1.0 - 4.0 * eps) * r2_tail(D, s);
  }
  const double full = 4.0 + r2_tail(1.0, s);
  pair_part += full * std::pow(static_cast<double>(G), -4.0 * eps) / (4.0 * eps);
  return square_part + c4 * pair_part;
}

DivisorSumCheck divisor_sum_identity(std::uint64_t M, const std::vector<std::int64_t>& f) {
  if (f.size() < M + 1) throw std::invalid_argument("f must cover 1..M");
  DivisorSumCheck out;
  for (std::uint64_t m = 1; m <= M; ++m) {
    std::int64_t inner = 0;
    for (std::uint64_t g = 1; g * g <= m; ++g) {
      if (m % (g * g) == 0) inner += static_cast<std::int64_t>(g * r2_count(m / (g * g)));
    }
    out.lhs += inner * f[m];
  }
  for (std::uint64_t g = 1; g * g <= M; ++g) {
    std::int64_t inner = 0;
    for (std::uint64_t d = 1; d <= M / (g * g); ++d) {
      inner += static_cast<std::int64_t>(r2_count(d)) * f[g * g * d];
    }
    out.rhs += static_cast<std::int64_t>(g) * inner;
  }
  return out;
}

namespace {

// Samples bucketed by u on a square grid, stored cell by cell.
class SampleGrid {
 public:
  static constexpr double kExtent = 1.25;
  static constexpr double kCell = 0.05;
  static constexpr int kSide = static_cast<int>(2 * kExtent / kCell);

  explicit SampleGrid(const std::vector<kernels::Center>& pts) : start_(kSide * kSide + 1, 0) {
    std::vector<int> cell(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
      cell[k] = index(coord(pts[k].ur), coord(pts[k].ui));
      ++start_[static_cast<std::size_t>(cell[k]) + 1];
    }
    for (std::size_t c = 1; c < start_.size(); ++c) start_[c] += start_[c - 1];
    ur_.resize(pts.size());
    ui_.resize(pts.size());
    vi_.resize(pts.size());
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const std::size_t slot = fill[static_cast<std::size_t>(cell[k])]++;
      ur_[slot] = pts[k].ur;
      ui_[slot] = pts[k].ui;
      vi_[slot] = pts[k].vi;
    }
  }

  std::size_t size() const { return ur_.size(); }

  /// Marks every sample within gauge distance r of c.
  void mark(const kernels::Center& c, double r, std::vector<std::uint8_t>& hit) const {
    // d^4 >= (|du|^2/2)^2 bounds |du| by sqrt(2) r.
    const double reach = std::sqrt(2.0) * r;
    const int x0 = coord(c.ur - reach), x1 = coord(c.ur + reach);
    const int y0 = coord(c.ui - reach), y1 = coord(c.ui + reach);
    const double r4 = r * r * r * r;
    for (int x = x0; x <= x1; ++x) {
      for (int y = y0; y <= y1; ++y) {
        const auto cidx = static_cast<std::size_t>(index(x, y));
        const std::size_t b = start_[cidx], e = start_[cidx + 1];
        if (b == e) continue;
        kernels::mark_within(c, ur_.data() + b, ui_.data() + b, vi_.data() + b, e - b, r4, hit.data() + b);
      }
    }
  }

 private:
  static int coord(double x) {
    const int c = static_cast<int>(std::floor((x + kExtent) / kCell));
    return std::clamp(c, 0, kSide - 1);
  }
  static int index(int x, int y) { return x * kSide + y; }

  std::vector<std::size_t> start_;
  std::vector<double> ur_, ui_, vi_;
};

}  // namespace

KhinchinReport khinchin_experiment(const KhinchinConfig& cfg) {
  check_params(cfg.C, cfg.eps);
  if (cfg.k_lo < 0 || cfg.k_hi < cfg.k_lo || cfg.k_hi > 20) throw std::invalid_argument("bad dyadic range");
  if (cfg.samples == 0) throw std::invalid_argument("samples must be positive");

  KhinchinReport rep;
  rep.config = cfg;
  const DirichletDomain domain;
  const DoubleBackend::Context ctx;

  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (cfg.samples + kChunk - 1) / kChunk;
  std::vector<kernels::Center> pts(cfg.samples);
  std::vector<std::uint64_t> attempts(chunks, 0);
  parallel_for(chunks, cfg.threads, [&](std::size_t ci) {
    Rng rng(derive_seed(cfg.seed, ci));
    const std::size_t end = std::min(cfg.samples, (ci + 1) * kChunk);
    for (std::size_t k = ci * kChunk; k < end; ++k) {
      const auto h = sample_K<DoubleBackend>(rng, domain, ctx, &attempts[ci]);
      pts[k] = {h.u().re, h.u().im, h.v().im};
    }
  });
  for (auto a : attempts) rep.attempts += a;
  rep.acceptance = static_cast<double>(cfg.samples) / static_cast<double>(rep.attempts);
  const SampleGrid grid(pts);

  for (int k = cfg.k_lo; k <= cfg.k_hi; ++k) {
    KhinchinRange r;
    r.k = k;
    r.m_lo = std::uint64_t{1} << k;
    r.m_hi = std::uint64_t{1} << (k + 1);
    const std::size_t count = r.m_hi - r.m_lo;
    std::vector<std::uint8_t> low(grid.size(), 0), any(grid.size(), 0);
    // Batches bound the memory held by per-m hit masks.
    constexpr std::size_t kBatch = 32;
    for (std::size_t b0 = 0; b0 < count; b0 += kBatch) {
      const std::size_t nb = std::min(kBatch, count - b0);
      std::vector<std::vector<std::uint8_t>> hit_low(nb), hit_any(nb);
      std::vector<std::uint64_t> n_low(nb, 0), n_any(nb, 0);
      parallel_for(nb, cfg.threads, [&](std::size_t j) {
        const std::uint64_t m = r.m_lo + b0 + j;
        const double md = static_cast<double>(m);
        const double phi = cfg.C * std::pow(md, -(1.0 + cfg.eps) / 2.0);
        hit_low[j].assign(grid.size(), 0);
        hit_any[j].assign(grid.size(), 0);
        for_each_rational_qnorm(static_cast<std::int64_t>(m), kprime_region(phi), false, [&](const Tri64& t) {
          // (r/q, p/q), with Im(p/q) = Im(p conj q)/m
          const kernels::Center c{static_cast<double>(t.ra * t.qa + t.rb * t.qb) / md,
                                  static_cast<double>(t.rb * t.qa - t.ra * t.qb) / md,
                                  static_cast<double>(t.pb * t.qa - t.pa * t.qb) / md};
          ++n_any[j];
          grid.mark(c, phi, hit_any[j]);
          if (t.lowest) {
            ++n_low[j];
            grid.mark(c, phi, hit_low[j]);
          }
        });
      });
      for (std::size_t j = 0; j < nb; ++j) {
        r.rationals_lowest += n_low[j];
        r.rationals_any += n_any[j];
        for (std::size_t s = 0; s < grid.size(); ++s) {
          low[s] |= hit_low[j][s];
          any[s] |= hit_any[j][s];
        }
      }
    }
    for (std::size_t s = 0; s < grid.size(); ++s) {
      r.hits_lowest += low[s];
      r.hits_any += any[s];
    }
    r.frac_lowest = static_cast<double>(r.hits_lowest) / static_cast<double>(grid.size());
    r.frac_any = static_cast<double>(r.hits_any) / static_cast<double>(grid.size());
    rep.ranges.push_back(r);
  }
  rep.decreasing_lowest = rep.decreasing_any = true;
  for (std::size_t i = 1; i < rep.ranges.size(); ++i) {
    if (!(rep.ranges[i].frac_lowest < rep.ranges[i - 1].frac_lowest)) rep.decreasing_lowest = false;
    if (!(rep.ranges[i].frac_any < rep.ranges[i - 1].frac_any)) rep.decreasing_any = false;
  }
  return rep;
}

}  // namespace heiscf
