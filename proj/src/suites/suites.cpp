// SPDX-License-Identifier: Apache-2.0
#include "heiscf/lab/suites.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "heiscf/lab/approx.hpp"
#include "heiscf/lab/identities.hpp"
#include "heiscf/lab/sampling.hpp"
#include "heiscf/oracle/naive_enumeration.hpp"

namespace heiscf {

namespace {

void log_capped(std::vector<std::string>& log, std::string msg) {
  if (log.size() < kMaxLoggedViolations) log.push_back(std::move(msg));
}

struct SampleIdentities {
  std::vector<IdentityReport> reports;
  std::size_t depth = 0;
  double q_abs = 0.0;
  std::vector<ApproxRecord> approx;
  bool certification_failed = false;
  std::string point;
};

IdentitySuiteResult merge_identities(std::string backend, const std::vector<SampleIdentities>& samples) {
  IdentitySuiteResult out;
  out.backend = std::move(backend);
  out.fixtures = samples.size();
  std::map<std::string, IdentityTally> tallies;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (s.certification_failed) {
      ++out.certification_failures;
      log_capped(out.failures, "sample " + std::to_string(i) + ": certification failed");
      continue;
    }
    out.max_depth = std::max(out.max_depth, s.depth);
    out.max_q = std::max(out.max_q, s.q_abs);
    for (const auto& r : s.reports) {
      auto& t = tallies[r.id];
      t.id = r.id;
      ++t.checked;
      t.max_rel_residual = std::max(t.max_rel_residual, r.residual / r.scale);
      if (!r.pass) {
        ++t.failed;
        log_capped(out.failures, "sample " + std::to_string(i) + " " + s.point + ": " + r.id +
                                     " n=" + std::to_string(r.n) + " residual=" + std::to_string(r.residual));
      }
    }
    for (const auto& a : s.approx) {
      ++out.approx_checked;
      if (!a.violations.empty()) {
        ++out.approx_violations;
        for (const auto& v : a.violations) log_capped(out.failures, "sample " + std::to_string(i) + ": " + v);
      }
    }
  }
  for (auto& [id, t] : tallies) out.tallies.push_back(t);
  return out;
}

template <class B>
double last_q_abs(const CFExpansion<B>& e) {
  return std::sqrt(norm(e.convergents.back().q()).template convert_to<double>());
}

}  // namespace

std::uint64_t IdentitySuiteResult::checked() const {
  std::uint64_t n = 0;
  for (const auto& t : tallies) n += t.checked;
  return n;
}

std::uint64_t IdentitySuiteResult::failed() const {
  std::uint64_t n = 0;
  for (const auto& t : tallies) n += t.failed;
  return n;
}

IdentitySuiteResult run_exact_identity_suite(std::size_t samples, std::size_t max_len, const Integer& q_bound,
                                             std::uint64_t seed, unsigned threads) {
  const DirichletDomain domain;
  std::vector<SampleIdentities> per(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const DigitString ds = random_admissible_digits(rng, max_len, q_bound);
    const auto h = reconstruct(ds.gamma0, ds.digits);
    const auto e = expand(h, domain, std::nullopt);
    per[i].reports = verify_all(e);
    per[i].depth = e.depth();
    per[i].q_abs = last_q_abs(e);
    per[i].point = to_string(h);
  });
  return merge_identities("exact", per);
}

IdentitySuiteResult run_bigfloat_identity_suite(std::size_t samples, std::size_t depth, unsigned bits,
                                                std::uint64_t seed, unsigned threads, const ApproxBounds& bounds) {
  const DirichletDomain domain;
  const PrecisionContext ctx(bits);
  std::vector<SampleIdentities> per(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const auto h = sample_K<BigFloatBackend>(rng, domain, ctx);
    per[i].point = to_string(h, 20);
    try {
      const auto e = expand(h, domain, depth);
      per[i].reports = verify_all(e);
      per[i].depth = e.depth();
      per[i].q_abs = last_q_abs(e);
      for (std::size_t n = 0; n + 1 <= e.depth(); ++n) {
        if (e.iterates[n + 1].is_origin()) break;
        per[i].approx.push_back(approx_quality(e, n, bounds));
      }
    } catch (const CertificationError&) {
      per[i].certification_failed = true;
    }
  });
  return merge_identities("bigfloat", per);
}

void FieldStats::add(double x) {
  min = std::min(min, x);
  max = std::max(max, x);
  sum += x;
  ++count;
}

void FieldStats::merge(const FieldStats& o) {
  min = std::min(min, o.min);
  max = std::max(max, o.max);
  sum += o.sum;
  count += o.count;
}

MeasureResult run_measure(std::size_t samples, std::size_t depth, unsigned bits, std::uint64_t seed, unsigned threads,
                          const ApproxBounds& bounds) {
  const DirichletDomain domain;
  const PrecisionContext ctx(bits);
  std::vector<std::vector<ApproxRecord>> per(samples);
  std::vector<char> cert_failed(samples, 0);
  parallel_for(samples, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const auto h = sample_K<BigFloatBackend>(rng, domain, ctx);
    try {
      const auto e = expand(h, domain, depth);
      for (std::size_t n = 0; n + 1 <= e.depth(); ++n) {
        if (e.iterates[n + 1].is_origin()) break;
        per[i].push_back(approx_quality(e, n, bounds));
      }
    } catch (const CertificationError&) {
      cert_failed[i] = 1;
    }
  });
  MeasureResult out;
  out.fixtures = samples;
  out.depth = depth;
  out.c_by_n.resize(depth);
  out.relsize_by_n.resize(depth);
  for (std::size_t i = 0; i < samples; ++i) {
    if (cert_failed[i]) {
      ++out.certification_failures;
      log_capped(out.violations, "sample " + std::to_string(i) + ": certification failed");
    }
    for (const auto& r : per[i]) {
      out.c_n.add(r.c_n);
      out.relsize.add(r.relsize_n);
      out.ratio_next.add(r.ratio_next);
      out.ratio_current.add(r.ratio_current);
      if (r.n >= 1) out.succ.add(r.succ_n);
      out.c_by_n[r.n].add(r.c_n);
      out.relsize_by_n[r.n].add(r.relsize_n);
      if (!r.violations.empty()) {
        ++out.hard_violations;
        for (const auto& v : r.violations) log_capped(out.violations, "sample " + std::to_string(i) + ": " + v);
      }
    }
  }
  return out;
}

BestApproxSuiteResult run_bestapprox_suite(std::size_t samples, std::size_t depth, unsigned bits, double q_max,
                                           double a_bound, std::uint64_t seed, unsigned threads,
                                           const ApproxBounds& bounds) {
  const DirichletDomain domain;
  const PrecisionContext ctx(bits);
  std::vector<std::optional<BestApproxFixture>> per(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const auto h = sample_K<BigFloatBackend>(rng, domain, ctx);
    try {
      const auto e = expand(h, domain, depth);
      std::size_t n = 0;
      for (std::size_t k = 0; k + 1 <= e.depth(); ++k) {
        if (std::sqrt(norm(e.first_column(k).q).convert_to<double>()) <= q_max) n = k;
      }
      BestApproxFixture f;
      f.n = n;
      f.prop = compare_convergent(e, n, a_bound, bounds);
      f.q_abs = f.prop.q_abs;
      f.d_n = f.prop.d_n;
      const auto best = best_approx_search(h, f.q_abs * (1 + 1e-9));
      f.best_distance = best.distance;
      f.convergent_is_best = best.point == e.convergents[n];
      per[i] = std::move(f);
    } catch (const CertificationError&) {
    }
  });
  BestApproxSuiteResult out;
  for (std::size_t i = 0; i < samples; ++i) {
    if (!per[i]) {
      ++out.certification_failures;
      continue;
    }
    const auto& f = *per[i];
    const auto& p = f.prop;
    out.candidates += p.candidates;
    out.stated_violations += p.stated_violations;
    out.display_violations += p.display_violations;
    out.triangle_violations += p.triangle_violations;
    out.decomposition_mismatches += p.decomposition_mismatches;
    out.smaller_q_checked += p.smaller_q_checked;
    out.smaller_q_violations += p.smaller_q_violations;
    out.smaller_q_vacuous += p.smaller_q_vacuous ? 1 : 0;
    out.exterior_certified += p.exterior_certified ? 1 : 0;
    out.relsize_step_failures += p.relsize_step_holds ? 0 : 1;
    out.convergent_is_best += f.convergent_is_best ? 1 : 0;
    if (f.best_distance > f.d_n * (1 + 1e-9)) ++out.search_failures;
    for (const auto& v : p.violations) {
      if (v.kind == "display") continue;
      if (out.violations.size() < kMaxLoggedViolations)
        out.violations.push_back({v.kind, "fixture " + std::to_string(i) + " " + v.message});
    }
    out.fixtures.push_back(f);
  }
  return out;
}

CountResult run_count(std::int64_t m_max, const GaugeRegion& region, unsigned threads) {
  if (m_max < 1) throw std::invalid_argument("m_max must be positive");
  CountResult out;
  out.region = region;
  out.rows.resize(static_cast<std::size_t>(m_max));
  parallel_for(out.rows.size(), threads, [&](std::size_t i) {
    const auto m = static_cast<std::int64_t>(i) + 1;
    const auto fast = enumerate_rationals_qnorm(m, region, false);
    const auto slow = oracle::naive_enumerate_qnorm(m, region, false);
    CountRow& row = out.rows[i];
    row.m = m;
    row.any = fast.points.size();
    row.lowest = static_cast<std::uint64_t>(
        std::count_if(fast.points.begin(), fast.points.end(), [](const Tri64& t) { return t.lowest; }));
    row.naive_any = slow.points.size();
    row.equal = fast.points == slow.points;
  });
  std::vector<std::uint64_t> any, lowest;
  for (const auto& row : out.rows) {
    if (!row.equal) out.all_equal = false;
    const auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(row.m)) + 0.5);
    if (row.m >= 4 && s * s == row.m && s % 2 == 0) {
      out.square_ms.push_back(row.m);
      any.push_back(row.any);
      lowest.push_back(row.lowest);
    }
  }
  if (out.square_ms.size() >= 2) {
    out.fit_any = fit_growth(out.square_ms, any);
    out.fit_lowest = fit_growth(out.square_ms, lowest);
  }
  return out;
}

KhinchinSums run_khinchin_sums(double C, double eps, std::uint64_t M, std::uint64_t seed) {
  KhinchinSums out;
  out.C = C;
  out.eps = eps;
  out.M = M;
  const auto sums = khinchin_partial_sums(C, eps, M);
  double prev = 0.0;
  for (std::uint64_t m = 1; m <= M; ++m) {
    const double s = sums[m - 1];
    if (s < prev) out.monotone = false;
    if (s - prev < 0.0) out.nonnegative = false;
    out.last_increment = s - prev;
    prev = s;
    if ((m & (m - 1)) == 0 || m == M) out.checkpoints.emplace_back(m, s);
  }
  out.partial = M ? sums.back() : 0.0;
  out.tail_bound = khinchin_tail_bound(C, eps, M);
  const std::uint64_t N = std::min<std::uint64_t>(M, 4096);
  Rng rng(seed);
  std::vector<std::int64_t> f(N + 1, 0);
  for (std::uint64_t m = 1; m <= N; ++m) f[m] = rng.between(-1000, 1000);
  out.identity = divisor_sum_identity(N, f);
  return out;
}

RoundTripResult run_round_trip(std::size_t samples, std::size_t max_len, const Integer& q_bound, std::uint64_t seed,
                               unsigned threads) {
  const DirichletDomain domain;
  std::vector<std::optional<std::string>> bad(samples);
  std::vector<std::size_t> lens(samples, 0);
  parallel_for(samples, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const DigitString ds = random_admissible_digits(rng, max_len, q_bound);
    lens[i] = ds.digits.size();
    const auto e = expand(reconstruct(ds.gamma0, ds.digits), domain, std::nullopt);
    if (e.gamma0 == ds.gamma0 && e.digits == ds.digits) return;
    std::string msg = "string " + std::to_string(i) + ": gamma0 " + to_string(ds.gamma0) + " digits";
    for (const auto& d : ds.digits) msg += " " + to_string(d);
    msg += " came back as " + to_string(e.gamma0);
    for (const auto& d : e.digits) msg += " " + to_string(d);
    bad[i] = std::move(msg);
  });
  RoundTripResult out;
  out.strings = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    out.max_len_seen = std::max(out.max_len_seen, lens[i]);
    if (bad[i]) {
      ++out.mismatches;
      log_capped(out.log, *bad[i]);
    }
  }
  return out;
}

}  // namespace heiscf
