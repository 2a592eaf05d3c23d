// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <algorithm>
#include <cmath>

#include "heiscf/lab/random.hpp"
#include "heiscf/lab/suites.hpp"

namespace heiscf::cli {

using nlohmann::ordered_json;

namespace {

constexpr double kRefRk = 6726.7;
constexpr double kRefRadRk = 5656.5;
constexpr double kRefMaxC = 1.26;
constexpr double kRefRelsizeLo = 0.35;
constexpr double kRefRelsizeHi = 3.38;

ApproxBounds default_bounds() {
  const double rad = DirichletDomain::radius();
  return {rk_constant(rad), rad};
}

std::size_t opt_or(const std::optional<std::size_t>& x, std::size_t def) { return x ? *x : def; }

// JSON has no infinities; NaN and inf become null.
ordered_json num(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

ordered_json header(const RunConfig& cfg) {
  ordered_json j;
  j["command"] = cfg.command;
  j["version"] = kVersion;
  return j;
}

ordered_json stats_json(const FieldStats& s) {
  ordered_json j;
  j["count"] = s.count;
  j["min"] = num(s.count ? s.min : NAN);
  j["max"] = num(s.count ? s.max : NAN);
  j["mean"] = num(s.count ? s.mean() : NAN);
  return j;
}

std::string stats_line(const std::string& name, const FieldStats& s) {
  return name + ": min " + fmt(s.min) + "  max " + fmt(s.max) + "  mean " + fmt(s.mean()) +
         "  (n=" + std::to_string(s.count) + ")";
}

template <class B>
ordered_json expansion_json(const CFExpansion<B>& e) {
  ordered_json j;
  j["gamma0"] = to_string(e.gamma0);
  ordered_json digits = ordered_json::array();
  for (const auto& d : e.digits) digits.push_back(to_string(d));
  j["digits"] = digits;
  ordered_json convs = ordered_json::array();
  for (const auto& c : e.convergents) convs.push_back(to_string(c));
  j["convergents"] = convs;
  j["depth"] = e.depth();
  j["terminated"] = e.terminated;
  j["depth_exhausted"] = e.depth_exhausted;
  j["noise_floor"] = e.noise_floor;
  unsigned esc = 0;
  for (const auto& c : e.certificates) esc = std::max(esc, c.escalations);
  j["max_escalations"] = esc;
  return j;
}

template <class B>
void expansion_output(const CFExpansion<B>& e, CommandOutput& out) {
  auto j = expansion_json(e);
  for (auto& [k, v] : j.items()) out.report[k] = v;
  out.table.header = {"n", "digit", "convergent"};
  out.table.rows.push_back({"0", to_string(e.gamma0), to_string(e.convergents[0])});
  out.text.push_back("gamma0 = " + to_string(e.gamma0));
  out.text.push_back("n=0  conv " + to_string(e.convergents[0]));
  for (std::size_t i = 0; i < e.digits.size(); ++i) {
    out.table.rows.push_back({std::to_string(i + 1), to_string(e.digits[i]), to_string(e.convergents[i + 1])});
    out.text.push_back("n=" + std::to_string(i + 1) + "  digit " + to_string(e.digits[i]) + "  conv " +
                       to_string(e.convergents[i + 1]));
  }
  std::string status = e.terminated ? "terminated" : "depth exhausted";
  if (e.noise_floor) status += " (iterate below working precision)";
  out.text.push_back("depth " + std::to_string(e.depth()) + ", " + status);
}

void require_one_point(const RunConfig& cfg) {
  if (cfg.point && cfg.heis) throw UsageError("--point and --heis are mutually exclusive");
}

ordered_json suite_json(const IdentitySuiteResult& r) {
  ordered_json j;
  j["backend"] = r.backend;
  j["fixtures"] = r.fixtures;
  j["max_depth"] = r.max_depth;
  j["max_q"] = num(r.max_q);
  j["checked"] = r.checked();
  j["failed"] = r.failed();
  ordered_json t = ordered_json::array();
  for (const auto& x : r.tallies) {
    t.push_back(
        {{"id", x.id}, {"checked", x.checked}, {"failed", x.failed}, {"max_rel_residual", num(x.max_rel_residual)}});
  }
  j["identities"] = t;
  j["bounds_checked"] = r.approx_checked;
  j["bound_violations"] = r.approx_violations;
  j["certification_failures"] = r.certification_failures;
  j["failures"] = r.failures;
  j["pass"] = r.pass();
  return j;
}

void suite_text(const IdentitySuiteResult& r, CommandOutput& out) {
  out.text.push_back("[" + r.backend + "] " + std::to_string(r.fixtures) + " points, max depth " +
                     std::to_string(r.max_depth) + ", max |q| " + fmt(r.max_q));
  for (const auto& x : r.tallies) {
    out.text.push_back("  " + x.id + ": " + std::to_string(x.checked) + " checked, " + std::to_string(x.failed) +
                       " failed, max residual/scale " + fmt(x.max_rel_residual, 3));
    out.table.rows.push_back(
        {r.backend, x.id, std::to_string(x.checked), std::to_string(x.failed), fmt(x.max_rel_residual, 6)});
  }
  if (r.approx_checked) {
    out.text.push_back("  comparability bounds: " + std::to_string(r.approx_checked) + " checked, " +
                       std::to_string(r.approx_violations) + " violated");
  }
  if (r.certification_failures) {
    out.text.push_back("  certification failures: " + std::to_string(r.certification_failures));
  }
  for (const auto& f : r.failures) out.text.push_back("  ! " + f);
}

ordered_json comparison_json(const ComparisonReport& p) {
  ordered_json j;
  j["n"] = p.n;
  j["q_abs"] = num(p.q_abs);
  j["d_n"] = num(p.d_n);
  j["v_n_abs"] = num(p.v_n_abs);
  j["stated_bound"] = num(p.stated_bound);
  j["proof_bound"] = num(p.proof_bound);
  j["relsize_step_holds"] = p.relsize_step_holds;
  j["kappa"] = num(p.kappa);
  j["exterior_certified"] = p.exterior_certified;
  j["candidates"] = p.candidates;
  j["min_s"] = num(p.min_s);
  j["min_s_over_stated"] = num(p.min_s_over_stated);
  j["stated_violations"] = p.stated_violations;
  j["display_violations"] = p.display_violations;
  j["triangle_violations"] = p.triangle_violations;
  j["decomposition_mismatches"] = p.decomposition_mismatches;
  j["smaller_q_threshold"] = num(p.smaller_q_threshold);
  j["smaller_q_vacuous"] = p.smaller_q_vacuous;
  j["smaller_q_checked"] = p.smaller_q_checked;
  j["smaller_q_violations"] = p.smaller_q_violations;
  j["closer_with_smaller_q"] = p.closer_with_smaller_q;
  j["next_x1"] = num(p.next_x1);
  j["next_x2"] = num(p.next_x2);
  ordered_json v = ordered_json::array();
  for (std::size_t i = 0; i < std::min(p.violations.size(), kMaxLoggedViolations); ++i) {
    v.push_back({{"kind", p.violations[i].kind}, {"message", p.violations[i].message}});
  }
  j["violations"] = v;
  return j;
}

void comparison_text(const ComparisonReport& p, CommandOutput& out) {
  out.text.push_back("convergent n=" + std::to_string(p.n) + "  |q_n| " + fmt(p.q_abs) + "  d_n " + fmt(p.d_n));
  out.text.push_back("  candidates " + std::to_string(p.candidates) + ", kappa " + fmt(p.kappa, 4) +
                     (p.exterior_certified ? " (exterior certified)" : " (exterior not certified)"));
  out.text.push_back("  stated bound " + fmt(p.stated_bound) + ", min s " + fmt(p.min_s) + ", ratio " +
                     fmt(p.min_s_over_stated));
  out.text.push_back("  violations: stated " + std::to_string(p.stated_violations) + ", display " +
                     std::to_string(p.display_violations) + ", triangle " + std::to_string(p.triangle_violations) +
                     ", decomposition " + std::to_string(p.decomposition_mismatches));
  out.text.push_back("  smaller-denominator check: threshold " + fmt(p.smaller_q_threshold) +
                     (p.smaller_q_vacuous ? " (vacuous)" : "") + ", " + std::to_string(p.smaller_q_checked) +
                     " checked, " + std::to_string(p.smaller_q_violations) + " violated");
  for (std::size_t i = 0; i < std::min<std::size_t>(p.violations.size(), 10); ++i) {
    out.text.push_back("  ! " + p.violations[i].kind + ": " + p.violations[i].message);
  }
}

template <class B>
void bestapprox_point(const RunConfig& cfg, const CFExpansion<B>& e, const SiegelPoint<B>& h, CommandOutput& out) {
  const double bound = cfg.bound.value_or(200.0);
  const auto best = best_approx_search(h, bound);
  out.report["bound"] = bound;
  out.report["best"] = {
      {"point", to_string(best.point)}, {"distance", num(best.distance)}, {"candidates", best.candidates}};
  out.text.push_back("best approximation with |Q| <= " + fmt(bound) + ": " + to_string(best.point) + "  d " +
                     fmt(best.distance) + "  (" + std::to_string(best.candidates) + " candidates)");
  out.table.header = {"field", "value"};
  out.table.rows.push_back({"best", to_string(best.point)});
  out.table.rows.push_back({"best_distance", fmt(best.distance, 12)});

  const auto ctx = h.context();
  std::optional<std::size_t> n;
  for (std::size_t k = 0; k + 1 <= e.depth(); ++k) {
    if (std::sqrt(B::to_double(norm(B::from_gauss(e.convergents[k].q(), ctx)))) <= bound) n = k;
  }
  if (!n) {
    out.report["prop"] = nullptr;
    out.text.push_back("no convergent with |q_n| <= bound and a successor; comparison skipped");
    return;
  }
  const auto& conv = e.convergents[*n];
  const bool is_best = conv == best.point;
  const auto rep = compare_convergent(e, *n, 4.0, default_bounds());
  out.report["convergent"] = to_string(conv);
  out.report["convergent_is_best"] = is_best;
  out.report["prop"] = comparison_json(rep);
  out.text.push_back("convergent " + to_string(conv) + (is_best ? " is" : " is not") + " the best approximation");
  comparison_text(rep, out);
  out.table.rows.push_back({"convergent", to_string(conv)});
  out.table.rows.push_back({"convergent_is_best", is_best ? "true" : "false"});
  out.table.rows.push_back({"stated_violations", std::to_string(rep.stated_violations)});
  out.table.rows.push_back({"triangle_violations", std::to_string(rep.triangle_violations)});
  if (!rep.hard_pass()) out.exit_code = kViolation;
}

}  // namespace

CommandOutput cmd_constants(const RunConfig& cfg) {
  CommandOutput out;
  out.report = header(cfg);
  const double rad = DirichletDomain::radius();
  const double rk = rk_constant(rad);
  out.report["rad"] = "2^(-1/4)";
  out.report["rad_decimal"] = rad;
  out.report["rad4"] = to_string(DirichletDomain::radius4());
  out.report["rk"] = rk;
  out.report["rad_rk"] = rad * rk;
  out.report["reference"] = {{"rk", kRefRk}, {"rad_rk", kRefRadRk}};
  out.table.header = {"name", "value"};
  out.table.rows = {{"rad", fmt(rad, 17)}, {"rad4", "1/2"}, {"rk", fmt(rk, 17)}, {"rad_rk", fmt(rad * rk, 17)}};
  out.text = {"rad       = 2^(-1/4) = " + fmt(rad, 17), "rad^4     = 1/2", "R_K       = " + fmt(rk, 10),
              "rad * R_K = " + fmt(rad * rk, 10),
              "reference values: R_K ~ " + fmt(kRefRk) + ", rad * R_K ~ " + fmt(kRefRadRk)};
  return out;
}

CommandOutput cmd_expand(const RunConfig& cfg) {
  require_one_point(cfg);
  if (!cfg.point && !cfg.heis) throw UsageError("expand needs --point or --heis");
  CommandOutput out;
  out.report = header(cfg);
  const DirichletDomain domain;
  if (cfg.point) {
    const auto h = parse_planar_point(*cfg.point);
    out.report["point"] = to_string(h);
    out.report["backend"] = "exact";
    expansion_output(expand(h, domain, cfg.depth), out);
  } else {
    const PrecisionContext ctx(cfg.bits);
    const auto h = parse_heis_point(*cfg.heis, ctx);
    out.report["point"] = to_string(h, 20);
    out.report["backend"] = "bigfloat";
    out.report["bits"] = cfg.bits;
    expansion_output(expand(h, domain, std::optional<std::size_t>(opt_or(cfg.depth, 20))), out);
  }
  return out;
}

CommandOutput cmd_verify(const RunConfig& cfg) {
  const std::size_t samples = opt_or(cfg.samples, 100);
  const std::size_t depth = opt_or(cfg.depth, 15);
  CommandOutput out;
  out.report = header(cfg);
  out.report["seed"] = cfg.seed;
  out.report["samples"] = samples;
  out.report["depth"] = depth;
  out.report["bits"] = cfg.bits;
  const auto exact =
      run_exact_identity_suite(samples, std::min<std::size_t>(depth, 10), Integer(1000000), cfg.seed, cfg.threads);
  const auto big = run_bigfloat_identity_suite(samples, depth, cfg.bits, cfg.seed, cfg.threads, default_bounds());
  out.report["suites"] = ordered_json::array({suite_json(exact), suite_json(big)});
  out.table.header = {"backend", "identity", "checked", "failed", "max_rel_residual"};
  suite_text(exact, out);
  suite_text(big, out);
  const bool violated = exact.failed() || big.failed() || exact.approx_violations || big.approx_violations;
  const bool uncertified = exact.certification_failures || big.certification_failures;
  out.report["pass"] = !violated && !uncertified;
  out.text.push_back(violated ? "FAIL" : uncertified ? "UNCERTIFIED" : "all residuals pass");
  out.exit_code = violated ? kViolation : uncertified ? kCertification : kOk;
  return out;
}

CommandOutput cmd_measure(const RunConfig& cfg) {
  const std::size_t samples = opt_or(cfg.samples, 1000);
  const std::size_t depth = opt_or(cfg.depth, 15);
  CommandOutput out;
  out.report = header(cfg);
  out.report["seed"] = cfg.seed;
  out.report["samples"] = samples;
  out.report["depth"] = depth;
  out.report["bits"] = cfg.bits;
  const auto m = run_measure(samples, depth, cfg.bits, cfg.seed, cfg.threads, default_bounds());
  out.report["fixtures"] = m.fixtures;
  out.report["c_n"] = stats_json(m.c_n);
  out.report["relsize"] = stats_json(m.relsize);
  out.report["ratio_next"] = stats_json(m.ratio_next);
  out.report["ratio_current"] = stats_json(m.ratio_current);
  out.report["succ"] = stats_json(m.succ);
  out.report["reference"] = {{"max_c_n", kRefMaxC}, {"relsize_min", kRefRelsizeLo}, {"relsize_max", kRefRelsizeHi}};
  out.report["hard_violations"] = m.hard_violations;
  out.report["certification_failures"] = m.certification_failures;
  out.report["violations"] = m.violations;

  out.text.push_back(std::to_string(m.fixtures) + " points, depth " + std::to_string(depth) + ", seed " +
                     std::to_string(cfg.seed));
  out.text.push_back(stats_line("d_n |q_n|      ", m.c_n));
  out.text.push_back(stats_line("relsize        ", m.relsize));
  out.text.push_back(stats_line("ratio (v_n+1)  ", m.ratio_next));
  out.text.push_back(stats_line("ratio (v_n)    ", m.ratio_current));
  out.text.push_back(stats_line("successive     ", m.succ));
  out.text.push_back("reference value: max d_n |q_n| " + fmt(kRefMaxC) + ", relsize range [" + fmt(kRefRelsizeLo) +
                     ", " + fmt(kRefRelsizeHi) + "]");
  out.text.push_back("hard bound violations: " + std::to_string(m.hard_violations) +
                     ", certification failures: " + std::to_string(m.certification_failures));
  for (std::size_t i = 0; i < std::min<std::size_t>(m.violations.size(), 10); ++i)
    out.text.push_back("! " + m.violations[i]);

  out.table.header = {"n", "count", "c_min", "c_max", "c_mean", "relsize_min", "relsize_max", "relsize_mean"};
  for (std::size_t n = 0; n < m.c_by_n.size(); ++n) {
    const auto& c = m.c_by_n[n];
    const auto& r = m.relsize_by_n[n];
    if (!c.count) continue;
    out.table.rows.push_back({std::to_string(n), std::to_string(c.count), fmt(c.min), fmt(c.max), fmt(c.mean()),
                              fmt(r.min), fmt(r.max), fmt(r.mean())});
  }
  out.exit_code = m.hard_violations ? kViolation : m.certification_failures ? kCertification : kOk;
  return out;
}

CommandOutput cmd_bestapprox(const RunConfig& cfg) {
  require_one_point(cfg);
  CommandOutput out;
  out.report = header(cfg);
  const DirichletDomain domain;
  if (cfg.point) {
    const auto h = parse_planar_point(*cfg.point);
    out.report["point"] = to_string(h);
    const auto e = expand(h, domain, cfg.depth);
    bestapprox_point(cfg, e, h, out);
    return out;
  }
  if (cfg.heis) {
    const PrecisionContext ctx(cfg.bits);
    const auto h = parse_heis_point(*cfg.heis, ctx);
    out.report["point"] = to_string(h, 20);
    out.report["bits"] = cfg.bits;
    const auto e = expand(h, domain, std::optional<std::size_t>(opt_or(cfg.depth, 20)));
    bestapprox_point(cfg, e, h, out);
    return out;
  }

  const std::size_t samples = opt_or(cfg.samples, 50);
  const std::size_t depth = opt_or(cfg.depth, 20);
  const double q_max = cfg.bound.value_or(200.0);
  const auto r = run_bestapprox_suite(samples, depth, cfg.bits, q_max, 4.0, cfg.seed, cfg.threads, default_bounds());
  out.report["seed"] = cfg.seed;
  out.report["samples"] = samples;
  out.report["depth"] = depth;
  out.report["bits"] = cfg.bits;
  out.report["bound"] = q_max;
  out.report["candidates"] = r.candidates;
  out.report["stated_violations"] = r.stated_violations;
  out.report["display_violations"] = r.display_violations;
  out.report["triangle_violations"] = r.triangle_violations;
  out.report["decomposition_mismatches"] = r.decomposition_mismatches;
  out.report["smaller_q_checked"] = r.smaller_q_checked;
  out.report["smaller_q_violations"] = r.smaller_q_violations;
  out.report["smaller_q_vacuous"] = r.smaller_q_vacuous;
  out.report["exterior_certified"] = r.exterior_certified;
  out.report["relsize_step_failures"] = r.relsize_step_failures;
  out.report["convergent_is_best"] = r.convergent_is_best;
  out.report["search_failures"] = r.search_failures;
  out.report["certification_failures"] = r.certification_failures;
  ordered_json fx = ordered_json::array();
  out.table.header = {
      "fixture",          "n", "q_abs", "d_n", "best_distance", "convergent_is_best", "candidates", "min_s_over_stated",
      "stated_violations"};
  for (std::size_t i = 0; i < r.fixtures.size(); ++i) {
    const auto& f = r.fixtures[i];
    fx.push_back({{"n", f.n},
                  {"q_abs", num(f.q_abs)},
                  {"d_n", num(f.d_n)},
                  {"best_distance", num(f.best_distance)},
                  {"convergent_is_best", f.convergent_is_best},
                  {"prop", comparison_json(f.prop)}});
    out.table.rows.push_back({std::to_string(i), std::to_string(f.n), fmt(f.q_abs), fmt(f.d_n), fmt(f.best_distance),
                              f.convergent_is_best ? "true" : "false", std::to_string(f.prop.candidates),
                              fmt(f.prop.min_s_over_stated), std::to_string(f.prop.stated_violations)});
  }
  out.report["fixtures"] = fx;
  ordered_json v = ordered_json::array();
  for (const auto& x : r.violations) v.push_back({{"kind", x.kind}, {"message", x.message}});
  out.report["violations"] = v;
  out.report["pass"] = r.hard_pass();

  out.text.push_back(std::to_string(r.fixtures.size()) + " fixtures with |q_n| <= " + fmt(q_max) + ", " +
                     std::to_string(r.candidates) + " candidates, seed " + std::to_string(cfg.seed));
  out.text.push_back("convergent is the best approximation: " + std::to_string(r.convergent_is_best) + "/" +
                     std::to_string(r.fixtures.size()));
  out.text.push_back("smaller-denominator check: " + std::to_string(r.smaller_q_checked) + " checked, " +
                     std::to_string(r.smaller_q_violations) + " violated, vacuous for " +
                     std::to_string(r.smaller_q_vacuous) + " fixtures");
  out.text.push_back("stated inequality violations: " + std::to_string(r.stated_violations));
  out.text.push_back("display inequality violations: " + std::to_string(r.display_violations));
  out.text.push_back("triangle inequality violations: " + std::to_string(r.triangle_violations) +
                     ", decomposition mismatches: " + std::to_string(r.decomposition_mismatches));
  out.text.push_back("exterior certified: " + std::to_string(r.exterior_certified) + "/" +
                     std::to_string(r.fixtures.size()) +
                     ", relsize step failures: " + std::to_string(r.relsize_step_failures));
  for (std::size_t i = 0; i < std::min<std::size_t>(r.violations.size(), 20); ++i) {
    out.text.push_back("! " + r.violations[i].kind + ": " + r.violations[i].message);
  }
  out.exit_code = r.hard_pass() ? kOk : kViolation;
  return out;
}

CommandOutput cmd_count(const RunConfig& cfg) {
  const std::int64_t m_max = cfg.m_max.value_or(200);
  if (m_max < 1) throw UsageError("--m-max must be positive");
  CommandOutput out;
  out.report = header(cfg);
  const auto region = kprime_region(cfg.bigc);
  const auto r = run_count(m_max, region, cfg.threads);
  out.report["m_max"] = m_max;
  out.report["bigc"] = cfg.bigc;
  out.report["gauge_bound4"] = to_string(region.bound);
  ordered_json rows = ordered_json::array();
  out.table.header = {"m", "lowest", "any", "naive_any", "equal"};
  std::size_t mismatches = 0;
  for (const auto& row : r.rows) {
    rows.push_back(
        {{"m", row.m}, {"lowest", row.lowest}, {"any", row.any}, {"naive_any", row.naive_any}, {"equal", row.equal}});
    out.table.rows.push_back({std::to_string(row.m), std::to_string(row.lowest), std::to_string(row.any),
                              std::to_string(row.naive_any), row.equal ? "true" : "false"});
    if (!row.equal) {
      ++mismatches;
      out.text.push_back("! m=" + std::to_string(row.m) + ": structured " + std::to_string(row.any) + ", naive " +
                         std::to_string(row.naive_any));
    }
  }
  out.report["rows"] = rows;
  out.report["all_equal"] = r.all_equal;
  auto fit_json = [](const GrowthFit& f) {
    return ordered_json{{"alpha", num(f.alpha)},
                        {"c_fitted", num(f.c_fitted)},
                        {"cv_fitted", num(f.cv_fitted)},
                        {"c_three_halves", num(f.c_three_halves)},
                        {"cv_three_halves", num(f.cv_three_halves)}};
  };
  out.report["square_ms"] = r.square_ms;
  out.report["fit_any"] = r.square_ms.size() >= 2 ? fit_json(r.fit_any) : ordered_json(nullptr);
  out.report["fit_lowest"] = r.square_ms.size() >= 2 ? fit_json(r.fit_lowest) : ordered_json(nullptr);

  out.text.insert(out.text.begin(), "m = 1.." + std::to_string(m_max) + ", gauge^4 <= " + to_string(region.bound) +
                                        ": structured = naive for " + std::to_string(r.rows.size() - mismatches) + "/" +
                                        std::to_string(r.rows.size()) + " values of m");
  if (r.square_ms.size() >= 2) {
    out.text.push_back("square m: fitted exponent " + fmt(r.fit_lowest.alpha, 4) + " (lowest terms), " +
                       fmt(r.fit_any.alpha, 4) + " (any)");
    out.text.push_back("count / m^(3/2): mean " + fmt(r.fit_lowest.c_three_halves, 4) + ", coefficient of variation " +
                       fmt(r.fit_lowest.cv_three_halves, 4) + " (lowest terms)");
  }
  out.exit_code = r.all_equal ? kOk : kViolation;
  return out;
}

CommandOutput cmd_khinchin(const RunConfig& cfg) {
  if (cfg.m_max && *cfg.m_max < 1) throw UsageError("--m-max must be positive");
  const auto M = static_cast<std::uint64_t>(cfg.m_max.value_or(10000));
  if (!(cfg.epsilon > 0)) throw UsageError("--epsilon must be positive");
  if (!(cfg.bigc > 0)) throw UsageError("--bigc must be positive");
  CommandOutput out;
  out.report = header(cfg);
  out.report["seed"] = cfg.seed;
  out.report["bigc"] = cfg.bigc;
  out.report["epsilon"] = cfg.epsilon;

  const auto s = run_khinchin_sums(cfg.bigc, cfg.epsilon, M, cfg.seed);
  ordered_json cps = ordered_json::array();
  for (const auto& [m, v] : s.checkpoints) cps.push_back({{"m", m}, {"partial", num(v)}});
  const double rel_tail = s.tail_bound / s.partial;
  out.report["sums"] = {{"M", s.M},
                        {"partial", num(s.partial)},
                        {"tail_bound", num(s.tail_bound)},
                        {"tail_over_partial", num(rel_tail)},
                        {"last_increment", num(s.last_increment)},
                        {"monotone", s.monotone},
                        {"nonnegative", s.nonnegative},
                        {"identity_lhs", s.identity.lhs},
                        {"identity_rhs", s.identity.rhs},
                        {"checkpoints", cps}};
  out.text.push_back("partial sum S(" + std::to_string(M) + ") = " + fmt(s.partial, 10) + ", tail bound " +
                     fmt(s.tail_bound, 4) + " (" + fmt(rel_tail, 3) + " of the partial sum)");
  out.text.push_back(std::string("monotone: ") + (s.monotone ? "yes" : "no") +
                     ", divisor identity: " + (s.identity.lhs == s.identity.rhs ? "holds" : "FAILS"));

  KhinchinConfig kc;
  kc.C = cfg.bigc;
  kc.eps = cfg.epsilon;
  kc.samples = opt_or(cfg.samples, 1000000);
  kc.seed = cfg.seed;
  kc.threads = cfg.threads;
  ordered_json ranges = ordered_json::array();
  out.table.header = {"k",           "m_lo",     "m_hi",        "rationals_lowest", "rationals_any",
                      "hits_lowest", "hits_any", "frac_lowest", "frac_any"};
  if (kc.samples > 0) {
    const auto rep = khinchin_experiment(kc);
    out.text.push_back("experiment: " + std::to_string(kc.samples) + " samples, acceptance " + fmt(rep.acceptance, 4));
    for (const auto& r : rep.ranges) {
      ranges.push_back({{"k", r.k},
                        {"m_lo", r.m_lo},
                        {"m_hi", r.m_hi},
                        {"rationals_lowest", r.rationals_lowest},
                        {"rationals_any", r.rationals_any},
                        {"hits_lowest", r.hits_lowest},
                        {"hits_any", r.hits_any},
                        {"frac_lowest", num(r.frac_lowest)},
                        {"frac_any", num(r.frac_any)}});
      out.table.rows.push_back({std::to_string(r.k), std::to_string(r.m_lo), std::to_string(r.m_hi),
                                std::to_string(r.rationals_lowest), std::to_string(r.rationals_any),
                                std::to_string(r.hits_lowest), std::to_string(r.hits_any), fmt(r.frac_lowest),
                                fmt(r.frac_any)});
      out.text.push_back("  k=" + std::to_string(r.k) + "  |q|^2 in [" + std::to_string(r.m_lo) + ", " +
                         std::to_string(r.m_hi) + ")  fraction " + fmt(r.frac_lowest) + " (lowest terms), " +
                         fmt(r.frac_any) + " (any)");
    }
    out.report["experiment"] = {{"samples", kc.samples},
                                {"attempts", rep.attempts},
                                {"acceptance", num(rep.acceptance)},
                                {"ranges", ranges},
                                {"decreasing_lowest", rep.decreasing_lowest},
                                {"decreasing_any", rep.decreasing_any}};
    out.text.push_back(std::string("decreasing in k: ") + (rep.decreasing_lowest ? "yes" : "no") + " (lowest terms), " +
                       (rep.decreasing_any ? "yes" : "no") + " (any)");
  } else {
    out.report["experiment"] = nullptr;
  }
  const bool ok = s.monotone && s.nonnegative && s.identity.lhs == s.identity.rhs;
  out.exit_code = ok ? kOk : kViolation;
  return out;
}

}  // namespace heiscf::cli
