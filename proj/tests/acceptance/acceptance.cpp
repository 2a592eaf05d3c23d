// SPDX-License-Identifier: Apache-2.0
// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "heiscf/lab/random.hpp"
#include "heiscf/lab/suites.hpp"

namespace {

using namespace heiscf;

struct Outcome {
  bool pass = false;
  std::string detail;
};

const ApproxBounds kBounds{rk_constant(DirichletDomain::radius()), DirichletDomain::radius()};
const unsigned kThreads = default_threads();

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

Outcome constants() {
  const double rad = DirichletDomain::radius();
  const double rk = rk_constant(rad);
  const bool rad_ok = DirichletDomain::radius4() == Rational(1, 2) && rad == std::pow(2.0, -0.25);
  const bool pass = rad_ok && std::abs(rk - 6726.7) <= 0.5 && std::abs(rad * rk - 5656.5) <= 0.5;
  return {pass, "rad^4 = 1/2, R_K = " + fmt(rk) + ", rad R_K = " + fmt(rad * rk)};
}

double worst_residual(const IdentitySuiteResult& r) {
  double w = 0;
  for (const auto& t : r.tallies) w = std::max(w, t.max_rel_residual);
  return w;
}

Outcome exact_identities() {
  const auto r = run_exact_identity_suite(1000, 10, Integer(1000000), 1, kThreads);
  const bool pass = r.pass() && worst_residual(r) == 0.0 && r.fixtures == 1000;
  return {pass,
          std::to_string(r.checked()) + " checks, " + std::to_string(r.failed()) + " nonzero, max |q| " + fmt(r.max_q)};
}

Outcome bigfloat_identities() {
  const auto r = run_bigfloat_identity_suite(200, 20, 512, 2, kThreads, kBounds);
  const bool pass = r.pass() && worst_residual(r) <= std::ldexp(1.0, -256);
  return {pass, std::to_string(r.checked()) + " identity checks, " + std::to_string(r.failed()) + " failed, " +
                    std::to_string(r.approx_checked) + " bound checks, " + std::to_string(r.approx_violations) +
                    " violations, worst residual/scale " + fmt(worst_residual(r))};
}

Outcome empirical_constants() {
  const auto m = run_measure(1000, 15, 256, 3, kThreads, kBounds);
  const bool within_ref = m.c_n.max <= 1.3 && m.relsize.min >= 0.3 && m.relsize.max <= 3.5;
  const bool pass = m.c_n.max <= 4.0 && m.relsize.min >= 0.25 && m.relsize.max <= 4.0 && m.hard_violations == 0 &&
                    m.certification_failures == 0;
  return {pass, "max d_n|q_n| " + fmt(m.c_n.max) + " (reference value 1.26), relsize [" + fmt(m.relsize.min) + ", " +
                    fmt(m.relsize.max) + "] (reference [0.35, 3.38]), " +
                    (within_ref ? "within reporting range" : "outside reporting range")};
}

Outcome round_trip() {
  const auto r = run_round_trip(1000, 10, Integer(1000000), 4, kThreads);
  return {r.mismatches == 0 && r.strings == 1000, std::to_string(r.strings) + " strings, longest " +
                                                      std::to_string(r.max_len_seen) + ", " +
                                                      std::to_string(r.mismatches) + " mismatches"};
}

Outcome enumeration() {
  const auto c = run_count(200, kprime_region(1.0), kThreads);
  std::size_t equal = 0;
  for (const auto& row : c.rows) equal += row.equal;
  const bool stable = c.fit_lowest.cv_three_halves < 0.5;
  return {c.all_equal && stable,
          std::to_string(equal) + "/" + std::to_string(c.rows.size()) + " m agree with naive count; C m^(3/2) " +
              "coefficient of variation " + fmt(c.fit_lowest.cv_three_halves) + " (lowest terms), " +
              fmt(c.fit_any.cv_three_halves) + " (all), fitted exponent " + fmt(c.fit_lowest.alpha)};
}

Outcome khinchin_sums() {
  const auto s = run_khinchin_sums(1.0, 1.0, 10000, 5);
  const bool pass = s.monotone && s.nonnegative && s.tail_bound < 1e-3 * s.partial;
  return {pass, "S(10^4) = " + fmt(s.partial) + ", tail bound " + fmt(s.tail_bound) +
                    (s.monotone ? ", monotone" : ", not monotone")};
}

Outcome best_approx() {
  const auto r = run_bestapprox_suite(50, 20, 512, 200.0, 4.0, 6, kThreads, kBounds);
  const bool pass = r.hard_pass() && r.fixtures.size() == 50;
  return {pass, std::to_string(r.fixtures.size()) + " fixtures, " + std::to_string(r.candidates) + " candidates, " +
                    std::to_string(r.smaller_q_checked) + " smaller-denominator checks (" +
                    std::to_string(r.smaller_q_vacuous) + " vacuous), stated-form violations " +
                    std::to_string(r.stated_violations) + ", display-form violations " +
                    std::to_string(r.display_violations) + ", triangle-form violations " +
                    std::to_string(r.triangle_violations)};
}

Outcome direction() {
  int votes = 0;
  std::string fr;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    KhinchinConfig cfg;
    cfg.samples = 1000000;
    cfg.seed = seed;
    cfg.threads = kThreads;
    const auto r = khinchin_experiment(cfg);
    votes += r.decreasing_lowest;
    fr += " seed " + std::to_string(seed) + ":";
    for (const auto& k : r.ranges) fr += " " + fmt(k.frac_lowest);
  }
  return {votes >= 2, std::to_string(votes) + "/3 seeds decreasing over k = 4..8;" + fr};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion all[] = {
      {1, "constants", 1, constants},
      {2, "exact identities", 60, exact_identities},
      {3, "big-float identities and bounds", 600, bigfloat_identities},
      {4, "empirical constants", 600, empirical_constants},
      {5, "round trip", 60, round_trip},
      {6, "enumeration and growth", 300, enumeration},
      {7, "khinchin sums", 60, khinchin_sums},
      {8, "best approximation", 600, best_approx},
      {9, "khinchin direction", 600, direction},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("error: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) {
      o.pass = false;
      o.detail += "; over time limit of " + fmt(c.limit_s) + " s";
    }
    failed += !o.pass;
    std::printf("criterion %d %-32s %s  %s (%.2f s)\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
