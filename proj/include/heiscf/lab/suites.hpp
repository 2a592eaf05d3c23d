// SPDX-License-Identifier: Apache-2.0
#pragma once

// Seeded batch runs shared by the command-line tool and the acceptance
// harness. Sample i always draws from derive_seed(seed, i), and results are
// merged in index order, so output does not depend on the thread count.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "heiscf/lab/best_approx.hpp"
#include "heiscf/lab/enumeration.hpp"
#include "heiscf/lab/khinchin.hpp"

namespace heiscf {

inline constexpr std::size_t kMaxLoggedViolations = 100;

struct IdentityTally {
  std::string id;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  /// max residual / scale
  double max_rel_residual = 0.0;
};

struct IdentitySuiteResult {
  std::string backend;
  std::size_t fixtures = 0;
  std::size_t max_depth = 0;
  /// Largest |q_n| among final convergents.
  double max_q = 0.0;
  std::vector<IdentityTally> tallies;
  std::uint64_t approx_checked = 0;
  std::uint64_t approx_violations = 0;
  std::uint64_t certification_failures = 0;
  std::vector<std::string> failures;

  std::uint64_t checked() const;
  std::uint64_t failed() const;
  bool pass() const { return failed() == 0 && approx_violations == 0 && certification_failures == 0; }
};

/// Rational points gamma_0 iota gamma_1 ... from random admissible digit
/// strings (length <= max_len, |q| <= q_bound), expanded exactly.
IdentitySuiteResult run_exact_identity_suite(std::size_t samples, std::size_t max_len, const Integer& q_bound,
                                             std::uint64_t seed, unsigned threads);

/// Uniform points of K_D at `bits`, expanded to `depth`; also applies the
/// hard comparability bounds at every n with n+1 <= depth.
IdentitySuiteResult run_bigfloat_identity_suite(std::size_t samples, std::size_t depth, unsigned bits,
                                                std::uint64_t seed, unsigned threads, const ApproxBounds& bounds);

struct FieldStats {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  std::uint64_t count = 0;

  void add(double x);
  void merge(const FieldStats& o);
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
};

struct MeasureResult {
  std::size_t fixtures = 0;
  std::size_t depth = 0;
  FieldStats c_n, relsize, ratio_next, ratio_current, succ;
  /// Indexed by n.
  std::vector<FieldStats> c_by_n, relsize_by_n;
  std::uint64_t hard_violations = 0;
  std::uint64_t certification_failures = 0;
  std::vector<std::string> violations;
};

MeasureResult run_measure(std::size_t samples, std::size_t depth, unsigned bits, std::uint64_t seed, unsigned threads,
                          const ApproxBounds& bounds);

struct BestApproxFixture {
  std::size_t n = 0;
  double q_abs = 0.0;
  double d_n = 0.0;
  double best_distance = 0.0;
  bool convergent_is_best = false;
  ComparisonReport prop;
};

struct BestApproxSuiteResult {
  std::vector<BestApproxFixture> fixtures;
  std::uint64_t candidates = 0;
  std::uint64_t stated_violations = 0;
  std::uint64_t display_violations = 0;
  std::uint64_t triangle_violations = 0;
  std::uint64_t decomposition_mismatches = 0;
  std::uint64_t smaller_q_checked = 0;
  std::uint64_t smaller_q_violations = 0;
  std::size_t smaller_q_vacuous = 0;
  std::size_t exterior_certified = 0;
  std::size_t relsize_step_failures = 0;
  std::size_t convergent_is_best = 0;
  /// best_approx_search returned something farther than the convergent.
  std::size_t search_failures = 0;
  std::uint64_t certification_failures = 0;
  std::vector<ComparisonViolation> violations;

  bool hard_pass() const {
    return triangle_violations == 0 && decomposition_mismatches == 0 && smaller_q_violations == 0 &&
           search_failures == 0 && certification_failures == 0;
  }
};

/// For each fixture, n is the last index with |q_n| <= q_max and n+1 <= depth.
BestApproxSuiteResult run_bestapprox_suite(std::size_t samples, std::size_t depth, unsigned bits, double q_max,
                                           double a_bound, std::uint64_t seed, unsigned threads,
                                           const ApproxBounds& bounds);

struct CountRow {
  std::int64_t m = 0;
  std::uint64_t lowest = 0;
  std::uint64_t any = 0;
  std::uint64_t naive_any = 0;
  bool equal = false;
};

struct CountResult {
  GaugeRegion region;
  std::vector<CountRow> rows;
  bool all_equal = true;
  std::vector<std::int64_t> square_ms;
  GrowthFit fit_any;
  GrowthFit fit_lowest;
};

/// Structured against naive enumeration for m = 1..m_max, plus the growth
/// fit over square m >= 4.
CountResult run_count(std::int64_t m_max, const GaugeRegion& region, unsigned threads);

struct KhinchinSums {
  double C = 1.0;
  double eps = 1.0;
  std::uint64_t M = 0;
  double partial = 0.0;
  double tail_bound = 0.0;
  double last_increment = 0.0;
  bool monotone = true;
  bool nonnegative = true;
  DivisorSumCheck identity;
  /// (m, S(m)) at m = 1, 2, 4, ... and M.
  std::vector<std::pair<std::uint64_t, double>> checkpoints;
};

/// The divisor identity is checked on a random table f with entries in
/// [-1000, 1000] up to min(M, 4096).
KhinchinSums run_khinchin_sums(double C, double eps, std::uint64_t M, std::uint64_t seed);

struct RoundTripResult {
  std::size_t strings = 0;
  std::size_t max_len_seen = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> log;
};

RoundTripResult run_round_trip(std::size_t samples, std::size_t max_len, const Integer& q_bound, std::uint64_t seed,
                               unsigned threads);

}  // namespace heiscf
