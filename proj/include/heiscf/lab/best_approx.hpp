// SPDX-License-Identifier: Apache-2.0
#pragma once

// Rational points near h and the comparison of a convergent against them.
//
// For a candidate (Q : R : P) and the n-th convergent (q_n : r_n : p_n),
//   x1 = |conj P - conj R u + conj Q v| / |conj p_n - conj r_n u + conj q_n v|
//   x2 = |Q| / |q_n|.
// Since |conj P - conj R u + conj Q v| = |Q| d^2, x1 = x2 (d / d_n)^2. Writing
// (a : b : c) = Q_(n+1)^-1 (Q : R : P) gives
//   Q = a q_(n+1) + b qq_(n+1) - c q_n
//   x1 = |conj a v_(n+1) - conj b u_(n+1) + conj c|
// and, when a != 0, the triangle inequality for d yields
//   (sqrt x1 + sqrt x2) / sqrt|a| >= |W_(n+1) / q_n|^(1/2),
//   W_(n+1) = q_(n+1) + qq_(n+1) u_(n+1) - q_n v_(n+1).

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "heiscf/lab/approx.hpp"
#include "heiscf/lab/enumeration.hpp"

namespace heiscf {

/// u and Im v of a point, rounded to double.
struct NearCenter {
  double ur = 0.0;
  double ui = 0.0;
  double vi = 0.0;
};

/// Visits the primitive triples with canonical Q, |Q|^2 <= q_norm_max and
/// d((R/Q, P/Q), h) <= radius(), in order of increasing |Q|^2. radius() is
/// re-read before each Q, so a caller may shrink it while searching. The test
/// is done in double with a relative slack of 1e-9: the visited set contains
/// every point within the radius and possibly a few just outside.
void for_each_rational_near(const NearCenter& h, std::int64_t q_norm_max, const std::function<double()>& radius,
                            const std::function<void(const Tri64&)>& visit);

template <class B>
NearCenter near_center(const SiegelPoint<B>& h) {
  return {B::to_double(re(h.u())), B::to_double(im(h.u())), B::to_double(im(h.v()))};
}

/// Lexicographic order on (q, r, p) by (re, im).
bool triple_less(const IntTriple& a, const IntTriple& b);

template <class B>
struct BestApprox {
  ProjIntPoint point;
  typename B::Real d4;
  double distance = 0.0;
  std::uint64_t candidates = 0;
};

/// The lowest-terms rational point with |Q| <= bound that is closest to h
/// among those within gauge distance 2. Ties go to the smaller triple.
/// The search runs in the frame of h_0 = [h]^-1 h by increasing |Q| with the
/// radius shrinking to the best distance found so far.
template <class B>
BestApprox<B> best_approx_search(const SiegelPoint<B>& h, double bound) {
  if (!(bound >= 1.0) || bound > 1e5) throw std::invalid_argument("bound must lie in [1, 1e5]");
  const DirichletDomain domain;
  const auto ctx = h.context();
  const IntegerPoint g0 = domain.nearest(h);
  const UMatrix shift = translation_matrix(g0);
  auto h0 = group_mul(integer_inv(g0).template to_siegel<B>(ctx), h);
  const auto q_norm_max = static_cast<std::int64_t>(std::floor(bound * bound * (1 + 1e-12)));

  std::optional<BestApprox<B>> best;
  double radius = 2.0;
  std::uint64_t seen = 0;
  for_each_rational_near(
      near_center(h0), q_norm_max, [&] { return radius; },
      [&](const Tri64& t) {
        ++seen;
        const IntTriple local = t.to_triple();
        const auto d4 = distance4(planar_point<B>(local, ctx), h0);
        if (B::to_double(d4) > 16.0 * (1 + 1e-12)) return;
        if (best) {
          if (best->d4 < d4) return;
          if (!(d4 < best->d4)) {
            const ProjIntPoint cand = apply(shift, ProjIntPoint(local));
            if (!triple_less(cand.triple(), best->point.triple())) return;
          }
        }
        best = BestApprox<B>{apply(shift, ProjIntPoint(local)), d4, std::sqrt(std::sqrt(B::to_double(d4))), 0};
        radius = std::min(2.0, best->distance * (1 + 1e-9) + 1e-12);
      });
  if (!best) throw std::logic_error("no rational point within distance 2");
  best->candidates = seen;
  return *best;
}

/// (a : b : c) with Q_(n+1) (a, b, c) = target, for a triple in the frame of h_0.
template <class B>
IntTriple decompose_triple_local(const CFExpansion<B>& e, std::size_t n, const IntTriple& target) {
  if (n + 1 > e.depth()) throw std::out_of_range("decompose_triple needs n+1 <= depth");
  return apply(u21_inverse(e.continuants[n + 1]), target);
}

/// As decompose_triple_local for a point in the frame of h (undoes gamma_0).
template <class B>
IntTriple decompose_triple(const CFExpansion<B>& e, std::size_t n, const ProjIntPoint& target) {
  const IntTriple local = apply(translation_matrix(integer_inv(e.gamma0)), target.triple());
  return decompose_triple_local(e, n, local);
}

struct ComparisonViolation {
  std::string kind;
  std::string message;
};

struct ComparisonReport {
  std::size_t n = 0;
  double q_abs = 0.0;
  double d_n = 0.0;
  double v_n_abs = 0.0;
  /// 1 / (|v_n| R_K)
  double stated_bound = 0.0;
  /// |W_(n+1) / q_n|^(1/2)
  double proof_bound = 0.0;
  /// proof_bound >= stated_bound
  bool relsize_step_holds = false;
  /// Candidates farther than kappa d_n need no enumeration for the stated form.
  double kappa = 1.0;
  bool exterior_certified = false;
  double q_bound = 0.0;
  std::uint64_t candidates = 0;
  double min_s = 0.0;
  double min_s_over_stated = 0.0;
  std::uint64_t stated_violations = 0;
  /// (sqrt x1 + sqrt x2) / |a| >= proof_bound
  std::uint64_t display_violations = 0;
  /// (sqrt x1 + sqrt x2) / sqrt|a| >= proof_bound; must never fail.
  std::uint64_t triangle_violations = 0;
  /// x1 and x2 recomputed from (a, b, c) disagree; must never happen.
  std::uint64_t decomposition_mismatches = 0;
  /// |q_n| / (2 rad^2 R_K^2)
  double smaller_q_threshold = 0.0;
  bool smaller_q_vacuous = true;
  std::uint64_t smaller_q_checked = 0;
  std::uint64_t smaller_q_violations = 0;
  /// Candidates with |Q| < |q_n| and d < d_n.
  std::uint64_t closer_with_smaller_q = 0;
  /// x1, x2 for convergent n+1.
  double next_x1 = 0.0;
  double next_x2 = 0.0;
  std::vector<ComparisonViolation> violations;

  bool hard_pass() const {
    return triangle_violations == 0 && decomposition_mismatches == 0 && smaller_q_violations == 0;
  }
};

/// Compares the n-th convergent with every primitive (Q : R : P) having
/// |Q| <= a_bound |q_n| and d <= kappa d_n, where kappa >= 1 is chosen so
/// that the stated inequality holds automatically beyond kappa d_n (capped
/// at kappa_max). Requires n+1 <= depth.
template <class B>
ComparisonReport compare_convergent(const CFExpansion<B>& e, std::size_t n, double a_bound, const ApproxBounds& bounds,
                                    double kappa_max = 16.0) {
  using lab_detail::to_cd;
  if (n + 1 > e.depth()) throw std::out_of_range("compare_convergent needs n+1 <= depth");
  if (!(a_bound >= 1.0)) throw std::invalid_argument("a_bound must be at least 1");
  const auto& h0 = e.iterates.front();
  const auto ctx = h0.context();
  const auto& u = h0.u();
  const auto& v = h0.v();
  const auto word = [&](const IntTriple& t) {
    return conj(B::from_gauss(t.p, ctx)) - conj(B::from_gauss(t.r, ctx)) * u + conj(B::from_gauss(t.q, ctx)) * v;
  };
  const auto mag = [](const typename B::Complex& z) { return std::abs(to_cd<B>(z)); };

  const IntTriple cn = e.first_column(n);
  const IntTriple cn1 = e.first_column(n + 1);
  const double wn = mag(word(cn));
  const double qn = mag(B::from_gauss(cn.q, ctx));
  const auto un1 = e.iterates[n + 1].u();
  const auto vn1 = e.iterates[n + 1].v();

  ComparisonReport rep;
  rep.n = n;
  rep.q_abs = qn;
  rep.d_n = std::sqrt(wn / qn);
  rep.v_n_abs = mag(e.iterates[n].v());
  rep.stated_bound = 1.0 / (rep.v_n_abs * bounds.rk);
  rep.proof_bound = std::sqrt(mag(continuant_word(e, n)) / qn);
  rep.relsize_step_holds = rep.proof_bound >= rep.stated_bound;
  const double kappa_needed = std::sqrt(qn) * rep.stated_bound;
  rep.kappa = std::clamp(kappa_needed, 1.0, kappa_max);
  rep.exterior_certified = kappa_needed <= kappa_max;
  rep.q_bound = a_bound * qn;
  rep.smaller_q_threshold = qn / (2.0 * bounds.rad * bounds.rad * bounds.rk * bounds.rk);
  rep.smaller_q_vacuous = rep.smaller_q_threshold <= 1.0;
  rep.next_x1 = mag(word(cn1)) / wn;
  rep.next_x2 = mag(B::from_gauss(cn1.q, ctx)) / qn;
  rep.min_s = std::numeric_limits<double>::infinity();
  rep.min_s_over_stated = std::numeric_limits<double>::infinity();

  const UMatrix inv = u21_inverse(e.continuants[n + 1]);
  const UMatrix shift = translation_matrix(e.gamma0);
  const ProjIntPoint self(cn);
  const double radius = rep.kappa * rep.d_n * (1 + 1e-9);
  const auto q_norm_max = static_cast<std::int64_t>(std::floor(rep.q_bound * rep.q_bound * (1 + 1e-12)));
  constexpr std::size_t kMaxLogged = 200;
  auto log = [&](const char* kind, const std::string& msg) {
    if (rep.violations.size() < kMaxLogged) rep.violations.push_back({kind, msg});
  };

  for_each_rational_near(
      near_center(h0), q_norm_max, [&] { return radius; },
      [&](const Tri64& t) {
        const IntTriple local = t.to_triple();
        const ProjIntPoint cand(local);
        if (cand == self) return;
        const double Q = std::hypot(static_cast<double>(t.qa), static_cast<double>(t.qb));
        const double x1 = mag(word(local)) / wn;
        const double x2 = Q / qn;
        const double d = std::sqrt(x1 * wn / Q);
        if (d > radius) return;
        ++rep.candidates;
        const double s = std::sqrt(x1) + std::sqrt(x2);
        rep.min_s = std::min(rep.min_s, s);
        rep.min_s_over_stated = std::min(rep.min_s_over_stated, s / rep.stated_bound);
        const std::string where = "n=" + std::to_string(n) + " candidate " + to_string(apply(shift, cand));

        const IntTriple abc = apply(inv, local);
        const auto A = B::from_gauss(abc.q, ctx);
        const auto Bc = B::from_gauss(abc.r, ctx);
        const auto C = B::from_gauss(abc.p, ctx);
        const double x1_abc = mag(conj(A) * vn1 - conj(Bc) * un1 + conj(C));
        const GaussInt q_abc = abc.q * cn1.q + abc.r * e.second_column[n + 1].q - abc.p * cn.q;
        const double tol = 1e-9 * std::max(1.0, x1);
        if (std::abs(x1_abc - x1) > tol || !(q_abc == local.q)) {
          ++rep.decomposition_mismatches;
          log("decomposition", where + ": x1=" + std::to_string(x1) + " via (a:b:c)=" + std::to_string(x1_abc));
        }

        if (s < rep.stated_bound) {
          ++rep.stated_violations;
          log("stated", where + ": sqrt(x1)+sqrt(x2)=" + std::to_string(s) +
                            " < 1/(|v_n| R_K)=" + std::to_string(rep.stated_bound));
        }
        if (!abc.q.is_zero()) {
          const double a = std::sqrt(static_cast<double>(norm(abc.q)));
          if (s / a < rep.proof_bound) {
            ++rep.display_violations;
            log("display", where + ": (sqrt(x1)+sqrt(x2))/|a|=" + std::to_string(s / a) + " < |W/q_n|^(1/2)=" +
                               std::to_string(rep.proof_bound) + " with |a|=" + std::to_string(a));
          }
          if (s / std::sqrt(a) < rep.proof_bound * (1 - 1e-9)) {
            ++rep.triangle_violations;
            log("triangle", where + ": (sqrt(x1)+sqrt(x2))/sqrt|a|=" + std::to_string(s / std::sqrt(a)) + " < " +
                                std::to_string(rep.proof_bound));
          }
        }
        if (Q < rep.smaller_q_threshold) {
          ++rep.smaller_q_checked;
          if (d <= rep.d_n) {
            ++rep.smaller_q_violations;
            log("smaller_q", where + ": d=" + std::to_string(d) + " <= d_n=" + std::to_string(rep.d_n));
          }
        }
        if (Q < qn && d < rep.d_n) ++rep.closer_with_smaller_q;
      });
  if (rep.candidates == 0) rep.min_s = rep.min_s_over_stated = 0.0;
  return rep;
}

}  // namespace heiscf
