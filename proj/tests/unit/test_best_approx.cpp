// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "heiscf/lab/best_approx.hpp"
#include "heiscf/oracle/naive_enumeration.hpp"
#include "support.hpp"

namespace heiscf {
namespace {

using test::gi;
using test::P;
using E = ExactBackend;

const DirichletDomain K;

ApproxBounds bounds() { return {rk_constant(DirichletDomain::radius()), DirichletDomain::radius()}; }

// Scans every lowest-terms point with |Q|^2 <= m_max whose gauge norm allows
// it to lie within distance 2 of a point of K_D.
template <class B>
ProjIntPoint oracle_best(const SiegelPoint<B>& h, std::int64_t m_max) {
  const auto ctx = h.context();
  const IntegerPoint g0 = K.nearest(h);
  const auto h0 = group_mul(integer_inv(g0).template to_siegel<B>(ctx), h);
  const UMatrix shift = translation_matrix(g0);
  static const std::vector<std::vector<Tri64>> by_m = [] {
    std::vector<std::vector<Tri64>> out(1);
    for (std::int64_t m = 1; m <= 25; ++m)
      out.push_back(oracle::naive_enumerate_qnorm(m, kprime_region(2.0), true).points);
    return out;
  }();
  // Double-precision screen, then an exact comparison among the survivors.
  const auto dc = DoubleBackend::Context{};
  const auto hd = SiegelPoint<DoubleBackend>({B::to_double(re(h0.u())), B::to_double(im(h0.u()))},
                                             {B::to_double(re(h0.v())), B::to_double(im(h0.v()))});
  std::vector<std::pair<double, const Tri64*>> screened;
  double floor_d4 = std::numeric_limits<double>::infinity();
  for (std::int64_t m = 1; m <= m_max; ++m) {
    for (const auto& t : by_m.at(static_cast<std::size_t>(m))) {
      const double d4 = distance4(planar_point<DoubleBackend>(t.to_triple(), dc), hd);
      screened.emplace_back(d4, &t);
      floor_d4 = std::min(floor_d4, d4);
    }
  }
  std::optional<ProjIntPoint> best;
  typename B::Real best_d4{};
  for (const auto& [approx, t] : screened) {
    if (approx > floor_d4 * (1 + 1e-6) + 1e-9) continue;
    const auto d4 = distance4(planar_point<B>(t->to_triple(), ctx), h0);
    const ProjIntPoint cand = apply(shift, ProjIntPoint(t->to_triple()));
    if (!best || d4 < best_d4 || (!(best_d4 < d4) && triple_less(cand.triple(), best->triple()))) {
      best = cand;
      best_d4 = d4;
    }
  }
  return *best;
}

TEST(BestApprox, Example) {
  const auto r = best_approx_search(P("(1+i; 1+4/5i)"), 1.0);
  EXPECT_EQ(r.point, parse_proj_point("[1 : 1+i : 1+i]"));
  EXPECT_EQ(r.d4, Rational(1, 25));
  EXPECT_NEAR(r.distance, std::sqrt(0.2), 1e-12);
  EXPECT_GT(r.candidates, 0u);

  const auto self = best_approx_search(P("(1+i; 1+4/5i)"), 5.0);
  EXPECT_EQ(self.point, planar_to_proj(P("(1+i; 1+4/5i)")));
  EXPECT_EQ(self.d4, Rational(0));
  EXPECT_THROW(best_approx_search(P("(0; 0)"), 0.5), std::invalid_argument);
}

TEST(BestApprox, MatchesExhaustiveScan) {
  Rng rng(1);
  for (int k = 0; k < 40; ++k) {
    const auto h = test::random_rational(rng, 6);
    for (const double bound : {1.0, 3.0, 5.0}) {
      const auto r = best_approx_search(h, bound);
      const auto m_max = static_cast<std::int64_t>(bound * bound);
      ASSERT_EQ(r.point, oracle_best(h, m_max)) << to_string(h) << " bound " << bound;
      EXPECT_LE(norm(r.point.triple().q), m_max);
      EXPECT_EQ(r.d4, distance4(proj_to_planar(r.point), h));
    }
  }
}

TEST(BestApprox, BigFloatMatchesExhaustiveScan) {
  Rng rng(2);
  for (int k = 0; k < 20; ++k) {
    const auto h = test::random_bigfloat(rng, 256);
    const auto r = best_approx_search(h, 4.0);
    ASSERT_EQ(r.point, oracle_best(h, 16));
  }
}

TEST(BestApprox, NoWorseThanConvergents) {
  for (const auto& e : test::bigfloat_fixtures(20, 12, 256, 3)) {
    const auto& h = e.iterates.front();
    const auto h_full = apply(translation_matrix(e.gamma0), h);
    for (std::size_t n = 0; n <= e.depth(); ++n) {
      const auto cn = e.first_column(n);
      const double qn = std::sqrt(static_cast<double>(norm(cn.q)));
      if (qn > 200) break;
      const auto r = best_approx_search(h_full, qn);
      const auto dn4 = distance4(planar_point<BigFloatBackend>(cn, h.context()), h);
      ASSERT_LE(test::bf(r.d4), test::bf(dn4) * (1 + 1e-12));
    }
  }
}

TEST(Decompose, ConvergentsAndRoundTrip) {
  Rng rng(4);
  for (const auto& e : test::bigfloat_fixtures(15, 10, 256, 5)) {
    for (std::size_t n = 0; n + 1 <= e.depth(); ++n) {
      const auto next = decompose_triple(e, n, convergent(e, n + 1));
      EXPECT_TRUE(next.q.is_unit());
      EXPECT_TRUE(next.r.is_zero());
      EXPECT_TRUE(next.p.is_zero());
      const auto cur = decompose_triple(e, n, convergent(e, n));
      EXPECT_TRUE(cur.q.is_zero());
      EXPECT_TRUE(cur.r.is_zero());
      EXPECT_TRUE(cur.p.is_unit());
      for (int k = 0; k < 5; ++k) {
        const IntTriple abc{gi(rng.between(-9, 9), rng.between(-9, 9)), gi(rng.between(-9, 9), rng.between(-9, 9)),
                            gi(rng.between(-9, 9), rng.between(-9, 9))};
        const IntTriple target = apply(e.continuants[n + 1], abc);
        ASSERT_EQ(decompose_triple_local(e, n, target), abc);
        // Q = a q_(n+1) + b qq_(n+1) - c q_n.
        ASSERT_EQ(target.q,
                  abc.q * e.first_column(n + 1).q + abc.r * e.second_column[n + 1].q - abc.p * e.first_column(n).q);
      }
    }
    EXPECT_THROW(decompose_triple_local(e, e.depth(), IntTriple{gi(1), gi(0), gi(0)}), std::out_of_range);
  }
}

TEST(Comparison, NextConvergentQuantities) {
  for (const auto& e : test::bigfloat_fixtures(20, 10, 256, 6)) {
    for (std::size_t n = 1; n + 1 <= e.depth() && n <= 4; ++n) {
      const auto rep = compare_convergent(e, n, 2.0, bounds());
      const double v1 =
          std::abs(std::complex<double>(test::bf(re(e.iterates[n + 1].v())), test::bf(im(e.iterates[n + 1].v()))));
      EXPECT_NEAR(rep.next_x1, v1, 1e-9 * v1);
      const double ratio = std::sqrt(static_cast<double>(norm(e.first_column(n + 1).q)) /
                                     static_cast<double>(norm(e.first_column(n).q)));
      EXPECT_NEAR(rep.next_x2, ratio, 1e-9 * ratio);
      const double vn =
          std::abs(std::complex<double>(test::bf(re(e.iterates[n].v())), test::bf(im(e.iterates[n].v()))));
      EXPECT_NEAR(rep.v_n_abs, vn, 1e-12 * vn);
      EXPECT_NEAR(rep.stated_bound, 1.0 / (vn * bounds().rk), 1e-9 * rep.stated_bound);
    }
  }
}

TEST(Comparison, HardChecksPass) {
  std::uint64_t candidates = 0;
  for (const auto& e : test::bigfloat_fixtures(15, 12, 256, 7)) {
    for (std::size_t n = 1; n + 1 <= e.depth(); ++n) {
      if (std::sqrt(static_cast<double>(norm(e.first_column(n).q))) > 60) break;
      const auto rep = compare_convergent(e, n, 3.0, bounds());
      ASSERT_TRUE(rep.hard_pass()) << (rep.violations.empty() ? std::string() : rep.violations.front().message);
      EXPECT_EQ(rep.decomposition_mismatches, 0u);
      EXPECT_GE(rep.kappa, 1.0);
      EXPECT_LE(rep.kappa, 16.0);
      candidates += rep.candidates;
    }
  }
  EXPECT_GT(candidates, 0u);
}

TEST(Comparison, Preconditions) {
  const auto e = expand(P("(0; -1/5i)"), K, std::nullopt);
  EXPECT_THROW(compare_convergent(e, 1, 2.0, bounds()), std::out_of_range);
  EXPECT_THROW(compare_convergent(e, 0, 0.5, bounds()), std::invalid_argument);
}

}  // namespace
}  // namespace heiscf
