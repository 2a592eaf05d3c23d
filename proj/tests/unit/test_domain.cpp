// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>

#include "heiscf/domain.hpp"
#include "support.hpp"

namespace heiscf {
namespace {

using test::gi;
using test::ip;
using test::P;
using E = ExactBackend;

// Nearest integer point by a wide sweep: |u_g - u| <= 4 and several c per u_g.
template <class B>
IntegerPoint brute_nearest(const SiegelPoint<B>& h) {
  const double ur = B::to_double(re(h.u())), ui = B::to_double(im(h.u()));
  const auto ctx = h.context();
  std::optional<IntegerPoint> best;
  typename B::Real best_d4{};
  for (long a = std::lround(ur) - 5; a <= std::lround(ur) + 5; ++a) {
    for (long b = std::lround(ui) - 5; b <= std::lround(ui) + 5; ++b) {
      if ((a - b) % 2 != 0) continue;
      if (std::hypot(a - ur, b - ui) > 4) continue;
      const GaussInt ug(a, b);
      const double x = B::to_double(im(h.v() - conj(B::from_gauss(ug, ctx)) * h.u()));
      for (long c = std::lround(x) - 3; c <= std::lround(x) + 3; ++c) {
        const IntegerPoint g = IntegerPoint::from_u_c(ug, Integer(c));
        const auto d4 = distance4(g.to_siegel<B>(ctx), h);
        if (!best || d4 < best_d4 || (!(best_d4 < d4) && lex_less(g, *best))) {
          best = g;
          best_d4 = d4;
        }
      }
    }
  }
  return *best;
}

SiegelPoint<E> random_box_point(Rng& rng) {
  auto r = [&](long span) { return Rational(rng.between(-span * 4096, span * 4096), 4096); };
  return from_heis(HeisPoint<E>{GaussRat(r(3), r(3)), r(6)});
}

TEST(Domain, NearestExamples) {
  const DirichletDomain K;
  EXPECT_EQ(K.nearest(P("(0; -1/5i)")), ip("(0; 0)"));
  EXPECT_EQ(K.nearest(P("(1+i; 1+4/5i)")), ip("(1+i; 1+i)"));
  EXPECT_EQ(brute_nearest(P("(0; -1/5i)")), ip("(0; 0)"));
  Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    const IntegerPoint g = random_integer_point(rng, 10, 40, true);
    EXPECT_EQ(K.nearest(g.to_siegel<E>({})), g);
  }
}

TEST(Domain, RadiusAndConstants) {
  EXPECT_DOUBLE_EQ(DirichletDomain::radius(), std::pow(2.0, -0.25));
  EXPECT_NEAR(DirichletDomain::radius(), 0.840896, 1e-6);
  EXPECT_EQ(DirichletDomain::radius4(), Rational(1, 2));
  EXPECT_EQ(rk_constant(0.0), 1.0);
  const double rad = DirichletDomain::radius();
  // Independent evaluation of prod (1 + rad^n)^2 in long double.
  long double prod = 1;
  for (int n = 1; n < 5000; ++n)
    prod *= (1 + std::pow(static_cast<long double>(rad), n)) * (1 + std::pow(static_cast<long double>(rad), n));
  EXPECT_NEAR(rk_constant(rad), static_cast<double>(prod), 1e-8 * static_cast<double>(prod));
  EXPECT_NEAR(rk_constant(rad), 6726.7, 0.5);
  EXPECT_NEAR(rad * rk_constant(rad), 5656.5, 0.5);
  try {
    rk_constant(1.0);
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "divergent product");
  }
}

TEST(Domain, TieBreakOnBoundary) {
  // (0, i/2) is equidistant from (0, 0) and (0, i).
  const DirichletDomain K;
  const auto h = P("(0; 1/2i)");
  EXPECT_EQ(distance4(h, P("(0; 0)")), distance4(h, P("(0; i)")));
  EXPECT_EQ(K.nearest(h), ip("(0; 0)"));
  EXPECT_EQ(K.nearest(P("(0; -1/2i)")), ip("(0; -i)"));
  const PrecisionContext ctx(128);
  EXPECT_THROW(K.nearest(convert_point<BigFloatBackend>(h, ctx)), CertificationError);
  NearestCertificate cert;
  K.nearest(convert_point<DoubleBackend>(h, {}), &cert);
  EXPECT_TRUE(cert.ambiguous);
}

TEST(Domain, EscalationResolvesNearTies) {
  // Off the boundary by 2^-100: unresolved at 128 bits, resolved after one doubling.
  const DirichletDomain K;
  const Rational t = Rational(1, 2) + Rational(1) / Rational(Integer(1) << 100);
  const auto h =
      convert_point<BigFloatBackend>(SiegelPoint<E>(GaussRat(0), GaussRat(Rational(0), t)), PrecisionContext(128));
  NearestCertificate cert;
  EXPECT_EQ(K.nearest(h, &cert), ip("(0; i)"));
  EXPECT_GE(cert.escalations, 1u);
  EXPECT_GT(cert.bits, 128u);
}

TEST(Domain, CandidateCompleteness) {
  const DirichletDomain K;
  Rng rng(2);
  for (int k = 0; k < 10000; ++k) {
    const auto h = random_box_point(rng);
    ASSERT_EQ(K.nearest(h), brute_nearest(h)) << to_string(h);
  }
}

TEST(Domain, LeftInvariance) {
  const DirichletDomain K;
  Rng rng(3);
  for (int k = 0; k < 2000; ++k) {
    const auto h = random_box_point(rng);
    const IntegerPoint g = random_integer_point(rng, 8, 30, true);
    const auto gh = group_mul(g.to_siegel<E>({}), h);
    EXPECT_EQ(K.nearest(gh), integer_mul(g, K.nearest(h)));
  }
}

TEST(Domain, Tiling) {
  const DirichletDomain K;
  Rng rng(4);
  const DoubleBackend::Context ctx;
  for (int k = 0; k < 100000; ++k) {
    const HeisPoint<DoubleBackend> p{{rng.uniform(-3, 3), rng.uniform(-3, 3)}, rng.uniform(-6, 6)};
    const auto h = from_heis(p);
    NearestCertificate cert;
    const IntegerPoint g = K.nearest(h, &cert);
    if (cert.ambiguous) continue;
    const auto back = group_mul(integer_inv(g).to_siegel<DoubleBackend>(ctx), h);
    ASSERT_NE(K.contains(back), Membership::outside);
    for (int j = 0; j < 10; ++j) {
      const IntegerPoint other = integer_mul(g, random_integer_point(rng, 4, 8));
      const auto moved = group_mul(integer_inv(other).to_siegel<DoubleBackend>(ctx), h);
      ASSERT_NE(K.contains(moved), Membership::inside);
    }
  }
}

TEST(Domain, Membership) {
  const DirichletDomain K;
  EXPECT_EQ(K.contains(P("(0; 0)")), Membership::inside);
  EXPECT_EQ(K.contains(P("(0; -1/5i)")), Membership::inside);
  EXPECT_EQ(K.contains(P("(1+i; 1+4/5i)")), Membership::outside);
  EXPECT_TRUE(K.strictly_contains(P("(0; -1/5i)")));
  EXPECT_FALSE(K.strictly_contains(P("(0; 1/2i)")));
}

}  // namespace
}  // namespace heiscf
