// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "heiscf/moebius.hpp"
#include "support.hpp"

namespace heiscf {
namespace {

using test::gi;
using test::ip;
using test::P;

UMatrix M(const std::string& s) { return parse_umatrix(s); }

TEST(Matrix, J) {
  const UMatrix J = matrix_J();
  EXPECT_EQ(J, M("[[0,0,-1],[0,1,0],[-1,0,0]]"));
  EXPECT_EQ(J * J, UMatrix::identity());
  EXPECT_TRUE(u21_check(J));
  EXPECT_EQ(dagger(J), J);
  EXPECT_EQ(apply(J, P("(0; 5i)")), P("(0; -1/5i)"));
}

TEST(Matrix, Translation) {
  EXPECT_EQ(translation_matrix(ip("(0; 0)")), UMatrix::identity());
  EXPECT_EQ(translation_matrix(ip("(0; 5i)")), M("[[1,0,0],[0,1,0],[5i,0,1]]"));
  EXPECT_EQ(translation_matrix(ip("(1+i; 1+i)")) * translation_matrix(ip("(-1-i; 1-i)")), UMatrix::identity());
  EXPECT_THROW(translation_matrix(P("(0; 1/2i)")), std::invalid_argument);
}

TEST(Matrix, TranslationActsAsGroupMul) {
  Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    const IntegerPoint g = random_integer_point(rng, 5, 12, true);
    const auto h = test::random_rational(rng);
    EXPECT_EQ(apply(translation_matrix(g), h), group_mul(g.to_siegel<ExactBackend>({}), h));
    EXPECT_EQ(translation_matrix(g), translation_matrix(g.to_siegel<ExactBackend>({})));
  }
}

TEST(Matrix, Digit) {
  EXPECT_EQ(digit_matrix(ip("(0; 5i)")), M("[[-5i,0,-1],[0,1,0],[-1,0,0]]"));
  const UMatrix Q1 = digit_matrix(ip("(0; 5i)"));
  EXPECT_EQ(apply(Q1, P("(0; 0)")), P("(0; -1/5i)"));
  Rng rng(2);
  for (int k = 0; k < 100; ++k) {
    const UMatrix A = digit_matrix(random_integer_point(rng, 8, 30));
    EXPECT_TRUE(u21_check(A));
    EXPECT_EQ(u21_inverse(A) * A, UMatrix::identity());
    EXPECT_EQ(A * u21_inverse(A), UMatrix::identity());
  }
}

TEST(Matrix, NonMember) {
  const UMatrix D = M("[[2,0,0],[0,1,0],[0,0,1]]");
  EXPECT_FALSE(u21_check(D));
  try {
    u21_inverse(D);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "not in U(2,1;Z[i])");
  }
  EXPECT_TRUE(u21_check(UMatrix::identity()));
}

TEST(Matrix, ApplyIdentityAndAssociativity) {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const auto h = test::random_rational(rng);
    EXPECT_EQ(apply(UMatrix::identity(), h), h);
    const UMatrix A = digit_matrix(random_integer_point(rng, 4, 10));
    const UMatrix B = digit_matrix(random_integer_point(rng, 4, 10));
    const IntTriple t{gi(rng.between(-20, 20), rng.between(-20, 20)), gi(rng.between(-20, 20), rng.between(-20, 20)),
                      gi(rng.between(-20, 20), rng.between(-20, 20))};
    EXPECT_EQ(apply(A * B, t), apply(A, apply(B, t)));
    EXPECT_EQ((A * B) * A, A * (B * A));
  }
}

TEST(Matrix, ImageAtInfinity) {
  // J sends (1 : 0 : 0) to (0 : 0 : -1).
  try {
    apply(matrix_J(), P("(0; 0)"));
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "image at infinity");
  }
  EXPECT_THROW(apply(matrix_J(), parse_proj_point("[1 : 0 : 0]")), std::domain_error);
}

TEST(Matrix, TextRoundTrip) {
  Rng rng(4);
  for (int k = 0; k < 50; ++k) {
    const UMatrix A = digit_matrix(random_integer_point(rng, 6, 20)) * digit_matrix(random_integer_point(rng, 6, 20));
    EXPECT_EQ(parse_umatrix(to_string(A)), A);
  }
}

TEST(Continuants, StructureOnExpansions) {
  for (const auto& e : test::bigfloat_fixtures(20, 15, 256, 5)) {
    for (std::size_t n = 0; n <= e.depth(); ++n) {
      const UMatrix& Q = e.continuants[n];
      ASSERT_TRUE(u21_check(Q));
      ASSERT_EQ(u21_inverse(Q) * Q, UMatrix::identity());
      if (n >= 1) {
        const IntTriple prev = e.continuants[n - 1].column(0);
        ASSERT_EQ(Q.column(2), (IntTriple{-prev.q, -prev.r, -prev.p}));
      }
      if (n + 1 <= e.depth()) {
        const IntTriple img = apply(u21_inverse(e.continuants[n + 1]), IntTriple{gi(0), gi(0), gi(1)});
        const GaussInt qn = e.continuants[n].column(0).q;
        const GaussInt qq = e.continuants[n + 1].column(1).q;
        const GaussInt qn1 = e.continuants[n + 1].column(0).q;
        ASSERT_EQ(img, (IntTriple{-conj(qn), -conj(qq), conj(qn1)}));
      }
    }
  }
}

}  // namespace
}  // namespace heiscf
