// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cstring>
#include <vector>

#include "heiscf/kernels.hpp"
#include "heiscf/lab/random.hpp"
#include "heiscf/siegel.hpp"

namespace heiscf {
namespace {

using namespace kernels;

struct Batch {
  std::vector<double> a, b, c;
};

Batch random_batch(std::size_t n, std::uint64_t seed, double span) {
  Rng rng(seed);
  Batch s;
  for (std::size_t k = 0; k < n; ++k) {
    s.a.push_back(rng.uniform(-span, span));
    s.b.push_back(rng.uniform(-span, span));
    s.c.push_back(rng.uniform(-span, span));
  }
  return s;
}

bool bitwise_equal(const std::vector<double>& x, const std::vector<double>& y) {
  return x.size() == y.size() && std::memcmp(x.data(), y.data(), x.size() * sizeof(double)) == 0;
}

TEST(Kernels, GaugeDistMatchesSiegelDistance) {
  const auto s = random_batch(257, 1, 2.0);
  const Center c{0.3, -0.7, 0.25};
  std::vector<double> out(s.a.size());
  scalar::gauge_dist4(c, s.a.data(), s.b.data(), s.c.data(), s.a.size(), out.data());
  const auto make = [](double ur, double ui, double vi) {
    return SiegelPoint<DoubleBackend>({ur, ui}, {(ur * ur + ui * ui) / 2, vi});
  };
  const auto hc = make(c.ur, c.ui, c.vi);
  for (std::size_t k = 0; k < s.a.size(); ++k) {
    const double ref = distance4(hc, make(s.a[k], s.b[k], s.c[k]));
    ASSERT_NEAR(out[k], ref, 1e-12 * std::max(1.0, ref)) << k;
  }
}

TEST(Kernels, ScalarAndAvx2AgreeBitwise) {
  if (!isa_available(Isa::avx2)) GTEST_SKIP() << "AVX2 not available";
  for (const std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 31u, 1001u}) {
    const auto s = random_batch(n, 10 + n, 1.5);
    const Center c{-0.1, 0.45, -0.3};
    std::vector<double> o1(n), o2(n);
    scalar::gauge_dist4(c, s.a.data(), s.b.data(), s.c.data(), n, o1.data());
    avx2::gauge_dist4(c, s.a.data(), s.b.data(), s.c.data(), n, o2.data());
    ASSERT_TRUE(bitwise_equal(o1, o2)) << n;

    std::vector<std::uint8_t> h1(n, 0), h2(n, 0);
    const auto k1 = scalar::mark_within(c, s.a.data(), s.b.data(), s.c.data(), n, 0.5, h1.data());
    const auto k2 = avx2::mark_within(c, s.a.data(), s.b.data(), s.c.data(), n, 0.5, h2.data());
    ASSERT_EQ(k1, k2);
    ASSERT_EQ(h1, h2);
    std::size_t set = 0;
    for (std::size_t k = 0; k < n; ++k) {
      ASSERT_TRUE(h1[k] == 0 || h1[k] == 1);
      ASSERT_EQ(h1[k] == 1, o1[k] <= 0.5);
      set += h1[k];
    }
    ASSERT_EQ(set, k1);

    ASSERT_EQ(scalar::count_heis_ball(s.a.data(), s.b.data(), s.c.data(), n),
              avx2::count_heis_ball(s.a.data(), s.b.data(), s.c.data(), n));
  }
}

TEST(Kernels, BallCountMatchesDirectTest) {
  const auto s = random_batch(4099, 3, 1.0);
  std::size_t direct = 0;
  for (std::size_t k = 0; k < s.a.size(); ++k) {
    const double r2 = s.a[k] * s.a[k] + s.b[k] * s.b[k];
    direct += r2 * r2 + s.c[k] * s.c[k] <= 1.0;
  }
  EXPECT_EQ(scalar::count_heis_ball(s.a.data(), s.b.data(), s.c.data(), s.a.size()), direct);
  EXPECT_EQ(count_heis_ball(s.a.data(), s.b.data(), s.c.data(), s.a.size()), direct);
}

TEST(Kernels, Dispatch) {
  EXPECT_TRUE(isa_available(Isa::scalar));
  force_isa(Isa::scalar);
  EXPECT_EQ(active_isa(), Isa::scalar);
  EXPECT_EQ(isa_name(Isa::scalar), "scalar");
  EXPECT_EQ(isa_name(Isa::avx2), "avx2");
  if (isa_available(Isa::avx2)) {
    force_isa(Isa::avx2);
    EXPECT_EQ(active_isa(), Isa::avx2);
  }
  force_isa(std::nullopt);
  EXPECT_EQ(active_isa(), isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar);
}

}  // namespace
}  // namespace heiscf
