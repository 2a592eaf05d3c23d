// SPDX-License-Identifier: Apache-2.0
// Built with -mavx2 -ffp-contract=off; only reached when the CPU reports AVX2.
#include "heiscf/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace heiscf::kernels::avx2 {

#if defined(__AVX2__)

namespace {

struct Lanes {
  __m256d cur, cui, cvi, half;
  explicit Lanes(const Center& c)
      : cur(_mm256_set1_pd(c.ur)), cui(_mm256_set1_pd(c.ui)), cvi(_mm256_set1_pd(c.vi)), half(_mm256_set1_pd(0.5)) {}

  __m256d dist4(const double* ur, const double* ui, const double* vi) const {
    const __m256d u_r = _mm256_loadu_pd(ur);
    const __m256d u_i = _mm256_loadu_pd(ui);
    const __m256d v_i = _mm256_loadu_pd(vi);
    const __m256d dx = _mm256_sub_pd(u_r, cur);
    const __m256d dy = _mm256_sub_pd(u_i, cui);
    const __m256d a = _mm256_mul_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)), half);
    const __m256d cross = _mm256_sub_pd(_mm256_mul_pd(cur, u_i), _mm256_mul_pd(cui, u_r));
    const __m256d b = _mm256_sub_pd(_mm256_sub_pd(v_i, cvi), cross);
    return _mm256_add_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
  }
};

}  // namespace

void gauge_dist4(const Center& c, const double* ur, const double* ui, const double* vi, std::size_t n, double* out) {
  const Lanes l(c);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) _mm256_storeu_pd(out + k, l.dist4(ur + k, ui + k, vi + k));
  scalar::gauge_dist4(c, ur + k, ui + k, vi + k, n - k, out + k);
}

std::size_t mark_within(const Center& c, const double* ur, const double* ui, const double* vi, std::size_t n, double r4,
                        std::uint8_t* hit) {
  const Lanes l(c);
  const __m256d bound = _mm256_set1_pd(r4);
  std::size_t count = 0;
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(l.dist4(ur + k, ui + k, vi + k), bound, _CMP_LE_OQ));
    if (mask == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (mask & (1 << j)) {
        hit[k + static_cast<std::size_t>(j)] = 1;
        ++count;
      }
    }
  }
  return count + scalar::mark_within(c, ur + k, ui + k, vi + k, n - k, r4, hit + k);
}

std::size_t count_heis_ball(const double* x, const double* y, const double* t, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t count = 0;
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d vx = _mm256_loadu_pd(x + k);
    const __m256d vy = _mm256_loadu_pd(y + k);
    const __m256d vt = _mm256_loadu_pd(t + k);
    const __m256d r2 = _mm256_add_pd(_mm256_mul_pd(vx, vx), _mm256_mul_pd(vy, vy));
    const __m256d g = _mm256_add_pd(_mm256_mul_pd(r2, r2), _mm256_mul_pd(vt, vt));
    count += static_cast<std::size_t>(__builtin_popcount(_mm256_movemask_pd(_mm256_cmp_pd(g, one, _CMP_LE_OQ))));
  }
  return count + scalar::count_heis_ball(x + k, y + k, t + k, n - k);
}

#else

void gauge_dist4(const Center& c, const double* ur, const double* ui, const double* vi, std::size_t n, double* out) {
  scalar::gauge_dist4(c, ur, ui, vi, n, out);
}
std::size_t mark_within(const Center& c, const double* ur, const double* ui, const double* vi, std::size_t n, double r4,
                        std::uint8_t* hit) {
  return scalar::mark_within(c, ur, ui, vi, n, r4, hit);
}
std::size_t count_heis_ball(const double* x, const double* y, const double* t, std::size_t n) {
  return scalar::count_heis_ball(x, y, t, n);
}

#endif

}  // namespace heiscf::kernels::avx2
