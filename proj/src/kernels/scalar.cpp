// SPDX-License-Identifier: Apache-2.0
#include "heiscf/kernels.hpp"

namespace heiscf::kernels::scalar {

namespace {

inline double dist4(const Center& c, double ur, double ui, double vi) {
  const double dx = ur - c.ur;
  const double dy = ui - c.ui;
  const double a = (dx * dx + dy * dy) * 0.5;
  const double b = (vi - c.vi) - (c.ur * ui - c.ui * ur);
  return a * a + b * b;
}

}  // namespace

void gauge_dist4(const Center& c, const double* ur, const double* ui, const double* vi, std::size_t n, double* out) {
  for (std::size_t k = 0; k < n; ++k) out[k] = dist4(c, ur[k], ui[k], vi[k]);
}

std::size_t mark_within(const Center& c, const double* ur, const double* ui, const double* vi, std::size_t n, double r4,
                        std::uint8_t* hit) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (dist4(c, ur[k], ui[k], vi[k]) <= r4) {
      hit[k] = 1;
      ++count;
    }
  }
  return count;
}

std::size_t count_heis_ball(const double* x, const double* y, const double* t, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double r2 = x[k] * x[k] + y[k] * y[k];
    if (r2 * r2 + t[k] * t[k] <= 1.0) ++count;
  }
  return count;
}

}  // namespace heiscf::kernels::scalar
