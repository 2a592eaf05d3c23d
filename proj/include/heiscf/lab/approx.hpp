// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "heiscf/lab/identities.hpp"

namespace heiscf {

struct ApproxRecord {
  std::size_t n = 0;
  double q_abs = 0.0;
  /// d(conv_n, h)
  double d_n = 0.0;
  std::complex<double> v_next;
  /// d_n / |v_(n+1) / q_n^2|^(1/2)
  double ratio_next = 0.0;
  /// d_n / |v_n / q_n^2|^(1/2)
  double ratio_current = 0.0;
  /// d_n |q_n|
  double c_n = 0.0;
  /// |q_n| |v_0 ... v_(n-1)|
  double relsize_n = 0.0;
  /// |q_(n-1)| / |v_n q_n|; NaN at n = 0.
  double succ_n = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::string> violations;
};

struct ApproxBounds {
  double rk;
  double rad;
};

/// Requires n+1 <= depth and h_(n+1) != 0.
template <class B>
ApproxRecord approx_quality(const CFExpansion<B>& e, std::size_t n, const ApproxBounds& bounds) {
  if (n + 1 > e.depth()) throw std::out_of_range("approx_quality needs n+1 <= depth");
  if (B::is_zero(e.iterates[n + 1].v())) throw std::invalid_argument("approx_quality needs h_(n+1) != 0");
  using lab_detail::to_cd;
  const auto& h0 = e.iterates.front();
  const auto ctx = h0.context();
  const IntTriple c = e.first_column(n);
  const double qn_sq = B::to_double(norm(B::from_gauss(c.q, ctx)));
  const double d4 = B::to_double(distance4(planar_point<B>(c, ctx), h0));

  ApproxRecord r;
  r.n = n;
  r.q_abs = std::sqrt(qn_sq);
  r.d_n = std::sqrt(std::sqrt(d4));
  r.v_next = to_cd<B>(e.iterates[n + 1].v());
  const double vn = std::sqrt(B::to_double(norm(e.iterates[n].v())));
  r.ratio_next = r.d_n / std::sqrt(std::abs(r.v_next) / qn_sq);
  r.ratio_current = r.d_n / std::sqrt(vn / qn_sq);
  r.c_n = r.d_n * r.q_abs;
  r.relsize_n = r.q_abs * std::sqrt(B::to_double(norm(lab_detail::v_product(e, 0, n))));
  if (n >= 1) {
    const double qprev = std::sqrt(B::to_double(norm(B::from_gauss(e.first_column(n - 1).q, ctx))));
    r.succ_n = qprev / (vn * r.q_abs);
  }

  const double R = bounds.rk;
  auto check = [&](const char* name, double x, double lo, double hi) {
    if (!(x >= lo && x <= hi)) {
      r.violations.push_back(std::string(name) + "=" + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "] at n=" + std::to_string(n));
    }
  };
  check("ratio_next", r.ratio_next, 1.0 / R, R);
  check("ratio_current", r.ratio_current, 1.0 / R, R);
  check("relsize", r.relsize_n, 1.0 / R, R);
  if (n >= 1) check("succ", r.succ_n, 1.0 / (R * R), R * R);
  check("c_n", r.c_n, 0.0, bounds.rad * R);
  return r;
}

}  // namespace heiscf
