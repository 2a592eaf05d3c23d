// SPDX-License-Identifier: Apache-2.0
#include "heiscf/cf_engine.hpp"

namespace heiscf {

std::size_t exact_depth_guard(const SiegelPoint<ExactBackend>& h) {
  const Integer n = norm(planar_to_proj(h).q());
  const std::size_t bits = boost::multiprecision::msb(n) + 1;
  return std::max<std::size_t>(8, 4 * bits);
}

namespace detail {

ProjIntPoint translated_convergent(const IntegerPoint& gamma0, const UMatrix& q) {
  return ProjIntPoint(apply(translation_matrix(gamma0), q.column(0)));
}

}  // namespace detail

SiegelPoint<ExactBackend> reconstruct(const IntegerPoint& gamma0, const std::vector<IntegerPoint>& digits) {
  const ExactBackend::Context ctx;
  auto h = gamma0.to_siegel<ExactBackend>(ctx);
  if (digits.empty()) return h;
  auto x = digits.back().to_siegel<ExactBackend>(ctx);
  auto invert = [](const SiegelPoint<ExactBackend>& p) {
    if (p.v().is_zero()) throw std::invalid_argument("invalid digit string");
    return koranyi_inversion(p);
  };
  for (std::size_t k = digits.size() - 1; k-- > 0;) {
    x = group_mul(digits[k].to_siegel<ExactBackend>(ctx), invert(x));
  }
  return group_mul(h, invert(x));
}

IntTriple tail_convergent(const std::vector<IntegerPoint>& digits, std::size_t i, std::size_t n) {
  if (i > n || n > digits.size()) throw std::out_of_range("tail convergent indices out of range");
  IntTriple t{GaussInt(1), GaussInt(0), GaussInt(0)};
  for (std::size_t k = n; k > i; --k) t = apply(digit_matrix(digits[k - 1]), t);
  return t;
}

}  // namespace heiscf
