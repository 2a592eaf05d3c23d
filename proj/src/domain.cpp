// SPDX-License-Identifier: Apache-2.0
#include "heiscf/domain.hpp"

namespace heiscf {

bool DirichletDomain::strictly_contains(const SiegelPoint<ExactBackend>& h) const {
  const auto cands = nearest_candidates(h);
  return cands.front().g.is_origin() && cands[0].d4 < cands[1].d4;
}

double rk_constant(double rad, double tol) {
  if (!(rad < 1.0)) throw std::domain_error("divergent product");
  if (rad < 0.0 || !(tol > 0.0)) throw std::invalid_argument("rk_constant needs 0 <= rad < 1 and tol > 0");
  double prod = 1.0;
  double power = rad;
  // Remaining factors are bounded by exp(2 rad^(N+1) / (1 - rad)).
  for (int n = 1; n < 100000; ++n) {
    prod *= (1.0 + power) * (1.0 + power);
    power *= rad;
    if (std::expm1(2.0 * power / (1.0 - rad)) <= tol) break;
  }
  return prod;
}

}  // namespace heiscf
