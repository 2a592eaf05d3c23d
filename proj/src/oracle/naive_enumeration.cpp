// SPDX-License-Identifier: Apache-2.0
#include "heiscf/oracle/naive_enumeration.hpp"

#include <algorithm>
#include <cmath>

namespace heiscf::oracle {

RationalEnumeration naive_enumerate_qnorm(std::int64_t m, const GaugeRegion& region, bool lowest_terms) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const std::int64_t num = numerator(region.bound).convert_to<std::int64_t>();
  const std::int64_t den = denominator(region.bound).convert_to<std::int64_t>();
  const double R = static_cast<double>(num) / static_cast<double>(den);
  const auto qmax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m))) + 1;
  const auto pmax = static_cast<std::int64_t>(std::sqrt(R * static_cast<double>(m))) + 1;
  // |r|^2 = 2 Re(conj(q) p) <= 2 |q| |p|
  const auto rmax = static_cast<std::int64_t>(std::sqrt(2.0 * std::sqrt(static_cast<double>(m)) * pmax)) + 1;

  RationalEnumeration out;
  out.m = m;
  out.region = region;
  out.lowest_terms = lowest_terms;
  for (std::int64_t qa = 1; qa <= qmax; ++qa) {
    for (std::int64_t qb = 0; qb <= qmax; ++qb) {
      if (qa * qa + qb * qb != m) continue;
      for (std::int64_t pa = -pmax; pa <= pmax; ++pa) {
        for (std::int64_t pb = -pmax; pb <= pmax; ++pb) {
          if ((pa * pa + pb * pb) * den > num * m) continue;
          const std::int64_t twice_re = 2 * (qa * pa + qb * pb);
          if (twice_re < 0) continue;
          for (std::int64_t ra = -rmax; ra <= rmax; ++ra) {
            const std::int64_t rest = twice_re - ra * ra;
            if (rest < 0) continue;
            auto rb = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
            if (rb * rb != rest) continue;
            for (const int sign : {1, -1}) {
              if (sign < 0 && rb == 0) break;
              const std::int64_t sb = sign * rb;
              const bool lowest = coprime_triple(qa, qb, ra, sb, pa, pb);
              if (lowest_terms && !lowest) continue;
              out.points.push_back({qa, qb, ra, sb, pa, pb, lowest});
            }
          }
        }
      }
    }
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

}  // namespace heiscf::oracle
