// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "heiscf/cf_engine.hpp"
#include "heiscf/lab/random.hpp"
#include "heiscf/lab/sampling.hpp"

namespace heiscf::test {

inline GaussInt gi(long re, long im = 0) { return GaussInt(re, im); }

inline SiegelPoint<ExactBackend> P(const std::string& text) { return parse_planar_point(text); }

inline IntegerPoint ip(const std::string& text) { return parse_integer_point(text); }

/// Rational point from a random admissible digit string.
inline SiegelPoint<ExactBackend> random_rational(Rng& rng, std::size_t max_len = 6) {
  const auto ds = random_admissible_digits(rng, max_len, Integer(1000000));
  return reconstruct(ds.gamma0, ds.digits);
}

/// Uniform point of K_D at the given precision, moved by a small integer point.
inline SiegelPoint<BigFloatBackend> random_bigfloat(Rng& rng, unsigned bits, bool translate = true) {
  const PrecisionContext ctx(bits);
  auto h = sample_K<BigFloatBackend>(rng, DirichletDomain{}, ctx);
  if (!translate) return h;
  return group_mul(random_integer_point(rng, 3, 6, true).to_siegel<BigFloatBackend>(ctx), h);
}

inline std::vector<CFExpansion<BigFloatBackend>> bigfloat_fixtures(std::size_t count, std::size_t depth, unsigned bits,
                                                                   std::uint64_t seed) {
  std::vector<CFExpansion<BigFloatBackend>> out;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, i));
    out.push_back(expand(random_bigfloat(rng, bits), DirichletDomain{}, std::optional<std::size_t>(depth)));
  }
  return out;
}

inline std::vector<CFExpansion<ExactBackend>> exact_fixtures(std::size_t count, std::uint64_t seed,
                                                             std::size_t max_len = 8) {
  std::vector<CFExpansion<ExactBackend>> out;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, i));
    out.push_back(expand(random_rational(rng, max_len), DirichletDomain{}, std::nullopt));
  }
  return out;
}

inline double bf(const BigFloat& x) { return x.to_double(); }

}  // namespace heiscf::test
