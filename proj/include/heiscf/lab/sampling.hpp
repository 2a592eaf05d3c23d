// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <vector>

#include "heiscf/cf_engine.hpp"
#include "heiscf/lab/random.hpp"

namespace heiscf {

/// Uniform in [-1, 1) with `bits` random mantissa bits.
BigFloat random_signed_unit(Rng& rng, const PrecisionContext& ctx);

/// Uniform point of K_D for the measure inherited from C x R, by rejection
/// from the box |Re z|, |Im z| <= 2^(-1/4), |t| <= 2^(-1/2) (which contains
/// K_D and has volume 4). Points whose membership is ambiguous are rejected.
template <class B>
SiegelPoint<B> sample_K(Rng& rng, const DirichletDomain& domain, const typename B::Context& ctx,
                        std::uint64_t* attempts = nullptr) {
  for (;;) {
    if (attempts) ++*attempts;
    HeisPoint<B> p;
    if constexpr (std::is_same_v<B, DoubleBackend>) {
      const double a = std::pow(2.0, -0.25);
      const double b = std::sqrt(0.5);
      p.z = {rng.uniform(-a, a), rng.uniform(-a, a)};
      p.t = rng.uniform(-b, b);
    } else {
      const BigFloat half(Rational(1, 2), ctx);
      const BigFloat b = sqrt(half);
      const BigFloat a = sqrt(b);
      p.z = {random_signed_unit(rng, ctx) * a, random_signed_unit(rng, ctx) * a};
      p.t = random_signed_unit(rng, ctx) * b;
    }
    auto h = from_heis(p);
    if (domain.contains(h) == Membership::inside) return h;
  }
}

struct DigitString {
  IntegerPoint gamma0;
  std::vector<IntegerPoint> digits;
};

/// Nonzero integer point with |Re u|, |Im u| <= u_box and |Im v| <= c_box.
IntegerPoint random_integer_point(Rng& rng, int u_box, int c_box, bool allow_origin = false);

/// Digit string whose reconstruction expands back to itself. Built from the
/// tail: h_n = 0 and h_(k-1) = iota(gamma_k * h_k), keeping a digit only if
/// h_(k-1) lies strictly inside K_D and its denominator satisfies |q| <= q_bound.
DigitString random_admissible_digits(Rng& rng, std::size_t max_len, const Integer& q_bound);

/// Digits with |v| >= 9. Every such string is admissible: each tail point
/// then has norm below 1/2, which puts it strictly inside K_D.
DigitString random_safe_digits(Rng& rng, std::size_t max_len);

struct VolumeEstimate {
  double volume = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Monte Carlo volume of {(z, t) : |z|^4 + t^2 <= 1} from uniform samples of
/// the box [-1, 1]^3. The exact value is pi^2 / 2.
VolumeEstimate heis_ball_volume(std::uint64_t samples, std::uint64_t seed, unsigned threads);

}  // namespace heiscf
