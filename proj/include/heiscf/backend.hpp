// SPDX-License-Identifier: Apache-2.0
#pragma once

// Numeric backends. Every geometric routine is written once against the
// Backend concept and instantiated for:
//   ExactBackend     Gaussian-rational coordinates, no rounding at all
//   BigFloatBackend  MPFR coordinates at an explicit PrecisionContext
//   DoubleBackend    hardware doubles, used by the Monte Carlo experiments

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string_view>
#include <type_traits>

#include "heiscf/bigfloat.hpp"
#include "heiscf/gaussian.hpp"

namespace heiscf {

/// Raised when two values from different precision contexts are combined.
class BackendMismatch : public std::invalid_argument {
 public:
  BackendMismatch() : std::invalid_argument("backend mismatch") {}
};

struct ExactBackend {
  using Complex = GaussRat;
  using Real = Rational;
  using Root = double;
  struct Context {
    friend bool operator==(const Context&, const Context&) = default;
  };
  static constexpr std::string_view name = "exact";
  static constexpr bool is_exact = true;

  static Context context_of(const Complex&) { return {}; }
  static bool is_zero(const Complex& z) { return z.is_zero(); }
  static unsigned bits(Context) { return 0; }
  static Complex from_gauss(const GaussInt& g, Context) { return GaussRat(g); }
  static Complex from_rational(const Rational& re, const Rational& im, Context) { return GaussRat(re, im); }
  static Real real(const Rational& x, Context) { return x; }
  static Complex complex(const Real& re, const Real& im) { return GaussRat(re, im); }
  static double to_double(const Real& x) { return x.convert_to<double>(); }
  static Integer floor(const Real& x) { return heiscf::floor(x); }
  static Real abs(const Real& x) { return x < 0 ? Real(-x) : x; }
  /// x^(1/4) of a nonnegative real, rounded to double.
  static Root root4(const Real& x) { return std::sqrt(std::sqrt(to_double(x))); }
  static Root root2(const Real& x) { return std::sqrt(to_double(x)); }
  /// Squared tolerance used by identity checks; exact means zero.
  static Real tolerance_sq(Context) { return Real(0); }
};

struct BigFloatBackend {
  using Complex = BigComplex;
  using Real = BigFloat;
  using Root = BigFloat;
  using Context = PrecisionContext;
  static constexpr std::string_view name = "bigfloat";
  static constexpr bool is_exact = false;

  static Context context_of(const Complex& z) { return z.re.context(); }
  static bool is_zero(const Complex& z) { return z.re.is_zero() && z.im.is_zero(); }
  static unsigned bits(const Context& c) { return c.bits(); }
  static Complex from_gauss(const GaussInt& g, const Context& c) { return {BigFloat(g.re(), c), BigFloat(g.im(), c)}; }
  static Complex from_rational(const Rational& re, const Rational& im, const Context& c) {
    return {BigFloat(re, c), BigFloat(im, c)};
  }
  static Real real(const Rational& x, const Context& c) { return BigFloat(x, c); }
  static Complex complex(const Real& re, const Real& im) { return {re, im}; }
  static double to_double(const Real& x) { return x.to_double(); }
  static Integer floor(const Real& x) { return x.floor_integer(); }
  static Real abs(const Real& x) { return heiscf::abs(x); }
  static Root root4(const Real& x) { return sqrt(sqrt(x)); }
  static Root root2(const Real& x) { return sqrt(x); }
  /// (2^(-bits/2))^2
  static Real tolerance_sq(const Context& c) { return BigFloat::pow2(-static_cast<long>(c.bits()), c); }
};

struct DoubleBackend {
  using Complex = DoubleComplex;
  using Real = double;
  using Root = double;
  struct Context {
    friend bool operator==(const Context&, const Context&) = default;
  };
  static constexpr std::string_view name = "double";
  static constexpr bool is_exact = false;

  static Context context_of(const Complex&) { return {}; }
  static bool is_zero(const Complex& z) { return z.re == 0.0 && z.im == 0.0; }
  static unsigned bits(Context) { return 53; }
  static Complex from_gauss(const GaussInt& g, Context) {
    return {g.re().convert_to<double>(), g.im().convert_to<double>()};
  }
  static Complex from_rational(const Rational& re, const Rational& im, Context) {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }
  static Real real(const Rational& x, Context) { return x.convert_to<double>(); }
  static Complex complex(Real re, Real im) { return {re, im}; }
  static double to_double(Real x) { return x; }
  static Integer floor(Real x) { return Integer(std::floor(x)); }
  static Real abs(Real x) { return std::fabs(x); }
  static Root root4(Real x) { return std::sqrt(std::sqrt(x)); }
  static Root root2(Real x) { return std::sqrt(x); }
  static Real tolerance_sq(Context) { return std::ldexp(1.0, -53); }
};

template <class B>
concept Backend = requires(const typename B::Complex& z, const typename B::Real& x, const GaussInt& g) {
  typename B::Context;
  { B::context_of(z) } -> std::convertible_to<typename B::Context>;
  { B::from_gauss(g, B::context_of(z)) } -> std::convertible_to<typename B::Complex>;
  { B::to_double(x) } -> std::convertible_to<double>;
  { B::floor(x) } -> std::convertible_to<Integer>;
  { B::root4(x) } -> std::convertible_to<typename B::Root>;
  { norm(z) } -> std::convertible_to<typename B::Real>;
  { conj(z) } -> std::convertible_to<typename B::Complex>;
};

static_assert(Backend<ExactBackend>);
static_assert(Backend<BigFloatBackend>);
static_assert(Backend<DoubleBackend>);

template <class B>
double root_to_double(const typename B::Root& x) {
  if constexpr (std::is_same_v<typename B::Root, double>) {
    return x;
  } else {
    return x.to_double();
  }
}

/// Throws BackendMismatch unless all values share one precision context.
template <class B, class... Zs>
void require_same_context(const typename B::Complex& first, const Zs&... rest) {
  if constexpr (std::is_same_v<B, BigFloatBackend>) {
    const unsigned bits = first.re.precision();
    auto same = [bits](const BigComplex& z) { return z.re.precision() == bits && z.im.precision() == bits; };
    if (!same(first) || !(same(rest) && ...)) throw BackendMismatch();
  }
}

}  // namespace heiscf
