// SPDX-License-Identifier: Apache-2.0
#pragma once

// Gaussian-integer 3x3 matrices acting projectively on (q : r : p), with the
// planar identification (u, v) <-> (1 : u : v).

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "heiscf/siegel.hpp"

namespace heiscf {

class UMatrix {
 public:
  /// Zero matrix.
  UMatrix() = default;
  /// Row-major entries.
  explicit UMatrix(std::array<GaussInt, 9> entries) : e_(std::move(entries)) {}

  static UMatrix identity();

  const GaussInt& operator()(int row, int col) const { return e_[static_cast<std::size_t>(3 * row + col)]; }
  GaussInt& operator()(int row, int col) { return e_[static_cast<std::size_t>(3 * row + col)]; }

  IntTriple column(int col) const { return {(*this)(0, col), (*this)(1, col), (*this)(2, col)}; }

  friend UMatrix operator*(const UMatrix& a, const UMatrix& b);
  friend bool operator==(const UMatrix&, const UMatrix&) = default;

 private:
  std::array<GaussInt, 9> e_;
};

/// [[0,0,-1],[0,1,0],[-1,0,0]]
UMatrix matrix_J();

/// T_g = [[1,0,0],[u,1,0],[v,conj(u),1]], so that T_g h = g * h.
UMatrix translation_matrix(const IntegerPoint& g);
/// Throws std::invalid_argument if h is not an integer point.
UMatrix translation_matrix(const SiegelPoint<ExactBackend>& h);

/// A_g = J T_g
UMatrix digit_matrix(const IntegerPoint& g);

/// Complex transpose.
UMatrix dagger(const UMatrix& m);

/// J M^dagger J M == I
bool u21_check(const UMatrix& m);

/// J M^dagger J; throws std::invalid_argument("not in U(2,1;Z[i])") otherwise.
UMatrix u21_inverse(const UMatrix& m);

IntTriple apply(const UMatrix& m, const IntTriple& t);
/// Throws std::domain_error("image at infinity") if the image has q = 0.
ProjIntPoint apply(const UMatrix& m, const ProjIntPoint& p);

template <class B>
SiegelPoint<B> apply(const UMatrix& m, const SiegelPoint<B>& h) {
  const auto ctx = h.context();
  auto entry = [&](int r, int c) { return B::from_gauss(m(r, c), ctx); };
  typename B::Complex x[3];
  for (int r = 0; r < 3; ++r) x[r] = entry(r, 0) + entry(r, 1) * h.u() + entry(r, 2) * h.v();
  if (B::is_zero(x[0])) throw std::domain_error("image at infinity");
  typename B::Complex u = x[1] / x[0];
  typename B::Complex v = x[2] / x[0];
  if constexpr (!B::is_exact) {
    v.re = norm(u) * B::real(Rational(1, 2), ctx);
  }
  return SiegelPoint<B>::trusted(std::move(u), std::move(v));
}

/// Row-major `[[a,b,c],[d,e,f],[g,h,k]]`.
std::string to_string(const UMatrix& m);
UMatrix parse_umatrix(std::string_view text);

}  // namespace heiscf
