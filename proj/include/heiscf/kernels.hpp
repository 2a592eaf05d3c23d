// SPDX-License-Identifier: Apache-2.0
#pragma once

// Batch kernels over structure-of-arrays samples of S in double precision.
// Each kernel has a scalar reference and an AVX2 variant that performs the
// same operations in the same order, so results agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace heiscf::kernels {

enum class Isa { scalar, avx2 };

/// Planar point (u, v) reduced to what the distance needs: u and Im v.
struct Center {
  double ur;
  double ui;
  double vi;
};

/// out[k] = d(c, h_k)^4 for h_k = (ur[k] + ui[k] i, |u|^2/2 + vi[k] i):
///   A = |u_k - u_c|^2 / 2,  B = vi[k] - c.vi - (c.ur ui[k] - c.ui ur[k]),
///   d^4 = A^2 + B^2.
void gauge_dist4(const Center& c, const double* ur, const double* ui, const double* vi, std::size_t n, double* out);

/// Sets hit[k] = 1 where d(c, h_k)^4 <= r4. Returns how many were set.
std::size_t mark_within(const Center& c, const double* ur, const double* ui, const double* vi, std::size_t n, double r4,
                        std::uint8_t* hit);

/// #{k : |z_k|^4 + t_k^2 <= 1} for z_k = x[k] + y[k] i.
std::size_t count_heis_ball(const double* x, const double* y, const double* t, std::size_t n);

bool isa_available(Isa isa);
/// Best available ISA unless overridden by force_isa.
Isa active_isa();
/// Pins the dispatch (tests); std::nullopt restores auto-detection.
void force_isa(std::optional<Isa> isa);
std::string_view isa_name(Isa isa);

namespace scalar {
void gauge_dist4(const Center& c, const double* ur, const double* ui, const double* vi, std::size_t n, double* out);
std::size_t mark_within(const Center& c, const double* ur, const double* ui, const double* vi, std::size_t n, double r4,
                        std::uint8_t* hit);
std::size_t count_heis_ball(const double* x, const double* y, const double* t, std::size_t n);
}  // namespace scalar

namespace avx2 {
void gauge_dist4(const Center& c, const double* ur, const double* ui, const double* vi, std::size_t n, double* out);
std::size_t mark_within(const Center& c, const double* ur, const double* ui, const double* vi, std::size_t n, double r4,
                        std::uint8_t* hit);
std::size_t count_heis_ball(const double* x, const double* y, const double* t, std::size_t n);
}  // namespace avx2

}  // namespace heiscf::kernels
