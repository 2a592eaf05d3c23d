// SPDX-License-Identifier: Apache-2.0
#include <atomic>

#include "heiscf/kernels.hpp"

namespace heiscf::kernels {

namespace {

// -1: auto-detect, otherwise the forced Isa value.
std::atomic<int> g_forced{-1};

Isa detect() {
#if defined(HEISCF_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
  return Isa::scalar;
}

}  // namespace

bool isa_available(Isa isa) { return isa == Isa::scalar || detect() == Isa::avx2; }

Isa active_isa() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  static const Isa detected = detect();
  return detected;
}

void force_isa(std::optional<Isa> isa) {
  if (isa && !isa_available(*isa)) return;
  g_forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void gauge_dist4(const Center& c, const double* ur, const double* ui, const double* vi, std::size_t n, double* out) {
  if (active_isa() == Isa::avx2) return avx2::gauge_dist4(c, ur, ui, vi, n, out);
  scalar::gauge_dist4(c, ur, ui, vi, n, out);
}

std::size_t mark_within(const Center& c, const double* ur, const double* ui, const double* vi, std::size_t n, double r4,
                        std::uint8_t* hit) {
  if (active_isa() == Isa::avx2) return avx2::mark_within(c, ur, ui, vi, n, r4, hit);
  return scalar::mark_within(c, ur, ui, vi, n, r4, hit);
}

std::size_t count_heis_ball(const double* x, const double* y, const double* t, std::size_t n) {
  if (active_isa() == Isa::avx2) return avx2::count_heis_ball(x, y, t, n);
  return scalar::count_heis_ball(x, y, t, n);
}

}  // namespace heiscf::kernels
