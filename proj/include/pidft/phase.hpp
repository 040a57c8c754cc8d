#pragma once

#include <complex>
#include <cstdint>
#include <numbers>

namespace pidft {

/// Non-negative residue of r modulo period (period > 0).
inline std::int64_t reduce_mod(std::int64_t r, std::int64_t period) noexcept {
  const std::int64_t q = r % period;
  return q < 0 ? q + period : q;
}

/// exp(2*pi*i * r / period), with r reduced in integer arithmetic first so the
/// trig argument stays in [0, 2*pi). Quarter turns are returned exactly.
inline std::complex<double> unit_root(std::int64_t r, std::int64_t period) noexcept {
  r = reduce_mod(r, period);
  if ((4 * r) % period == 0) {
    switch ((4 * r) / period) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(period);
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace pidft
