#pragma once

// Independent brute-force transforms for the tests: long double, phase taken
// straight from the product j*k with no integer reduction or tables.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "pidft/grid.hpp"

namespace pidft::testing {

inline std::vector<Complex> brute_transform(const GridFunction& g, int sign, long double scale) {
  const ScaledGrid& grid = g.grid();
  const long double n2 = static_cast<long double>(grid.n() * grid.n());
  std::vector<Complex> out;
  for (std::int64_t k = grid.first_index(); k <= grid.last_index(); ++k) {
    std::complex<long double> s{};
    for (std::int64_t j = grid.first_index(); j <= grid.last_index(); ++j) {
      const long double angle = sign * std::numbers::pi_v<long double> *
                                static_cast<long double>(j * k) / n2;
      const Complex v = g.at(j);
      s += std::complex<long double>(v.real(), v.imag()) *
           std::complex<long double>(std::cos(angle), std::sin(angle));
    }
    s *= scale;
    out.emplace_back(static_cast<double>(s.real()), static_cast<double>(s.imag()));
  }
  return out;
}

inline std::vector<Complex> brute_dft(const GridFunction& g) {
  return brute_transform(g, -1, 1.0L / g.grid().n());
}

inline std::vector<Complex> brute_idft(const GridFunction& g) {
  return brute_transform(g, +1, 0.5L / g.grid().n());
}

inline double max_gap(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace pidft::testing
