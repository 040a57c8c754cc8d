#pragma once

// The pi-scaled transform on the grid of parameter n:
//
//   dft(g)(t_k)  = (1/n)     sum_j g(x_j)    exp(-pi i j k / n^2)
//   idft(G)(x_j) = (1/2)(1/n) sum_k G(t_k) exp(+pi i j k / n^2)
//
// with x_j = j/n, t_k = k/n. idft(dft(g)) = g exactly in exact arithmetic.
// The naive transform is the reference implementation; the fast path reindexes
// to a standard length-2n^2 DFT and must agree with it to 1e-10.

#include <complex>
#include <cstdint>

#include "pidft/grid.hpp"

namespace pidft {

enum class Sign : int { Negative = -1, Positive = +1 };

/// exp(sign * pi i j k / n^2) on grid indices, phase jk reduced mod 2n^2.
class Kernel {
 public:
  Kernel(ScaledGrid grid, Sign sign) : grid_(grid), sign_(sign) {}

  const ScaledGrid& grid() const noexcept { return grid_; }
  Sign sign() const noexcept { return sign_; }

  Complex operator()(std::int64_t j, std::int64_t k) const noexcept;

 private:
  ScaledGrid grid_;
  Sign sign_;
};

/// exp(sign * pi i [n x]/n [n t]/n). Throws std::out_of_range unless both
/// arguments lie in [-n, n).
Complex kernel_eval(const ScaledGrid& grid, Sign sign, double x, double t);

struct TransformOptions {
  /// Worker threads for the naive path; output is identical for any count.
  unsigned threads = 1;
};

GridFunction dft(const GridFunction& g, const TransformOptions& options = {});
GridFunction idft(const GridFunction& ghat, const TransformOptions& options = {});

/// Single output value dft(g)(t_k), O(2n^2).
Complex dft_at(const GridFunction& g, std::int64_t k);

GridFunction dft_fast(const GridFunction& g);
GridFunction idft_fast(const GridFunction& ghat);

}  // namespace pidft
