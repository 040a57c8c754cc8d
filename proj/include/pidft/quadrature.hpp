#pragma once

// Global adaptive Gauss-Kronrod (10/21-point) quadrature with an absolute
// error target. Intervals with the largest error estimate are bisected first.

#include <complex>
#include <functional>

namespace pidft {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  /// Initial equal panels; raise for oscillatory integrands.
  int initial_panels = 1;
  int max_intervals = 20000;
};

template <class T>
struct QuadratureResult {
  T value{};
  double error = 0.0;
  int evaluations = 0;
};

/// Throws NonConvergenceError (carrying the achieved estimate) when the
/// interval budget runs out before the error estimate drops below abs_tol.
QuadratureResult<std::complex<double>> integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureOptions& options = {});

QuadratureResult<double> integrate_adaptive_real(const std::function<double(double)>& f, double a,
                                                 double b, const QuadratureOptions& options = {});

}  // namespace pidft
