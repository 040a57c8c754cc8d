#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "pidft/bigfloat.hpp"

namespace pidft {

using Complex = std::complex<double>;

/// Decay constants of a rapidly decreasing function. For complex functions
/// each constant is the sum of the constants of the real and imaginary parts.
struct DecayConstants {
  double B = 0.0;   // sup |g|
  double D1 = 0.0;  // sup |x| |g(x)|
  double C2 = 0.0;  // sup x^2 |g(x)|
  double M = 0.0;   // integral of |g''|
  /// sup |x|^12 |g(x)|; sets quadrature truncation radii.
  double C12 = 0.0;
};

/// Evaluator bundle for a rapidly decreasing function: the function, its first
/// and second derivatives, and optionally a closed-form transform
/// ghat(t) = integral g(x) exp(-pi i x t) dx. The extended-precision
/// evaluators are optional and only used by the convergence harness.
struct SchwartzFunction {
  std::string name;
  std::function<Complex(double)> eval;
  std::function<Complex(double)> d1;
  std::function<Complex(double)> d2;
  std::function<Complex(double)> transform;  // empty when no closed form

  std::function<BigComplex(const BigFloat&)> eval_big;
  std::function<BigComplex(const BigFloat&)> transform_big;

  bool has_closed_form() const noexcept { return static_cast<bool>(transform); }
  bool has_big_evaluators() const noexcept {
    return static_cast<bool>(eval_big) && static_cast<bool>(transform_big);
  }

  /// Computed on first use with default search settings, then cached; copies
  /// share the cache.
  const DecayConstants& decay() const;

  struct DecayCache {
    std::once_flag once;
    DecayConstants value;
  };
  std::shared_ptr<DecayCache> decay_cache = std::make_shared<DecayCache>();
};

}  // namespace pidft
