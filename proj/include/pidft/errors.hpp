#pragma once

#include <stdexcept>
#include <string>

namespace pidft {

/// Raised when a function evaluator fails or returns a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double point)
      : std::runtime_error(what), point_(point) {}

  double point() const noexcept { return point_; }

 private:
  double point_;
};

/// Raised by iterative numerics (quadrature, maximization) that fail to reach
/// the requested tolerance. Carries the best error estimate achieved.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}

  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace pidft
