#pragma once

// Test functions of the form P(x) exp(-a x^2), P a complex polynomial.
// Derivatives and the closed-form transform under exp(-pi i x t) follow from
// the coefficients, at double or extended precision.

#include <cstdint>
#include <string>
#include <vector>

#include "pidft/grid.hpp"
#include "pidft/schwartz.hpp"

namespace pidft {

struct PolyGaussian {
  std::string name;
  /// P(x) = sum_m coefficients[m] x^m.
  std::vector<Complex> coefficients;
  /// a = alpha * pi^pi_power, pi_power in {0, 1}.
  double alpha = 1.0;
  int pi_power = 0;
};

SchwartzFunction make_function(const PolyGaussian& spec);

/// gaussian          exp(-pi x^2 / 2)
/// gauss_unit        exp(-x^2)
/// gauss_pi          exp(-pi x^2)
/// hermite1          x exp(-pi x^2 / 2)
/// x2_gauss          x^2 exp(-x^2)
/// gauss_ihermite1   (1 + i x) exp(-pi x^2 / 2)
std::vector<SchwartzFunction> catalog_list();

/// Catalog lookup; also knows "zero". Throws std::invalid_argument listing the
/// known names.
SchwartzFunction find_function(const std::string& name);

std::vector<std::string> catalog_names();

GridFunction sample(const SchwartzFunction& f, const ScaledGrid& grid);

/// integral g(x) exp(-pi i x t) dx by adaptive quadrature on [-R, R], where
/// R makes the neglected tail smaller than tol/2. When a closed form exists the
/// two must agree within 2 tol; otherwise NonConvergenceError is thrown.
Complex reference_transform(const SchwartzFunction& f, double t, double tol);

/// integral over [-n, n) of |f(x) - f([n x]/n)| plus integral over |x| > n of |f|.
double l1_discretization_error(const SchwartzFunction& f, std::int64_t n, double tol = 1e-12);

/// Radius beyond which the integral of |f| is below tail_tol (from C12).
double truncation_radius(const SchwartzFunction& f, double tail_tol);

}  // namespace pidft
