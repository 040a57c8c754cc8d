#pragma once

// Forward difference and shift on the grid, the summation-by-parts identities,
// and the boundary terms through which the transform of a discrete derivative
// relates to the transform of the function:
//
//   psi(t) ghat(t)   = dft(g')(t)  + E(t)
//   psi(t)^2 ghat(t) = dft(g'')(t) + F(t)
//
// Both derivative and shift set the last grid point to zero.

#include <cstdint>

#include "pidft/grid.hpp"

namespace pidft {

/// g'(j/n) = n (g((j+1)/n) - g(j/n)), and 0 at the last point.
GridFunction derivative(const GridFunction& g);

/// g_sh(j/n) = g((j+1)/n), and 0 at the last point.
GridFunction shift(const GridFunction& g);

/// Absolute residual of an identity together with the magnitude of the terms
/// that entered it (at least 1), so callers can test residual <= tol * scale.
struct Residual {
  double residual = 0.0;
  double scale = 1.0;

  bool within(double tol) const noexcept { return residual <= tol * scale; }
  double relative() const noexcept { return residual / scale; }
};

/// integral of g' = g(last) - g(-n).
Residual check_ftc(const GridFunction& g);

/// (gh)' = g' h_sh + g h', max-norm residual. Throws on grid mismatch.
Residual check_product_rule(const GridFunction& g, const GridFunction& h);

/// integral g'h = -integral g_sh h' + gh(last) - gh(-n). Throws on grid mismatch.
Residual check_parts(const GridFunction& g, const GridFunction& h);

/// phi(t) = n (exp(-pi i t/n) - 1), psi(t) = n (exp(pi i t/n) - 1) at the grid
/// points t = k/n.
struct PhaseFactors {
  GridFunction phi;
  GridFunction psi;
};

PhaseFactors phase_factors(const ScaledGrid& grid);

/// The boundary functions C, D, C', D' and the combined error terms E, F.
struct BoundaryData {
  GridFunction C;
  GridFunction D;
  GridFunction Cp;
  GridFunction Dp;
  GridFunction E;
  GridFunction F;
};

BoundaryData boundary_data(const GridFunction& g);

struct DftIdentityResidual {
  Residual first;   // |psi ghat - dft(g') - E|
  Residual second;  // |psi^2 ghat - dft(g'') - F|
};

/// Checks both identities at the nonzero grid point t = k/n, with every
/// transform evaluated directly at t. Throws std::invalid_argument for k = 0.
DftIdentityResidual check_dft_identity(const GridFunction& g, std::int64_t k);

/// Worst relative residuals of both identities over every nonzero grid t,
/// using full transforms.
struct DftIdentitySweep {
  double worst_first = 0.0;
  double worst_second = 0.0;
};

DftIdentitySweep sweep_dft_identity(const GridFunction& g);

}  // namespace pidft
