#pragma once

// Decay constants and the explicit inequalities that control the transform
// tails: the uniform bound W on |dft(g'')| + |F|, the tail threshold
// N(eps) = W/(2 eps) + 1, grid tail masses, and the exterior tail 3 C2 / N.

#include <cstdint>
#include <string>
#include <vector>

#include "pidft/grid.hpp"
#include "pidft/schwartz.hpp"

namespace pidft {

struct DecaySearch {
  double half_width = 16.0;
  double step = 1e-3;
  double quad_tol = 1e-9;
};

/// Dense search over [-half_width, half_width] refined by golden section; M by
/// adaptive quadrature of |g''|. Throws NonConvergenceError when a supremum
/// sits on the edge of the search window or the quadrature fails.
DecayConstants decay_constants(const SchwartzFunction& f, const DecaySearch& search = {});

/// W = 16 D1 + M + 2 B.
double uniform_bound_W(const DecayConstants& dc);

/// N(eps) = W / (2 eps) + 1. Throws std::invalid_argument for eps <= 0.
double tail_threshold(double epsilon, double W);

/// (1/n) sum of |g| over grid points x with min(L, Lp) <= x < max(L, Lp).
/// Requires L * Lp > 0 and |L| <= |Lp|; throws std::invalid_argument otherwise.
double tail_mass(const GridFunction& g, double L, double Lp);

struct TailCheck {
  double measured = 0.0;
  double bound = 0.0;
};

/// measured = (1/n) (sum_{|j| >= N n + 1} |f(j/n)| + |f(N)|) over all integers
/// j, bound = 3 C2 / N. Requires N >= 2 and n >= 1.
TailCheck ext_tail_bound(const SchwartzFunction& f, std::int64_t n, std::int64_t N);

/// One line of a bound report: measured <= bound (strict for tail masses).
struct BoundRow {
  std::string function;
  std::int64_t n = 0;
  std::string quantity;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct BoundSuiteOptions {
  std::vector<std::int64_t> n_list{2, 4, 8, 16, 32};
  std::vector<double> eps_list{0.5, 0.1, 0.02};
  std::vector<std::int64_t> exterior_N{2, 4, 8};
};

/// Every inequality of the bound suite for one function, evaluated on the
/// grids in n_list (n >= 2). Row order is deterministic.
std::vector<BoundRow> bound_report(const SchwartzFunction& f, const BoundSuiteOptions& options);

}  // namespace pidft
