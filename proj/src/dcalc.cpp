#include "pidft/dcalc.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pidft/dft.hpp"

namespace pidft {

namespace {

template <class Fn>
GridFunction tabulate_on(const ScaledGrid& grid, Fn&& fn) {
  std::vector<Complex> values(static_cast<std::size_t>(grid.size()));
  for (std::int64_t j = grid.first_index(); j <= grid.last_index(); ++j) {
    values[grid.offset(j)] = fn(j);
  }
  return GridFunction(grid, std::move(values));
}

GridFunction multiply(const GridFunction& a, const GridFunction& b) {
  return tabulate_on(a.grid(), [&](std::int64_t j) { return a.at(j) * b.at(j); });
}

}  // namespace

GridFunction derivative(const GridFunction& g) {
  const ScaledGrid& grid = g.grid();
  const auto n = static_cast<double>(grid.n());
  return tabulate_on(grid, [&](std::int64_t j) {
    return j < grid.last_index() ? n * (g.at(j + 1) - g.at(j)) : Complex{};
  });
}

GridFunction shift(const GridFunction& g) {
  const ScaledGrid& grid = g.grid();
  return tabulate_on(grid, [&](std::int64_t j) {
    return j < grid.last_index() ? g.at(j + 1) : Complex{};
  });
}

Residual check_ftc(const GridFunction& g) {
  const ScaledGrid& grid = g.grid();
  const GridFunction gp = derivative(g);
  const Complex lhs = integrate(gp);
  const Complex rhs = g.at(grid.last_index()) - g.at(grid.first_index());
  const double scale =
      l1_norm(gp) + std::abs(g.at(grid.last_index())) + std::abs(g.at(grid.first_index()));
  return {std::abs(lhs - rhs), std::max(1.0, scale)};
}

Residual check_product_rule(const GridFunction& g, const GridFunction& h) {
  require_same_grid(g, h);
  const ScaledGrid& grid = g.grid();
  const auto n = static_cast<double>(grid.n());
  const GridFunction lhs = derivative(multiply(g, h));
  const GridFunction gp = derivative(g);
  const GridFunction hp = derivative(h);
  const GridFunction hsh = shift(h);

  double residual = 0.0;
  double scale = 1.0;
  for (std::int64_t j = grid.first_index(); j <= grid.last_index(); ++j) {
    const Complex a = gp.at(j) * hsh.at(j);
    const Complex b = g.at(j) * hp.at(j);
    residual = std::max(residual, std::abs(lhs.at(j) - (a + b)));
    double terms = std::abs(a) + std::abs(b);
    if (j < grid.last_index()) {
      terms += n * (std::abs(g.at(j + 1) * h.at(j + 1)) + std::abs(g.at(j) * h.at(j)));
    }
    scale = std::max(scale, terms);
  }
  return {residual, scale};
}

Residual check_parts(const GridFunction& g, const GridFunction& h) {
  require_same_grid(g, h);
  const ScaledGrid& grid = g.grid();
  const GridFunction gp_h = multiply(derivative(g), h);
  const GridFunction gsh_hp = multiply(shift(g), derivative(h));
  const Complex last = g.at(grid.last_index()) * h.at(grid.last_index());
  const Complex first = g.at(grid.first_index()) * h.at(grid.first_index());

  const Complex lhs = integrate(gp_h) + integrate(gsh_hp);
  const Complex rhs = last - first;
  const double scale = l1_norm(gp_h) + l1_norm(gsh_hp) + std::abs(last) + std::abs(first);
  return {std::abs(lhs - rhs), std::max(1.0, scale)};
}

PhaseFactors phase_factors(const ScaledGrid& grid) {
  const auto n = static_cast<double>(grid.n());
  const Kernel plus(grid, Sign::Positive);
  GridFunction psi = tabulate_on(grid, [&](std::int64_t k) { return n * (plus(1, k) - 1.0); });
  GridFunction phi =
      tabulate_on(grid, [&](std::int64_t k) { return std::conj(psi.at(k)); });
  return {std::move(phi), std::move(psi)};
}

BoundaryData boundary_data(const GridFunction& g) {
  const ScaledGrid& grid = g.grid();
  const auto n = static_cast<double>(grid.n());
  const std::int64_t first = grid.first_index();
  const std::int64_t last = grid.last_index();
  const Kernel minus(grid, Sign::Negative);
  const Kernel plus(grid, Sign::Positive);
  const auto [phi, psi] = phase_factors(grid);

  const Complex g_first = g.at(first);
  const Complex g_last = g.at(last);
  const Complex gp_first = first < last ? n * (g.at(first + 1) - g_first) : Complex{};

  // exp(-pi i (-n) t), exp(-pi i ((n^2-1)/n) t) and exp(pi i t/n) at t = k/n.
  auto at_first = [&](std::int64_t k) { return minus(first, k); };
  auto at_last = [&](std::int64_t k) { return minus(last, k); };
  auto step = [&](std::int64_t k) { return plus(1, k); };

  GridFunction C = tabulate_on(grid, [&](std::int64_t k) {
    return g_last * at_last(k) - g_first * at_first(k);
  });
  GridFunction D = tabulate_on(grid, [&](std::int64_t k) {
    return -(1.0 / n) * g_first * step(k) * at_first(k);
  });
  GridFunction Cp = tabulate_on(grid, [&](std::int64_t k) { return -gp_first * at_first(k); });
  GridFunction Dp = tabulate_on(grid, [&](std::int64_t k) {
    return -(1.0 / n) * gp_first * step(k) * at_first(k);
  });
  GridFunction E = tabulate_on(grid, [&](std::int64_t k) {
    return phi.at(k) * D.at(k) - C.at(k);
  });
  GridFunction F = tabulate_on(grid, [&](std::int64_t k) {
    return psi.at(k) * phi.at(k) * D.at(k) - psi.at(k) * C.at(k) + phi.at(k) * Dp.at(k) -
           Cp.at(k);
  });
  return {std::move(C), std::move(D), std::move(Cp), std::move(Dp), std::move(E), std::move(F)};
}

namespace {

struct IdentityTerms {
  Complex psi, ghat, g1hat, g2hat, E, F;
};

DftIdentityResidual residuals(const IdentityTerms& v, double l1_g, double l1_g1, double l1_g2) {
  const double apsi = std::abs(v.psi);
  DftIdentityResidual r;
  r.first.residual = std::abs(v.psi * v.ghat - v.g1hat - v.E);
  r.first.scale = std::max(1.0, apsi * l1_g + l1_g1 + std::abs(v.E));
  r.second.residual = std::abs(v.psi * v.psi * v.ghat - v.g2hat - v.F);
  r.second.scale = std::max(1.0, apsi * apsi * l1_g + l1_g2 + std::abs(v.F));
  return r;
}

}  // namespace

DftIdentityResidual check_dft_identity(const GridFunction& g, std::int64_t k) {
  if (k == 0) throw std::invalid_argument("check_dft_identity: t = 0 (psi vanishes there)");
  const ScaledGrid& grid = g.grid();
  if (!grid.contains_index(k)) throw std::out_of_range("check_dft_identity: t outside the grid");
  const GridFunction g1 = derivative(g);
  const GridFunction g2 = derivative(g1);
  const BoundaryData bd = boundary_data(g);
  const PhaseFactors pf = phase_factors(grid);
  const IdentityTerms terms{pf.psi.at(k), dft_at(g, k), dft_at(g1, k), dft_at(g2, k),
                            bd.E.at(k),   bd.F.at(k)};
  return residuals(terms, l1_norm(g), l1_norm(g1), l1_norm(g2));
}

DftIdentitySweep sweep_dft_identity(const GridFunction& g) {
  const ScaledGrid& grid = g.grid();
  const GridFunction g1 = derivative(g);
  const GridFunction g2 = derivative(g1);
  const GridFunction ghat = dft(g);
  const GridFunction g1hat = dft(g1);
  const GridFunction g2hat = dft(g2);
  const BoundaryData bd = boundary_data(g);
  const PhaseFactors pf = phase_factors(grid);
  const double l1_g = l1_norm(g), l1_g1 = l1_norm(g1), l1_g2 = l1_norm(g2);

  DftIdentitySweep sweep;
  for (std::int64_t k = grid.first_index(); k <= grid.last_index(); ++k) {
    if (k == 0) continue;
    const IdentityTerms terms{pf.psi.at(k), ghat.at(k), g1hat.at(k), g2hat.at(k),
                              bd.E.at(k),   bd.F.at(k)};
    const auto r = residuals(terms, l1_g, l1_g1, l1_g2);
    sweep.worst_first = std::max(sweep.worst_first, r.first.relative());
    sweep.worst_second = std::max(sweep.worst_second, r.second.relative());
  }
  return sweep;
}

}  // namespace pidft
