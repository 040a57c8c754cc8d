#include "pidft/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pidft/catalog.hpp"
#include "pidft/dcalc.hpp"
#include "pidft/dft.hpp"
#include "pidft/errors.hpp"
#include "pidft/quadrature.hpp"

namespace pidft {

namespace {

// Weights |x|^p for the suprema B, D1, C2 and C12.
constexpr std::array<int, 4> kPowers{0, 1, 2, 12};

double weighted(double magnitude, double x, int power) {
  return power == 0 ? magnitude : magnitude * std::pow(std::abs(x), power);
}

// Maximum of h on [lo, hi] by golden section, assuming one local peak.
template <class Fn>
double golden_max(Fn&& h, double lo, double hi) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double h1 = h(x1), h2 = h(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
    if (h1 < h2) {
      lo = x1;
      x1 = x2;
      h1 = h2;
      x2 = lo + r * (hi - lo);
      h2 = h(x2);
    } else {
      hi = x2;
      x2 = x1;
      h2 = h1;
      x1 = hi - r * (hi - lo);
      h1 = h(x1);
    }
  }
  return std::max(h1, h2);
}

const char* power_name(int power) {
  switch (power) {
    case 0: return "B";
    case 1: return "D1";
    case 2: return "C2";
    default: return "C12";
  }
}

std::string format_short(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

DecayConstants decay_constants(const SchwartzFunction& f, const DecaySearch& search) {
  if (!(search.step > 0.0) || !(search.half_width > search.step)) {
    throw std::invalid_argument("decay_constants: bad search window");
  }
  const auto points = static_cast<std::int64_t>(std::llround(2.0 * search.half_width / search.step));
  std::vector<Complex> values(static_cast<std::size_t>(points + 1));
  for (std::int64_t i = 0; i <= points; ++i) {
    values[static_cast<std::size_t>(i)] = f.eval(-search.half_width + search.step * static_cast<double>(i));
  }

  std::array<double, kPowers.size()> sup{};
  for (int part = 0; part < 2; ++part) {
    auto component = [&](double x) {
      const Complex v = f.eval(x);
      return std::abs(part == 0 ? v.real() : v.imag());
    };
    for (std::size_t p = 0; p < kPowers.size(); ++p) {
      const int power = kPowers[p];
      double best = 0.0;
      std::int64_t best_i = -1;
      for (std::int64_t i = 0; i <= points; ++i) {
        const double x = -search.half_width + search.step * static_cast<double>(i);
        const Complex v = values[static_cast<std::size_t>(i)];
        const double h = weighted(std::abs(part == 0 ? v.real() : v.imag()), x, power);
        if (h > best) {
          best = h;
          best_i = i;
        }
      }
      if (best_i < 0) continue;
      if (best_i == 0 || best_i == points) {
        std::ostringstream msg;
        msg << "supremum " << power_name(power) << " of " << f.name
            << " lies on the edge of the search window";
        throw NonConvergenceError(msg.str(), best);
      }
      const double center = -search.half_width + search.step * static_cast<double>(best_i);
      const double refined = golden_max(
          [&](double x) { return weighted(component(x), x, power); }, center - search.step,
          center + search.step);
      sup[p] += std::max(best, refined);
    }
  }

  QuadratureOptions quad;
  quad.abs_tol = search.quad_tol / 2.0;
  quad.initial_panels = static_cast<int>(std::ceil(4.0 * search.half_width));
  quad.max_intervals = 200000;
  double m = 0.0;
  for (int part = 0; part < 2; ++part) {
    m += integrate_adaptive_real(
             [&](double x) {
               const Complex v = f.d2(x);
               return std::abs(part == 0 ? v.real() : v.imag());
             },
             -search.half_width, search.half_width, quad)
             .value;
  }

  DecayConstants dc;
  dc.B = sup[0];
  dc.D1 = sup[1];
  dc.C2 = sup[2];
  dc.C12 = sup[3];
  dc.M = m;
  return dc;
}

const DecayConstants& SchwartzFunction::decay() const {
  std::call_once(decay_cache->once, [this] { decay_cache->value = decay_constants(*this); });
  return decay_cache->value;
}

double uniform_bound_W(const DecayConstants& dc) { return 16.0 * dc.D1 + dc.M + 2.0 * dc.B; }

double tail_threshold(double epsilon, double W) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("tail_threshold: epsilon must be positive");
  return W / (2.0 * epsilon) + 1.0;
}

double tail_mass(const GridFunction& g, double L, double Lp) {
  if (!(L * Lp > 0.0) || std::abs(L) > std::abs(Lp)) {
    throw std::invalid_argument("tail_mass: need L * L' > 0 and |L| <= |L'|");
  }
  const double lo = std::min(L, Lp);
  const double hi = std::max(L, Lp);
  const ScaledGrid& grid = g.grid();
  std::vector<double> terms;
  for (std::int64_t j = grid.first_index(); j <= grid.last_index(); ++j) {
    const double x = grid.point(j);
    if (x >= lo && x < hi) terms.push_back(std::abs(g.at(j)));
  }
  return pairwise_sum(terms) * grid.weight();
}

TailCheck ext_tail_bound(const SchwartzFunction& f, std::int64_t n, std::int64_t N) {
  if (n < 1 || N < 2) throw std::invalid_argument("ext_tail_bound: need n >= 1 and N >= 2");
  // Beyond `reach` both tails of |f| together hold less than 1e-18.
  const double reach = std::max(static_cast<double>(N) + 1.0, truncation_radius(f, 1e-18));
  const auto last = static_cast<std::int64_t>(std::ceil(reach * static_cast<double>(n)));
  const double nd = static_cast<double>(n);

  std::vector<double> terms;
  for (std::int64_t j = N * n + 1; j <= last; ++j) {
    const double x = static_cast<double>(j) / nd;
    terms.push_back(std::abs(f.eval(x)));
    terms.push_back(std::abs(f.eval(-x)));
  }
  terms.push_back(std::abs(f.eval(static_cast<double>(N))));
  return {pairwise_sum(terms) / nd, 3.0 * f.decay().C2 / static_cast<double>(N)};
}

std::vector<BoundRow> bound_report(const SchwartzFunction& f, const BoundSuiteOptions& options) {
  const DecayConstants& dc = f.decay();
  const double W = uniform_bound_W(dc);
  std::vector<BoundRow> rows;
  auto add = [&](std::int64_t n, std::string quantity, double measured, double bound, bool pass) {
    rows.push_back({f.name, n, std::move(quantity), measured, bound, pass});
  };
  auto add_le = [&](std::int64_t n, std::string quantity, double measured, double bound) {
    add(n, std::move(quantity), measured, bound, measured <= bound);
  };

  for (const std::int64_t n : options.n_list) {
    if (n < 2) throw std::invalid_argument("bound_report: the bounds need n >= 2");
    const ScaledGrid grid = make_grid(n);
    const GridFunction g = sample(f, grid);
    const GridFunction ghat = dft_fast(g);
    const GridFunction g2hat = dft_fast(derivative(derivative(g)));
    const BoundaryData bd = boundary_data(g);
    const PhaseFactors pf = phase_factors(grid);

    double psi_ratio = 0.0, max_F = 0.0, max_g2hat = 0.0, max_sum = 0.0, decay = 0.0;
    for (std::int64_t k = grid.first_index(); k <= grid.last_index(); ++k) {
      const double t = grid.point(k);
      if (k != 0) psi_ratio = std::max(psi_ratio, 2.0 * std::abs(t) / std::abs(pf.psi.at(k)));
      max_F = std::max(max_F, std::abs(bd.F.at(k)));
      max_g2hat = std::max(max_g2hat, std::abs(g2hat.at(k)));
      max_sum = std::max(max_sum, std::abs(g2hat.at(k) + bd.F.at(k)));
      if (std::abs(t) >= 1.0) decay = std::max(decay, 4.0 * t * t * std::abs(ghat.at(k)));
    }
    add_le(n, "psi_lower", psi_ratio, 1.0);
    add_le(n, "F_bound", max_F, 16.0 * dc.D1);
    add_le(n, "g2hat_bound", max_g2hat, dc.M + 2.0 * dc.B);
    add_le(n, "uniform_W", max_sum, W);
    add_le(n, "decay_W_over_4t2", decay, W);

    for (const double eps : options.eps_list) {
      const double threshold = tail_threshold(eps, W);
      if (static_cast<double>(n) <= threshold) continue;
      const double L = std::floor(threshold) + 1.0;
      const double nd = static_cast<double>(n);
      const double mass = std::max(tail_mass(ghat, L, nd), tail_mass(ghat, -L, -nd));
      add(n, "tail_mass_eps=" + format_short(eps), mass, eps, mass < eps);
    }
    for (const std::int64_t N : options.exterior_N) {
      const TailCheck check = ext_tail_bound(f, n, N);
      add_le(n, "ext_tail_N=" + std::to_string(N), check.measured, check.bound);
    }
  }
  return rows;
}

}  // namespace pidft
