#include "pidft/converge.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "pidft/bounds.hpp"
#include "pidft/catalog.hpp"
#include "pidft/csv.hpp"
#include "pidft/dft.hpp"
#include "pidft/errors.hpp"
#include "pidft/parallel.hpp"
#include "pidft/quadrature.hpp"

namespace pidft {

namespace {

constexpr long kGuardBits = 64;
constexpr double kSlack = 1.01;

std::vector<std::int64_t> ascending(std::span<const std::int64_t> n_list) {
  std::vector<std::int64_t> out(n_list.begin(), n_list.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Grid index of t when t is a point of the grid with parameter n.
std::optional<std::int64_t> grid_index(double t, const ScaledGrid& grid) {
  const double scaled = t * static_cast<double>(grid.n());
  if (scaled != std::floor(scaled)) return std::nullopt;
  const auto k = static_cast<std::int64_t>(scaled);
  if (!grid.contains_index(k)) return std::nullopt;
  return k;
}

BigFloat big_point(std::int64_t j, std::int64_t n, long bits) {
  return BigFloat::from_int(static_cast<long>(j), bits) / static_cast<long>(n);
}

BigFloat magnitude_bound(const BigComplex& z) { return abs(z.re) + abs(z.im); }

// sum over grid indices m of v[m] exp(sign pi i m p / n^2). At m = -n^2 the
// phase is (-1)^p; each later term multiplies by exp(sign pi i p / n^2).
BigComplex kernel_sum(const std::vector<BigComplex>& v, std::int64_t n, int sign, std::int64_t p,
                      long bits) {
  BigFloat s(bits), c(bits);
  const BigFloat angle = BigFloat::pi(bits) * static_cast<double>(sign * p) / static_cast<long>(n * n);
  sin_cos(angle, s, c);
  const BigComplex step{c, s};
  BigComplex w{BigFloat::from_int(p % 2 == 0 ? 1 : -1, bits), BigFloat(bits)};
  BigComplex acc{BigFloat(bits), BigFloat(bits)};
  for (const BigComplex& x : v) {
    acc += x * w;
    w = w * step;
  }
  return acc;
}

struct ErrorTerm {
  BigFloat error;
  BigFloat scale;
};

long bit_length(std::int64_t v) {
  long bits = 0;
  while (v > 0) {
    ++bits;
    v >>= 1;
  }
  return bits;
}

// Calls evaluate(bits) with doubling precision until every error is resolved:
// either the whole sum vanishes exactly, or the error sits more than the guard
// above the rounding floor of its scale.
template <class Evaluate>
std::vector<BigFloat> resolve(Evaluate&& evaluate, std::int64_t terms,
                              const ConvergenceOptions& options, const std::string& what) {
  const long guard = kGuardBits + bit_length(terms);
  long bits = std::clamp(options.start_bits, 2 * guard, options.max_bits);
  for (;;) {
    std::vector<ErrorTerm> result = evaluate(bits);
    const bool resolved = std::all_of(result.begin(), result.end(), [&](const ErrorTerm& e) {
      if (e.scale.is_zero()) return true;
      return !e.error.is_zero() && e.error.exponent2() > e.scale.exponent2() - bits + guard;
    });
    if (resolved) {
      std::vector<BigFloat> out;
      for (auto& e : result) out.push_back(std::move(e.error));
      return out;
    }
    if (bits >= options.max_bits) {
      std::ostringstream msg;
      msg << what << " not resolved at " << bits << " bits";
      throw NonConvergenceError(msg.str(), 0.0);
    }
    bits = std::min(2 * bits, options.max_bits);
  }
}

// Precision for grid parameter `next` given the errors found at `previous`;
// the errors fall like exp(-c n^2).
long precision_hint(const std::vector<BigFloat>& errors, std::int64_t previous, std::int64_t next,
                    const ConvergenceOptions& options) {
  long needed = 0;
  for (const auto& e : errors) {
    if (!e.is_zero()) needed = std::max(needed, -e.exponent2());
  }
  const double ratio = static_cast<double>(next) / static_cast<double>(previous);
  const double predicted = static_cast<double>(needed) * ratio * ratio;
  const double bits = predicted + 2.0 * kGuardBits + 32.0;
  return std::clamp(static_cast<long>(bits), options.start_bits, options.max_bits);
}

std::string text_of(const BigFloat& v) {
  if (v.is_zero()) return "0";
  const double d = v.to_double();
  if (std::isnormal(d)) return format_real(d);
  return v.to_string(17);
}

template <class T>
bool no_larger(const T& next, const std::optional<T>& previous) {
  if (!previous) return true;
  if constexpr (std::is_same_v<T, BigFloat>) {
    return next.is_zero() || next < *previous * kSlack;
  } else {
    return next == 0.0 || next < *previous * kSlack;
  }
}

template <class Fn>
std::vector<BigComplex> tabulate_big(std::int64_t n, long bits, unsigned threads, Fn&& fn) {
  const std::int64_t count = 2 * n * n;
  std::vector<BigComplex> v(static_cast<std::size_t>(count));
  parallel_for(v.size(), threads, [&](std::size_t m) {
    v[m] = fn(big_point(static_cast<std::int64_t>(m) - n * n, n, bits));
  });
  return v;
}

BigFloat scaled_l1(const std::vector<BigComplex>& v, long bits) {
  BigFloat sum(bits);
  for (const auto& z : v) sum += magnitude_bound(z);
  return sum;
}

double continuous_inversion_error(const SchwartzFunction& f, double x) {
  // Outer radius: first T past which |fhat| stays below 1e-11 on [T, T + 4].
  double radius = 2.0;
  for (; radius < 64.0; radius += 2.0) {
    bool small = true;
    for (double t = radius; t <= radius + 4.0 && small; t += 0.25) {
      small = std::abs(reference_transform(f, t, 1e-13)) < 1e-11 &&
              std::abs(reference_transform(f, -t, 1e-13)) < 1e-11;
    }
    if (small) break;
  }
  QuadratureOptions outer;
  outer.abs_tol = 1e-10;
  outer.initial_panels = static_cast<int>(std::ceil(2.0 * radius * std::max(1.0, std::abs(x))));
  outer.max_intervals = outer.initial_panels + 20000;
  const double omega = std::numbers::pi * x;
  const auto integral = integrate_adaptive(
      [&](double t) { return reference_transform(f, t, 1e-11) * std::polar(1.0, omega * t); },
      -radius, radius, outer);
  return std::abs(f.eval(x) - 0.5 * integral.value);
}

}  // namespace

std::vector<double> default_probes() { return {0.0, -0.5, 0.5, -1.0, 1.0, -2.0, 2.0}; }

std::string format_probe(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::vector<BigFloat> extended_spectrum_errors(const SchwartzFunction& f, std::int64_t n,
                                               std::span<const std::int64_t> ks,
                                               const ConvergenceOptions& options) {
  if (!f.has_big_evaluators()) {
    throw std::invalid_argument(f.name + " has no extended-precision evaluators");
  }
  const ScaledGrid grid = make_grid(n);
  for (const auto k : ks) {
    if (!grid.contains_index(k)) throw std::out_of_range("spectrum probe outside the grid");
  }
  auto evaluate = [&](long bits) {
    const auto samples = tabulate_big(n, bits, options.threads, f.eval_big);
    BigFloat l1 = scaled_l1(samples, bits) / static_cast<long>(n);
    std::vector<ErrorTerm> out(ks.size(), ErrorTerm{BigFloat(bits), BigFloat(bits)});
    parallel_for(ks.size(), options.threads, [&](std::size_t i) {
      BigComplex s = kernel_sum(samples, n, -1, ks[i], bits);
      s.re /= static_cast<long>(n);
      s.im /= static_cast<long>(n);
      const BigComplex exact = f.transform_big(big_point(ks[i], n, bits));
      out[i] = {abs(s - exact), l1 + magnitude_bound(exact)};
    });
    return out;
  };
  return resolve(evaluate, grid.size(), options, "spectrum error of " + f.name);
}

std::vector<BigFloat> extended_inversion_errors(const SchwartzFunction& f, std::int64_t n,
                                                std::span<const std::int64_t> js,
                                                const ConvergenceOptions& options) {
  if (!f.has_big_evaluators()) {
    throw std::invalid_argument(f.name + " has no extended-precision evaluators");
  }
  const ScaledGrid grid = make_grid(n);
  for (const auto j : js) {
    if (!grid.contains_index(j)) throw std::out_of_range("inversion probe outside the grid");
  }
  auto evaluate = [&](long bits) {
    const auto spectrum = tabulate_big(n, bits, options.threads, f.transform_big);
    BigFloat l1 = scaled_l1(spectrum, bits) / static_cast<long>(2 * n);
    std::vector<ErrorTerm> out(js.size(), ErrorTerm{BigFloat(bits), BigFloat(bits)});
    parallel_for(js.size(), options.threads, [&](std::size_t i) {
      BigComplex s = kernel_sum(spectrum, n, +1, js[i], bits);
      s.re /= static_cast<long>(2 * n);
      s.im /= static_cast<long>(2 * n);
      const BigComplex exact = f.eval_big(big_point(js[i], n, bits));
      out[i] = {abs(exact - s), l1 + magnitude_bound(exact)};
    });
    return out;
  };
  return resolve(evaluate, grid.size(), options, "discrete inversion error of " + f.name);
}

namespace {

// Shared driver for the two extended-precision metrics: one row per on-grid
// probe and n, each compared with the same probe at the previous n.
template <class Errors>
std::vector<ReportRow> extended_metric(const SchwartzFunction& f,
                                       std::span<const std::int64_t> n_list,
                                       std::span<const double> probes, const std::string& prefix,
                                       const ConvergenceOptions& options, Errors&& errors) {
  std::vector<ReportRow> rows;
  std::vector<std::optional<BigFloat>> previous(probes.size());
  long hint = options.start_bits;
  for (const std::int64_t n : ascending(n_list)) {
    const ScaledGrid grid = make_grid(n);
    std::vector<std::int64_t> indices;
    std::vector<std::size_t> which;
    for (std::size_t p = 0; p < probes.size(); ++p) {
      if (const auto k = grid_index(probes[p], grid)) {
        indices.push_back(*k);
        which.push_back(p);
      }
    }
    if (indices.empty()) continue;
    ConvergenceOptions local = options;
    local.start_bits = hint;
    const std::vector<BigFloat> values = errors(n, indices, local);
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::size_t p = which[i];
      ReportRow row;
      row.function = f.name;
      row.n = n;
      row.metric = prefix + format_probe(probes[p]);
      row.value = values[i].to_double();
      row.value_text = text_of(values[i]);
      row.pass = no_larger(values[i], previous[p]);
      rows.push_back(std::move(row));
      previous[p] = values[i];
    }
    hint = precision_hint(values, n, 2 * n, options);
  }
  return rows;
}

// Double-precision path for functions without extended evaluators.
std::vector<ReportRow> spectrum_convergence_double(const SchwartzFunction& f,
                                                   std::span<const std::int64_t> n_list,
                                                   std::span<const double> t_probes) {
  std::vector<ReportRow> rows;
  std::vector<std::optional<double>> previous(t_probes.size());
  for (const std::int64_t n : ascending(n_list)) {
    const ScaledGrid grid = make_grid(n);
    const GridFunction g = sample(f, grid);
    for (std::size_t p = 0; p < t_probes.size(); ++p) {
      const auto k = grid_index(t_probes[p], grid);
      if (!k) continue;
      const double value = std::abs(dft_at(g, *k) - reference_transform(f, t_probes[p], 1e-10));
      rows.push_back({f.name, n, "spectrum_error_t=" + format_probe(t_probes[p]), value,
                      format_real(value), std::nullopt, no_larger(value, previous[p])});
      previous[p] = value;
    }
  }
  return rows;
}

}  // namespace

std::vector<ReportRow> spectrum_convergence(const SchwartzFunction& f,
                                            std::span<const std::int64_t> n_list,
                                            std::span<const double> t_probes,
                                            const ConvergenceOptions& options) {
  if (!f.has_big_evaluators()) return spectrum_convergence_double(f, n_list, t_probes);
  return extended_metric(f, n_list, t_probes, "spectrum_error_t=", options,
                         [&](std::int64_t n, std::span<const std::int64_t> ks,
                             const ConvergenceOptions& local) {
                           return extended_spectrum_errors(f, n, ks, local);
                         });
}

std::vector<ReportRow> inversion_convergence(const SchwartzFunction& f,
                                             std::span<const std::int64_t> n_list,
                                             std::span<const double> x_probes,
                                             const ConvergenceOptions& options) {
  constexpr double kExactBound = 1e-11;
  constexpr double kContinuousBound = 1e-8;
  const auto ns = ascending(n_list);
  std::vector<ReportRow> rows;

  std::vector<std::optional<double>> continuous(x_probes.size());
  for (const std::int64_t n : ns) {
    const ScaledGrid grid = make_grid(n);
    const GridFunction g = sample(f, grid);
    const TransformOptions transform{options.threads};
    const GridFunction round_trip = n <= 64 ? idft(dft(g, transform), transform)
                                            : idft_fast(dft_fast(g));
    for (std::size_t p = 0; p < x_probes.size(); ++p) {
      const auto j = grid_index(x_probes[p], grid);
      if (!j) continue;
      const std::string label = format_probe(x_probes[p]);
      const double exact = std::abs(g.at(*j) - round_trip.at(*j));
      rows.push_back({f.name, n, "inversion_exact_x=" + label, exact, format_real(exact),
                      kExactBound, exact <= kExactBound});
      if (!continuous[p]) continuous[p] = continuous_inversion_error(f, x_probes[p]);
      rows.push_back({f.name, n, "inversion_continuous_x=" + label, *continuous[p],
                      format_real(*continuous[p]), kContinuousBound,
                      *continuous[p] <= kContinuousBound});
    }
  }

  if (f.has_big_evaluators()) {
    auto discrete = extended_metric(f, ns, x_probes, "inversion_discrete_x=", options,
                                    [&](std::int64_t n, std::span<const std::int64_t> js,
                                        const ConvergenceOptions& local) {
                                      return extended_inversion_errors(f, n, js, local);
                                    });
    rows.insert(rows.end(), discrete.begin(), discrete.end());
  } else {
    std::vector<std::optional<double>> previous(x_probes.size());
    for (const std::int64_t n : ns) {
      const ScaledGrid grid = make_grid(n);
      std::vector<Complex> spectrum(static_cast<std::size_t>(grid.size()));
      parallel_for(spectrum.size(), options.threads, [&](std::size_t m) {
        spectrum[m] = reference_transform(f, grid.point(grid.index(m)), 1e-10);
      });
      const GridFunction back = idft(GridFunction(grid, std::move(spectrum)));
      for (std::size_t p = 0; p < x_probes.size(); ++p) {
        const auto j = grid_index(x_probes[p], grid);
        if (!j) continue;
        const double value = std::abs(f.eval(x_probes[p]) - back.at(*j));
        rows.push_back({f.name, n, "inversion_discrete_x=" + format_probe(x_probes[p]), value,
                        format_real(value), std::nullopt, no_larger(value, previous[p])});
        previous[p] = value;
      }
    }
  }
  return rows;
}

std::vector<ReportRow> tail_vanishing_experiment(const SchwartzFunction& f,
                                                 std::span<const double> eps_list,
                                                 std::span<const std::int64_t> n_list,
                                                 const ConvergenceOptions& options) {
  const double W = uniform_bound_W(f.decay());
  const auto ns = ascending(n_list);
  std::vector<std::vector<ReportRow>> per_n(ns.size());
  parallel_for(ns.size(), options.threads, [&](std::size_t i) {
    const std::int64_t n = ns[i];
    const double nd = static_cast<double>(n);
    std::optional<GridFunction> ghat;
    for (const double eps : eps_list) {
      const double threshold = tail_threshold(eps, W);
      if (nd <= threshold) continue;
      if (!ghat) ghat = dft_fast(sample(f, make_grid(n)));
      const double L = std::floor(threshold) + 1.0;
      const double mass = std::max(tail_mass(*ghat, L, nd), tail_mass(*ghat, -L, -nd));
      per_n[i].push_back({f.name, n, "tail_mass_eps=" + format_probe(eps), mass,
                          format_real(mass), eps, mass < eps});
    }
  });
  std::vector<ReportRow> rows;
  for (auto& r : per_n) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

std::vector<ReportRow> l1_decay_experiment(const SchwartzFunction& f,
                                           std::span<const std::int64_t> n_list,
                                           const ConvergenceOptions& options) {
  constexpr double kRatioLow = 0.3;
  constexpr double kRatioHigh = 0.7;
  const auto ns = ascending(n_list);
  std::vector<double> errors(ns.size());
  parallel_for(ns.size(), options.threads,
               [&](std::size_t i) { errors[i] = l1_discretization_error(f, ns[i]); });

  std::vector<ReportRow> rows;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const std::optional<double> previous =
        i == 0 ? std::nullopt : std::optional<double>(errors[i - 1]);
    rows.push_back({f.name, ns[i], "l1_discretization_error", errors[i], format_real(errors[i]),
                    std::nullopt, no_larger(errors[i], previous)});
    if (i > 0 && ns[i] == 2 * ns[i - 1] && errors[i - 1] > 0.0) {
      const double ratio = errors[i] / errors[i - 1];
      rows.push_back({f.name, ns[i], "l1_decay_ratio", ratio, format_real(ratio), kRatioHigh,
                      ratio >= kRatioLow && ratio <= kRatioHigh});
    }
  }
  return rows;
}

std::vector<ReportRow> convergence_report(const SchwartzFunction& f,
                                          std::span<const std::int64_t> n_list,
                                          std::span<const double> eps_list,
                                          const ConvergenceOptions& options) {
  const auto probes = default_probes();
  std::vector<ReportRow> rows = spectrum_convergence(f, n_list, probes, options);
  for (auto&& part : {inversion_convergence(f, n_list, probes, options),
                      tail_vanishing_experiment(f, eps_list, n_list, options),
                      l1_decay_experiment(f, n_list, options)}) {
    rows.insert(rows.end(), part.begin(), part.end());
  }
  canonical_sort(rows);
  return rows;
}

void canonical_sort(std::vector<ReportRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.function, a.metric, a.n) < std::tie(b.function, b.metric, b.n);
  });
}

}  // namespace pidft
