#pragma once

// Finite-n experiments whose limits are the continuous statements: pointwise
// spectrum convergence, inversion, tail vanishing and L1 discretization decay.
//
// The spectrum error of a smooth rapidly decreasing function falls faster than
// any power of n and drops below double resolution by n = 8, so the
// spectrum and discrete-inversion errors are evaluated in MPFR. The working
// precision starts from a guess and doubles until each error exceeds the
// rounding floor of its sum by 64 guard bits.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pidft/bigfloat.hpp"
#include "pidft/schwartz.hpp"

namespace pidft {

struct ReportRow {
  std::string function;
  std::int64_t n = 0;
  std::string metric;
  /// Rounded to double; 0 when the value underflows.
  double value = 0.0;
  /// value with 17 significant digits, written from the extended-precision
  /// result when it exists.
  std::string value_text;
  std::optional<double> bound;
  bool pass = true;
};

struct ConvergenceOptions {
  unsigned threads = 1;
  long start_bits = 128;
  long max_bits = 1L << 17;
};

/// {0, -1/2, 1/2, -1, 1, -2, 2}
std::vector<double> default_probes();

/// Exact value of |(1/n) sum_j f(j/n) exp(-pi i j k/n^2) - fhat(k/n)| for each
/// grid index k, resolved as described above. `start_bits` seeds the
/// precision. Requires big evaluators; throws NonConvergenceError past
/// max_bits.
std::vector<BigFloat> extended_spectrum_errors(const SchwartzFunction& f, std::int64_t n,
                                               std::span<const std::int64_t> ks,
                                               const ConvergenceOptions& options = {});

/// Same for |f(j/n) - (1/2)(1/n) sum_k fhat(k/n) exp(pi i j k/n^2)|.
std::vector<BigFloat> extended_inversion_errors(const SchwartzFunction& f, std::int64_t n,
                                                std::span<const std::int64_t> js,
                                                const ConvergenceOptions& options = {});

/// Metric "spectrum_error_t=<t>": |dft(sample(f, n))(t) - fhat(t)|, pass when
/// smaller than 1.01 times the value at the previous n. Probes that are not
/// grid points of a given n are skipped for that n.
std::vector<ReportRow> spectrum_convergence(const SchwartzFunction& f,
                                            std::span<const std::int64_t> n_list,
                                            std::span<const double> t_probes,
                                            const ConvergenceOptions& options = {});

/// Metrics "inversion_exact_x=<x>" (round trip, bound 1e-11),
/// "inversion_continuous_x=<x>" (quadrature of the reference transform, bound
/// 1e-8, independent of n) and "inversion_discrete_x=<x>" (Riemann sum of the
/// true spectrum, decreasing in n).
std::vector<ReportRow> inversion_convergence(const SchwartzFunction& f,
                                             std::span<const std::int64_t> n_list,
                                             std::span<const double> x_probes,
                                             const ConvergenceOptions& options = {});

/// Metric "tail_mass_eps=<eps>" for every n > N(eps): the larger of the two
/// one-sided masses over L <= |t| < n with L = floor(N(eps)) + 1, bound eps.
std::vector<ReportRow> tail_vanishing_experiment(const SchwartzFunction& f,
                                                 std::span<const double> eps_list,
                                                 std::span<const std::int64_t> n_list,
                                                 const ConvergenceOptions& options = {});

/// Metric "l1_discretization_error" (decreasing) and, whenever n doubles,
/// "l1_decay_ratio" = e(2n)/e(n) with pass for a ratio in [0.3, 0.7].
std::vector<ReportRow> l1_decay_experiment(const SchwartzFunction& f,
                                           std::span<const std::int64_t> n_list,
                                           const ConvergenceOptions& options = {});

/// All four experiments with default probes, canonically sorted.
std::vector<ReportRow> convergence_report(const SchwartzFunction& f,
                                          std::span<const std::int64_t> n_list,
                                          std::span<const double> eps_list,
                                          const ConvergenceOptions& options = {});

/// Sort by (function, metric, n).
void canonical_sort(std::vector<ReportRow>& rows);

/// Short decimal form used in metric names: 0.5, -2, 0.02.
std::string format_probe(double v);

}  // namespace pidft
