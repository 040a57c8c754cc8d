#pragma once

// Randomized and deterministic verification suites. Every suite returns
// report rows (function, n, metric, value, bound, pass); random inputs come
// from a generator seeded by (seed, suite, n), so a fixed seed reproduces the
// rows bit for bit at any thread count.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pidft/converge.hpp"
#include "pidft/grid.hpp"

namespace pidft {

struct VerifyOptions {
  /// Empty selects each suite's default list.
  std::vector<std::int64_t> n_list;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  /// Function for the bound suite and the deterministic identity inputs.
  std::string function = "gaussian";
};

/// inversion, characters, calculus, dft_identity, bounds, oracle.
const std::vector<std::string>& suite_names();

/// Runs one suite ("all" runs every suite). Rows are canonically sorted.
/// Throws std::invalid_argument for an unknown suite.
std::vector<ReportRow> run_suite(const std::string& suite, const VerifyOptions& options);

/// Generator for (seed, stream, n).
std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream, std::int64_t n);

/// Uniform in [-1, 1) from the top 53 bits of one draw.
double uniform_pm1(std::mt19937_64& rng);

/// Real and imaginary parts uniform in [-1, 1).
std::vector<Complex> random_values(std::size_t count, std::mt19937_64& rng);
GridFunction random_grid_function(const ScaledGrid& grid, std::mt19937_64& rng);

}  // namespace pidft
