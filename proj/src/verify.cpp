#include "pidft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "pidft/bounds.hpp"
#include "pidft/catalog.hpp"
#include "pidft/chargroup.hpp"
#include "pidft/csv.hpp"
#include "pidft/dcalc.hpp"
#include "pidft/dft.hpp"
#include "pidft/parallel.hpp"

namespace pidft {

namespace {

constexpr int kInversionTrials = 100;
constexpr int kCalculusTrials = 100;
constexpr int kIdentityTrials = 10;
constexpr int kOracleTrials = 50;

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

std::vector<std::int64_t> pick(const VerifyOptions& options, std::vector<std::int64_t> defaults,
                               std::int64_t min_n = 1, std::int64_t max_n = kDefaultMaxN) {
  std::vector<std::int64_t> source = options.n_list.empty() ? std::move(defaults) : options.n_list;
  std::vector<std::int64_t> out;
  for (const auto n : source) {
    if (n >= min_n && n <= max_n) out.push_back(n);
  }
  return out;
}

ReportRow bounded(const std::string& function, std::int64_t n, const std::string& metric,
                  double value, double bound) {
  return {function, n, metric, value, format_real(value), bound, value <= bound};
}

double max_gap(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// Suite-specific stream ids keep the random inputs of different suites apart.
enum Stream : std::uint64_t { kInversion = 1, kCharacters, kCalculus, kIdentity, kOracle };

std::vector<ReportRow> inversion_suite(const VerifyOptions& options) {
  const auto ns = pick(options, range(1, 16));
  std::vector<std::vector<ReportRow>> per_n(ns.size());
  parallel_for(ns.size(), options.threads, [&](std::size_t i) {
    const std::int64_t n = ns[i];
    const ScaledGrid grid = make_grid(n);
    auto rng = seeded_rng(options.seed, kInversion, n);
    double naive = 0.0, fast = 0.0;
    for (int trial = 0; trial < kInversionTrials; ++trial) {
      const GridFunction g = random_grid_function(grid, rng);
      const double scale = g.max_abs();
      fast = std::max(fast, max_gap(idft_fast(dft_fast(g)).values(), g.values()) / scale);
      if (n <= 32) naive = std::max(naive, max_gap(idft(dft(g)).values(), g.values()) / scale);
    }
    if (n <= 32) per_n[i].push_back(bounded("random", n, "round_trip_naive", naive, 1e-11));
    per_n[i].push_back(bounded("random", n, "round_trip_fast", fast, 1e-11));
  });
  std::vector<ReportRow> rows;
  for (auto& r : per_n) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

double gram_deviation(const FiniteGroup& group) {
  const auto chars = characters(group);
  std::vector<GroupFunction> tables;
  for (const auto& chi : chars) tables.push_back(tabulate(chi));
  double worst = 0.0;
  for (std::size_t a = 0; a < tables.size(); ++a) {
    for (std::size_t b = 0; b < tables.size(); ++b) {
      const Complex ip = inner_product(group, tables[a], tables[b]);
      worst = std::max(worst, std::abs(ip - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double group_round_trip(const FiniteGroup& group, std::mt19937_64& rng) {
  const auto g = random_values(static_cast<std::size_t>(group.order()), rng);
  const auto back = char_invert(group, char_transform(group, g));
  return max_gap(back, g);
}

std::vector<ReportRow> characters_suite(const VerifyOptions& options) {
  const auto cyclic_m = pick(options, range(1, 32), 1, 256);
  const auto scaled_n = pick(options, range(1, 6), 1, 11);
  std::vector<ReportRow> rows;
  for (const auto m : cyclic_m) {
    const FiniteGroup z = FiniteGroup::cyclic(m);
    auto rng = seeded_rng(options.seed, kCharacters, m);
    rows.push_back(bounded("characters", m, "gram_cyclic", gram_deviation(z), 1e-12));
    rows.push_back(bounded("characters", m, "inversion_cyclic", group_round_trip(z, rng), 1e-12));
  }
  for (const auto n : scaled_n) {
    const FiniteGroup g = FiniteGroup::scaled(n * n, n);
    auto rng = seeded_rng(options.seed, kCharacters, -n);
    rows.push_back(bounded("characters", n, "gram_scaled", gram_deviation(g), 1e-12));
    rows.push_back(bounded("characters", n, "inversion_scaled", group_round_trip(g, rng), 1e-12));
  }
  return rows;
}

std::vector<ReportRow> calculus_suite(const VerifyOptions& options) {
  const auto ns = pick(options, range(1, 16));
  std::vector<std::vector<ReportRow>> per_n(ns.size());
  parallel_for(ns.size(), options.threads, [&](std::size_t i) {
    const std::int64_t n = ns[i];
    const ScaledGrid grid = make_grid(n);
    auto rng = seeded_rng(options.seed, kCalculus, n);
    double ftc = 0.0, product = 0.0, parts = 0.0;
    for (int trial = 0; trial < kCalculusTrials; ++trial) {
      const GridFunction g = random_grid_function(grid, rng);
      const GridFunction h = random_grid_function(grid, rng);
      ftc = std::max(ftc, check_ftc(g).relative());
      product = std::max(product, check_product_rule(g, h).relative());
      parts = std::max(parts, check_parts(g, h).relative());
    }
    per_n[i] = {bounded("random", n, "ftc", ftc, 1e-12),
                bounded("random", n, "product_rule", product, 1e-12),
                bounded("random", n, "summation_by_parts", parts, 1e-12)};
  });
  std::vector<ReportRow> rows;
  for (auto& r : per_n) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

std::vector<ReportRow> identity_suite(const VerifyOptions& options) {
  const auto ns = pick(options, {2, 4, 8, 16}, 2, 64);
  const SchwartzFunction f = find_function(options.function);
  std::vector<std::vector<ReportRow>> per_n(ns.size());
  parallel_for(ns.size(), options.threads, [&](std::size_t i) {
    const std::int64_t n = ns[i];
    const ScaledGrid grid = make_grid(n);
    auto rng = seeded_rng(options.seed, kIdentity, n);
    DftIdentitySweep random_worst;
    for (int trial = 0; trial < kIdentityTrials; ++trial) {
      const auto sweep = sweep_dft_identity(random_grid_function(grid, rng));
      random_worst.worst_first = std::max(random_worst.worst_first, sweep.worst_first);
      random_worst.worst_second = std::max(random_worst.worst_second, sweep.worst_second);
    }
    const auto smooth = sweep_dft_identity(sample(f, grid));
    per_n[i] = {bounded("random", n, "dft_identity_first", random_worst.worst_first, 1e-10),
                bounded("random", n, "dft_identity_second", random_worst.worst_second, 1e-10),
                bounded(f.name, n, "dft_identity_first", smooth.worst_first, 1e-10),
                bounded(f.name, n, "dft_identity_second", smooth.worst_second, 1e-10)};
  });
  std::vector<ReportRow> rows;
  for (auto& r : per_n) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

std::vector<ReportRow> bounds_suite(const VerifyOptions& options) {
  BoundSuiteOptions suite;
  suite.n_list = pick(options, {2, 4, 8, 16, 32, 64, 128}, 2);
  std::vector<ReportRow> rows;
  for (const auto& b : bound_report(find_function(options.function), suite)) {
    rows.push_back({b.function, b.n, b.quantity, b.measured, format_real(b.measured), b.bound,
                    b.pass});
  }
  return rows;
}

// dft(g)(t_k) against 2n times the character transform on G_{n^2,n}, whose
// entries are brute-force character sums.
double bridge_gap(const GridFunction& g) {
  const std::int64_t n = g.grid().n();
  const FiniteGroup group = FiniteGroup::scaled(n * n, n);
  const GroupFunction by_characters = char_transform(group, g.values());
  const GridFunction direct = dft(g);
  double worst = 0.0;
  for (std::size_t pos = 0; pos < by_characters.size(); ++pos) {
    const Complex scaled = 2.0 * static_cast<double>(n) * by_characters[pos];
    worst = std::max(worst, std::abs(direct.at(group.element(pos)) - scaled));
  }
  return worst;
}

std::vector<ReportRow> oracle_suite(const VerifyOptions& options) {
  const auto ns = pick(options, {1, 2, 4, 8, 16, 32}, 1, 64);
  std::vector<std::vector<ReportRow>> per_n(ns.size());
  parallel_for(ns.size(), options.threads, [&](std::size_t i) {
    const std::int64_t n = ns[i];
    const ScaledGrid grid = make_grid(n);
    auto rng = seeded_rng(options.seed, kOracle, n);
    double forward = 0.0, inverse = 0.0, bridge = 0.0;
    for (int trial = 0; trial < kOracleTrials; ++trial) {
      const GridFunction g = random_grid_function(grid, rng);
      forward = std::max(forward, max_gap(dft_fast(g).values(), dft(g).values()));
      inverse = std::max(inverse, max_gap(idft_fast(g).values(), idft(g).values()));
      if (n <= 8) bridge = std::max(bridge, bridge_gap(g));
    }
    per_n[i].push_back(bounded("random", n, "fast_vs_naive_dft", forward, 1e-10));
    per_n[i].push_back(bounded("random", n, "fast_vs_naive_idft", inverse, 1e-10));
    if (n <= 8) per_n[i].push_back(bounded("random", n, "character_bridge", bridge, 1e-11));
  });
  std::vector<ReportRow> rows;
  for (auto& r : per_n) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

using Suite = std::function<std::vector<ReportRow>(const VerifyOptions&)>;

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> all = {
      {"inversion", inversion_suite}, {"characters", characters_suite},
      {"calculus", calculus_suite},   {"dft_identity", identity_suite},
      {"bounds", bounds_suite},       {"oracle", oracle_suite},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"inversion",    "characters", "calculus",
                                                 "dft_identity", "bounds",     "oracle"};
  return names;
}

std::vector<ReportRow> run_suite(const std::string& suite, const VerifyOptions& options) {
  std::vector<ReportRow> rows;
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      auto part = suites().at(name)(options);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  } else {
    const auto it = suites().find(suite);
    if (it == suites().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
    rows = it->second(options);
  }
  canonical_sort(rows);
  return rows;
}

std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream, std::int64_t n) {
  const auto un = static_cast<std::uint64_t>(n);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(un),
                    static_cast<std::uint32_t>(un >> 32)};
  return std::mt19937_64(seq);
}

double uniform_pm1(std::mt19937_64& rng) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * unit - 1.0;
}

std::vector<Complex> random_values(std::size_t count, std::mt19937_64& rng) {
  std::vector<Complex> out(count);
  for (auto& z : out) {
    const double re = uniform_pm1(rng);
    const double im = uniform_pm1(rng);
    z = Complex(re, im);
  }
  return out;
}

GridFunction random_grid_function(const ScaledGrid& grid, std::mt19937_64& rng) {
  return GridFunction(grid, random_values(static_cast<std::size_t>(grid.size()), rng));
}

}  // namespace pidft
