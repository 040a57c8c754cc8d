#include <gtest/gtest.h>

#include <cmath>

#include "pidft/catalog.hpp"
#include "pidft/converge.hpp"
#include "pidft/errors.hpp"

namespace pidft {
namespace {

// Oracle: mpmath at 80 digits, direct sums with no phase recurrence.
TEST(ExtendedErrors, SpectrumMatchesOracle) {
  const SchwartzFunction f = find_function("gaussian");
  const std::int64_t ks4[] = {0, 2, 8};
  const auto e4 = extended_spectrum_errors(f, 4, ks4);
  EXPECT_EQ(e4[0].to_string(17), "3.2864664389541329e-12");
  EXPECT_EQ(e4[1].to_string(17), "3.2659588561688739e-12");
  EXPECT_EQ(e4[2].to_string(17), "3.0327259849172477e-12");
  const std::int64_t ks8[] = {0, 4, 16};
  const auto e8 = extended_spectrum_errors(f, 8, ks8);
  EXPECT_EQ(e8[0].to_string(17), "2.9746552100806682e-45");
  EXPECT_EQ(e8[1].to_string(17), "2.9694559535972724e-45");
  EXPECT_EQ(e8[2].to_string(17), "2.8972253462636598e-45");

  const std::int64_t k1[] = {4};
  const auto h = extended_spectrum_errors(find_function("hermite1"), 4, k1);
  EXPECT_EQ(h[0].to_string(17), "1.2184724464559654e-11");
}

TEST(ExtendedErrors, DiscreteInversionMatchesOracle) {
  const std::int64_t js[] = {0, 4};
  const auto e = extended_inversion_errors(find_function("gaussian"), 4, js);
  EXPECT_EQ(e[0].to_string(17), "2.3238827051264721e-12");
  EXPECT_EQ(e[1].to_string(17), "2.2688764206377203e-12");
}

TEST(ExtendedErrors, PrecisionCapIsNonConvergence) {
  ConvergenceOptions options;
  options.start_bits = 64;
  options.max_bits = 160;
  const std::int64_t ks[] = {0};
  EXPECT_THROW(extended_spectrum_errors(find_function("gaussian"), 8, ks, options),
               NonConvergenceError);
}

TEST(ExtendedErrors, ZeroFunctionIsExactlyZero) {
  const std::int64_t ks[] = {0, 3};
  for (const auto& e : extended_spectrum_errors(find_function("zero"), 2, ks)) {
    EXPECT_TRUE(e.is_zero());
  }
}

TEST(SpectrumConvergence, StrictlyDecreasingAtEveryProbe) {
  const std::int64_t ns[] = {4, 8, 16};
  const auto probes = default_probes();
  const auto rows = spectrum_convergence(find_function("gaussian"), ns, probes);
  ASSERT_EQ(rows.size(), 21u);
  for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.metric << " n=" << r.n;
  EXPECT_EQ(rows[0].metric, "spectrum_error_t=0");
  EXPECT_EQ(rows[0].value_text, "3.2864664389541328e-12");
}

TEST(SpectrumConvergence, SkipsProbesOffTheGrid) {
  const std::int64_t ns[] = {1, 3};
  const double probes[] = {0.0, 0.5, 2.0};
  const auto rows = spectrum_convergence(find_function("gaussian"), ns, probes);
  // n = 1 holds only t = 0; n = 3 holds t = 0 and t = 2.
  ASSERT_EQ(rows.size(), 3u);
}

TEST(InversionConvergence, ExactContinuousAndDiscrete) {
  const std::int64_t ns[] = {2, 4};
  const double probes[] = {0.0, 1.0};
  const auto rows = inversion_convergence(find_function("gaussian"), ns, probes);
  int exact = 0, continuous = 0, discrete = 0;
  for (const auto& r : rows) {
    EXPECT_TRUE(r.pass) << r.metric << " n=" << r.n << " " << r.value;
    if (r.metric.rfind("inversion_exact", 0) == 0) ++exact;
    if (r.metric.rfind("inversion_continuous", 0) == 0) ++continuous;
    if (r.metric.rfind("inversion_discrete", 0) == 0) ++discrete;
  }
  EXPECT_EQ(exact, 4);
  EXPECT_EQ(continuous, 4);
  EXPECT_EQ(discrete, 4);
}

TEST(InversionConvergence, ZeroFunction) {
  const std::int64_t ns[] = {2};
  const double probes[] = {0.0, -1.0};
  for (const auto& r : inversion_convergence(find_function("zero"), ns, probes)) {
    EXPECT_EQ(r.value, 0.0) << r.metric;
  }
}

TEST(TailVanishing, GaussianAndZero) {
  const double eps[] = {0.5, 0.1, 0.02};
  const std::int64_t ns[] = {8, 16, 32, 64, 128};
  const auto rows = tail_vanishing_experiment(find_function("gaussian"), eps, ns);
  // N(0.5) = 12.8, N(0.1) = 59.9, N(0.02) = 295.4
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& r : rows) EXPECT_TRUE(r.pass);
  for (const auto& r : tail_vanishing_experiment(find_function("zero"), eps, ns)) {
    EXPECT_EQ(r.value, 0.0);
  }
}

TEST(L1Decay, RatiosNearOneHalf) {
  const std::int64_t ns[] = {2, 4, 8, 16};
  const auto rows = l1_decay_experiment(find_function("hermite1"), ns);
  int ratios = 0;
  for (const auto& r : rows) {
    EXPECT_TRUE(r.pass) << r.metric << " n=" << r.n << " " << r.value;
    if (r.metric == "l1_decay_ratio") ++ratios;
  }
  EXPECT_EQ(ratios, 3);
  for (const auto& r : l1_decay_experiment(find_function("zero"), ns)) EXPECT_EQ(r.value, 0.0);
}

TEST(Report, CanonicalOrder) {
  std::vector<ReportRow> rows = {
      {"b", 4, "m", 0, "", {}, true}, {"a", 8, "z", 0, "", {}, true},
      {"a", 4, "z", 0, "", {}, true}, {"a", 16, "m", 0, "", {}, true}};
  canonical_sort(rows);
  EXPECT_EQ(rows[0].metric, "m");
  EXPECT_EQ(rows[0].function, "a");
  EXPECT_EQ(rows[1].n, 4);
  EXPECT_EQ(rows[2].n, 8);
  EXPECT_EQ(rows[3].function, "b");
  EXPECT_EQ(format_probe(-0.5), "-0.5");
  EXPECT_EQ(format_probe(0.02), "0.02");
  EXPECT_EQ(format_probe(2.0), "2");
}

}  // namespace
}  // namespace pidft
