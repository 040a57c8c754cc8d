#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "pidft/catalog.hpp"
#include "pidft/dft.hpp"
#include "pidft/verify.hpp"

namespace pidft {
namespace {

using testing::brute_dft;
using testing::brute_idft;
using testing::max_gap;

TEST(Dft, HandComputedSmallestGrid) {
  const ScaledGrid g = make_grid(1);
  const GridFunction a = dft(GridFunction(g, {0.0, 1.0}));
  EXPECT_EQ(a.at(-1), Complex(1.0));
  EXPECT_EQ(a.at(0), Complex(1.0));
  const GridFunction b = dft(GridFunction(g, {1.0, 1.0}));
  EXPECT_NEAR(std::abs(b.at(-1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(b.at(0) - 2.0), 0.0, 1e-15);
}

TEST(Dft, MatchesBruteForceOracle) {
  for (const std::int64_t n : {1, 2, 3, 5, 8, 11}) {
    auto rng = seeded_rng(3, 0, n);
    const GridFunction g = random_grid_function(make_grid(n), rng);
    EXPECT_LT(max_gap(dft(g).values(), brute_dft(g)), 1e-12) << "n = " << n;
    EXPECT_LT(max_gap(idft(g).values(), brute_idft(g)), 1e-12) << "n = " << n;
  }
}

TEST(Dft, ExactInversionOnRandomInputs) {
  for (std::int64_t n = 1; n <= 12; ++n) {
    auto rng = seeded_rng(5, 0, n);
    for (int trial = 0; trial < 5; ++trial) {
      const GridFunction g = random_grid_function(make_grid(n), rng);
      EXPECT_LE(max_gap(idft(dft(g)).values(), g.values()), 1e-11 * g.max_abs()) << n;
      EXPECT_LE(max_gap(dft(idft(g)).values(), g.values()), 1e-11 * g.max_abs()) << n;
    }
  }
}

TEST(Dft, Linearity) {
  const ScaledGrid grid = make_grid(4);
  auto rng = seeded_rng(9, 0, 4);
  const GridFunction f = random_grid_function(grid, rng);
  const GridFunction h = random_grid_function(grid, rng);
  const Complex a(0.3, -1.2), b(-2.0, 0.5);
  std::vector<Complex> combo;
  for (std::size_t i = 0; i < f.size(); ++i) combo.push_back(a * f[i] + b * h[i]);
  const GridFunction lhs = dft(GridFunction(grid, combo));
  const GridFunction df = dft(f), dh = dft(h);
  for (std::size_t i = 0; i < f.size(); ++i) {
    EXPECT_LT(std::abs(lhs[i] - (a * df[i] + b * dh[i])), 1e-13);
  }
}

TEST(Dft, BoundedByL1Norm) {
  for (const std::int64_t n : {2, 5, 9}) {
    auto rng = seeded_rng(1, 0, n);
    const GridFunction g = random_grid_function(make_grid(n), rng);
    const double l1 = l1_norm(g);
    EXPECT_LE(dft(g).max_abs(), l1 * (1 + 1e-14));
  }
}

TEST(Dft, RealInputIsRealAtZero) {
  const ScaledGrid grid = make_grid(6);
  const GridFunction g = sample([](double x) { return Complex(std::exp(-x * x) + x * x * 0.1); },
                                grid);
  EXPECT_LT(std::abs(dft_at(g, 0).imag()), 1e-11);
}

TEST(Dft, GaussianAtZero) {
  const GridFunction g = sample(find_function("gaussian"), make_grid(8));
  EXPECT_NEAR(dft(g).at(0).real(), std::sqrt(2.0), 1e-14);
}

TEST(Dft, PointEvaluationMatchesFullTransform) {
  auto rng = seeded_rng(2, 0, 3);
  const GridFunction g = random_grid_function(make_grid(3), rng);
  const GridFunction full = dft(g);
  for (std::int64_t k = -9; k <= 8; ++k) EXPECT_EQ(dft_at(g, k), full.at(k));
  EXPECT_THROW(dft_at(g, 9), std::out_of_range);
}

TEST(Dft, FastPathAgreesWithNaive) {
  for (const std::int64_t n : {1, 2, 3, 4, 7, 16}) {
    auto rng = seeded_rng(4, 0, n);
    const GridFunction g = random_grid_function(make_grid(n), rng);
    EXPECT_LT(max_gap(dft_fast(g).values(), dft(g).values()), 1e-12) << n;
    EXPECT_LT(max_gap(idft_fast(g).values(), idft(g).values()), 1e-12) << n;
  }
}

TEST(Dft, ThreadCountDoesNotChangeBits) {
  auto rng = seeded_rng(6, 0, 6);
  const GridFunction g = random_grid_function(make_grid(6), rng);
  const GridFunction one = dft(g, {1});
  const GridFunction many = dft(g, {3});
  for (std::size_t i = 0; i < g.size(); ++i) ASSERT_EQ(one[i], many[i]);
}

TEST(Kernel, ExactQuarterTurnsAndConjugateSymmetry) {
  const ScaledGrid grid = make_grid(2);
  const Kernel minus(grid, Sign::Negative), plus(grid, Sign::Positive);
  EXPECT_EQ(minus(2, 1), Complex(0.0, -1.0));  // exp(-pi i 2/4)
  EXPECT_EQ(minus(-4, 1), Complex(-1.0, 0.0));
  for (std::int64_t j = -4; j < 4; ++j) {
    for (std::int64_t k = -4; k < 4; ++k) {
      EXPECT_EQ(plus(j, k), std::conj(minus(j, k)));
      EXPECT_NEAR(std::abs(minus(j, k)), 1.0, 1e-15);
    }
  }
}

TEST(Kernel, EvaluationFloorsBothArguments) {
  const ScaledGrid grid = make_grid(2);
  EXPECT_EQ(kernel_eval(grid, Sign::Negative, 0.3, 0.7), Complex(1.0));
  EXPECT_EQ(kernel_eval(grid, Sign::Negative, 1.2, 0.6), Kernel(grid, Sign::Negative)(2, 1));
  EXPECT_THROW(kernel_eval(grid, Sign::Positive, 2.0, 0.0), std::out_of_range);
}

}  // namespace
}  // namespace pidft
