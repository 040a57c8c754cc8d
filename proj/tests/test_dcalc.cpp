#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pidft/catalog.hpp"
#include "pidft/dcalc.hpp"
#include "pidft/dft.hpp"
#include "pidft/verify.hpp"

namespace pidft {
namespace {

GridFunction on_one(Complex a, Complex b) { return GridFunction(make_grid(1), {a, b}); }

TEST(Derivative, HandExamples) {
  const GridFunction d = derivative(on_one(2.0, 5.0));
  EXPECT_EQ(d.at(-1), Complex(3.0));
  EXPECT_EQ(d.at(0), Complex(0.0));

  const GridFunction id = derivative(sample([](double x) { return Complex(x); }, make_grid(2)));
  for (std::int64_t j = -4; j < 3; ++j) EXPECT_DOUBLE_EQ(id.at(j).real(), 1.0);
  EXPECT_EQ(id.at(3), Complex(0.0));

  const GridFunction c = derivative(sample([](double) { return Complex(4.0, 1.0); }, make_grid(3)));
  EXPECT_DOUBLE_EQ(c.max_abs(), 0.0);
}

TEST(Shift, HandExamples) {
  const GridFunction s = shift(on_one(2.0, 5.0));
  EXPECT_EQ(s.at(-1), Complex(5.0));
  EXPECT_EQ(s.at(0), Complex(0.0));

  const GridFunction delta = sample([](double x) { return Complex(x == 0.0 ? 1.0 : 0.0); },
                                    make_grid(2));
  const GridFunction moved = shift(delta);
  for (std::int64_t j = -4; j < 4; ++j) EXPECT_EQ(moved.at(j), Complex(j == -1 ? 1.0 : 0.0));
  EXPECT_DOUBLE_EQ(shift(GridFunction::zeros(make_grid(2))).max_abs(), 0.0);
}

TEST(DiscreteCalculus, HandExamplesOnSmallestGrid) {
  const GridFunction g = on_one(2.0, 5.0), h = on_one(1.0, 3.0);
  const Residual ftc = check_ftc(g);
  EXPECT_EQ(ftc.residual, 0.0);
  EXPECT_EQ(check_product_rule(g, h).residual, 0.0);
  EXPECT_EQ(check_parts(g, h).residual, 0.0);
  EXPECT_EQ(check_parts(g, GridFunction::zeros(make_grid(1))).residual, 0.0);
  // (gh)'(-1) = 15 - 2 = 13 = g' h_sh + g h' = 3*3 + 2*2.
  const GridFunction gh = on_one(2.0, 15.0);
  EXPECT_EQ(derivative(gh).at(-1), Complex(13.0));
}

TEST(DiscreteCalculus, RandomInputs) {
  for (std::int64_t n = 1; n <= 10; ++n) {
    auto rng = seeded_rng(31, 0, n);
    for (int trial = 0; trial < 10; ++trial) {
      const GridFunction g = random_grid_function(make_grid(n), rng);
      const GridFunction h = random_grid_function(make_grid(n), rng);
      EXPECT_TRUE(check_ftc(g).within(1e-12)) << n;
      EXPECT_TRUE(check_product_rule(g, h).within(1e-12)) << n;
      EXPECT_TRUE(check_parts(g, h).within(1e-12)) << n;
    }
  }
}

TEST(DiscreteCalculus, GridMismatch) {
  const GridFunction a = GridFunction::zeros(make_grid(1));
  const GridFunction b = GridFunction::zeros(make_grid(2));
  EXPECT_THROW(check_product_rule(a, b), std::invalid_argument);
  EXPECT_THROW(check_parts(a, b), std::invalid_argument);
}

TEST(PhaseFactors, ConjugateAndModulus) {
  for (const std::int64_t n : {1, 3, 8}) {
    const ScaledGrid grid = make_grid(n);
    const PhaseFactors pf = phase_factors(grid);
    for (std::int64_t k = grid.first_index(); k <= grid.last_index(); ++k) {
      const double t = grid.point(k);
      EXPECT_EQ(pf.phi.at(k), std::conj(pf.psi.at(k)));
      const double expected = 2.0 * n * std::abs(std::sin(std::numbers::pi * t / (2.0 * n)));
      EXPECT_NEAR(std::abs(pf.psi.at(k)), expected, 1e-12);
      EXPECT_GE(std::abs(pf.psi.at(k)), 2.0 * std::abs(t)) << "n=" << n << " t=" << t;
    }
  }
}

TEST(BoundaryData, DefiningRelations) {
  auto rng = seeded_rng(33, 0, 3);
  const GridFunction g = random_grid_function(make_grid(3), rng);
  const BoundaryData bd = boundary_data(g);
  const PhaseFactors pf = phase_factors(g.grid());
  for (std::int64_t k = -9; k < 9; ++k) {
    EXPECT_LT(std::abs(bd.E.at(k) - (pf.phi.at(k) * bd.D.at(k) - bd.C.at(k))), 1e-13);
    const Complex f = pf.psi.at(k) * pf.phi.at(k) * bd.D.at(k) - pf.psi.at(k) * bd.C.at(k) +
                      pf.phi.at(k) * bd.Dp.at(k) - bd.Cp.at(k);
    EXPECT_LT(std::abs(bd.F.at(k) - f), 1e-12);
  }
}

TEST(BoundaryData, DBoundedByFirstValue) {
  const GridFunction g = sample(find_function("gauss_ihermite1"), make_grid(2));
  const BoundaryData bd = boundary_data(g);
  const double bound = std::abs(g.at(-4)) / 2.0;
  // |D| equals the bound up to the rounding of two unit-modulus factors.
  for (std::int64_t k = -4; k < 4; ++k) EXPECT_LE(std::abs(bd.D.at(k)), bound * (1 + 1e-15));
}

TEST(DftIdentity, RandomAndSmoothInputs) {
  for (const std::int64_t n : {2, 4, 8}) {
    auto rng = seeded_rng(34, 0, n);
    for (int trial = 0; trial < 3; ++trial) {
      const auto sweep = sweep_dft_identity(random_grid_function(make_grid(n), rng));
      EXPECT_LT(sweep.worst_first, 1e-10) << n;
      EXPECT_LT(sweep.worst_second, 1e-10) << n;
    }
    const auto smooth = sweep_dft_identity(sample(find_function("hermite1"), make_grid(n)));
    EXPECT_LT(smooth.worst_first, 1e-10);
    EXPECT_LT(smooth.worst_second, 1e-10);
  }
}

TEST(DftIdentity, PointCheckAndZeroExcluded) {
  auto rng = seeded_rng(35, 0, 3);
  const GridFunction g = random_grid_function(make_grid(3), rng);
  const auto r = check_dft_identity(g, 4);
  EXPECT_TRUE(r.first.within(1e-10));
  EXPECT_TRUE(r.second.within(1e-10));
  EXPECT_THROW(check_dft_identity(g, 0), std::invalid_argument);
  EXPECT_THROW(check_dft_identity(g, 9), std::out_of_range);
}

TEST(DftIdentity, SmallestGridByHand) {
  // n = 1, g = [2, 5]: psi(-1) = -2, dft(g)(-1) = -2 + 5 = 3, dft(g')(-1) = -3,
  // C(-1) = 5 + 2 = 7, D(-1) = -2 (-1)(-1) = -2, E = phi D - C = 4 - 7 = -3.
  const GridFunction g = on_one(2.0, 5.0);
  const BoundaryData bd = boundary_data(g);
  EXPECT_NEAR(std::abs(bd.C.at(-1) - 7.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(bd.D.at(-1) + 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(bd.E.at(-1) + 3.0), 0.0, 1e-15);
  const auto r = check_dft_identity(g, -1);
  EXPECT_LT(r.first.residual, 1e-14);
}

}  // namespace
}  // namespace pidft
