#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pidft/catalog.hpp"

namespace pidft {
namespace {

constexpr double kPi = std::numbers::pi;

// Transforms derived by hand, independent of the catalog's recurrence.
Complex hand_transform(const std::string& name, double t) {
  const double w = kPi * t;
  if (name == "gaussian") return std::sqrt(2.0) * std::exp(-kPi * t * t / 2);
  if (name == "gauss_unit") return std::sqrt(kPi) * std::exp(-w * w / 4);
  if (name == "gauss_pi") return std::exp(-kPi * t * t / 4);
  if (name == "hermite1") return Complex(0.0, -std::sqrt(2.0) * t * std::exp(-kPi * t * t / 2));
  if (name == "x2_gauss") return (0.5 - w * w / 4) * std::sqrt(kPi) * std::exp(-w * w / 4);
  if (name == "gauss_ihermite1") return std::sqrt(2.0) * std::exp(-kPi * t * t / 2) * (1.0 + t);
  return 0.0;
}

TEST(Catalog, NamesAndLookup) {
  const auto names = catalog_names();
  EXPECT_EQ(names.size(), 7u);
  EXPECT_EQ(catalog_list().size(), 6u);
  EXPECT_EQ(find_function("hermite1").name, "hermite1");
  EXPECT_THROW(find_function("sinc"), std::invalid_argument);
  const SchwartzFunction zero = find_function("zero");
  EXPECT_EQ(zero.eval(0.3), Complex(0.0));
  EXPECT_EQ(zero.transform(1.1), Complex(0.0));
}

TEST(Catalog, ClosedFormsMatchHandDerivations) {
  for (const auto& f : catalog_list()) {
    ASSERT_TRUE(f.has_closed_form());
    ASSERT_TRUE(f.has_big_evaluators());
    for (const double t : {-2.5, -1.0, -0.3, 0.0, 0.5, 1.7, 3.0}) {
      EXPECT_NEAR(std::abs(f.transform(t) - hand_transform(f.name, t)), 0.0, 1e-14)
          << f.name << " t=" << t;
    }
  }
  EXPECT_NEAR(find_function("gaussian").transform(0.0).real(), std::sqrt(2.0), 1e-15);
}

TEST(Catalog, ReferenceTransformAgreesWithClosedForm) {
  for (const auto& f : catalog_list()) {
    for (const double t : {-2.0, -0.5, 0.0, 1.0, 4.0}) {
      EXPECT_LT(std::abs(reference_transform(f, t, 1e-10) - f.transform(t)), 1e-10)
          << f.name << " t=" << t;
    }
  }
  EXPECT_THROW(reference_transform(find_function("gaussian"), 0.0, 0.0), std::invalid_argument);
}

TEST(Catalog, DerivativesMatchDifferenceQuotients) {
  const double h = 1e-5;
  for (const auto& f : catalog_list()) {
    for (const double x : {-1.3, -0.2, 0.0, 0.7, 2.1}) {
      const Complex d1 = (f.eval(x + h) - f.eval(x - h)) / (2 * h);
      const Complex d2 = (f.d1(x + h) - f.d1(x - h)) / (2 * h);
      EXPECT_LT(std::abs(f.d1(x) - d1), 1e-8) << f.name << " x=" << x;
      EXPECT_LT(std::abs(f.d2(x) - d2), 1e-8) << f.name << " x=" << x;
    }
  }
}

TEST(Catalog, ExtendedEvaluatorsAgreeWithDouble) {
  for (const auto& f : catalog_list()) {
    for (const double x : {-1.25, 0.0, 0.5, 2.0}) {
      const BigComplex v = f.eval_big(BigFloat(x, 256));
      const BigComplex w = f.transform_big(BigFloat(x, 256));
      EXPECT_NEAR(v.re.to_double(), f.eval(x).real(), 1e-15) << f.name;
      EXPECT_NEAR(v.im.to_double(), f.eval(x).imag(), 1e-15) << f.name;
      EXPECT_NEAR(w.re.to_double(), f.transform(x).real(), 1e-14) << f.name;
      EXPECT_NEAR(w.im.to_double(), f.transform(x).imag(), 1e-14) << f.name;
    }
  }
}

TEST(Catalog, L1DiscretizationErrorOracle) {
  // Independent high-accuracy quadrature of the piecewise error.
  const SchwartzFunction f = find_function("gaussian");
  const std::pair<std::int64_t, double> frozen[] = {
      {2, 0.49962171184273074}, {4, 0.2499999999988588}, {8, 0.12499999999999997},
      {16, 0.0625},             {32, 0.03125}};
  for (const auto& [n, expected] : frozen) {
    EXPECT_NEAR(l1_discretization_error(f, n), expected, 1e-10) << "n = " << n;
  }
  EXPECT_EQ(l1_discretization_error(find_function("zero"), 4), 0.0);
}

TEST(Catalog, TruncationRadiusCoversTail) {
  const SchwartzFunction f = find_function("gaussian");
  const double r = truncation_radius(f, 1e-12);
  EXPECT_GT(r, 4.0);
  EXPECT_LT(r, 20.0);
  // True tail 2 * integral_r^inf exp(-pi x^2/2) is far below the request.
  EXPECT_LT(std::erfc(r * std::sqrt(kPi / 2)) * std::sqrt(2.0), 1e-12);
}

}  // namespace
}  // namespace pidft
