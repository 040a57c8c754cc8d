#include "pidft/catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "pidft/errors.hpp"
#include "pidft/quadrature.hpp"

namespace pidft {

namespace {

double real_like(double v, double) { return v; }
BigFloat real_like(double v, const BigFloat& like) { return BigFloat(v, like.precision()); }
double pi_like(double) { return std::numbers::pi; }
BigFloat pi_like(const BigFloat& like) { return BigFloat::pi(like.precision()); }

template <class T>
struct Pair {
  T re;
  T im;
};

template <class T>
T rate(const PolyGaussian& spec, const T& like) {
  T a = real_like(spec.alpha, like);
  if (spec.pi_power == 1) a = a * pi_like(like);
  return a;
}

template <class T>
T horner(const std::vector<T>& coefficients, const T& x) {
  T acc = real_like(0.0, x);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <class T>
std::vector<T> real_parts(const std::vector<Complex>& c, const T& like) {
  std::vector<T> out;
  for (const auto& z : c) out.push_back(real_like(z.real(), like));
  return out;
}

template <class T>
std::vector<T> imag_parts(const std::vector<Complex>& c, const T& like) {
  std::vector<T> out;
  for (const auto& z : c) out.push_back(real_like(z.imag(), like));
  return out;
}

// P(x) exp(-a x^2)
template <class T>
Pair<T> value(const PolyGaussian& spec, const T& x) {
  using std::exp;
  const T a = rate(spec, x);
  const T envelope = exp(-(a * x * x));
  return {horner(real_parts(spec.coefficients, x), x) * envelope,
          horner(imag_parts(spec.coefficients, x), x) * envelope};
}

// With w = pi t and G(w) = sqrt(pi/a) exp(-w^2/(4a)), the transform of
// x^m exp(-a x^2) is i^m Q_m(w) G(w) where Q_0 = 1 and
// Q_{m+1} = Q_m' - w/(2a) Q_m.
template <class T>
Pair<T> transform_value(const PolyGaussian& spec, const T& t) {
  using std::exp;
  using std::sqrt;
  const T zero = real_like(0.0, t);
  const T a = rate(spec, t);
  const T pi = pi_like(t);
  const T w = pi * t;
  const T inv_2a = real_like(1.0, t) / (real_like(2.0, t) * a);

  const std::size_t degree = spec.coefficients.size();
  std::vector<T> r_re(degree, zero), r_im(degree, zero);
  std::vector<T> q{real_like(1.0, t)};
  for (std::size_t m = 0; m < degree; ++m) {
    // c_m * i^m as a real pair.
    const double cr = spec.coefficients[m].real();
    const double ci = spec.coefficients[m].imag();
    double ur = cr, ui = ci;
    switch (m % 4) {
      case 1: ur = -ci; ui = cr; break;
      case 2: ur = -cr; ui = -ci; break;
      case 3: ur = ci; ui = -cr; break;
      default: break;
    }
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (ur != 0.0) r_re[k] = r_re[k] + q[k] * ur;
      if (ui != 0.0) r_im[k] = r_im[k] + q[k] * ui;
    }
    std::vector<T> next(q.size() + 1, zero);
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      next[k] = q[k + 1] * static_cast<double>(k + 1);
    }
    for (std::size_t k = 0; k < q.size(); ++k) next[k + 1] = next[k + 1] - q[k] * inv_2a;
    q = std::move(next);
  }
  const T gauss = sqrt(pi / a) * exp(-(w * w * inv_2a) / 2L);
  return {horner(r_re, w) * gauss, horner(r_im, w) * gauss};
}

// Coefficients of P' - 2 a x P.
std::vector<Complex> differentiate(const std::vector<Complex>& p, double a) {
  if (p.empty()) return {};
  std::vector<Complex> out(p.size() + 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] += static_cast<double>(k) * p[k];
  for (std::size_t k = 0; k < p.size(); ++k) out[k + 1] -= 2.0 * a * p[k];
  return out;
}

std::function<Complex(double)> envelope_eval(std::vector<Complex> poly, double a) {
  return [poly = std::move(poly), a](double x) {
    Complex acc{};
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc * std::exp(-a * x * x);
  };
}

const std::vector<PolyGaussian>& specs() {
  static const std::vector<PolyGaussian> all = {
      {"gaussian", {1.0}, 0.5, 1},
      {"gauss_unit", {1.0}, 1.0, 0},
      {"gauss_pi", {1.0}, 1.0, 1},
      {"hermite1", {0.0, 1.0}, 0.5, 1},
      {"x2_gauss", {0.0, 0.0, 1.0}, 1.0, 0},
      {"gauss_ihermite1", {Complex(1.0, 0.0), Complex(0.0, 1.0)}, 0.5, 1},
  };
  return all;
}

}  // namespace

SchwartzFunction make_function(const PolyGaussian& spec) {
  const double a = rate(spec, 0.0);
  const auto p1 = differentiate(spec.coefficients, a);
  const auto p2 = differentiate(p1, a);

  SchwartzFunction f;
  f.name = spec.name;
  f.eval = envelope_eval(spec.coefficients, a);
  f.d1 = envelope_eval(p1, a);
  f.d2 = envelope_eval(p2, a);
  f.transform = [spec](double t) {
    const auto v = transform_value(spec, t);
    return Complex(v.re, v.im);
  };
  f.eval_big = [spec](const BigFloat& x) {
    auto v = value(spec, x);
    return BigComplex{std::move(v.re), std::move(v.im)};
  };
  f.transform_big = [spec](const BigFloat& t) {
    auto v = transform_value(spec, t);
    return BigComplex{std::move(v.re), std::move(v.im)};
  };
  return f;
}

std::vector<SchwartzFunction> catalog_list() {
  std::vector<SchwartzFunction> out;
  for (const auto& s : specs()) out.push_back(make_function(s));
  return out;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& s : specs()) out.push_back(s.name);
  out.emplace_back("zero");
  return out;
}

SchwartzFunction find_function(const std::string& name) {
  if (name == "zero") return make_function({"zero", {}, 1.0, 0});
  for (const auto& s : specs()) {
    if (s.name == name) return make_function(s);
  }
  std::ostringstream msg;
  msg << "unknown function '" << name << "'; known:";
  for (const auto& known : catalog_names()) msg << ' ' << known;
  throw std::invalid_argument(msg.str());
}

GridFunction sample(const SchwartzFunction& f, const ScaledGrid& grid) {
  return sample(f.eval, grid);
}

double truncation_radius(const SchwartzFunction& f, double tail_tol) {
  // |f| <= C12 / |x|^12, so the two tails beyond R hold at most
  // 2 C12 / (11 R^11).
  const double c12 = f.decay().C12;
  if (c12 <= 0.0) return 1.0;
  return std::max(1.0, std::pow(2.0 * c12 / (11.0 * tail_tol), 1.0 / 11.0));
}

Complex reference_transform(const SchwartzFunction& f, double t, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("reference_transform: tol must be positive");
  const double radius = truncation_radius(f, tol / 2.0);
  QuadratureOptions options;
  options.abs_tol = tol / 2.0;
  options.initial_panels = static_cast<int>(std::ceil(2.0 * radius * std::max(1.0, std::abs(t))));
  options.max_intervals = options.initial_panels + 200000;
  const double omega = std::numbers::pi * t;
  const auto result = integrate_adaptive(
      [&](double x) { return f.eval(x) * std::polar(1.0, -omega * x); }, -radius, radius,
      options);

  if (f.has_closed_form()) {
    const double gap = std::abs(result.value - f.transform(t));
    if (gap > 2.0 * tol) {
      std::ostringstream msg;
      msg << "reference transform of " << f.name << " at t = " << t << " differs from the "
          << "closed form by " << gap << " > 2 tol";
      throw NonConvergenceError(msg.str(), gap);
    }
  }
  return result.value;
}

double l1_discretization_error(const SchwartzFunction& f, std::int64_t n, double tol) {
  const ScaledGrid grid = make_grid(n);
  const double nd = static_cast<double>(n);

  // One initial panel per cell keeps the jumps of f([nx]/n) on panel edges.
  QuadratureOptions inner;
  inner.abs_tol = tol / 2.0;
  inner.initial_panels = static_cast<int>(grid.size());
  inner.max_intervals = inner.initial_panels + 200000;
  const auto interior = integrate_adaptive_real(
      [&](double x) {
        const double left = grid.point(floor_project(x, grid));
        return std::abs(f.eval(x) - f.eval(left));
      },
      -nd, nd, inner);

  QuadratureOptions outer;
  outer.abs_tol = tol / 8.0;
  outer.initial_panels = 8;
  const double reach = truncation_radius(f, tol / 8.0);
  auto magnitude = [&](double x) { return std::abs(f.eval(x)); };
  const double right = integrate_adaptive_real(magnitude, nd, nd + reach, outer).value;
  const double left = integrate_adaptive_real(magnitude, -nd - reach, -nd, outer).value;
  return interior.value + right + left;
}

}  // namespace pidft
