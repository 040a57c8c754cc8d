#include "pidft/quadrature.hpp"

#include <array>
#include <cmath>
#include <algorithm>
#include <sstream>
#include <vector>

#include "pidft/errors.hpp"

namespace pidft {

namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525513184, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss weights for the odd-indexed nodes above (1, 3, ..., 9).
constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class T>
struct Panel {
  double a, b;
  T value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

double magnitude(double v) { return std::abs(v); }
double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class T, class F>
Panel<T> gauss_kronrod(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(center);
  T kronrod = fc * kKronrodWeights[10];
  T gauss{};
  for (std::size_t i = 0; i < 10; ++i) {
    const double dx = half * kNodes[i];
    const T pair = f(center - dx) + f(center + dx);
    kronrod += pair * kKronrodWeights[i];
    if (i % 2 == 1) gauss += pair * kGaussWeights[i / 2];
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, magnitude(kronrod - gauss)};
}

template <class T, class F>
QuadratureResult<T> adaptive(const F& f, double a, double b, const QuadratureOptions& options) {
  QuadratureResult<T> result;
  if (a == b) return result;
  auto counted = [&](double x) {
    ++result.evaluations;
    return f(x);
  };

  // Max-heap on the error estimate.
  std::vector<Panel<T>> heap;
  const int panels = std::max(1, options.initial_panels);
  const double width = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * width;
    const double hi = i + 1 == panels ? b : a + (i + 1) * width;
    heap.push_back(gauss_kronrod<T>(counted, lo, hi));
  }
  std::make_heap(heap.begin(), heap.end());

  auto total_error = [&] {
    double e = 0.0;
    for (const auto& p : heap) e += p.error;
    return e;
  };

  double error = total_error();
  while (error > options.abs_tol) {
    if (static_cast<int>(heap.size()) >= options.max_intervals) {
      std::ostringstream msg;
      msg << "adaptive quadrature on [" << a << ", " << b << "] stopped at " << heap.size()
          << " intervals with error estimate " << error << " > " << options.abs_tol;
      throw NonConvergenceError(msg.str(), error);
    }
    std::pop_heap(heap.begin(), heap.end());
    const Panel<T> worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    error -= worst.error;
    for (const auto& half : {gauss_kronrod<T>(counted, worst.a, mid),
                             gauss_kronrod<T>(counted, mid, worst.b)}) {
      error += half.error;
      heap.push_back(half);
      std::push_heap(heap.begin(), heap.end());
    }
    // Refresh the running total now and then to shed accumulated rounding.
    if (heap.size() % 64 == 0 || error <= options.abs_tol) error = total_error();
  }

  // Sum in interval order so the value does not depend on heap layout.
  std::sort(heap.begin(), heap.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
  for (const auto& p : heap) result.value += p.value;
  result.error = error;
  return result;
}

}  // namespace

QuadratureResult<std::complex<double>> integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    const QuadratureOptions& options) {
  return adaptive<std::complex<double>>(f, a, b, options);
}

QuadratureResult<double> integrate_adaptive_real(const std::function<double(double)>& f, double a,
                                                 double b, const QuadratureOptions& options) {
  return adaptive<double>(f, a, b, options);
}

}  // namespace pidft
