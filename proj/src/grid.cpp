#include "pidft/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pidft/errors.hpp"

namespace pidft {

ScaledGrid make_grid(std::int64_t n, std::int64_t max_n) {
  if (n < 1) {
    throw std::invalid_argument("grid parameter n must be >= 1, got " + std::to_string(n));
  }
  if (n > max_n) {
    throw std::invalid_argument("grid parameter n = " + std::to_string(n) +
                                " exceeds the configured maximum " + std::to_string(max_n));
  }
  return ScaledGrid(n);
}

std::int64_t floor_project(double x, const ScaledGrid& grid) {
  const auto n = static_cast<double>(grid.n());
  if (!(x >= -n && x < n)) {
    throw std::out_of_range("floor_project: x = " + std::to_string(x) + " outside [-n, n)");
  }
  auto j = static_cast<std::int64_t>(std::floor(x * n));
  // x * n can round across an integer; settle against the exact cell edges.
  if (grid.point(j) > x) --j;
  if (j < grid.last_index() && grid.point(j + 1) <= x) ++j;
  return j;
}

GridFunction::GridFunction(ScaledGrid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) != grid_.size()) {
    throw std::invalid_argument("GridFunction: expected " + std::to_string(grid_.size()) +
                                " values, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i].real()) || !std::isfinite(values_[i].imag())) {
      throw std::domain_error("GridFunction: non-finite value at x = " +
                              std::to_string(grid_.point(grid_.index(i))));
    }
  }
}

GridFunction GridFunction::zeros(const ScaledGrid& grid) {
  return GridFunction(grid, std::vector<Complex>(static_cast<std::size_t>(grid.size())));
}

double GridFunction::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

GridFunction sample(const RealToComplex& f, const ScaledGrid& grid) {
  std::vector<Complex> values(static_cast<std::size_t>(grid.size()));
  for (std::int64_t j = grid.first_index(); j <= grid.last_index(); ++j) {
    const double x = grid.point(j);
    Complex v;
    try {
      v = f(x);
    } catch (const std::exception& e) {
      throw EvaluationError(std::string("evaluator failed at x = ") + std::to_string(x) + ": " +
                                e.what(),
                            x);
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw EvaluationError("evaluator returned a non-finite value at x = " + std::to_string(x),
                            x);
    }
    values[grid.offset(j)] = v;
  }
  return GridFunction(grid, std::move(values));
}

namespace {

template <class T>
T pairwise(std::span<const T> terms) {
  constexpr std::size_t kBlock = 16;
  if (terms.size() <= kBlock) {
    T s{};
    for (const auto& t : terms) s += t;
    return s;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise(terms.first(half)) + pairwise(terms.subspan(half));
}

}  // namespace

Complex pairwise_sum(std::span<const Complex> terms) { return pairwise(terms); }
double pairwise_sum(std::span<const double> terms) { return pairwise(terms); }

Complex integrate(const GridFunction& g) {
  return pairwise_sum(g.values()) * g.grid().weight();
}

double l1_norm(const GridFunction& g) {
  std::vector<double> mags(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) mags[i] = std::abs(g[i]);
  return pairwise_sum(std::span<const double>(mags)) * g.grid().weight();
}

void require_same_grid(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid() == b.grid())) {
    throw std::invalid_argument("grid mismatch: n = " + std::to_string(a.grid().n()) + " vs " +
                                std::to_string(b.grid().n()));
  }
}

}  // namespace pidft
