#pragma once

// The scaled grid {-n, -n + 1/n, ..., n - 1/n} (2n^2 points, cell measure
// 1/n), complex functions on it, and the counting-measure integral.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace pidft {

using Complex = std::complex<double>;

inline constexpr std::int64_t kDefaultMaxN = 512;

class ScaledGrid {
 public:
  std::int64_t n() const noexcept { return n_; }
  /// Number of points, 2n^2.
  std::int64_t size() const noexcept { return 2 * n_ * n_; }
  /// Measure of one cell, 1/n.
  double weight() const noexcept { return 1.0 / static_cast<double>(n_); }
  double total_measure() const noexcept { return 2.0 * static_cast<double>(n_); }

  /// Grid indices run over [first_index, last_index] = [-n^2, n^2 - 1].
  std::int64_t first_index() const noexcept { return -n_ * n_; }
  std::int64_t last_index() const noexcept { return n_ * n_ - 1; }
  bool contains_index(std::int64_t j) const noexcept {
    return j >= first_index() && j <= last_index();
  }

  /// Coordinate j/n of grid index j.
  double point(std::int64_t j) const noexcept {
    return static_cast<double>(j) / static_cast<double>(n_);
  }

  /// Storage position of index j (j + n^2).
  std::size_t offset(std::int64_t j) const noexcept {
    return static_cast<std::size_t>(j - first_index());
  }
  std::int64_t index(std::size_t offset) const noexcept {
    return static_cast<std::int64_t>(offset) + first_index();
  }

  friend bool operator==(const ScaledGrid&, const ScaledGrid&) = default;

 private:
  friend ScaledGrid make_grid(std::int64_t n, std::int64_t max_n);
  explicit ScaledGrid(std::int64_t n) : n_(n) {}

  std::int64_t n_;
};

/// Throws std::invalid_argument for n < 1 or n > max_n.
ScaledGrid make_grid(std::int64_t n, std::int64_t max_n = kDefaultMaxN);

/// Index j of the cell [j/n, (j+1)/n) containing x (floor toward -infinity).
/// Consistent with ScaledGrid::point: point(j) <= x < point(j + 1).
/// Throws std::out_of_range unless -n <= x < n.
std::int64_t floor_project(double x, const ScaledGrid& grid);

/// Complex values on a ScaledGrid, stored by offset. Immutable; all values
/// are finite.
class GridFunction {
 public:
  /// Throws std::invalid_argument on a length mismatch and std::domain_error
  /// on a non-finite value.
  GridFunction(ScaledGrid grid, std::vector<Complex> values);

  static GridFunction zeros(const ScaledGrid& grid);

  const ScaledGrid& grid() const noexcept { return grid_; }
  std::span<const Complex> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Value at grid index j (not offset).
  Complex at(std::int64_t j) const { return values_[grid_.offset(j)]; }
  Complex operator[](std::size_t offset) const { return values_[offset]; }

  /// Largest |value|, 0 for the zero function.
  double max_abs() const noexcept;

 private:
  ScaledGrid grid_;
  std::vector<Complex> values_;
};

using RealToComplex = std::function<Complex(double)>;

/// values[j] = f(j/n). A throwing or non-finite evaluation is reported as
/// EvaluationError carrying the offending point.
GridFunction sample(const RealToComplex& f, const ScaledGrid& grid);

/// Pairwise (tree) sum.
Complex pairwise_sum(std::span<const Complex> terms);
double pairwise_sum(std::span<const double> terms);

/// (1/n) * sum of values.
Complex integrate(const GridFunction& g);

/// (1/n) * sum of |values|.
double l1_norm(const GridFunction& g);

/// Throws std::invalid_argument when the two functions live on different grids.
void require_same_grid(const GridFunction& a, const GridFunction& b);

}  // namespace pidft
