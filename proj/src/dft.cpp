#include "pidft/dft.hpp"

#include <fftw3.h>

#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "pidft/parallel.hpp"
#include "pidft/phase.hpp"

namespace pidft {

namespace {

std::int64_t period_of(const ScaledGrid& grid) { return 2 * grid.n() * grid.n(); }

// exp(sign * pi i r / n^2) = unit_root(sign * r, 2n^2) for r in [0, 2n^2).
std::vector<Complex> phase_table(const ScaledGrid& grid, Sign sign) {
  const std::int64_t period = period_of(grid);
  std::vector<Complex> table(static_cast<std::size_t>(period));
  for (std::int64_t r = 0; r < period; ++r) {
    const Complex w = unit_root(r, period);
    table[static_cast<std::size_t>(r)] = sign == Sign::Negative ? std::conj(w) : w;
  }
  return table;
}

// out[k] = scale * sum_j in[j] * table[(j k) mod 2n^2], over grid indices.
GridFunction naive_transform(const GridFunction& in, Sign sign, double scale,
                             const TransformOptions& options) {
  const ScaledGrid& grid = in.grid();
  const std::int64_t period = period_of(grid);
  const auto table = phase_table(grid, sign);
  const auto values = in.values();
  std::vector<Complex> out(values.size());

  parallel_for(values.size(), options.threads, [&](std::size_t ko) {
    const std::int64_t k = grid.index(ko);
    const std::int64_t step = reduce_mod(k, period);
    std::int64_t r = reduce_mod(grid.first_index() * k, period);
    Complex s{};
    for (const Complex& v : values) {
      s += v * table[static_cast<std::size_t>(r)];
      r += step;
      if (r >= period) r -= period;
    }
    out[ko] = s * scale;
  });
  return GridFunction(grid, std::move(out));
}

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(p);
  }
};

// exp(-pi i jk/n^2) with a = j + n^2, b = k + n^2, N = 2n^2 factors as
// exp(-2 pi i ab/N) (-1)^a (-1)^b (-1)^n, and likewise for the + sign, so both
// directions are a standard DFT between two sign flips.
GridFunction fft_transform(const GridFunction& in, int fftw_sign, double scale) {
  const ScaledGrid& grid = in.grid();
  const std::size_t size = in.size();
  const bool n_odd = (grid.n() % 2) != 0;

  std::vector<Complex> buffer(in.values().begin(), in.values().end());
  for (std::size_t a = 1; a < size; a += 2) buffer[a] = -buffer[a];

  auto* data = reinterpret_cast<fftw_complex*>(buffer.data());
  std::unique_ptr<fftw_plan_s, PlanDeleter> plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan.reset(fftw_plan_dft_1d(static_cast<int>(size), data, data, fftw_sign, FFTW_ESTIMATE));
  }
  if (!plan) throw std::runtime_error("FFTW failed to create a plan");
  fftw_execute(plan.get());

  for (std::size_t b = 0; b < size; ++b) {
    const bool flip = ((b % 2) != 0) != n_odd;
    buffer[b] *= flip ? -scale : scale;
  }
  return GridFunction(grid, std::move(buffer));
}

}  // namespace

Complex Kernel::operator()(std::int64_t j, std::int64_t k) const noexcept {
  const Complex w = unit_root(j * k, period_of(grid_));
  return sign_ == Sign::Negative ? std::conj(w) : w;
}

Complex kernel_eval(const ScaledGrid& grid, Sign sign, double x, double t) {
  return Kernel(grid, sign)(floor_project(x, grid), floor_project(t, grid));
}

GridFunction dft(const GridFunction& g, const TransformOptions& options) {
  return naive_transform(g, Sign::Negative, g.grid().weight(), options);
}

GridFunction idft(const GridFunction& ghat, const TransformOptions& options) {
  return naive_transform(ghat, Sign::Positive, 0.5 * ghat.grid().weight(), options);
}

Complex dft_at(const GridFunction& g, std::int64_t k) {
  const ScaledGrid& grid = g.grid();
  if (!grid.contains_index(k)) throw std::out_of_range("dft_at: index outside the grid");
  const Kernel kernel(grid, Sign::Negative);
  Complex s{};
  for (std::int64_t j = grid.first_index(); j <= grid.last_index(); ++j) {
    s += g.at(j) * kernel(j, k);
  }
  return s * grid.weight();
}

GridFunction dft_fast(const GridFunction& g) {
  return fft_transform(g, FFTW_FORWARD, g.grid().weight());
}

GridFunction idft_fast(const GridFunction& ghat) {
  return fft_transform(ghat, FFTW_BACKWARD, 0.5 * ghat.grid().weight());
}

}  // namespace pidft
