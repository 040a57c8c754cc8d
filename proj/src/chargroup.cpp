#include "pidft/chargroup.hpp"

#include <numeric>
#include <stdexcept>

#include "pidft/phase.hpp"

namespace pidft {

namespace {

void require_positive(std::int64_t v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

// Period of the character phase: gamma_y(x) = unit_root(x * y, period).
std::int64_t phase_period(const FiniteGroup& g) {
  return g.kind() == GroupKind::Cyclic ? g.m() : 2 * g.m();
}

// unit_root(r, period) for every r in [0, period).
std::vector<Complex> root_table(std::int64_t period) {
  std::vector<Complex> table(static_cast<std::size_t>(period));
  for (std::int64_t r = 0; r < period; ++r) table[static_cast<std::size_t>(r)] = unit_root(r, period);
  return table;
}

void require_size(const FiniteGroup& group, std::size_t size) {
  if (static_cast<std::int64_t>(size) != group.order()) {
    throw std::invalid_argument("group function length does not match the order of " +
                                group.name());
  }
}

}  // namespace

FiniteGroup FiniteGroup::cyclic(std::int64_t m) {
  require_positive(m, "m");
  return FiniteGroup(GroupKind::Cyclic, m, 1);
}

FiniteGroup FiniteGroup::shift(std::int64_t m) {
  require_positive(m, "m");
  return FiniteGroup(GroupKind::Shift, m, 1);
}

FiniteGroup FiniteGroup::scaled(std::int64_t m, std::int64_t n) {
  require_positive(m, "m");
  require_positive(n, "n");
  return FiniteGroup(GroupKind::Scaled, m, n);
}

std::vector<std::int64_t> FiniteGroup::elements() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(order()));
  std::iota(out.begin(), out.end(), first_element());
  return out;
}

std::int64_t FiniteGroup::add(std::int64_t x, std::int64_t y) const noexcept {
  return reduce_mod(x + y - first_element(), order()) + first_element();
}

std::int64_t FiniteGroup::negate(std::int64_t x) const noexcept { return add(0, -x); }

double FiniteGroup::value(std::int64_t x) const noexcept {
  return static_cast<double>(x) / static_cast<double>(n_);
}

std::string FiniteGroup::display(std::int64_t x) const {
  if (kind_ != GroupKind::Scaled || n_ == 1) return std::to_string(x);
  const std::int64_t d = std::gcd(x, n_);
  if (d == n_) return std::to_string(x / n_);
  return std::to_string(x / d) + "/" + std::to_string(n_ / d);
}

std::string FiniteGroup::name() const {
  switch (kind_) {
    case GroupKind::Cyclic: return "Z_" + std::to_string(m_);
    case GroupKind::Shift: return "G_" + std::to_string(2 * m_);
    case GroupKind::Scaled: break;
  }
  return "G_{" + std::to_string(m_) + "," + std::to_string(n_) + "}";
}

Character::Character(FiniteGroup group, std::int64_t label) : group_(group), label_(label) {
  if (!group_.contains(label)) {
    throw std::out_of_range("character label " + std::to_string(label) + " is not an element of " +
                            group_.name());
  }
}

Complex Character::operator()(std::int64_t x) const noexcept {
  return unit_root(x * label_, phase_period(group_));
}

std::vector<Character> characters(const FiniteGroup& group) {
  std::vector<Character> out;
  out.reserve(static_cast<std::size_t>(group.order()));
  for (auto y : group.elements()) out.emplace_back(group, y);
  return out;
}

Complex inner_product(const FiniteGroup& group, std::span<const Complex> g,
                      std::span<const Complex> h) {
  require_size(group, g.size());
  require_size(group, h.size());
  Complex s{};
  for (std::size_t i = 0; i < g.size(); ++i) s += g[i] * std::conj(h[i]);
  return s / static_cast<double>(group.order());
}

GroupFunction tabulate(const Character& chi) {
  const auto& group = chi.group();
  GroupFunction out(static_cast<std::size_t>(group.order()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = chi(group.element(i));
  return out;
}

GroupFunction char_transform(const FiniteGroup& group, std::span<const Complex> g) {
  require_size(group, g.size());
  const std::int64_t period = phase_period(group);
  const auto roots = root_table(period);
  const auto order = static_cast<std::size_t>(group.order());
  GroupFunction out(order);
  for (std::size_t yi = 0; yi < order; ++yi) {
    const std::int64_t y = group.element(yi);
    Complex s{};
    for (std::size_t xi = 0; xi < order; ++xi) {
      const std::int64_t x = group.element(xi);
      s += g[xi] * std::conj(roots[static_cast<std::size_t>(reduce_mod(x * y, period))]);
    }
    out[yi] = s / static_cast<double>(order);
  }
  return out;
}

GroupFunction char_invert(const FiniteGroup& group, std::span<const Complex> ghat) {
  require_size(group, ghat.size());
  const std::int64_t period = phase_period(group);
  const auto roots = root_table(period);
  const auto order = static_cast<std::size_t>(group.order());
  GroupFunction out(order);
  for (std::size_t xi = 0; xi < order; ++xi) {
    const std::int64_t x = group.element(xi);
    Complex s{};
    for (std::size_t yi = 0; yi < order; ++yi) {
      const std::int64_t y = group.element(yi);
      s += ghat[yi] * roots[static_cast<std::size_t>(reduce_mod(x * y, period))];
    }
    out[xi] = s;
  }
  return out;
}

std::int64_t GroupIsomorphisms::phi(std::int64_t x) const noexcept {
  const std::int64_t two_m = 2 * shift.m();
  return (x + two_m) % two_m;
}

GroupIsomorphisms group_isomorphisms(std::int64_t m, std::int64_t n) {
  return {FiniteGroup::scaled(m, n), FiniteGroup::shift(m), FiniteGroup::cyclic(2 * m)};
}

}  // namespace pidft
