#pragma once

// The finite commutative groups Z_m, G_2m = {-m, ..., m-1} and
// G_{m,n} = {-m/n, ..., (m-1)/n}, their characters, and the finite-group
// Fourier transform with respect to the probability measure.
//
// Elements are canonical integer labels: x in 0..m-1 for Z_m, x in -m..m-1 for
// G_2m, and j in -m..m-1 standing for j/n in G_{m,n}. Characters are labelled
// by group elements as well (the dual group is identified with the group).

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pidft {

using Complex = std::complex<double>;

enum class GroupKind { Cyclic, Shift, Scaled };

class FiniteGroup {
 public:
  /// Z_m, m >= 1.
  static FiniteGroup cyclic(std::int64_t m);
  /// G_2m (order 2m), m >= 1.
  static FiniteGroup shift(std::int64_t m);
  /// G_{m,n} (order 2m), m, n >= 1.
  static FiniteGroup scaled(std::int64_t m, std::int64_t n);

  GroupKind kind() const noexcept { return kind_; }
  std::int64_t m() const noexcept { return m_; }
  /// Scale factor; 1 for Z_m and G_2m.
  std::int64_t n() const noexcept { return n_; }
  std::int64_t order() const noexcept { return kind_ == GroupKind::Cyclic ? m_ : 2 * m_; }

  std::int64_t first_element() const noexcept { return kind_ == GroupKind::Cyclic ? 0 : -m_; }
  std::int64_t last_element() const noexcept { return first_element() + order() - 1; }
  bool contains(std::int64_t x) const noexcept {
    return x >= first_element() && x <= last_element();
  }

  /// Enumeration order: first_element() + position.
  std::int64_t element(std::size_t position) const noexcept {
    return first_element() + static_cast<std::int64_t>(position);
  }
  std::size_t position(std::int64_t x) const noexcept {
    return static_cast<std::size_t>(x - first_element());
  }
  std::vector<std::int64_t> elements() const;

  /// Group addition. For G_2m and G_{m,n} this is x + y wrapped into
  /// [-m, m), which equals the m1-fold shift S^{m1}(m2).
  std::int64_t add(std::int64_t x, std::int64_t y) const noexcept;
  std::int64_t negate(std::int64_t x) const noexcept;
  std::int64_t identity() const noexcept { return 0; }

  /// Numeric value of an element (j/n for G_{m,n}).
  double value(std::int64_t x) const noexcept;
  /// "j/n" in lowest terms for G_{m,n}, the integer otherwise.
  std::string display(std::int64_t x) const;
  /// "Z_4", "G_8", "G_{4,2}".
  std::string name() const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  FiniteGroup(GroupKind kind, std::int64_t m, std::int64_t n) : kind_(kind), m_(m), n_(n) {}

  GroupKind kind_;
  std::int64_t m_;
  std::int64_t n_;
};

/// gamma_y. Z_m: exp(2 pi i k x / m). G_2m: exp(pi i x y / m).
/// G_{m,n}: exp(pi i n^2 x y / m) with x = j/n, y = k/n, i.e. exp(pi i j k / m).
/// The exponent is reduced modulo the period in integer arithmetic.
class Character {
 public:
  Character(FiniteGroup group, std::int64_t label);

  const FiniteGroup& group() const noexcept { return group_; }
  std::int64_t label() const noexcept { return label_; }

  Complex operator()(std::int64_t x) const noexcept;

 private:
  FiniteGroup group_;
  std::int64_t label_;
};

/// All characters, one per element label, in enumeration order.
std::vector<Character> characters(const FiniteGroup& group);

/// Functions on a group are vectors indexed by element position.
using GroupFunction = std::vector<Complex>;

/// <g, h> = (1/order) sum_x g(x) conj(h(x)).
Complex inner_product(const FiniteGroup& group, std::span<const Complex> g,
                      std::span<const Complex> h);

/// Samples a character as a GroupFunction.
GroupFunction tabulate(const Character& chi);

/// ghat(gamma_y) = <g, gamma_y>, indexed by the position of label y.
GroupFunction char_transform(const FiniteGroup& group, std::span<const Complex> g);

/// g(x) = sum_y ghat(gamma_y) gamma_y(x).
GroupFunction char_invert(const FiniteGroup& group, std::span<const Complex> ghat);

/// phi: G_2m -> Z_2m, x -> (x + 2m) mod 2m, and psi: G_{m,n} -> G_2m, x -> n x.
struct GroupIsomorphisms {
  FiniteGroup scaled;
  FiniteGroup shift;
  FiniteGroup cyclic;

  std::int64_t phi(std::int64_t x) const noexcept;
  /// On labels psi is the identity: element j/n maps to j.
  std::int64_t psi(std::int64_t j) const noexcept { return j; }
};

GroupIsomorphisms group_isomorphisms(std::int64_t m, std::int64_t n);

}  // namespace pidft
