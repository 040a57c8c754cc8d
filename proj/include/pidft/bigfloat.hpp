#pragma once

// Minimal value-semantic wrapper over an MPFR float with an explicit binary
// precision. Binary operations produce the larger of the operand precisions.

#include <mpfr.h>

#include <string>

namespace pidft {

class BigFloat {
 public:
  explicit BigFloat(long bits = 64);
  BigFloat(double value, long bits);
  static BigFloat from_int(long value, long bits);
  static BigFloat pi(long bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  long precision() const noexcept { return static_cast<long>(mpfr_get_prec(v_)); }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits; unlike to_double it
  /// never underflows.
  std::string to_string(int digits = 17) const;
  /// Base-2 exponent e with 0.5 <= |x| / 2^e < 1 (0 for zero).
  long exponent2() const noexcept;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat& operator*=(double o);
  BigFloat& operator/=(long o);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator*(BigFloat a, double b) { return a *= b; }
  friend BigFloat operator*(double b, BigFloat a) { return a *= b; }
  friend BigFloat operator/(BigFloat a, long b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }

  friend BigFloat abs(const BigFloat& x);
  friend BigFloat exp(const BigFloat& x);
  friend BigFloat sqrt(const BigFloat& x);
  /// (cos x, sin x)
  friend void sin_cos(const BigFloat& x, BigFloat& sin_out, BigFloat& cos_out);

 private:
  void grow_to(const BigFloat& o);

  mpfr_t v_;
};

/// Real pair at extended precision.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
};

BigFloat abs(const BigComplex& z);

}  // namespace pidft
