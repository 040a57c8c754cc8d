#include "pidft/bigfloat.hpp"

#include <algorithm>

namespace pidft {

namespace {
constexpr mpfr_rnd_t kRound = MPFR_RNDN;

mpfr_prec_t clamp_bits(long bits) {
  return static_cast<mpfr_prec_t>(std::max<long>(bits, MPFR_PREC_MIN));
}
}  // namespace

BigFloat::BigFloat(long bits) {
  mpfr_init2(v_, clamp_bits(bits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double value, long bits) {
  mpfr_init2(v_, clamp_bits(bits));
  mpfr_set_d(v_, value, kRound);
}

BigFloat BigFloat::from_int(long value, long bits) {
  BigFloat out(bits);
  mpfr_set_si(out.v_, value, kRound);
  return out;
}

BigFloat BigFloat::pi(long bits) {
  BigFloat out(bits);
  mpfr_const_pi(out.v_, kRound);
  return out;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, kRound);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, kRound);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::to_string(int digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", std::max(0, digits - 1), v_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

long BigFloat::exponent2() const noexcept {
  return mpfr_regular_p(v_) ? static_cast<long>(mpfr_get_exp(v_)) : 0;
}

void BigFloat::grow_to(const BigFloat& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), kRound);
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  grow_to(o);
  mpfr_add(v_, v_, o.v_, kRound);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  grow_to(o);
  mpfr_sub(v_, v_, o.v_, kRound);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  grow_to(o);
  mpfr_mul(v_, v_, o.v_, kRound);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  grow_to(o);
  mpfr_div(v_, v_, o.v_, kRound);
  return *this;
}

BigFloat& BigFloat::operator*=(double o) {
  mpfr_mul_d(v_, v_, o, kRound);
  return *this;
}

BigFloat& BigFloat::operator/=(long o) {
  mpfr_div_si(v_, v_, o, kRound);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.v_, out.v_, kRound);
  return out;
}

BigFloat abs(const BigFloat& x) {
  BigFloat out(x);
  mpfr_abs(out.v_, out.v_, kRound);
  return out;
}

BigFloat exp(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_exp(out.v_, x.v_, kRound);
  return out;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_sqrt(out.v_, x.v_, kRound);
  return out;
}

void sin_cos(const BigFloat& x, BigFloat& sin_out, BigFloat& cos_out) {
  sin_out = BigFloat(x.precision());
  cos_out = BigFloat(x.precision());
  mpfr_sin_cos(sin_out.v_, cos_out.v_, x.v_, kRound);
}

BigFloat abs(const BigComplex& z) { return sqrt(z.re * z.re + z.im * z.im); }

}  // namespace pidft
