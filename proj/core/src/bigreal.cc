#include "burgers/bigreal.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace burgers {

namespace {

std::atomic<int> g_default_bits{256};

mpfr_prec_t resolve(int bits) {
  if (bits == 0) return g_default_bits.load();
  if (bits < MPFR_PREC_MIN) throw std::invalid_argument("precision too small");
  return bits;
}

}  // namespace

void BigReal::set_default_precision(int bits) {
  if (bits < MPFR_PREC_MIN) throw std::invalid_argument("precision too small");
  g_default_bits.store(bits);
}

int BigReal::default_precision() { return g_default_bits.load(); }

BigReal::BigReal(WithPrec, mpfr_prec_t prec) { mpfr_init2(x_, prec); }

BigReal::BigReal() {
  mpfr_init2(x_, resolve(0));
  mpfr_set_zero(x_, 1);
}

BigReal::BigReal(long value, int bits) {
  mpfr_init2(x_, resolve(bits));
  mpfr_set_si(x_, value, MPFR_RNDN);
}

BigReal::BigReal(double value, int bits) {
  mpfr_init2(x_, resolve(bits));
  mpfr_set_d(x_, value, MPFR_RNDN);
}

BigReal::BigReal(const std::string& decimal, int bits) {
  mpfr_init2(x_, resolve(bits));
  if (mpfr_set_str(x_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(x_);
    throw std::invalid_argument("BigReal: unparsable decimal \"" + decimal +
                                "\"");
  }
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_set(x_, o.x_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_swap(x_, o.x_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(x_, mpfr_get_prec(o.x_));  // set_prec discards the value
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  if (this != &o) mpfr_swap(x_, o.x_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(x_); }

int BigReal::precision_bits() const {
  return static_cast<int>(mpfr_get_prec(x_));
}

namespace {

mpfr_prec_t joint_prec(const BigReal& a, const BigReal& b) {
  return std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw()));
}

}  // namespace

BigReal& BigReal::operator+=(const BigReal& o) {
  mpfr_add(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& o) {
  mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& o) {
  mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& o) {
  mpfr_div(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal r(BigReal::WithPrec{}, mpfr_get_prec(x_));
  mpfr_neg(r.x_, x_, MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::WithPrec{}, joint_prec(a, b));
  mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::WithPrec{}, joint_prec(a, b));
  mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::WithPrec{}, joint_prec(a, b));
  mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}
BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::WithPrec{}, joint_prec(a, b));
  mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}

bool operator==(const BigReal& a, const BigReal& b) {
  return mpfr_cmp(a.x_, b.x_) == 0;
}
bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
bool operator<(const BigReal& a, const BigReal& b) {
  return mpfr_cmp(a.x_, b.x_) < 0;
}
bool operator<=(const BigReal& a, const BigReal& b) {
  return mpfr_cmp(a.x_, b.x_) <= 0;
}
bool operator>(const BigReal& a, const BigReal& b) {
  return mpfr_cmp(a.x_, b.x_) > 0;
}
bool operator>=(const BigReal& a, const BigReal& b) {
  return mpfr_cmp(a.x_, b.x_) >= 0;
}

bool BigReal::is_zero() const { return mpfr_zero_p(x_) != 0; }

double BigReal::to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

std::string BigReal::to_string() const {
  if (mpfr_nan_p(x_)) return "nan";
  if (mpfr_inf_p(x_)) return mpfr_sgn(x_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(x_)) return mpfr_signbit(x_) ? "-0" : "0";
  const mpfr_prec_t prec = mpfr_get_prec(x_);
#if MPFR_VERSION_MAJOR > 4 || \
    (MPFR_VERSION_MAJOR == 4 && MPFR_VERSION_MINOR >= 1)
  const std::size_t digits = mpfr_get_str_ndigits(10, prec);
#else
  const std::size_t digits =
      1 + static_cast<std::size_t>(
              std::ceil(static_cast<double>(prec) * 0.30102999566398120));
#endif
  // Assembled by hand from mpfr_get_str so the result is locale-independent
  // and reparses to the identical value at the same precision.
  mpfr_exp_t e10 = 0;
  char* s = mpfr_get_str(nullptr, &e10, 10, digits, x_, MPFR_RNDN);
  std::string raw(s);
  mpfr_free_str(s);
  const bool negative = !raw.empty() && raw[0] == '-';
  const std::string mant = negative ? raw.substr(1) : raw;
  std::string out = negative ? "-" : "";
  out += mant.substr(0, 1);
  out += '.';
  out += mant.substr(1);
  out += 'e';
  out += std::to_string(static_cast<long>(e10) - 1);
  return out;
}

BigReal BigReal::pow2(long e, int bits) {
  BigReal r(resolve(bits), 0);
  mpfr_set_ui_2exp(r.x_, 1, e, MPFR_RNDN);
  return r;
}

BigReal abs(const BigReal& x) {
  BigReal r(BigReal::WithPrec{}, mpfr_get_prec(x.x_));
  mpfr_abs(r.x_, x.x_, MPFR_RNDN);
  return r;
}
BigReal exp(const BigReal& x) {
  BigReal r(BigReal::WithPrec{}, mpfr_get_prec(x.x_));
  mpfr_exp(r.x_, x.x_, MPFR_RNDN);
  return r;
}
BigReal log(const BigReal& x) {
  BigReal r(BigReal::WithPrec{}, mpfr_get_prec(x.x_));
  mpfr_log(r.x_, x.x_, MPFR_RNDN);
  return r;
}
BigReal sqrt(const BigReal& x) {
  BigReal r(BigReal::WithPrec{}, mpfr_get_prec(x.x_));
  mpfr_sqrt(r.x_, x.x_, MPFR_RNDN);
  return r;
}
BigReal cosh(const BigReal& x) {
  BigReal r(BigReal::WithPrec{}, mpfr_get_prec(x.x_));
  mpfr_cosh(r.x_, x.x_, MPFR_RNDN);
  return r;
}
BigReal pow(const BigReal& x, long e) {
  BigReal r(BigReal::WithPrec{}, mpfr_get_prec(x.x_));
  mpfr_pow_si(r.x_, x.x_, e, MPFR_RNDN);
  return r;
}
BigReal pow(const BigReal& x, const BigReal& e) {
  BigReal r(BigReal::WithPrec{}, joint_prec(x, e));
  mpfr_pow(r.x_, x.x_, e.x_, MPFR_RNDN);
  return r;
}
BigReal hypot(const BigReal& a, const BigReal& b) {
  BigReal r(BigReal::WithPrec{}, joint_prec(a, b));
  mpfr_hypot(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return {a.re + b.re, a.im + b.im};
}
BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return {a.re - b.re, a.im - b.im};
}
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BigComplex operator*(const BigReal& a, const BigComplex& b) {
  return {a * b.re, a * b.im};
}
BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

bool operator==(const BigComplex& a, const BigComplex& b) {
  return a.re == b.re && a.im == b.im;
}

}  // namespace burgers
