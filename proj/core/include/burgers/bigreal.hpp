#pragma once

#include <mpfr.h>

#include <string>

namespace burgers {

// Arbitrary-precision real number (RAII wrapper over mpfr_t).  Precision is
// counted in bits; the working default is 256 and the cross-check pass runs
// at 384.  Arithmetic results carry the larger of the operand precisions, so
// a computation seeded with explicit-precision leaves never silently drops
// below that precision.
class BigReal {
 public:
  static void set_default_precision(int bits);
  static int default_precision();

  BigReal();  // zero at the default precision
  BigReal(long value, int bits = 0);
  BigReal(int value, int bits = 0) : BigReal(static_cast<long>(value), bits) {}
  BigReal(double value, int bits = 0);
  explicit BigReal(const std::string& decimal, int bits = 0);

  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  int precision_bits() const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal operator-() const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b);
  friend bool operator!=(const BigReal& a, const BigReal& b);
  friend bool operator<(const BigReal& a, const BigReal& b);
  friend bool operator<=(const BigReal& a, const BigReal& b);
  friend bool operator>(const BigReal& a, const BigReal& b);
  friend bool operator>=(const BigReal& a, const BigReal& b);

  bool is_zero() const;
  double to_double() const;

  // Shortest decimal string that round-trips at this value's precision.
  std::string to_string() const;

  // 2^e, exact.
  static BigReal pow2(long e, int bits = 0);

  friend BigReal abs(const BigReal& x);
  friend BigReal exp(const BigReal& x);
  friend BigReal log(const BigReal& x);
  friend BigReal sqrt(const BigReal& x);
  friend BigReal cosh(const BigReal& x);
  friend BigReal pow(const BigReal& x, long e);
  friend BigReal pow(const BigReal& x, const BigReal& e);
  friend BigReal hypot(const BigReal& a, const BigReal& b);

  mpfr_srcptr raw() const { return x_; }

 private:
  struct WithPrec {};  // disambiguates from the value constructors
  BigReal(WithPrec, mpfr_prec_t prec);
  mpfr_t x_;
};

// Complex number with BigReal parts.
struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() = default;
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(const BigReal& r) : re(r), im(0L, r.precision_bits()) {}

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  BigReal magnitude() const { return hypot(re, im); }
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigReal& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);
bool operator==(const BigComplex& a, const BigComplex& b);

}  // namespace burgers
