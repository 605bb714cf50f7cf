#pragma once

// Arbitrary-precision real and complex numbers.
//
// MPFR supplies the field operations (add, sub, mul and scalar ops). The
// reciprocal, square root, inverse square root and fourth root are Newton
// iterations with a doubling precision schedule, so every division in the
// library goes through `reciprocal`.

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace agmpi {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an algorithm detects that rounding noise has swamped the
/// quantity it is tracking (e.g. s_n <= 0 in Gauss-Legendre).
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Working precision policy.
///
/// `bits` is the target precision, `guard_bits` the slack carried on top of
/// it. Arithmetic is performed at `working_bits()`.
struct Precision {
  long decimal_digits = 0;
  long bits = 0;
  long guard_bits = 0;

  /// 64 + 4*ceil(log2(bits)).
  static long default_guard_bits(long bits);
  static Precision from_digits(long digits);
  static Precision from_digits(long digits, long guard_bits);
  static Precision from_bits(long bits);

  long working_bits() const { return bits + guard_bits; }

  friend bool operator==(const Precision&, const Precision&) = default;
};

enum class Rounding { truncate, nearest };

class Real {
 public:
  explicit Real(const Precision& p);
  Real(long value, const Precision& p);
  static Real from_mpz(const mpz_class& value, const Precision& p);
  /// Exact conversion of a finite double.
  static Real from_double(double value, const Precision& p);
  /// 2^exponent, exactly.
  static Real power_of_two(long exponent, const Precision& p);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  const Precision& precision() const { return precision_; }
  long working_bits() const { return precision_.working_bits(); }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get_mutable() { return value_; }

  int sign() const;
  bool is_zero() const;
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e. Undefined for zero.
  long exponent() const;
  double to_double() const;
  /// Natural log of |x| in double precision; valid far outside double range.
  double log_abs() const;

  /// x * 2^e, exact.
  Real ldexp(long e) const;
  Real abs() const;
  Real operator-() const;
  /// One unit in the last place at working precision.
  Real ulp() const;
  Real with_precision(const Precision& p) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  /// a * reciprocal(b).
  friend Real operator/(const Real& a, const Real& b);

  friend Real operator+(const Real& a, long b);
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  /// Division by a machine integer, correctly rounded.
  friend Real operator/(const Real& a, long b);

  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, long b);
  friend bool operator==(const Real& a, long b);

 private:
  void init(const Precision& p);

  Precision precision_;
  mpfr_t value_;
};

Real square(const Real& x);
Real pow(const Real& x, unsigned long n);

/// Newton reciprocal: |result*a - 1| <= 2^(2-working_bits).
Real reciprocal(const Real& a);
Real sqrt(const Real& a);
Real inv_sqrt(const Real& a);
/// inv_sqrt(inv_sqrt(a)).
Real fourth_root(const Real& a);

/// Iterates of x <- (x + s/x)/2 at the precision of `s`, starting from x0.
/// Element 0 is x0 itself.
std::vector<Real> heron_iterates(const Real& s, const Real& x0, int steps);

/// Fixed-point decimal with `digits` significant digits.
std::string to_decimal(const Real& a, long digits,
                       Rounding rounding = Rounding::truncate);
/// Fixed-point decimal with exactly `decimals` digits after the point.
std::string to_fixed(const Real& a, long decimals,
                     Rounding rounding = Rounding::nearest);
/// Scientific notation "d.ddd...e-N" with `digits` significant digits.
std::string to_scientific(const Real& a, long digits,
                          Rounding rounding = Rounding::nearest);
/// Accepts [sign] digits [. digits] [(e|E) [sign] digits].
Real from_decimal(std::string_view text, const Precision& p);

/// Counts of the expensive operations issued on this thread.
struct OpCounts {
  std::int64_t reciprocals = 0;
  std::int64_t divisions = 0;
  std::int64_t sqrts = 0;
  std::int64_t inv_sqrts = 0;
};
OpCounts op_counts();
void reset_op_counts();

class Complex {
 public:
  Complex(Real re, Real im);
  explicit Complex(Real re);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  const Precision& precision() const { return re_.precision(); }

  Complex conj() const;
  Real norm() const;  // re^2 + im^2
  Real abs() const;
  Complex ldexp(long e) const;

  friend Complex operator+(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Real& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator+(const Complex& a, long b);

 private:
  Real re_;
  Real im_;
};

Complex reciprocal(const Complex& z);
/// Principal square root: Re >= 0, and Im >= 0 when Re == 0.
Complex sqrt(const Complex& z);

}  // namespace agmpi
