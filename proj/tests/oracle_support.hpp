#pragma once

// Independent oracles built from integer arithmetic and MPFR, plus a seeded
// input generator. Free of gtest so the acceptance runner can share it.

#include <mpfr.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "agmpi/mpreal.hpp"

namespace agmpi::testing {

// Fixed-point oracles: each returns floor(value * 10^scale) up to a few
// units in the last place. Only GMP integer arithmetic is used.

inline mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

/// atanh(1/m) = sum 1/((2k+1) m^(2k+1)).
inline mpz_class atanh_inv(long m, long scale) {
  const mpz_class one = pow10(scale);
  const long m2 = m * m;
  mpz_class power = one / m;
  mpz_class sum = 0;
  for (long k = 0; power != 0; ++k) {
    sum += power / (2 * k + 1);
    power /= m2;
  }
  return sum;
}

/// arctan(1/m) = sum (-1)^k/((2k+1) m^(2k+1)).
inline mpz_class atan_inv(long m, long scale) {
  const mpz_class one = pow10(scale);
  const long m2 = m * m;
  mpz_class power = one / m;
  mpz_class sum = 0;
  for (long k = 0; power != 0; ++k) {
    if (k % 2 == 0) {
      sum += power / (2 * k + 1);
    } else {
      sum -= power / (2 * k + 1);
    }
    power /= m2;
  }
  return sum;
}

/// e = sum 1/k!.
inline mpz_class e_series(long scale) {
  mpz_class term = pow10(scale);
  mpz_class sum = 0;
  for (long k = 1; term != 0; ++k) {
    sum += term;
    term /= k;
  }
  return sum;
}

/// pi by Machin: 16 atan(1/5) - 4 atan(1/239).
inline mpz_class machin_pi(long scale) {
  return 16 * atan_inv(5, scale) - 4 * atan_inv(239, scale);
}

/// log 2 = 2 atanh(1/3).
inline mpz_class log2_series(long scale) { return 2 * atanh_inv(3, scale); }

/// log 10 = 3 log 2 + log(5/4) = 3 log 2 + 2 atanh(1/9).
inline mpz_class log10_series(long scale) {
  return 3 * log2_series(scale) + 2 * atanh_inv(9, scale);
}

/// n / 10^scale as a Real, converted by MPFR rather than by our own division.
inline Real fixed_to_real(const mpz_class& n, long scale, const Precision& p) {
  Real r(p);
  mpfr_t den;
  mpfr_init2(den, p.working_bits() + 64);
  mpfr_set_z(den, pow10(scale).get_mpz_t(), MPFR_RNDN);
  mpfr_t num;
  mpfr_init2(num, p.working_bits() + 64);
  mpfr_set_z(num, n.get_mpz_t(), MPFR_RNDN);
  mpfr_div(r.get_mutable(), num, den, MPFR_RNDN);
  mpfr_clear(num);
  mpfr_clear(den);
  return r;
}

/// MPFR's own pi, an implementation unrelated to ours.
inline Real mpfr_pi(const Precision& p) {
  Real r(p);
  mpfr_const_pi(r.get_mutable(), MPFR_RNDN);
  return r;
}

/// True when |a - b| <= 10^-digits.
inline bool agree_to(const Real& a, const Real& b, long digits) {
  const Real diff = (a - b).abs();
  return diff.is_zero() || diff.log_abs() <= -digits * std::log(10.0);
}

/// log10 |a - b|, or -infinity for equal values.
inline double log10_diff(const Real& a, const Real& b) {
  const Real diff = (a - b).abs();
  if (diff.is_zero()) return -INFINITY;
  return diff.log_abs() / std::log(10.0);
}

/// log2 |x|, or -infinity for zero.
inline double log2_abs(const Real& x) {
  if (x.is_zero()) return -INFINITY;
  return x.log_abs() / std::log(2.0);
}

// --- generators -----------------------------------------------------------

/// Seeded source of test inputs. Reals are drawn as random decimal strings
/// so they carry digits all the way down, not just a double's 53 bits.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  /// Uniform in (lo, hi) with `digits` random decimal digits.
  Real real_in(double lo, double hi, const Precision& p) {
    const long digits = p.decimal_digits;
    std::string frac = "0.";
    for (long i = 0; i < digits; ++i) {
      frac.push_back(static_cast<char>('0' + integer(0, 9)));
    }
    frac.push_back('1');  // never exactly 0
    const Real t = from_decimal(frac, p);
    return Real::from_double(lo, p) + t * Real::from_double(hi - lo, p);
  }

  /// Log-uniform in (lo, hi), both positive.
  Real log_uniform(double lo, double hi, const Precision& p) {
    const double x = std::exp(uniform(std::log(lo), std::log(hi)));
    // perturb the low bits so the value is not a short dyadic
    return Real::from_double(x, p) * real_in(0.999999, 1.000001, p);
  }

 private:
  std::mt19937_64 rng_;
};

/// Decimal strings `got` and `want` differ by at most `units` in the last
/// place of `want`. Published tables are occasionally off by one in the final
/// printed digit.
inline bool within_last_digit(const std::string& got, const std::string& want,
                              int units = 1) {
  const Precision p = Precision::from_digits(60);
  const auto e = want.find_first_of("eE");
  const std::string mantissa = want.substr(0, e);
  const auto dot = mantissa.find('.');
  long decimals =
      dot == std::string::npos ? 0 : static_cast<long>(mantissa.size() - dot - 1);
  if (e != std::string::npos) decimals -= std::stol(want.substr(e + 1));
  const Real diff = (from_decimal(got, p) - from_decimal(want, p)).abs();
  const Real unit = from_decimal("1e" + std::to_string(-decimals), p);
  return diff <= unit * units + unit / 1000;
}

}  // namespace agmpi::testing
