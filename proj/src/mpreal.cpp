#include "agmpi/mpreal.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <utility>

namespace agmpi {

namespace {

// Bits supplied by the double-precision seed of every Newton iteration.
constexpr mpfr_prec_t kSeedBits = 48;
// Extra bits carried inside the Newton routines before the final rounding.
constexpr mpfr_prec_t kNewtonSlack = 8;

thread_local OpCounts g_op_counts;

class Scratch {
 public:
  explicit Scratch(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Scratch() { mpfr_clear(v_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;

  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Ascending list of precisions ending at `target`, each at most about twice
// the previous one.
std::vector<mpfr_prec_t> newton_schedule(mpfr_prec_t target) {
  std::vector<mpfr_prec_t> steps;
  for (mpfr_prec_t p = target; p > kSeedBits; p = p / 2 + 2) steps.push_back(p);
  std::reverse(steps.begin(), steps.end());
  if (steps.empty()) steps.push_back(target);
  return steps;
}

// out <- 1/a at precision mpfr_get_prec(out). a must be nonzero.
void newton_reciprocal(mpfr_ptr out, mpfr_srcptr a) {
  const mpfr_prec_t target = mpfr_get_prec(out);
  long e = 0;
  const double d = mpfr_get_d_2exp(&e, a, MPFR_RNDN);
  mpfr_set_prec(out, kSeedBits);
  mpfr_set_d(out, 1.0 / d, MPFR_RNDN);
  mpfr_mul_2si(out, out, -e, MPFR_RNDN);
  for (mpfr_prec_t p : newton_schedule(target)) {
    Scratch ap(p);
    Scratch t(p);
    mpfr_set(ap.get(), a, MPFR_RNDN);
    mpfr_prec_round(out, p, MPFR_RNDN);
    // x <- x + x(1 - a x)
    mpfr_mul(t.get(), ap.get(), out, MPFR_RNDN);
    mpfr_ui_sub(t.get(), 1, t.get(), MPFR_RNDN);
    mpfr_mul(t.get(), out, t.get(), MPFR_RNDN);
    mpfr_add(out, out, t.get(), MPFR_RNDN);
  }
}

// out <- a^(-1/2) at precision mpfr_get_prec(out). a must be positive.
void newton_inv_sqrt(mpfr_ptr out, mpfr_srcptr a) {
  const mpfr_prec_t target = mpfr_get_prec(out);
  long e = 0;
  double d = mpfr_get_d_2exp(&e, a, MPFR_RNDN);
  if (e % 2 != 0) {
    d *= 2.0;
    e -= 1;
  }
  mpfr_set_prec(out, kSeedBits);
  mpfr_set_d(out, 1.0 / std::sqrt(d), MPFR_RNDN);
  mpfr_mul_2si(out, out, -e / 2, MPFR_RNDN);
  for (mpfr_prec_t p : newton_schedule(target)) {
    Scratch ap(p);
    Scratch t(p);
    mpfr_set(ap.get(), a, MPFR_RNDN);
    mpfr_prec_round(out, p, MPFR_RNDN);
    // x <- x + x(1 - a x^2)/2
    mpfr_sqr(t.get(), out, MPFR_RNDN);
    mpfr_mul(t.get(), t.get(), ap.get(), MPFR_RNDN);
    mpfr_ui_sub(t.get(), 1, t.get(), MPFR_RNDN);
    mpfr_mul(t.get(), out, t.get(), MPFR_RNDN);
    mpfr_div_2ui(t.get(), t.get(), 1, MPFR_RNDN);
    mpfr_add(out, out, t.get(), MPFR_RNDN);
  }
}

void require_same(const Precision& a, const Precision& b) {
  if (!(a == b)) {
    throw std::invalid_argument("operands carry different precisions");
  }
}

std::string mpfr_digits(const Real& a, long digits, Rounding rounding,
                        mpfr_exp_t& exp10) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  const mpfr_rnd_t rnd =
      rounding == Rounding::truncate ? MPFR_RNDZ : MPFR_RNDN;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits),
                           a.get(), rnd);
  std::string s(raw);
  mpfr_free_str(raw);
  return s;
}

Real reciprocal_uncounted(const Real& a) {
  Scratch x(a.working_bits() + kNewtonSlack);
  newton_reciprocal(x.get(), a.get());
  Real r(a.precision());
  mpfr_set(r.get_mutable(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

long Precision::default_guard_bits(long bits) {
  long log2_bits = 0;
  while ((1L << log2_bits) < bits) ++log2_bits;
  return 64 + 4 * log2_bits;
}

Precision Precision::from_digits(long digits) {
  if (digits < 1) throw DomainError("decimal digits must be positive");
  const long bits =
      static_cast<long>(std::ceil(static_cast<double>(digits) * std::log2(10.0)));
  return from_digits(digits, default_guard_bits(bits));
}

Precision Precision::from_digits(long digits, long guard_bits) {
  if (digits < 1) throw DomainError("decimal digits must be positive");
  if (guard_bits < 0) throw DomainError("guard bits must be non-negative");
  const long bits =
      static_cast<long>(std::ceil(static_cast<double>(digits) * std::log2(10.0)));
  return Precision{digits, bits, guard_bits};
}

Precision Precision::from_bits(long bits) {
  if (bits < 1) throw DomainError("bits must be positive");
  const long digits =
      std::max(1L, static_cast<long>(std::floor(bits / std::log2(10.0))));
  return Precision{digits, bits, default_guard_bits(bits)};
}

// --- Real -----------------------------------------------------------------

void Real::init(const Precision& p) {
  if (p.working_bits() < MPFR_PREC_MIN) {
    throw DomainError("working precision too small");
  }
  precision_ = p;
  mpfr_init2(value_, p.working_bits());
}

Real::Real(const Precision& p) {
  init(p);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, const Precision& p) {
  init(p);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real Real::from_mpz(const mpz_class& value, const Precision& p) {
  Real r(p);
  mpfr_set_z(r.value_, value.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::from_double(double value, const Precision& p) {
  if (!std::isfinite(value)) throw DomainError("non-finite double");
  Real r(p);
  mpfr_set_d(r.value_, value, MPFR_RNDN);
  return r;
}

Real Real::power_of_two(long exponent, const Precision& p) {
  Real r(1, p);
  mpfr_mul_2si(r.value_, r.value_, exponent, MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) {
  init(other.precision_);
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : precision_(other.precision_) {
  // Steal the limbs and leave `other` as a valid 2-bit zero.
  *value_ = *other.value_;
  mpfr_init2(other.value_, MPFR_PREC_MIN);
  mpfr_set_zero(other.value_, 1);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    precision_ = other.precision_;
    mpfr_set_prec(value_, other.working_bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    std::swap(precision_, other.precision_);
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

int Real::sign() const { return mpfr_sgn(value_); }
bool Real::is_zero() const { return mpfr_zero_p(value_) != 0; }
long Real::exponent() const { return mpfr_get_exp(value_); }
double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

double Real::log_abs() const {
  if (is_zero()) return -HUGE_VAL;
  long e = 0;
  const double d = mpfr_get_d_2exp(&e, value_, MPFR_RNDN);
  return std::log(std::fabs(d)) + static_cast<double>(e) * std::log(2.0);
}

Real Real::ldexp(long e) const {
  Real r(precision_);
  mpfr_mul_2si(r.value_, value_, e, MPFR_RNDN);
  return r;
}

Real Real::abs() const {
  Real r(precision_);
  mpfr_abs(r.value_, value_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(precision_);
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

Real Real::ulp() const {
  const long e = is_zero() ? 1 : exponent();
  return power_of_two(e - working_bits(), precision_);
}

Real Real::with_precision(const Precision& p) const {
  Real r(p);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& rhs) {
  require_same(precision_, rhs.precision_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  require_same(precision_, rhs.precision_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  require_same(precision_, rhs.precision_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(a);
  r += b;
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(a);
  r -= b;
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(a);
  r *= b;
  return r;
}

Real operator/(const Real& a, const Real& b) {
  require_same(a.precision_, b.precision_);
  if (b.is_zero()) throw DomainError("division by zero");
  ++g_op_counts.divisions;
  return a * reciprocal_uncounted(b);
}

Real operator+(const Real& a, long b) {
  Real r(a.precision_);
  mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.precision_);
  mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator-(long a, const Real& b) {
  Real r(b.precision_);
  mpfr_si_sub(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.precision_);
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  if (b == 0) throw DomainError("division by zero");
  Real r(a.precision_);
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const Real& a, const Real& b) {
  return mpfr_equal_p(a.value_, b.value_) != 0;
}

std::partial_ordering operator<=>(const Real& a, long b) {
  const int c = mpfr_cmp_si(a.value_, b);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

Real square(const Real& x) {
  Real r(x.precision());
  mpfr_sqr(r.get_mutable(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, unsigned long n) {
  Real result(1, x.precision());
  Real base(x);
  while (n != 0) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n != 0) base = square(base);
  }
  return result;
}

// --- Newton-based operations ---------------------------------------------

Real reciprocal(const Real& a) {
  if (a.is_zero()) throw DomainError("reciprocal of zero");
  ++g_op_counts.reciprocals;
  return reciprocal_uncounted(a);
}

Real inv_sqrt(const Real& a) {
  if (a.sign() <= 0) throw DomainError("inv_sqrt requires a positive argument");
  ++g_op_counts.inv_sqrts;
  Scratch x(a.working_bits() + kNewtonSlack);
  newton_inv_sqrt(x.get(), a.get());
  Real r(a.precision());
  mpfr_set(r.get_mutable(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a) {
  if (a.sign() < 0) throw DomainError("sqrt of a negative number");
  if (a.is_zero()) return Real(a.precision());
  ++g_op_counts.sqrts;
  // sqrt(a) = a * a^(-1/2), evaluated with the Newton slack still attached.
  Scratch x(a.working_bits() + kNewtonSlack);
  newton_inv_sqrt(x.get(), a.get());
  mpfr_mul(x.get(), x.get(), a.get(), MPFR_RNDN);
  Real r(a.precision());
  mpfr_set(r.get_mutable(), x.get(), MPFR_RNDN);
  return r;
}

Real fourth_root(const Real& a) {
  if (a.sign() <= 0) {
    throw DomainError("fourth_root requires a positive argument");
  }
  g_op_counts.inv_sqrts += 2;
  const mpfr_prec_t bits = a.working_bits() + kNewtonSlack;
  Scratch first(bits);
  Scratch second(bits);
  newton_inv_sqrt(first.get(), a.get());
  newton_inv_sqrt(second.get(), first.get());
  Real r(a.precision());
  mpfr_set(r.get_mutable(), second.get(), MPFR_RNDN);
  return r;
}

std::vector<Real> heron_iterates(const Real& s, const Real& x0, int steps) {
  if (s.sign() <= 0 || x0.sign() <= 0) {
    throw DomainError("heron_iterates requires positive s and x0");
  }
  std::vector<Real> xs;
  xs.reserve(static_cast<size_t>(steps) + 1);
  xs.push_back(x0.with_precision(s.precision()));
  for (int i = 0; i < steps; ++i) {
    const Real& x = xs.back();
    xs.push_back((x + s / x).ldexp(-1));
  }
  return xs;
}

OpCounts op_counts() { return g_op_counts; }
void reset_op_counts() { g_op_counts = OpCounts{}; }

// --- decimal conversion ---------------------------------------------------

std::string to_decimal(const Real& a, long digits, Rounding rounding) {
  if (digits > a.precision().decimal_digits) {
    throw std::invalid_argument("requested more digits than the precision holds");
  }
  mpfr_exp_t exp10 = 0;
  std::string s = mpfr_digits(a, digits, rounding, exp10);
  std::string sign;
  if (!s.empty() && s.front() == '-') {
    sign = "-";
    s.erase(0, 1);
  }
  if (a.is_zero()) {
    return digits > 1 ? "0." + std::string(digits - 1, '0') : "0";
  }
  const long n = static_cast<long>(s.size());
  const long e = static_cast<long>(exp10);
  if (e <= 0) return sign + "0." + std::string(-e, '0') + s;
  if (e >= n) return sign + s + std::string(e - n, '0');
  return sign + s.substr(0, e) + "." + s.substr(e);
}

std::string to_fixed(const Real& a, long decimals, Rounding rounding) {
  if (decimals < 0) throw std::invalid_argument("decimals must be non-negative");
  // Scale by 10^decimals in a precision wide enough to hold the integer part
  // exactly, then round to an integer.
  const long extra = static_cast<long>(std::ceil(decimals * std::log2(10.0))) +
                     std::max(0L, a.is_zero() ? 0L : a.exponent()) + 16;
  Scratch scaled(a.working_bits() + extra);
  Scratch ten(a.working_bits() + extra);
  mpfr_set_ui(ten.get(), 10, MPFR_RNDN);
  mpfr_pow_ui(ten.get(), ten.get(), static_cast<unsigned long>(decimals),
              MPFR_RNDN);
  mpfr_mul(scaled.get(), a.get(), ten.get(), MPFR_RNDN);
  mpz_class n;
  mpfr_get_z(n.get_mpz_t(), scaled.get(),
             rounding == Rounding::truncate ? MPFR_RNDZ : MPFR_RNDN);
  const bool negative = sgn(n) < 0;
  std::string digits = mpz_class(abs(n)).get_str();
  if (static_cast<long>(digits.size()) <= decimals) {
    digits.insert(0, static_cast<size_t>(decimals) + 1 - digits.size(), '0');
  }
  std::string out = digits.substr(0, digits.size() - decimals);
  if (decimals > 0) out += "." + digits.substr(digits.size() - decimals);
  return (negative ? "-" : "") + out;
}

std::string to_scientific(const Real& a, long digits, Rounding rounding) {
  if (a.is_zero()) return "0e0";
  mpfr_exp_t exp10 = 0;
  std::string s = mpfr_digits(a, digits, rounding, exp10);
  std::string sign;
  if (s.front() == '-') {
    sign = "-";
    s.erase(0, 1);
  }
  std::string out = sign + s.substr(0, 1);
  if (s.size() > 1) out += "." + s.substr(1);
  return out + "e" + std::to_string(static_cast<long>(exp10) - 1);
}

Real from_decimal(std::string_view text, const Precision& p) {
  static const std::regex kFormat(
      R"(^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$)");
  const std::string s(text);
  if (!std::regex_match(s, kFormat)) {
    throw ParseError("malformed decimal: '" + s + "'");
  }
  Real r(p);
  if (mpfr_set_str(r.get_mutable(), s.c_str(), 10, MPFR_RNDN) != 0) {
    throw ParseError("malformed decimal: '" + s + "'");
  }
  return r;
}

// --- Complex --------------------------------------------------------------

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  require_same(re_.precision(), im_.precision());
}

Complex::Complex(Real re) : re_(std::move(re)), im_(re_.precision()) {}

Complex Complex::conj() const { return Complex(re_, -im_); }
Real Complex::norm() const { return square(re_) + square(im_); }
Real Complex::abs() const { return sqrt(norm()); }
Complex Complex::ldexp(long e) const {
  return Complex(re_.ldexp(e), im_.ldexp(e));
}

Complex operator+(const Complex& a, const Complex& b) {
  return Complex(a.re_ + b.re_, a.im_ + b.im_);
}

Complex operator-(const Complex& a, const Complex& b) {
  return Complex(a.re_ - b.re_, a.im_ - b.im_);
}

Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

Complex operator*(const Complex& a, const Real& b) {
  return Complex(a.re_ * b, a.im_ * b);
}

Complex operator/(const Complex& a, const Complex& b) {
  return a * reciprocal(b);
}

Complex operator+(const Complex& a, long b) { return Complex(a.re_ + b, a.im_); }

Complex reciprocal(const Complex& z) {
  const Real inv_norm = reciprocal(z.norm());
  return Complex(z.re() * inv_norm, -(z.im() * inv_norm));
}

Complex sqrt(const Complex& z) {
  const Precision& p = z.precision();
  if (z.re().is_zero() && z.im().is_zero()) return Complex(Real(p), Real(p));
  if (z.im().is_zero() && z.re().sign() > 0) {
    return Complex(sqrt(z.re()), Real(p));
  }
  const Real r = z.abs();
  if (z.re().sign() >= 0) {
    Real re = sqrt((r + z.re()).ldexp(-1));
    Real im = z.im() / re.ldexp(1);
    return Complex(std::move(re), std::move(im));
  }
  // Re < 0: take the imaginary part first to avoid cancellation in r + re.
  Real t = sqrt((r - z.re()).ldexp(-1));
  Real re = z.im().abs() / t.ldexp(1);
  Real im = z.im().sign() >= 0 ? t : -t;
  return Complex(std::move(re), std::move(im));
}

}  // namespace agmpi
