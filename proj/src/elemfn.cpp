#include "agmpi/elemfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "agmpi/agm.hpp"
#include "agmpi/piagm.hpp"
#include "constant_cache.hpp"

namespace agmpi {

namespace {

// Exponent T of the fixed-truncation threshold 2^T, T = ceil(wb/36).
long truncation_exponent(const Precision& p) {
  return (p.working_bits() + 35) / 36;
}

Precision with_extra_guard(const Precision& p, long extra) {
  return Precision{p.decimal_digits, p.bits, p.guard_bits + extra};
}

long ceil_log2(double v) {
  return v <= 1.0 ? 0 : static_cast<long>(std::ceil(std::log2(v)));
}

bool negligible(const Real& term, const Real& threshold) {
  return term.abs() < threshold;
}

bool negligible(const Complex& term, const Real& threshold) {
  return term.norm() < square(threshold);
}

Real magnitude(const Real& x) { return x.abs(); }
Real magnitude(const Complex& z) { return z.abs(); }

// theta2(q^4) = 2 sum_{n>=0} q^((2n+1)^2) and
// theta3(q^4) = 1 + 2 sum_{n>=1} q^(4n^2). With `fixed` the sums stop after
// 3 and 2 terms.
template <typename T>
std::pair<T, T> theta_pair_q4(const T& q, bool fixed) {
  const Precision& p = q.precision();
  const Real epsilon = Real::power_of_two(-p.working_bits(), p);
  const Real threshold2 = epsilon * magnitude(q);
  const T q2 = q * q;
  const T q4 = q2 * q2;
  const T q8 = q4 * q4;

  T sum2 = q;
  T term = q;
  T step = q8;
  for (int n = 1; !(fixed && n == 3); ++n) {
    term = term * step;
    if (!fixed && negligible(term, threshold2)) break;
    sum2 = sum2 + term;
    step = step * q8;
  }

  T sum3 = q4;
  term = q4;
  step = q8 * q4;
  for (int n = 1; !(fixed && n == 2); ++n) {
    term = term * step;
    if (!fixed && negligible(term, epsilon)) break;
    sum3 = sum3 + term;
    step = step * q8;
  }
  return {sum2.ldexp(1), sum3.ldexp(1) + 1};
}

// log2 of |log x|, in double, valid for tiny and huge logs alike.
double log2_of_log(const Real& x) {
  constexpr double ln2 = std::numbers::ln2;
  const long e = x.exponent();
  if (e >= -1 && e <= 2) {
    const Real d = x - 1;
    if (d.is_zero()) return -static_cast<double>(x.working_bits());
    // log x ~ x - 1 near one; within a factor of 2 on [1/4, 4).
    return d.log_abs() / ln2;
  }
  return std::log2(std::abs(x.log_abs()));
}

using LogCore = LogResult (*)(const Real&);

// log x = core(2^m x) - m log 2 with 2^m x > 2^threshold_exponent.
Real log_reduced(const Real& x, long threshold_exponent, LogCore core) {
  const Precision& p = x.precision();
  const long m = std::max(0L, threshold_exponent - x.exponent() + 2);
  if (m == 0) return core(x).value;
  const double cancellation =
      std::log2(m * std::numbers::ln2) - log2_of_log(x);
  const long extra = std::max(0L, static_cast<long>(std::ceil(cancellation))) + 4;
  const Precision raised = with_extra_guard(p, extra);
  const Real scaled = x.with_precision(raised).ldexp(m);
  const Real value = core(scaled).value - log2_constant(raised) * m;
  return value.with_precision(p);
}

bool near_one(const Real& x) {
  const Real d = x - 1;
  if (d.is_zero()) return true;
  const double wb = static_cast<double>(x.working_bits());
  const double limit = wb / std::log2(wb);
  return static_cast<double>(d.exponent()) <= -std::ceil(limit);
}

// arg z for Re z > 0, from Im of the complex Sasaki-Kanada log.
Real complex_arg(const Complex& z) {
  const Precision& p = z.precision();
  if (z.re().sign() <= 0) throw DomainError("log_complex requires Re z > 0");
  if (z.im().is_zero()) return Real(p);

  const long wb = p.working_bits();
  const double log2_arg = std::min(
      0.0, (z.im().log_abs() - z.re().log_abs()) / std::numbers::ln2);
  if (log2_arg < -static_cast<double>(wb) / 2 - 2) {
    // arctan t = t (1 - t^2/3 + ...) with t^2 below the working precision
    return z.im() / z.re();
  }

  const long threshold = truncation_exponent(p);
  const long extra =
      std::max(0L, ceil_log2(static_cast<double>(threshold + 2)) +
                       static_cast<long>(std::ceil(-std::min(log2_arg, -3.0)))) +
      4;
  const Precision raised = with_extra_guard(p, extra);
  Complex w(z.re().with_precision(raised), z.im().with_precision(raised));

  // Halve the argument until |arg w| < arctan(0.4), which keeps
  // theta2^2(q^4) ~ 4 q^2 inside the right half-plane.
  int halvings = 0;
  while (w.im().abs() * 5 > w.re() * 2) {
    w = sqrt(w);
    ++halvings;
  }
  w = w.ldexp(threshold - w.re().exponent() + 2);

  const Complex q = reciprocal(w);
  const auto [t2, t3] = theta_pair_q4(q, true);
  const Complex mean = agm_complex(t2 * t2, t3 * t3);
  const Complex value =
      reciprocal(mean) * pi_constant(raised).ldexp(-2);
  return value.im().ldexp(halvings).with_precision(p);
}

}  // namespace

// --- real log -------------------------------------------------------------

LogResult log_salamin_traced(const Real& x) {
  if (!(x >= 16)) {
    throw DomainError("log_salamin requires x >= 16; reduce the argument");
  }
  const Precision& p = x.precision();
  const AgmResult m = agm(Real(1, p), reciprocal(x).ldexp(2));
  return LogResult{pi_constant(p) / m.limit.ldexp(1), m.trace.iterations};
}

Real log_salamin(const Real& x) { return log_salamin_traced(x).value; }

bool sasaki_kanada_truncated(const Real& x) {
  return x > Real::power_of_two(truncation_exponent(x.precision()),
                                x.precision());
}

LogResult log_sasaki_kanada_traced(const Real& x) {
  if (!(x > 1)) throw DomainError("log_sasaki_kanada requires x > 1");
  const Precision& p = x.precision();
  const Real q = reciprocal(x);
  const auto [t2, t3] = theta_pair_q4(q, sasaki_kanada_truncated(x));
  const AgmResult m = agm(square(t2), square(t3));
  return LogResult{pi_constant(p).ldexp(-2) / m.limit, m.trace.iterations};
}

Real log_sasaki_kanada(const Real& x) {
  return log_sasaki_kanada_traced(x).value;
}

Real log_taylor(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log requires x > 0");
  const Precision& p = x.precision();
  const Real w = (x - 1) / (x + 1);
  if (w.is_zero()) return Real(p);
  const Real w2 = square(w);
  const Real threshold = w.abs().ldexp(-x.working_bits());
  Real sum = w;
  Real power = w;
  for (long k = 1;; ++k) {
    power *= w2;
    const Real term = power / (2 * k + 1);
    if (term.abs() < threshold) break;
    sum += term;
  }
  return sum.ldexp(1);
}

Real log(const Real& x, LogMethod method) {
  if (x.sign() <= 0) throw DomainError("log requires x > 0");
  if (x == 1) return Real(x.precision());
  const Precision& p = x.precision();
  switch (method) {
    case LogMethod::taylor_near_one:
      return log_taylor(x);
    case LogMethod::salamin:
      // (4/x)^2 below 2^-wb
      return log_reduced(x, (p.working_bits() + 1) / 2 + 3,
                         &log_salamin_traced);
    case LogMethod::automatic:
      if (near_one(x)) return log_taylor(x);
      [[fallthrough]];
    case LogMethod::sasaki_kanada:
      return log_reduced(x, truncation_exponent(p),
                         &log_sasaki_kanada_traced);
  }
  throw std::invalid_argument("unknown log method");
}

Real log2_constant(const Precision& p) {
  static detail::ConstantCache cache;
  return cache.get(p, [](const Precision& q) {
    const long m = truncation_exponent(q) + 1;
    return log_sasaki_kanada(Real::power_of_two(m, q)) / m;
  });
}

// --- exp ------------------------------------------------------------------

Real exp(const Real& x) {
  const Precision& p = x.precision();
  if (x.is_zero()) return Real(1, p);
  if (x.abs() > Real::power_of_two(20, p)) {
    throw RangeError("exp requires |x| <= 2^20");
  }

  // Seed 2^k e^r with x = k log 2 + r, good to about 30 bits.
  const double xd = x.to_double();
  const double k = std::nearbyint(xd / std::numbers::ln2);
  const double r = xd - k * std::numbers::ln2;
  // Top-precision constants first, so every Newton level reuses them.
  pi_constant(p);
  log2_constant(p);
  std::vector<long> levels;
  for (long b = p.working_bits(); b > 40; b = b / 2 + 8) levels.push_back(b);
  std::reverse(levels.begin(), levels.end());

  const Precision seed_precision{0, 64, 0};
  Real y = Real::from_double(std::exp(r), seed_precision)
               .ldexp(static_cast<long>(k));
  for (size_t i = 0; i < levels.size(); ++i) {
    const bool last = i + 1 == levels.size();
    const Precision level = last ? p : Precision{0, levels[i], 16};
    const Real yl = y.with_precision(level);
    y = yl + yl * (x.with_precision(level) - log(yl));
  }
  return y.with_precision(p);
}

// --- complex --------------------------------------------------------------

Complex gm_complex(const Complex& a, const Complex& b) { return sqrt(a * b); }

ComplexAgmResult agm_complex_traced(const Complex& a0, const Complex& b0) {
  if (a0.re().sign() <= 0 || b0.re().sign() <= 0) {
    throw DomainError("agm_complex requires Re a0 > 0 and Re b0 > 0");
  }
  ComplexAgmResult result{a0, {a0}, {b0}, 0};
  const long wb = a0.precision().working_bits();
  const int cap = agm_iteration_cap(wb);
  Real previous_gap(a0.precision());
  while (result.iterations < cap) {
    const Complex& a = result.a.back();
    const Complex& b = result.b.back();
    const Real gap = (a - b).norm();
    if (gap <= a.norm().ldexp(-2 * wb)) break;
    if (result.iterations > 0 && gap >= previous_gap) break;
    previous_gap = gap;
    Complex next_a = (a + b).ldexp(-1);
    Complex next_b = gm_complex(a, b);
    if (next_a.re().sign() <= 0 || next_b.re().sign() <= 0) {
      throw PrecisionError("complex AGM iterate left the right half-plane");
    }
    result.a.push_back(std::move(next_a));
    result.b.push_back(std::move(next_b));
    ++result.iterations;
  }
  result.limit = result.a.back();
  return result;
}

Complex agm_complex(const Complex& a0, const Complex& b0) {
  return agm_complex_traced(a0, b0).limit;
}

Complex log_complex(const Complex& z) {
  Real arg = complex_arg(z);
  return Complex(log(z.norm()).ldexp(-1), std::move(arg));
}

Real arctan(const Real& x) {
  const Precision& p = x.precision();
  if (x.is_zero()) return Real(p);
  if (x.sign() < 0) return -arctan(-x);
  if (x > 1) return pi_constant(p).ldexp(-1) - arctan(reciprocal(x));
  return complex_arg(Complex(Real(1, p), x));
}

Real arccos(const Real& x) {
  const Precision& p = x.precision();
  if (x.abs() > 1) throw DomainError("arccos requires -1 <= x <= 1");
  if (x.is_zero()) return pi_constant(p).ldexp(-1);
  if (x.sign() < 0) return pi_constant(p) - arccos(-x);
  if (x == 1) return Real(p);
  return arctan(sqrt((1 - x) * (1 + x)) / x);
}

}  // namespace agmpi
