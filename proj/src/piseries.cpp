#include "agmpi/piseries.hpp"

#include <cmath>
#include <stdexcept>

namespace agmpi {

namespace {

constexpr long kChudA = 13591409;
constexpr long kChudB = 545140134;
// 640320^3 / 24
const mpz_class kChudC3Over24("10939058860032000");

void require_terms(long terms) {
  if (terms < 1) throw DomainError("the series needs at least one term");
}

mpz_class chud_p(long n) {
  mpz_class p = 6 * n - 5;
  p *= 2 * n - 1;
  p *= 6 * n - 1;
  return -p;
}

mpz_class chud_q(long n) {
  mpz_class q = n;
  q *= n;
  q *= n;
  return q * kChudC3Over24;
}

mpz_class chud_weight(long n) { return mpz_class(kChudB) * n + kChudA; }

// 53360 sqrt(640320) / S.
Real chudnovsky_finish(const Real& inverse_sum) {
  const Precision& p = inverse_sum.precision();
  return sqrt(Real(640320, p)) * inverse_sum * 53360;
}

Real series_value(PiSeries series, int terms, const Precision& p) {
  switch (series) {
    case PiSeries::madhava:
      return madhava_pi(terms, p);
    case PiSeries::ramanujan:
      return ramanujan_pi(terms, p);
    case PiSeries::chudnovsky:
      return chudnovsky_pi_terms(terms, p);
  }
  throw std::invalid_argument("unknown series");
}

}  // namespace

Real madhava_pi(int terms, const Precision& p) {
  require_terms(terms);
  Real sum(p);
  Real power(1, p);  // 3^-j
  for (int j = 0; j < terms; ++j) {
    const Real term = power / (2L * j + 1);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    power = power / 3;
  }
  return (sqrt(Real(3, p)) * sum).ldexp(1);
}

Real ramanujan_pi(int terms, const Precision& p) {
  require_terms(terms);
  // c_n = (1/4)_n (1/2)_n (3/4)_n / (n!)^3 / 99^(4n), via
  // c_n / c_(n-1) = (4n-3)(2n-1)(4n-1) / (32 n^3 99^4).
  Real coefficient(1, p);
  Real sum(1103, p);
  for (long n = 1; n < terms; ++n) {
    coefficient = coefficient * ((4 * n - 3) * (2 * n - 1) * (4 * n - 1));
    coefficient = coefficient / (32 * n * n * n) / 96059601L;
    sum += coefficient * (1103 + 26390 * n);
  }
  // pi = 99^2 / (2 sqrt(2) sum)
  return reciprocal(sqrt(Real(2, p)) * sum.ldexp(1)) * 9801;
}

int chudnovsky_terms(long digits) {
  if (digits < 1) throw DomainError("digits must be at least 1");
  return static_cast<int>((digits + 13) / 14) + 2;
}

Real chudnovsky_pi(long digits, const Precision& p, bool use_splitting) {
  return chudnovsky_pi_terms(chudnovsky_terms(digits), p, use_splitting);
}

Real chudnovsky_pi_terms(int terms, const Precision& p, bool use_splitting) {
  require_terms(terms);
  if (use_splitting) {
    const SplitNode node = split_range(0, terms);
    return chudnovsky_finish(Real::from_mpz(node.Q, p) /
                             Real::from_mpz(node.T, p));
  }
  const Real c3_over_24 = Real::from_mpz(kChudC3Over24, p);
  Real term(1, p);
  Real sum(kChudA, p);
  for (long n = 1; n < terms; ++n) {
    term = term * ((6 * n - 5) * (2 * n - 1) * (6 * n - 1));
    term = -(term / (n * n * n) / c3_over_24);
    sum += term * Real::from_mpz(chud_weight(n), p);
  }
  return chudnovsky_finish(reciprocal(sum));
}

SplitNode split_leaf(long n) {
  if (n < 0) throw std::invalid_argument("split_leaf requires n >= 0");
  if (n == 0) return SplitNode{1, 1, kChudA, 0, 1};
  SplitNode leaf{chud_p(n), chud_q(n), 0, n, n + 1};
  leaf.T = leaf.P * chud_weight(n);
  return leaf;
}

SplitNode split_empty(long at) { return SplitNode{1, 1, 0, at, at}; }

SplitNode split_combine(const SplitNode& l, const SplitNode& r) {
  if (l.hi != r.lo) {
    throw std::invalid_argument("split_combine requires adjacent ranges");
  }
  SplitNode out;
  out.P = l.P * r.P;
  out.Q = l.Q * r.Q;
  out.T = l.T * r.Q + l.P * r.T;
  out.lo = l.lo;
  out.hi = r.hi;
  return out;
}

SplitNode split_range(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("split_range requires lo <= hi");
  if (hi == lo) return split_empty(lo);
  if (hi - lo == 1) return split_leaf(lo);
  const long mid = lo + (hi - lo) / 2;
  return split_combine(split_range(lo, mid), split_range(mid, hi));
}

mpq_class chudnovsky_rational_sum(long terms) {
  require_terms(terms);
  mpq_class ratio = 1;  // t_n / t_0
  mpq_class sum = kChudA;
  for (long n = 1; n < terms; ++n) {
    ratio *= mpq_class(chud_p(n), chud_q(n));
    ratio.canonicalize();
    sum += ratio * chud_weight(n);
  }
  return sum;
}

double digits_per_term(PiSeries series, int terms, const Real& reference) {
  if (terms < 2) throw DomainError("digits_per_term needs at least 2 terms");
  const Precision& p = reference.precision();
  const int half = terms / 2;
  const Real early = (series_value(series, half, p) - reference).abs();
  const Real late = (series_value(series, terms, p) - reference).abs();
  if (early.is_zero() || late.is_zero()) {
    throw PrecisionError("reference precision too low to measure the error");
  }
  return (early.log_abs() - late.log_abs()) / std::log(10.0) /
         (terms - half);
}

}  // namespace agmpi
