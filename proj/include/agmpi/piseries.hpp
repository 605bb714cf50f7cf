#pragma once

// Linearly convergent series for pi: Madhava, Ramanujan's 99^4 series and
// the Chudnovsky series with binary splitting.

#include <gmpxx.h>

#include "agmpi/mpreal.hpp"

namespace agmpi {

/// 2 sqrt(3) sum_{j<terms} (-1)^j / ((2j+1) 3^j); terms >= 1.
Real madhava_pi(int terms, const Precision& p);

/// Inverse of 2^(3/2) sum_{n<terms} (1/4)_n (1/2)_n (3/4)_n / (n!)^3
/// (1103 + 26390 n) / 99^(4n+2); terms >= 1.
Real ramanujan_pi(int terms, const Precision& p);

/// ceil(digits/14) + 2.
int chudnovsky_terms(long digits);
/// Chudnovsky's series with chudnovsky_terms(digits) terms. With
/// `use_splitting` the rational part is summed exactly by binary splitting;
/// otherwise term by term in floating point.
Real chudnovsky_pi(long digits, const Precision& p, bool use_splitting = true);
/// Same with an explicit term count.
Real chudnovsky_pi_terms(int terms, const Precision& p,
                         bool use_splitting = true);

/// Binary-splitting node over the term range [lo, hi). For the empty range
/// P = Q = 1, T = 0.
struct SplitNode {
  mpz_class P;
  mpz_class Q;
  mpz_class T;
  long lo = 0;
  long hi = 0;

  friend bool operator==(const SplitNode&, const SplitNode&) = default;
};

/// Chudnovsky leaf: P = -(6n-5)(2n-1)(6n-1), Q = n^3 640320^3/24,
/// T = P (13591409 + 545140134 n); leaf 0 has P = Q = 1, T = 13591409.
SplitNode split_leaf(long n);
SplitNode split_empty(long at);
/// P = P_l P_r, Q = Q_l Q_r, T = T_l Q_r + P_l T_r. Throws
/// std::invalid_argument unless l.hi == r.lo.
SplitNode split_combine(const SplitNode& l, const SplitNode& r);
/// Balanced tree over [lo, hi).
SplitNode split_range(long lo, long hi);
/// T/Q as the exact sum of the scaled terms, using naive term-by-term
/// rational arithmetic. Test oracle for split_range.
mpq_class chudnovsky_rational_sum(long terms);

/// Decimal digits gained per term between n/2 and n terms, measured against
/// `reference`: (log10|e_(n/2)| - log10|e_n|) / (n - n/2).
enum class PiSeries { madhava, ramanujan, chudnovsky };
double digits_per_term(PiSeries series, int terms, const Real& reference);

}  // namespace agmpi
