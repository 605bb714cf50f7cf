#pragma once

// Real arithmetic-geometric mean, complete elliptic integrals and the nome.

#include <vector>

#include "agmpi/mpreal.hpp"

namespace agmpi {

/// Iterates of one AGM run. `a` and `b` hold a_0..a_n and b_0..b_n;
/// `c[i]` holds c_{i+1} = a_i - a_{i+1} (c_0 is never defined).
struct AgmTrace {
  std::vector<Real> a;
  std::vector<Real> b;
  std::vector<Real> c;
  int iterations = 0;
};

struct AgmResult {
  Real limit;
  AgmTrace trace;
};

/// 3 * ceil(log2(working_bits)).
int agm_iteration_cap(long working_bits);

/// Iterates until |a_n - b_n| <= 2^-working_bits * a_n (or the iteration cap)
/// and returns a_n as the limit.
AgmResult agm(const Real& a0, const Real& b0);

/// Exactly `steps` AGM iterations, no stopping rule.
AgmTrace agm_steps(const Real& a0, const Real& b0, int steps);

/// K(k) = pi / (2 AGM(1, sqrt(1 - k^2))), 0 < k < 1.
Real elliptic_k(const Real& k);

/// E(k) = K(k) (1 - k^2/2 - sum_{n>=0} 2^n (a_n - a_{n+1})^2).
Real elliptic_e(const Real& k);

struct EllipticPair {
  Real k;
  Real e;
};
/// K(k) and E(k) from a single AGM run.
EllipticPair elliptic_ke(const Real& k);

/// E K' + E' K - K K' - pi/2; zero up to rounding.
Real legendre_residual(const Real& k);

/// q = exp(-pi K'(k) / K(k)).
Real nome(const Real& k);

/// Partial sum of F(1/2, 1/2; 1; z) with `terms` terms. Test oracle for K.
Real hyper_f_half(const Real& z, int terms);

}  // namespace agmpi
