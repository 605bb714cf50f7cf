#pragma once

// Jacobi theta functions of one variable (real nome) and the identities that
// tie them to the AGM.

#include "agmpi/mpreal.hpp"

namespace agmpi {

struct ThetaValue {
  Real value;
  Real q;
  /// Number of non-constant series terms summed.
  int terms_used = 0;
};

// Series are truncated once the next term drops below 2^-working_bits
// relative to the leading term. All require 0 <= q < 1.
ThetaValue theta2_series(const Real& q);
ThetaValue theta3_series(const Real& q);
ThetaValue theta4_series(const Real& q);

Real theta2(const Real& q);
Real theta3(const Real& q);
Real theta4(const Real& q);

struct JacobiResiduals {
  Real r1;  // theta3^2(q) - theta2^2(q^2) - theta3^2(q^2)
  Real r2;  // theta3^4(q) - theta2^4(q) - theta4^4(q)
};
JacobiResiduals jacobi_residuals(const Real& q);

/// Runs n AGM steps from (1, theta4^2(q)/theta3^2(q)) and returns the largest
/// deviation of a_m, b_m, c_m (m <= n) from their theta-quotient forms.
Real agm_theta_check(const Real& q, int n);

}  // namespace agmpi
