#include "agmpi/theta.hpp"

#include <algorithm>

#include "agmpi/agm.hpp"

namespace agmpi {

namespace {

void require_nome(const Real& q) {
  if (q.sign() < 0 || !(q < 1)) throw DomainError("theta requires 0 <= q < 1");
}

// sum_{n>=0} q^(n(n+1)): consecutive exponents differ by 2(n+1).
ThetaValue theta2_core(const Real& q) {
  const Precision& p = q.precision();
  const Real threshold = Real::power_of_two(-q.working_bits(), p);
  const Real q2 = square(q);
  Real sum(1, p);
  Real step = q2;  // q^(2(n+1))
  Real term(1, p);
  int terms = 0;
  for (;;) {
    term *= step;
    if (term < threshold) break;
    sum += term;
    step *= q2;
    ++terms;
  }
  return ThetaValue{std::move(sum), q, terms};
}

}  // namespace

ThetaValue theta2_series(const Real& q) {
  require_nome(q);
  if (q.is_zero()) return ThetaValue{Real(q.precision()), q, 0};
  ThetaValue core = theta2_core(q);
  // theta2(q) = 2 q^(1/4) sum_{n>=0} q^(n(n+1))
  core.value = (core.value * fourth_root(q)).ldexp(1);
  return core;
}

ThetaValue theta3_series(const Real& q) {
  require_nome(q);
  const Precision& p = q.precision();
  const Real threshold = Real::power_of_two(-q.working_bits(), p);
  const Real q2 = square(q);
  Real sum(p);
  Real odd = q;   // q^(2n-1)
  Real term(1, p);  // q^(n^2)
  int terms = 0;
  while (!q.is_zero()) {
    term *= odd;
    if (term < threshold) break;
    sum += term;
    odd *= q2;
    ++terms;
  }
  return ThetaValue{1 + sum.ldexp(1), q, terms};
}

ThetaValue theta4_series(const Real& q) {
  require_nome(q);
  const Precision& p = q.precision();
  const Real threshold = Real::power_of_two(-q.working_bits(), p);
  const Real q2 = square(q);
  // Summed in pairs q^((2m-1)^2) - q^((2m)^2), each pair positive.
  Real pairs(p);
  Real odd = q;
  Real term(1, p);
  int terms = 0;
  while (!q.is_zero()) {
    term *= odd;
    if (term < threshold) break;
    odd *= q2;
    ++terms;
    Real next = term * odd;
    odd *= q2;
    if (next < threshold) {
      pairs += term;
      break;
    }
    pairs += term - next;
    term = std::move(next);
    ++terms;
  }
  return ThetaValue{1 - pairs.ldexp(1), q, terms};
}

Real theta2(const Real& q) { return theta2_series(q).value; }
Real theta3(const Real& q) { return theta3_series(q).value; }
Real theta4(const Real& q) { return theta4_series(q).value; }

JacobiResiduals jacobi_residuals(const Real& q) {
  require_nome(q);
  const Real q2 = square(q);
  const Real t2 = theta2(q);
  const Real t3 = theta3(q);
  const Real t4 = theta4(q);
  const Real t3_sq = square(t3);
  Real r1 = t3_sq - square(theta2(q2)) - square(theta3(q2));
  Real r2 = square(t3_sq) - square(square(t2)) - square(square(t4));
  return JacobiResiduals{std::move(r1), std::move(r2)};
}

Real agm_theta_check(const Real& q, int n) {
  if (q.sign() <= 0 || !(q < 1)) {
    throw DomainError("agm_theta_check requires 0 < q < 1");
  }
  const Precision& p = q.precision();
  const Real t3_sq = square(theta3(q));
  const Real inv_t3_sq = reciprocal(t3_sq);
  const AgmTrace trace =
      agm_steps(Real(1, p), square(theta4(q)) * inv_t3_sq, n);

  Real worst(p);
  Real qm = q;  // q^(2^m)
  for (int m = 0; m <= n; ++m) {
    const Real a_form = square(theta3(qm)) * inv_t3_sq;
    const Real b_form = square(theta4(qm)) * inv_t3_sq;
    worst = std::max(worst, (trace.a[m] - a_form).abs());
    worst = std::max(worst, (trace.b[m] - b_form).abs());
    if (m >= 1) {
      const Real c_form = square(theta2(qm)) * inv_t3_sq;
      worst = std::max(worst, (trace.c[m - 1] - c_form).abs());
    }
    qm = square(qm);
  }
  return worst;
}

}  // namespace agmpi
