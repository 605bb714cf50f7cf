#include "agmpi/agm.hpp"

#include "agmpi/elemfn.hpp"
#include "agmpi/piagm.hpp"

namespace agmpi {

namespace {

void require_modulus(const Real& k, const char* what) {
  if (k.sign() <= 0 || !(k < 1)) {
    throw DomainError(std::string(what) + " requires 0 < k < 1");
  }
}

Real complementary(const Real& k) { return sqrt(1 - square(k)); }

}  // namespace

int agm_iteration_cap(long working_bits) {
  int log2_bits = 0;
  while ((1L << log2_bits) < working_bits) ++log2_bits;
  return 3 * log2_bits;
}

AgmResult agm(const Real& a0, const Real& b0) {
  if (a0.sign() <= 0 || b0.sign() <= 0) {
    throw DomainError("agm requires positive arguments");
  }
  AgmTrace trace;
  trace.a.push_back(a0);
  trace.b.push_back(b0.with_precision(a0.precision()));
  const int cap = agm_iteration_cap(a0.working_bits());
  const long wb = a0.working_bits();

  Real previous_gap = (trace.a.back() - trace.b.back()).abs();
  while (trace.iterations < cap) {
    const Real& a = trace.a.back();
    const Real& b = trace.b.back();
    const Real gap = (a - b).abs();
    if (gap <= a.ldexp(-wb)) break;
    // Rounding can stall the gap a few ulps above the threshold.
    if (trace.iterations > 0 && gap >= previous_gap) break;
    previous_gap = gap;

    Real next_a = (a + b).ldexp(-1);
    Real next_b = sqrt(a * b);
    trace.c.push_back(a - next_a);
    trace.a.push_back(std::move(next_a));
    trace.b.push_back(std::move(next_b));
    ++trace.iterations;
  }
  Real limit = trace.a.back();
  return AgmResult{std::move(limit), std::move(trace)};
}

AgmTrace agm_steps(const Real& a0, const Real& b0, int steps) {
  if (a0.sign() <= 0 || b0.sign() <= 0) {
    throw DomainError("agm requires positive arguments");
  }
  AgmTrace trace;
  trace.a.push_back(a0);
  trace.b.push_back(b0.with_precision(a0.precision()));
  for (int i = 0; i < steps; ++i) {
    const Real& a = trace.a.back();
    const Real& b = trace.b.back();
    Real next_a = (a + b).ldexp(-1);
    Real next_b = sqrt(a * b);
    trace.c.push_back(a - next_a);
    trace.a.push_back(std::move(next_a));
    trace.b.push_back(std::move(next_b));
    ++trace.iterations;
  }
  return trace;
}

Real elliptic_k(const Real& k) {
  require_modulus(k, "elliptic_k");
  const AgmResult m = agm(Real(1, k.precision()), complementary(k));
  return pi_constant(k.precision()) / m.limit.ldexp(1);
}

EllipticPair elliptic_ke(const Real& k) {
  require_modulus(k, "elliptic_e");
  const Precision& p = k.precision();
  const AgmResult m = agm(Real(1, p), complementary(k));
  Real big_k = pi_constant(p) / m.limit.ldexp(1);

  // sum_{n>=0} 2^n c_{n+1}^2; terms shrink quadratically.
  Real sum(p);
  const Real threshold = Real::power_of_two(-k.working_bits(), p);
  for (size_t n = 0; n < m.trace.c.size(); ++n) {
    Real term = square(m.trace.c[n]).ldexp(static_cast<long>(n));
    if (term < threshold) break;
    sum += term;
  }
  Real factor = 1 - square(k).ldexp(-1) - sum;
  Real big_e = big_k * factor;
  return EllipticPair{std::move(big_k), std::move(big_e)};
}

Real elliptic_e(const Real& k) { return elliptic_ke(k).e; }

Real legendre_residual(const Real& k) {
  require_modulus(k, "legendre_residual");
  const EllipticPair at_k = elliptic_ke(k);
  const EllipticPair at_kp = elliptic_ke(complementary(k));
  const Real half_pi = pi_constant(k.precision()).ldexp(-1);
  return at_k.e * at_kp.k + at_kp.e * at_k.k - at_k.k * at_kp.k - half_pi;
}

Real nome(const Real& k) {
  require_modulus(k, "nome");
  const Precision& p = k.precision();
  // K'/K = AGM(1, k') / AGM(1, k); the factors of pi cancel.
  const Real m_k = agm(Real(1, p), k).limit;
  const Real m_kp = agm(Real(1, p), complementary(k)).limit;
  return exp(-(pi_constant(p) * m_kp / m_k));
}

Real hyper_f_half(const Real& z, int terms) {
  if (!(z.abs() < 1)) throw DomainError("hyper_f_half requires |z| < 1");
  const Precision& p = z.precision();
  Real sum(p);
  Real term(1, p);
  for (int n = 0; n < terms; ++n) {
    sum += term;
    // t_{n+1} / t_n = ((2n+1) / (2n+2))^2 z
    term = term * z * ((2L * n + 1) * (2L * n + 1)) /
           (4L * (n + 1) * (n + 1));
  }
  return sum;
}

}  // namespace agmpi
