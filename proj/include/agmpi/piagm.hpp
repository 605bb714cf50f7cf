#pragma once

// AGM-based algorithms for pi (Gauss-Legendre, Borwein-Borwein quadratic and
// quartic), their sharp error bounds, and the equivalence checks between
// them.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "agmpi/mpreal.hpp"

namespace agmpi {

/// One emitted approximation. GL and BB1 fill lower/upper, BB2 and BB4 fill
/// point.
struct PiIterate {
  int n = 0;
  std::optional<Real> lower;
  std::optional<Real> upper;
  std::optional<Real> point;
};

enum class OutputMode {
  all,         // every iteration emits its output
  final_only,  // skip the divisions of all but the last output
};

/// Gauss-Legendre variables: a_0.., b_0.., c[i] = c_{i+1}, s_0...
struct GlState {
  std::vector<Real> a;
  std::vector<Real> b;
  std::vector<Real> c;
  std::vector<Real> s;
};

struct GlRun {
  GlState state;
  std::vector<PiIterate> outputs;
};

struct Bb1Run {
  std::vector<Real> x;  // x_0..
  std::vector<Real> y;  // y[i] = y_{i+1}
  std::vector<PiIterate> outputs;
};

struct Bb2State {
  std::vector<Real> k;
  std::vector<Real> alpha;
};

struct Bb2Run {
  Bb2State state;
  std::vector<PiIterate> outputs;
};

struct Bb4State {
  std::vector<Real> y;
  std::vector<Real> z;
};

struct Bb4Run {
  Bb4State state;
  std::vector<PiIterate> outputs;
};

// Every *_iterate emits n_max outputs (n = 0..n_max-1) and requires
// n_max >= 1.
GlRun gl_run(int n_max, const Precision& p, OutputMode mode = OutputMode::all);
std::vector<PiIterate> gl_iterate(int n_max, const Precision& p);
Bb1Run bb1_run(int n_max, const Precision& p);
std::vector<PiIterate> bb1_iterate(int n_max, const Precision& p);
Bb2Run bb2_run(int n_max, const Precision& p);
std::vector<PiIterate> bb2_iterate(int n_max, const Precision& p);
Bb4Run bb4_run(int n_max, const Precision& p);
std::vector<PiIterate> bb4_iterate(int n_max, const Precision& p);

/// ceil(log2(bits)): enough GL/BB1/BB2 iterations for `p`.
int quadratic_iterations(const Precision& p);
/// Half of quadratic_iterations, rounded up.
int quartic_iterations(const Precision& p);

/// pi at working precision, computed by Gauss-Legendre and cached per
/// precision. Safe to call concurrently.
Real pi_constant(const Precision& p);
/// e^-pi, cached like pi_constant.
Real exp_minus_pi(const Precision& p);

struct BoundPair {
  Real upper;  // bound on (upper approximation - pi)
  Real lower;  // bound on (pi - lower approximation)
};

/// U(n) = 8 pi q^(2^n), L(n) = (2^(n+4) pi^2 - 8 pi) q^(2^(n+1)), q = e^-pi.
BoundPair gl_bounds(int n, const Precision& p);
/// U(n) = 2^(n+4) pi^2 q^(2^(n+1)), L(n) = 4 pi q^(2^n); n >= 1.
BoundPair bb1_bounds(int n, const Precision& p);
/// pi^2 4^(n+2) exp(-2 pi 4^n).
Real bb4_bound(int n, const Precision& p);

struct Bb2Gl1Report {
  Real max_deviation;   // max |1/alpha_n - a_{n+1}^2/s_n|
  Real max_k_residual;  // max |k_n - c_{n+1}/a_{n+1}|
  Real max_s_residual;  // max |s_n - a_{n+1}^2 alpha_n|
  Real beta0;           // a_1^2 alpha_0, equal to s_0 = 1/4
};
Bb2Gl1Report check_equiv_bb2_gl1(int n_max, const Precision& p);

struct Bb4Gl1Report {
  Real max_deviation;      // max |pi_n - a_{2n+1}^2/s_{2n}|
  Real max_bb2_deviation;  // max |pi_n - pihat_{2n}|
};
Bb4Gl1Report check_equiv_bb4_gl1_doubled(int n_max, const Precision& p);

/// Coefficients of P(x), lowest degree first.
const std::array<mpz_class, 9>& minpoly_coefficients();
/// Exact sign of P at an integer point.
int minpoly_sign_at(long x);
Real minpoly_eval(const Real& x);

struct MinpolyReport {
  Real at_gl;   // P(a_3^2/s_2), closed form in t = 2^(-1/4)
  Real at_bb4;  // P(pi_1), closed form in y_1
  Real gap;     // |a_3^2/s_2 - pi_1|
  Real gl_closed_form_deviation;   // closed form vs. the GL iterate
  Real bb4_closed_form_deviation;  // closed form vs. the BB4 iterate
  bool root_in_0_1 = false;  // sign change of P on [0, 1]
  bool root_in_3_4 = false;  // sign change of P on [3, 4]
};
MinpolyReport minpoly_residual(const Precision& p);

/// Last value of log|e_{n+1}| / log|e_n|. Needs at least three positive,
/// strictly decreasing errors.
double empirical_order(std::span<const Real> errors);

/// Ostrowski's efficiency index log(order) / work.
double efficiency_index(double order, double work);

}  // namespace agmpi
