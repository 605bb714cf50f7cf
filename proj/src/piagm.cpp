#include "agmpi/piagm.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "agmpi/elemfn.hpp"
#include "constant_cache.hpp"

namespace agmpi {

namespace {

void require_iterations(int n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
}

Real max_abs(const Real& current, const Real& candidate) {
  return std::max(current, candidate.abs());
}

// q^(2^n) by n squarings.
Real repeated_square(Real q, int n) {
  for (int i = 0; i < n; ++i) q = square(q);
  return q;
}

}  // namespace

// --- algorithms -----------------------------------------------------------

GlRun gl_run(int n_max, const Precision& p, OutputMode mode) {
  require_iterations(n_max);
  GlRun run;
  GlState& st = run.state;
  st.a.emplace_back(1, p);
  st.b.push_back(inv_sqrt(Real(2, p)));
  st.s.push_back(Real(1, p).ldexp(-2));
  for (int n = 0; n < n_max; ++n) {
    const Real& a = st.a[n];
    const Real& b = st.b[n];
    const Real& s = st.s[n];
    Real next_a = (a + b).ldexp(-1);
    st.c.push_back(a - next_a);
    if (s.sign() <= 0) {
      throw PrecisionError("s_n <= 0: working precision exhausted");
    }
    if (mode == OutputMode::all || n == n_max - 1) {
      const Real inv_s = reciprocal(s);
      PiIterate out;
      out.n = n;
      out.lower = square(next_a) * inv_s;
      out.upper = square(a) * inv_s;
      run.outputs.push_back(std::move(out));
    }
    if (n < n_max - 1) {
      st.b.push_back(sqrt(a * b));
      st.s.push_back(s - square(st.c[n]).ldexp(n));
    }
    st.a.push_back(std::move(next_a));
  }
  return run;
}

std::vector<PiIterate> gl_iterate(int n_max, const Precision& p) {
  return gl_run(n_max, p).outputs;
}

Bb1Run bb1_run(int n_max, const Precision& p) {
  require_iterations(n_max);
  Bb1Run run;
  run.x.push_back(sqrt(Real(2, p)));
  {
    PiIterate out;
    out.n = 0;
    out.lower = run.x[0];
    out.upper = run.x[0] + 2;
    run.outputs.push_back(std::move(out));
  }
  if (n_max == 1) return run;

  // x^(1/2) and x^(-1/2) from one inverse square root.
  auto roots = [](const Real& x) {
    Real inv = inv_sqrt(x);
    Real root = x * inv;
    return std::make_pair(std::move(root), std::move(inv));
  };
  {
    auto [root, inv] = roots(run.x[0]);
    run.y.push_back(root);
    run.x.push_back((root + inv).ldexp(-1));
  }
  for (int n = 1; n < n_max; ++n) {
    const Real& x = run.x[n];
    const Real& y = run.y[n - 1];
    const Real& prev_upper = *run.outputs.back().upper;
    PiIterate out;
    out.n = n;
    out.lower = prev_upper.ldexp(1) / (y + 1);
    out.upper = (*out.lower * (x + 1)).ldexp(-1);
    run.outputs.push_back(std::move(out));
    if (n < n_max - 1) {
      auto [root, inv] = roots(x);
      Real next_y = (y * root + inv) / (y + 1);
      run.x.push_back((root + inv).ldexp(-1));
      run.y.push_back(std::move(next_y));
    }
  }
  return run;
}

std::vector<PiIterate> bb1_iterate(int n_max, const Precision& p) {
  return bb1_run(n_max, p).outputs;
}

Bb2Run bb2_run(int n_max, const Precision& p) {
  require_iterations(n_max);
  Bb2Run run;
  const Real root2 = sqrt(Real(2, p));
  run.state.alpha.push_back(6 - root2 * 4);
  run.state.k.push_back(3 - root2 * 2);
  for (int n = 0; n < n_max; ++n) {
    const Real& alpha = run.state.alpha[n];
    if (alpha.sign() <= 0) {
      throw PrecisionError("alpha_n <= 0: working precision exhausted");
    }
    PiIterate out;
    out.n = n;
    out.point = reciprocal(alpha);
    run.outputs.push_back(std::move(out));
    if (n < n_max - 1) {
      const Real& k = run.state.k[n];
      const Real kp = sqrt(1 - square(k));
      Real next_k = (1 - kp) / (1 + kp);
      Real next_alpha =
          square(next_k + 1) * alpha - next_k.ldexp(n + 2);
      run.state.k.push_back(std::move(next_k));
      run.state.alpha.push_back(std::move(next_alpha));
    }
  }
  return run;
}

std::vector<PiIterate> bb2_iterate(int n_max, const Precision& p) {
  return bb2_run(n_max, p).outputs;
}

Bb4Run bb4_run(int n_max, const Precision& p) {
  require_iterations(n_max);
  Bb4Run run;
  Real y0 = sqrt(Real(2, p)) - 1;
  run.state.z.push_back(square(y0).ldexp(1));
  run.state.y.push_back(std::move(y0));
  for (int n = 0; n < n_max; ++n) {
    const Real& z = run.state.z[n];
    if (z.sign() <= 0) {
      throw PrecisionError("z_n <= 0: working precision exhausted");
    }
    PiIterate out;
    out.n = n;
    out.point = reciprocal(z);
    run.outputs.push_back(std::move(out));
    if (n < n_max - 1) {
      const Real& y = run.state.y[n];
      const Real r = fourth_root(1 - square(square(y)));
      Real next_y = (1 - r) / (1 + r);
      const Real one_plus = next_y + 1;
      Real next_z = z * square(square(one_plus)) -
                    (next_y * (one_plus + square(next_y))).ldexp(2L * n + 3);
      run.state.y.push_back(std::move(next_y));
      run.state.z.push_back(std::move(next_z));
    }
  }
  return run;
}

std::vector<PiIterate> bb4_iterate(int n_max, const Precision& p) {
  return bb4_run(n_max, p).outputs;
}

int quadratic_iterations(const Precision& p) {
  int n = 0;
  while ((1L << n) < p.bits) ++n;
  return std::max(n, 1);
}

int quartic_iterations(const Precision& p) {
  return std::max(1, (quadratic_iterations(p) + 1) / 2);
}

// --- constants ------------------------------------------------------------

Real pi_constant(const Precision& p) {
  static detail::ConstantCache cache;
  return cache.get(p, [](const Precision& q) {
    return *gl_run(quadratic_iterations(q), q, OutputMode::final_only)
                .outputs.back()
                .lower;
  });
}

Real exp_minus_pi(const Precision& p) {
  static detail::ConstantCache cache;
  return cache.get(p, [](const Precision& q) { return exp(-pi_constant(q)); });
}

// --- error bounds ---------------------------------------------------------

BoundPair gl_bounds(int n, const Precision& p) {
  if (n < 0) throw DomainError("gl_bounds requires n >= 0");
  const Real pi = pi_constant(p);
  const Real qn = repeated_square(exp_minus_pi(p), n);
  Real upper = pi * qn * 8;
  Real lower = (square(pi).ldexp(n + 4) - pi * 8) * square(qn);
  return BoundPair{std::move(upper), std::move(lower)};
}

BoundPair bb1_bounds(int n, const Precision& p) {
  if (n < 1) throw DomainError("bb1_bounds requires n >= 1");
  const Real pi = pi_constant(p);
  const Real qn = repeated_square(exp_minus_pi(p), n);
  Real upper = square(pi).ldexp(n + 4) * square(qn);
  Real lower = pi * qn * 4;
  return BoundPair{std::move(upper), std::move(lower)};
}

Real bb4_bound(int n, const Precision& p) {
  if (n < 0) throw DomainError("bb4_bound requires n >= 0");
  // exp(-2 pi 4^n) = q^(2^(2n+1))
  const Real pi = pi_constant(p);
  return square(pi).ldexp(2L * (n + 2)) *
         repeated_square(exp_minus_pi(p), 2 * n + 1);
}

// --- equivalences ---------------------------------------------------------

Bb2Gl1Report check_equiv_bb2_gl1(int n_max, const Precision& p) {
  require_iterations(n_max);
  const GlRun gl = gl_run(n_max, p);
  const Bb2Run bb2 = bb2_run(n_max, p);
  Bb2Gl1Report report{Real(p), Real(p), Real(p),
                      square(gl.state.a[1]) * bb2.state.alpha[0]};
  for (int n = 0; n < n_max; ++n) {
    const Real& a_next = gl.state.a[n + 1];
    report.max_deviation = max_abs(
        report.max_deviation, *bb2.outputs[n].point - *gl.outputs[n].lower);
    report.max_k_residual =
        max_abs(report.max_k_residual,
                bb2.state.k[n] - gl.state.c[n] / a_next);
    report.max_s_residual =
        max_abs(report.max_s_residual,
                gl.state.s[n] - square(a_next) * bb2.state.alpha[n]);
  }
  return report;
}

Bb4Gl1Report check_equiv_bb4_gl1_doubled(int n_max, const Precision& p) {
  require_iterations(n_max);
  const int doubled = 2 * n_max - 1;
  const GlRun gl = gl_run(doubled, p);
  const Bb2Run bb2 = bb2_run(doubled, p);
  const Bb4Run bb4 = bb4_run(n_max, p);
  Bb4Gl1Report report{Real(p), Real(p)};
  for (int n = 0; n < n_max; ++n) {
    const Real& pi_n = *bb4.outputs[n].point;
    report.max_deviation =
        max_abs(report.max_deviation, pi_n - *gl.outputs[2 * n].lower);
    report.max_bb2_deviation =
        max_abs(report.max_bb2_deviation, pi_n - *bb2.outputs[2 * n].point);
  }
  return report;
}

// --- minimal polynomial ---------------------------------------------------

const std::array<mpz_class, 9>& minpoly_coefficients() {
  static const std::array<mpz_class, 9> coefficients = {
      mpz_class("1"),
      mpz_class("-1635840576"),
      mpz_class("-343853312"),
      mpz_class("60576043008"),
      mpz_class("1865242664960"),
      mpz_class("-16779556159488"),
      mpz_class("37529045696512"),
      mpz_class("-29726424956928"),
      mpz_class("6181548457984"),
  };
  return coefficients;
}

int minpoly_sign_at(long x) {
  const auto& coefficients = minpoly_coefficients();
  mpz_class value = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    value = value * x + *it;
  }
  return sgn(value);
}

Real minpoly_eval(const Real& x) {
  const auto& coefficients = minpoly_coefficients();
  Real value(x.precision());
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    value = value * x + Real::from_mpz(*it, x.precision());
  }
  return value;
}

MinpolyReport minpoly_residual(const Precision& p) {
  const Real root2 = sqrt(Real(2, p));

  // a_3^2/s_2 in terms of t = 2^(-1/4).
  const Real t = fourth_root(Real(1, p).ldexp(-1));
  const Real t2 = square(t);
  const Real t3 = t2 * t;
  const Real numerator =
      square(t2 + t * 2 + 1 + sqrt(t3 * 2 + t * 2).ldexp(1));
  const Real x_gl = numerator / ((t3 * 8 - t2 * 4 + t * 8 - 5) * 4);

  // pi_1 in terms of y_1.
  const Real r = fourth_root(root2 * 12 - 16);
  const Real y1 = (1 - r) / (1 + r);
  const Real y1_sq = square(y1);
  const Real x_bb4 = reciprocal((6 - root2 * 4) * square(square(y1 + 1)) -
                                y1 * 8 - y1_sq * 8 - y1_sq * y1 * 8);

  const GlRun gl = gl_run(3, p);
  const Bb4Run bb4 = bb4_run(2, p);

  MinpolyReport report{
      minpoly_eval(x_gl),
      minpoly_eval(x_bb4),
      (x_gl - x_bb4).abs(),
      (x_gl - *gl.outputs[2].lower).abs(),
      (x_bb4 - *bb4.outputs[1].point).abs(),
  };
  report.root_in_0_1 = minpoly_sign_at(0) * minpoly_sign_at(1) < 0;
  report.root_in_3_4 = minpoly_sign_at(3) * minpoly_sign_at(4) < 0;
  return report;
}

// --- convergence analysis -------------------------------------------------

double empirical_order(std::span<const Real> errors) {
  if (errors.size() < 3) {
    throw DomainError("empirical_order needs at least three errors");
  }
  for (size_t i = 0; i < errors.size(); ++i) {
    if (errors[i].sign() <= 0) {
      throw DomainError("empirical_order needs positive errors");
    }
    if (i > 0 && !(errors[i] < errors[i - 1])) {
      throw DomainError("empirical_order needs strictly decreasing errors");
    }
  }
  const size_t last = errors.size() - 1;
  return errors[last].log_abs() / errors[last - 1].log_abs();
}

double efficiency_index(double order, double work) {
  if (!(order > 1.0) || !(work > 0.0)) {
    throw DomainError("efficiency_index requires order > 1 and work > 0");
  }
  return std::log(order) / work;
}

}  // namespace agmpi
