#include "agmpi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "agmpi/agm.hpp"
#include "agmpi/elemfn.hpp"
#include "agmpi/piagm.hpp"
#include "agmpi/theta.hpp"

namespace agmpi {

namespace {

constexpr std::uint64_t kSeed = 20260418;

class Collector {
 public:
  void compare(std::string name, const Real& residual, const Real& tolerance) {
    const Real r = residual.abs();
    report_.checks.push_back({std::move(name), to_scientific(r, 3),
                              "<= " + to_scientific(tolerance, 3),
                              r <= tolerance});
  }

  void flag(std::string name, std::string measured, std::string expected,
            bool ok) {
    report_.checks.push_back(
        {std::move(name), std::move(measured), std::move(expected), ok});
  }

  VerifyReport take() { return std::move(report_); }

 private:
  VerifyReport report_;
};

Real ten_to(long e, const Precision& p) {
  return from_decimal("1e" + std::to_string(e), p);
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

void equivalence_suite(Collector& out, const Precision& p) {
  const long d = p.decimal_digits;
  const Real tol = ten_to(-(d - 10), p);
  const Real ulps8 = Real::power_of_two(3 - p.working_bits(), p);

  const Bb2Gl1Report bb2 = check_equiv_bb2_gl1(9, p);
  out.compare("bb2 vs gl1: max |pihat_n - a_{n+1}^2/s_n|, n <= 8",
              bb2.max_deviation, tol);
  out.compare("bb2 vs gl1: max |k_n - c_{n+1}/a_{n+1}|", bb2.max_k_residual,
              ulps8);
  out.compare("bb2 vs gl1: max |s_n - a_{n+1}^2 alpha_n|", bb2.max_s_residual,
              tol);
  out.compare("bb2 vs gl1: a_1^2 alpha_0 - 1/4",
              bb2.beta0 - Real(1, p).ldexp(-2), ulps8);

  const Bb4Gl1Report bb4 = check_equiv_bb4_gl1_doubled(5, p);
  out.compare("bb4 vs gl1 doubled: max |pi_n - a_{2n+1}^2/s_{2n}|, n <= 4",
              bb4.max_deviation, tol);
  out.compare("bb4 vs bb2 doubled: max |pi_n - pihat_{2n}|",
              bb4.max_bb2_deviation, tol);
}

// Error/bound ratios as doubles. Only rows whose error is resolvable at this
// precision are included.
struct RatioRow {
  int n;
  double upper;
  double lower;
};

void bounds_suite(Collector& out, const Precision& p) {
  const Real pi = pi_constant(p);
  const Real resolvable = ten_to(-(p.decimal_digits - 20), p);
  auto ratio = [](const Real& error, const Real& bound) {
    return (error / bound).to_double();
  };

  {
    const auto its = gl_iterate(9, p);
    bool contained = true;
    double max_ratio = 0.0;
    double min_late_upper = 1.0;
    for (const PiIterate& it : its) {
      const Real upper = *it.upper - pi;
      const Real lower = pi - *it.lower;
      if (upper < resolvable || lower < resolvable) break;
      const BoundPair b = gl_bounds(it.n, p);
      const double ru = ratio(upper, b.upper);
      const double rl = ratio(lower, b.lower);
      contained = contained && upper.sign() > 0 && lower.sign() > 0;
      max_ratio = std::max({max_ratio, ru, rl});
      if (it.n >= 3) min_late_upper = std::min(min_late_upper, ru);
    }
    out.flag("gl: lower < pi < upper", contained ? "yes" : "no", "yes",
             contained);
    out.flag("gl: max error/bound ratio", fixed(max_ratio, 10), "<= 1",
             max_ratio <= 1.0);
    out.flag("gl: min upper ratio for n >= 3", fixed(min_late_upper, 10),
             ">= 0.999", min_late_upper >= 0.999);
  }

  {
    const auto its = bb1_iterate(9, p);
    bool monotone = true;
    double max_ratio = 0.0;
    for (size_t n = 1; n < its.size(); ++n) {
      const Real upper = *its[n].upper - pi;
      const Real lower = pi - *its[n].lower;
      if (upper < resolvable || lower < resolvable) break;
      const BoundPair b = bb1_bounds(static_cast<int>(n), p);
      max_ratio =
          std::max({max_ratio, ratio(upper, b.upper), ratio(lower, b.lower)});
      monotone = monotone && *its[n].upper < *its[n - 1].upper &&
                 *its[n].lower > *its[n - 1].lower;
    }
    out.flag("bb1: upper decreasing, lower increasing",
             monotone ? "yes" : "no", "yes", monotone);
    out.flag("bb1: max error/bound ratio", fixed(max_ratio, 10), "<= 1",
             max_ratio <= 1.0);
  }

  {
    const auto its = bb4_iterate(5, p);
    double max_ratio = 0.0;
    double min_late = 1.0;
    for (const PiIterate& it : its) {
      const Real error = pi - *it.point;
      if (error < resolvable) break;
      const double r = ratio(error, bb4_bound(it.n, p));
      max_ratio = std::max(max_ratio, r);
      if (it.n >= 2) min_late = std::min(min_late, r);
    }
    out.flag("bb4: max error/bound ratio", fixed(max_ratio, 10), "<= 1",
             max_ratio <= 1.0);
    out.flag("bb4: min ratio for n >= 2", fixed(min_late, 10), ">= 0.99",
             min_late >= 0.99);
  }
}

void legendre_suite(Collector& out, const Precision& p) {
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> k_dist(0.01, 0.99);
  Real worst(p);
  for (int i = 0; i < 100; ++i) {
    const Real k = Real::from_double(k_dist(rng), p);
    worst = std::max(worst, legendre_residual(k).abs());
  }
  const Real tol = Real::power_of_two(8 - p.bits, p);
  out.compare("legendre: max residual over 100 k in (0.01, 0.99)", worst, tol);
  for (const char* k : {"0.3", "0.9"}) {
    out.compare(std::string("legendre: residual at k = ") + k,
                legendre_residual(from_decimal(k, p)), tol);
  }
  out.compare("legendre: residual at k = 1/sqrt(2)",
              legendre_residual(inv_sqrt(Real(2, p))), tol);
}

void theta_suite(Collector& out, const Precision& p) {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_real_distribution<double> q_dist(0.0, 0.9);
  Real r1(p);
  Real r2(p);
  for (int i = 0; i < 50; ++i) {
    const Real q = Real::from_double(q_dist(rng), p);
    if (q.is_zero()) continue;
    const JacobiResiduals r = jacobi_residuals(q);
    r1 = std::max(r1, r.r1.abs());
    r2 = std::max(r2, r.r2.abs());
  }
  const Real tol = Real::power_of_two(6 - p.bits, p);
  out.compare("theta: max |theta3^2(q) - theta2^2(q^2) - theta3^2(q^2)|", r1,
              tol);
  out.compare("theta: max |theta3^4 - theta2^4 - theta4^4|", r2, tol);

  const Real agm_tol = Real::power_of_two(10 - p.bits, p);
  const std::pair<const char*, Real> nomes[] = {
      {"e^-pi", exp_minus_pi(p)},
      {"0.1", from_decimal("0.1", p)},
      {"0.5", from_decimal("0.5", p)},
  };
  for (const auto& [label, q] : nomes) {
    out.compare(std::string("theta: AGM parameterisation, q = ") + label +
                    ", n <= 8",
                agm_theta_check(q, 8), agm_tol);
  }
}

void minpoly_suite(Collector& out, const Precision& p) {
  const MinpolyReport r = minpoly_residual(p);
  const Real tol = ten_to(-(p.decimal_digits - 50), p);
  out.compare("minpoly: |P(a_3^2/s_2)|", r.at_gl, tol);
  out.compare("minpoly: |P(pi_1)|", r.at_bb4, tol);
  out.flag("minpoly: |a_3^2/s_2 - pi_1|", to_scientific(r.gap, 3), "< 1",
           r.gap < 1);
  const Real closed = ten_to(-(p.decimal_digits - 10), p);
  out.compare("minpoly: closed form vs gl iterate", r.gl_closed_form_deviation,
              closed);
  out.compare("minpoly: closed form vs bb4 iterate",
              r.bb4_closed_form_deviation, closed);
  out.flag("minpoly: sign change on [0, 1]", r.root_in_0_1 ? "yes" : "no",
           "yes", r.root_in_0_1);
  out.flag("minpoly: sign change on [3, 4]", r.root_in_3_4 ? "yes" : "no",
           "yes", r.root_in_3_4);
}

void roundtrip_suite(Collector& out, const Precision& p) {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_real_distribution<double> log_x(std::log(1e-3), std::log(1e3));
  Real worst(p);  // in ulps of x
  for (int i = 0; i < 100; ++i) {
    const Real x = Real::from_double(std::exp(log_x(rng)), p);
    const Real ulps = (exp(log(x)) - x).abs() / x.ulp();
    worst = std::max(worst, ulps);
  }
  out.compare("roundtrip: max |exp(log x) - x| in ulps, 100 x in (1e-3, 1e3)",
              worst, Real(8, p));

  const Real pi = pi_constant(p);
  const long d = p.decimal_digits;
  const Real back = from_decimal(to_decimal(pi, d), p);
  out.compare("roundtrip: from_decimal(to_decimal(pi))", back - pi,
              ten_to(-(d - 2), p));
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::equivalence, Suite::bounds, Suite::legendre,
                  Suite::theta, Suite::minpoly, Suite::roundtrip, Suite::all}) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::equivalence:
      return "equivalence";
    case Suite::bounds:
      return "bounds";
    case Suite::legendre:
      return "legendre";
    case Suite::theta:
      return "theta";
    case Suite::minpoly:
      return "minpoly";
    case Suite::roundtrip:
      return "roundtrip";
    case Suite::all:
      return "all";
  }
  return "";
}

VerifyReport run_suite(Suite suite, long digits) {
  if (digits < 30) throw DomainError("verify needs at least 30 digits");
  const Precision p = Precision::from_digits(digits);
  Collector out;
  auto want = [suite](Suite s) { return suite == Suite::all || suite == s; };
  if (want(Suite::equivalence)) equivalence_suite(out, p);
  if (want(Suite::bounds)) bounds_suite(out, p);
  if (want(Suite::legendre)) legendre_suite(out, p);
  if (want(Suite::theta)) theta_suite(out, p);
  if (want(Suite::minpoly)) minpoly_suite(out, p);
  if (want(Suite::roundtrip)) roundtrip_suite(out, p);
  return out.take();
}

}  // namespace agmpi
