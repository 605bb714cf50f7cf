#include <gtest/gtest.h>

#include <cmath>

#include "agmpi/agm.hpp"
#include "agmpi/piagm.hpp"
#include "agmpi/theta.hpp"
#include "support.hpp"

namespace agmpi {
namespace {

using testing::for_all;
using testing::Gen;

const Precision P50 = Precision::from_digits(50);
const Precision P100 = Precision::from_digits(100);

// Sums straight from the definitions with explicit powers q^(n^2).
Real theta3_naive(const Real& q, int terms) {
  Real sum(1, q.precision());
  for (unsigned long n = 1; n <= static_cast<unsigned long>(terms); ++n) {
    sum += pow(q, n * n).ldexp(1);
  }
  return sum;
}

Real theta4_naive(const Real& q, int terms) {
  Real sum(1, q.precision());
  for (unsigned long n = 1; n <= static_cast<unsigned long>(terms); ++n) {
    const Real t = pow(q, n * n).ldexp(1);
    sum = n % 2 ? sum - t : sum + t;
  }
  return sum;
}

// theta2(q) = 2 sum q^((n+1/2)^2) = 2 q^(1/4) sum q^(n(n+1))
Real theta2_naive(const Real& q, int terms) {
  Real sum(q.precision());
  for (unsigned long n = 0; n <= static_cast<unsigned long>(terms); ++n) {
    sum += pow(q, n * (n + 1));
  }
  return sum.ldexp(1) * fourth_root(q);
}

Real exp_minus_pi_oracle(const Precision& p) {
  Real x = -testing::mpfr_pi(p);
  mpfr_exp(x.get_mutable(), x.get(), MPFR_RNDN);
  return x;
}

TEST(Theta, ZeroNome) {
  EXPECT_EQ(theta3(Real(P50)), 1);
  EXPECT_EQ(theta2(Real(P50)), 0);
  EXPECT_EQ(theta4(Real(P50)), 1);
}

TEST(Theta, DomainErrors) {
  EXPECT_THROW(theta3(Real(1, P50)), DomainError);
  EXPECT_THROW(theta2(Real(-1, P50)), DomainError);
  EXPECT_THROW(theta4(from_decimal("1.5", P50)), DomainError);
  EXPECT_THROW(agm_theta_check(Real(P50), 3), DomainError);
}

TEST(Theta, Theta3SquaredIsInverseGaussConstant) {
  const Real q = exp_minus_pi_oracle(P50);
  const Real a_inf = agm(Real(1, P50), inv_sqrt(Real(2, P50))).limit;
  EXPECT_TRUE(testing::agree_to(square(theta3(q)), reciprocal(a_inf), 55));
}

TEST(Theta, MatchesDefinitionProperty) {
  for_all(30, 31, [](Gen& g, int) {
    const Real q = g.real_in(0.001, 0.6, P50);
    EXPECT_TRUE(testing::agree_to(theta3(q), theta3_naive(q, 40), 55));
    EXPECT_TRUE(testing::agree_to(theta4(q), theta4_naive(q, 40), 55));
    EXPECT_TRUE(testing::agree_to(theta2(q), theta2_naive(q, 40), 55));
  });
}

TEST(Theta, SeriesVariantsReportTerms) {
  const Real q = from_decimal("0.3", P50);
  const ThetaValue t = theta3_series(q);
  EXPECT_EQ(t.value, theta3(q));
  EXPECT_EQ(t.q, q);
  EXPECT_GT(t.terms_used, 0);
  EXPECT_EQ(theta2_series(q).value, theta2(q));
  EXPECT_EQ(theta4_series(q).value, theta4(q));
}

TEST(Theta, TruncationIndexGrowth) {
  // q^(n^2) < 2^-wb needs n ~ sqrt(wb / log2(1/q))
  for (const char* qs : {"0.001", "0.04321", "0.3", "0.7", "0.9"}) {
    for (const Precision& p : {P50, P100, Precision::from_digits(1000)}) {
      const Real q = from_decimal(qs, p);
      const double estimate =
          std::sqrt(p.working_bits() / -std::log2(q.to_double()));
      for (const ThetaValue& t :
           {theta2_series(q), theta3_series(q), theta4_series(q)}) {
        EXPECT_LE(t.terms_used, 2 * estimate + 2) << qs;
        EXPECT_GE(t.terms_used, estimate / 2 - 1) << qs;
      }
    }
  }
}

TEST(Jacobi, ZeroNome) {
  const JacobiResiduals r = jacobi_residuals(Real(P50));
  EXPECT_EQ(r.r1, 0);
  EXPECT_EQ(r.r2, 0);
}

TEST(Jacobi, Examples) {
  const Real tol = Real::power_of_two(6 - P100.bits, P100);
  for (const Real& q : {exp_minus_pi_oracle(P100), from_decimal("0.5", P100)}) {
    const JacobiResiduals r = jacobi_residuals(q);
    EXPECT_LE(r.r1.abs(), tol);
    EXPECT_LE(r.r2.abs(), tol);
  }
}

TEST(Jacobi, RandomNomeProperty) {
  const Real tol = Real::power_of_two(6 - P100.bits, P100);
  for_all(50, 32, [&](Gen& g, int) {
    const JacobiResiduals r = jacobi_residuals(g.real_in(0, 0.9, P100));
    EXPECT_LE(r.r1.abs(), tol);
    EXPECT_LE(r.r2.abs(), tol);
  });
}

TEST(AgmTheta, NoStepsIsExact) {
  const Real q = from_decimal("0.3", P100);
  EXPECT_LE(agm_theta_check(q, 0), Real(1, P100).ulp() * 4);
}

TEST(AgmTheta, Parameterisation) {
  const Real tol = Real::power_of_two(10 - P100.bits, P100);
  EXPECT_LE(agm_theta_check(exp_minus_pi_oracle(P100), 5), tol);
  EXPECT_LE(agm_theta_check(from_decimal("0.3", P100), 5), tol);
  for (const char* q : {"0.1", "0.5"}) {
    for (int n = 1; n <= 8; ++n) {
      EXPECT_LE(agm_theta_check(from_decimal(q, P100), n), tol) << q << " " << n;
    }
  }
  for (int n = 1; n <= 8; ++n) {
    EXPECT_LE(agm_theta_check(exp_minus_pi_oracle(P100), n), tol) << n;
  }
}

}  // namespace
}  // namespace agmpi
