#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "agmpi/agm.hpp"
#include "agmpi/elemfn.hpp"
#include "agmpi/piagm.hpp"
#include "agmpi/piseries.hpp"
#include "support.hpp"

namespace agmpi {
namespace {

using testing::fixed_to_real;
using testing::for_all;
using testing::Gen;

const Precision P30 = Precision::from_digits(30);
const Precision P100 = Precision::from_digits(100);
const Precision P200 = Precision::from_digits(200);

// MPFR's own elementary functions, independent of the AGM code paths.
using MpfrFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
Real mpfr_apply(MpfrFn f, const Real& x) {
  Real r(x.precision());
  f(r.get_mutable(), x.get(), MPFR_RNDN);
  return r;
}

Real rel_error(const Real& got, const Real& want) {
  return ((got - want) / want).abs();
}

TEST(LogSalamin, MillionAgreesWithSasakiKanada) {
  const Real x = from_decimal("1e6", P30);
  EXPECT_LE((log_salamin(x) - log_sasaki_kanada(x)).abs(),
            from_decimal("1e-10", P30));
}

TEST(LogSalamin, TwoToSixtyFour) {
  const Real x = Real::power_of_two(64, P100);
  EXPECT_LE(rel_error(log_salamin(x), log_sasaki_kanada(x)),
            Real::power_of_two(-120, P100));
}

TEST(LogSalamin, RequiresReducedArgument) {
  EXPECT_THROW(log_salamin(Real(15, P30)), DomainError);
  EXPECT_NO_THROW(log_salamin(Real(16, P30)));
}

TEST(LogSalamin, WithinEnvelopeOfExactMethod) {
  // relative error of the uncorrected formula is O((4/x)^2)
  for (const char* xs : {"1e6", "1e8", "18446744073709551616"}) {
    const Real x = from_decimal(xs, P100);
    const Real exact = log_sasaki_kanada(x);
    const Real envelope = square(Real(4, P100) / x) * exact * 4;
    EXPECT_LE((log_salamin(x) - exact).abs(), envelope) << xs;
  }
}

TEST(LogSasakiKanada, ExpPiGivesPi) {
  const Real pi = testing::mpfr_pi(P100);
  const Real x = mpfr_apply(mpfr_exp, pi);
  EXPECT_LE((log_sasaki_kanada(x) - pi).abs(), pi.ulp() * 64);
}

TEST(LogSasakiKanada, DomainError) {
  EXPECT_THROW(log_sasaki_kanada(Real(1, P30)), DomainError);
  EXPECT_THROW(log_sasaki_kanada(from_decimal("0.5", P30)), DomainError);
}

TEST(LogSasakiKanada, TruncationThreshold) {
  const long t = (P100.working_bits() + 35) / 36;
  EXPECT_FALSE(sasaki_kanada_truncated(Real::power_of_two(t, P100)));
  EXPECT_TRUE(sasaki_kanada_truncated(Real::power_of_two(t, P100) + 1));
}

TEST(LogSasakiKanada, TruncatedPathSavesAgmIterations) {
  // Above the threshold the AGM starts near 4q^2 = 2^(-wb/18) rather than
  // Salamin's 2^(-wb/2): log2(9) ~ 3.2 fewer halvings of the exponent.
  const Precision p = Precision::from_bits(10000);
  const long wb = p.working_bits();
  const LogResult sk =
      log_sasaki_kanada_traced(Real::power_of_two((wb + 35) / 36 + 1, p));
  const LogResult salamin =
      log_salamin_traced(Real::power_of_two((wb + 1) / 2 + 3, p));
  EXPECT_GE(salamin.agm_iterations - sk.agm_iterations, 3);
}

TEST(Log, IndependentSeriesOracles) {
  const long scale = 240;
  const Real ln2 = fixed_to_real(testing::log2_series(scale), scale, P200);
  const Real ln10 = fixed_to_real(testing::log10_series(scale), scale, P200);
  EXPECT_TRUE(testing::agree_to(log(Real(2, P200)), ln2, 200));
  EXPECT_TRUE(testing::agree_to(log(Real(10, P200)), ln10, 200));
  EXPECT_TRUE(testing::agree_to(log2_constant(P200), ln2, 200));
  EXPECT_EQ(to_decimal(log(Real(2, P30)), 15), "0.693147180559945");
  EXPECT_EQ(to_decimal(log(Real(10, P30)), 16), "2.302585092994045");
}

TEST(Log, SimpleCases) {
  EXPECT_EQ(log(Real(1, P100)), 0);
  const Real half = log(from_decimal("0.5", P100));
  EXPECT_LE((half + log2_constant(P100)).abs(), half.ulp() * 8);
  EXPECT_THROW(log(Real(P30)), DomainError);
  EXPECT_THROW(log(Real(-2, P30)), DomainError);
}

TEST(Log, TaylorNearOne) {
  // log(1 + z) = sum (-1)^(k+1) z^k / k, summed at doubled precision
  const Precision twice = Precision::from_digits(200);
  const Real z = Real::power_of_two(-80, twice);
  Real series(twice);
  Real power(1, twice);
  for (long k = 1; k < 40; ++k) {
    power *= z;
    series = k % 2 ? series + power / k : series - power / k;
  }
  const Real x = Real(1, P100) + Real::power_of_two(-80, P100);
  const Real value = log(x, LogMethod::taylor_near_one);
  EXPECT_LE(rel_error(value, series.with_precision(P100)),
            Real::power_of_two(2 - P100.working_bits(), P100));
  EXPECT_EQ(log(x), value);  // automatic takes the same branch
}

TEST(Log, MethodsAgree) {
  for_all(40, 51, [](Gen& g, int) {
    const Real x = g.log_uniform(1e-20, 1e20, P100);
    const Real sk = log(x, LogMethod::sasaki_kanada);
    const Real sal = log(x, LogMethod::salamin);
    EXPECT_LE((sk - sal).abs(), Real::power_of_two(4 - P100.bits, P100));
  });
}

TEST(Log, MatchesMpfrProperty) {
  for_all(100, 52, [](Gen& g, int) {
    const Real x = g.log_uniform(1e-300, 1e300, P100);
    const Real want = mpfr_apply(mpfr_log, x);
    EXPECT_LE((log(x) - want).abs(), want.ulp() * 16);
  });
}

TEST(Log, NearOneProperty) {
  // cancellation: relative accuracy must hold for x close to 1
  for_all(60, 53, [](Gen& g, int) {
    const long shift = g.integer(1, 300);
    const Real d = g.real_in(-1, 1, P100).ldexp(-shift);
    const Real x = Real(1, P100) + d;
    const Real want = mpfr_apply(mpfr_log, x);
    if (want.is_zero()) return;
    EXPECT_LE(rel_error(log(x), want),
              Real::power_of_two(8 - P100.working_bits(), P100))
        << "shift " << shift;
  });
}

TEST(Exp, Examples) {
  EXPECT_EQ(exp(Real(P30)), 1);
  const long scale = 240;
  const Real e = fixed_to_real(testing::e_series(scale), scale, P200);
  EXPECT_TRUE(testing::agree_to(exp(Real(1, P200)), e, 200));
  EXPECT_EQ(to_decimal(exp(Real(1, P30)), 16), "2.718281828459045");
  const Real two = exp(log2_constant(P100));
  EXPECT_LE((two - 2).abs(), Real(2, P100).ulp() * 4);
}

TEST(Exp, RangeGuard) {
  EXPECT_THROW(exp(Real::power_of_two(21, P30)), RangeError);
  EXPECT_THROW(exp(-Real::power_of_two(21, P30)), RangeError);
}

TEST(Exp, MatchesMpfrProperty) {
  for_all(40, 54, [](Gen& g, int) {
    const Real x = g.real_in(-700, 700, P100);
    const Real want = mpfr_apply(mpfr_exp, x);
    // log y carries an absolute error of ~|x| ulps, so exp loses log2|x| bits
    const Real scale = std::max(Real(1, P100), x.abs());
    EXPECT_LE(rel_error(exp(x), want),
              Real::power_of_two(6 - P100.working_bits(), P100) * scale);
  });
}

TEST(Exp, LogRoundtripProperty) {
  for_all(100, 55, [](Gen& g, int) {
    const Real x = g.log_uniform(1e-3, 1e3, P200);
    EXPECT_LE((exp(log(x)) - x).abs(), x.ulp() * 8);
  });
}

TEST(ComplexAgm, FixedPoint) {
  const Complex one(Real(1, P30), Real(P30));
  const ComplexAgmResult r = agm_complex_traced(one, one);
  EXPECT_EQ(r.limit.re(), 1);
  EXPECT_EQ(r.limit.im(), 0);
  EXPECT_EQ(r.iterations, 0);
}

TEST(ComplexAgm, StableAcrossPrecisions) {
  auto run = [](const Precision& p) {
    return agm_complex(Complex(Real(1, p), Real(p)),
                       Complex(Real(1, p), Real(1, p)));
  };
  const Precision p200 = Precision::from_digits(200);
  const Precision p400 = Precision::from_digits(400);
  const Complex lo = run(p200);
  const Complex hi = run(p400);
  EXPECT_TRUE(testing::agree_to(lo.re(), hi.re().with_precision(p200), 195));
  EXPECT_TRUE(testing::agree_to(lo.im(), hi.im().with_precision(p200), 195));
}

TEST(ComplexAgm, IteratesStayInRightHalfPlane) {
  for_all(30, 56, [](Gen& g, int) {
    const Complex a(g.real_in(0.01, 5, P100), g.real_in(-5, 5, P100));
    const Complex b(g.real_in(0.01, 5, P100), g.real_in(-5, 5, P100));
    const ComplexAgmResult r = agm_complex_traced(a, b);
    for (int n = 0; n <= r.iterations; ++n) {
      EXPECT_GT(r.a[n].re(), 0) << n;
      EXPECT_GT(r.b[n].re(), 0) << n;
    }
    // converged
    EXPECT_LE((r.a.back() - r.b.back()).abs(),
              r.a.back().abs() * Real::power_of_two(-P100.bits, P100));
  });
}

TEST(ComplexAgm, RealAxisMatchesRealAgm) {
  const Real a(3, P100);
  const Real b = from_decimal("0.25", P100);
  const Complex z = agm_complex(Complex(a, Real(P100)), Complex(b, Real(P100)));
  EXPECT_TRUE(testing::agree_to(z.re(), agm(a, b).limit, 125));
  EXPECT_EQ(z.im(), 0);
}

TEST(ComplexAgm, GeometricMeanBranchAndDomain) {
  const Complex g = gm_complex(Complex(Real(-4, P30), Real(P30)),
                               Complex(Real(1, P30), Real(P30)));
  EXPECT_EQ(g.re(), 0);
  EXPECT_EQ(g.im(), 2);
  EXPECT_THROW(agm_complex(Complex(Real(-1, P30), Real(P30)),
                           Complex(Real(1, P30), Real(P30))),
               DomainError);
  EXPECT_THROW(agm_complex(Complex(Real(P30), Real(P30)),
                           Complex(Real(1, P30), Real(P30))),
               DomainError);
}

TEST(LogComplex, MatchesMpfrProperty) {
  for_all(40, 57, [](Gen& g, int) {
    const Real re = g.log_uniform(1e-5, 1e5, P100);
    const Real im = g.real_in(-1e5, 1e5, P100);
    const Complex l = log_complex(Complex(re, im));
    Real arg(P100);
    mpfr_atan2(arg.get_mutable(), im.get(), re.get(), MPFR_RNDN);
    const Real modulus = sqrt(square(re) + square(im));
    EXPECT_LE((l.re() - mpfr_apply(mpfr_log, modulus)).abs(),
              Real::power_of_two(8 - P100.working_bits(), P100) * 64);
    EXPECT_LE((l.im() - arg).abs(),
              Real::power_of_two(8 - P100.working_bits(), P100));
  });
  EXPECT_THROW(log_complex(Complex(Real(-1, P30), Real(1, P30))), DomainError);
}

TEST(Arctan, Examples) {
  EXPECT_EQ(arctan(Real(P100)), 0);
  const Real pi = pi_constant(P100);
  EXPECT_LE((arctan(Real(1, P100)) - pi.ldexp(-2)).abs(), pi.ulp() * 4);
  // Madhava's series sums to 6 arctan(1/sqrt 3) = pi
  const Real third = arctan(inv_sqrt(Real(3, P100)));
  EXPECT_TRUE(testing::agree_to(third * 6, madhava_pi(240, P100), 105));
  EXPECT_EQ(to_decimal(arctan(Real(1, P30)), 15), "0.785398163397448");
}

TEST(Arctan, MachinOracle) {
  // arctan 1 = 4 arctan(1/5) - arctan(1/239), by integer series
  const long scale = 240;
  const Real quarter_pi = fixed_to_real(
      4 * testing::atan_inv(5, scale) - testing::atan_inv(239, scale), scale,
      P200);
  EXPECT_TRUE(testing::agree_to(arctan(Real(1, P200)), quarter_pi, 200));
  EXPECT_TRUE(testing::agree_to(
      arctan(reciprocal(Real(5, P200))),
      fixed_to_real(testing::atan_inv(5, scale), scale, P200), 200));
}

TEST(Arctan, OddSymmetryExact) {
  for_all(30, 58, [](Gen& g, int) {
    const Real x = g.real_in(-100, 100, P100);
    EXPECT_EQ(arctan(-x), -arctan(x));
  });
}

TEST(Arctan, MatchesMpfrProperty) {
  for_all(80, 59, [](Gen& g, int i) {
    const Real x = i % 2 ? g.log_uniform(1e-40, 1e40, P100)
                         : g.real_in(-3, 3, P100);
    const Real want = mpfr_apply(mpfr_atan, x);
    EXPECT_LE((arctan(x) - want).abs(), want.ulp() * 16);
  });
}

TEST(Arccos, Examples) {
  const Real pi = pi_constant(P100);
  EXPECT_EQ(arccos(Real(1, P100)), 0);
  EXPECT_EQ(arccos(Real(P100)), pi.ldexp(-1));
  EXPECT_LE((arccos(from_decimal("0.5", P100)) - pi / 3).abs(), pi.ulp() * 8);
  EXPECT_LE((arccos(Real(-1, P100)) - pi).abs(), pi.ulp() * 2);
  EXPECT_THROW(arccos(from_decimal("1.0000001", P30)), DomainError);
  EXPECT_THROW(arccos(Real(-2, P30)), DomainError);
}

TEST(Arccos, MatchesMpfrProperty) {
  for_all(60, 60, [](Gen& g, int) {
    const Real x = g.real_in(-0.999, 0.999, P100);
    const Real want = mpfr_apply(mpfr_acos, x);
    EXPECT_LE((arccos(x) - want).abs(), Real(1, P100).ulp() * 64);
  });
}

}  // namespace
}  // namespace agmpi
