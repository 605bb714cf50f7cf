#pragma once

// Elementary functions through the AGM: log (Salamin and Sasaki-Kanada),
// exp by Newton's method, the complex AGM, arctan and arccos.

#include <vector>

#include "agmpi/mpreal.hpp"

namespace agmpi {

enum class LogMethod { salamin, sasaki_kanada, taylor_near_one, automatic };

struct LogResult {
  Real value;
  int agm_iterations = 0;
};

/// pi / (2 AGM(1, 4/x)) ~ log x, with no correction for the O((4/x)^2)
/// relative error. Requires x >= 16.
Real log_salamin(const Real& x);
LogResult log_salamin_traced(const Real& x);

/// (pi/4) / AGM(theta2^2(q^4), theta3^2(q^4)) with q = 1/x, exact for x > 1.
/// Above 2^(working_bits/36) the theta series keep 3 and 2 terms.
Real log_sasaki_kanada(const Real& x);
LogResult log_sasaki_kanada_traced(const Real& x);
/// True when x is above the fixed-truncation threshold 2^(working_bits/36).
bool sasaki_kanada_truncated(const Real& x);

/// 2 atanh((x-1)/(x+1)) by its Taylor series; x > 0, fast only near 1.
Real log_taylor(const Real& x);

/// Natural log of x > 0. `automatic` uses the Taylor series when
/// |x-1| < 2^(-wb/log2 wb) and Sasaki-Kanada with argument reduction
/// otherwise. Reduction scales by a power of two and adds guard bits to
/// cover the cancellation.
Real log(const Real& x, LogMethod method = LogMethod::automatic);

/// log 2 at working precision, cached per precision.
Real log2_constant(const Precision& p);

/// Newton's method on log with a doubling precision schedule.
/// Throws RangeError when |x| > 2^20.
Real exp(const Real& x);

/// Principal sqrt(a b).
Complex gm_complex(const Complex& a, const Complex& b);

struct ComplexAgmResult {
  Complex limit;
  std::vector<Complex> a;
  std::vector<Complex> b;
  int iterations = 0;
};
/// Both arguments must lie in the right half-plane. Throws PrecisionError if
/// an iterate leaves it.
ComplexAgmResult agm_complex_traced(const Complex& a0, const Complex& b0);
Complex agm_complex(const Complex& a0, const Complex& b0);

/// Principal log of z with Re z > 0. The real part comes from the real log of
/// |z|, the imaginary part from the complex Sasaki-Kanada formula after
/// square-root halving of the argument.
Complex log_complex(const Complex& z);

/// Im log(1 + ix), principal value in (-pi/2, pi/2).
Real arctan(const Real& x);
/// arctan(sqrt(1 - x^2) / x), principal value in [0, pi].
Real arccos(const Real& x);

}  // namespace agmpi
