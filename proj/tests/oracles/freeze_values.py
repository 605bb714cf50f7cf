"""Independent oracle values frozen into the C++ tests.

Elliptic integrals are evaluated by tanh-sinh quadrature of their defining
integrals (mpmath.quad), never through an AGM. Run with:

    python3 tests/oracles/freeze_values.py
"""
from mpmath import mp, mpf, quad, sqrt, sin, pi, gamma, nstr

mp.dps = 80


def k_integral(k):
    return quad(lambda t: 1 / sqrt(1 - (k * sin(t)) ** 2), [0, pi / 2])


def e_integral(k):
    return quad(lambda t: sqrt(1 - (k * sin(t)) ** 2), [0, pi / 2])


def main():
    r = 1 / sqrt(2)
    k_mid = k_integral(r)
    e_mid = e_integral(r)
    print("K(1/sqrt2)        ", nstr(k_mid, 60))
    print("Gamma^2(1/4)/4rtpi", nstr(gamma(mpf(1) / 4) ** 2 / (4 * sqrt(pi)), 60))
    print("2E-K at 1/sqrt2   ", nstr(2 * e_mid - k_mid, 60))
    print("Gamma^2(3/4)/rtpi ", nstr(gamma(mpf(3) / 4) ** 2 / sqrt(pi), 60))
    print("E(0.3)            ", nstr(e_integral(mpf("0.3")), 60))
    print("K(0.3)            ", nstr(k_integral(mpf("0.3")), 60))


if __name__ == "__main__":
    main()
