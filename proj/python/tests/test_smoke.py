import mpmath
import pytest

import agmpi

mpmath.mp.dps = 80


def test_pi_agrees_across_algorithms():
    gl = agmpi.pi(60)
    assert agmpi.pi(60, "chudnovsky")[:-2] == gl[:-2]
    assert agmpi.pi(60, "bb4")[:-2] == gl[:-2]
    assert gl.startswith(mpmath.nstr(mpmath.pi, 50)[:-1])


def test_gl1_table_value():
    assert agmpi.pi(25, "gl1", 5) == "3.141592653589793238462643"


def test_log_matches_mpmath():
    value = agmpi.log("2", 40)
    assert mpmath.mpf(value) - mpmath.log(2) == pytest.approx(0, abs=1e-39)


def test_exp_log_and_trig():
    assert abs(mpmath.mpf(agmpi.exp("1", 50)) - mpmath.e) < mpmath.mpf("1e-48")
    assert abs(mpmath.mpf(agmpi.atan("1", 50)) - mpmath.pi / 4) < mpmath.mpf("1e-48")
    assert abs(mpmath.mpf(agmpi.acos("0.5", 50)) - mpmath.pi / 3) < mpmath.mpf("1e-48")


def test_elliptic_against_quadrature():
    k = mpmath.mpf("0.3")
    oracle = mpmath.quad(lambda t: 1 / mpmath.sqrt(1 - (k * mpmath.sin(t)) ** 2),
                         [0, mpmath.pi / 2])
    assert abs(mpmath.mpf(agmpi.elliptic_k("0.3", 50)) - oracle) < mpmath.mpf("1e-48")


def test_domain_errors_raise_value_error():
    with pytest.raises(ValueError):
        agmpi.log("0", 20)
    with pytest.raises(ValueError):
        agmpi.acos("2", 20)
    with pytest.raises(ValueError):
        agmpi.pi(20, "nope")


def test_table_csv_header():
    text = agmpi.table("gl", rows=2, digits=30, format="csv")
    assert text.splitlines()[0] == "n,lower,upper"


def test_verify_suite_passes():
    checks = agmpi.verify("legendre", 50)
    assert checks and all(passed for _, passed, _, _ in checks)


def test_main_exit_codes():
    code, out, _ = agmpi.main(["fn", "log", "--x", "2", "--digits", "15"])
    assert (code, out) == (0, "0.693147180559945\n")
    code, _, err = agmpi.main(["fn", "log", "--x", "0"])
    assert code == 2 and "x > 0" in err
