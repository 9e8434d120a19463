import math
from fractions import Fraction

import mpmath
import pytest

import hyperzeta as hz

mpmath.mp.prec = 192


def test_zeta_at_two_is_pi_squared_over_six():
    r = hz.zeta(2, 1, [1])
    assert abs(r["value"] - math.pi**2 / 6) < 1e-15
    assert mpmath.mpf(r["re"]) - mpmath.pi**2 / 6 < mpmath.mpf("1e-40")
    assert r["method"] == "direct_sum"


def test_contour_zeta_matches_mpmath_hurwitz():
    for s in (-3.5, -1.25, 0.5, 2.5):
        r = hz.zeta(s, "0.75", [1])
        assert r["method"] == "contour"
        ref = mpmath.zeta(s, mpmath.mpf("0.75"))
        assert abs(mpmath.mpf(r["re"]) - ref) < mpmath.mpf("1e-30") * max(1, abs(ref))


def test_log_gamma_and_balanced_function():
    r = hz.log_hyper_gamma(1, 0, 1, [1])
    assert abs(mpmath.mpf(r["re"]) + mpmath.log(2 * mpmath.pi) / 2) < mpmath.mpf("1e-30")
    p = hz.balanced_P(1, 0, 1, [1])
    assert abs(p["value"] - r["value"]) < 1e-15
    q = hz.balanced_P(2, 1, "1.3", [1, "0.7"], combination=True)
    assert abs(q["value"] - hz.balanced_P(2, 1, "1.3", [1, "0.7"])["value"]) < 1e-14
    assert abs(hz.log_hyper_gamma(0, 1, 1, [1])["value"] + 1 / 12) < 1e-15


def test_exact_combinatorics():
    assert hz.multi_harmonic(2, 2) == Fraction(7, 4)
    assert hz.coeff_c(2, 1, 2) == Fraction(3, 2)
    assert hz.gen_F(3, 2) == [1, Fraction(11, 6)]


def test_q_polynomials():
    q = hz.q_poly(1, 0)
    assert abs(q[1] - 1 / (2j * math.pi)) < 1e-15
    assert abs(q[0] - (0.5772156649015329 / (2j * math.pi) - 0.5)) < 1e-15
    s = hz.s_poly(3, 4)
    q0 = hz.q_poly(3, 0)
    assert all(abs(a - b) < 1e-14 for a, b in zip(s, q0))


def test_bernoulli_a():
    # a_{1,2}(1/4; 1) = -B_3(1/4)/6 = -1/128
    assert abs(hz.bernoulli_a([1], 2, 0.25)["value"] + 1 / 128) < 1e-16


def test_asym_and_fit():
    out = hz.asym(w_grid=[20, 40, 80, 160])
    errs = [row["err_abs"] for row in out["rows"]]
    assert all(b < a / 1.5 for a, b in zip(errs, errs[1:]))
    fitted = hz.asym(a=0.25, w_grid=[25, 50, 100, 200], fit=True)["fit"]
    assert abs(fitted["fitted"] - fitted["reference"]) < 0.05 * abs(fitted["reference"])
    with pytest.raises(hz.FitUnstable):
        hz.asym(w_grid=[25, 50, 100, 200], fit=True)


def test_errors_map_to_python_exceptions():
    with pytest.raises(hz.DomainError):
        hz.zeta(2.5, -1, [1])
    with pytest.raises(hz.DomainError):
        hz.zeta(1, 1, [1])
    with pytest.raises(hz.PrecisionError):
        hz.zeta_direct(2.0, 1, [1, 1.3])
    with pytest.raises(hz.HyperzetaError):
        hz.zeta("not a number", 1, [1])


def test_checks_are_deterministic():
    a = hz.run_checks("combinatorics", seed=5)
    b = hz.run_checks("combinatorics", seed=5)
    assert a == b
    assert all(r["passed"] for r in a)
