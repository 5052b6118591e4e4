import math

import numpy as np
import pytest

from sphgreen.specfun import (
    FerrersOrderDegree,
    GammaPoleError,
    NonConvergenceError,
    SeriesControl,
    double_factorial,
    ferrers_p,
    ferrers_q,
    gamma_real,
    gauss_2f1,
    pochhammer,
    reciprocal_gamma,
)

SQRT_PI = math.sqrt(math.pi)


def brute_force_2f1(a, b, c, z, terms=100000):
    """Independent oracle: plain partial sum with explicit Pochhammer ratios."""
    total = 1.0
    term = 1.0
    for n in range(terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        total += term
        if term == 0.0 or abs(term) < 1e-18 * abs(total):
            break
    return total


class TestGamma:
    def test_integers(self):
        assert gamma_real(1.0) == 1.0
        assert gamma_real(5.0) == 24.0

    def test_half_integers(self):
        assert gamma_real(0.5) == pytest.approx(1.7724538509055160, rel=1e-15)
        assert gamma_real(2.5) == pytest.approx(0.75 * SQRT_PI, rel=1e-15)
        assert gamma_real(-0.5) == pytest.approx(-2.0 * SQRT_PI, rel=1e-14)

    def test_pole_raises(self):
        for z in (0.0, -1.0, -4.0):
            with pytest.raises(GammaPoleError):
                gamma_real(z)

    def test_large_arguments(self):
        assert gamma_real(171.5) == pytest.approx(math.gamma(171.5), rel=1e-14)
        assert gamma_real(200.0) == math.inf
        assert reciprocal_gamma(200.0) == 0.0

    def test_reciprocal_vanishes_at_poles(self):
        assert reciprocal_gamma(0.0) == 0.0
        assert reciprocal_gamma(-3.0) == 0.0
        assert reciprocal_gamma(2.0) == 1.0

    def test_duplication_formula(self):
        # relative agreement on the half-integer ladder
        for z in np.arange(0.5, 10.25, 0.5):
            z = float(z)
            lhs = gamma_real(2 * z)
            rhs = 2 ** (2 * z - 1) / SQRT_PI * gamma_real(z) * gamma_real(z + 0.5)
            assert abs(lhs - rhs) / abs(lhs) <= 1e-12

    def test_reflection_formula(self):
        for z in np.arange(0.05, 1.0, 0.05):
            z = float(z)
            value = gamma_real(z) * gamma_real(1.0 - z) * math.sin(math.pi * z) / math.pi
            assert value == pytest.approx(1.0, abs=1e-12)


class TestDoubleFactorial:
    def test_definition_cases(self):
        assert double_factorial(-1) == 1
        assert double_factorial(0) == 1
        assert double_factorial(5) == 15
        assert double_factorial(6) == 48

    def test_rejects_below_minus_one(self):
        with pytest.raises(ValueError):
            double_factorial(-2)

    def test_even_identity(self):
        for n in range(16):
            assert double_factorial(2 * n) == 2**n * math.factorial(n)


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(3.7, 0) == 1.0
        assert pochhammer(-2.0, 0) == 1.0

    def test_factorial_case(self):
        assert pochhammer(1.0, 4) == 24.0

    def test_half_case(self):
        assert pochhammer(0.5, 2) == 0.75

    def test_gamma_ratio(self):
        for z in (0.3, 1.7, 2.5):
            for n in (1, 3, 6):
                assert pochhammer(z, n) == pytest.approx(
                    gamma_real(z + n) / gamma_real(z), rel=1e-13)


class TestGauss2F1:
    def test_at_zero(self):
        assert gauss_2f1(0.7, 1.3, 2.1, 0.0) == 1.0

    def test_binomial_identity(self):
        assert gauss_2f1(0.5, 2.0, 2.0, 0.25) == pytest.approx(0.75**-0.5, rel=1e-14)

    def test_log_case_against_brute_force(self):
        # 2F1(1/2, 1; 3/2; x^2) = atanh(x)/x; at x = 1/2 this is ln 3
        value = gauss_2f1(0.5, 1.0, 1.5, 0.25)
        assert value == pytest.approx(brute_force_2f1(0.5, 1.0, 1.5, 0.25), rel=1e-14)
        assert 2.0 * value * 0.5 == pytest.approx(1.0986122886681098, rel=1e-14)

    def test_negative_argument(self):
        # 2F1(1, 1; 2; -z) = log(1 + z)/z, alternating series
        assert gauss_2f1(1.0, 1.0, 2.0, -0.5) == pytest.approx(
            math.log(1.5) / 0.5, rel=1e-13)

    def test_nonpositive_integer_c_rejected(self):
        with pytest.raises(GammaPoleError):
            gauss_2f1(1.0, 1.0, 0.0, 0.5)
        with pytest.raises(GammaPoleError):
            gauss_2f1(1.0, 1.0, -2.0, 0.5)

    def test_argument_outside_disc_rejected(self):
        with pytest.raises(ValueError):
            gauss_2f1(1.0, 1.0, 1.5, 1.0)

    def test_nonconvergence_near_one(self):
        ctl = SeriesControl(rel_tol=1e-15, max_terms=60)
        with pytest.raises(NonConvergenceError):
            gauss_2f1(0.5, 5.0, 1.5, 0.999, ctl)

    def test_euler_transformation(self):
        rng = np.random.default_rng(42)
        for _ in range(25):
            a = rng.uniform(0.1, 2.5)
            b = rng.uniform(0.1, 2.5)
            c = rng.uniform(0.5, 3.0)
            z = rng.uniform(0.0, 0.9)
            lhs = gauss_2f1(a, b, c, z)
            rhs = (1.0 - z) ** (c - a - b) * gauss_2f1(c - a, c - b, c, z)
            assert abs(lhs - rhs) / max(1.0, abs(lhs)) <= 1e-11

    def test_contiguous_relation(self):
        rng = np.random.default_rng(42)
        for _ in range(25):
            a = rng.uniform(0.1, 2.5)
            b = rng.uniform(0.1, 2.5)
            c = rng.uniform(0.5, 3.0)
            z = rng.uniform(0.0, 0.9)
            lhs = gauss_2f1(a, b + 1.0, c, z)
            rhs = ((b - a) / b * gauss_2f1(a, b, c, z)
                   + a / b * gauss_2f1(a + 1.0, b, c, z))
            assert abs(lhs - rhs) / max(1.0, abs(lhs)) <= 1e-11


class TestFerrersDomain:
    def test_argument_must_be_inside_cut(self):
        with pytest.raises(ValueError):
            FerrersOrderDegree(1.0, 0.0, 1.0)
        with pytest.raises(ValueError):
            FerrersOrderDegree(1.0, 0.0, -1.5)

    def test_negative_integer_degree_plus_order_rejected(self):
        with pytest.raises(ValueError):
            FerrersOrderDegree(0.5, -1.5, 0.3)
        with pytest.raises(ValueError):
            FerrersOrderDegree(0.0, -2.0, 0.3)
        # zero and positive integers are fine
        FerrersOrderDegree(0.5, -0.5, 0.3)
        FerrersOrderDegree(1.0, 1.0, 0.3)


class TestFerrersP:
    def test_degree_zero_is_one(self):
        for x in (-0.8, 0.0, 0.5):
            assert ferrers_p(FerrersOrderDegree(0.0, 0.0, x)) == pytest.approx(1.0, abs=1e-15)

    def test_degree_one_is_argument(self):
        for x in (-0.7, 0.2, 0.9):
            assert ferrers_p(FerrersOrderDegree(1.0, 0.0, x)) == pytest.approx(x, rel=1e-14)

    def test_half_half_at_origin(self):
        # the odd block carries the x prefactor and the even block's
        # trigonometric coefficient vanishes, so the value is exactly 0
        assert ferrers_p(FerrersOrderDegree(0.5, 0.5, 0.0)) == 0.0


class TestFerrersQ:
    def test_zero_zero_is_log_cot_half(self):
        assert ferrers_q(FerrersOrderDegree(0.0, 0.0, 0.0)) == 0.0
        for theta in (0.4, 1.0, 2.2):
            expected = math.log(1.0 / math.tan(theta / 2.0))
            got = ferrers_q(FerrersOrderDegree(0.0, 0.0, math.cos(theta)))
            assert got == pytest.approx(expected, rel=1e-13)

    def test_half_minus_half_table_value(self):
        theta = math.pi / 4.0
        got = ferrers_q(FerrersOrderDegree(0.5, -0.5, math.cos(theta)))
        expected = math.sqrt(math.pi / 2.0) * math.sin(theta) ** 0.5 / math.tan(theta)
        assert got == pytest.approx(expected, rel=1e-13)

    def test_one_minus_one_at_origin(self):
        assert ferrers_q(FerrersOrderDegree(1.0, -1.0, 0.0)) == pytest.approx(0.0, abs=1e-15)

    def test_order_negated_degree_specialization(self):
        # Q_nu^{-nu}(x) = sqrt(pi)/2^nu * x (1-x^2)^{nu/2} / Gamma(nu+1/2)
        #                 * 2F1(1/2, nu+1; 3/2; x^2)
        for nu in (0.5, 1.0, 1.5, 2.0, 3.5):
            for x in (-0.6, 0.2, 0.8):
                direct = ferrers_q(FerrersOrderDegree(nu, -nu, x))
                closed = (SQRT_PI / 2.0**nu * x * (1.0 - x * x) ** (nu / 2.0)
                          / gamma_real(nu + 0.5)
                          * gauss_2f1(0.5, nu + 1.0, 1.5, x * x))
                assert abs(direct - closed) / max(1.0, abs(closed)) <= 1e-11
