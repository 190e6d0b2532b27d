import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetalab.errors import DomainError, PoleError
from zetalab.special_functions import (
    ensure_finite,
    ensure_strip,
    eta,
    functional_equation_residual,
    gamma,
    gamma_abs_product,
    zeta,
)

from oracles import ZERO_ORDINATES, eta_euler_transform

SQRT_PI = math.sqrt(math.pi)


class TestValidation:
    def test_rejects_nan(self):
        with pytest.raises(DomainError):
            ensure_finite(complex(float("nan"), 0.0))

    def test_rejects_inf(self):
        with pytest.raises(DomainError):
            ensure_finite(complex(0.0, float("inf")))

    @pytest.mark.parametrize("re", [0.0, 1.0, -0.2, 1.3])
    def test_strip_rejects_outside(self, re):
        with pytest.raises(DomainError):
            ensure_strip(complex(re, 1.0))

    def test_strip_right_edge_opt_in(self):
        assert ensure_strip(1.0 + 2j, allow_re_one=True) == 1.0 + 2j


class TestGamma:
    def test_half(self):
        assert abs(gamma(0.5) - SQRT_PI) < 1e-13

    def test_one(self):
        assert abs(gamma(1.0) - 1.0) < 1e-13

    def test_recurrence(self):
        # Gamma(s+1) = s Gamma(s) across the strip, both sides independent.
        for s in [0.3 + 2j, 0.5 + 14j, 0.9 + 40j, 0.1 + 0.5j]:
            lhs = gamma(s + 1.0)
            rhs = s * gamma(s)
            assert abs(lhs - rhs) / abs(rhs) < 1e-12

    def test_reflection_consistency(self):
        for s in [0.25 + 3j, 0.4 + 11j]:
            prod = gamma(s) * gamma(1.0 - s)
            assert abs(prod - math.pi / cmath.sin(math.pi * s)) / abs(prod) < 1e-12

    def test_cross_check_against_product_formula(self):
        s = 0.5 + 14j
        assert abs(abs(gamma(s)) - gamma_abs_product(0.5, 14.0, 10**6)) < 1e-8

    @pytest.mark.parametrize("n", [0, -1, -2, -7])
    def test_pole_error(self, n):
        with pytest.raises(PoleError):
            gamma(complex(n, 0.0))
        with pytest.raises(PoleError):
            gamma(complex(n, 1e-13))

    def test_near_pole_but_outside_tolerance_is_fine(self):
        assert math.isfinite(abs(gamma(-1.0 + 1e-6)))


class TestGammaAbsProduct:
    def test_beta_zero_every_factor_one(self):
        for n in (1, 10, 1000):
            assert gamma_abs_product(0.5, 0.0, n) == pytest.approx(SQRT_PI, abs=1e-14)

    def test_agrees_with_direct_gamma(self):
        assert gamma_abs_product(0.5, 1.0, 10**6) == pytest.approx(
            abs(gamma(0.5 + 1j)), abs=1e-6
        )

    def test_strictly_positive_at_beta_ten(self):
        assert gamma_abs_product(0.5, 10.0, 10**6) > 0.0

    def test_monotone_decreasing_in_terms(self):
        vals = [gamma_abs_product(0.3, 5.0, n) for n in (10, 100, 1000, 10**4, 10**5)]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_grid_convergence_to_gamma_modulus(self):
        for alpha in np.linspace(0.1, 0.9, 5):
            for beta in np.linspace(0.0, 10.0, 5):
                prod = gamma_abs_product(float(alpha), float(beta), 10**6)
                assert prod == pytest.approx(abs(gamma(complex(alpha, beta))), abs=1e-6)

    def test_domain(self):
        with pytest.raises(DomainError):
            gamma_abs_product(1.0, 1.0, 10)
        with pytest.raises(DomainError):
            gamma_abs_product(0.5, 1.0, 0)


class TestEta:
    def test_alternating_harmonic(self):
        assert eta(1.0) == pytest.approx(math.log(2.0), abs=1e-13)

    def test_half_against_euler_transform_oracle(self):
        oracle = eta_euler_transform(0.5, 30)
        assert abs(eta(0.5) - oracle) < 1e-8
        assert eta(0.5).real == pytest.approx(0.6048986434, abs=1e-9)

    def test_vanishes_at_first_zero(self):
        assert abs(eta(complex(0.5, 14.134725))) < 1e-6

    def test_oracle_agreement_across_strip(self):
        for s in [0.4 + 3j, 0.7 + 10j, 0.95 + 1j, 0.5 + 25j]:
            assert abs(eta(s) - eta_euler_transform(s, 60)) < 1e-7

    def test_schwarz_reflection(self):
        rng = np.random.default_rng(71)
        for _ in range(100):
            s = complex(rng.uniform(0.05, 0.95), rng.uniform(0.0, 40.0))
            assert abs(eta(s.conjugate()) - eta(s).conjugate()) < 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            eta(0.0 + 3j)
        with pytest.raises(DomainError):
            eta(-0.5)


class TestZeta:
    def test_half(self):
        # eta(1/2)/(1 - sqrt 2), components from the Euler-transform oracle
        oracle = eta_euler_transform(0.5, 40).real / (1.0 - math.sqrt(2.0))
        assert zeta(0.5).real == pytest.approx(oracle, abs=1e-8)
        assert zeta(0.5).real == pytest.approx(-1.4603545088, abs=1e-9)

    def test_shared_zero_with_eta(self):
        assert abs(zeta(complex(0.5, 14.134725))) < 1e-5

    def test_real_on_real_axis(self):
        assert abs(zeta(0.75).imag) < 1e-12

    def test_strip_only(self):
        with pytest.raises(DomainError):
            zeta(1.5)
        with pytest.raises(DomainError):
            zeta(complex(1.0, 2.0))


class TestFunctionalEquation:
    def test_symmetric_point(self):
        assert functional_equation_residual(0.5) < 1e-10

    def test_upper_point(self):
        assert functional_equation_residual(0.7 + 3j) < 1e-8

    def test_lower_half_strip(self):
        assert functional_equation_residual(0.3 + 20j) < 1e-7

    def test_grid(self):
        for a in np.linspace(0.2, 0.8, 7):
            for b in np.linspace(0.0, 30.0, 7):
                assert functional_equation_residual(complex(a, b)) < 1e-7


class TestZeroEquivalence:
    """zeta and F = gamma*eta share zeros: indicators agree everywhere."""

    def test_at_known_zeros(self):
        for beta in ZERO_ORDINATES:
            s = complex(0.5, beta)
            assert abs(zeta(s)) < 1e-10
            scale = abs(gamma(s) * (1.0 - 2.0 ** (1.0 - s)))
            assert abs(gamma(s) * eta(s)) < 1e-10 * scale * 2.0

    def test_at_random_nonzeros(self):
        rng = np.random.default_rng(13)
        for _ in range(10**4):
            s = complex(rng.uniform(0.1, 0.9), rng.uniform(0.0, 30.0))
            scale = abs(gamma(s) * (1.0 - 2.0 ** (1.0 - s)))
            zeta_small = abs(zeta(s)) < 1e-10
            f_small = abs(gamma(s) * eta(s)) < 1e-10 * scale
            assert zeta_small == f_small == False  # noqa: E712


@settings(max_examples=200, deadline=None)
@given(
    re=st.floats(0.05, 0.95),
    im=st.floats(-40.0, 40.0),
)
def test_eta_conjugation_property(re, im):
    s = complex(re, im)
    assert abs(eta(s.conjugate()) - eta(s).conjugate()) < 1e-12
