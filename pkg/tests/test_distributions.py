"""Distribution invariants: CDF/survival/log-survival consistency, density
agreement with a finite-difference derivative, and unit total mass via an
independent adaptive quadrature."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.integrate import quad

from spheremin.distributions import (
    exponential,
    half_normal,
    heavy_tail,
    power_law,
    uniform01,
)
from spheremin.special import erfc

ALL = [half_normal(), exponential(1.0), exponential(2.0), uniform01(),
       power_law(2.0), heavy_tail(1.0), heavy_tail(0.5)]


def interior_grid(dist):
    hi = dist.support_upper if math.isfinite(dist.support_upper) else 10.0
    return np.linspace(1e-4, hi - 1e-4, 50)


@pytest.mark.parametrize("dist", ALL, ids=lambda d: d.name)
class TestCommonInvariants:
    def test_cdf_zero_at_origin(self, dist):
        assert dist.cdf(0.0) == 0.0

    def test_cdf_in_unit_interval_and_nondecreasing(self, dist):
        vals = [dist.cdf(float(y)) for y in interior_grid(dist)]
        assert all(0.0 <= v <= 1.0 for v in vals)
        assert all(a <= b for a, b in zip(vals, vals[1:]))

    def test_survival_complements_cdf(self, dist):
        for y in interior_grid(dist):
            s = dist.survival(float(y))
            if s > 1e-10:
                assert dist.cdf(float(y)) + s == pytest.approx(1.0, abs=1e-12)

    def test_log_survival_matches_survival(self, dist):
        for y in interior_grid(dist):
            s = dist.survival(float(y))
            if s > 1e-300:
                assert math.exp(dist.log_survival(float(y))) == pytest.approx(
                    s, abs=1e-12, rel=1e-12
                )
            assert dist.log_survival(float(y)) <= 0.0

    def test_density_matches_cdf_derivative(self, dist):
        h = 1e-5
        hi = dist.support_upper if math.isfinite(dist.support_upper) else 5.0
        for y in np.linspace(0.1, hi - 0.1, 20):
            numeric = (dist.cdf(float(y) + h) - dist.cdf(float(y) - h)) / (2 * h)
            assert numeric == pytest.approx(dist.density(float(y)), abs=1e-6)

    def test_density_integrates_to_one(self, dist):
        hi = dist.support_upper if math.isfinite(dist.support_upper) else np.inf
        mass, _ = quad(dist.density, 0.0, hi)
        assert mass == pytest.approx(1.0, abs=1e-8)


class TestHalfNormal:
    def test_matches_erfc(self):
        d = half_normal()
        assert d.cdf(0.0) == 0.0
        assert d.survival(1.0) == pytest.approx(0.15729920705028513, rel=1e-14)
        for y in np.linspace(0.0, 5.0, 100):
            assert d.cdf(float(y)) + erfc(float(y)) == pytest.approx(1.0, abs=1e-14)

    def test_density_at_zero(self):
        assert half_normal().density_at_zero == pytest.approx(
            1.1283791670955126, rel=1e-15
        )

    def test_tail_metadata(self):
        assert half_normal().tail_lp_exponent == 1.0


class TestExponential:
    def test_survival(self):
        assert exponential(1.0).survival(1.0) == pytest.approx(
            0.36787944117144233, rel=1e-15
        )

    def test_density_at_zero_is_rate(self):
        assert exponential(2.0).density_at_zero == 2.0

    def test_log_survival_exact_no_underflow(self):
        assert exponential(1.0).log_survival(700.0) == -700.0

    def test_rejects_bad_rate(self):
        with pytest.raises(ValueError):
            exponential(0.0)
        with pytest.raises(ValueError):
            exponential(-1.0)


class TestUniform01:
    def test_values(self):
        d = uniform01()
        assert d.cdf(0.25) == 0.25
        assert d.survival(2.0) == 0.0
        assert d.density_at_zero == 1.0
        assert d.support_upper == 1.0


class TestPowerLaw:
    def test_values(self):
        d = power_law(2.0)
        assert d.cdf(0.5) == 0.25
        assert d.survival(0.5) == 0.75
        assert d.density_at_zero == 0.0

    def test_rejects_k_not_above_one(self):
        with pytest.raises(ValueError):
            power_law(1.0)


class TestHeavyTail:
    def test_values(self):
        d = heavy_tail(1.0)
        assert d.survival(1.0) == 0.5
        assert d.density_at_zero == 1.0

    def test_tail_exponent_witness(self):
        # recorded p must make survival^p integrable: p * alpha > 1
        for alpha in (0.25, 0.5, 1.0, 3.0):
            assert heavy_tail(alpha).tail_lp_exponent * alpha > 1.0

    def test_rejects_bad_alpha(self):
        with pytest.raises(ValueError):
            heavy_tail(0.0)


@given(st.floats(min_value=0.0, max_value=8.0))
def test_half_normal_cdf_survival_sum(y):
    d = half_normal()
    assert d.cdf(y) + d.survival(y) == pytest.approx(1.0, abs=1e-12)


@given(st.floats(min_value=0.0, max_value=50.0),
       st.floats(min_value=0.1, max_value=5.0))
def test_exponential_log_survival_is_linear(y, rate):
    assert exponential(rate).log_survival(y) == -rate * y
