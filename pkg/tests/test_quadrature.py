import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from metrics.models import RegressionObservation
from metrics.special_functions import FoldedNormalParams, folded_normal_mean, folded_normal_variance
from oracle.models import OracleConfig
from oracle.quadrature import (
    integrate,
    integrate_abs_residual,
    integrate_sq_residual,
    quad_expected_abs_residual,
    quad_expected_sq_residual,
)
from utils.errors import QuadratureError, ValidationError


def obs(delta, sigma, y_bar=0.0):
    return RegressionObservation(y_hat=y_bar + delta, y_bar=y_bar, sigma=sigma)


class TestIntegrate:
    def test_polynomial_is_exact(self):
        result = integrate(lambda x: x**3 - 2 * x, [0.0, 2.0], 1e-12, 10)
        assert result.value == pytest.approx(0.0, abs=1e-14)

    def test_smooth_function(self):
        result = integrate(np.sin, [0.0, math.pi], 1e-12, 30)
        assert result.value == pytest.approx(2.0, abs=1e-12)
        assert result.error <= 1e-12

    def test_needs_an_interval(self):
        with pytest.raises(ValidationError):
            integrate(np.sin, [1.0, 1.0], 1e-12, 10)

    def test_unreachable_tolerance_reports_bound(self):
        # 1/sqrt(x) near 0 does not converge in two levels
        with pytest.raises(QuadratureError) as info:
            integrate(lambda x: 1 / np.sqrt(x), [0.0, 1.0], 1e-12, 2)
        assert info.value.depth == 2
        assert info.value.error_bound > 1e-12
        assert "error bound" in str(info.value)


class TestSquaredResidual:
    @pytest.mark.parametrize("delta, sigma, expected", [(0.0, 1.0, 1.0), (2.0, 0.5, 4.25)])
    def test_known_values(self, delta, sigma, expected):
        assert quad_expected_sq_residual(obs(delta, sigma)) == pytest.approx(expected, abs=1e-10)

    @given(st.floats(min_value=-10, max_value=10), st.floats(min_value=0.01, max_value=10))
    @settings(max_examples=100, deadline=None)
    def test_matches_closed_form(self, delta, sigma):
        value = quad_expected_sq_residual(obs(delta, sigma, y_bar=3.0))
        assert value == pytest.approx(delta * delta + sigma * sigma, abs=1e-10, rel=1e-12)

    def test_zero_sigma_rejected(self):
        with pytest.raises(ValidationError):
            quad_expected_sq_residual(obs(1.0, 0.0))


class TestAbsoluteResidual:
    def test_half_normal(self):
        assert quad_expected_abs_residual(obs(0.0, 1.0)) == pytest.approx(math.sqrt(2 / math.pi), abs=1e-12)

    def test_far_tail(self):
        assert quad_expected_abs_residual(obs(5.0, 0.1)) == pytest.approx(5.0, abs=1e-10)

    def test_unit_location(self):
        value = quad_expected_abs_residual(obs(1.0, 1.0))
        assert value == pytest.approx(folded_normal_mean(FoldedNormalParams(1.0, 1.0)), abs=1e-12)

    @given(st.floats(min_value=-10, max_value=10), st.floats(min_value=0.01, max_value=10))
    @settings(max_examples=1000, deadline=None)
    def test_folded_moments_match(self, delta, sigma):
        p = FoldedNormalParams(delta, sigma)
        mean = quad_expected_abs_residual(obs(delta, sigma))
        second = quad_expected_sq_residual(obs(delta, sigma))
        assert mean == pytest.approx(folded_normal_mean(p), abs=1e-10)
        assert second - mean * mean == pytest.approx(folded_normal_variance(p), abs=1e-10)

    def test_kink_split_is_robust_and_cheaper(self):
        o = obs(0.3, 1.0)
        cfg = OracleConfig(quad_tolerance=1e-11)
        split = integrate_abs_residual(o, cfg, split_at_kink=True)
        unsplit = integrate_abs_residual(o, cfg, split_at_kink=False)
        assert abs(split.value - unsplit.value) <= 1e-9
        assert split.n_intervals < unsplit.n_intervals

    def test_result_metadata(self):
        result = integrate_sq_residual(obs(1.0, 2.0))
        assert result.n_intervals >= 8
        assert result.error <= max(1e-12, 64 * np.finfo(float).eps * result.value)


class TestLargeLabelOffset:
    @pytest.mark.parametrize("y_hat", [1e8, 1e8 + 2e-3, 1e8 - 5e-3])
    def test_small_sigma_far_from_origin(self, y_hat):
        o = RegressionObservation(y_hat=y_hat, y_bar=1e8, sigma=1e-3)
        delta = o.residual_mean
        cfg = OracleConfig()

        sq = integrate_sq_residual(o, cfg)
        assert abs(sq.value - (delta * delta + o.sigma**2)) <= cfg.quad_tolerance

        ab = integrate_abs_residual(o, cfg)
        exact = folded_normal_mean(FoldedNormalParams(delta, o.sigma))
        assert abs(ab.value - exact) <= cfg.quad_tolerance

    def test_exact_prediction_gives_sigma_squared(self):
        value = quad_expected_sq_residual(RegressionObservation(1e8, 1e8, 1e-3))
        assert value == pytest.approx(1e-6, rel=1e-10)
