"""Analytic curve tests.

Expected values were computed with an independent high-precision root
finder (mpmath, 40 digits) on the defining equation 1 - x = exp(-c*x) and
frozen here.
"""

import math

import pytest

from minorproc.analytic import (
    SolverConfig,
    accepted_density,
    accepted_density_slope,
    inverse_accepted_density,
    predictions,
    predictions_by_accepted,
    survival_prob,
)
from minorproc.errors import DomainError

# mpmath oracle values
BETA_2 = 0.79681213002002005
BETA_3 = 0.94047979070735963
F_2 = 1.67619488105404257
F_3 = 1.89158754735743840
FPRIME_2 = 0.36509042945295867
FINV_15 = 1.61884019377882094
BETA_FINV_15 = 0.65194500351960600


def test_survival_prob_frozen_values():
    assert survival_prob(2.0) == pytest.approx(BETA_2, abs=1e-11)
    assert survival_prob(3.0) == pytest.approx(BETA_3, abs=1e-11)


def test_survival_prob_limits():
    assert survival_prob(1.0 + 1e-6) < 1e-3
    assert survival_prob(100.0) > 0.999


def test_survival_prob_domain():
    for bad in (1.0, 0.5, -2.0, 1.0 + 1e-10):
        with pytest.raises(DomainError):
            survival_prob(bad)


def test_accepted_density_frozen_values():
    assert accepted_density(2.0) == pytest.approx(F_2, abs=1e-10)
    assert accepted_density(3.0) == pytest.approx(F_3, abs=1e-10)


def test_accepted_density_at_inverse_of_three_halves():
    # the paper's constant: density 3/2 is reached at c = 1.6188...
    assert accepted_density(FINV_15) == pytest.approx(1.5, abs=1e-3)


def test_accepted_density_limit_large_c():
    assert abs(accepted_density(100.0) - 2.0) < 1e-3


def test_slope_frozen_value():
    assert accepted_density_slope(2.0) == pytest.approx(FPRIME_2, abs=1e-10)


def test_slope_matches_finite_differences():
    h = 1e-5
    for c in (1.5, 2.0, 3.0):
        fd = (accepted_density(c + h) - accepted_density(c - h)) / (2 * h)
        assert accepted_density_slope(c) == pytest.approx(fd, abs=1e-6)


def test_slope_in_unit_interval():
    for c in (1.01, 1.5, 2.0, 5.0, 20.0):
        assert 0.0 < accepted_density_slope(c) < 1.0


def test_inverse_frozen_value():
    assert inverse_accepted_density(1.5) == pytest.approx(1.6188, abs=1e-3)
    assert inverse_accepted_density(1.5) == pytest.approx(FINV_15, abs=1e-9)


def test_inverse_round_trip():
    assert inverse_accepted_density(accepted_density(2.0)) == pytest.approx(2.0, abs=1e-9)
    assert inverse_accepted_density(1.67619) == pytest.approx(2.0, abs=1e-3)


def test_inverse_domain():
    for bad in (1.0, 2.0, 0.3, 2.5):
        with pytest.raises(DomainError):
            inverse_accepted_density(bad)


def test_defining_equation_residual_on_grid():
    c = 1.01
    while c <= 50.0:
        x = survival_prob(c)
        assert abs(1.0 - x - math.exp(-c * x)) <= 1e-11
        assert 0.0 < x < 1.0
        c *= 1.18


def test_density_strictly_increasing_and_in_range():
    # strict increase is testable only while the increment 2e^-c * dc beats
    # the 1e-12 solver tolerance; beyond that settle for non-decreasing
    prev = None
    c = 1.01
    while c <= 50.0:
        f = accepted_density(c)
        assert 1.0 < f < 2.0
        if prev is not None:
            assert f > prev if c <= 20.0 else f >= prev - 2e-12
        prev = f
        c += 0.37


def test_round_trip_on_grid():
    # conditioning: recovering c from f amplifies solver error by e^c / 2,
    # so the 1e-8 round trip is double-representable only up to c ~ 13
    tight = SolverConfig(tolerance=1e-14, max_iterations=300)
    c = 1.05
    while c <= 12.0:
        assert inverse_accepted_density(accepted_density(c, tight), tight) == pytest.approx(
            c, abs=1e-8
        )
        c *= 1.35


def test_predictions_fields():
    p = predictions(3.0)
    assert p.rejected_per_vertex == pytest.approx((3.0 - F_3) / 2, abs=1e-9)
    assert p.rejected_per_vertex == pytest.approx(0.5542, abs=1e-4)
    assert p.rejected_fraction == pytest.approx(1 - F_3 / 3.0, abs=1e-9)
    assert p.forbidden_density == pytest.approx(BETA_3**2, abs=1e-9)
    assert p.giant_fraction_process == pytest.approx(BETA_3, abs=1e-9)
    assert p.uniform_giant_fraction == 1.0  # c - 1 clamps at 1
    q = predictions(2.0)
    assert q.forbidden_density == pytest.approx(0.63491, abs=1e-5)
    assert q.f_prime == pytest.approx(1 - q.beta**2, abs=1e-12)


def test_predictions_by_accepted():
    p = predictions_by_accepted(1.5)
    assert p.query_density == pytest.approx(FINV_15, abs=1e-9)
    assert p.giant_fraction == pytest.approx(0.652, abs=1e-3)
    assert p.giant_fraction == pytest.approx(BETA_FINV_15, abs=1e-9)
    assert p.uniform_giant_fraction == pytest.approx(0.5, abs=1e-12)
    with pytest.raises(DomainError):
        predictions_by_accepted(2.0)
    with pytest.raises(DomainError):
        predictions_by_accepted(0.9)


def test_rejected_fraction_increasing_on_grid():
    # empirical grid check of the dotted-curve shape, not an analytic claim
    prev = None
    c = 1.01
    while c <= 50.0:
        rf = predictions(c).rejected_fraction
        assert 0.0 <= rf < 1.0
        if prev is not None:
            assert rf > prev
        prev = rf
        c += 0.61


def test_solver_config_validation():
    with pytest.raises(DomainError):
        SolverConfig(tolerance=0.0)
    with pytest.raises(DomainError):
        SolverConfig(max_iterations=0)
    tight = SolverConfig(tolerance=1e-14, max_iterations=300)
    assert survival_prob(2.0, tight) == pytest.approx(BETA_2, abs=1e-12)
