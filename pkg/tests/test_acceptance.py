"""End-to-end checks of the worked examples: bump families, their limit and the constant pair."""

from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings

from src.completion import CauchySequence, cauchy_limit, pointwise_check
from src.metric import rho_bounds, rho_plus_bounds, rho_step_exact
from src.models.report import EquivalenceDecision, PointClass
from src.piecewise import CadlagFunction, sup_distance
from src.turbo import embed, g_theta_family, instantons, paper_limit, unit_constant_pair, visualize
from src.turbo.equivalence import is_equivalent
from tests.oracles import step_distance_oracle
from tests.strategies import step_functions, turbofunctions

THETAS = (4.0, 8.0, 16.0, 32.0, 64.0)


@pytest.mark.slow
@pytest.mark.parametrize("theta_1, theta_2", list(combinations(THETAS, 2)))
def test_bump_pairs_are_within_the_width_difference(theta_1, theta_2):
    certificate = rho_bounds(g_theta_family(theta_1), g_theta_family(theta_2), 1e-4)
    assert certificate.upper <= abs(1.0 / theta_1 - 1.0 / theta_2) + 1e-4


@pytest.mark.slow
@pytest.mark.parametrize("theta", THETAS)
def test_bumps_approach_the_flat_limit(theta):
    certificate = rho_plus_bounds(embed(g_theta_family(theta)), paper_limit(), 1e-4)
    assert certificate.upper <= 1.0 / theta + 1e-4


@pytest.mark.slow
@settings(max_examples=100)
@given(step_functions(max_jumps=7), step_functions(max_jumps=7))
def test_embedding_preserves_step_distances(f, g):
    exact = rho_step_exact(f, g).lower
    certificate = rho_plus_bounds(embed(f), embed(g), 1e-5)
    assert certificate.brackets(exact, 1e-9)
    assert certificate.gap <= 1e-5


@pytest.mark.slow
@settings(max_examples=50)
@given(step_functions(grid=8), step_functions(grid=8))
def test_step_distances_match_the_grid_brute_force(f, g):
    grid_minimum, slack = step_distance_oracle(f, g)
    exact = rho_step_exact(f, g).lower
    assert exact <= grid_minimum + 1e-9 <= exact + slack + 2e-9
    certificate = rho_bounds(f, g, 1e-5)
    assert certificate.lower <= grid_minimum + 1e-9
    assert grid_minimum <= certificate.upper + slack + 1e-9


@pytest.mark.slow
@settings(max_examples=100)
@given(turbofunctions(), turbofunctions(), turbofunctions())
def test_triangle_inequality(x, y, z):
    tol = 1e-3
    assert rho_plus_bounds(x, z, tol).lower <= (
        rho_plus_bounds(x, y, tol).upper + rho_plus_bounds(y, z, tol).upper + 1e-9
    )


def test_paused_constant_is_equivalent_to_the_constant():
    plain, paused = unit_constant_pair()
    assert is_equivalent(plain, paused).decision == EquivalenceDecision.EQUIVALENT
    assert rho_plus_bounds(plain, paused, 1e-6).upper <= 1e-6


@pytest.mark.slow
def test_limit_of_the_bump_family():
    items = [embed(g_theta_family(2.0 ** k)) for k in range(2, 11)]
    report = cauchy_limit(CauchySequence.build(items, 1e-3), 1e-3)
    assert report.continuous
    assert rho_plus_bounds(report.limit, paper_limit(), 1e-3).upper <= 2e-3


def test_visualization_of_the_limit_is_zero():
    limit = paper_limit()
    v = visualize(limit)
    assert np.max(np.abs(v.values_at(np.linspace(0.0, 1.0, 257)))) <= 1e-12
    found = instantons(limit)
    assert [item.s for item in found] == [0.5]
    assert found[0].value_range == (0.0, 1.0)


def test_pointwise_behaviour_along_the_bumps():
    seq = CauchySequence([embed(g_theta_family(theta)) for theta in THETAS], [0.0] * (len(THETAS) - 1))
    good_times = [0.1, 0.25, 0.4, 0.75, 1.0]
    report = pointwise_check(seq, paper_limit(), good_times + [0.5], tol=1e-6)
    assert report.entry(0.5).classification == PointClass.EXCEPTIONAL
    for s in good_times:
        entry = report.entry(s)
        assert entry.classification in (PointClass.GOOD, PointClass.ENDPOINT_1)
        assert entry.decreasing
        assert entry.converged
        assert entry.tail_max <= 1e-6


def test_zero_is_far_from_the_limit_but_shares_its_visualization():
    zero = embed(CadlagFunction.constant(0.0))
    limit = paper_limit()
    assert sup_distance(visualize(zero), visualize(limit)) == 0.0
    assert is_equivalent(zero, limit).decision == EquivalenceDecision.NOT_EQUIVALENT
