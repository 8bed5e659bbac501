"""Tests for turbofunctions: embedding, visualization, instantons and canonical forms."""

import numpy as np
import pytest
from hypothesis import given

from src.errors.core import PreconditionError
from src.piecewise import CadlagFunction, Homeomorphism, TimeChange, map_sup_distance, sup_distance
from src.turbo import (
    Turbofunction,
    canonicalize,
    dense_approximation,
    embed,
    flat_sigma,
    g_theta_family,
    hat_plus,
    instantons,
    paper_limit,
    paper_sigma_theta,
    reparametrization_mass,
    reparametrize,
    right_continuous_inverse,
    sigma_delta,
    unit_constant_pair,
    visualize,
)
from src.metric import rho_plus_bounds
from src.turbo.equivalence import canonical_difference, first_difference, is_equivalent
from src.models.report import EquivalenceDecision
from tests.strategies import cadlag_functions, continuous_functions, homeomorphisms, time_changes, turbofunctions

ZERO = CadlagFunction.constant(0.0)
G4 = g_theta_family(4.0)


class TestFamilies:
    def test_limit_uses_the_quarter_bump(self):
        assert paper_limit().F == G4
        assert G4.evaluate(0.5) == 1.0

    @pytest.mark.parametrize("theta", [4.0, 8.0, 64.0])
    def test_sigma_theta_nodes(self, theta):
        assert paper_sigma_theta(theta).evaluate(0.25) == pytest.approx(0.5 - 1.0 / theta)

    @pytest.mark.parametrize("theta", [2.0, 1.0, -3.0])
    def test_theta_must_exceed_two(self, theta):
        with pytest.raises(PreconditionError):
            g_theta_family(theta)
        with pytest.raises(PreconditionError):
            paper_sigma_theta(theta)

    def test_sigma_theta_distance_to_flat(self):
        assert map_sup_distance(paper_sigma_theta(8.0), flat_sigma()) == pytest.approx(1.0 / 8.0)


class TestEmbedding:
    def test_constant(self):
        x = embed(CadlagFunction.constant(1.0))
        assert x.sigma.is_identity
        assert x.F == CadlagFunction.constant(1.0)

    def test_turbofunctions_are_immutable(self):
        x = embed(G4)
        with pytest.raises(AttributeError):
            x.F = ZERO

    @given(cadlag_functions())
    def test_visualization_of_embedding(self, f):
        assert visualize(embed(f)).is_close(f, 1e-12)

    @given(cadlag_functions())
    def test_embedded_functions_have_no_instantons(self, f):
        assert instantons(embed(f)) == []


class TestInverseAndVisualization:
    def test_inverse_of_identity(self):
        assert right_continuous_inverse(TimeChange.identity()) == CadlagFunction.ramp()

    def test_inverse_jumps_across_the_flat(self):
        inverse = right_continuous_inverse(flat_sigma())
        assert inverse.evaluate(0.5) == 0.75
        assert inverse.left_limit(0.5) == 0.25
        assert inverse.evaluate(0.3) == pytest.approx(0.15)

    @given(time_changes())
    def test_inverse_is_a_right_inverse(self, sigma):
        inverse = right_continuous_inverse(sigma)
        levels = np.union1d(np.linspace(0.0, 1.0, 257), sigma.values)
        assert np.allclose(sigma.values_at(inverse.values_at(levels)), levels, atol=1e-12)
        assert inverse.evaluate(1.0) == 1.0

    def test_limit_visualizes_to_zero(self):
        assert sup_distance(visualize(paper_limit()), ZERO) == 0.0

    @pytest.mark.parametrize("theta", [8.0, 16.0])
    def test_reparametrized_bump(self, theta):
        x = Turbofunction(G4, paper_sigma_theta(theta))
        assert sup_distance(visualize(x), g_theta_family(theta)) < 1e-12
        assert instantons(x) == []

    @given(turbofunctions(continuous=True), homeomorphisms())
    def test_equivalent_turbofunctions_visualize_alike(self, x, gamma):
        # midpoints of the 1/64 grid stay clear of the flat levels, which sit on the 1/32 grid
        levels = (np.arange(64) + 0.5) / 64.0
        expected = visualize(x).values_at(levels)
        assert np.allclose(visualize(reparametrize(x, gamma)).values_at(levels), expected, atol=1e-7)
        assert np.allclose(visualize(canonicalize(x)).values_at(levels), expected, atol=1e-7)


class TestInstantons:
    def test_limit_has_one_instanton(self):
        [item] = instantons(paper_limit())
        assert item.s == 0.5
        assert item.t_interval == (0.25, 0.75)
        assert item.value_range == (0.0, 1.0)
        assert item.length == 0.5

    def test_instantons_are_ordered_by_level(self):
        sigma = TimeChange([0.0, 0.2, 0.4, 0.6, 0.8, 1.0], [0.0, 0.3, 0.3, 0.7, 0.7, 1.0])
        x = Turbofunction(CadlagFunction.ramp(), sigma)
        found = instantons(x)
        assert [item.s for item in found] == [0.3, 0.7]
        assert found[0].value_range == pytest.approx((0.2, 0.4))

    @given(turbofunctions())
    def test_instantons_cover_the_flat_part_of_sigma(self, x):
        sigma = x.sigma
        flat = np.sum(np.diff(sigma.times)[np.diff(sigma.values) == 0.0])
        assert sum(item.length for item in instantons(x)) == pytest.approx(flat, abs=1e-12)

    @given(turbofunctions(continuous=True), homeomorphisms())
    def test_instanton_levels_survive_reparametrization(self, x, gamma):
        before = instantons(x)
        after = instantons(reparametrize(x, gamma))
        assert [item.s for item in after] == pytest.approx([item.s for item in before])
        for old, new in zip(before, after):
            assert new.value_range == pytest.approx(old.value_range, abs=1e-9)


class TestRegularization:
    def test_identity_is_fixed(self):
        assert sigma_delta(TimeChange.identity(), 0.3).is_identity

    def test_flat_time_change(self):
        regularized = sigma_delta(flat_sigma(), 0.1)
        assert np.allclose(regularized.values, [0.0, 0.475, 0.525, 1.0])
        assert regularized.is_homeomorphism

    @given(time_changes())
    def test_slopes_are_bounded_below(self, sigma):
        regularized = sigma_delta(sigma, 0.2)
        slopes = np.diff(regularized.values) / np.diff(regularized.times)
        assert np.all(slopes >= 0.2 - 1e-12)
        assert map_sup_distance(regularized, sigma) <= 0.2 + 1e-12

    @pytest.mark.parametrize("delta", [0.0, 1.0, -0.5])
    def test_delta_range(self, delta):
        with pytest.raises(PreconditionError):
            sigma_delta(flat_sigma(), delta)

    def test_dense_approximation_is_embedded(self):
        approximation = dense_approximation(paper_limit(), 0.1)
        assert approximation.sigma.is_identity
        assert instantons(approximation) == []

    def test_hat_plus_drops_the_instanton(self):
        assert hat_plus(paper_limit()) == embed(ZERO)


class TestCanonicalForms:
    def test_constant_pair_collapses(self):
        plain, paused = unit_constant_pair()
        a, b = canonicalize(plain), canonicalize(paused)
        assert canonical_difference(a, b) == 0.0
        assert b.F == CadlagFunction.constant(1.0)
        assert b.sigma.is_identity

    def test_reparametrized_bump_matches_embedding(self):
        a = canonicalize(embed(g_theta_family(8.0)))
        b = canonicalize(Turbofunction(G4, paper_sigma_theta(8.0)))
        assert canonical_difference(a, b) <= 1e-12

    def test_mass_of_the_limit(self):
        psi = reparametrization_mass(paper_limit())
        assert np.allclose(psi.values_at([0.25, 0.5, 0.75]), [1.0 / 6.0, 0.5, 5.0 / 6.0])

    def test_pinned_step_keeps_its_value(self):
        x = embed(CadlagFunction.step([0.3, 0.6], [0.0, 1.0, 0.0]))
        canonical = canonicalize(x)
        assert sorted(set(np.round(canonical.F.rights, 12))) == [0.0, 1.0]
        assert canonical.F.jump_times.size == 2

    @given(turbofunctions(continuous=True), homeomorphisms())
    def test_invariance_under_reparametrization(self, x, gamma):
        assert canonical_difference(canonicalize(x), canonicalize(reparametrize(x, gamma))) <= 1e-7

    @given(turbofunctions(continuous=True))
    def test_idempotence(self, x):
        once = canonicalize(x)
        assert canonical_difference(canonicalize(once), once) <= 1e-9

    @pytest.mark.parametrize("x", [paper_limit(), embed(CadlagFunction.step([0.5], [0.0, 1.0]))])
    def test_continuity_flag_is_preserved(self, x):
        assert canonicalize(x).is_continuous == x.is_continuous

    def test_pause_before_one_stays_pinned(self):
        x = Turbofunction(CadlagFunction.step([0.5], [0.0, 1.0]), TimeChange([0.0, 0.5, 1.0], [0.0, 1.0, 1.0]))
        canonical = canonicalize(x)
        assert canonical.F.jump_times.tolist() == pytest.approx([0.5])
        assert canonical.F.evaluate(1.0) == 1.0


class TestEquivalence:
    def test_self(self):
        report = is_equivalent(paper_limit(), paper_limit())
        assert report.decision == EquivalenceDecision.EQUIVALENT
        assert report.lower_bound is None

    def test_constant_pair(self):
        assert is_equivalent(*unit_constant_pair()).decision == EquivalenceDecision.EQUIVALENT

    def test_reparametrization(self):
        gamma = Homeomorphism([0.0, 0.25, 1.0], [0.0, 0.5, 1.0])
        x = paper_limit()
        assert is_equivalent(x, reparametrize(x, gamma)).decision == EquivalenceDecision.EQUIVALENT

    def test_reparametrized_bump(self):
        x = embed(g_theta_family(8.0))
        y = Turbofunction(G4, paper_sigma_theta(8.0))
        assert is_equivalent(x, y).decision == EquivalenceDecision.EQUIVALENT

    def test_zero_against_the_limit(self):
        report = is_equivalent(embed(ZERO), paper_limit())
        assert report.decision == EquivalenceDecision.NOT_EQUIVALENT
        assert report.lower_bound >= 0.4
        assert report.upper_bound >= report.lower_bound

    def test_pause_after_the_last_jump_is_not_a_jump_at_one(self):
        x = Turbofunction(CadlagFunction.step([0.5], [0.0, 1.0]), TimeChange([0.0, 0.5, 1.0], [0.0, 1.0, 1.0]))
        y = embed(CadlagFunction([(0.0, 0.0, 0.0), (1.0, 0.0, 1.0)]))
        assert canonical_difference(canonicalize(x), canonicalize(y)) > 1e-9
        report = is_equivalent(x, y)
        assert report.decision == EquivalenceDecision.NOT_EQUIVALENT
        certificate = rho_plus_bounds(x, y, 1e-4)
        assert certificate.lower >= 0.99
        assert certificate.upper <= 1.0 + 1e-4

    def test_report_names_the_first_differing_node(self):
        report = is_equivalent(embed(ZERO), paper_limit())
        difference = report.first_difference
        assert difference.component == "F"
        assert difference.index == 1
        assert difference.x_node == (1.0, 0.0, 0.0)
        assert difference.y_node[0] < 1.0

    def test_first_difference_past_the_shorter_form(self):
        x = embed(ZERO)
        y = Turbofunction(ZERO, TimeChange([0.0, 0.5, 1.0], [0.0, 0.25, 1.0]))
        difference = first_difference(x, y, 1e-9)
        assert (difference.component, difference.index) == ("sigma", 1)
        assert difference.x_node == (1.0, 1.0)
        assert first_difference(x, x, 1e-9) is None
