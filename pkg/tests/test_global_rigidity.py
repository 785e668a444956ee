import pytest

from errors import GraphInputError, HypothesisError
from graphs.generators import complete_graph, complete_minus_edge, cycle_graph, path_graph, wheel_graph
from graphs.graph_core import cone
from linalg.field import apply, matmul
from linalg.framework import sample_framework
from rigidity.global_rigidity import (
    Decision, StressVector, hendrickson_check, is_globally_rigid, is_h_graph, is_stress,
    random_stress, replay_certificate, stress_certificate, stress_matrix, stress_space_basis,
)
from settings import GLOBAL_TRIALS, MODULUS_ALT


# ── Stresses ─────────────────────────────────────────────

def test_independent_graph_has_no_stress():
    fw = sample_framework(complete_minus_edge(5), 3, seed=0)
    assert stress_space_basis(fw) == []


@pytest.mark.parametrize("g, d", [(complete_graph(4), 2), (cycle_graph(4), 1)])
def test_circuit_stress_is_nowhere_zero(g, d):
    fw = sample_framework(g, d, seed=1)
    (omega,) = stress_space_basis(fw)
    assert len(omega.support()) == g.m
    assert is_stress(fw, omega.values)


def test_cycle_stress_on_the_line_has_equal_tension():
    c4 = cycle_graph(4)
    fw = sample_framework(c4, 1, seed=3)
    (omega,) = stress_space_basis(fw)
    p = [pt[0] for pt in fw.points]
    q = fw.modulus
    force = {(u, v): w * (p[v] - p[u]) % q for (u, v), w in zip(c4.edges, omega.values)}
    # walking 0-1-2-3-0 the tension is constant; (0, 3) is walked backwards
    walk = {force[(0, 1)], force[(1, 2)], force[(2, 3)], -force[(0, 3)] % q}
    assert len(walk) == 1
    assert walk != {0}


def test_stress_basis_vectors_are_stresses(k55):
    fw = sample_framework(k55, 3, seed=2)
    basis = stress_space_basis(fw)
    assert len(basis) == k55.m - 24
    assert all(is_stress(fw, s.values) for s in basis)


def test_zero_stress_gives_zero_matrix(k4):
    fw = sample_framework(k4, 2, seed=0)
    zero = StressVector((0,) * k4.m, 2, fw.seed, fw.modulus)
    assert zero.is_zero()
    assert stress_matrix(fw, zero).matrix.is_zero()


def test_k4_stress_matrix_rank_one(k4):
    fw = sample_framework(k4, 2, seed=3)
    omega = random_stress(fw, seed=4)
    assert stress_matrix(fw, omega).rank() == 1


@pytest.mark.parametrize("g, d", [(complete_graph(6), 3), (wheel_graph(6), 2), (complete_graph(5), 2)])
def test_stress_matrix_invariants(g, d):
    fw = sample_framework(g, d, seed=5)
    omega = stress_matrix(fw, random_stress(fw, seed=6))
    # row sums vanish
    assert not any(apply(omega.matrix, (1,) * g.n))
    assert matmul(omega.matrix, fw.coordinate_matrix()).is_zero()
    assert omega.rank() <= g.n - d - 1


def test_stress_matrix_rejects_non_stress(k4):
    fw = sample_framework(k4, 2, seed=0)
    bogus = StressVector((1,) + (0,) * (k4.m - 1), 2, fw.seed, fw.modulus)
    with pytest.raises(GraphInputError):
        stress_matrix(fw, bogus)


# ── Global rigidity ──────────────────────────────────────

@pytest.mark.parametrize("d", [1, 2, 3])
def test_complete_graphs_are_globally_rigid(d):
    verdict = is_globally_rigid(complete_graph(d + 2), d)
    assert verdict.decision == Decision.GLOBALLY_RIGID
    assert verdict.globally_rigid


def test_certificate_replays(k5):
    verdict = is_globally_rigid(k5, 3)
    cert = verdict.certificate
    assert cert.rank == k5.n - 3 - 1
    assert replay_certificate(k5, 3, cert) == cert.rank
    assert verdict.as_dict()["certificate"]["framework_seed"] == cert.framework_seed


def test_wheel_is_globally_rigid_in_plane():
    assert is_globally_rigid(cone(cycle_graph(5)), 2).decision == Decision.GLOBALLY_RIGID


def test_ring6_not_globally_rigid(ring6):
    verdict = is_globally_rigid(ring6, 3)
    assert verdict.decision == Decision.NOT_GLOBALLY_RIGID
    assert verdict.certificate is None
    assert verdict.trials_used == GLOBAL_TRIALS
    assert all(r < ring6.n - 4 for r in verdict.trial_ranks)
    assert verdict.failure_probability_note


def test_k55_not_globally_rigid(k55):
    assert is_globally_rigid(k55, 3).decision == Decision.NOT_GLOBALLY_RIGID


def test_small_graphs_decided_by_completeness():
    assert is_globally_rigid(complete_graph(3), 3).decision == Decision.TRIVIALLY_RIGID_SMALL
    assert is_globally_rigid(path_graph(3), 3).decision == Decision.NOT_GLOBALLY_RIGID


def test_line_uses_biconnectivity():
    assert is_globally_rigid(cycle_graph(6), 1).method == "connectivity"
    assert is_globally_rigid(cycle_graph(6), 1).globally_rigid
    assert not is_globally_rigid(path_graph(5), 1).globally_rigid


def test_stress_test_needs_d_plus_2_vertices(k4):
    with pytest.raises(HypothesisError):
        stress_certificate(k4, 3)


def test_confirmation_under_second_modulus(k5):
    verdict = is_globally_rigid(k5, 3, confirm=True)
    assert verdict.confirmed is True


def test_verdict_is_deterministic(ring6):
    a = is_globally_rigid(ring6, 3, seed=9, modulus=MODULUS_ALT).as_dict()
    b = is_globally_rigid(ring6, 3, seed=9, modulus=MODULUS_ALT).as_dict()
    assert a == b


# ── Hendrickson and H-graphs ─────────────────────────────

def test_k55_passes_hendrickson(k55):
    report = hendrickson_check(k55, 3)
    assert report.connectivity == 5
    assert report.passes_hendrickson


def test_figure1_fails_hendrickson(figure1):
    report = hendrickson_check(figure1, 3)
    assert report.connectivity == 3
    assert not report.is_d_plus_1_connected
    assert not report.passes_hendrickson


def test_hendrickson_hypothesis(k4):
    with pytest.raises(HypothesisError):
        hendrickson_check(k4, 3)


def test_h_graphs(k55, k5):
    assert is_h_graph(k55, 3)
    assert not is_h_graph(k5, 3)


def test_cone_of_h_graph_is_h_graph(k55):
    assert is_h_graph(cone(k55), 4)


@pytest.mark.slow
def test_figure2a_is_h_graph(figure2a):
    report = hendrickson_check(figure2a, 3)
    assert report.connectivity == 4
    assert report.passes_hendrickson
    assert is_h_graph(figure2a, 3)
