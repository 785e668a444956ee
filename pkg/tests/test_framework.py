import pytest

from errors import GraphInputError
from graphs.generators import complete_graph, empty_graph
from linalg.framework import Framework, sample_framework, trial_seeds
from settings import MODULUS, MODULUS_ALT


def test_sampling_is_deterministic(k5):
    assert sample_framework(k5, 3, seed=7) == sample_framework(k5, 3, seed=7)


def test_distinct_seeds_give_distinct_points(k5):
    a = sample_framework(k5, 3, seed=1)
    b = sample_framework(k5, 3, seed=2)
    assert sorted(a.points) != sorted(b.points)


def test_points_lie_in_the_field():
    fw = sample_framework(complete_graph(6), 4, seed=0, modulus=MODULUS_ALT)
    assert all(0 <= x < MODULUS_ALT for pt in fw.points for x in pt)
    assert fw.coordinate_matrix().rows == 6
    assert fw.coordinate_matrix().cols == 4


def test_empty_framework():
    fw = sample_framework(empty_graph(0), 2, seed=0)
    assert fw.points == ()


def test_dimension_must_be_positive(k5):
    with pytest.raises(GraphInputError):
        sample_framework(k5, 0, seed=0)


def test_framework_validates_points(k4):
    with pytest.raises(GraphInputError):
        Framework(k4, 2, ((0, 0),) * 3, seed=0, modulus=MODULUS)
    with pytest.raises(GraphInputError):
        Framework(k4, 2, ((0, 0, 0),) * 4, seed=0, modulus=MODULUS)


def test_trial_seeds_are_stable_and_distinct():
    seeds = trial_seeds(0, 5)
    assert seeds == trial_seeds(0, 5)
    assert len(set(seeds)) == 5
    # spawning is prefix-stable
    assert trial_seeds(0, 3) == seeds[:3]
    assert trial_seeds(1, 5) != seeds
