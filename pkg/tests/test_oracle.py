import random
from fractions import Fraction

import pytest

from macp2p.bounds import phi2, sum_rate_bound
from macp2p.channel import SystemParams
from macp2p.oracle import (JointDistribution, SearchBudget, best_linear_sum_rate,
                           enumerate_subspaces, lemma1_gap,
                           max_lemma1_gap_search)


def test_subspace_counts_are_galois_numbers():
    assert len(enumerate_subspaces(0)) == 1
    assert len(enumerate_subspaces(1)) == 2
    assert len(enumerate_subspaces(2)) == 5
    assert len(enumerate_subspaces(3)) == 16
    assert len(enumerate_subspaces(4)) == 67
    # all distinct canonical forms
    assert len(set(enumerate_subspaces(4))) == 67


def test_search_examples():
    for triple, expected in [((2, 1, 1), 2), ((2, 2, 1), 2), ((1, 1, 0), 2)]:
        res = best_linear_sum_rate(SystemParams(*triple))
        assert res.best.total == expected
        assert res.matches_bound
        assert res.complete


def test_search_returns_witness_precoders():
    from macp2p.coding import achievable_rates
    res = best_linear_sum_rate(SystemParams(3, 2, 2))
    p = SystemParams(3, 2, 2)
    assert achievable_rates(p, res.precoders).total == res.best.total


def test_search_deterministic():
    a = best_linear_sum_rate(SystemParams(3, 3, 2))
    b = best_linear_sum_rate(SystemParams(3, 3, 2))
    assert a.best == b.best
    assert a.precoders == b.precoders


def test_search_enumeration_ceiling():
    with pytest.raises(ValueError):
        best_linear_sum_rate(SystemParams(4, 4, 2),
                             SearchBudget(max_enumeration=100))


def test_randomized_search_seeded_and_bounded():
    p = SystemParams(6, 5, 3)
    budget = SearchBudget(mode="randomized", seed=42, iterations=400)
    a = best_linear_sum_rate(p, budget)
    b = best_linear_sum_rate(p, budget)
    assert a.best == b.best
    assert not a.complete
    assert a.best.total <= a.bound


def test_delta_zero_alignment_gap_finding():
    # (5,5,3) sits in the alignment range with n1 = n2.  The channel then
    # depends on the MAC senders only through X1 + X2, so any code yields
    # a two-user IC code and the sum rate is capped by the IC sum
    # capacity 6.  Exhaustive search over all column spaces confirms the
    # stated outer-bound expression (7) is not attainable.
    res = best_linear_sum_rate(SystemParams(5, 5, 3),
                               SearchBudget(max_enumeration=60_000_000))
    assert res.bound == 7
    assert res.best.total == 6
    assert res.complete


def test_align_high_bound_attained_at_small_scale():
    res = best_linear_sum_rate(SystemParams(5, 4, 3),
                               SearchBudget(max_enumeration=60_000_000))
    assert res.best.total == res.bound == 7


# -- Lemma 1 -----------------------------------------------------------------

def test_joint_distribution_validation():
    with pytest.raises(ValueError):
        JointDistribution(1, 1, ((0, Fraction(1, 2)),))
    with pytest.raises(ValueError):
        JointDistribution(1, 1, ((5, Fraction(1)),))
    d = JointDistribution.from_weights(2, 1, {0: 1, 3: 3})
    assert sum(p for _, p in d.pmf) == 1


def test_lemma1_point_masses_gap_zero():
    da = JointDistribution.point_mass(2, 2, 0b1010)
    db = JointDistribution.point_mass(3, 2, 0b110011)
    res = lemma1_gap(da, db, delta=1)
    assert res.h_top == res.h_shifted == 0.0
    assert res.holds


def test_lemma1_uniform_a_absorbs():
    da = JointDistribution.uniform(2, 2)
    rng = random.Random(1)
    db = JointDistribution.random(3, 2, rng)
    res = lemma1_gap(da, db, delta=1)
    assert abs(res.gap) < 1e-12
    assert abs(res.h_top - 4.0) < 1e-12


def test_lemma1_delta_zero_gap_exactly_zero():
    rng = random.Random(3)
    for _ in range(20):
        da = JointDistribution.random(2, 2, rng)
        db = JointDistribution.random(2, 2, rng)
        res = lemma1_gap(da, db, delta=0)
        assert res.h_top == res.h_shifted


def test_lemma1_random_instances_hold():
    rng = random.Random(20)
    for _ in range(150):
        n = rng.randint(1, 3)
        delta = rng.randint(1, 3)
        m = rng.randint(1, 3)
        da = JointDistribution.random(n, m, rng)
        db = JointDistribution.random(n + delta, m, rng)
        assert lemma1_gap(da, db, delta).holds


def test_lemma1_guard():
    da = JointDistribution.point_mass(5, 5, 0)
    db = JointDistribution.point_mass(6, 5, 0)
    with pytest.raises(ValueError):
        lemma1_gap(da, db, delta=1)


def test_max_gap_search_respects_bound():
    # phi2(1,1) = 1 and phi2(2,1) = 1: the searched gap must stay below
    res = max_lemma1_gap_search(1, 1, 1, restarts=6, steps=25, seed=5)
    assert res.bound == phi2(1, 1) == 1
    assert res.gap <= 1 + 1e-9
    res = max_lemma1_gap_search(2, 1, 1, restarts=4, steps=20, seed=6)
    assert res.bound == phi2(2, 1) == 1
    assert res.gap <= 1 + 1e-9
    assert res.gap >= 0
