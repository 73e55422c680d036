import random
from fractions import Fraction

import pytest

from macp2p.bounds import floor_div, phi1, phi2, sum_rate_bound
from macp2p.channel import Branch, SystemParams, classify


def test_floor_div_examples():
    assert floor_div(7, 2) == 3
    assert floor_div(5, 0) == 0
    assert floor_div(Fraction(1, 2), Fraction(1, 5)) == 2
    assert floor_div(0, 0) == 0
    with pytest.raises(ValueError):
        floor_div(-1, 2)


def test_phi1_examples():
    assert phi1(2, 1) == 2          # l = 2 even: 1 + 2*1/2
    assert phi1(0, 7) == 7          # l = 0 even
    assert phi1(5, 0) == 0          # q = 0
    assert phi1(3, 2) == 3          # l = 1 odd: 3 - 0
    assert phi1(Fraction(1, 2), Fraction(1, 5)) == Fraction(2, 5)


def test_phi2_examples():
    assert phi2(8, 2) == 4          # l = 4 even: 8 - 4
    assert phi2(7, 2) == 4          # l = 3 odd: 4*2/2
    assert phi2(5, 0) == 5
    assert phi2(0, 9) == 0
    assert phi2(Fraction(1, 4), Fraction(1, 5)) == Fraction(1, 5)


def random_rational(rng, max_num=60, max_den=12):
    return Fraction(rng.randint(0, max_num), rng.randint(1, max_den))


def test_phi_sum_identity_and_scaling():
    rng = random.Random(13)
    for _ in range(500):
        p = random_rational(rng)
        q = random_rational(rng)
        if rng.random() < 0.1:
            q = Fraction(0)
        assert phi1(p, q) + phi2(p, q) == p + q
        c = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        assert phi1(c * p, c * q) == c * phi1(p, q)
        assert phi2(c * p, c * q) == c * phi2(p, q)
        assert 0 <= phi1(p, q) <= p + q
        assert 0 <= phi2(p, q) <= p + q


# Hand-derived regression table: (n1, n2, ni) -> (branch, bound).
# Each value evaluated by hand from the branch formula; several are
# cross-checked against the exhaustive search oracle in test_oracle.
BOUND_TABLE = [
    # Weak: n1 + n2 - 2 ni + phi1(ni, delta)
    ((5, 4, 2), Branch.WEAK, 7),
    ((2, 2, 1), Branch.WEAK, 2),
    ((7, 5, 3), Branch.WEAK, 9),
    ((6, 5, 3), Branch.WEAK, 7),
    ((8, 8, 4), Branch.WEAK, 8),
    ((10, 9, 4), Branch.WEAK, 14),
    ((12, 10, 5), Branch.WEAK, 16),
    ((11, 8, 4), Branch.WEAK, 15),
    ((30, 25, 11), Branch.WEAK, 43),
    ((9, 7, 0), Branch.WEAK, 18),
    ((1, 1, 0), Branch.WEAK, 2),
    ((4, 3, 2), Branch.WEAK, 5),
    # AlignLow: 2 ni + phi2(n2 - ni, delta)
    ((7, 5, 4), Branch.ALIGN_LOW, 9),
    ((9, 7, 5), Branch.ALIGN_LOW, 12),
    ((13, 11, 7), Branch.ALIGN_LOW, 16),
    ((15, 13, 8), Branch.ALIGN_LOW, 19),
    ((16, 12, 9), Branch.ALIGN_LOW, 21),
    ((24, 18, 13), Branch.ALIGN_LOW, 31),
    ((28, 22, 15), Branch.ALIGN_LOW, 36),
    ((30, 26, 16), Branch.ALIGN_LOW, 38),
    ((14, 10, 8), Branch.ALIGN_LOW, 18),
    ((18, 14, 10), Branch.ALIGN_LOW, 24),
    ((21, 15, 12), Branch.ALIGN_LOW, 27),
    ((12, 8, 7), Branch.ALIGN_LOW, 15),
    # AlignHigh: 2 ni + phi2(2 n1 - 3 ni, delta)
    ((23, 21, 13), Branch.ALIGN_HIGH, 30),
    ((12, 11, 7), Branch.ALIGN_HIGH, 16),
    ((5, 4, 3), Branch.ALIGN_HIGH, 7),
    ((10, 8, 6), Branch.ALIGN_HIGH, 14),
    ((15, 12, 9), Branch.ALIGN_HIGH, 21),
    ((16, 14, 9), Branch.ALIGN_HIGH, 21),
    ((30, 28, 17), Branch.ALIGN_HIGH, 39),
    ((8, 6, 5), Branch.ALIGN_HIGH, 11),
    ((17, 15, 11), Branch.ALIGN_HIGH, 23),
    ((24, 22, 14), Branch.ALIGN_HIGH, 32),
    ((20, 16, 12), Branch.ALIGN_HIGH, 28),
    # StrongIC: min(2 n1, max(n1, ni) + (n1 - ni)^+)
    ((4, 4, 3), Branch.STRONG_IC, 5),
    ((3, 3, 2), Branch.STRONG_IC, 4),
    ((6, 5, 4), Branch.STRONG_IC, 8),
    ((9, 8, 6), Branch.STRONG_IC, 12),
    ((10, 9, 7), Branch.STRONG_IC, 13),
    ((30, 29, 21), Branch.STRONG_IC, 39),
    ((12, 12, 8), Branch.STRONG_IC, 16),
    # MacSilencedIC: min(2 n1, max(n1, ni) + (n1-ni)^+, 2 max(ni, (n1-ni)^+))
    ((4, 1, 2), Branch.MAC_SILENCED_IC, 4),
    ((2, 1, 1), Branch.MAC_SILENCED_IC, 2),
    ((5, 2, 4), Branch.MAC_SILENCED_IC, 6),
    ((4, 2, 5), Branch.MAC_SILENCED_IC, 5),
    ((3, 1, 7), Branch.MAC_SILENCED_IC, 6),
    ((6, 3, 3), Branch.MAC_SILENCED_IC, 6),
    ((10, 4, 18), Branch.MAC_SILENCED_IC, 18),
    ((8, 0, 3), Branch.MAC_SILENCED_IC, 10),
    ((30, 10, 12), Branch.MAC_SILENCED_IC, 36),
    ((7, 3, 4), Branch.MAC_SILENCED_IC, 8),
    ((5, 5, 9), Branch.MAC_SILENCED_IC, 9),
    ((6, 6, 13), Branch.MAC_SILENCED_IC, 12),
]


def test_bound_regression_table():
    assert len(BOUND_TABLE) >= 30
    seen = set()
    for (triple, branch, value) in BOUND_TABLE:
        p = SystemParams(*triple)
        b = sum_rate_bound(p)
        assert b.regime.branch is branch, triple
        assert b.value == value, (triple, b.value, value)
        seen.add(branch)
    assert seen == set(Branch)


def test_mac_silenced_cap_recorded():
    b = sum_rate_bound(SystemParams(3, 1, 7))
    assert b.value == 6  # capped at 2*n1
    assert b.terms["uncapped"] == 7


def test_bound_never_exceeds_2n1():
    for n1 in range(1, 16):
        for n2 in range(0, n1 + 1):
            for ni in range(0, 2 * n1 + 1):
                assert sum_rate_bound(SystemParams(n1, n2, ni)).value <= 2 * n1


def test_bound_scale_equivariance():
    rng = random.Random(17)
    for _ in range(200):
        n1 = rng.randint(1, 12)
        n2 = rng.randint(0, n1)
        ni = rng.randint(0, 2 * n1)
        c = rng.randint(2, 4)
        assert sum_rate_bound(SystemParams(c * n1, c * n2, c * ni)).value == \
            c * sum_rate_bound(SystemParams(n1, n2, ni)).value


def test_weak_branch_matches_closed_form():
    # for 2 ni <= n2 the Weak value is the weak-interference expression
    for n1 in range(1, 14):
        for n2 in range(0, n1 + 1):
            for ni in range(0, n2 // 2 + 1):
                p = SystemParams(n1, n2, ni)
                if classify(p).branch is not Branch.WEAK:
                    continue
                expected = n1 + n2 - 2 * ni + phi1(ni, n1 - n2)
                assert sum_rate_bound(p).value == expected
