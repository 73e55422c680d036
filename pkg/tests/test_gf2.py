import random

import pytest

from macp2p.gf2 import BitMatrix, hstack, rank, rows_slice, shift_apply, vstack


def brute_rank(m: BitMatrix) -> int:
    """Independent rank oracle: span size by enumerating all XOR combos."""
    span = {0}
    for col in m.columns():
        span |= {v ^ col for v in span}
    size = len(span)
    return size.bit_length() - 1


def random_matrix(rng, rows, cols):
    return BitMatrix(rows, [rng.randrange(1 << rows) for _ in range(cols)])


def test_rank_identity_and_zero():
    assert rank(BitMatrix.identity(3)) == 3
    assert rank(BitMatrix.zeros(4, 2)) == 0
    assert rank(BitMatrix(0, [])) == 0
    assert rank(BitMatrix.zeros(0, 3)) == 0


def test_rank_small_example():
    # brute_rank gives 2 for this matrix; frozen
    m = BitMatrix.from_rows([[1, 1], [1, 1], [0, 1]])
    assert brute_rank(m) == 2
    assert rank(m) == 2


def test_rank_matches_brute_force_up_to_5x5():
    rng = random.Random(7)
    for _ in range(300):
        rows = rng.randint(0, 5)
        cols = rng.randint(0, 5)
        m = random_matrix(rng, rows, cols)
        assert rank(m) == brute_rank(m)


def test_shift_examples():
    m = BitMatrix.from_rows([[1], [0], [1]])
    assert shift_apply(0, m) == m
    assert shift_apply(3, m).is_zero()
    assert shift_apply(5, m).is_zero()  # k past the row count is allowed
    assert shift_apply(1, m) == BitMatrix.from_rows([[0], [1], [0]])


def test_shift_composition():
    rng = random.Random(11)
    for _ in range(50):
        m = random_matrix(rng, rng.randint(1, 8), rng.randint(1, 4))
        k1, k2 = rng.randint(0, 5), rng.randint(0, 5)
        assert shift_apply(k1, shift_apply(k2, m)) == shift_apply(k1 + k2, m)


def test_stack_and_slice():
    a = BitMatrix.from_rows([[1, 0]])
    b = BitMatrix.from_rows([[0, 1]])
    stacked = vstack(a, b)
    assert stacked.to_rows() == [[1, 0], [0, 1]]
    assert rows_slice(stacked, 1, stacked.rows) == stacked
    assert rows_slice(stacked, 2, 2) == b
    assert hstack(a, b).to_rows() == [[1, 0, 0, 1]]
    assert rank(hstack(stacked, stacked)) == rank(stacked)


def test_stack_errors():
    a = BitMatrix.identity(2)
    b = BitMatrix.identity(3)
    with pytest.raises(ValueError):
        hstack(a, b)
    with pytest.raises(ValueError):
        vstack(a, BitMatrix.zeros(2, 3))
    with pytest.raises(ValueError):
        rows_slice(a, 0, 1)
    with pytest.raises(ValueError):
        rows_slice(a, 2, 1)


def test_rank_bounds_under_hstack():
    rng = random.Random(3)
    for _ in range(100):
        rows = rng.randint(1, 7)
        a = random_matrix(rng, rows, rng.randint(0, 4))
        b = random_matrix(rng, rows, rng.randint(0, 4))
        r = rank(hstack(a, b))
        assert r <= rank(a) + rank(b)
        assert r >= max(rank(a), rank(b))


def test_rank_invariant_under_column_ops():
    rng = random.Random(5)
    for _ in range(100):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(2, 5))
        cols = list(m.columns())
        rng.shuffle(cols)
        i, j = rng.sample(range(len(cols)), 2)
        cols[i] ^= cols[j]  # add one column into another
        assert rank(BitMatrix(m.rows, cols)) == rank(m)


def test_xor_and_entry_access():
    a = BitMatrix.from_rows([[1, 0], [0, 1]])
    assert (a ^ a).is_zero()
    assert a.entry(1, 1) == 1 and a.entry(1, 2) == 0
    with pytest.raises(IndexError):
        a.entry(3, 1)


def test_empty_matrices_are_first_class():
    empty_cols = BitMatrix(3, [])
    assert empty_cols.cols == 0
    assert rank(empty_cols) == 0
    wide = hstack(empty_cols, BitMatrix.identity(3))
    assert rank(wide) == 3
