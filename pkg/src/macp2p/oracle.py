"""Independent ground truth: precoder search and exact entropy checks.

The search enumerates precoders by column space only.  The rank-rate
formulas depend on nothing but the three column spans, so maximizing
over canonical subspace triples is exhaustive over all linear precoders
while shrinking the space by orders of magnitude.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .bounds import phi2, sum_rate_bound
from .channel import SystemParams
from .coding import PrecoderTriple, RateTriple, achievable_rates
from .gf2 import BitMatrix


# ---------------------------------------------------------------------------
# Canonical subspace enumeration


def canonical_basis(vectors: Iterable[int]) -> Tuple[int, ...]:
    """Reduced echelon basis of the span, as a sorted tuple (canonical)."""
    basis: List[int] = []
    for v in vectors:
        for b in basis:
            if v & (b & -b):
                v ^= b
        if v:
            basis.append(v)
    # back-eliminate so each pivot appears in exactly one vector
    for i, b in enumerate(basis):
        low = b & -b
        for j in range(len(basis)):
            if j != i and basis[j] & low:
                basis[j] ^= b
    return tuple(sorted(basis))


def enumerate_subspaces(n: int) -> List[Tuple[int, ...]]:
    """All subspaces of F2^n as canonical bases (Galois-number many)."""
    out: List[Tuple[int, ...]] = [()]
    rows = list(range(n))
    for k in range(1, n + 1):
        for pivots in itertools.combinations(rows, k):
            pivot_set = set(pivots)
            free_positions = [
                [r for r in range(p + 1, n) if r not in pivot_set]
                for p in pivots
            ]
            # every assignment of free bits gives one subspace
            choices = [range(1 << len(fp)) for fp in free_positions]
            for combo in itertools.product(*choices):
                basis = []
                for p, fp, bits in zip(pivots, free_positions, combo):
                    v = 1 << p
                    for idx, r in enumerate(fp):
                        if (bits >> idx) & 1:
                            v |= 1 << r
                    basis.append(v)
                out.append(tuple(sorted(basis)))
    return out


def subspace_count(n: int) -> int:
    return len(enumerate_subspaces(n)) if n <= 6 else sum(
        _gaussian_binomial(n, k) for k in range(n + 1))


def _gaussian_binomial(n: int, k: int) -> int:
    num = den = 1
    for i in range(k):
        num *= (1 << (n - i)) - 1
        den *= (1 << (k - i)) - 1
    return num // den


def _shift_span(basis: Sequence[int], k: int, q: int) -> Tuple[int, ...]:
    mask = (1 << q) - 1
    return canonical_basis(((v << k) & mask) for v in basis)


def _sum_dim(a: Sequence[int], b: Sequence[int]) -> int:
    basis = list(a)
    dim = len(basis)
    for v in b:
        for x in basis:
            if v & (x & -x):
                v ^= x
        if v:
            basis.append(v)
            dim += 1
    return dim


# ---------------------------------------------------------------------------
# Search budget and result record


@dataclass(frozen=True)
class SearchBudget:
    mode: str = "exhaustive"          # exhaustive | randomized
    seed: int = 0
    max_enumeration: int = 2_000_000  # ceiling on |L1|*|L2|*|L3|
    iterations: int = 20000           # randomized mode samples
    time_limit: float = 600.0


@dataclass(frozen=True)
class SearchResult:
    params: tuple
    best: RateTriple
    precoders: PrecoderTriple
    bound: int
    complete: bool

    @property
    def matches_bound(self) -> bool:
        return self.best.total == self.bound


class SpanIndex:
    """Interns canonical bases and memoizes pairwise sum dimensions."""

    def __init__(self) -> None:
        self.ids: Dict[Tuple[int, ...], int] = {}
        self.bases: List[Tuple[int, ...]] = []
        self._sum_cache: Dict[Tuple[int, int], Tuple[int, int]] = {}

    def intern(self, basis: Tuple[int, ...]) -> int:
        got = self.ids.get(basis)
        if got is None:
            got = len(self.bases)
            self.ids[basis] = got
            self.bases.append(basis)
        return got

    def sum_id_dim(self, i: int, j: int) -> Tuple[int, int]:
        key = (i, j)
        got = self._sum_cache.get(key)
        if got is None:
            merged = canonical_basis(self.bases[i] + self.bases[j])
            got = (self.intern(merged), len(merged))
            self._sum_cache[key] = got
        return got


def _search_exhaustive(p: SystemParams, budget: SearchBudget) -> SearchResult:
    q = p.q
    assert q is not None
    bound = int(sum_rate_bound(p).value)
    sub1 = enumerate_subspaces(p.n1)
    sub2 = enumerate_subspaces(p.n2)
    sub3 = enumerate_subspaces(p.n1)
    total = len(sub1) * len(sub2) * len(sub3)
    if total > budget.max_enumeration:
        raise ValueError(
            f"exhaustive search over {total} subspace triples exceeds the "
            f"enumeration ceiling {budget.max_enumeration}")

    idx = SpanIndex()
    # received-side spans of each candidate precoder space
    a_of = [idx.intern(_shift_span(s, q - p.n1, q)) for s in sub1]
    b_of = [idx.intern(_shift_span(s, q - p.n2, q)) for s in sub2]
    c_of = [idx.intern(_shift_span(s, q - p.ni, q)) for s in sub3]
    d_of = [idx.intern(_shift_span(s, q - p.ni, q)) for s in sub1]
    e_of = [idx.intern(_shift_span(s, q - p.ni, q)) for s in sub2]
    f_of = [idx.intern(_shift_span(s, q - p.n1, q)) for s in sub3]

    n3 = len(sub3)
    c_ids = np.fromiter((c for c in c_of), dtype=np.int64, count=n3)
    f_ids = np.fromiter((f for f in f_of), dtype=np.int64, count=n3)

    # dim tables indexed [interned span id][k] built lazily per row
    table_cache: Dict[Tuple[int, int], np.ndarray] = {}

    def dim_row(span_id: int, other_ids: np.ndarray, tag: int) -> np.ndarray:
        key = (tag, span_id)
        row = table_cache.get(key)
        if row is None:
            row = np.fromiter(
                (idx.sum_id_dim(span_id, int(o))[1] for o in other_ids),
                dtype=np.int16, count=len(other_ids))
            table_cache[key] = row
        return row

    best_total = -1
    best_triple = (0, 0, 0)
    for i, _ in enumerate(sub1):
        a_id = a_of[i]
        d_id = d_of[i]
        ac_row = dim_row(a_id, c_ids, 0)
        for j, _ in enumerate(sub2):
            ab_id, _ = idx.sum_id_dim(a_id, b_of[j])
            de_id, de_dim = idx.sum_id_dim(d_id, e_of[j])
            abc = dim_row(ab_id, c_ids, 0).astype(np.int32)
            bc = dim_row(b_of[j], c_ids, 0)
            defd = dim_row(de_id, f_ids, 1)
            totals = 2 * abc - bc - ac_row + defd - de_dim
            k = int(np.argmax(totals))
            if int(totals[k]) > best_total:
                best_total = int(totals[k])
                best_triple = (i, j, k)

    i, j, k = best_triple
    v = PrecoderTriple(
        BitMatrix(q, sub1[i]), BitMatrix(q, sub2[j]), BitMatrix(q, sub3[k]))
    rates = achievable_rates(p, v)
    assert rates.total == best_total
    assert best_total <= bound, (
        f"search exceeded the outer bound at {p.as_tuple()}: "
        f"{best_total} > {bound}")
    return SearchResult(p.as_tuple(), rates, v, bound, complete=True)


def _search_randomized(p: SystemParams, budget: SearchBudget) -> SearchResult:
    q = p.q
    assert q is not None
    bound = int(sum_rate_bound(p).value)
    rng = random.Random(budget.seed)
    deadline = time.monotonic() + budget.time_limit

    def sample_cols(max_rows: int) -> List[int]:
        k = rng.randint(0, max_rows)
        cols = []
        for _ in range(k):
            r = rng.randint(1, max_rows)
            col = 1 << (r - 1)
            if rng.random() < 0.4:  # doubled level, the known-optimal motif
                r2 = rng.randint(1, max_rows)
                col |= 1 << (r2 - 1)
            cols.append(col)
        return cols

    best: RateTriple | None = None
    best_v: PrecoderTriple | None = None
    for _ in range(budget.iterations):
        if time.monotonic() > deadline:
            break
        v = PrecoderTriple(
            BitMatrix(q, sample_cols(p.n1)),
            BitMatrix(q, sample_cols(p.n2) if p.n2 else []),
            BitMatrix(q, sample_cols(p.n1)),
        )
        r = achievable_rates(p, v)
        if best is None or r.total > best.total:
            best, best_v = r, v
            if r.total == bound:
                break
    assert best is not None and best_v is not None
    assert best.total <= bound
    return SearchResult(p.as_tuple(), best, best_v, bound, complete=False)


def best_linear_sum_rate(p: SystemParams,
                         budget: SearchBudget = SearchBudget()) -> SearchResult:
    """Maximum rank-rate sum over all precoder triples.

    Exhaustive mode enumerates column spaces in canonical form and is
    deterministic; randomized mode is seeded best-effort sampling.
    """
    if p.n1 <= 0:
        raise ValueError("search needs n1 > 0")
    if budget.mode == "exhaustive":
        return _search_exhaustive(p, budget)
    if budget.mode == "randomized":
        return _search_randomized(p, budget)
    raise ValueError(f"unknown search mode {budget.mode!r}")


# ---------------------------------------------------------------------------
# Lemma-1 exact entropy checker
#
# A and B are independent random matrices over F2 (n x m and (n+D) x m);
# the checker compares H(A + B[1:n]) with H(A + B[D+1:n+D]) exactly and
# tests the gap against m * phi2(n, D).


@dataclass(frozen=True)
class JointDistribution:
    """Exact distribution over r x m binary matrices.

    Matrices are encoded row-major into integers: bit (i*m + j) is the
    entry of (0-based) row i, column j.  Probabilities are Fractions
    summing to one; the support may be sparse.
    """

    rows: int
    cols: int
    pmf: tuple  # tuple of (encoded matrix, Fraction probability)

    def __post_init__(self) -> None:
        total = Fraction(0)
        limit = 1 << (self.rows * self.cols)
        for outcome, prob in self.pmf:
            if not (0 <= outcome < limit):
                raise ValueError("outcome outside the matrix space")
            if prob < 0:
                raise ValueError("negative probability")
            total += prob
        if total != 1:
            raise ValueError(f"probabilities sum to {total}, not 1")

    @classmethod
    def from_weights(cls, rows: int, cols: int,
                     weights: Dict[int, int]) -> "JointDistribution":
        total = sum(weights.values())
        pmf = tuple(sorted((o, Fraction(w, total))
                           for o, w in weights.items() if w))
        return cls(rows, cols, pmf)

    @classmethod
    def point_mass(cls, rows: int, cols: int, outcome: int) -> "JointDistribution":
        return cls(rows, cols, ((outcome, Fraction(1)),))

    @classmethod
    def uniform(cls, rows: int, cols: int) -> "JointDistribution":
        size = 1 << (rows * cols)
        prob = Fraction(1, size)
        return cls(rows, cols, tuple((o, prob) for o in range(size)))

    @classmethod
    def random(cls, rows: int, cols: int, rng: random.Random,
               max_support: int = 12) -> "JointDistribution":
        size = 1 << (rows * cols)
        support_size = rng.randint(1, min(max_support, size))
        outcomes = rng.sample(range(size), support_size)
        weights = {o: rng.randint(1, 100) for o in outcomes}
        return cls.from_weights(rows, cols, weights)


def _entropy_bits(pmf: Dict[int, Fraction]) -> float:
    # probabilities stay exact; log2 enters only here
    return -sum(float(p) * math.log2(float(p)) for p in pmf.values() if p)


def _xor_convolve(pa: Dict[int, Fraction],
                  pb: Dict[int, Fraction]) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    for a, qa in pa.items():
        for b, qb in pb.items():
            key = a ^ b
            out[key] = out.get(key, Fraction(0)) + qa * qb
    return out


@dataclass(frozen=True)
class Lemma1Result:
    n: int
    delta: int
    m: int
    h_top: float      # H(A + B[1:n])
    h_shifted: float  # H(A + B[Delta+1:n+Delta])
    bound: Fraction   # m * phi2(n, Delta)

    @property
    def gap(self) -> float:
        return self.h_top - self.h_shifted

    @property
    def holds(self) -> bool:
        return self.gap <= float(self.bound) + 1e-9


def lemma1_gap(dist_a: JointDistribution, dist_b: JointDistribution,
               delta: int, max_state_bits: int = 20) -> Lemma1Result:
    """Exact entropy gap H(A+B') - H(A+B'') against m*phi2(n, delta).

    Independence of A and B is structural: the joint law is the product
    of the two supplied marginals.
    """
    n, m = dist_a.rows, dist_a.cols
    if dist_b.cols != m or dist_b.rows != n + delta:
        raise ValueError("B must be (n + delta) x m with matching m")
    if n * m > max_state_bits:
        raise ValueError(
            f"A-space needs 2^{n * m} states, guard is 2^{max_state_bits}")

    mask = (1 << (n * m)) - 1
    pa = {o: q for o, q in dist_a.pmf}
    p_top: Dict[int, Fraction] = {}
    p_shift: Dict[int, Fraction] = {}
    for outcome, prob in dist_b.pmf:
        top = outcome & mask                      # rows 1..n
        shifted = (outcome >> (delta * m)) & mask  # rows delta+1..n+delta
        p_top[top] = p_top.get(top, Fraction(0)) + prob
        p_shift[shifted] = p_shift.get(shifted, Fraction(0)) + prob

    h_top = _entropy_bits(_xor_convolve(pa, p_top))
    h_shift = _entropy_bits(_xor_convolve(pa, p_shift))
    bound = m * phi2(n, delta)
    return Lemma1Result(n, delta, m, h_top, h_shift, bound)


def max_lemma1_gap_search(n: int, delta: int, m: int, restarts: int = 50,
                          steps: int = 60, seed: int = 0) -> Lemma1Result:
    """Best-effort hill climb for the largest entropy gap (lower-bounds it)."""
    rng = random.Random(seed)
    best: Lemma1Result | None = None

    def evaluate(wa: Dict[int, int], wb: Dict[int, int]) -> Lemma1Result:
        da = JointDistribution.from_weights(n, m, wa)
        db = JointDistribution.from_weights(n + delta, m, wb)
        return lemma1_gap(da, db, delta)

    size_a = 1 << (n * m)
    size_b = 1 << ((n + delta) * m)
    for _ in range(restarts):
        wa = {rng.randrange(size_a): rng.randint(1, 8)
              for _ in range(rng.randint(1, 6))}
        wb = {rng.randrange(size_b): rng.randint(1, 8)
              for _ in range(rng.randint(1, 6))}
        current = evaluate(wa, wb)
        for _ in range(steps):
            target = wa if rng.random() < 0.5 else wb
            size = size_a if target is wa else size_b
            key = rng.randrange(size)
            old = target.get(key, 0)
            target[key] = old + rng.choice([1, 2, 4])
            trial = evaluate(wa, wb)
            if trial.gap >= current.gap:
                current = trial
            else:
                if old:
                    target[key] = old
                else:
                    del target[key]
        if best is None or current.gap > best.gap:
            best = current
    assert best is not None
    assert best.holds, "search produced a gap above the Lemma-1 bound"
    return best
