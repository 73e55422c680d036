"""Linear precoder constructions, rank-based rates, zero-error verification.

Rates of a precoder triple are always DEFINED by the rank formulas
(rank differences of the received matrices); column counts are upper
bounds only.  Every constructor is therefore judged by one criterion:
the rank-rate sum must equal the sum-rate outer bound.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .bounds import pos, sum_rate_bound
from .channel import Branch, Regime, SystemParams, classify, derive
from .gf2 import BitMatrix, Gf2Basis, rank_of_columns


class ConstructionError(Exception):
    """No known construction meets the outer bound for these parameters."""


class EnumerationBudgetError(Exception):
    """Exhaustive verification would exceed the configured bit budget."""


@dataclass(frozen=True)
class RateTriple:
    r1: int
    r2: int
    r3: int

    @property
    def total(self) -> int:
        return self.r1 + self.r2 + self.r3

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.r1, self.r2, self.r3)


@dataclass(frozen=True)
class PrecoderTriple:
    v1: BitMatrix
    v2: BitMatrix
    v3: BitMatrix

    def __post_init__(self) -> None:
        if not (self.v1.rows == self.v2.rows == self.v3.rows):
            raise ValueError("precoders must share the row count q")

    @property
    def q(self) -> int:
        return self.v1.rows

    @property
    def widths(self) -> tuple[int, int, int]:
        return (self.v1.cols, self.v2.cols, self.v3.cols)


# ---------------------------------------------------------------------------
# K-set machinery


@dataclass(frozen=True)
class AlignIndexSet:
    """The Delta-periodic index set used to interleave aligned levels."""

    delta: int
    n: int
    convention: str
    members: tuple[int, ...]

    def position(self, k: int) -> int:
        """1-based rank of k among the ascending members."""
        return self.members.index(k) + 1


def build_align_set(delta: int, n: int, convention: str = "shifted") -> AlignIndexSet:
    """Members of {1..n} whose block index (period 2*delta) is 'on'.

    literal: mod(k, 2*delta) < delta, as printed in the source material.
    shifted: mod(k - 1, 2*delta) < delta, i.e. 1-based blocks starting on.
    The default is the convention under which the explicit alignment
    construction meets the outer bound (see construct_precoders).
    """
    if delta < 1:
        raise ValueError("align set needs delta >= 1")
    if convention not in ("literal", "shifted"):
        raise ValueError(f"unknown K-set convention {convention!r}")
    if n <= 0:
        return AlignIndexSet(delta, max(n, 0), convention, ())
    period = 2 * delta
    if convention == "literal":
        members = tuple(k for k in range(1, n + 1) if k % period < delta)
    else:
        members = tuple(k for k in range(1, n + 1) if (k - 1) % period < delta)
    return AlignIndexSet(delta, n, convention, members)


# ---------------------------------------------------------------------------
# Rank-based achievable rates


def received_matrices(p: SystemParams, v: PrecoderTriple):
    """The six received images A..F in the common q-row frame."""
    q = p.q
    assert q is not None
    if v.q != q:
        raise ValueError(f"precoders have {v.q} rows, channel frame is q={q}")
    a = v.v1.shift(q - p.n1)
    b = v.v2.shift(q - p.n2)
    c = v.v3.shift(q - p.ni)
    d = v.v1.shift(q - p.ni)
    e = v.v2.shift(q - p.ni)
    f = v.v3.shift(q - p.n1)
    return a, b, c, d, e, f


def achievable_rates(p: SystemParams, v: PrecoderTriple) -> RateTriple:
    a, b, c, d, e, f = received_matrices(p, v)
    abc = rank_of_columns(a.columns() + b.columns() + c.columns())
    bc = rank_of_columns(b.columns() + c.columns())
    ac = rank_of_columns(a.columns() + c.columns())
    def_ = rank_of_columns(d.columns() + e.columns() + f.columns())
    de = rank_of_columns(d.columns() + e.columns())
    return RateTriple(abc - bc, abc - ac, def_ - de)


# ---------------------------------------------------------------------------
# Two-user interference channel schemes (Tx2 silent)
#
# Symmetric deterministic IC with direct gain n and cross gain m.  The
# optimal scheme per cross-gain ratio; the 2/3..1 and 1..2 ranges share a
# per-chain subspace solver that codes across levels (a doubled column
# fixes the odd-length chains where pure level assignment drops one bit).


def _solve_chain(length: int) -> tuple[list[int], list[int]]:
    """Subspace pair (U, W) on a shift-chain of the given length.

    Local coordinates are bits 0..length-1; the shift maps bit j to j+1
    and the last bit is unusable for data (it falls off the sender's own
    channel).  Guarantees shift(U) + W = full space = U + shift(W), with
    dim U + dim W = length.
    """
    if length < 2:
        raise ValueError("chains shorter than 2 have no solution")
    if length == 2:
        return [0b1], [0b1]
    if length == 3:
        return [0b01, 0b10], [0b11]
    u, w = _solve_chain(length - 2)
    return [0b1] + [m << 2 for m in u], [0b11] + [m << 2 for m in w]


def _chain_partition(total: int, step: int) -> list[list[int]]:
    """Rows 1..total split into shift-chains by residue class mod step."""
    return [list(range(c, total + 1, step)) for c in range(1, step + 1)]


def _ic_level_masks(n: int, m: int) -> tuple[list[int], list[int]]:
    """Column masks for a sum-rate optimal symmetric IC pair (n=direct, m=cross).

    Masks are in the q = max(n, m) frame; both users only load rows <= n.
    """
    def units(rows: Iterable[int]) -> list[int]:
        return [1 << (r - 1) for r in rows]

    if m == 0 or m >= 2 * n:
        return units(range(1, n + 1)), units(range(1, n + 1))
    if 2 * m <= n:
        return units(range(1, n - m + 1)), units(range(1, n - m + 1))
    if 3 * m < 2 * n:  # 1/2 < m/n < 2/3: privates plus a clean common block
        rows = list(range(1, 2 * m - n + 1)) + list(range(m + 1, n + 1))
        return units(rows), units(rows)
    if m == n:
        k = (n + 1) // 2
        return units(range(1, k + 1)), units(range(k + 1, n + 1))

    # 2/3 <= m/n < 1 or 1 < m/n < 2: per-chain subspace coding
    shift = abs(n - m)
    a_cols: list[int] = []
    b_cols: list[int] = []
    for chain in _chain_partition(m, shift):
        u, w = _solve_chain(len(chain))
        for mask in u:
            a_cols.append(_spread(mask, chain))
        for mask in w:
            b_cols.append(_spread(mask, chain))
    if m < n:  # both users add the private rows invisible at the other Rx
        a_cols += units(range(m + 1, n + 1))
        b_cols += units(range(m + 1, n + 1))
    return a_cols, b_cols


def _spread(local_mask: int, chain: Sequence[int]) -> int:
    """Map a local chain-coordinate mask onto global 1-based rows."""
    out = 0
    j = 0
    while local_mask >> j:
        if (local_mask >> j) & 1:
            out |= 1 << (chain[j] - 1)
        j += 1
    return out


def _construct_ic(p: SystemParams) -> PrecoderTriple:
    q = p.q
    assert q is not None
    a_cols, b_cols = _ic_level_masks(p.n1, p.ni)
    return PrecoderTriple(
        BitMatrix(q, a_cols), BitMatrix(q, []), BitMatrix(q, b_cols)
    )


# ---------------------------------------------------------------------------
# Weak interference (alpha <= 1/2): orthogonal levels with aligned commons
#
# Tx1 and Tx2 reuse the same rows in alternating Delta-blocks of the
# common region [1..ni]; both copies of a block land disjointly at Rx1
# while the images coincide at Rx2, so each aligned row costs Tx3 only
# one level for two MAC bits.


def _construct_weak(p: SystemParams) -> PrecoderTriple:
    q = p.q
    assert q is not None
    d = derive(p)
    n1, n2, ni = p.n1, p.n2, p.ni
    delta = d.delta

    if delta == 0:
        # n1 = n2: the two MAC senders are indistinguishable at both
        # receivers, no alignment gain; split the private levels.
        s = (n1 - ni + 1) // 2
        v1_rows = range(ni + 1, ni + s + 1)
        v2_rows = range(ni + s + 1, n1 + 1)
        v3_rows = range(ni + 1, n1 + 1)
        return PrecoderTriple(
            BitMatrix(q, [1 << (r - 1) for r in v1_rows]),
            BitMatrix(q, [1 << (r - 1) for r in v2_rows]),
            BitMatrix(q, [1 << (r - 1) for r in v3_rows]),
        )

    l = ni // delta
    qrem = ni % delta
    aligned: list[int] = []
    for j in range(0, l, 2):
        last = l - 1 if l % 2 == 1 else l - 2
        if j > last:
            break
        aligned.extend(range(j * delta + 1, (j + 1) * delta + 1))
    if l % 2 == 0 and qrem:
        aligned.extend(range(l * delta + 1, ni + 1))

    copies = {r + delta for r in aligned}
    spill = {r for r in copies if r > ni}
    free_high = [r for r in range(ni + 1, n1 + 1) if r not in spill]
    tx3_blocked = {r + (n1 - ni) for r in aligned}
    tx3_rows = [r for r in range(ni + 1, n1 + 1) if r not in tx3_blocked]

    v1 = BitMatrix(q, [1 << (r - 1) for r in aligned + free_high])
    v2 = BitMatrix(q, [1 << (r - 1) for r in aligned])
    v3 = BitMatrix(q, [1 << (r - 1) for r in tx3_rows])
    return PrecoderTriple(v1, v2, v3)


# ---------------------------------------------------------------------------
# Alignment range 1/2 < alpha < 2/3: explicit level-coded constructions


def _align_pairs_and_ksets(p: SystemParams, convention: str) -> PrecoderTriple:
    """Explicit alignment construction with doubled levels and K-sets.

    Tx1 doubles levels 1..Delta across the n1-ni span, Tx2 doubles
    1..sigma at the same rows so their images merge at Rx2; single
    aligned levels interleave with Tx3's in the Delta-periodic K-set
    pattern; Tx3 stacks a clean top block, the interleaved singles and a
    trailing block that rides the doubled columns.  Tx3's top block is
    capped at n1-ni rows (for rho < 0 the full 2*ni-n2 block would
    collide with the MAC private levels).
    """
    q = p.q
    assert q is not None
    d = derive(p)
    n1, n2, ni = p.n1, p.n2, p.ni
    delta, sigma, tau, rho = d.delta, d.sigma, d.tau, d.rho
    span = n1 - ni

    def unit(r: int) -> int:
        return 1 << (r - 1)

    k_rho = build_align_set(delta, rho, convention).members
    k_rho_lo = build_align_set(delta, rho - delta, convention).members
    k_rho_hi = build_align_set(delta, rho + delta, convention).members

    v1_cols = [unit(k) | unit(k + span) for k in range(1, delta + 1)]
    v1_cols += [unit(tau + k) for k in k_rho]
    v1_cols += [unit(ni + delta + k) for k in range(1, n2 - ni + 1)]

    v2_cols = [unit(k) | unit(k + span) for k in range(1, sigma + 1)]
    v2_cols += [unit(tau + k) for k in k_rho_lo]

    v3_cols = [unit(r) for r in range(1, min(tau, span) + 1)]
    v3_cols += [unit(ni + k) for k in k_rho_hi]
    v3_cols += [unit(2 * span + k) for k in range(1, sigma + 1)]

    return PrecoderTriple(BitMatrix(q, v1_cols), BitMatrix(q, v2_cols),
                          BitMatrix(q, v3_cols))


def _align_low_sigma(p: SystemParams, convention: str) -> PrecoderTriple:
    """Alignment construction for sigma < delta (the AlignLow geometry).

    Same idea as the paired construction, but only sigma levels support a
    full doubled column; the remaining delta-sigma shared levels align as
    plain singles, which pushes every K-set zone down by delta-sigma.
    """
    q = p.q
    assert q is not None
    d = derive(p)
    n1, n2, ni = p.n1, p.n2, p.ni
    delta, sigma, tau = d.delta, d.sigma, d.tau
    span = n1 - ni
    extra = delta - sigma
    budget = n2 - ni  # rho + sigma: the length of the interleaved zone

    def unit(r: int) -> int:
        return 1 << (r - 1)

    k_mac = build_align_set(delta, budget - delta, convention).members
    k_mac_lo = build_align_set(delta, budget - 2 * delta, convention).members
    k_tx3 = build_align_set(delta, budget, convention).members

    shared = [unit(k) | unit(k + span) for k in range(1, sigma + 1)]
    shared += [unit(r) for r in range(sigma + 1, delta + 1)]

    v1_cols = list(shared)
    v1_cols += [unit(tau + extra + j) for j in k_mac]
    v1_cols += [unit(ni + delta + k) for k in range(1, n2 - ni + 1)]

    v2_cols = list(shared)
    v2_cols += [unit(tau + extra + j) for j in k_mac_lo]

    v3_cols = [unit(r) for r in range(1, min(tau, span) + 1)]
    v3_cols += [unit(ni + extra + j) for j in k_tx3]
    v3_cols += [unit(2 * span + k) for k in range(1, sigma + 1)]

    return PrecoderTriple(BitMatrix(q, v1_cols), BitMatrix(q, v2_cols),
                          BitMatrix(q, v3_cols))


def _align_mixed(p: SystemParams, pairs: int, solos: int,
                 extra_priv: int) -> PrecoderTriple:
    """Parametric alignment family: pairs, single-level alignment, privates.

    Tx1/Tx2 share `pairs` doubled columns and `solos` aligned single
    levels; Tx1 takes `extra_priv` private levels directly under ni, Tx2
    all remaining private levels; Tx3 then fills greedily, accepting a
    level only if it raises its own rank rate without costing the MAC.
    """
    q = p.q
    assert q is not None
    d = derive(p)
    n1, n2, ni = p.n1, p.n2, p.ni
    delta, sigma = d.delta, d.sigma
    span = n1 - ni

    def unit(r: int) -> int:
        return 1 << (r - 1)

    shared_pairs = [unit(k) | unit(k + span) for k in range(1, pairs + 1)]
    shared_solos = [unit(r) for r in range(pairs + 1, pairs + solos + 1)]

    v1_cols = shared_pairs + shared_solos
    v1_cols += [unit(r) for r in range(ni + 1, ni + extra_priv + 1)]

    v2_cols = shared_pairs[: min(pairs, sigma)] + shared_solos
    v2_cols += [unit(r) for r in range(ni + 1, n2 + 1)
                if r + delta > ni + extra_priv]

    v1 = BitMatrix(q, v1_cols)
    v2 = BitMatrix(q, v2_cols)

    # Greedy Tx3 fill against incremental spans of the received matrices.
    a = v1.shift(q - n1)
    b = v2.shift(q - n2)
    dd = v1.shift(q - ni)
    ee = v2.shift(q - ni)
    b_abc = Gf2Basis(a.columns() + b.columns())
    b_bc = Gf2Basis(b.columns())
    b_ac = Gf2Basis(a.columns())
    b_def = Gf2Basis(dd.columns() + ee.columns())

    v3_cols: list[int] = []
    for r in range(1, n1 + 1):
        col = unit(r)
        c_img = (col << (q - ni)) & ((1 << q) - 1)
        f_img = (col << (q - n1)) & ((1 << q) - 1)
        if b_def.contains(f_img):
            continue
        d_abc = 0 if b_abc.contains(c_img) else 1
        d_bc = 0 if b_bc.contains(c_img) else 1
        d_ac = 0 if b_ac.contains(c_img) else 1
        if 2 * d_abc - d_bc - d_ac != 0:
            continue
        v3_cols.append(col)
        b_def.add(f_img)
        b_abc.add(c_img)
        b_bc.add(c_img)
        b_ac.add(c_img)

    return PrecoderTriple(v1, v2, BitMatrix(q, v3_cols))


def _align_candidates(p: SystemParams, convention: str):
    d = derive(p)
    delta, sigma, rho = d.delta, d.sigma, d.rho
    yield _align_pairs_and_ksets(p, convention)
    if 1 <= sigma < delta:
        yield _align_low_sigma(p, convention)

    seen = set()
    presets = [
        (0, min(delta, max(rho + sigma, 0)), min(delta, p.n1 - p.ni)),
        (0, delta, delta),
        (0, min(delta, sigma), delta),
        (min(delta, sigma), 0, delta),
    ]
    grid = [(h, x, y)
            for h in range(0, min(delta, sigma, 8) + 1)
            for x in range(0, min(delta, 10) - h + 1)
            for y in range(0, min(delta, p.n1 - p.ni, 10) + 1)]
    for h, x, y in presets + grid:
        if h < 0 or x < 0 or y < 0 or h > min(delta, sigma):
            continue
        if pos(h) + pos(x) > d.tau or (h, x, y) in seen:
            continue
        seen.add((h, x, y))
        yield _align_mixed(p, h, x, y)


def _prune_dead_columns(p: SystemParams, v: PrecoderTriple) -> PrecoderTriple:
    """Drop columns that carry no rate, so that rates equal column counts.

    R1 = k1 and R2 = k2 and R3 = k3 together are equivalent to zero-error
    decodability at the full widths, which is what the constructions
    promise; a column is removable whenever dropping it leaves the whole
    rate triple unchanged.
    """
    rates = achievable_rates(p, v)
    changed = True
    while changed and rates.as_tuple() != v.widths:
        changed = False
        for slot in (2, 1, 0):
            mats = [v.v1, v.v2, v.v3]
            if mats[slot].cols == rates.as_tuple()[slot]:
                continue
            cols = list(mats[slot].columns())
            for j in range(len(cols)):
                trial_cols = cols[:j] + cols[j + 1:]
                mats[slot] = BitMatrix(v.q, trial_cols)
                trial = PrecoderTriple(*mats)
                if achievable_rates(p, trial).as_tuple() == rates.as_tuple():
                    v = trial
                    changed = True
                    break
                mats[slot] = BitMatrix(v.q, cols)
            if changed:
                break
    return v


# ---------------------------------------------------------------------------
# Top-level constructor


@functools.lru_cache(maxsize=4096)
def _construct_cached(n1: int, n2: int, ni: int, q: int,
                      convention: str) -> PrecoderTriple:
    p = SystemParams(n1, n2, ni, q)
    regime = classify(p)
    target = sum_rate_bound(p).value

    if regime.branch in (Branch.MAC_SILENCED_IC, Branch.STRONG_IC):
        v = _construct_ic(p)
        got = achievable_rates(p, v).total
        if got != target:
            raise ConstructionError(
                f"IC scheme reached {got} < bound {target} at {(n1, n2, ni)}")
        return _prune_dead_columns(p, v)

    if regime.branch is Branch.WEAK:
        v = _construct_weak(p)
        got = achievable_rates(p, v).total
        if got != target:
            raise ConstructionError(
                f"weak scheme reached {got} < bound {target} at {(n1, n2, ni)}")
        return _prune_dead_columns(p, v)

    # alignment range
    if derive(p).delta == 0:
        # n1 = n2 removes the gain difference the alignment exploits; the
        # exhaustive oracle shows the stated bound is not attainable here
        # (e.g. (5,5,3): best linear sum rate 6 < bound 7).
        raise ConstructionError(
            f"no construction for delta=0 inside the alignment range at "
            f"{(n1, n2, ni)}; the outer bound {target} is not known to be "
            f"attainable (see docs on the (5,5,3) finding)")

    best = -1
    for cand in _align_candidates(p, convention):
        got = achievable_rates(p, cand).total
        if got == target:
            return _prune_dead_columns(p, cand)
        best = max(best, got)
    raise ConstructionError(
        f"alignment constructions reached {best} < bound {target} at "
        f"{(n1, n2, ni)}")


def construct_precoders(p: SystemParams, convention: str = "shifted") -> PrecoderTriple:
    """Build precoders whose rank-rate sum equals sum_rate_bound(p).

    Raises ConstructionError for parameter sets where no bound-achieving
    construction is available (notably delta = 0 in the alignment range).
    """
    if p.n1 <= 0:
        raise ValueError("construction needs n1 > 0")
    assert p.q is not None
    return _construct_cached(p.n1, p.n2, p.ni, p.q, convention)


# ---------------------------------------------------------------------------
# Zero-error verification by exhaustive enumeration


@dataclass(frozen=True)
class ZeroErrorReport:
    widths: tuple[int, int, int]
    rank_rates: RateTriple
    mac_ok: bool
    p2p_ok: bool
    mac_collisions: int
    p2p_collisions: int

    @property
    def ok(self) -> bool:
        return self.mac_ok and self.p2p_ok


def _xor_combinations(columns: Sequence[int]) -> np.ndarray:
    """All 2^k XOR combinations of the columns (dtype object for big q)."""
    combos = np.array([0], dtype=object)
    for col in columns:
        combos = np.concatenate([combos, combos ^ col])
    return combos


def _reduce_mod_basis(values: np.ndarray, basis: Gf2Basis) -> np.ndarray:
    out = values.copy()
    for b in basis._basis:  # noqa: SLF001 - package-internal
        low = b & -b
        hit = (out & low).astype(bool)
        out[hit] ^= b
    return out


def verify_zero_error(p: SystemParams, v: PrecoderTriple,
                      max_total_bits: int = 24) -> ZeroErrorReport:
    """Confirm decodability by enumerating every data-difference vector.

    Enumerating differences of data vectors is exhaustive over data-vector
    pairs: (x1, x2) is decodable at Rx1 under arbitrary interference iff
    no nonzero difference pair lands inside Tx3's received column space,
    and x3 is decodable at Rx2 iff no nonzero F-combination lands in the
    MAC interference span.
    """
    k1, k2, k3 = v.widths
    total = k1 + k2 + k3
    if total > max_total_bits:
        raise EnumerationBudgetError(
            f"verification needs 2^{total} data vectors, budget is "
            f"2^{max_total_bits}; use rank-only reporting instead")

    a, b, c, d, e, f = received_matrices(p, v)
    rates = achievable_rates(p, v)

    c_span = Gf2Basis(c.columns())
    mac_combos = _xor_combinations(a.columns() + b.columns())
    reduced = _reduce_mod_basis(mac_combos, c_span)
    mac_collisions = int(np.count_nonzero(reduced == 0)) - 1  # zero pair is trivial

    de_span = Gf2Basis(d.columns() + e.columns())
    p2p_combos = _xor_combinations(f.columns())
    reduced3 = _reduce_mod_basis(p2p_combos, de_span)
    p2p_collisions = int(np.count_nonzero(reduced3 == 0)) - 1

    return ZeroErrorReport(
        widths=(k1, k2, k3),
        rank_rates=rates,
        mac_ok=mac_collisions == 0,
        p2p_ok=p2p_collisions == 0,
        mac_collisions=mac_collisions,
        p2p_collisions=p2p_collisions,
    )


# ---------------------------------------------------------------------------
# Serialization


def precoders_to_text(p: SystemParams, v: PrecoderTriple) -> str:
    k1, k2, k3 = v.widths
    lines = [
        "# macp2p precoders v1",
        f"q={v.q} k1={k1} k2={k2} k3={k3} n1={p.n1} n2={p.n2} ni={p.ni}",
    ]
    for name, mat in (("V1", v.v1), ("V2", v.v2), ("V3", v.v3)):
        lines.append(name)
        for row in mat.to_rows():
            lines.append("".join(str(bit) for bit in row))
    return "\n".join(lines) + "\n"


def precoders_from_text(text: str) -> tuple[SystemParams, PrecoderTriple]:
    # blank lines are significant: a zero-column matrix has q empty rows
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    header = dict(kv.split("=") for kv in lines[0].split())
    q = int(header["q"])
    widths = [int(header["k1"]), int(header["k2"]), int(header["k3"])]
    p = SystemParams(int(header["n1"]), int(header["n2"]), int(header["ni"]), q)
    mats = []
    idx = 1
    for name, k in zip(("V1", "V2", "V3"), widths):
        if lines[idx] != name:
            raise ValueError(f"expected section {name}, found {lines[idx]!r}")
        idx += 1
        rows = []
        for _ in range(q):
            row = lines[idx]
            idx += 1
            if len(row) != k:
                raise ValueError(f"{name}: row width {len(row)} != k={k}")
            rows.append([int(ch) for ch in row])
        mats.append(BitMatrix.from_rows(rows) if q else BitMatrix(0, [0] * k))
    return p, PrecoderTriple(*mats)


def precoders_to_json_dict(p: SystemParams, v: PrecoderTriple) -> dict:
    return {
        "params": {"n1": p.n1, "n2": p.n2, "ni": p.ni, "q": v.q},
        "widths": list(v.widths),
        "V1": ["".join(map(str, row)) for row in v.v1.to_rows()],
        "V2": ["".join(map(str, row)) for row in v.v2.to_rows()],
        "V3": ["".join(map(str, row)) for row in v.v3.to_rows()],
    }
