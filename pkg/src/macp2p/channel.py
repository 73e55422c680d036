"""Deterministic channel model: gains, derived quantities, regimes, I/O map.

The network: transmitters Tx1, Tx2 form a MAC toward Rx1 while Tx3 serves
Rx2 over a point-to-point link; the two sides mutually interfere.  Gains
are symmetric: n1 = direct gain of Tx1 and of Tx3, n2 = gain of Tx2 at
Rx1 (n1 >= n2), and ni = every cross gain.

All regime decisions use exact rational comparisons.  The canonical
AlignHigh instance (23, 21, 13) sits 1/46 above the alpha-bar threshold
and would misclassify under floating point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .gf2 import BitMatrix


@dataclass(frozen=True)
class SystemParams:
    """Channel gain triple plus the signal vector length q.

    q defaults to max(n1, n2, ni); for ni <= n1 this is the paper-style
    q = n1 frame in which the direct links need no shift.
    """

    n1: int
    n2: int
    ni: int
    q: int | None = None

    def __post_init__(self) -> None:
        if min(self.n1, self.n2, self.ni) < 0:
            raise ValueError("channel gains must be nonnegative")
        if self.n2 > self.n1:
            raise ValueError("model assumes n1 >= n2")
        q = self.q if self.q is not None else max(self.n1, self.n2, self.ni)
        if q < max(self.n1, self.n2, self.ni):
            raise ValueError("q must be at least the largest gain")
        object.__setattr__(self, "q", q)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n1, self.n2, self.ni)


@dataclass(frozen=True)
class DerivedParams:
    delta: int            # n1 - n2
    alpha: Fraction       # ni / n1
    beta: Fraction        # n2 / n1
    sigma: int            # 2 ni - n1 (signed)
    tau: int              # 2 ni - n2 (signed)
    rho: int              # ni - sigma - tau (signed)
    alpha_bar: Fraction   # min(1 - beta/2, 2/3)


def derive(p: SystemParams) -> DerivedParams:
    """Exact derived quantities; requires n1 > 0 (alpha, beta undefined else)."""
    if p.n1 <= 0:
        raise ValueError("derived parameters need n1 > 0")
    delta = p.n1 - p.n2
    alpha = Fraction(p.ni, p.n1)
    beta = Fraction(p.n2, p.n1)
    sigma = 2 * p.ni - p.n1
    tau = 2 * p.ni - p.n2
    rho = p.ni - sigma - tau
    alpha_bar = min(1 - beta / 2, Fraction(2, 3))
    return DerivedParams(delta, alpha, beta, sigma, tau, rho, alpha_bar)


class Branch(enum.Enum):
    WEAK = "Weak"
    ALIGN_LOW = "AlignLow"
    ALIGN_HIGH = "AlignHigh"
    STRONG_IC = "StrongIC"
    MAC_SILENCED_IC = "MacSilencedIC"


class Subcase(enum.Enum):
    RHO_NEG = "RhoNeg"
    RHO_POS_LOW = "RhoPosLow"
    RHO_POS_HIGH = "RhoPosHigh"


@dataclass(frozen=True)
class Regime:
    branch: Branch
    subcase: Subcase | None = None

    def __str__(self) -> str:
        if self.subcase is None:
            return self.branch.value
        return f"{self.branch.value}/{self.subcase.value}"


# Interval conventions: alpha = 1/2 belongs to Weak (closed right end),
# alpha = alpha_bar to AlignHigh (closed left end), alpha = 2/3 to StrongIC.
HALF = Fraction(1, 2)
TWO_THIRDS = Fraction(2, 3)


def classify(p: SystemParams) -> Regime:
    d = derive(p)
    if d.alpha >= d.beta:
        return Regime(Branch.MAC_SILENCED_IC)
    if d.alpha <= HALF:
        return Regime(Branch.WEAK)
    if d.alpha >= TWO_THIRDS:
        return Regime(Branch.STRONG_IC)
    # 1/2 < alpha < 2/3: construction subcases a/b/c of the alignment range
    if d.rho < 0:
        sub = Subcase.RHO_NEG
    elif d.alpha < d.alpha_bar:
        sub = Subcase.RHO_POS_LOW
    else:
        sub = Subcase.RHO_POS_HIGH
    branch = Branch.ALIGN_LOW if d.alpha < d.alpha_bar else Branch.ALIGN_HIGH
    return Regime(branch, sub)


def transmit(p: SystemParams, x1: BitMatrix, x2: BitMatrix,
             x3: BitMatrix) -> tuple[BitMatrix, BitMatrix]:
    """Evaluate the deterministic input/output equations.

    Inputs are q x m matrices (columns are channel uses).  Output:
      Y1 = S^{q-n1} X1 + S^{q-n2} X2 + S^{q-ni} X3
      Y2 = S^{q-ni} X1 + S^{q-ni} X2 + S^{q-n1} X3
    """
    q = p.q
    assert q is not None
    for x in (x1, x2, x3):
        if x.rows != q:
            raise ValueError(f"input must have q={q} rows, got {x.rows}")
    if not (x1.cols == x2.cols == x3.cols):
        raise ValueError("inputs must share the batch width")
    y1 = x1.shift(q - p.n1) ^ x2.shift(q - p.n2) ^ x3.shift(q - p.ni)
    y2 = x1.shift(q - p.ni) ^ x2.shift(q - p.ni) ^ x3.shift(q - p.n1)
    return y1, y2
