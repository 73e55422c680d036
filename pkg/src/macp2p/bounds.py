"""Sum-rate outer bound: the l / phi1 / phi2 machinery and regime dispatch.

phi1 and phi2 accept arbitrary nonnegative rationals so the same code
serves the integer-gain bound and the normalized GDoF expressions.  Both
are continuous piecewise-linear, satisfy phi1 + phi2 = p + q, and scale
linearly: phi_k(c p, c q) = c phi_k(p, q).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .channel import Branch, Regime, SystemParams, classify, derive

Rational = Union[int, Fraction]


def floor_div(p: Rational, q: Rational) -> int:
    """l(p, q) = floor(p/q) for q > 0, with the convention l(p, 0) = 0."""
    p = Fraction(p)
    q = Fraction(q)
    if p < 0 or q < 0:
        raise ValueError("floor_div needs nonnegative arguments")
    if q == 0:
        return 0
    return int(p / q)  # int() truncates; p/q >= 0 so this is the floor


def phi1(p: Rational, q: Rational) -> Fraction:
    p = Fraction(p)
    q = Fraction(q)
    if p < 0 or q < 0:
        raise ValueError("phi1 needs nonnegative arguments")
    l = floor_div(p, q)
    if l % 2 == 0:  # 0 counts as even
        return q + Fraction(l, 2) * q
    return p - Fraction(l - 1, 2) * q


def phi2(p: Rational, q: Rational) -> Fraction:
    p = Fraction(p)
    q = Fraction(q)
    if p < 0 or q < 0:
        raise ValueError("phi2 needs nonnegative arguments")
    l = floor_div(p, q)
    if l % 2 == 0:
        return p - Fraction(l, 2) * q
    return Fraction(l + 1, 2) * q


def pos(x: Rational) -> Rational:
    """Positive part (x)^+."""
    return x if x > 0 else 0


@dataclass(frozen=True)
class SumRateBound:
    value: Fraction
    regime: Regime
    terms: dict = field(compare=False)


def sum_rate_bound(p: SystemParams) -> SumRateBound:
    """Sum-rate outer bound for integer gains, dispatched on the regime.

    The alpha >= beta branch carries the 2*n1 cap: R1 + R2 <= n1 and
    R3 <= n1 always hold, and without the cap the stated expression
    exceeds 2*n1 once ni > 2*n1.  The uncapped value is kept in terms.
    """
    regime = classify(p)
    d = derive(p)
    n1, n2, ni = p.n1, p.n2, p.ni
    terms: dict = {"branch": regime.branch.value}

    if regime.branch is Branch.WEAK:
        phi = phi1(ni, d.delta)
        value = Fraction(n1 + n2 - 2 * ni) + phi
        terms["expr"] = "n1 + n2 - 2*ni + phi1(ni, delta)"
        terms["phi1"] = phi
    elif regime.branch is Branch.ALIGN_LOW:
        phi = phi2(n2 - ni, d.delta)
        value = Fraction(2 * ni) + phi
        terms["expr"] = "2*ni + phi2(n2 - ni, delta)"
        terms["phi2"] = phi
    elif regime.branch is Branch.ALIGN_HIGH:
        phi = phi2(2 * n1 - 3 * ni, d.delta)
        value = Fraction(2 * ni) + phi
        terms["expr"] = "2*ni + phi2(2*n1 - 3*ni, delta)"
        terms["phi2"] = phi
    elif regime.branch is Branch.STRONG_IC:
        genie = max(n1, ni) + pos(n1 - ni)
        value = Fraction(min(2 * n1, genie))
        terms["expr"] = "min(2*n1, max(n1, ni) + (n1 - ni)^+)"
        terms["candidates"] = {"2n1": 2 * n1, "genie": genie}
    else:  # MAC_SILENCED_IC
        genie = max(n1, ni) + pos(n1 - ni)
        cross = 2 * max(ni, pos(n1 - ni))
        uncapped = min(genie, cross)
        value = Fraction(min(2 * n1, uncapped))
        terms["expr"] = "min(2*n1, max(n1, ni) + (n1 - ni)^+, 2*max(ni, (n1 - ni)^+))"
        terms["candidates"] = {"2n1": 2 * n1, "genie": genie, "cross": cross}
        terms["uncapped"] = uncapped

    return SumRateBound(value=value, regime=regime, terms=terms)
