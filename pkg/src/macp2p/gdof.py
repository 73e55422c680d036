"""Generalized degrees of freedom: the normalized lower bound and W curve.

Everything is evaluated in exact rational arithmetic; the piecewise
branch tests reuse the same comparisons as the integer-gain bound, so
gdof_lower(ni/n1, n2/n1) * n1 reproduces sum_rate_bound(n1, n2, ni)
verbatim on integer triples.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .bounds import phi1, phi2, pos

Rational = Union[int, Fraction, str]

HALF = Fraction(1, 2)
TWO_THIRDS = Fraction(2, 3)


def _frac(x: Rational) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class GdofPoint:
    a: Fraction
    b: Fraction
    d_lower: Fraction
    w_ref: Fraction
    branch: str


def w_curve(a: Rational) -> Fraction:
    """Sum GDoF of the two-user symmetric interference channel (W curve)."""
    a = _frac(a)
    if a < 0:
        raise ValueError("interference exponent must be nonnegative")
    return Fraction(min(2, max(1, a) + pos(1 - a), 2 * max(a, pos(1 - a))))


def gdof_lower(a: Rational, b: Rational) -> GdofPoint:
    """Lower bound on the sum GDoF at interference exponent a, weak-user
    exponent b (normalized to the strong direct links)."""
    a = _frac(a)
    b = _frac(b)
    if a < 0 or not 0 <= b <= 1:
        raise ValueError("need a >= 0 and 0 <= b <= 1")

    if a >= b:
        # silencing the weak user: interference-channel GDoF (2-capped)
        value = Fraction(min(2, max(1, a) + pos(1 - a),
                             2 * max(a, pos(1 - a))))
        branch = "MacSilencedIC"
    elif a <= HALF:
        value = 1 + b - 2 * a + phi1(a, 1 - b)
        branch = "Weak"
    else:
        a_bar = min(1 - b / 2, TWO_THIRDS)
        if a < a_bar:
            value = 2 * a + phi2(b - a, 1 - b)
            branch = "AlignLow"
        elif a < TWO_THIRDS:
            value = 2 * a + phi2(2 - 3 * a, 1 - b)
            branch = "AlignHigh"
        else:
            value = Fraction(min(2, max(1, a) + pos(1 - a)))
            branch = "StrongIC"

    return GdofPoint(a, b, value, w_curve(a), branch)


# ---------------------------------------------------------------------------
# Convergence of the channel-gain approximation sequences


@dataclass(frozen=True)
class PhiLimitStep:
    k: int
    t: int
    a_k: int
    b_k: int
    err_phi1: Fraction
    err_phi2_low: Fraction
    err_phi2_high: Fraction

    @property
    def max_err(self) -> Fraction:
        return max(abs(self.err_phi1), abs(self.err_phi2_low),
                   abs(self.err_phi2_high))


def phi_limit_check(a: Rational, b: Rational, depth: int = 20) -> list[PhiLimitStep]:
    """Track (1/t_k) phi(a_k, t_k - b_k) against the normalized limits.

    Integer approximants a_k = floor(a t_k), b_k = floor(b t_k) with
    t_k = 2^k; the three tracked quantities are phi1(a, 1-b),
    phi2(b-a, 1-b) and phi2(2-3a, 1-b).
    """
    a = _frac(a)
    b = _frac(b)
    if a < 0 or not 0 <= b <= 1:
        raise ValueError("need a >= 0 and 0 <= b <= 1")
    lim1 = phi1(a, 1 - b)
    lim2_low = phi2(max(b - a, Fraction(0)), 1 - b)
    lim2_high = phi2(max(2 - 3 * a, Fraction(0)), 1 - b)

    steps = []
    for k in range(1, depth + 1):
        t = 1 << k
        a_k = int(a * t)
        b_k = int(b * t)
        qk = t - b_k
        s1 = Fraction(phi1(a_k, qk), t)
        s2_low = Fraction(phi2(max(b_k - a_k, 0), qk), t)
        s2_high = Fraction(phi2(max(2 * t - 3 * a_k, 0), qk), t)
        steps.append(PhiLimitStep(
            k, t, a_k, b_k, s1 - lim1, s2_low - lim2_low, s2_high - lim2_high))
    return steps


# ---------------------------------------------------------------------------
# Grid sweeps and CSV emission

CSV_HEADER = ("a", "b", "d_lower", "w_ref", "branch")


def _rational_range(lo: Fraction, hi: Fraction, step: Fraction) -> Iterator[Fraction]:
    if step <= 0:
        raise ValueError("step must be positive")
    x = lo
    while x <= hi:
        yield x
        x += step


def sweep(a_range: tuple[Rational, Rational], b_range: tuple[Rational, Rational],
          step: Rational) -> list[GdofPoint]:
    """Dense rational grid of gdof_lower, row order (a outer, b inner)."""
    a_lo, a_hi = (_frac(a_range[0]), _frac(a_range[1]))
    b_lo, b_hi = (_frac(b_range[0]), _frac(b_range[1]))
    step = _frac(step)
    return [gdof_lower(a, b)
            for a in _rational_range(a_lo, a_hi, step)
            for b in _rational_range(b_lo, b_hi, step)]


def format_decimal(x: Fraction, places: int = 12) -> str:
    """Exact fixed-point decimal rendering (round half away from zero)."""
    sign = "-" if x < 0 else ""
    scaled = abs(x) * 10 ** places
    units, rem = divmod(scaled.numerator, scaled.denominator)
    if 2 * rem >= scaled.denominator:
        units += 1
    whole, frac_part = divmod(units, 10 ** places)
    return f"{sign}{whole}.{frac_part:0{places}d}"


def points_to_csv(points: Sequence[GdofPoint]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for pt in points:
        writer.writerow([
            format_decimal(pt.a), format_decimal(pt.b),
            format_decimal(pt.d_lower), format_decimal(pt.w_ref), pt.branch,
        ])
    return buf.getvalue()
