"""Render the GDoF figures from macp2p sweep CSVs.

The CSV files are the single source of truth: nothing here evaluates
bound formulas, it only draws the columns it is given.  Expected schema
(exact header): a,b,d_lower,w_ref,branch.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

EXPECTED_HEADER = ["a", "b", "d_lower", "w_ref", "branch"]

# the coincidence threshold for the line check; data values are 12-digit
# decimal renderings of exact rationals, so comparisons need no slack
TWO_THIRDS = 2.0 / 3.0


class SchemaError(Exception):
    """The CSV is missing, empty, or does not match the sweep schema."""


@dataclass(frozen=True)
class FigureSpec:
    csv_path: Path
    kind: str  # "surface" | "line"
    out_path: Path


@dataclass(frozen=True)
class SweepData:
    a: np.ndarray
    b: np.ndarray
    d_lower: np.ndarray
    w_ref: np.ndarray
    branch: list[str]


def load_sweep(csv_path: Path) -> SweepData:
    if not csv_path.exists():
        raise SchemaError(f"CSV not found: {csv_path}")
    with csv_path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{csv_path} is empty") from None
        if header != EXPECTED_HEADER:
            raise SchemaError(
                f"{csv_path} header {header!r} does not match the sweep "
                f"schema {EXPECTED_HEADER!r}")
        rows = list(reader)
    if not rows:
        raise SchemaError(f"{csv_path} has a header but no data rows")
    try:
        a = np.array([float(r[0]) for r in rows])
        b = np.array([float(r[1]) for r in rows])
        d = np.array([float(r[2]) for r in rows])
        w = np.array([float(r[3]) for r in rows])
    except (ValueError, IndexError) as exc:
        raise SchemaError(f"{csv_path} has malformed rows: {exc}") from exc
    return SweepData(a, b, d, w, [r[4] for r in rows])


def check_line_coincidence(data: SweepData) -> None:
    """Beyond a = 2/3 the lower bound must sit on the W curve."""
    tail = data.a >= TWO_THIRDS
    if tail.any() and not np.array_equal(data.d_lower[tail], data.w_ref[tail]):
        worst = np.max(np.abs(data.d_lower[tail] - data.w_ref[tail]))
        raise SchemaError(
            f"d_lower and w_ref differ for a >= 2/3 (max gap {worst:g}); "
            f"this is not a valid GDoF sweep")


def render_line(data: SweepData, out_path: Path) -> None:
    check_line_coincidence(data)
    b_values = sorted(set(data.b.tolist()))
    if len(b_values) != 1:
        raise SchemaError(
            f"line plot expects a single b value, found {len(b_values)}")
    order = np.argsort(data.a)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(data.a[order], data.d_lower[order], lw=2.0,
            label="achievable GDoF (lower bound)")
    ax.plot(data.a[order], data.w_ref[order], lw=1.4, ls="--", color="gray",
            label="interference-channel W curve")
    ax.axvline(TWO_THIRDS, color="lightgray", lw=0.8, zorder=0)
    ax.set_xlabel("interference exponent a")
    ax.set_ylabel("sum GDoF")
    ax.set_title(f"Generalized degrees of freedom, b = {b_values[0]:g}")
    ax.legend(loc="best")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def render_surface(data: SweepData, out_path: Path) -> None:
    a_values = np.array(sorted(set(data.a.tolist())))
    b_values = np.array(sorted(set(data.b.tolist())))
    if len(a_values) * len(b_values) != len(data.a):
        raise SchemaError("surface plot needs a full rectangular (a, b) grid")
    grid = np.full((len(b_values), len(a_values)), np.nan)
    a_idx = {v: i for i, v in enumerate(a_values)}
    b_idx = {v: i for i, v in enumerate(b_values)}
    for a, b, d in zip(data.a, data.b, data.d_lower):
        grid[b_idx[b], a_idx[a]] = d
    fig, ax = plt.subplots(figsize=(7, 4.8))
    mesh = ax.pcolormesh(a_values, b_values, grid, shading="nearest",
                         cmap="viridis")
    fig.colorbar(mesh, ax=ax, label="achievable sum GDoF (lower bound)")
    ax.set_xlabel("interference exponent a")
    ax.set_ylabel("weak-user exponent b")
    ax.set_title("Achievable generalized degrees of freedom")
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def render(spec: FigureSpec) -> Path:
    data = load_sweep(spec.csv_path)
    if spec.kind == "line":
        render_line(data, spec.out_path)
    elif spec.kind == "surface":
        render_surface(data, spec.out_path)
    else:
        raise SchemaError(f"unknown figure kind {spec.kind!r}")
    return spec.out_path


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="macp2p-plots",
        description="Render GDoF figures from macp2p sweep CSVs")
    ap.add_argument("--csv", type=Path, required=True)
    ap.add_argument("--kind", choices=("surface", "line"), required=True)
    ap.add_argument("--out", type=Path, required=True)
    args = ap.parse_args(argv)
    try:
        render(FigureSpec(args.csv, args.kind, args.out))
    except SchemaError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
