"""Dense linear algebra over the binary field.

Matrices are immutable and stored column-packed: each column is a Python
int whose bit ``r`` holds the entry of row ``r + 1``.  Row 1 is the top
(most significant) signal level, so the down-shift that models a channel
gain moves bits toward higher row indices.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def rank_of_columns(columns: Iterable[int]) -> int:
    """GF(2) rank of a set of column bitmasks, by in-place elimination."""
    basis: list[int] = []  # reduced vectors, distinct lowest set bits
    for v in columns:
        for b in basis:
            low = b & -b
            if v & low:
                v ^= b
        if v:
            basis.append(v)
    return len(basis)


class Gf2Basis:
    """Incremental GF(2) span, for repeated membership/rank queries."""

    def __init__(self, columns: Iterable[int] = ()) -> None:
        self._basis: list[int] = []
        for v in columns:
            self.add(v)

    def reduce(self, v: int) -> int:
        for b in self._basis:
            low = b & -b
            if v & low:
                v ^= b
        return v

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def add(self, v: int) -> bool:
        """Insert v into the span; returns True if the rank grew."""
        v = self.reduce(v)
        if v == 0:
            return False
        self._basis.append(v)
        return True

    @property
    def rank(self) -> int:
        return len(self._basis)


class BitMatrix:
    """Immutable dense matrix over GF(2).

    0x m and n x 0 shapes are legal (rank 0); they let degenerate
    precoder blocks flow through constructions with no special cases.
    """

    __slots__ = ("rows", "cols", "_cols")

    def __init__(self, rows: int, cols: Sequence[int]) -> None:
        if rows < 0:
            raise ValueError("rows must be nonnegative")
        mask = (1 << rows) - 1
        packed = tuple(int(c) for c in cols)
        for c in packed:
            if c < 0 or c & ~mask:
                raise ValueError("column has bits outside the row range")
        self.rows = rows
        self.cols = len(packed)
        self._cols = packed

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, (0,) * cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, tuple(1 << r for r in range(n)))

    @classmethod
    def from_rows(cls, rows_list: Sequence[Sequence[int]]) -> "BitMatrix":
        """Build from a list of rows, row 1 first."""
        nrows = len(rows_list)
        ncols = len(rows_list[0]) if nrows else 0
        cols = [0] * ncols
        for r, row in enumerate(rows_list):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for c, bit in enumerate(row):
                if bit not in (0, 1):
                    raise ValueError("entries must be 0 or 1")
                if bit:
                    cols[c] |= 1 << r
        return cls(nrows, cols)

    @classmethod
    def from_entries(cls, rows: int, cols: int,
                     ones: Iterable[tuple[int, int]]) -> "BitMatrix":
        """Build from 1-based (row, col) positions of the one-entries."""
        packed = [0] * cols
        for r, c in ones:
            if not (1 <= r <= rows and 1 <= c <= cols):
                raise ValueError(f"entry ({r},{c}) outside {rows}x{cols}")
            packed[c - 1] |= 1 << (r - 1)
        return cls(rows, packed)

    @classmethod
    def unit_column(cls, rows: int, r: int) -> "BitMatrix":
        """Single column with a one at row r (1-based)."""
        return cls.from_entries(rows, 1, [(r, 1)])

    # -- accessors -----------------------------------------------------

    def entry(self, r: int, c: int) -> int:
        """1-based entry lookup."""
        if not (1 <= r <= self.rows and 1 <= c <= self.cols):
            raise IndexError("entry outside matrix")
        return (self._cols[c - 1] >> (r - 1)) & 1

    def columns(self) -> tuple[int, ...]:
        return self._cols

    def to_rows(self) -> list[list[int]]:
        return [[(c >> r) & 1 for c in self._cols] for r in range(self.rows)]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._cols)

    # -- algebra -------------------------------------------------------

    def __xor__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in XOR")
        return BitMatrix(self.rows, tuple(a ^ b for a, b in zip(self._cols, other._cols)))

    __add__ = __xor__

    def mul_vector(self, x: Sequence[int]) -> int:
        """Product M*x for a 0/1 vector x of length cols; packed result."""
        if len(x) != self.cols:
            raise ValueError("vector length mismatch")
        out = 0
        for bit, c in zip(x, self._cols):
            if bit:
                out ^= c
        return out

    def shift(self, k: int) -> "BitMatrix":
        """Apply the down-shift operator S^k (rows move down k levels)."""
        if k < 0:
            raise ValueError("shift amount must be nonnegative")
        mask = (1 << self.rows) - 1
        return BitMatrix(self.rows, tuple((c << k) & mask for c in self._cols))

    def rank(self) -> int:
        return rank_of_columns(self._cols)

    # -- stacking and slicing -------------------------------------------

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.rows != other.rows:
            raise ValueError("hstack requires equal row counts")
        return BitMatrix(self.rows, self._cols + other._cols)

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        """[self; other] with self on top."""
        if self.cols != other.cols:
            raise ValueError("vstack requires equal column counts")
        return BitMatrix(
            self.rows + other.rows,
            tuple(a | (b << self.rows) for a, b in zip(self._cols, other._cols)),
        )

    def rows_slice(self, i: int, j: int) -> "BitMatrix":
        """Rows i..j inclusive, 1-based."""
        if not (1 <= i <= j <= self.rows):
            raise ValueError(f"rows_slice({i},{j}) outside 1..{self.rows}")
        width = j - i + 1
        mask = (1 << width) - 1
        return BitMatrix(width, tuple((c >> (i - 1)) & mask for c in self._cols))

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, BitMatrix)
                and self.rows == other.rows and self._cols == other._cols)

    def __hash__(self) -> int:
        return hash((self.rows, self._cols))

    def __repr__(self) -> str:
        body = ";".join("".join(str(b) for b in row) for row in self.to_rows())
        return f"BitMatrix({self.rows}x{self.cols}:{body})"


def rank(m: BitMatrix) -> int:
    """Column-space dimension of m over GF(2)."""
    return m.rank()


def shift_apply(k: int, m: BitMatrix) -> BitMatrix:
    """S^k * m; k past the row count yields the zero matrix."""
    return m.shift(k)


def hstack(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    return a.hstack(b)


def vstack(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    return a.vstack(b)


def rows_slice(a: BitMatrix, i: int, j: int) -> BitMatrix:
    return a.rows_slice(i, j)


def hstack_all(mats: Sequence[BitMatrix]) -> BitMatrix:
    mats = [m for m in mats]
    if not mats:
        raise ValueError("need at least one matrix")
    out = mats[0]
    for m in mats[1:]:
        out = out.hstack(m)
    return out
