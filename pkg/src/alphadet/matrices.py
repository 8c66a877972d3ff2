"""Dense matrices of exact rationals and the structured forms used by the
determinant-like functionals.

JSON wire form: {"rows": R, "cols": C, "entries": [["p/q", ...], ...]}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotSquare
from .perms import Perm, young_blocks
from .rationals import format_rational, parse_rational


class RatMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries: Iterable[Iterable]):
        grid = tuple(
            tuple(e if isinstance(e, Fraction) else Fraction(e) for e in row)
            for row in entries
        )
        if grid and any(len(r) != len(grid[0]) for r in grid):
            raise DimensionMismatch("ragged rows")
        self.entries = grid
        self.rows = len(grid)
        self.cols = len(grid[0]) if grid else 0

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def ones(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[1] * cols for _ in range(rows)])

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i][j]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def require_square(self) -> int:
        if not self.is_square():
            raise NotSquare(f"{self.rows}x{self.cols} matrix is not square")
        return self.rows

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def with_column(self, j: int, col: Sequence) -> "RatMatrix":
        return RatMatrix(
            [
                [col[i] if c == j else v for c, v in enumerate(row)]
                for i, row in enumerate(self.entries)
            ]
        )

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self.entries)) if self.rows else RatMatrix(())

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = other.transpose().entries
        return RatMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries]
        )

    def permute_columns(self, sigma: Perm) -> "RatMatrix":
        """Right-multiply by the permutation matrix of sigma: column j of
        the result is column sigma(j) of self."""
        if sigma.n != self.cols:
            raise DimensionMismatch("permutation size != column count")
        return RatMatrix(
            [[row[sigma.images[j] - 1] for j in range(self.cols)] for row in self.entries]
        )

    def permute_rows(self, sigma: Perm) -> "RatMatrix":
        """Left-multiply by the permutation matrix of sigma: row i of the
        result is row sigma^-1(i) of self."""
        if sigma.n != self.rows:
            raise DimensionMismatch("permutation size != row count")
        inv = sigma.inverse()
        return RatMatrix([self.entries[inv.images[i] - 1] for i in range(self.rows)])

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"RatMatrix({[[format_rational(e) for e in row] for row in self.entries]})"

    def to_json_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_rational(e) for e in row] for row in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "RatMatrix":
        m = cls([[parse_rational(e) for e in row] for row in data["entries"]])
        if m.rows != data["rows"] or m.cols != data["cols"]:
            raise DimensionMismatch("declared dimensions do not match entries")
        return m

    @classmethod
    def from_json(cls, text: str) -> "RatMatrix":
        return cls.from_json_dict(json.loads(text))


def scaled_int_rows(a: RatMatrix) -> tuple[list[tuple[int, ...]], int]:
    """Clear denominators: integer rows and the scale L with a = rows / L
    entrywise.  Permutation sums are homogeneous in the entries, so exact
    results are recovered by one division at the end."""
    scale = 1
    for row in a.entries:
        for e in row:
            d = e.denominator
            if d != 1:
                scale = scale // gcd(scale, d) * d
    rows = [tuple(int(e * scale) for e in row) for row in a.entries]
    return rows, scale


def perm_matrix(sigma: Perm) -> RatMatrix:
    """0/1 matrix with entry (i, j) = 1 iff i = sigma(j)."""
    n = sigma.n
    return RatMatrix(
        [[1 if sigma.images[j - 1] == i else 0 for j in range(1, n + 1)] for i in range(1, n + 1)]
    )


def inflate(a: RatMatrix, k: int) -> RatMatrix:
    """Repeat each column k times in place, turning kn x n into kn x kn."""
    if k < 1:
        raise ValueError("k must be positive")
    if a.rows != k * a.cols:
        raise DimensionMismatch(f"need kn x n input, got {a.rows}x{a.cols} with k={k}")
    return RatMatrix([[v for v in row for _ in range(k)] for row in a.entries])


def block_ones(mu: Sequence[int]) -> RatMatrix:
    """Block-diagonal matrix of all-one blocks with sizes mu_1, mu_2, ..."""
    n = sum(mu)
    grid = [[0] * n for _ in range(n)]
    for block in young_blocks(mu):
        for i in block:
            for j in block:
                grid[i - 1][j - 1] = 1
    return RatMatrix(grid)


def column_replicator(n: int, k: int) -> RatMatrix:
    """The kn x n matrix whose inflation is the block-ones matrix of (k^n):
    identity blocks stacked as I_n with each row repeated k times."""
    return RatMatrix(
        [[1 if r // k == c else 0 for c in range(n)] for r in range(n * k)]
    )


@dataclass(frozen=True)
class PermutedBlockOnes:
    """The row-permuted block-ones matrix P(g) * block_ones(mu), kept
    unmaterialized: entry (r, s) = 1 iff g^-1(r) and s share a mu-block."""

    g: Perm
    mu: tuple[int, ...]

    def __post_init__(self):
        if self.g.n != sum(self.mu):
            raise DimensionMismatch("permutation size != sum(mu)")

    def materialize(self) -> RatMatrix:
        return block_ones(self.mu).permute_rows(self.g)
