"""Exact integer/rational matrix kernels.

Nothing here touches floating point.  Determinants of integer matrices use
Bareiss fraction-free elimination; rational matrices are scaled to integer
rows first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm
from typing import Sequence

from .errors import HalfIntegerArgument, NotSquare, Singular, TooLarge

PERMANENT_MAX = 14


@lru_cache(maxsize=None)
def binom_int(n: int, k: int) -> int:
    """Binomial coefficient that is zero unless ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def binom(n2: int, k2: int) -> int:
    """Binomial coefficient of doubled arguments ``n2/2`` choose ``k2/2``.

    Odd doubled values mean some coordinate went off the lattice and raise
    :class:`HalfIntegerArgument` instead of being silently treated as zero.
    """
    if n2 % 2 or k2 % 2:
        raise HalfIntegerArgument(f"binom({n2}/2, {k2}/2) has a half-integer argument")
    return binom_int(n2 // 2, k2 // 2)


@dataclass
class BigMatrix:
    rows: list[list]
    row_labels: tuple | None = None
    col_labels: tuple | None = None

    def __post_init__(self):
        self.rows = [list(r) for r in self.rows]
        width = len(self.rows[0]) if self.rows else 0
        if any(len(r) != width for r in self.rows):
            raise ValueError("ragged matrix")
        for labels, size in ((self.row_labels, len(self.rows)), (self.col_labels, width)):
            if labels is None:
                continue
            if len(labels) != size or len(set(labels)) != size:
                raise ValueError("labels must be unique and match the matrix size")

    @classmethod
    def zeros(cls, n: int, m: int | None = None, **kw) -> "BigMatrix":
        return cls([[0] * (n if m is None else m) for _ in range(n)], **kw)

    @classmethod
    def identity(cls, n: int) -> "BigMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def is_square(self) -> bool:
        n, m = self.shape
        return n == m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, BigMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __matmul__(self, other: "BigMatrix") -> "BigMatrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else [()] * m
        out = [[sum(x * y for x, y in zip(row, col) if x and y) for col in cols] for row in self.rows]
        return BigMatrix(out, self.row_labels, other.col_labels)

    def transpose(self) -> "BigMatrix":
        return BigMatrix([list(c) for c in zip(*self.rows)], self.col_labels, self.row_labels)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "BigMatrix":
        rl = tuple(self.row_labels[i] for i in rows) if self.row_labels else None
        cl = tuple(self.col_labels[j] for j in cols) if self.col_labels else None
        return BigMatrix([[self.rows[i][j] for j in cols] for i in rows], rl, cl)

    def minor(self, i: int, j: int) -> "BigMatrix":
        """Delete row ``i`` and column ``j`` (0-based); remaining order is kept."""
        n, m = self.shape
        return self.submatrix([r for r in range(n) if r != i], [c for c in range(m) if c != j])

    def scale(self, s) -> "BigMatrix":
        return BigMatrix([[s * x for x in r] for r in self.rows], self.row_labels, self.col_labels)

    def is_integer(self) -> bool:
        return all(isinstance(x, int) or Fraction(x).denominator == 1 for r in self.rows for x in r)


def _bareiss(rows: list[list[int]]) -> int:
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            mik = row_i[k]
            if mik == 0:
                if pivot != prev:
                    for j in range(k + 1, n):
                        row_i[j] = row_i[j] * pivot // prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_exact(m: BigMatrix | list[list]) -> Fraction:
    """Exact determinant; integer input gives a result with denominator 1."""
    if not isinstance(m, BigMatrix):
        m = BigMatrix(m)
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.shape} matrix")
    scale = Fraction(1)
    int_rows = []
    for r in m.rows:
        if all(isinstance(x, int) for x in r):
            int_rows.append(r)
            continue
        fr = [Fraction(x) for x in r]
        d = lcm(*(x.denominator for x in fr)) if fr else 1
        int_rows.append([int(x * d) for x in fr])
        scale /= d
    return Fraction(_bareiss(int_rows)) * scale


def cramer_entry(m: BigMatrix, i: int, j: int) -> Fraction:
    """Entry ``(i, j)`` (1-based) of ``m^-1`` as a signed minor over the determinant."""
    if not m.is_square:
        raise NotSquare(f"inverse of a {m.shape} matrix")
    n = m.shape[0]
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"({i}, {j}) outside a {n}x{n} matrix")
    d = det_exact(m)
    if d == 0:
        raise Singular("matrix is singular")
    sign = -1 if (i + j) % 2 else 1
    return sign * det_exact(m.minor(j - 1, i - 1)) / d


def inverse_exact(m: BigMatrix) -> BigMatrix:
    """Gauss-Jordan inverse over the rationals."""
    if not m.is_square:
        raise NotSquare(f"inverse of a {m.shape} matrix")
    n = m.shape[0]
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m.rows)]
    for k in range(n):
        piv = next((r for r in range(k, n) if aug[r][k] != 0), None)
        if piv is None:
            raise Singular("matrix is singular")
        aug[k], aug[piv] = aug[piv], aug[k]
        p = aug[k][k]
        aug[k] = [x / p for x in aug[k]]
        for r in range(n):
            if r != k and aug[r][k] != 0:
                f = aug[r][k]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[k])]
    return BigMatrix([row[n:] for row in aug], m.col_labels, m.row_labels)


def permanent_small(m: BigMatrix | list[list]) -> int:
    """Permanent by Ryser's formula with Gray-code updates."""
    if not isinstance(m, BigMatrix):
        m = BigMatrix(m)
    if not m.is_square:
        raise NotSquare(f"permanent of a {m.shape} matrix")
    n = m.shape[0]
    if n > PERMANENT_MAX:
        raise TooLarge(f"permanent of size {n} exceeds cap {PERMANENT_MAX}")
    if n == 0:
        return 1
    rows = m.rows
    row_sums = [0] * n
    total = 0
    gray = 0
    for k in range(1, 1 << n):
        # bit that flips between gray(k-1) and gray(k)
        bit = (k & -k).bit_length() - 1
        gray ^= 1 << bit
        if gray >> bit & 1:
            for i in range(n):
                row_sums[i] += rows[i][bit]
        else:
            for i in range(n):
                row_sums[i] -= rows[i][bit]
        prod = 1
        for s in row_sums:
            prod *= s
            if not prod:
                break
        ones = bin(gray).count("1")
        total += prod if (n - ones) % 2 == 0 else -prod
    return total
