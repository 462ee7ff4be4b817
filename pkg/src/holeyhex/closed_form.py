"""Closed forms: MacMahon's product, the LU factors of the path matrix, and
the entries of the inverse Kasteleyn matrix.

Everything is exact.  Lattice coordinates arrive doubled (as produced by
:func:`holeyhex.lgv_paths.psi`) and are halved only after a parity check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import DomainError, ParityViolation, TooLarge
from .exact_linalg import BigMatrix, binom, binom_int
from .lattice import HexDims, TriTriple, hexagon_triangles
from .lgv_paths import _check_pair, psi

K_MATRIX_MAX = 400


@lru_cache(maxsize=None)
def macmahon(a: int, b: int, c: int) -> int:
    """Number of rhombus tilings of ``H_{a,b,c}`` (boxed plane partitions)."""
    if min(a, b, c) < 0:
        raise ValueError("side lengths must be non-negative")
    value = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                value *= Fraction(i + j + k - 1, i + j + k - 2)
    assert value.denominator == 1
    return int(value)


def _fact_ratio(num: tuple[int, ...], den: tuple[int, ...]) -> Fraction:
    """``prod(num!) / prod(den!)`` where a negative in ``den`` makes the whole thing 0."""
    if any(n < 0 for n in den):
        return Fraction(0)
    if any(n < 0 for n in num):
        raise DomainError(f"factorial of a negative number in {num}")
    top = 1
    for n in num:
        top *= factorial(n)
    bottom = 1
    for n in den:
        bottom *= factorial(n)
    return Fraction(top, bottom)


def _half(n2: int, what: str) -> int:
    if n2 % 2:
        raise ParityViolation(f"{what} = {n2}/2 is not an integer")
    return n2 // 2


def lu_A(b: int, c: int, i: int, j: int) -> Fraction:
    return _fact_ratio((c, i - 1, b + j - 1), (j - 1, b + i - 1, i - j, c - i + j))


def lu_C(b: int, c: int, i: int, j: int) -> Fraction:
    return _fact_ratio((b, j - 1, b + c + i - 1), (b + i - 1, c + j - 1, j - i, b + i - j))


def lu_B(a: int, b: int, c: int, rx: int, ry: int, j: int) -> Fraction:
    """Bottom-row entry of ``L``; ``rx``/``ry`` are doubled coordinates of ``psi(w)``."""
    top = _half(b + c - rx - ry, "b/2 + c/2 - r_x - r_y")
    total = Fraction(0)
    for v in range(1, j + 1):
        bottom = _half(2 * v - (a - c + 1) - rx, "v - (a-c+1)/2 - r_x")
        bn = binom_int(top, bottom)
        if not bn:
            continue
        coeff = _fact_ratio((b + j - 1, c + v - 1, b + j - v - 1), (b - 1, v - 1, j - v, b + c + j - 1))
        total += (-1) ** (j - v) * coeff * bn
    return total


def lu_D(a: int, b: int, c: int, lx: int, ly: int, i: int) -> Fraction:
    """Last-column entry of ``U``; ``lx``/``ly`` are doubled coordinates of ``psi(b)``."""
    top = _half(b + c + lx + ly, "b/2 + c/2 + l_x + l_y")
    total = Fraction(0)
    for v in range(1, i + 1):
        bottom = _half((a + c + 1) + lx - 2 * v, "(a+c+1)/2 + l_x - v")
        bn = binom_int(top, bottom)
        if not bn:
            continue
        coeff = _fact_ratio((i - 1, b + v - 1, c + i - v - 1), (c - 1, v - 1, b + i - 1, i - v))
        total += (-1) ** (i - v) * coeff * bn
    return total


def lu_factors(dims: HexDims, w: TriTriple, b: TriTriple) -> tuple[BigMatrix, BigMatrix]:
    """``L`` and ``U`` with ``L @ U`` equal to the path matrix of ``(w, b)``."""
    _check_pair(dims, w, b)
    a, bb, c = dims
    r = psi(w, dims)
    l = psi(b, dims)
    n = a + 1
    L = [[Fraction(0)] * n for _ in range(n)]
    U = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, a + 1):
        for j in range(1, a + 1):
            L[i - 1][j - 1] = lu_A(bb, c, i, j)
            U[i - 1][j - 1] = lu_C(bb, c, i, j)
    Bs = [lu_B(a, bb, c, r.x, r.y, j) for j in range(1, a + 1)]
    Ds = [lu_D(a, bb, c, l.x, l.y, i) for i in range(1, a + 1)]
    for k in range(a):
        L[a][k] = Bs[k]
        U[k][a] = Ds[k]
    # L is unit lower-triangular: above the diagonal of the last column stays 0
    L[a][a] = Fraction(1)
    corner = binom(l.x + l.y - r.x - r.y, l.x - r.x)
    U[a][a] = corner - sum(x * y for x, y in zip(Bs, Ds))
    return BigMatrix(L), BigMatrix(U)


def g_fn(u: int, v: int, w: int, x: int, y: int, z: int) -> Fraction:
    """The alternating sum ``g(u, v, w, x, y, z)``; ``x`` and ``y`` are doubled."""
    if z < 1:
        raise ValueError("z must be at least 1")
    top = _half(v + w + x + y, "v/2 + w/2 + x + y")
    total = 0
    for s in range(1, z + 1):
        bottom = _half(x - 2 * s + u + w + 1, "x - s + u/2 + w/2 + 1/2")
        bn = binom_int(top, bottom)
        if bn:
            total += (-1) ** (z - s) * binom_int(v + s - 1, s - 1) * binom_int(w + z - s - 1, w - 1) * bn
    return Fraction(total)


def sign_index(t: TriTriple, dims: HexDims) -> int:
    """Index used in the ``(-1)^(i+j)`` factor of an inverse Kasteleyn entry.

    This is the triangle's ``L_-`` label shifted to start at 0.  Only its
    parity matters: with it, the entries below are exactly the inverse of the
    0/1 Kasteleyn matrix.  Positions in a vertex ordering cannot play this
    role in general (see the README).
    """
    return (t.l + dims.b + dims.c) // 2


@dataclass(frozen=True)
class KEntry:
    value: Fraction
    sign_indices: tuple[int, int]


def k_entry(dims: HexDims, w: TriTriple, b: TriTriple) -> KEntry:
    _check_pair(dims, w, b)
    a, bb, c = dims
    pi = psi(w, dims)
    pj = psi(b, dims)
    value = Fraction(binom(pj.x + pj.y - pi.x - pi.y, pj.x - pi.x))
    for t in range(1, a + 1):
        num = g_fn(a, bb, c, pj.x, pj.y, t) * g_fn(a, c, bb, -pi.y, -pi.x, t)
        if num:
            value -= num / (binom_int(bb + c + t - 1, bb + t - 1) * binom_int(bb + t - 1, t - 1))
    i, j = sign_index(w, dims), sign_index(b, dims)
    if (i + j) % 2:
        value = -value
    return KEntry(value, (i, j))


def k_matrix(dims: HexDims) -> BigMatrix:
    """Full ``K``: rows are whites, columns blacks, both in canonical order."""
    n = dims.n_per_color
    if n > K_MATRIX_MAX:
        raise TooLarge(f"K would have {n}x{n} entries (cap {K_MATRIX_MAX})")
    tris = hexagon_triangles(dims)
    blacks = [t for t in tris if t.is_left]
    whites = [t for t in tris if not t.is_left]
    rows = [[k_entry(dims, w, b).value for b in blacks] for w in whites]
    return BigMatrix(rows, tuple(whites), tuple(blacks))
