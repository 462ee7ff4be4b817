"""Tilings as non-intersecting north/east lattice paths.

``psi`` sends a triangle ``(l, l', l'')`` to ``((l+l'+l'')/2, (l-l'-l'')/2)``.
Horizontal rhombi become east steps, left-leaning rhombi north steps and
right-leaning rhombi collapse to a point, so each tiling of a holey hexagon
is a family of non-intersecting paths between the points below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import ParityViolation
from .exact_linalg import BigMatrix, binom, det_exact
from .lattice import HexDims, Orient, Region, TriTriple, enumerate_triangles, in_hexagon


@dataclass(frozen=True, order=True)
class LatticePoint:
    """Point of Z_{a,c} x Z_{a,b}, both coordinates stored doubled."""

    x: int
    y: int

    def check(self, dims: HexDims) -> "LatticePoint":
        a, b, c = dims
        if (self.x - (a + c - 1)) % 2 or (self.y - (a + b - 1)) % 2:
            raise ParityViolation(f"{self} is not on Z_{{{a},{c}}} x Z_{{{a},{b}}}")
        return self

    def __repr__(self):
        return f"LatticePoint({self.x}/2, {self.y}/2)"


@dataclass(frozen=True)
class PathEndpoints:
    starts: tuple[LatticePoint, ...]
    ends: tuple[LatticePoint, ...]


def psi(t: TriTriple, dims: HexDims | None = None) -> LatticePoint:
    s, d = t.l + t.lp + t.lpp, t.l - t.lp - t.lpp
    if s % 2 or d % 2:
        raise ParityViolation(f"psi({t}) leaves the half-integer grid")
    p = LatticePoint(s // 2, d // 2)
    return p.check(dims) if dims is not None else p


def lattice_path_count(start: LatticePoint, end: LatticePoint) -> int:
    """Number of north/east unit-step paths from ``start`` to ``end``."""
    dx, dy = end.x - start.x, end.y - start.y
    return binom(dx + dy, dx)


def boundary_endpoints(dims: HexDims) -> PathEndpoints:
    """The ``a`` start points on the south-west side and end points on the north-east side."""
    a, b, c = dims
    starts = tuple(LatticePoint(2 * i - (1 + a + c), (a - b + 1) - 2 * i) for i in range(1, a + 1))
    ends = tuple(LatticePoint(2 * j - (1 + a - c), (a + b + 1) - 2 * j) for j in range(1, a + 1))
    return PathEndpoints(starts, ends)


def pair_endpoints(dims: HexDims, w: TriTriple, b: TriTriple) -> PathEndpoints:
    """Boundary points followed by ``psi(w)`` as the last start and ``psi(b)`` as the last end."""
    _check_pair(dims, w, b)
    bd = boundary_endpoints(dims)
    return PathEndpoints(bd.starts + (psi(w, dims),), bd.ends + (psi(b, dims),))


def _check_pair(dims, w, b):
    if w.orient is not Orient.RIGHT or b.orient is not Orient.LEFT:
        raise ValueError("need a right-pointing w and a left-pointing b")
    for t in (w, b):
        if not in_hexagon(t, dims):
            raise ValueError(f"{t} is not in H_{{{dims.a},{dims.b},{dims.c}}}")


def path_matrix(dims: HexDims, w: TriTriple, b: TriTriple) -> BigMatrix:
    """The ``(a+1) x (a+1)`` lattice path matrix for ``H`` with ``w`` and ``b`` removed.

    Entries are written out case by case rather than via ``lattice_path_count``
    so that the two constructions can be compared.
    """
    _check_pair(dims, w, b)
    a, bb, c = dims
    r = psi(w, dims)
    l = psi(b, dims)
    n = a + 1
    m = [[0] * n for _ in range(n)]
    for i in range(1, a + 1):
        for j in range(1, a + 1):
            m[i - 1][j - 1] = binom(2 * (bb + c), 2 * (c + j - i))
    for j in range(1, a + 1):
        # binom((b+c)/2 - r_x - r_y, j - r_x - (a-c+1)/2)
        m[a][j - 1] = binom(bb + c - r.x - r.y, 2 * j - r.x - (a - c + 1))
    for i in range(1, a + 1):
        # binom(l_x + l_y + (b+c)/2, l_x - i + (a+c+1)/2)
        m[i - 1][a] = binom(l.x + l.y + bb + c, l.x - 2 * i + (a + c + 1))
    m[a][a] = binom(l.x + l.y - r.x - r.y, l.x - r.x)
    return BigMatrix(m)


def lgv_matrix(starts: Sequence[LatticePoint], ends: Sequence[LatticePoint],
               count_fn: Callable[[LatticePoint, LatticePoint], int] = lattice_path_count) -> BigMatrix:
    if len(starts) != len(ends):
        raise ValueError(f"{len(starts)} starts but {len(ends)} ends")
    return BigMatrix([[count_fn(s, e) for e in ends] for s in starts])


def lgv_signed_count(starts: Sequence[LatticePoint], ends: Sequence[LatticePoint],
                     count_fn: Callable[[LatticePoint, LatticePoint], int] = lattice_path_count) -> int:
    """Signed sum over non-intersecting path families, as a determinant."""
    return int(det_exact(lgv_matrix(starts, ends, count_fn)))


def endpoint_triangles(region: Region) -> dict[str, list[TriTriple]]:
    """Start/end triangles ``S_H, S_T, E_H, E_T`` of a holey hexagon.

    ``S_T`` holds left triangles whose right-leaning partner is missing
    (i.e. sits in a hole); ``E_T`` the right triangles whose partner is
    missing.  Inside ``H`` the only such triangles away from holes are the
    ones on the south-west and north-east sides, which are ``S_H``/``E_H``.
    """
    dims = region.dims
    a, b, c = dims
    present = set(enumerate_triangles(region))
    s_h = [TriTriple(-(b + c), (b - a) + 2 * i - 2, 2 * i - (a + c), Orient.LEFT) for i in range(1, a + 1)]
    e_h = [TriTriple(b + c, 2 * j - (a + b), (c - a) + 2 * j - 2, Orient.RIGHT) for j in range(1, a + 1)]
    s_h = [t for t in s_h if t in present]
    e_h = [t for t in e_h if t in present]
    s_t, e_t = [], []
    for t in sorted(present):
        if t.is_left and t not in s_h:
            partner = TriTriple(t.l, t.lp + 2, t.lpp - 2, Orient.RIGHT)
            if partner not in present:
                s_t.append(t)
        elif not t.is_left and t not in e_h:
            partner = TriTriple(t.l, t.lp - 2, t.lpp + 2, Orient.LEFT)
            if partner not in present:
                e_t.append(t)
    return {"S_H": s_h, "S_T": s_t, "E_H": e_h, "E_T": e_t}


def region_endpoints(region: Region) -> PathEndpoints:
    sets = endpoint_triangles(region)
    starts = tuple(psi(t, region.dims) for t in sets["S_H"] + sets["S_T"])
    ends = tuple(psi(t, region.dims) for t in sets["E_H"] + sets["E_T"])
    return PathEndpoints(starts, ends)
