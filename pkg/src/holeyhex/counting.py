"""Tiling counts by several independent routes, and the glue between them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .closed_form import k_entry, macmahon, sign_index
from .errors import NotAdmissible, RouteDisagreement, SignInconsistency, TooLarge, UnbalancedColors, Untileable
from .exact_linalg import BigMatrix, det_exact
from .lattice import HexDims, Region, TriTriple, build_region, forced_closure, hexagon_triangles
from .lgv_paths import path_matrix
from .matching_graph import Admissibility, classify_admissibility, dual_graph, kasteleyn_matrix
from .oracle import ORACLE_MAX_PER_COLOR, oracle_count

# production mode prefers the K-minor route up to this many removed pairs
KENYON_MAX_PAIRS = 8


class Route(enum.Enum):
    KASTELEYN_DET = "KasteleynDet"
    KENYON_MINOR = "KenyonMinor"
    PATH_MATRIX = "PathMatrix"
    ORACLE = "Oracle"


@dataclass(frozen=True)
class CountResult:
    count: int
    route: Route
    sign_epsilon: int | None = None

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("count must be non-negative")

    def to_json(self) -> dict:
        return {"count": str(self.count), "route": self.route.value, "epsilon": self.sign_epsilon}


def _split_colors(v: Iterable[TriTriple]) -> tuple[list[TriTriple], list[TriTriple]]:
    v = sorted(set(v))
    whites = [t for t in v if not t.is_left]
    blacks = [t for t in v if t.is_left]
    if len(whites) != len(blacks):
        raise UnbalancedColors(f"{len(blacks)} left and {len(whites)} right triangles")
    return whites, blacks


def _abs_int(x: Fraction) -> int:
    assert x.denominator == 1, x
    return abs(int(x))


def count_kasteleyn(region: Region, signed: bool = False) -> CountResult:
    """``|det|`` of the bi-adjacency matrix of the holey region.

    Admissibility-inducing hole sets are first closed under forced rhombi.
    With ``signed=True`` a non-admissible set is accepted and the result is
    the number of signed perfect matchings instead.
    """
    _split_colors(region.holes)
    try:
        closed = forced_closure(region)
    except Untileable:
        return CountResult(0, Route.KASTELEYN_DET)
    if not signed and classify_admissibility(region) is Admissibility.NEITHER:
        raise NotAdmissible("hole set neither preserves nor induces admissibility")
    target = region if signed else closed
    d = det_exact(kasteleyn_matrix(dual_graph(target)))
    return CountResult(_abs_int(d), Route.KASTELEYN_DET)


def k_minor(dims: HexDims, v: Iterable[TriTriple]) -> BigMatrix:
    whites, blacks = _split_colors(v)
    rows = [[k_entry(dims, w, b).value for b in blacks] for w in whites]
    return BigMatrix(rows, tuple(whites), tuple(blacks))


def count_kenyon(dims: HexDims, v: Iterable[TriTriple]) -> CountResult:
    """MacMahon's number times ``|det|`` of the inverse-Kasteleyn minor on ``v``.

    Always equals ``|det(A_{G minus V})|``; that is a tiling count whenever
    ``v`` induces admissibility.
    """
    d = det_exact(k_minor(dims, v))
    return CountResult(_abs_int(macmahon(*dims) * d), Route.KENYON_MINOR)


def count_pathmatrix(dims: HexDims, w: TriTriple, b: TriTriple) -> CountResult:
    return CountResult(_abs_int(det_exact(path_matrix(dims, w, b))), Route.PATH_MATRIX)


def _relabel_sign(dims: HexDims, w: TriTriple, b: TriTriple, pos_w: int, pos_b: int) -> int:
    parity = pos_w + pos_b + sign_index(w, dims) + sign_index(b, dims)
    return -1 if parity % 2 else 1


def pair_determinants(dims: HexDims) -> Iterator[tuple[TriTriple, TriTriple, Fraction, Fraction]]:
    """Yield ``(w, b, det(A minus {b, w}), det(P))`` for every white/black pair.

    The first determinant carries the relabelling sign: it is the minor
    with rows and columns in inherited canonical order, multiplied by
    ``(-1)`` to the sum of the two deleted positions and the two
    :func:`sign_index` values.
    """
    g = dual_graph(build_region(*dims))
    A = kasteleyn_matrix(g)
    for pw, w in enumerate(g.whites):
        for pb, b in enumerate(g.blacks):
            minor = det_exact(A.minor(pb, pw))
            yield w, b, _relabel_sign(dims, w, b, pw, pb) * minor, det_exact(path_matrix(dims, w, b))


@lru_cache(maxsize=None)
def calibrate_sign(dims: HexDims) -> int:
    """The single ``eps`` with ``det(A minus {b,w}) = eps * det(P)`` over all pairs."""
    if max(dims) > 4:
        raise TooLarge("sign calibration enumerates every pair; sides are capped at 4")
    eps = None
    for w, b, da, dp in pair_determinants(dims):
        if dp == 0 and da == 0:
            continue
        if dp == 0 or abs(da) != abs(dp):
            raise SignInconsistency(f"|det| differs for {w}, {b}: {da} vs {dp}")
        this = 1 if da == dp else -1
        if eps is None:
            eps = this
        elif this != eps:
            raise SignInconsistency(f"sign flips at pair {w}, {b}")
    if eps is None:
        raise SignInconsistency("no pair with a non-zero determinant")
    return eps


@lru_cache(maxsize=None)
def inverse_sign(dims: HexDims) -> int:
    """Global sign between ``K`` and the true inverse, read off one entry via Cramer's rule."""
    from .exact_linalg import cramer_entry

    g = dual_graph(build_region(*dims))
    A = kasteleyn_matrix(g)
    for pw, w in enumerate(g.whites):
        for pb, b in enumerate(g.blacks):
            k = k_entry(dims, w, b).value
            if k:
                exact = cramer_entry(A, pw + 1, pb + 1)
                if exact == k:
                    return 1
                if exact == -k:
                    return -1
                raise SignInconsistency(f"|K| disagrees with A^-1 at {w}, {b}")
    raise SignInconsistency("K has no non-zero entry")


def _oracle_allowed(region: Region) -> bool:
    tris = hexagon_triangles(region.dims)
    per_color = len(tris) // 2
    return per_color <= ORACLE_MAX_PER_COLOR


def count(region: Region, route: Route | None = None, verify: bool = False,
          signed: bool = False) -> CountResult:
    """Count tilings of ``region``.

    Without ``route`` the K-minor route is used for small hole sets and the
    full determinant otherwise.  ``verify=True`` runs every applicable route
    (plus the oracle when the region is small) and raises
    :class:`RouteDisagreement` if any two differ.
    """
    _split_colors(region.holes)
    try:
        forced_closure(region)
    except Untileable:
        return CountResult(0, route or Route.KASTELEYN_DET)
    if not signed and classify_admissibility(region) is Admissibility.NEITHER:
        raise NotAdmissible("hole set neither preserves nor induces admissibility")

    dims = region.dims
    holes = region.holes
    whites, blacks = _split_colors(holes)

    def run(r: Route) -> CountResult:
        if r is Route.KASTELEYN_DET:
            return count_kasteleyn(region, signed=signed)
        if r is Route.KENYON_MINOR:
            return count_kenyon(dims, holes)
        if r is Route.PATH_MATRIX:
            if len(whites) != 1:
                raise ValueError("the path-matrix route needs exactly one removed pair")
            return count_pathmatrix(dims, whites[0], blacks[0])
        if r is Route.ORACLE:
            if signed:
                raise ValueError("the oracle counts tilings, not signed matchings")
            return CountResult(oracle_count(region), Route.ORACLE)
        raise ValueError(r)

    if not verify:
        if route is None:
            route = Route.KENYON_MINOR if len(whites) <= KENYON_MAX_PAIRS else Route.KASTELEYN_DET
        return run(route)

    routes = [Route.KASTELEYN_DET, Route.KENYON_MINOR]
    if len(whites) == 1:
        routes.append(Route.PATH_MATRIX)
    if not signed and _oracle_allowed(region):
        routes.append(Route.ORACLE)
    results = {r: run(r) for r in routes}
    values = {r.value: str(res.count) for r, res in results.items()}
    if len(set(values.values())) != 1:
        raise RouteDisagreement(f"routes disagree on {region.dumps()}: {values}", values)
    chosen = results[route] if route in results else results[routes[0]]
    eps = None
    if len(whites) == 1 and max(dims) <= 4:
        eps = calibrate_sign(dims)
    return CountResult(chosen.count, chosen.route, eps)
