"""Bipartite dual graph of a region and its Kasteleyn matrix.

Black vertices are left-pointing triangles, white vertices right-pointing
ones.  Directing every edge from black to white is already an admissible
orientation on hexagonal sub-graphs, so the Kasteleyn matrix is the plain
0/1 bi-adjacency matrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import Untileable, VertexNotPresent
from .exact_linalg import BigMatrix
from .lattice import Region, TriTriple, enumerate_triangles, forced_closure, hole_components


@dataclass(frozen=True)
class DualGraph:
    blacks: tuple[TriTriple, ...]
    whites: tuple[TriTriple, ...]
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def black_index(self) -> dict[TriTriple, int]:
        return {t: i for i, t in enumerate(self.blacks)}

    @cached_property
    def white_index(self) -> dict[TriTriple, int]:
        return {t: i for i, t in enumerate(self.whites)}

    def degree(self, t: TriTriple) -> int:
        if t.is_left:
            i = self.black_index[t]
            return sum(1 for b, _ in self.edges if b == i)
        j = self.white_index[t]
        return sum(1 for _, w in self.edges if w == j)

    def __contains__(self, t: TriTriple) -> bool:
        return t in (self.black_index if t.is_left else self.white_index)


def _graph_from(blacks: Iterable[TriTriple], whites: Iterable[TriTriple]) -> DualGraph:
    blacks = tuple(blacks)
    whites = tuple(whites)
    widx = {t: j for j, t in enumerate(whites)}
    edges = []
    for i, b in enumerate(blacks):
        for n in b.neighbours():
            j = widx.get(n)
            if j is not None:
                edges.append((i, j))
    return DualGraph(blacks, whites, tuple(sorted(edges)))


def dual_graph(region: Region) -> DualGraph:
    tris = enumerate_triangles(region)
    return _graph_from([t for t in tris if t.is_left], [t for t in tris if not t.is_left])


def kasteleyn_matrix(g: DualGraph) -> BigMatrix:
    """Bi-adjacency matrix, rows indexed by blacks and columns by whites."""
    rows = [[0] * len(g.whites) for _ in g.blacks]
    for i, j in g.edges:
        rows[i][j] = 1
    return BigMatrix(rows, g.blacks, g.whites)


def remove_vertices(g: DualGraph, v: Iterable[TriTriple]) -> DualGraph:
    v = set(v)
    for t in v:
        if t not in g:
            raise VertexNotPresent(t)
    return _graph_from(
        [t for t in g.blacks if t not in v],
        [t for t in g.whites if t not in v],
    )


class Admissibility(enum.Enum):
    PRESERVING = "Preserving"
    INDUCING = "Inducing"
    NEITHER = "Neither"


def _is_preserving(region: Region) -> bool:
    return all(comp.charge % 2 == 0 for comp in hole_components(region))


def classify_admissibility(region: Region) -> Admissibility:
    """Classify the hole set by the per-component parity of black and white vertices."""
    if _is_preserving(region):
        return Admissibility.PRESERVING
    try:
        closed = forced_closure(region)
    except Untileable:
        return Admissibility.NEITHER
    if _is_preserving(closed):
        return Admissibility.INDUCING
    return Admissibility.NEITHER
