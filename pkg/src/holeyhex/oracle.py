"""Brute-force tiling counter used as ground truth.

Tiles by always covering the first uncovered triangle (canonical order)
with one of its free neighbours.  No linear algebra is involved, so it
cannot share a bug with the determinant routes.
"""

from __future__ import annotations

from typing import Iterator

from .errors import TooLarge
from .lattice import Region, TriTriple, enumerate_triangles

ORACLE_MAX_PER_COLOR = 60

Rhombus = tuple[TriTriple, TriTriple]


def _prepare(region: Region):
    tris = enumerate_triangles(region)
    n_left = sum(1 for t in tris if t.is_left)
    if max(n_left, len(tris) - n_left) > ORACLE_MAX_PER_COLOR:
        raise TooLarge(f"oracle is capped at {ORACLE_MAX_PER_COLOR} triangles per colour")
    index = {t: k for k, t in enumerate(tris)}
    partners = [[index[n] for n in t.neighbours() if n in index] for t in tris]
    return tris, partners


def _fits(tris) -> bool:
    return 2 * sum(1 for t in tris if t.is_left) == len(tris)


def oracle_count(region: Region) -> int:
    tris, partners = _prepare(region)
    if not _fits(tris):
        return 0
    full = (1 << len(tris)) - 1
    memo: dict[int, int] = {full: 1}

    def count(mask: int) -> int:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        free = ~mask & full
        k = (free & -free).bit_length() - 1
        total = 0
        for p in partners[k]:
            if not mask >> p & 1:
                total += count(mask | (1 << k) | (1 << p))
        memo[mask] = total
        return total

    return count(0)


def _walk(tris, partners, mask, full, placed) -> Iterator[list[Rhombus]]:
    if mask == full:
        yield list(placed)
        return
    free = ~mask & full
    k = (free & -free).bit_length() - 1
    for p in partners[k]:
        if not mask >> p & 1:
            pair = (tris[k], tris[p]) if tris[k].is_left else (tris[p], tris[k])
            placed.append(pair)
            yield from _walk(tris, partners, mask | (1 << k) | (1 << p), full, placed)
            placed.pop()


def oracle_enumerate(region: Region, limit: int | None = None) -> list[list[Rhombus]]:
    """Up to ``limit`` tilings, each a list of (left, right) rhombi."""
    tris, partners = _prepare(region)
    if not _fits(tris):
        return []
    out = []
    for tiling in _walk(tris, partners, 0, (1 << len(tris)) - 1, []):
        if limit is not None and len(out) >= limit:
            break
        out.append(tiling)
    return out
