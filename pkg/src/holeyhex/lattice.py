"""Triangular lattice, semi-regular hexagons and their holes.

Coordinates
-----------
Write points of the plane as ``(X, y)`` where ``X`` is the horizontal
position in units of sqrt(3)/2 and ``y`` the vertical position in unit
lengths, with the origin at the centre of the hexagon.  The three line
families are then

* ``L_-`` (direction -pi/6):  ``y = l - X/2``
* ``L_+`` (direction +pi/6):  ``y = X/2 - l'``
* ``L_inf`` (vertical):       ``X = l''``

so that a line's label is its crossing point with the horizontal axis
(measured in sqrt(3) for the slanted families and sqrt(3)/2 for the
vertical one).  ``H_{a,b,c}`` is cut out by ``|l| <= (b+c)/2``,
``|l'| <= (a+b)/2`` and ``|l''| <= (a+c)/2``.  The south-west and
north-east sides lie on ``L_-`` (length ``a``), the vertical sides have
length ``b`` and the remaining two sides length ``c``.

A unit triangle is named by the three lines carrying its edges.  All labels
are stored doubled so that half-integers stay exact.  With this choice the
horizontal rhombus is ``(l,l',l'') + (l+1,l'+1,l'')`` and the left-leaning
one is ``(l,l',l'') + (l+1,l',l''-1)``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import Duplicate, InconsistentTriple, OutOfBounds, Untileable


class Orient(enum.Enum):
    LEFT = "L"
    RIGHT = "R"

    @property
    def rank(self) -> int:
        return 0 if self is Orient.LEFT else 1


@dataclass(frozen=True)
class HexDims:
    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"side {name} must be a positive integer, got {v!r}")

    @property
    def n_per_color(self) -> int:
        return self.a * self.b + self.b * self.c + self.c * self.a

    def scaled(self, n: int) -> "HexDims":
        return HexDims(n * self.a, n * self.b, n * self.c)

    def __iter__(self):
        return iter((self.a, self.b, self.c))


@dataclass(frozen=True)
class TriTriple:
    """A unit triangle given by its doubled edge-line labels.

    ``l``, ``lp`` and ``lpp`` are twice the labels of the ``L_-``, ``L_+`` and
    vertical lines carrying the triangle's edges.
    """

    l: int
    lp: int
    lpp: int
    orient: Orient

    def __post_init__(self):
        if not isinstance(self.orient, Orient):
            object.__setattr__(self, "orient", Orient(self.orient))
        found = triangle_at(self.l, self.lp, self.lpp)
        if found is not self.orient:
            what = "no unit triangle" if found is None else f"a {found.value} triangle"
            raise InconsistentTriple(
                f"doubled labels {(self.l, self.lp, self.lpp)} bound {what}, not {self.orient.value}"
            )

    @classmethod
    def left(cls, l, lp, lpp) -> "TriTriple":
        return cls(l, lp, lpp, Orient.LEFT)

    @classmethod
    def right(cls, l, lp, lpp) -> "TriTriple":
        return cls(l, lp, lpp, Orient.RIGHT)

    @classmethod
    def from_labels(cls, l, lp, lpp) -> "TriTriple":
        """Build from undoubled labels (ints, Fractions or strings like '3/2')."""
        doubled = []
        for v in (l, lp, lpp):
            d = 2 * Fraction(v)
            if d.denominator != 1:
                raise InconsistentTriple(f"label {v} is not a multiple of 1/2")
            doubled.append(int(d))
        orient = triangle_at(*doubled)
        if orient is None:
            raise InconsistentTriple(f"labels {(l, lp, lpp)} do not bound a unit triangle")
        return cls(*doubled, orient)

    @property
    def is_left(self) -> bool:
        return self.orient is Orient.LEFT

    @property
    def key(self):
        return (self.lpp, self.l, self.orient.rank)

    def __lt__(self, other: "TriTriple") -> bool:
        return self.key < other.key

    def labels(self) -> tuple[Fraction, Fraction, Fraction]:
        return (Fraction(self.l, 2), Fraction(self.lp, 2), Fraction(self.lpp, 2))

    def vertices(self) -> list[tuple[Fraction, Fraction]]:
        """Corners as exact ``(X, y)`` pairs (X in units of sqrt(3)/2)."""
        l, lp, lpp = self.labels()
        apex = (l + lp, (l - lp) / 2)
        top = (lpp, lpp / 2 - lp)
        bottom = (lpp, l - lpp / 2)
        if not self.is_left:
            top, bottom = (lpp, l - lpp / 2), (lpp, lpp / 2 - lp)
        return [apex, top, bottom]

    def neighbours(self) -> list["TriTriple"]:
        """The three triangles sharing an edge with this one (ignoring any region)."""
        l, lp, lpp = self.l, self.lp, self.lpp
        if self.is_left:
            return [
                TriTriple(l + 2, lp + 2, lpp, Orient.RIGHT),
                TriTriple(l + 2, lp, lpp - 2, Orient.RIGHT),
                TriTriple(l, lp + 2, lpp - 2, Orient.RIGHT),
            ]
        return [
            TriTriple(l - 2, lp - 2, lpp, Orient.LEFT),
            TriTriple(l - 2, lp, lpp + 2, Orient.LEFT),
            TriTriple(l, lp - 2, lpp + 2, Orient.LEFT),
        ]

    def to_json(self) -> list:
        return [self.l, self.lp, self.lpp, self.orient.value]

    @classmethod
    def from_json(cls, item) -> "TriTriple":
        if not isinstance(item, (list, tuple)) or len(item) != 4:
            raise ValueError(f"hole must be [2l, 2l', 2l'', 'L'|'R'], got {item!r}")
        l, lp, lpp, o = item
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in (l, lp, lpp)):
            raise ValueError(f"hole labels must be integers, got {item!r}")
        if o not in ("L", "R"):
            raise ValueError(f"orientation must be 'L' or 'R', got {o!r}")
        return cls(l, lp, lpp, Orient(o))

    def __repr__(self):
        return f"TriTriple({self.l}, {self.lp}, {self.lpp}, {self.orient.value})"


def triangle_at(l: int, lp: int, lpp: int) -> Orient | None:
    """Orientation of the unit triangle bounded by the three (doubled) lines.

    The ``L_-`` and ``L_+`` lines meet at the apex ``X = l + l'``.  The lines
    bound a unit triangle exactly when the vertical line sits one unit to the
    right (left-pointing) or left (right-pointing) of that apex; otherwise
    the three lines meet in a point or bound a larger triangle, and ``None``
    is returned.
    """
    apex_x2 = l + lp  # doubled X of the apex
    if lpp == apex_x2 + 2:
        return Orient.LEFT
    if lpp == apex_x2 - 2:
        return Orient.RIGHT
    return None


def _label_parities(dims: HexDims) -> tuple[int, int, int]:
    a, b, c = dims
    return ((b + c) % 2, (a + b) % 2, (a + c) % 2)


def in_hexagon(t: TriTriple, dims: HexDims) -> bool:
    """Whether ``t`` is one of the unit triangles of ``H_{a,b,c}``."""
    a, b, c = dims
    if (t.l % 2, t.lp % 2, t.lpp % 2) != _label_parities(dims):
        return False
    sl, slp, slpp = b + c, a + b, a + c
    if t.is_left:
        return -sl <= t.l <= sl - 2 and -slp <= t.lp <= slp - 2 and -slpp + 2 <= t.lpp <= slpp
    return -sl + 2 <= t.l <= sl and -slp + 2 <= t.lp <= slp and -slpp <= t.lpp <= slpp - 2


def hexagon_triangles(dims: HexDims) -> list[TriTriple]:
    """All unit triangles of the hole-free hexagon in canonical order."""
    a, b, c = dims
    out = []
    for lpp in range(-(a + c), a + c + 1, 2):
        for l in range(-(b + c), b + c + 1, 2):
            for orient, shift in ((Orient.LEFT, -2), (Orient.RIGHT, 2)):
                t = TriTriple(l, lpp + shift - l, lpp, orient)
                if in_hexagon(t, dims):
                    out.append(t)
    return out


@dataclass(frozen=True)
class Region:
    dims: HexDims
    holes: tuple[TriTriple, ...] = field(default_factory=tuple)

    @property
    def hole_set(self) -> frozenset[TriTriple]:
        return frozenset(self.holes)

    @property
    def is_balanced(self) -> bool:
        left = sum(1 for t in self.holes if t.is_left)
        return 2 * left == len(self.holes)

    def with_holes(self, extra: Iterable[TriTriple]) -> "Region":
        return build_region(*self.dims, list(self.holes) + list(extra))

    def to_json(self) -> dict:
        a, b, c = self.dims
        return {"a": a, "b": b, "c": c, "holes": [t.to_json() for t in self.holes]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj) -> "Region":
        if not isinstance(obj, dict):
            raise ValueError("region must be a JSON object")
        for k in ("a", "b", "c"):
            if k not in obj:
                raise ValueError(f"region is missing field {k!r}")
            if not isinstance(obj[k], int) or isinstance(obj[k], bool):
                raise ValueError(f"field {k!r} must be an integer")
        holes = obj.get("holes", [])
        if not isinstance(holes, list):
            raise ValueError("field 'holes' must be a list")
        parsed = []
        for i, item in enumerate(holes):
            try:
                parsed.append(TriTriple.from_json(item))
            except (ValueError, InconsistentTriple) as exc:
                raise ValueError(f"holes[{i}]: {exc}") from exc
        return build_region(obj["a"], obj["b"], obj["c"], parsed)

    @classmethod
    def loads(cls, text: str) -> "Region":
        return cls.from_json(json.loads(text))


def build_region(a: int, b: int, c: int, holes: Iterable[TriTriple] = ()) -> Region:
    dims = HexDims(a, b, c)
    seen = set()
    for t in holes:
        if not isinstance(t, TriTriple):
            raise TypeError(f"expected TriTriple, got {type(t).__name__}")
        if not in_hexagon(t, dims):
            raise OutOfBounds(f"{t} is not a triangle of H_{{{a},{b},{c}}}")
        if t in seen:
            raise Duplicate(f"{t} listed twice")
        seen.add(t)
    return Region(dims, tuple(sorted(seen)))


def enumerate_triangles(region: Region) -> list[TriTriple]:
    holes = region.hole_set
    return [t for t in hexagon_triangles(region.dims) if t not in holes]


@dataclass(frozen=True)
class HoleComponent:
    triangles: frozenset[TriTriple]

    @property
    def charge(self) -> int:
        right = sum(1 for t in self.triangles if not t.is_left)
        return right - (len(self.triangles) - right)


def _corner_set(t: TriTriple) -> set[tuple[Fraction, Fraction]]:
    return set(t.vertices())


def hole_components(region: Region) -> list[HoleComponent]:
    """Split the holes into maximal groups connected through shared edges or corners."""
    holes = list(region.holes)
    corners = [_corner_set(t) for t in holes]
    parent = list(range(len(holes)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(holes)):
        for j in range(i + 1, len(holes)):
            if corners[i] & corners[j]:
                parent[find(i)] = find(j)
    groups: dict[int, list[TriTriple]] = {}
    for i, t in enumerate(holes):
        groups.setdefault(find(i), []).append(t)
    comps = [HoleComponent(frozenset(g)) for g in groups.values()]
    return sorted(comps, key=lambda comp: min(comp.triangles).key)


def available_partners(t: TriTriple, region_dims: HexDims, removed: frozenset | set) -> list[TriTriple]:
    return [n for n in t.neighbours() if in_hexagon(n, region_dims) and n not in removed]


def forced_closure(region: Region) -> Region:
    """Add to the holes every rhombus that appears in all tilings.

    A triangle with exactly one free neighbour must be tiled together with
    it; both are removed and the scan repeats until nothing changes.  Raises
    :class:`Untileable` if some triangle is left with no free neighbour.
    """
    dims = region.dims
    removed = set(region.holes)
    free = [t for t in hexagon_triangles(dims) if t not in removed]
    changed = True
    while changed:
        changed = False
        for t in free:
            if t in removed:
                continue
            partners = available_partners(t, dims, removed)
            if not partners:
                raise Untileable(f"{t} has no available partner")
            if len(partners) == 1:
                removed.add(t)
                removed.add(partners[0])
                changed = True
        free = [t for t in free if t not in removed]
    if len(removed) == len(region.holes):
        return region
    return build_region(*dims, removed)
