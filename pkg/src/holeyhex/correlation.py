"""Finite-size hole correlations ``M(H minus T) / M(H)`` via inverse-Kasteleyn minors.

By Kenyon's theorem the MacMahon factors cancel, so the ratio is just
``|det K_V|`` and never needs the full Kasteleyn matrix.  Holes stay at
fixed labels (relative to the centre) while the hexagon is scaled.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, TextIO

import numpy as np

from .counting import k_minor
from .errors import DegenerateFit, ParityViolation
from .exact_linalg import det_exact
from .lattice import HexDims, Region, TriTriple, build_region, hole_components, in_hexagon

SQRT3_2 = math.sqrt(3) / 2


@dataclass(frozen=True)
class CorrelationPoint:
    n: int
    ratio: Fraction
    separation: float


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    residual: float

    def to_json(self) -> dict:
        return asdict(self)


def centroid(triangles: Iterable[TriTriple]) -> tuple[float, float]:
    """Euclidean centroid, unit triangle side = 1."""
    xs, ys = [], []
    for t in triangles:
        pts = t.vertices()
        xs.append(sum(float(p[0]) for p in pts) / 3 * SQRT3_2)
        ys.append(sum(float(p[1]) for p in pts) / 3)
    return (sum(xs) / len(xs), sum(ys) / len(ys))


def hole_separation(region: Region) -> float:
    """Smallest distance between centroids of distinct hole components (0 if fewer than two)."""
    cents = [centroid(comp.triangles) for comp in hole_components(region)]
    if len(cents) < 2:
        return 0.0
    return min(math.dist(p, q) for p, q in combinations(cents, 2))


def translate(t: TriTriple, up: int = 0, right: int = 0) -> TriTriple:
    """Shift by ``up`` unit steps vertically and ``right`` lattice steps to the east.

    One east step moves ``sqrt(3)`` horizontally (two triangle widths).
    """
    return TriTriple(t.l + 2 * up + 2 * right, t.lp - 2 * up + 2 * right, t.lpp + 4 * right, t.orient)


def kenyon_ratio(dims: HexDims, holes: Sequence[TriTriple]) -> Fraction:
    if not holes:
        return Fraction(1)
    return abs(det_exact(k_minor(dims, holes)))


def correlation_sequence(base_dims: HexDims, holes: Sequence[TriTriple], n_max: int) -> list[CorrelationPoint]:
    """Ratios for ``H_{n a0, n b0, n c0}``, ``n = 1..n_max``.

    Values of ``n`` where the fixed holes are off the lattice or outside the
    hexagon are skipped; if every ``n`` is skipped :class:`ParityViolation`
    is raised.
    """
    points = []
    for n in range(1, n_max + 1):
        dims = base_dims.scaled(n)
        if not all(in_hexagon(t, dims) for t in holes):
            continue
        region = build_region(*dims, holes)
        points.append(CorrelationPoint(n, kenyon_ratio(dims, region.holes), hole_separation(region)))
    if not points and holes:
        raise ParityViolation("holes fit none of the scaled hexagons")
    return points


def pair_scan(base_dims: HexDims, n: int, hole: Sequence[TriTriple],
              separations: Sequence[int]) -> list[CorrelationPoint]:
    """Two copies of ``hole`` placed ``d`` units apart vertically, straddling the centre.

    Each ratio is normalised by the two single-hole ratios, so it tends to 1
    as the holes decouple.
    """
    dims = base_dims.scaled(n)
    out = []
    for d in separations:
        lower = [translate(t, up=-(d // 2)) for t in hole]
        upper = [translate(t, up=d - d // 2) for t in hole]
        both = kenyon_ratio(dims, lower + upper)
        single = kenyon_ratio(dims, lower) * kenyon_ratio(dims, upper)
        region = build_region(*dims, lower + upper)
        out.append(CorrelationPoint(n, both / single, hole_separation(region)))
    return out


def fit_exponent(points: Sequence[CorrelationPoint]) -> FitResult:
    """Least-squares slope of ``log(ratio)`` against ``log(separation)``."""
    if len(points) < 3:
        raise DegenerateFit("need at least three points")
    seps = [p.separation for p in points]
    if len(set(seps)) != len(seps) or min(seps) <= 0:
        raise DegenerateFit("separations must be positive and distinct")
    if any(p.ratio <= 0 for p in points):
        raise DegenerateFit("ratios must be positive")
    x = np.log(np.array(seps, dtype=float))
    y = np.array([math.log(p.ratio.numerator) - math.log(p.ratio.denominator) for p in points])
    design = np.vstack([x, np.ones_like(x)]).T
    (slope, intercept), *_ = np.linalg.lstsq(design, y, rcond=None)
    resid = y - (slope * x + intercept)
    return FitResult(float(slope), float(intercept), float(np.sqrt(np.mean(resid**2))))


def write_csv(points: Iterable[CorrelationPoint], fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["n", "separation", "ratio_numerator", "ratio_denominator"])
    for p in points:
        w.writerow([p.n, f"{p.separation:.12g}", p.ratio.numerator, p.ratio.denominator])


def fit_json(fit: FitResult) -> str:
    return json.dumps(fit.to_json(), sort_keys=True)
