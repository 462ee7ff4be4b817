"""Exact identity suite behind ``holeyhex check``.

Each check walks every hexagon with sides up to a cap and returns a
:class:`CheckResult`; nothing is sampled.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .closed_form import k_matrix, lu_A, lu_B, lu_C, lu_D, lu_factors, macmahon
from .counting import pair_determinants
from .exact_linalg import BigMatrix, binom, binom_int, det_exact
from .lattice import HexDims, build_region, hexagon_triangles
from .lgv_paths import path_matrix, psi
from .matching_graph import dual_graph, kasteleyn_matrix


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"{status} {self.name} ({self.cases} cases)"
        if self.failures:
            msg += ": " + "; ".join(self.failures[:3])
        return msg


def worker_count() -> int:
    """Parallelism cap from ``HOLEYHEX_THREADS`` (0 or unset = one per CPU)."""
    raw = os.environ.get("HOLEYHEX_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    return n if n > 0 else (os.cpu_count() or 1)


def shapes(cap: int) -> list[HexDims]:
    return [HexDims(*d) for d in itertools.product(range(1, cap + 1), repeat=3)]


def _colors(dims):
    tris = hexagon_triangles(dims)
    return [t for t in tris if not t.is_left], [t for t in tris if t.is_left]


def identity_i(cap: int) -> tuple[int, list[str]]:
    n, bad = 0, []
    for a, b, c in itertools.product(range(1, cap + 1), repeat=3):
        for i in range(1, a + 1):
            for j in range(1, a + 1):
                lhs = sum(lu_A(b, c, i, s) * lu_C(b, c, s, j) for s in range(1, min(i, j) + 1))
                n += 1
                if lhs != binom_int(b + c, c + j - i):
                    bad.append(f"(i) a,b,c={a,b,c} i={i} j={j}")
    return n, bad


def identity_ii(cap: int) -> tuple[int, list[str]]:
    n, bad = 0, []
    for dims in shapes(cap):
        a, b, c = dims
        _, blacks = _colors(dims)
        for t in blacks:
            p = psi(t, dims)
            for i in range(1, a + 1):
                lhs = sum(lu_A(b, c, i, s) * lu_D(a, b, c, p.x, p.y, s) for s in range(1, i + 1))
                rhs = binom(p.x + p.y + b + c, p.x - 2 * i + a + c + 1)
                n += 1
                if lhs != rhs:
                    bad.append(f"(ii) {dims} {t} i={i}")
    return n, bad


def identity_iii(cap: int) -> tuple[int, list[str]]:
    n, bad = 0, []
    for dims in shapes(cap):
        a, b, c = dims
        whites, _ = _colors(dims)
        for t in whites:
            p = psi(t, dims)
            for j in range(1, a + 1):
                lhs = sum(lu_B(a, b, c, p.x, p.y, s) * lu_C(b, c, s, j) for s in range(1, j + 1))
                rhs = binom(b + c - p.x - p.y, 2 * j - p.x - (a - c + 1))
                n += 1
                if lhs != rhs:
                    bad.append(f"(iii) {dims} {t} j={j}")
    return n, bad


def lu_and_det_factor(dims: HexDims) -> tuple[int, list[str], list[str]]:
    """``L U = P`` and ``det P = M(H) U[a+1][a+1]`` for every pair in ``H``."""
    whites, blacks = _colors(dims)
    a = dims.a
    m = macmahon(*dims)
    lu_bad, fac_bad = [], []
    n = 0
    for w in whites:
        for b in blacks:
            P = path_matrix(dims, w, b)
            L, U = lu_factors(dims, w, b)
            n += 1
            if L @ U != P:
                lu_bad.append(f"{dims} {w} {b}")
            if det_exact(P) != m * U[a, a]:
                fac_bad.append(f"{dims} {w} {b}")
    return n, lu_bad, fac_bad


def det_equality(dims: HexDims, flip: bool = False) -> tuple[int, list[str], list[str], int | None]:
    """``|det P| = |det A minus pair|`` for all pairs, and one sign relating them."""
    n, abs_bad, sign_bad = 0, [], []
    eps = None
    for w, b, da, dp in pair_determinants(dims):
        if flip and dp != 0:
            dp, flip = -dp, False
        n += 1
        if abs(da) != abs(dp):
            abs_bad.append(f"{dims} {w} {b}: {da} vs {dp}")
            continue
        if dp == 0:
            continue
        s = 1 if da == dp else -1
        if eps is None:
            eps = s
        elif s != eps:
            sign_bad.append(f"{dims} sign flips at {w} {b}")
    return n, abs_bad, sign_bad, eps


def inverse_property(dims: HexDims, flip: bool = False) -> tuple[list[str], int | None]:
    """``A_G K = eps I`` with a single ``eps``."""
    A = kasteleyn_matrix(dual_graph(build_region(*dims)))
    K = k_matrix(dims)
    if flip:
        i, j = next((i, j) for i, row in enumerate(K.rows) for j, x in enumerate(row) if x)
        K.rows[i][j] = -K.rows[i][j]
    prod = A @ K
    n = prod.shape[0]
    eps = prod[0, 0]
    if eps in (1, -1) and prod == BigMatrix.identity(n).scale(eps):
        return [], int(eps)
    return [f"{dims}: A K is not +-I"], None


def _per_shape(args):
    dims, flip = args
    n, lu_bad, fac_bad = lu_and_det_factor(dims)
    m, abs_bad, sign_bad, eps = det_equality(dims, flip)
    inv_bad, inv_eps = inverse_property(dims, flip)
    return dims, n, lu_bad, fac_bad, m, abs_bad, sign_bad, eps, inv_bad, inv_eps


def run_suite(cap: int = 3, flip: bool = False, workers: int | None = None,
              log: Callable[[str], None] | None = None) -> list[CheckResult]:
    workers = worker_count() if workers is None else workers
    jobs = [(d, flip) for d in shapes(cap)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_shape = list(pool.map(_per_shape, jobs))
    else:
        per_shape = [_per_shape(j) for j in jobs]

    results = []
    lu = CheckResult("lu_product", True)
    fac = CheckResult("det_factor", True)
    deq = CheckResult("det_equality", True)
    sgn = CheckResult("sign_calibration", True)
    inv = CheckResult("inverse_property", True)
    for dims, n, lu_bad, fac_bad, m, abs_bad, sign_bad, eps, inv_bad, inv_eps in per_shape:
        lu.cases += n
        fac.cases += n
        deq.cases += m
        sgn.cases += 1
        inv.cases += 1
        lu.failures += lu_bad
        fac.failures += fac_bad
        deq.failures += abs_bad
        sgn.failures += sign_bad
        inv.failures += inv_bad
    for name, fn in (("identity_i", identity_i), ("identity_ii", identity_ii), ("identity_iii", identity_iii)):
        n, bad = fn(cap)
        results.append(CheckResult(name, not bad, n, bad))
    for r in (lu, fac, deq, sgn, inv):
        r.passed = not r.failures
        results.append(r)
    if log:
        for r in results:
            log(r.line())
    return results


def observed_signs(cap: int = 3) -> dict[tuple[int, int, int], tuple[int | None, int | None]]:
    """``(eps of det equality, eps of inverse)`` per shape, for reporting."""
    out = {}
    for dims in shapes(cap):
        *_, eps = det_equality(dims)
        _, inv_eps = inverse_property(dims)
        out[tuple(dims)] = (eps, inv_eps)
    return out

