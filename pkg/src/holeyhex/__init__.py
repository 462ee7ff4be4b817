"""Exact lozenge-tiling counts of hexagons with holes.

Tilings of a semiregular hexagon with some unit triangles removed are
counted by several independent exact routes: the Kasteleyn determinant,
minors of a closed-form inverse Kasteleyn matrix, a non-intersecting
lattice path determinant, and a brute-force oracle.
"""

from .closed_form import KEntry, k_entry, k_matrix, macmahon, sign_index
from .counting import CountResult, Route, count, count_kasteleyn, count_kenyon, count_pathmatrix
from .correlation import correlation_sequence, fit_exponent, kenyon_ratio, pair_scan
from .errors import (DegenerateFit, Duplicate, HoleyHexError, NotAdmissible, OutOfBounds, ParityViolation,
                     RouteDisagreement, SignInconsistency, TooLarge, UnbalancedColors, Untileable)
from .exact_linalg import BigMatrix, binom, det_exact
from .lattice import HexDims, Orient, Region, TriTriple, build_region, hexagon_triangles, in_hexagon
from .matching_graph import Admissibility, classify_admissibility, dual_graph, kasteleyn_matrix
from .oracle import oracle_count, oracle_enumerate

__version__ = "0.1.0"
