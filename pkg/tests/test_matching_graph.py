import itertools

import pytest
from hypothesis import given

from holeyhex.closed_form import macmahon
from holeyhex.counting import count_kasteleyn
from holeyhex.errors import NotAdmissible, VertexNotPresent
from holeyhex.exact_linalg import det_exact, permanent_small
from holeyhex.lattice import HexDims, Orient, TriTriple, build_region, hexagon_triangles
from holeyhex.matching_graph import (Admissibility, classify_admissibility, dual_graph, kasteleyn_matrix,
                                     remove_vertices)
from holeyhex.oracle import oracle_count

from conftest import hole_sets, small_dims


def test_unit_hexagon_is_a_six_cycle():
    g = dual_graph(build_region(1, 1, 1))
    assert len(g.blacks) == len(g.whites) == 3
    assert len(g.edges) == 6
    assert all(g.degree(t) == 2 for t in g.blacks + g.whites)
    A = kasteleyn_matrix(g)
    assert abs(det_exact(A)) == 2 == permanent_small(A)


@given(small_dims())
def test_edges_are_shared_sides(dims):
    g = dual_graph(build_region(*dims))
    for i, j in g.edges:
        b, w = g.blacks[i], g.whites[j]
        assert len(set(b.vertices()) & set(w.vertices())) == 2
    # interior triangles have all three neighbours
    assert max(g.degree(t) for t in g.blacks) == 3 or max(dims) == 1
    a, b, c = dims
    assert len(g.edges) == 3 * (a * b + b * c + c * a) - (a + b + c)


def test_remove_vertices():
    g = dual_graph(build_region(2, 2, 2))
    b = TriTriple(0, -2, 0, Orient.LEFT)
    w = TriTriple(2, 0, 0, Orient.RIGHT)
    h = remove_vertices(g, [b, w])
    assert b not in h and w not in h
    assert len(h.blacks) == len(g.blacks) - 1
    assert abs(det_exact(kasteleyn_matrix(h))) == oracle_count(build_region(2, 2, 2, [b, w]))
    with pytest.raises(VertexNotPresent):
        remove_vertices(h, [b])


def test_matrix_labels_follow_canonical_order():
    A = kasteleyn_matrix(dual_graph(build_region(2, 1, 2)))
    assert list(A.row_labels) == sorted(A.row_labels)
    assert list(A.col_labels) == sorted(A.col_labels)
    assert all(t.is_left for t in A.row_labels)


@pytest.mark.parametrize("dims", [HexDims(*d) for d in itertools.product((1, 2), repeat=3)])
def test_det_equals_permanent_equals_macmahon(dims):
    A = kasteleyn_matrix(dual_graph(build_region(*dims)))
    assert abs(det_exact(A)) == permanent_small(A) == macmahon(*dims)


def test_single_rhombus_preserves():
    region = build_region(2, 2, 2, [TriTriple(0, -2, 0, Orient.LEFT), TriTriple(2, 0, 0, Orient.RIGHT)])
    assert classify_admissibility(region) is Admissibility.PRESERVING


def test_separated_pair_is_neither_and_refused():
    dims = HexDims(2, 2, 3)
    region = build_region(*dims, [TriTriple(-5, 0, -3, Orient.LEFT), TriTriple(1, 0, -1, Orient.RIGHT)])
    assert classify_admissibility(region) is Admissibility.NEITHER
    with pytest.raises(NotAdmissible):
        count_kasteleyn(region)
    # the signed count exists but is not the tiling count
    assert count_kasteleyn(region, signed=True).count == 10
    assert oracle_count(region) == 12


def test_all_three_classes_occur():
    dims = HexDims(2, 2, 2)
    tris = hexagon_triangles(dims)
    seen = set()
    for b in (t for t in tris if t.is_left):
        for w in (t for t in tris if not t.is_left):
            seen.add(classify_admissibility(build_region(*dims, [b, w])))
    assert seen == set(Admissibility)


@given(hole_sets(cap=3, max_pairs=3))
def test_admissible_sets_count_tilings(case):
    dims, holes = case
    region = build_region(*dims, holes)
    if classify_admissibility(region) is Admissibility.NEITHER:
        return
    assert count_kasteleyn(region).count == oracle_count(region)


def test_remove_nothing_and_order_independence():
    g = dual_graph(build_region(3, 2, 2))
    assert remove_vertices(g, []) == g
    tris = hexagon_triangles(HexDims(3, 2, 2))
    v1, v2 = tris[3:5], tris[10:13]
    assert remove_vertices(remove_vertices(g, v1), v2) == remove_vertices(remove_vertices(g, v2), v1)
    assert remove_vertices(g, v1 + v2) == remove_vertices(remove_vertices(g, v1), v2)


def test_remove_rhombus_and_single_black():
    g = dual_graph(build_region(2, 2, 2))
    h = remove_vertices(g, [TriTriple(0, -2, 0, Orient.LEFT), TriTriple(2, 0, 0, Orient.RIGHT)])
    assert (len(h.blacks), len(h.whites)) == (11, 11)
    h = remove_vertices(g, [TriTriple(0, -2, 0, Orient.LEFT)])
    assert (len(h.blacks), len(h.whites)) == (11, 12)


def test_everything_removed_is_empty():
    dims = HexDims(1, 1, 1)
    g = dual_graph(build_region(*dims, hexagon_triangles(dims)))
    assert g.blacks == g.whites == g.edges == ()


def test_every_single_rhombus_in_333_preserves():
    dims = HexDims(3, 3, 3)
    tris = set(hexagon_triangles(dims))
    for b in (t for t in tris if t.is_left):
        for w in b.neighbours():
            if w in tris:
                assert classify_admissibility(build_region(*dims, [b, w])) is Admissibility.PRESERVING


def test_bowtie_preserves():
    dims = HexDims(3, 3, 3)
    b = TriTriple(0, -2, 0, Orient.LEFT)
    w = next(t for t in hexagon_triangles(dims)
             if not t.is_left and len(set(t.vertices()) & set(b.vertices())) == 1)
    assert classify_admissibility(build_region(*dims, [b, w])) is Admissibility.PRESERVING
