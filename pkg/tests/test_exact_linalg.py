import math
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
import hypothesis.strategies as st

from holeyhex.errors import HalfIntegerArgument, NotSquare, Singular, TooLarge
from holeyhex.exact_linalg import (BigMatrix, binom, binom_int, cramer_entry, det_exact, inverse_exact,
                                   permanent_small)


def perm_sign(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


def leibniz(rows):
    n = len(rows)
    return sum(perm_sign(p) * math.prod(rows[i][p[i]] for i in range(n)) for p in permutations(range(n)))


def brute_permanent(rows):
    n = len(rows)
    return sum(math.prod(rows[i][p[i]] for i in range(n)) for p in permutations(range(n)))


@st.composite
def int_matrices(draw, max_n=5, lo=-20, hi=20):
    n = draw(st.integers(1, max_n))
    return [[draw(st.integers(lo, hi)) for _ in range(n)] for _ in range(n)]


@st.composite
def frac_matrices(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    ent = st.fractions(min_value=-5, max_value=5, max_denominator=7)
    return [[draw(ent) for _ in range(n)] for _ in range(n)]


@given(int_matrices())
def test_det_matches_leibniz(rows):
    d = det_exact(rows)
    assert d == leibniz(rows)
    assert d.denominator == 1


@given(frac_matrices())
def test_rational_det_matches_leibniz(rows):
    assert det_exact(rows) == leibniz(rows)


def test_det_huge_entries_exact():
    big = 10**40
    rows = [[big, 1], [1, big]]
    assert det_exact(rows) == big * big - 1


@given(int_matrices(max_n=4), st.data())
def test_det_multiplicative(a, data):
    n = len(a)
    b = [[data.draw(st.integers(-9, 9)) for _ in range(n)] for _ in range(n)]
    assert det_exact(BigMatrix(a) @ BigMatrix(b)) == det_exact(a) * det_exact(b)


@given(int_matrices())
def test_det_transpose(rows):
    assert det_exact(BigMatrix(rows).transpose()) == det_exact(rows)


@given(frac_matrices())
def test_inverse_and_cramer(rows):
    m = BigMatrix(rows)
    n = len(rows)
    if det_exact(m) == 0:
        with pytest.raises(Singular):
            inverse_exact(m)
        return
    inv = inverse_exact(m)
    assert m @ inv == BigMatrix.identity(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert cramer_entry(m, i, j) == inv[i - 1, j - 1]


def test_singular_cramer():
    with pytest.raises(Singular):
        cramer_entry(BigMatrix([[1, 2], [2, 4]]), 1, 1)


def test_not_square():
    m = BigMatrix([[1, 2, 3], [4, 5, 6]])
    for fn in (det_exact, inverse_exact, permanent_small):
        with pytest.raises(NotSquare):
            fn(m)


@given(int_matrices(max_n=6, lo=-4, hi=4))
def test_permanent_matches_brute_force(rows):
    assert permanent_small(rows) == brute_permanent(rows)


def test_permanent_cap():
    with pytest.raises(TooLarge):
        permanent_small(BigMatrix.identity(15))
    assert permanent_small([[1] * 8 for _ in range(8)]) == math.factorial(8)


@given(st.integers(-5, 30), st.integers(-5, 30))
def test_binom_int(n, k):
    expected = math.comb(n, k) if 0 <= k <= n else 0
    assert binom_int(n, k) == expected
    assert binom(2 * n, 2 * k) == expected


def test_binom_half_integer():
    with pytest.raises(HalfIntegerArgument):
        binom(3, 2)
    with pytest.raises(HalfIntegerArgument):
        binom(4, 1)


def test_minor_and_submatrix():
    m = BigMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]], ("r0", "r1", "r2"), ("c0", "c1", "c2"))
    mi = m.minor(1, 2)
    assert mi.rows == [[1, 2], [7, 8]]
    assert mi.row_labels == ("r0", "r2") and mi.col_labels == ("c0", "c1")
    assert m.submatrix([0, 2], [1]).rows == [[2], [8]]


def test_labels_validated():
    with pytest.raises(ValueError):
        BigMatrix([[1, 2]], row_labels=("a", "b"))
    with pytest.raises(ValueError):
        BigMatrix([[1, 2], [3]])


def test_fraction_scale():
    m = BigMatrix.identity(3).scale(Fraction(1, 3))
    assert det_exact(m) == Fraction(1, 27)
    assert not m.is_integer()


def test_diagonal_cramer():
    assert cramer_entry(BigMatrix([[2, 0], [0, 4]]), 2, 2) == Fraction(1, 4)
    assert cramer_entry(BigMatrix.identity(3), 1, 1) == 1


def test_small_dets():
    assert det_exact(BigMatrix.identity(3)) == 1
    assert det_exact([[1, 1], [1, 1]]) == 0
    assert det_exact(BigMatrix([])) == 1
    assert permanent_small([[1] * 3] * 3) == 6


@given(int_matrices(max_n=4, lo=-6, hi=6), st.data())
def test_cramer_is_signed_minor(rows, data):
    m = BigMatrix(rows)
    d = det_exact(m)
    if d == 0:
        return
    n = len(rows)
    i = data.draw(st.integers(1, n))
    j = data.draw(st.integers(1, n))
    minor = det_exact(m.minor(j - 1, i - 1)) if n > 1 else 1
    assert cramer_entry(m, i, j) * d == (-1) ** (i + j) * minor


@given(st.integers(0, 40), st.integers(0, 40))
def test_binom_symmetry_and_pascal(n, k):
    if k <= n:
        assert binom_int(n, k) == binom_int(n, n - k)
    if n >= 1:
        assert binom_int(n, k) == binom_int(n - 1, k - 1) + binom_int(n - 1, k)
    assert binom(8, 4) == 6 and binom(6, 10) == 0 and binom(-2, 0) == 0
