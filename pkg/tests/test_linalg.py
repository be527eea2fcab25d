import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from latmac.linalg import (
    charpoly,
    det,
    det_leibniz,
    hnf_rows,
    left_kernel,
    mat_inverse,
    mat_mul,
    matrix_from_json,
    matrix_to_json,
    solve_triangular_row,
)
from latmac.poly import Poly
from latmac.ring import ZZ, Frac, PolyRingFp

F2 = PolyRingFp(2)
F3 = PolyRingFp(3)
small_mats = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=80, deadline=None)
@given(small_mats)
def test_det_matches_leibniz(M):
    assert det(ZZ, M) == det_leibniz(ZZ, M)


@settings(max_examples=80, deadline=None)
@given(small_mats)
def test_charpoly_matches_sympy(M):
    x = sympy.Symbol("x")
    expected = sympy.Matrix(M).charpoly(x).all_coeffs()[::-1]
    assert charpoly(ZZ, M) == Poly([int(c) for c in expected])


def test_charpoly_examples():
    assert charpoly(ZZ, [[0, 0], [0, 0]]) == Poly([0, 0, 1])
    assert charpoly(ZZ, [[0, 1, 0], [-8, -2, -5], [3, 0, 2]]) == Poly([-1, 4, 0, 1])


def test_charpoly_char_two():
    t = F2.gen
    M = [[F2(0), F2(1)], [t, t + 1]]
    # x^2 - (t+1) x - t in characteristic 2
    assert charpoly(F2, M) == Poly([t, t + 1, F2.one])


def random_fp(ring, rng, deg):
    return ring.random_element(rng, deg)


def test_det_over_fp_matches_leibniz():
    rng = random.Random(3)
    for ring in (F2, F3):
        for n in (1, 2, 3, 4):
            for _ in range(20):
                M = [[random_fp(ring, rng, 2) for _ in range(n)] for _ in range(n)]
                assert det(ring, M) == det_leibniz(ring, M)


def test_hnf_examples():
    assert hnf_rows(ZZ, [[1, 0], [0, 1]]) == [[1, 0], [0, 1]]
    lam = [[-15, 0, 0], [-2, 1, 0], [-4, 0, 1]]
    assert hnf_rows(ZZ, lam) == [[15, 0, 0], [13, 1, 0], [11, 0, 1]]
    kap = [[3, 0, 0], [-2, 1, 0], [-4, 0, 1]]
    U = [[1, 2, 0], [0, 1, 0], [5, 3, 1]]
    stacked = kap + mat_mul(U, kap)
    assert hnf_rows(ZZ, stacked) == [[3, 0, 0], [1, 1, 0], [2, 0, 1]]


def test_hnf_rank_deficient():
    with pytest.raises(ValueError, match="not full rank"):
        hnf_rows(ZZ, [[1, 2], [2, 4]])


def test_left_kernel():
    M = [[1, 2], [2, 4], [3, 6]]
    K = left_kernel(ZZ, M)
    assert len(K) == 2
    for c in K:
        assert [sum(c[i] * M[i][j] for i in range(3)) for j in range(2)] == [0, 0]


def test_inverse_and_solve():
    M = [[2, 1], [1, 1]]
    inv = mat_inverse(ZZ, M)
    assert mat_mul(inv, [[Frac(ZZ, x) for x in r] for r in M]) == [[Frac(ZZ, 1), Frac(ZZ, 0)], [Frac(ZZ, 0), Frac(ZZ, 1)]]
    H = [[3, 0], [1, 1]]
    assert solve_triangular_row(ZZ, H, [7, 1]) == [2, 1]
    assert solve_triangular_row(ZZ, H, [1, 0]) is None


def test_matrix_json_round_trip():
    t = F2.gen
    M = [[t + 1, F2.zero], [F2.one, t**2]]
    obj = matrix_to_json(F2, M)
    assert obj == {"ring": "GF(2)[t]", "entries": [["t+1", "0"], ["1", "t^2"]]}
    ring, back = matrix_from_json(obj)
    assert ring == F2 and back == M
    with pytest.raises(ValueError):
        matrix_from_json({"entries": [[1, 2]]})
