import random

import pytest

from latmac import lm
from latmac.ideal import DegreeOneForm, degree_one_form, parse_ideal, unit_ideal
from latmac.linalg import charpoly, det, mat_mul
from latmac.lm import (
    cf_matrix,
    cf_via_conjugation,
    eigenvector,
    ideal_to_matrix,
    is_similar_via,
    matrix_to_ideal,
    rehm_form,
    rehm_matrix,
    rehm_to_cf_conjugator,
    representative_for_ideal,
)
from latmac.order import OrderCtx
from latmac.selfcheck import random_cubic, random_form


def test_cf_example1(ex1):
    assert cf_matrix(DegreeOneForm(3, 2), ex1) == [[0, 1, 0], [-8, -2, -5], [3, 0, 2]]
    assert cf_matrix(DegreeOneForm(1, 0), ex1) == [[0, 1, 0], [-4, 0, 1], [1, 0, 0]]


def test_cf_example2(ex2, F2):
    t, one, zero = F2.gen, F2.one, F2.zero
    assert cf_matrix(DegreeOneForm(t, zero), ex2) == [[zero, one, zero], [zero, zero, t**2 + t + 1], [t, zero, zero]]
    assert cf_matrix(DegreeOneForm(t + 1, one), ex2) == [[zero, one, zero], [one, one, t**2 + 1], [t + 1, zero, one]]
    assert cf_matrix(DegreeOneForm(one, zero), ex2) == [[zero, one, zero], [zero, zero, t**3 + t**2 + t], [one, zero, zero]]


def test_cf_rejects_bad_form(ex1):
    with pytest.raises(ValueError, match="a does not divide f"):
        cf_matrix(DegreeOneForm(7, 2), ex1)


def test_rehm_example(ex1):
    form = DegreeOneForm(3, 2)
    assert rehm_matrix(form, ex1) == [[0, -8, -5], [1, -2, 0], [0, 3, 2]]
    Q = rehm_to_cf_conjugator(form, ex1)
    assert is_similar_via(ex1.ring, Q, rehm_form(form, ex1), cf_matrix(form, ex1))


@pytest.mark.parametrize("f", ["x^2+x+5", "x^4+x+1", "x^5-x-1"])
def test_conjugation_other_degrees(f):
    ctx = OrderCtx("Z", f, assert_irreducible=True)
    rng = random.Random(f)
    for _ in range(15):
        form = random_form(ctx, rng)
        C = cf_via_conjugation(form, ctx)
        assert C == cf_matrix(form, ctx)
        assert charpoly(ctx.ring, C) == ctx.f
        assert charpoly(ctx.ring, rehm_form(form, ctx)) == ctx.f


@pytest.mark.parametrize("ring_name", ["Z", "GF(2)[t]", "GF(3)[t]", "GF(5)[t]"])
def test_conjugation_random_cubics(ring_name):
    from latmac.ring import ring_from_string

    ring = ring_from_string(ring_name)
    rng = random.Random(ring_name)
    for _ in range(15):
        ctx = random_cubic(ring, rng)
        form = random_form(ctx, rng)
        assert cf_via_conjugation(form, ctx) == cf_matrix(form, ctx)


def test_conjugation_detects_wrong_reference(ex1):
    form = DegreeOneForm(3, 2)
    wrong = [[0, 1, 0], [-8, -2, -5], [3, 0, 1]]
    with pytest.raises(ArithmeticError):
        cf_via_conjugation(form, ex1, reference=wrong)


def test_ideal_to_matrix_charpoly(corpus1, corpus2):
    for ctx, items in (corpus1, corpus2):
        for b, _ in items[:25]:
            assert charpoly(ctx.ring, ideal_to_matrix(b)) == ctx.f


def test_matrix_to_ideal_of_companion_is_principal(ex1):
    M = ideal_to_matrix(unit_ideal(ex1))
    assert matrix_to_ideal(ex1, M) == unit_ideal(ex1)


def test_eigenvector_relation(ex1):
    M = [[0, 1, 0], [-8, -2, -5], [3, 0, 2]]
    v = eigenvector(ex1, M)
    for i in range(3):
        lhs = sum((v[j] * M[i][j] for j in range(3)), ex1.zero)
        assert lhs == ex1.theta * v[i]


def test_matrix_to_ideal_out_of_scope(ex1):
    with pytest.raises(ValueError, match="correspondence scope"):
        matrix_to_ideal(ex1, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(ValueError):
        matrix_to_ideal(ex1, [[1, 0], [0, 1]])


def test_cf_maps_back_to_its_ideal_class(ex1):
    b = parse_ideal(ex1, "3, x-2")
    c = matrix_to_ideal(ex1, cf_matrix(degree_one_form(b), ex1))
    from latmac.classgroup import is_equivalent

    assert is_equivalent(b, c, 3) is not None


@pytest.mark.parametrize("which", ["ex1", "ex2"])
def test_representative_conjugator(which, corpus1, corpus2):
    ctx, items = corpus1 if which == "ex1" else corpus2
    done = 0
    for b, _ in items:
        if not b.is_unit() and degree_one_form(b) is None:
            with pytest.raises(ValueError, match="no degree-one form"):
                representative_for_ideal(b)
            continue
        rep = representative_for_ideal(b)
        P = [list(r) for r in rep.conjugator]
        assert ctx.ring.is_unit(det(ctx.ring, P))
        assert is_similar_via(ctx.ring, P, ideal_to_matrix(b), [list(r) for r in rep.C])
        done += 1
        if done == 20:
            break


def test_representative_json(ex1):
    out = representative_for_ideal(parse_ideal(ex1, "3, x-2")).to_json()
    assert out == {
        "a": "3",
        "z": "2",
        "kappa": [["3", "0", "0"], ["-2", "1", "0"], ["-4", "0", "1"]],
        "C": [["0", "1", "0"], ["-8", "-2", "-5"], ["3", "0", "2"]],
        "charpoly": "x^3+4*x-1",
    }


def test_is_similar_via_rejects_non_unimodular(ex1):
    M = cf_matrix(DegreeOneForm(1, 0), ex1)
    P = [[2, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert not is_similar_via(ex1.ring, P, M, M)
    assert is_similar_via(ex1.ring, mat_mul([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]]), M, M)


def test_u_values_are_used(ex1, monkeypatch):
    monkeypatch.setattr(lm, "_u_values", lambda form, ctx: [0] * (ctx.n - 1))
    with pytest.raises(ArithmeticError):
        cf_via_conjugation(DegreeOneForm(3, 2), ex1)
