"""Acceptance criteria A1-A10.

Each test records a PASS/FAIL line in ``RESULTS``; ``conftest.py`` prints
them at the end of the run.  Run only this module with
``pytest tests/test_acceptance.py -v``.
"""

import random
import time

import pytest
import sympy

from latmac.classgroup import (
    class_count,
    classify,
    enumerate_products,
    is_equivalent,
    is_ramified,
    degree_one_primes,
    small_residue_bound,
    verify_lenstra,
    verify_witness,
)
from latmac.ideal import (
    DegreeOneForm,
    contract_to_A,
    degree_one_form,
    hnf_rows,
    kappa,
    lambda_matrix,
    parse_ideal,
    unit_ideal,
)
from latmac.linalg import charpoly
from latmac.lm import cf_matrix, cf_via_conjugation, ideal_to_matrix, matrix_to_ideal, representative_for_ideal
from latmac.order import OrderCtx, regular_rep
from latmac.presets import EXAMPLES
from latmac.ring import ZZ, FpPoly, PolyRingFp, ring_from_string
from latmac.selfcheck import random_cubic, random_form

RESULTS = {}
A4_RINGS = ("Z", "GF(2)[t]", "GF(3)[t]")


class Criterion:
    """Context manager that records PASS/FAIL plus a detail string."""

    def __init__(self, name):
        self.name = name
        self.detail = ""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    @property
    def elapsed(self):
        return time.perf_counter() - self.start

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        msg = self.detail if exc_type is None else f"{exc_type.__name__}: {exc}"
        RESULTS[self.name] = f"{self.name} {status} ({self.elapsed:.2f}s) {msg}".rstrip()
        return False


def _mat(ring, M):
    return [[ring.format(x) for x in row] for row in M]


def _a4_corpus():
    cases = []
    for ring_name in A4_RINGS:
        ring = ring_from_string(ring_name)
        rng = random.Random(f"acceptance:{ring_name}")
        for _ in range(100):
            ctx = random_cubic(ring, rng)
            cases.append((ctx, random_form(ctx, rng)))
    return cases


@pytest.fixture(scope="module")
def a4_corpus():
    return _a4_corpus()


def test_A1_example1_reproduction():
    with Criterion("A1") as c:
        ctx = OrderCtx("Z", "x^3+4*x-1")
        rep = representative_for_ideal(parse_ideal(ctx, "3, x-2"))
        assert (rep.form.a, rep.form.z) == (3, 2)
        assert [list(r) for r in rep.kappa_used] == [[3, 0, 0], [-2, 1, 0], [-4, 0, 1]]
        assert [list(r) for r in rep.C] == [[0, 1, 0], [-8, -2, -5], [3, 0, 2]]
        unit = representative_for_ideal(parse_ideal(ctx, "1"))
        assert [list(r) for r in unit.C] == [[0, 1, 0], [-4, 0, 1], [1, 0, 0]]
        assert c.elapsed < 1.0
        c.detail = "a=3 z=2, kappa and both C matrices bit-exact"


def test_A2_example2_reproduction():
    with Criterion("A2") as c:
        F2 = PolyRingFp(2)
        ctx = OrderCtx(F2, "y^3+(t^3+t^2+t)")
        expected = {
            "t, y": [["0", "1", "0"], ["0", "0", "t^2+t+1"], ["t", "0", "0"]],
            "t+1, y+1": [["0", "1", "0"], ["1", "1", "t^2+1"], ["t+1", "0", "1"]],
            "1": [["0", "1", "0"], ["0", "0", "t^3+t^2+t"], ["1", "0", "0"]],
        }
        for gens, C in expected.items():
            assert _mat(F2, representative_for_ideal(parse_ideal(ctx, gens)).C) == C
        assert c.elapsed < 1.0
        c.detail = "C_f(t,0), C_f(t+1,1), C_f(1,0) bit-exact"


def _classes(example):
    p = EXAMPLES[example]
    ctx = OrderCtx(p.ring, p.f)
    items = enumerate_products(ctx, p.prime_bound, p.exp_bound, p.max_factors)
    return ctx, items, classify([b for b, _ in items], p.box, dict(items))


def test_A3_class_counts():
    with Criterion("A3") as c:
        start = time.perf_counter()
        ctx1, items1, t1 = _classes(1)
        time1 = time.perf_counter() - start
        assert class_count(t1) == 2 and t1.unresolved == []
        start = time.perf_counter()
        ctx2, items2, t2 = _classes(2)
        time2 = time.perf_counter() - start
        assert class_count(t2) == 3 and t2.unresolved == []
        b, q = parse_ideal(ctx2, "t, y"), parse_ideal(ctx2, "t+1, y+1")
        gamma = t2.witness_between(b**2, q)
        assert gamma is not None and verify_witness(gamma, b**2, q)
        assert time1 < 60 and time2 < 60
        c.detail = (
            f"ex1: {len(items1)} ideals, 2 classes, 0 unresolved ({time1:.1f}s); "
            f"ex2: {len(items2)} ideals, 3 classes, 0 unresolved ({time2:.1f}s); (t,y)^2 ~ (t+1,y+1) witnessed"
        )


def test_A4_conjugation_identity(a4_corpus):
    with Criterion("A4") as c:
        failures = 0
        start = time.perf_counter()
        for ctx, form in _a4_corpus():
            try:
                C = cf_via_conjugation(form, ctx)
            except ArithmeticError:
                failures += 1
                continue
            if C != cf_matrix(form, ctx) or charpoly(ctx.ring, C) != ctx.f:
                failures += 1
        assert failures == 0
        assert time.perf_counter() - start < 30
        c.detail = f"{len(a4_corpus)} cases over {', '.join(A4_RINGS)}, 0 failures"


def test_A5_gcrd_identities(corpus1, corpus2, a4_corpus):
    with Criterion("A5") as c:
        failures = 0
        count = 0
        for ctx, items in (corpus1, corpus2):
            for b, _ in items:
                rows = [r for g in b.basis() for r in regular_rep(g)]
                failures += hnf_rows(ctx.ring, rows) != [list(r) for r in b.H]
                count += 1
        for ctx, form in a4_corpus:
            n, ring = ctx.n, ctx.ring
            aI = [[form.a if i == j else ring.zero for j in range(n)] for i in range(n)]
            failures += hnf_rows(ring, lambda_matrix(form.z, ctx) + aI) != hnf_rows(ring, kappa(form, ctx))
        assert failures == 0
        c.detail = f"{count} corpus ideals and {len(a4_corpus)} (a,z) pairs, 0 failures"


def test_A6_round_trip(corpus1, corpus2):
    with Criterion("A6") as c:
        unknown = 0
        count = 0
        for ctx, items in (corpus1, corpus2):
            for b, _ in items:
                back = matrix_to_ideal(ctx, ideal_to_matrix(b))
                g = is_equivalent(b, back, 6)
                if g is None or not verify_witness(g, b, back):
                    unknown += 1
                count += 1
        assert unknown == 0
        c.detail = f"{count} ideals, 0 Unknown at box 6"


def _a7_products(example, count, rng):
    p = EXAMPLES[example]
    ctx = OrderCtx(p.ring, p.f)
    bound = 60 if example == 1 else 5
    by_base = {}
    for q in degree_one_primes(ctx, bound):
        if not is_ramified(q, ctx):
            by_base.setdefault(q.p.gen, []).append(q)
    bases = list(by_base)
    for _ in range(count):
        r = rng.randint(1, min(3, len(bases)))
        chosen = [rng.choice(by_base[g]) for g in rng.sample(bases, r)]
        yield ctx, [(q, rng.randint(1, 3)) for q in chosen]


def test_A7_degree_one_laws():
    with Criterion("A7") as c:
        rng = random.Random("acceptance:A7")
        failures = 0
        total = 0
        for example in (1, 2):
            for ctx, factors in _a7_products(example, 200, rng):
                ring = ctx.ring
                b = unit_ideal(ctx)
                for q, e in factors:
                    pw = q.ideal**e
                    failures += degree_one_form(q.ideal) is None
                    failures += ring.normalize_unit(contract_to_A(pw))[1] != ring.normalize_unit(q.p.gen**e)[1]
                    b = b * pw
                failures += degree_one_form(b) is None
                total += 1
        assert failures == 0
        c.detail = f"{total} products (200 per example), 0 failures"


def test_A8_lenstra(table1, table2):
    with Criterion("A8") as c:
        parts = []
        for name, table in (("ex1", table1), ("ex2", table2)):
            reports = verify_lenstra(table)
            for r in reports:
                assert r.satisfied
                if r.member.is_unit():
                    assert r.form == DegreeOneForm(table.ctx.ring.one, table.ctx.ring.zero)
                else:
                    assert degree_one_form(r.member) == r.form
            parts.append(f"{name}: " + ", ".join(r.factorization.label() for r in reports))
        c.detail = "; ".join(parts)


def _irreducible_f2_up_to(d):
    out = []
    for deg in range(1, d + 1):
        for bits in range(2**deg, 2 ** (deg + 1)):
            g = FpPoly(2, [(bits >> i) & 1 for i in range(deg + 1)])
            x = sympy.Symbol("x")
            if sympy.Poly(sum(ci * x**i for i, ci in enumerate(g.c)), x, modulus=2).is_irreducible:
                out.append(g)
    return out


def test_A9_small_residue_superset():
    with Criterion("A9") as c:
        start = time.perf_counter()
        for m in range(2, 21):
            got = {P.gen for P in small_residue_bound(m, ZZ)}
            assert set(sympy.primerange(2, m + 1)) <= got, m
        F2 = PolyRingFp(2)
        for m in range(2, 5):
            got = {P.gen for P in small_residue_bound(m, F2)}
            want = [g for g in _irreducible_f2_up_to(2) if 2**g.degree <= m]
            assert set(want) <= got, m
        assert time.perf_counter() - start < 5
        c.detail = "Z: m=2..20, F2[t]: m=2..4"


def test_A10_negative_control(corpus1):
    with Criterion("A10") as c:
        ctx, items = corpus1
        b = parse_ideal(ctx, "3, x-2")
        O = unit_ideal(ctx)
        assert is_equivalent(b, O, 6) is None
        ideals = [x for x, _ in items]
        for box in range(0, 11):
            table = classify(ideals, box, dict(items))
            assert table.class_of(b) != table.class_of(O), box
            assert class_count(table) >= 2
        c.detail = "(3,x-2) vs O Unknown at box 6; classes never merged for box 0..10"
