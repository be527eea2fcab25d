"""Seeded property suites over both base rings.

Each suite draws random cases from a ``random.Random`` seeded by the caller
and checks an identity exactly.  The first failing case is reported with
enough data to reproduce it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import lm
from .classgroup import degree_one_primes, is_ramified
from .ideal import (
    DegreeOneForm,
    contract_to_A,
    degree_one_form,
    hnf_rows,
    ideal_from_form,
    kappa,
    lambda_matrix,
    unit_ideal,
)
from .linalg import charpoly, mat_mul
from .order import OrderCtx, regular_rep
from .poly import Poly, format_poly, irreducible_low_degree
from .presets import EXAMPLES
from .ring import ZZ, exact_div, ring_from_string

RINGS = ("Z", "GF(2)[t]", "GF(3)[t]")


@dataclass
class SuiteResult:
    name: str
    ring: str
    passed: int = 0
    total: int = 0
    counterexample: dict | None = None

    @property
    def ok(self):
        return self.counterexample is None


def _ring(ring_name):
    return ring_from_string(ring_name) if isinstance(ring_name, str) else ring_name


def random_cubic(ring, rng):
    """Random monic irreducible cubic over the ring."""
    while True:
        if ring is ZZ:
            coeffs = [rng.randint(-6, 6) for _ in range(3)]
        else:
            coeffs = [ring.random_element(rng, 3) for _ in range(3)]
        f = Poly([ring(c) for c in coeffs] + [ring.one])
        if f.c[0] and irreducible_low_degree(ring, f):
            return OrderCtx(ring, f)


def random_divisor(ring, x, rng):
    """Random normalized divisor of a nonzero ``x``."""
    d = ring.one
    for q, e in ring.factor(x).items():
        d = d * q ** rng.randint(0, e)
    return d


def random_form(ctx, rng):
    ring = ctx.ring
    while True:
        z = ring.random_element(rng, 12 if ring is ZZ else 2)
        fz = ctx.f(z)
        if fz:
            return DegreeOneForm.make(ctx, random_divisor(ring, fz, rng), z)


def _fmt_matrix(ring, M):
    return [[ring.format(x) for x in row] for row in M]


def _form_case(ctx, form):
    ring = ctx.ring
    return {"ring": ring.describe(), "f": format_poly(ctx.f, ring, "x"), "a": ring.format(form.a), "z": ring.format(form.z)}


def suite_conjugation(ring, rng, cases):
    """``v tau (kappa T kappa^-1) tau^-1 v^-1 = C_f(a, z)``, charpoly f, transposed form."""
    res = SuiteResult("conjugation", ring.describe())
    for _ in range(cases):
        ctx = random_cubic(ring, rng)
        form = random_form(ctx, rng)
        res.total += 1
        try:
            C = lm.cf_via_conjugation(form, ctx)
            if charpoly(ring, C) != ctx.f:
                raise ArithmeticError("charpoly of C_f(a, z) differs from f")
            lm.rehm_form(form, ctx)
        except (ArithmeticError, ValueError) as exc:
            res.counterexample = dict(_form_case(ctx, form), error=str(exc))
            return res
        res.passed += 1
    return res


def suite_kappa(ring, rng, cases):
    """``hnf(stack(lambda(z), a I)) = hnf(kappa(a, z))``."""
    res = SuiteResult("kappa-gcrd", ring.describe())
    for _ in range(cases):
        ctx = random_cubic(ring, rng)
        form = random_form(ctx, rng)
        res.total += 1
        n = ctx.n
        stacked = lambda_matrix(form.z, ctx) + [[form.a if i == j else ring.zero for j in range(n)] for i in range(n)]
        if hnf_rows(ring, stacked) != hnf_rows(ring, kappa(form, ctx)):
            res.counterexample = _form_case(ctx, form)
            return res
        res.passed += 1
    return res


def random_unimodular(ring, n, rng, steps=8):
    U = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = ring.random_element(rng, 3 if ring is ZZ else 1)
        U[i] = [x + c * y for x, y in zip(U[i], U[j])]
        if rng.random() < 0.3:
            U[i], U[j] = U[j], U[i]
    return U


def stacked_regular(b):
    rows = []
    for g in b.basis():
        rows.extend(regular_rep(g))
    return rows


def suite_hnf(ring, rng, cases):
    """HNF is unique under unimodular row operations and equals the stacked regular representations."""
    res = SuiteResult("hnf", ring.describe())
    for _ in range(cases):
        ctx = random_cubic(ring, rng)
        form = random_form(ctx, rng)
        b = _ideal(ctx, form)
        if rng.random() < 0.5:
            b = b * _ideal(ctx, random_form(ctx, rng))
        res.total += 1
        H = [list(r) for r in b.H]
        U = random_unimodular(ring, ctx.n, rng)
        ok = hnf_rows(ring, mat_mul(U, H)) == H and hnf_rows(ring, stacked_regular(b)) == H
        if not ok:
            res.counterexample = dict(_form_case(ctx, form), hnf=_fmt_matrix(ring, H), unimodular=_fmt_matrix(ring, U))
            return res
        res.passed += 1
    return res


def _ideal(ctx, form):
    if ctx.ring.is_unit(form.a):
        return unit_ideal(ctx)
    return ideal_from_form(form, ctx)


def suite_degree_one(ring, rng, cases):
    """Products of unramified degree-one primes over distinct base primes are degree one."""
    res = SuiteResult("degree-one", ring.describe())
    example = EXAMPLES[1] if ring is ZZ else EXAMPLES[2]
    if ring is not ZZ and ring.p != 2:
        return res
    ctx = OrderCtx(example.ring, example.f)
    bound = 60 if ring is ZZ else 5
    primes = [q for q in degree_one_primes(ctx, bound) if not is_ramified(q, ctx)]
    by_base = {}
    for q in primes:
        by_base.setdefault(q.p.gen, []).append(q)
    bases = list(by_base)
    for _ in range(cases):
        r = rng.randint(1, min(3, len(bases)))
        chosen = [rng.choice(by_base[g]) for g in rng.sample(bases, r)]
        exps = [rng.randint(1, 3) for _ in chosen]
        res.total += 1
        b = unit_ideal(ctx)
        failure = None
        for q, e in zip(chosen, exps):
            pw = q.ideal**e
            if ring.normalize_unit(contract_to_A(pw))[1] != ring.normalize_unit(q.p.gen**e)[1]:
                failure = "contraction of a prime power differs from p^e"
            if degree_one_form(q.ideal) is None:
                failure = "prime factor is not degree one"
            b = b * pw
        if failure is None and degree_one_form(b) is None:
            failure = "product is not degree one"
        if failure:
            res.counterexample = {
                "ring": ring.describe(),
                "f": example.f,
                "factors": [dict(q.to_json(), exponent=e) for q, e in zip(chosen, exps)],
                "error": failure,
            }
            return res
        res.passed += 1
    return res


def suite_quadratic(ring, rng, cases):
    """Every 2x2 matrix with irreducible charpoly has bottom-left a dividing f(z), z bottom-right."""
    res = SuiteResult("quadratic-shape", ring.describe())
    attempts = 0
    while res.total < cases and attempts < 50 * cases:
        attempts += 1
        bound = 9 if ring is ZZ else 2
        M = [[ring.random_element(rng, bound) for _ in range(2)] for _ in range(2)]
        f = charpoly(ring, M)
        if not irreducible_low_degree(ring, f):
            continue
        res.total += 1
        a, z = M[1][0], M[1][1]
        try:
            exact_div(ring, f(z), a)
            form = DegreeOneForm.make(OrderCtx(ring, f), a, z)
        except (ArithmeticError, ValueError, ZeroDivisionError):
            res.counterexample = {"ring": ring.describe(), "matrix": _fmt_matrix(ring, M)}
            return res
        C = lm.cf_matrix(form, OrderCtx(ring, f))
        if C[1][0] != form.a or charpoly(ring, C) != f:
            res.counterexample = {"ring": ring.describe(), "matrix": _fmt_matrix(ring, M)}
            return res
        res.passed += 1
    return res


SUITES = (suite_conjugation, suite_kappa, suite_hnf, suite_degree_one, suite_quadratic)


def run_selfcheck(seed=0, cases=100, rings=RINGS):
    """Run every suite on every ring; returns the list of :class:`SuiteResult`.

    Suites stop at their first counterexample.  Each (suite, ring) pair gets
    its own generator derived from ``seed`` so results do not depend on order.
    """
    results = []
    for ring_name in rings:
        ring = _ring(ring_name)
        for suite in SUITES:
            rng = random.Random(f"{seed}:{ring_name}:{suite.__name__}")
            res = suite(ring, rng, cases)
            if res.total or res.counterexample:
                results.append(res)
    return results
