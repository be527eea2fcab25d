"""Matrices with characteristic polynomial f versus ideals of A[theta].

Forward: an ideal with HNF basis ``H`` gives ``H T(theta) H^-1``.  Backward: a
matrix ``M`` with charpoly f has an eigenvector for theta with entries in
A[theta], and those entries generate an ideal.  For degree-one ideals the
class also contains the explicit near-companion matrix ``C_f(a, z)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideal import (
    DegreeOneForm,
    IdealLat,
    degree_one_form,
    ideal_from_generators,
    kappa,
)
from .linalg import (
    charpoly,
    conjugate,
    det,
    freeze,
    from_frac,
    identity,
    mat_equal,
    mat_inverse,
    mat_mul,
    matrix_to_json,
    to_frac,
)
from .order import OrderElem
from .poly import format_poly
from .ring import exact_div, gcd


def _check_square(ring, M, n):
    if len(M) != n or any(len(row) != n for row in M):
        raise ValueError(f"matrix must be {n} x {n}")


def ideal_to_matrix(b):
    """``H T(theta) H^-1``, integral because ``b`` is theta-stable."""
    ctx = b.ctx
    M = conjugate(ctx.ring, [list(r) for r in b.H], ctx.T_theta)
    try:
        return from_frac(M)
    except ArithmeticError as exc:  # pragma: no cover - guarded by IdealLat
        raise ArithmeticError("ideal is not theta-stable") from exc


def _eigenvector(ctx, M):
    """Nonzero ``v`` in L^n with ``M v = theta v`` by elimination over L."""
    n = ctx.n
    theta = ctx.theta.to_field()
    rows = []
    for i in range(n):
        row = [ctx.scalar(M[i][j]).to_field() for j in range(n)]
        row[i] = row[i] - theta
        rows.append(row)
    pivots = []
    r = 0
    for j in range(n):
        piv = next((i for i in range(r, n) if rows[i][j]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][j].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][j]:
                c = rows[i][j]
                rows[i] = [x - c * y for x, y in zip(rows[i], rows[r])]
        pivots.append(j)
        r += 1
    free = [j for j in range(n) if j not in pivots]
    if not free:
        raise ArithmeticError("theta is not an eigenvalue")
    k = free[0]
    one = ctx.one.to_field()
    v = [ctx.zero.to_field() for _ in range(n)]
    v[k] = one
    for i, j in enumerate(pivots):
        v[j] = -rows[i][k]
    return v


def _clear(ctx, v):
    """Scale a vector in L^n to a primitive vector in A[theta]^n."""
    ring = ctx.ring
    den = ring.one
    for x in v:
        d = x.denominator()
        den = exact_div(ring, den * d, gcd(ring, den, d))
    ints = [(x * den).to_order() for x in v]
    g = ring.zero
    for e in ints:
        for c in e.coords:
            if c:
                g = gcd(ring, g, c) if g else ring.normalize_unit(c)[1]
    if g and g != ring.one:
        ints = [OrderElem(ctx, tuple(exact_div(ring, c, g) for c in e.coords)) for e in ints]
    return ints


def eigenvector(ctx, M):
    """Primitive eigenvector of ``M`` for theta with entries in A[theta]."""
    return _clear(ctx, _eigenvector(ctx, M))


def matrix_to_ideal(ctx, M):
    """Ideal generated by the entries of an eigenvector of ``M`` for theta."""
    ring = ctx.ring
    M = [[ring(x) for x in row] for row in M]
    _check_square(ring, M, ctx.n)
    if charpoly(ring, M) != ctx.f:
        raise ValueError("matrix not in correspondence scope")
    v = eigenvector(ctx, M)
    return ideal_from_generators(ctx, v)


def _u_values(form, ctx):
    """``u_i = -(z^i + k_{n-1} z^(i-1) + ... + k_{n-i})`` for i = 1..n-1."""
    ring, n, k = ctx.ring, ctx.n, ctx.f.c
    us = []
    acc = ring.one  # Horner prefix of f read from the top
    for i in range(1, n):
        acc = acc * form.z + k[n - i]
        us.append(-acc)
    return us


def _f_over_a(form, ctx):
    try:
        return exact_div(ctx.ring, ctx.f(form.z), form.a)
    except ArithmeticError:
        raise ValueError("a does not divide f(z)") from None


def cf_matrix(form, ctx):
    """Closed-form ``C_f(a, z)``."""
    ring, n = ctx.ring, ctx.n
    q = _f_over_a(form, ctx)
    us = _u_values(form, ctx)
    C = [[ring.zero] * n for _ in range(n)]
    for i in range(n - 2):
        C[i][i + 1] = ring.one
    for j in range(n - 1):
        C[n - 2][j] = us[n - 2 - j]
    C[n - 2][n - 1] = -q
    C[n - 1][0] = form.a
    C[n - 1][n - 1] = form.z
    return C


def tau_matrix(form, ctx):
    """Identity with ``-z`` on the subdiagonal from the third row down."""
    n = ctx.n
    T = identity(ctx.ring, n)
    for i in range(2, n):
        T[i][i - 1] = -form.z
    return T


def cycle_matrix(ctx):
    """Cyclic permutation ``v``: ones at ``(i, i+1)`` and at ``(n-1, 0)``."""
    ring, n = ctx.ring, ctx.n
    V = [[ring.zero] * n for _ in range(n)]
    for i in range(n - 1):
        V[i][i + 1] = ring.one
    V[n - 1][0] = ring.one
    return V


def kappa_conjugate(form, ctx):
    """``kappa T(theta) kappa^-1`` for the displayed ideal matrix kappa."""
    K = kappa(form, ctx)
    return from_frac(conjugate(ctx.ring, K, ctx.T_theta))


def cf_via_conjugation(form, ctx, reference=None):
    """``v tau (kappa T kappa^-1) tau^-1 v^-1``, checked against the closed form."""
    _f_over_a(form, ctx)
    ring = ctx.ring
    P = mat_mul(cycle_matrix(ctx), tau_matrix(form, ctx))
    C = from_frac(conjugate(ring, P, kappa_conjugate(form, ctx)))
    expected = cf_matrix(form, ctx) if reference is None else reference
    if not mat_equal(C, expected):
        raise ArithmeticError("conjugation product differs from closed-form C_f(a, z)")
    return C


def sigma_matrix(ctx):
    """Unit lower-triangular band matrix with ``sigma[i][j] = k_{n-(i-j)}`` for j >= 1."""
    ring, n, k = ctx.ring, ctx.n, ctx.f.c
    S = identity(ring, n)
    for j in range(1, n):
        for i in range(j + 1, n):
            S[i][j] = ring(k[n - (i - j)])
    return S


def reversal_matrix(ctx):
    """Antidiagonal permutation ``w``."""
    ring, n = ctx.ring, ctx.n
    return [[ring.one if i + j == n - 1 else ring.zero for j in range(n)] for i in range(n)]


def rehm_matrix(form, ctx):
    """Closed form of the transposed representative.

    Subdiagonal ones in the first n-2 columns, column n-2 equal to
    ``(u_{n-1}, ..., u_1, a)``, column n-1 equal to ``(-f(z)/a, 0, ..., 0, z)``.
    """
    ring, n = ctx.ring, ctx.n
    q = _f_over_a(form, ctx)
    us = _u_values(form, ctx)
    R = [[ring.zero] * n for _ in range(n)]
    for i in range(1, n - 1):
        R[i][i - 1] = ring.one
    for i in range(n - 1):
        R[i][n - 2] = us[n - 2 - i]
    R[n - 1][n - 2] = form.a
    R[0][n - 1] = -q
    R[n - 1][n - 1] = form.z
    return R


def rehm_form(form, ctx):
    """``w sigma (kappa T kappa^-1) sigma^-1 w^-1``, checked against the closed form."""
    ring = ctx.ring
    P = mat_mul(reversal_matrix(ctx), sigma_matrix(ctx))
    R = from_frac(conjugate(ring, P, kappa_conjugate(form, ctx)))
    if not mat_equal(R, rehm_matrix(form, ctx)):
        raise ArithmeticError("conjugation product differs from closed-form transposed representative")
    return R


def rehm_to_cf_conjugator(form, ctx):
    """Unimodular ``Q`` with ``Q R Q^-1 = C_f(a, z)`` where R is the transposed form."""
    ring = ctx.ring
    left = mat_mul(cycle_matrix(ctx), tau_matrix(form, ctx))
    right = mat_mul(reversal_matrix(ctx), sigma_matrix(ctx))
    return from_frac(mat_mul(to_frac(ring, left), mat_inverse(ring, right)))


@dataclass(frozen=True)
class Representative:
    """Degree-one form of an ideal together with its matrices.

    ``conjugator`` is unimodular and satisfies
    ``conjugator * ideal_to_matrix(ideal) * conjugator^-1 = C``.
    """

    form: DegreeOneForm
    C: tuple
    kappa_used: tuple
    ideal: IdealLat
    conjugator: tuple

    def to_json(self):
        ring = self.ideal.ctx.ring
        ctx = self.ideal.ctx
        return {
            "a": ring.format(self.form.a),
            "z": ring.format(self.form.z),
            "kappa": matrix_to_json(ring, self.kappa_used)["entries"],
            "C": matrix_to_json(ring, self.C)["entries"],
            "charpoly": format_poly(charpoly(ring, self.C), ring, ctx.var),
        }


def representative_for_ideal(b):
    """Build ``C_f(a, z)`` for a degree-one ideal (or the unit ideal, with (1, 0))."""
    ctx, ring = b.ctx, b.ctx.ring
    if b.is_unit():
        form = DegreeOneForm(ring.one, ring.zero)
    else:
        form = degree_one_form(b)
        if form is None:
            raise ValueError("no degree-one form; pick another class representative")
    K = kappa(form, ctx)
    C = cf_via_conjugation(form, ctx)
    if charpoly(ring, C) != ctx.f:  # pragma: no cover - cannot happen
        raise ArithmeticError("charpoly of C_f(a, z) differs from f")
    # kappa = U H with U unimodular; conjugate H T H^-1 through U, tau and v
    U = mat_mul(to_frac(ring, K), mat_inverse(ring, [list(r) for r in b.H]))
    P = from_frac(mat_mul(to_frac(ring, mat_mul(cycle_matrix(ctx), tau_matrix(form, ctx))), U))
    if not ring.is_unit(det(ring, P)):  # pragma: no cover - HNF is canonical
        raise ArithmeticError("conjugator is not unimodular")
    if not mat_equal(from_frac(conjugate(ring, P, ideal_to_matrix(b))), C):  # pragma: no cover
        raise ArithmeticError("conjugator does not map the ideal matrix to C_f(a, z)")
    return Representative(form, freeze(C), freeze(K), b, freeze(P))


def is_similar_via(ring, P, M, N):
    """True if ``P`` is unimodular and ``P M P^-1 = N``."""
    if not ring.is_unit(det(ring, P)):
        return False
    try:
        return mat_equal(from_frac(conjugate(ring, P, M)), N)
    except ArithmeticError:
        return False


__all__ = [
    "Representative",
    "cf_matrix",
    "cf_via_conjugation",
    "cycle_matrix",
    "eigenvector",
    "ideal_to_matrix",
    "is_similar_via",
    "kappa_conjugate",
    "matrix_to_ideal",
    "rehm_form",
    "rehm_matrix",
    "rehm_to_cf_conjugator",
    "representative_for_ideal",
    "reversal_matrix",
    "sigma_matrix",
    "tau_matrix",
]
