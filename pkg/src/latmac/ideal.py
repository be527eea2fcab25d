"""Ideals of A[theta] as A-lattices in Hermite normal form.

An :class:`IdealLat` stores the canonical lower-triangular row basis ``H``;
row ``i`` is an element ``h_i0 + h_i1 theta + ... + theta^i h_ii``.  With 1
first in the basis, ``H[0][0]`` generates the contraction to A, and a
degree-one ideal ``(a, theta - z)`` has diagonal ``(a, 1, ..., 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import freeze, hnf_rows as _hnf_rows, left_kernel, solve_triangular_row
from .order import OrderElem, FieldElem, regular_rep
from .ring import divides


def hnf_rows(ring, M):
    """Canonical lower-triangular HNF of the row span of ``M`` (needs full rank)."""
    return _hnf_rows(ring, M)


class IdealLat:
    """Nonzero ideal of A[theta], stored as its HNF row basis.

    Construction validates the HNF shape and theta-stability unless
    ``check=False``.
    """

    __slots__ = ("ctx", "H", "_key")

    def __init__(self, ctx, H, check=True):
        self.ctx = ctx
        self.H = freeze(H)
        if check:
            self._validate()
        self._key = self.H

    def _validate(self):
        ring, n, H = self.ctx.ring, self.ctx.n, self.H
        if len(H) != n or any(len(r) != n for r in H):
            raise ValueError("HNF must be n x n")
        for i in range(n):
            d = H[i][i]
            if not d or ring.normalize_unit(d)[1] != d:
                raise ValueError("diagonal entries must be nonzero and normalized")
            for j in range(i + 1, n):
                if H[i][j]:
                    raise ValueError("HNF must be lower triangular")
            for j in range(i):
                if ring.reduce(H[i][j], H[j][j]) != H[i][j]:
                    raise ValueError("subdiagonal entries must be reduced")
        for row in H:
            if not self.contains(OrderElem(self.ctx, row).times_theta()):
                raise ValueError("lattice is not stable under multiplication by theta")

    def __eq__(self, other):
        return isinstance(other, IdealLat) and self.ctx == other.ctx and self.H == other.H

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        ring = self.ctx.ring
        rows = "; ".join(", ".join(ring.format(x) for x in row) for row in self.H)
        return f"IdealLat([{rows}])"

    def __mul__(self, other):
        return ideal_mul(self, other)

    def __pow__(self, e):
        return ideal_pow(self, e)

    @property
    def n(self):
        return self.ctx.n

    def basis(self):
        return [OrderElem(self.ctx, row) for row in self.H]

    def contains(self, g):
        coords = g.coords if isinstance(g, OrderElem) else g
        return solve_triangular_row(self.ctx.ring, self.H, coords) is not None

    def coordinates(self, g):
        """Coordinates of ``g`` in the HNF basis, or None if ``g`` is not in the ideal."""
        return solve_triangular_row(self.ctx.ring, self.H, g.coords)

    def is_unit(self):
        return all(self.H[i][i] == self.ctx.ring.one for i in range(self.n))

    def norm(self):
        return ideal_norm(self)

    def sort_key(self):
        ring = self.ctx.ring
        return (ring.sort_key(self.norm()),) + tuple(ring.sort_key(x) for row in self.H for x in row)


def unit_ideal(ctx):
    ring = ctx.ring
    return IdealLat(ctx, [[ring.one if i == j else ring.zero for j in range(ctx.n)] for i in range(ctx.n)], check=False)


def ideal_from_generators(ctx, gens):
    """Ideal generated by ``gens``: HNF of the span of all ``g * theta^i``."""
    rows = []
    for g in gens:
        if not isinstance(g, OrderElem):
            g = ctx.scalar(g)
        rows.extend(regular_rep(g))
    if not any(any(r) for r in rows):
        raise ValueError("generators are all zero")
    try:
        H = hnf_rows(ctx.ring, rows)
    except ValueError as exc:  # pragma: no cover - impossible for nonzero ideals
        raise ArithmeticError("nonzero ideal of deficient rank") from exc
    return IdealLat(ctx, H)


def parse_ideal(ctx, text):
    """Parse comma-separated generators such as ``"3, x-2"``."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("no generators given")
    return ideal_from_generators(ctx, [ctx.parse_elem(p) for p in parts])


def ideal_mul(b, c):
    if b.ctx != c.ctx:
        raise ValueError("ideals live in different orders")
    rows = [list((x * y).coords) for x in b.basis() for y in c.basis()]
    return IdealLat(b.ctx, hnf_rows(b.ctx.ring, rows))


def ideal_pow(b, e):
    if e < 0:
        raise ValueError("negative powers are not ideals of the order")
    result = unit_ideal(b.ctx)
    for _ in range(e):
        result = ideal_mul(result, b)
    return result


def ideal_norm(b):
    """Index [O : b] as a normalized ring element."""
    ring = b.ctx.ring
    d = ring.one
    for i in range(b.n):
        d = d * b.H[i][i]
    return ring.normalize_unit(d)[1]


def contract_to_A(b):
    """Normalized generator of A ∩ b."""
    return b.H[0][0]


@dataclass(frozen=True)
class DegreeOneForm:
    """Pair ``(a, z)`` with ``a | f(z)``, encoding ``(a, theta - z)``."""

    a: object
    z: object

    @classmethod
    def make(cls, ctx, a, z):
        ring = ctx.ring
        a, z = ring(a), ring(z)
        if not a:
            raise ValueError("a must be nonzero")
        a = ring.normalize_unit(a)[1]
        z = ring.reduce(z, a)
        if not divides(ring, a, ctx.f(z)):
            raise ValueError("a does not divide f(z)")
        return cls(a, z)

    def to_json(self, ring):
        return {"a": ring.format(self.a), "z": ring.format(self.z)}


def degree_one_form(b):
    """Return ``DegreeOneForm(a, z)`` if ``b = (a, theta - z)``, else None.

    ``b`` is of degree one iff its HNF diagonal is ``(a, 1, ..., 1)``; then the
    second row is ``theta - z``.
    """
    ring, n, H = b.ctx.ring, b.n, b.H
    if b.is_unit():
        raise ValueError("proper ideal required")
    if any(H[i][i] != ring.one for i in range(1, n)):
        return None
    a = H[0][0]
    z = ring.reduce(-H[1][0], a)
    if not divides(ring, a, b.ctx.f(z)):  # pragma: no cover - follows from theta-stability
        raise ArithmeticError("degree-one ideal with a not dividing f(z)")
    return DegreeOneForm(a, z)


def _check_form(ctx, form):
    if not divides(ctx.ring, form.a, ctx.f(form.z)):
        raise ValueError("a does not divide f(z)")


def kappa(form, ctx):
    """Ideal matrix ``kappa(a, z)``: first column ``(a, -z, ..., -z^(n-1))``, identity elsewhere."""
    _check_form(ctx, form)
    ring, n = ctx.ring, ctx.n
    K = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
    K[0][0] = form.a
    zp = ring.one
    for i in range(1, n):
        zp = zp * form.z
        K[i][0] = -zp
    return K


def lambda_matrix(z, ctx):
    """Ideal matrix of the principal ideal ``(theta - z)``; first column ``(-f(z), -z, ...)``."""
    ring, n = ctx.ring, ctx.n
    z = ring(z)
    L = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
    L[0][0] = -ctx.f(z)
    zp = ring.one
    for i in range(1, n):
        zp = zp * z
        L[i][0] = -zp
    return L


def ideal_from_form(form, ctx):
    return ideal_from_generators(ctx, [ctx.theta - form.z, ctx.scalar(form.a)])


@dataclass(frozen=True)
class ColonLattice:
    """The A-lattice ``basis / den`` of field elements (rows are coordinates)."""

    ctx: object
    basis: tuple
    den: object

    def element(self, coeffs):
        ring = self.ctx.ring
        coords = [ring.zero] * self.ctx.n
        for c, row in zip(coeffs, self.basis):
            if c:
                coords = [x + c * y for x, y in zip(coords, row)]
        return FieldElem.from_integral(self.ctx, coords, self.den)

    def contains(self, x):
        num, d = x.to_integral()
        ring = self.ctx.ring
        # x = num/d lies in basis/den iff num * den / d has coordinates in A
        q, r = ring.divmod(self.den, d)
        if r:
            scaled = [c * self.den for c in num.coords]
            coords = []
            for c in scaled:
                qq, rr = ring.divmod(c, d)
                if rr:
                    return False
                coords.append(qq)
        else:
            coords = [c * q for c in num.coords]
        return solve_triangular_row(ring, self.basis, coords) is not None


def colon_lattice(b2, b1):
    """``(b2 : b1) = {x in L : x b1 ⊆ b2}`` as an integral HNF basis over a denominator.

    With ``d`` generating A ∩ b1, the colon lies in ``d^-1 b2``; writing
    ``x = (c H2) / d`` the condition is ``c N_j = 0 mod d`` where ``N_j``
    expresses ``b2 * w_j`` in the basis of b2.
    """
    if b1.ctx != b2.ctx:
        raise ValueError("ideals live in different orders")
    ctx, ring, n = b1.ctx, b1.ctx.ring, b1.n
    d = contract_to_A(b1)
    H2 = [list(r) for r in b2.H]
    blocks = []
    for w in b1.basis():
        prod_rows = [(OrderElem(ctx, h) * w).coords for h in b2.H]
        N = [solve_triangular_row(ring, b2.H, r) for r in prod_rows]
        blocks.append(N)
    N_all = [sum((blocks[j][i] for j in range(n)), []) for i in range(n)]
    width = len(N_all[0])
    big = N_all + [[d if k == j else ring.zero for k in range(width)] for j in range(width)]
    ker = left_kernel(ring, big)
    cs = [row[:n] for row in ker]
    C = hnf_rows(ring, cs)
    Y = [[sum((c[k] * H2[k][j] for k in range(n)), ring.zero) for j in range(n)] for c in C]
    Y = hnf_rows(ring, Y)
    return ColonLattice(ctx, freeze(Y), d)
