"""The order O = A[x]/(f) with basis 1, theta, ..., theta^(n-1).

Row convention: the regular representation ``T(g)`` has as row ``i`` the
coordinates of ``g * theta^i``, so that ``T(g) (1, theta, ...)^T = g (1,
theta, ...)^T``.
"""

from __future__ import annotations

from .linalg import charpoly as _charpoly
from .linalg import det, freeze, identity, mat_mul
from .poly import (
    Poly,
    detect_variable,
    field_gcd_ext,
    format_poly,
    irreducible_low_degree,
    parse_poly,
)
from .ring import Frac, exact_div, gcd, ring_from_string


def companion(ring, f):
    """Companion matrix of a monic ``f``: superdiagonal ones, last row ``-k_i``."""
    n = f.degree
    if n < 2:
        raise ValueError("degree must be at least 2")
    if not f.is_monic():
        raise ValueError("companion matrix needs a monic polynomial")
    T = [[ring.zero] * n for _ in range(n)]
    for i in range(n - 1):
        T[i][i + 1] = ring.one
    for j in range(n):
        T[n - 1][j] = -ring(f.coeff(j))
    return T


def charpoly(ring, M):
    return _charpoly(ring, M)


class OrderCtx:
    """Context for A[theta]; immutable after construction.

    Irreducibility of ``f`` is checked for degree <= 3 and must be asserted by
    the caller (``assert_irreducible=True``) for higher degree.
    """

    def __init__(self, ring, f, var="x", assert_irreducible=False):
        if isinstance(ring, str):
            ring = ring_from_string(ring)
        if isinstance(f, str):
            var = detect_variable(f, ring)
            f = parse_poly(f, ring, var)
        f = Poly(ring(c) for c in f.c)
        if f.degree < 2:
            raise ValueError("degree must be at least 2")
        if not f.is_monic():
            raise ValueError("f must be monic")
        if f.degree <= 3:
            if not irreducible_low_degree(ring, f):
                raise ValueError("f is reducible")
        elif not assert_irreducible:
            raise ValueError("irreducibility must be asserted by caller for degree >= 4")
        self.ring = ring
        self.f = f
        self.n = f.degree
        self.var = var
        self.irreducible_asserted = f.degree >= 4
        self.T_theta = freeze(companion(ring, f))
        powers = [identity(ring, self.n)]
        for _ in range(1, self.n):
            powers.append(mat_mul(powers[-1], self.T_theta))
        self.theta_powers = tuple(freeze(P) for P in powers)
        # c[j][i][k]: theta^i theta^j = sum_k c[j][i][k] theta^k, i.e. slice j is T(theta^j)
        self.mult_tensor = self.theta_powers

    def __repr__(self):
        return f"OrderCtx({self.ring.describe()}, {self.f_str()})"

    def __eq__(self, other):
        return isinstance(other, OrderCtx) and self.ring == other.ring and self.f == other.f

    def __hash__(self):
        return hash((self.ring, self.f))

    def f_str(self):
        return format_poly(self.f, self.ring, self.var)

    def elem(self, coords):
        coords = [self.ring(c) for c in coords]
        coords += [self.ring.zero] * (self.n - len(coords))
        if len(coords) != self.n:
            raise ValueError("too many coordinates")
        return OrderElem(self, tuple(coords))

    def scalar(self, a):
        return self.elem([a])

    @property
    def one(self):
        return self.scalar(self.ring.one)

    @property
    def zero(self):
        return self.scalar(self.ring.zero)

    @property
    def theta(self):
        return self.elem([self.ring.zero, self.ring.one])

    def from_poly(self, g):
        """Reduce a polynomial in A[x] modulo f."""
        return OrderElem(self, _reduce(self, list(g.c)))

    def parse_elem(self, text):
        return self.from_poly(parse_poly(text, self.ring, self.var))

    def mult(self, c, d):
        n = self.n
        out = [self.ring.zero] * (2 * n - 1)
        for i, a in enumerate(c):
            if a:
                for j, b in enumerate(d):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return _reduce(self, out)


def _reduce(ctx, coeffs):
    n = ctx.n
    k = ctx.f.c
    coeffs = list(coeffs)
    for top in range(len(coeffs) - 1, n - 1, -1):
        c = coeffs[top]
        if c:
            for i in range(n):
                coeffs[top - n + i] = coeffs[top - n + i] - c * k[i]
    coeffs = coeffs[:n] + [ctx.ring.zero] * (n - len(coeffs))
    return tuple(coeffs)


class OrderElem:
    """Element of A[theta] given by its coordinates in the power basis."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx, coords):
        self.ctx = ctx
        self.coords = tuple(coords)

    def _other(self, other):
        if isinstance(other, OrderElem):
            return other
        if isinstance(other, FieldElem):
            return NotImplemented
        return self.ctx.scalar(other)

    def __eq__(self, other):
        if isinstance(other, OrderElem):
            return self.coords == other.coords
        if isinstance(other, FieldElem):
            return other == self
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"OrderElem({self})"

    def __str__(self):
        return format_poly(Poly(self.coords), self.ctx.ring, "θ")

    def __neg__(self):
        return OrderElem(self.ctx, tuple(-c for c in self.coords))

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return OrderElem(self.ctx, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return OrderElem(self.ctx, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, OrderElem):
            return OrderElem(self.ctx, self.ctx.mult(self.coords, other.coords))
        if isinstance(other, FieldElem):
            return NotImplemented
        return OrderElem(self.ctx, tuple(a * other for a in self.coords))

    __rmul__ = __mul__

    def __pow__(self, e):
        result = self.ctx.one
        for _ in range(e):
            result = result * self
        return result

    def times_theta(self):
        c = self.coords
        return OrderElem(self.ctx, _reduce(self.ctx, [self.ctx.ring.zero] + list(c)))

    def to_field(self):
        ring = self.ctx.ring
        return FieldElem(self.ctx, tuple(Frac(ring, c) for c in self.coords))

    def as_poly(self):
        return Poly(self.coords)


def regular_rep(g):
    """Matrix ``T(g)`` whose row i holds the coordinates of ``g * theta^i``."""
    rows = [list(g.coords)]
    cur = g
    for _ in range(1, g.ctx.n):
        cur = cur.times_theta()
        rows.append(list(cur.coords))
    return rows


def norm_elem(g):
    """Norm ``det T(g)``; a ring element for OrderElem, a Frac for FieldElem."""
    if isinstance(g, FieldElem):
        num, den = g.to_integral()
        ring = g.ctx.ring
        return Frac(ring, det(ring, regular_rep(num)), den ** g.ctx.n)
    return det(g.ctx.ring, regular_rep(g))


class FieldElem:
    """Element of L = K(theta) with coordinates in the fraction field."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx, coords):
        self.ctx = ctx
        self.coords = tuple(coords)

    @classmethod
    def from_integral(cls, ctx, coords, den):
        ring = ctx.ring
        return cls(ctx, tuple(Frac(ring, c, den) for c in coords))

    def _other(self, other):
        if isinstance(other, FieldElem):
            return other
        if isinstance(other, OrderElem):
            return other.to_field()
        ring = self.ctx.ring
        c = other if isinstance(other, Frac) else Frac(ring, ring(other))
        zero = Frac(ring, ring.zero)
        return FieldElem(self.ctx, (c,) + (zero,) * (self.ctx.n - 1))

    def __eq__(self, other):
        if isinstance(other, (FieldElem, OrderElem)):
            o = self._other(other)
            return all(a == b for a, b in zip(self.coords, o.coords))
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"FieldElem({self})"

    def __str__(self):
        num, den = self.to_integral()
        s = str(num)
        return s if den == self.ctx.ring.one else f"({s})/({self.ctx.ring.format(den)})"

    def __neg__(self):
        return FieldElem(self.ctx, tuple(-c for c in self.coords))

    def __add__(self, other):
        o = self._other(other)
        return FieldElem(self.ctx, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return FieldElem(self.ctx, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        o = self._other(other)
        num1, d1 = self.to_integral()
        num2, d2 = o.to_integral()
        return FieldElem.from_integral(self.ctx, (num1 * num2).coords, d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        """Inverse via extended gcd with f in K[x]."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        ring = self.ctx.ring
        g, s, _ = field_gcd_ext(ring, Poly(self.coords), self.ctx.f)
        if g.degree != 0:
            raise ArithmeticError("nontrivial gcd with f: f is reducible")
        coords = list(s.c) + [Frac(ring, ring.zero)] * (self.ctx.n - len(s.c))
        return FieldElem(self.ctx, coords[: self.ctx.n])

    def __truediv__(self, other):
        return self * self._other(other).inverse()

    def denominator(self):
        ring = self.ctx.ring
        d = ring.one
        for c in self.coords:
            if c.den != ring.one:
                d = exact_div(ring, d * c.den, gcd(ring, d, c.den))
        return d

    def to_integral(self):
        """Return ``(g, d)`` with ``self = g / d``, g in A[theta], d normalized."""
        ring = self.ctx.ring
        d = self.denominator()
        coords = []
        for c in self.coords:
            coords.append(c.num * exact_div(ring, d, c.den))
        return OrderElem(self.ctx, tuple(coords)), d

    def is_integral(self):
        return all(c.is_integral() for c in self.coords)

    def to_order(self):
        num, d = self.to_integral()
        if d != self.ctx.ring.one:
            raise ArithmeticError("element is not integral")
        return num
