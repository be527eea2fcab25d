"""Dense univariate polynomials over a base ring A or its fraction field.

Coefficients are stored low degree first and may be ring elements (ints,
:class:`~latmac.ring.FpPoly`) or :class:`~latmac.ring.Frac`.  The zero
polynomial has degree -1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ring import Frac, FpPoly, gcd, exact_div, divides

MAX_RESIDUE_FIELD = 2**20


class Poly:
    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.c = tuple(coeffs)

    @property
    def degree(self):
        return len(self.c) - 1

    def lc(self):
        return self.c[-1]

    def coeff(self, i):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def is_monic(self):
        return bool(self.c) and self.c[-1] == 1

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Poly({list(self.c)!r})"

    def __neg__(self):
        return Poly(-x for x in self.c)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        n = max(len(self.c), len(other.c))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(x * other for x in self.c)
        if not self.c or not other.c:
            return Poly()
        out = [None] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            for j, b in enumerate(other.c):
                out[i + j] = a * b if out[i + j] is None else out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 1:
            raise ValueError("use positive exponents")
        result = self
        for _ in range(e - 1):
            result = result * self
        return result

    def __call__(self, z):
        acc = 0
        for coef in reversed(self.c):
            acc = acc * z + coef
        return acc

    def derivative(self):
        return Poly(self.c[i] * i for i in range(1, len(self.c)))

    def map(self, fn):
        return Poly(fn(x) for x in self.c)


def poly_divmod(a, b, inv_lc):
    """Divide ``a`` by ``b`` where ``inv_lc`` inverts the leading coefficient of ``b``."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    rem = list(a.c)
    db = b.degree
    if len(rem) <= db:
        return Poly(), a
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        q = rem[k] * inv_lc
        if q:
            quot[k - db] = q
            for j in range(db + 1):
                rem[k - db + j] = rem[k - db + j] - q * b.c[j]
    return Poly(quot), Poly(rem[:db])


def to_frac_poly(ring, f):
    return Poly(x if isinstance(x, Frac) else Frac(ring, x) for x in f.c)


def field_gcd_ext(ring, a, b):
    """Extended gcd in K[x]; returns monic ``g`` and ``s, t`` with ``g = s*a + t*b``."""
    one = Frac(ring, ring.one)
    r0, r1 = to_frac_poly(ring, a), to_frac_poly(ring, b)
    s0, s1 = Poly((one,)), Poly()
    t0, t1 = Poly(), Poly((one,))
    while r1:
        q, r = poly_divmod(r0, r1, r1.lc().inverse())
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = r0.lc().inverse()
    return r0 * inv, s0 * inv, t0 * inv


@dataclass(frozen=True)
class PrimeOfA:
    """A prime element of the base ring, normalized to its canonical associate."""

    ring: object
    gen: object

    def __post_init__(self):
        u, g = self.ring.normalize_unit(self.gen)
        object.__setattr__(self, "gen", g)
        if not self.ring.is_prime(g):
            raise ValueError(f"{self.ring.format(g)} is not prime")

    def __str__(self):
        return self.ring.format(self.gen)


def poly_eval(f, z):
    return f(z)


def content(ring, g):
    """Normalized gcd of the coefficients of ``g``."""
    if not g:
        raise ValueError("content of the zero polynomial")
    c = ring.zero
    for x in g.c:
        c = gcd(ring, c, x)
    return c


def _det(ring, rows):
    from .linalg import det

    return det(ring, rows)


def resultant(ring, f, g):
    """Sylvester resultant of ``f`` and ``g``."""
    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        return ring.zero
    if m == 0 and n == 0:
        return ring.one
    size = m + n
    rows = []
    fc = list(reversed(f.c))
    gc = list(reversed(g.c))
    for i in range(n):
        rows.append([ring.zero] * i + fc + [ring.zero] * (size - i - m - 1))
    for i in range(m):
        rows.append([ring.zero] * i + gc + [ring.zero] * (size - i - n - 1))
    return _det(ring, rows)


def discriminant(ring, f):
    """Discriminant of a monic ``f``: ``(-1)^(n(n-1)/2) Res(f, f')``."""
    n = f.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    if not f.is_monic():
        raise ValueError("discriminant implemented for monic polynomials")
    res = resultant(ring, f, f.derivative())
    return -res if (n * (n - 1) // 2) % 2 else res


def reduce_mod(ring, f, p):
    return Poly(ring.reduce(x, p) for x in f.c)


def roots_mod_prime(ring, f, p):
    """All roots of ``f`` modulo the prime ``p`` with their multiplicities.

    Exhaustive over the residue field, which must have at most 2**20 elements.
    """
    gen = p.gen if isinstance(p, PrimeOfA) else p
    if ring.residue_field_size(gen) > MAX_RESIDUE_FIELD:
        raise ValueError("exhaustive search infeasible")
    fp = reduce_mod(ring, f, gen)
    out = []
    for z in ring.residues(gen):
        if ring.reduce(fp(z), gen):
            continue
        mult = 0
        g = fp
        while g and not ring.reduce(g(z), gen):
            # synthetic division by (x - z), coefficients kept reduced mod p
            q = [ring.zero] * g.degree
            carry = ring.zero
            for k in range(g.degree, 0, -1):
                carry = ring.reduce(carry * z + g.c[k], gen)
                q[k - 1] = carry
            g = Poly(q)
            mult += 1
        out.append((z, mult))
    return out


def _divisors(ring, a):
    """All divisors of a nonzero ``a`` (every associate)."""
    fac = ring.factor(a)
    divs = [ring.one]
    for q, e in fac.items():
        divs = [d * q**k for d in divs for k in range(e + 1)]
    if hasattr(ring, "p"):
        units = [ring(u) for u in range(1, ring.p)]
    else:
        units = [1, -1]
    return [u * d for d in divs for u in units]


def has_root(ring, f):
    if not f.c[0]:
        return True
    return any(not f(z) for z in _divisors(ring, f.c[0]))


def irreducible_low_degree(ring, f):
    """Irreducibility over K of a monic polynomial of degree 2 or 3.

    A monic polynomial over the integrally closed A has its roots in K inside
    A, and any such root divides the constant term.
    """
    if not f.is_monic():
        raise ValueError("monic polynomial required")
    if f.degree >= 4:
        raise ValueError("irreducibility must be asserted by caller")
    if f.degree < 2:
        raise ValueError("degree must be at least 2")
    return not has_root(ring, f)


# -- text grammar -----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\*\*|[-+*^()]))")


def _tokenize(s):
    s = s.replace("−", "-")
    pos, out = 0, []
    s = s.rstrip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise ValueError(f"unexpected character at {pos} in {s!r}")
        num, ident, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif ident is not None:
            out.append(("id", ident))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, ring, var):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.var = var
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, msg):
        raise ValueError(f"{msg} in {self.text!r}")

    def parse(self):
        if not self.toks:
            self.fail("empty expression")
        val = self.expr()
        if self.i != len(self.toks):
            self.fail("trailing input")
        return val

    def expr(self):
        sign = 1
        kind, v = self.peek()
        if kind == "op" and v in "+-":
            self.take()
            sign = -1 if v == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            kind, v = self.peek()
            if kind == "op" and v in "+-":
                self.take()
                t = self.term()
                acc = acc + t if v == "+" else acc - t
            else:
                return acc

    def term(self):
        acc = self.power()
        while True:
            kind, v = self.peek()
            if kind == "op" and v == "*":
                self.take()
                acc = acc * self.power()
            elif kind in ("num", "id") or (kind == "op" and v == "("):
                acc = acc * self.power()
            else:
                return acc

    def power(self):
        base = self.atom()
        kind, v = self.peek()
        if kind == "op" and v == "^":
            self.take()
            kind, e = self.take()
            if kind != "num":
                self.fail("exponent must be a non-negative integer")
            result = Poly((self.ring.one,))
            for _ in range(e):
                result = result * base
            return result
        return base

    def atom(self):
        kind, v = self.take()
        ring = self.ring
        if kind == "num":
            return Poly((ring(v),))
        if kind == "id":
            if ring.gen is not None and v == ring.var:
                return Poly((ring.gen,))
            if self.var is not None and v == self.var:
                return Poly((ring.zero, ring.one))
            self.fail(f"unknown symbol {v!r}")
        if kind == "op" and v == "(":
            val = self.expr()
            if self.take() != ("op", ")"):
                self.fail("missing ')'")
            return val
        self.fail("unexpected token")


def detect_variable(text, ring):
    names = set(re.findall(r"[A-Za-z]", text))
    if ring.gen is not None:
        names.discard(ring.var)
    if not names:
        return "x"
    if len(names) > 1 or not names <= {"x", "y"}:
        raise ValueError(f"cannot determine polynomial variable in {text!r}")
    return names.pop()


def parse_expression(text, ring, var):
    """Parse ``text`` as an element of A (``var=None``) or of A[var]."""
    value = _Parser(text, ring, var).parse()
    if var is None:
        if value.degree > 0:
            raise ValueError(f"{text!r} is not a ring element")
        return value.c[0] if value.c else ring.zero
    return value


def parse_poly(text, ring, var=None):
    if var is None:
        var = detect_variable(text, ring)
    return parse_expression(text, ring, var)


def parse_element(text, ring):
    return parse_expression(text, ring, None)


def _coeff_str(ring, c):
    s = ring.format(c)
    if isinstance(c, FpPoly) and c.degree >= 1:
        return f"({s})", False
    neg = isinstance(c, int) and c < 0
    return (s[1:] if neg else s), neg


def format_poly(f, ring, var="x"):
    if not f:
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.c[k]
        if not c:
            continue
        body, neg = _coeff_str(ring, c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono:
            if body == "1":
                term = mono
            else:
                term = f"{body}*{mono}"
        else:
            term = body
        if parts:
            parts.append(("-" if neg else "+") + term)
        else:
            parts.append(("-" if neg else "") + term)
    return "".join(parts)
