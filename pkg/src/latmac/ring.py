"""Base rings: the integers and polynomial rings over prime fields.

Elements of ``Z`` are plain Python ints.  Elements of ``F_p[t]`` are
immutable :class:`FpPoly` values.  Both support ``+ - *`` and comparison with
ints, so most generic code only needs the ring object for division, units
and normalization.

A ring object exposes the Euclidean structure:

* ``divmod(a, b)`` with a canonical remainder,
* ``normalize_unit(a)`` returning ``(u, a_norm)`` with ``a = u * a_norm``,
* ``gcd_ext(a, b)`` returning a normalized gcd and Bezout cofactors.

:class:`Frac` implements the fraction field over either ring.
"""

from __future__ import annotations

import itertools
import re

import sympy


class FpPoly:
    """Polynomial over GF(p) as a tuple of coefficients, low degree first.

    Invariant: no trailing zero coefficients; the zero polynomial is ``()``.
    """

    __slots__ = ("p", "c")

    def __init__(self, p, coeffs=()):
        coeffs = [x % p for x in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.p = p
        self.c = tuple(coeffs)

    @classmethod
    def _raw(cls, p, c):
        obj = object.__new__(cls)
        obj.p = p
        obj.c = c
        return obj

    def _coerce(self, other):
        if isinstance(other, FpPoly):
            if other.p != self.p:
                raise ValueError("polynomials over different prime fields")
            return other
        if isinstance(other, int):
            return FpPoly(self.p, (other,))
        return NotImplemented

    @property
    def degree(self):
        return len(self.c) - 1

    def lc(self):
        return self.c[-1] if self.c else 0

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        if len(self.c) <= 1:
            return hash(self.c[0] if self.c else 0)
        return hash((self.p, self.c))

    def __repr__(self):
        return f"FpPoly({self.p}, {list(self.c)})"

    def __neg__(self):
        p = self.p
        return FpPoly._raw(p, tuple((p - x) % p for x in self.c))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        p = self.p
        out = list(a)
        for i, x in enumerate(b):
            out[i] = (out[i] + x) % p
        return FpPoly(p, out) if len(a) == len(b) else FpPoly._raw(p, tuple(out))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        if not a or not b:
            return FpPoly._raw(self.p, ())
        p = self.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return FpPoly._raw(p, tuple(v % p for v in out))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = FpPoly._raw(self.p, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.c:
            raise ZeroDivisionError("division by zero polynomial")
        p = self.p
        rem = list(self.c)
        db = len(other.c) - 1
        inv = pow(other.c[-1], -1, p)
        if len(rem) <= db:
            return FpPoly._raw(p, ()), self
        quot = [0] * (len(rem) - db)
        b = other.c
        for k in range(len(rem) - 1, db - 1, -1):
            q = rem[k] * inv % p
            if q:
                quot[k - db] = q
                off = k - db
                for j in range(db + 1):
                    rem[off + j] = (rem[off + j] - q * b[j]) % p
        return FpPoly(p, quot), FpPoly(p, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Evaluate at ``x``: an integer (reduced mod p) or an element of an F_p-algebra."""
        acc = 0
        for coef in reversed(self.c):
            acc = acc * x + coef
        return acc % self.p if isinstance(acc, int) else acc


class IntegerRing:
    """The ring of rational integers."""

    name = "Z"
    characteristic = 0
    zero = 0
    one = 1
    gen = None

    def __call__(self, x):
        if isinstance(x, int):
            return x
        raise TypeError(f"cannot coerce {x!r} to an integer")

    def __repr__(self):
        return "IntegerRing()"

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("Z")

    def is_element(self, x):
        return isinstance(x, int)

    def is_unit(self, a):
        return a == 1 or a == -1

    def unit_inverse(self, u):
        if not self.is_unit(u):
            raise ArithmeticError(f"{u} is not a unit")
        return u

    def normalize_unit(self, a):
        return (-1, -a) if a < 0 else (1, a)

    def divmod(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(a, b)
        if r < 0:
            q, r = q + 1, r - b
        return q, r

    def size(self, a):
        return abs(a)

    def elements(self, bound):
        """Integers of absolute value <= bound, ordered 0, 1, -1, 2, -2, ..."""
        yield 0
        for k in range(1, bound + 1):
            yield k
            yield -k

    def residues(self, m):
        return range(abs(m))

    def residue_field_size(self, p):
        return abs(p)

    def is_prime(self, a):
        return sympy.isprime(abs(a)) if a else False

    def primes(self, bound):
        """Positive primes up to ``bound``."""
        return list(sympy.primerange(2, bound + 1))

    def factor(self, a):
        if a == 0:
            raise ValueError("cannot factor zero")
        return {int(q): e for q, e in sympy.factorint(abs(a)).items()}

    def sort_key(self, a):
        return (abs(a), a < 0)

    def random_element(self, rng, bound):
        return rng.randint(-bound, bound)

    def parse(self, s):
        s = s.replace("−", "-").replace(" ", "")
        if not re.fullmatch(r"[+-]?\d+", s):
            raise ValueError(f"not an integer: {s!r}")
        return int(s)

    def format(self, a):
        return str(a)

    def reduce(self, a, m):
        return self.divmod(a, m)[1]

    def describe(self):
        return "Z"


class PolyRingFp:
    """The polynomial ring F_p[t] for a prime ``p < 2**16``."""

    def __init__(self, p, var="t"):
        if not (isinstance(p, int) and 2 <= p < 2**16 and sympy.isprime(p)):
            raise ValueError(f"characteristic must be a prime below 2^16, got {p!r}")
        if not re.fullmatch(r"[a-z]", var) or var in "xy":
            raise ValueError(f"bad variable name {var!r}")
        self.p = p
        self.var = var
        self.characteristic = p
        self.zero = FpPoly._raw(p, ())
        self.one = FpPoly._raw(p, (1,))
        self.gen = FpPoly._raw(p, (0, 1))
        self.name = f"GF({p})[{var}]"

    def __call__(self, x):
        if isinstance(x, FpPoly):
            if x.p != self.p:
                raise ValueError("wrong characteristic")
            return x
        if isinstance(x, int):
            return FpPoly(self.p, (x,))
        if isinstance(x, (list, tuple)):
            return FpPoly(self.p, x)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def __repr__(self):
        return f"PolyRingFp({self.p}, {self.var!r})"

    def __eq__(self, other):
        return isinstance(other, PolyRingFp) and other.p == self.p and other.var == self.var

    def __hash__(self):
        return hash((self.p, self.var))

    def is_element(self, x):
        return isinstance(x, FpPoly) and x.p == self.p

    def is_unit(self, a):
        return len(a.c) == 1

    def unit_inverse(self, u):
        if not self.is_unit(u):
            raise ArithmeticError(f"{self.format(u)} is not a unit")
        return FpPoly._raw(self.p, (pow(u.c[0], -1, self.p),))

    def normalize_unit(self, a):
        if not a:
            return self.one, a
        lc = a.c[-1]
        if lc == 1:
            return self.one, a
        inv = pow(lc, -1, self.p)
        return FpPoly._raw(self.p, (lc,)), a * inv

    def divmod(self, a, b):
        return divmod(self(a), self(b))

    def reduce(self, a, m):
        return self.divmod(a, m)[1]

    def size(self, a):
        return a.degree

    def elements(self, bound):
        """All polynomials of degree <= bound, by degree then coefficients."""
        yield self.zero
        p = self.p
        for d in range(bound + 1):
            for lead in range(1, p):
                for low in itertools.product(range(p), repeat=d):
                    yield FpPoly._raw(p, low[::-1] + (lead,))

    def monics(self, degree):
        p = self.p
        for low in itertools.product(range(p), repeat=degree):
            yield FpPoly._raw(p, tuple(low[::-1]) + (1,))

    def residues(self, m):
        d = m.degree
        p = self.p
        for coeffs in itertools.product(range(p), repeat=d):
            yield FpPoly(p, coeffs[::-1])

    def residue_field_size(self, q):
        return self.p ** q.degree

    def is_prime(self, a):
        if a.degree < 1:
            return False
        a = self.normalize_unit(a)[1]
        for d in range(1, a.degree // 2 + 1):
            for g in self.monics(d):
                if not (a % g):
                    return False
        return True

    def primes(self, bound):
        """Monic irreducibles of degree 1..bound."""
        out = []
        for d in range(1, bound + 1):
            out.extend(g for g in self.monics(d) if self.is_prime(g))
        return out

    def factor(self, a):
        """Monic irreducible factorization by trial division."""
        if not a:
            raise ValueError("cannot factor zero")
        a = self.normalize_unit(a)[1]
        out = {}
        d = 1
        while a.degree >= 2 * d:
            for g in self.monics(d):
                if a.degree < 2 * d:
                    break
                while not (a % g):
                    out[g] = out.get(g, 0) + 1
                    a = a // g
            d += 1
        if a.degree >= 1:
            out[a] = out.get(a, 0) + 1
        return out

    def sort_key(self, a):
        return (a.degree, tuple(reversed(a.c)))

    def random_element(self, rng, bound):
        return FpPoly(self.p, [rng.randrange(self.p) for _ in range(bound + 1)])

    def parse(self, s):
        from .poly import parse_expression

        value = parse_expression(s, self, None)
        return value

    def format(self, a):
        if not a:
            return "0"
        terms = []
        v = self.var
        for k in range(len(a.c) - 1, -1, -1):
            c = a.c[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = v if k == 1 else f"{v}^{k}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms)

    def describe(self):
        return f"GF({self.p})[{self.var}]"


ZZ = IntegerRing()


def ring_from_string(s):
    """Parse a ring description: ``Z``, ``ZZ``, ``GF(p)[t]`` or ``F_p[t]``."""
    s = s.replace(" ", "")
    if s in ("Z", "ZZ", "ℤ"):
        return ZZ
    m = re.fullmatch(r"(?:GF\((\d+)\)|F_?(\d+))\[([a-z])\]", s)
    if not m:
        raise ValueError(f"unknown ring {s!r}")
    p = int(m.group(1) or m.group(2))
    return PolyRingFp(p, m.group(3))


def gcd_ext(ring, a, b):
    """Extended Euclid: ``(g, s, t)`` with ``g = s*a + t*b`` and g normalized."""
    if not a and not b:
        raise ValueError("gcd of zeros")
    r0, r1 = a, b
    s0, s1 = ring.one, ring.zero
    t0, t1 = ring.zero, ring.one
    while r1:
        q, r = ring.divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    u, g = ring.normalize_unit(r0)
    ui = ring.unit_inverse(u)
    return g, s0 * ui, t0 * ui


def gcd(ring, a, b):
    if not a and not b:
        return ring.zero
    return gcd_ext(ring, a, b)[0]


def normalize_unit(ring, a):
    return ring.normalize_unit(a)


def exact_div(ring, a, b):
    q, r = ring.divmod(a, b)
    if r:
        raise ArithmeticError("inexact division")
    return q


def divides(ring, d, a):
    if not d:
        return not a
    return not ring.divmod(a, d)[1]


def crt(ring, residues, moduli):
    """Solve ``x = residues[i] mod moduli[i]``; result reduced mod the product."""
    if len(residues) != len(moduli):
        raise ValueError("residues and moduli differ in length")
    x, m = ring.zero, ring.one
    for r, mi in zip(residues, moduli):
        if not mi:
            raise ValueError("zero modulus")
        g, s, _ = gcd_ext(ring, m, mi)
        if g != ring.one:
            raise ValueError("moduli are not pairwise coprime")
        # x + m*k = r mod mi  ->  k = (r - x) * s mod mi
        k = ring.reduce((r - x) * s, mi)
        x = x + m * k
        m = m * mi
        x = ring.reduce(x, m)
    return x


class Frac:
    """Element of the fraction field of ``ring``, kept in lowest terms."""

    __slots__ = ("ring", "num", "den")

    def __init__(self, ring, num, den=None):
        if den is None:
            den = ring.one
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            num, den = ring.zero, ring.one
        else:
            g = gcd(ring, num, den)
            if g != ring.one:
                num = exact_div(ring, num, g)
                den = exact_div(ring, den, g)
            u, den = ring.normalize_unit(den)
            if u != ring.one:
                num = num * ring.unit_inverse(u)
        self.ring = ring
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, ring, num, den):
        obj = object.__new__(cls)
        obj.ring = ring
        obj.num = num
        obj.den = den
        return obj

    def _lift(self, other):
        if isinstance(other, Frac):
            return other
        return Frac._raw(self.ring, self.ring(other), self.ring.one)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, Frac):
            return self.num == other.num and self.den == other.den
        return self.den == self.ring.one and self.num == other

    def __hash__(self):
        if self.den == self.ring.one:
            return hash(self.num)
        return hash((self.num, self.den))

    def __repr__(self):
        return f"Frac({self.ring.format(self.num)}/{self.ring.format(self.den)})"

    def __str__(self):
        if self.den == self.ring.one:
            return self.ring.format(self.num)
        return f"({self.ring.format(self.num)})/({self.ring.format(self.den)})"

    def __neg__(self):
        return Frac._raw(self.ring, -self.num, self.den)

    def __add__(self, other):
        other = self._lift(other)
        if self.den == other.den:
            return Frac(self.ring, self.num + other.num, self.den)
        return Frac(self.ring, self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if not self.num or not other.num:
            return Frac._raw(self.ring, self.ring.zero, self.ring.one)
        return Frac(self.ring, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return Frac(self.ring, self.den, self.num)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def is_integral(self):
        return self.den == self.ring.one


def frac_reduce(ring, num, den):
    return Frac(ring, num, den)
