import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from latmac.poly import (
    Poly,
    PrimeOfA,
    content,
    discriminant,
    format_poly,
    irreducible_low_degree,
    parse_poly,
    poly_eval,
    roots_mod_prime,
)
from latmac.ring import ZZ, FpPoly, PolyRingFp, gcd

F2 = PolyRingFp(2)
t = F2.gen
F1 = parse_poly("x^3+4*x-1", ZZ)
F2_CUBIC = parse_poly("y^3+(t^3+t^2+t)", F2, "y")


def test_parse_and_format_round_trip():
    assert F1 == Poly([-1, 4, 0, 1])
    assert format_poly(F1, ZZ, "x") == "x^3+4*x-1"
    assert format_poly(F2_CUBIC, F2, "y") == "y^3+(t^3+t^2+t)"
    assert parse_poly("x^3 + 4x − 1", ZZ) == F1
    assert parse_poly("(x+1)^2", ZZ) == Poly([1, 2, 1])


def test_parse_errors():
    for bad in ["x^", "x**", "3,", "x+*2", "z^2"]:
        with pytest.raises(ValueError):
            parse_poly(bad, ZZ, "x")


def test_poly_eval_examples():
    assert poly_eval(F1, 2) == 15
    assert poly_eval(F1, 0) == -1
    assert poly_eval(F2_CUBIC, F2.one) == t**3 + t**2 + t + 1


def test_content_examples():
    assert content(ZZ, Poly([4, 0, 6])) == 2
    assert content(ZZ, F1) == 1
    assert content(F2, Poly([t, t**2 + t])) == t


def test_discriminant_examples():
    assert discriminant(ZZ, F1) == -283
    assert discriminant(ZZ, Poly([-1, 0, 1])) == 4
    assert discriminant(F2, F2_CUBIC) == t**6 + t**4 + t**2


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=4))
def test_discriminant_matches_sympy(coeffs):
    x = sympy.Symbol("x")
    f = Poly(coeffs + [1])
    expr = sum(c * x**i for i, c in enumerate(coeffs + [1]))
    assert discriminant(ZZ, f) == int(sympy.discriminant(expr, x))


def test_discriminant_over_f2_matches_integer_reduction():
    # disc is an integer polynomial in the coefficients, so reduce the Z[t] result mod 2
    x, s = sympy.symbols("x s")
    d = sympy.Poly(sympy.discriminant(x**3 + s**3 + s**2 + s, x), s)
    coeffs = [int(c) % 2 for c in reversed(d.all_coeffs())]
    assert discriminant(F2, F2_CUBIC) == FpPoly(2, coeffs)


def test_roots_mod_prime_examples():
    assert roots_mod_prime(ZZ, F1, 3) == [(2, 1)]
    assert roots_mod_prime(ZZ, F1, 2) == [(1, 1)]
    assert roots_mod_prime(F2, F2_CUBIC, PrimeOfA(F2, t)) == [(F2.zero, 3)]
    assert roots_mod_prime(F2, F2_CUBIC, PrimeOfA(F2, t + 1)) == [(F2.one, 1)]


def test_roots_are_exhaustive():
    for p in ZZ.primes(60):
        roots = dict(roots_mod_prime(ZZ, F1, p))
        assert sum(roots.values()) <= 3
        for z in range(p):
            assert (F1(z) % p == 0) == (z in roots)
        # repeated root exactly at primes dividing the discriminant
        assert any(m >= 2 for m in roots.values()) == (283 % p == 0)


def test_roots_reject_huge_fields():
    with pytest.raises(ValueError, match="infeasible"):
        roots_mod_prime(ZZ, F1, 2**31 - 1)


def test_irreducible_low_degree_examples():
    assert irreducible_low_degree(ZZ, F1)
    assert not irreducible_low_degree(ZZ, Poly([-1, 0, 1]))
    assert irreducible_low_degree(F2, F2_CUBIC)
    with pytest.raises(ValueError, match="asserted by caller"):
        irreducible_low_degree(ZZ, Poly([1, 0, 0, 0, 1]))


def test_prime_of_a_normalizes():
    assert PrimeOfA(ZZ, -7).gen == 7
    with pytest.raises(ValueError):
        PrimeOfA(ZZ, 6)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(-9, 9), min_size=1, max_size=4),
    st.lists(st.integers(-9, 9), min_size=1, max_size=4),
)
def test_gauss_content_multiplicative(a, b):
    g, h = Poly(a), Poly(b)
    if not g or not h:
        return
    assert content(ZZ, g * h) == content(ZZ, g) * content(ZZ, h)


def test_gauss_content_over_f2():
    g = Poly([t, t**2])
    h = Poly([t + 1, t**2 + 1])
    assert content(F2, g * h) == gcd(F2, t, t) * content(F2, h)
