from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from tmk.poly import MonomialIdeal, Polynomial, Ring, divides, grevlex_key, minimalize

R = Ring(("x", "y", "z"))
X, Y, Z = sympy.symbols("x y z")


def to_sympy(p: Polynomial):
    syms = sympy.symbols(p.ring.names)
    return sum((sympy.Rational(c.numerator, c.denominator) *
                sympy.Mul(*[s ** k for s, k in zip(syms, e)]) for e, c in p.terms.items()),
               sympy.Integer(0))


terms = st.dictionaries(st.tuples(*[st.integers(0, 3)] * 3),
                        st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=5)
polys = terms.map(lambda t: Polynomial(R, t))


def test_parse_and_format():
    p = R.parse("-3/2 * y * x^3 + y - 2")
    assert p.terms == {(3, 1, 0): Fraction(-3, 2), (0, 1, 0): 1, (0, 0, 0): -2}
    assert str(p) == "-3/2 * x^3 * y + y - 2"
    assert R.parse(str(p)) == p
    assert R.parse("x + -3*y") == R.parse("x - 3*y")
    assert R.parse("2*c*x", {"c": Fraction(-1, 2)}) == -R.gen("x")
    with pytest.raises(ValueError):
        R.parse("x + w")
    with pytest.raises(ValueError):
        R.parse("")


def test_grevlex_later_variables_larger():
    assert grevlex_key((1, 0, 0)) < grevlex_key((0, 1, 0)) < grevlex_key((0, 0, 1))
    # same degree: the monomial with less of the smallest variable is larger
    assert grevlex_key((1, 0, 1)) < grevlex_key((0, 2, 0))
    assert R.parse("x^2 + y*z").leading_monomial() == (0, 1, 1)


@given(polys, polys)
def test_arithmetic_matches_sympy(p, q):
    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0
    assert sympy.expand(to_sympy(p - q) - (to_sympy(p) - to_sympy(q))) == 0
    assert sympy.expand(to_sympy(p.diff("y")) - sympy.diff(to_sympy(p), Y)) == 0


@given(polys)
def test_power_and_json(p):
    assert p ** 3 == p * p * p
    assert Polynomial.from_json(p.to_json()) == p


@given(polys, st.fractions(max_denominator=3), st.fractions(max_denominator=3))
def test_evaluate_and_substitute(p, a, b):
    v = p.evaluate([a, b, 1])
    assert p.substitute({"x": a, "y": b, "z": 1}) == v
    assert to_sympy(p).subs({X: a, Y: b, Z: 1}) == v


def test_permute():
    p = R.parse("x^2*y + z")
    assert p.permute({"x": "y", "y": "x"}) == R.parse("y^2*x + z")


def test_monomial_ideal():
    i = MonomialIdeal(R, [(1, 1, 0), (1, 0, 0), (0, 2, 1)])
    assert i.gens == ((0, 2, 1), (1, 0, 0))
    assert i.contains((2, 5, 0)) and not i.contains((0, 1, 1))
    assert i == MonomialIdeal(R, [(1, 0, 0), (0, 2, 1), (3, 3, 3)])
    assert divides((1, 0, 0), (1, 2, 0))
    assert minimalize([(1, 1, 1), (1, 1, 1)]) == ((1, 1, 1),)
