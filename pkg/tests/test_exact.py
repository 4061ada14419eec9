from fractions import Fraction

import pytest
import sympy
from sympy.matrices.normalforms import invariant_factors
from hypothesis import given, settings, strategies as st

from tmk.exact import (LinearSystem, ZeroVector, det, hermite_normal_form, lp_feasible,
                       mat_mul, nullspace, primitive, rank, smith_normal_form, solve,
                       solve_integer)

small = st.integers(-6, 6)


def matrices(rows=st.integers(1, 4), cols=st.integers(1, 4)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]))


def square(n=st.integers(1, 4)):
    return n.flatmap(lambda k: st.lists(st.lists(small, min_size=k, max_size=k),
                                        min_size=k, max_size=k))


def test_primitive():
    assert primitive([4, -6, 0]) == (2, -3, 0)
    assert primitive([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    with pytest.raises(ZeroVector):
        primitive([0, 0])


@given(st.lists(small, min_size=1, max_size=5).filter(any), st.integers(1, 20))
def test_primitive_scale_invariant(v, k):
    assert primitive([k * x for x in v]) == primitive(v)


@given(square())
def test_det_matches_sympy(m):
    assert det(m) == sympy.Matrix(m).det()


@given(matrices())
def test_rank_and_nullspace(m):
    assert rank(m) == sympy.Matrix(m).rank()
    ker = nullspace(m)
    assert len(ker) == len(m[0]) - rank(m)
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


@given(matrices())
@settings(max_examples=60)
def test_smith_normal_form(m):
    u, s, v, factors = smith_normal_form(m)
    assert mat_mul(mat_mul(u, m), v) == s
    assert abs(det(u)) == 1 and abs(det(v)) == 1
    nz = [d for d in factors if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert factors[len(nz):] == [0] * (len(factors) - len(nz))
    # oracle: sympy's invariant factors up to sign
    expected = [abs(x) for x in invariant_factors(sympy.Matrix(m), domain=sympy.ZZ)]
    assert nz == [int(x) for x in expected if x]


def test_smith_of_quotient_rays():
    rays = [[3, 0, 0, -1, -1], [0, 3, 0, -1, -1], [0, 0, 3, -1, -1],
            [-1, -1, -1, 3, 0], [-1, -1, -1, 0, 3], [-1, -1, -1, 0, 0]]
    *_, factors = smith_normal_form(rays)
    assert [d for d in factors if d > 1] == [3, 3, 9]


@given(matrices())
@settings(max_examples=60)
def test_hermite_normal_form(m):
    h, u = hermite_normal_form(m)
    assert mat_mul(u, m) == h
    assert abs(det(u)) == 1
    lead = [next((j for j, x in enumerate(r) if x), None) for r in h]
    nz = [j for j in lead if j is not None]
    assert nz == sorted(nz) and len(set(nz)) == len(nz)
    for i, j in enumerate(lead):
        if j is None:
            continue
        assert h[i][j] > 0
        assert all(0 <= h[k][j] < h[i][j] for k in range(i))


def test_hermite_example():
    h, _ = hermite_normal_form([[2, 4], [3, 7]])
    assert h == [[1, 1], [0, 2]]


@given(square(), st.lists(small, min_size=4, max_size=4))
def test_solve(m, b):
    b = b[:len(m)]
    x = solve(m, b)
    consistent = sympy.Matrix(m).rank() == sympy.Matrix(m).row_join(sympy.Matrix(b)).rank()
    assert (x is not None) == consistent
    if x is not None:
        assert [sum(a * y for a, y in zip(row, x)) for row in m] == b


def test_solve_integer():
    assert solve_integer([[2, 0], [0, 3]], [4, 9]) == [2, 3]
    assert solve_integer([[2, 0], [0, 3]], [3, 9]) is None
    x = solve_integer([[3, 5]], [1])
    assert 3 * x[0] + 5 * x[1] == 1


def test_lp_feasible_strict():
    # x > 0, y > 0, x + y < 1
    s = LinearSystem(2, strict=[((1, 0), 0), ((0, 1), 0), ((-1, -1), 1)])
    x = lp_feasible(s)
    assert x is not None and s.satisfied_by(x)
    # x > 0, x < 0 is infeasible
    assert lp_feasible(LinearSystem(1, strict=[((1,), 0), ((-1,), 0)])) is None
    # x >= 0, x <= 0 is feasible, x = 0
    assert lp_feasible(LinearSystem(1, nonstrict=[((1,), 0), ((-1,), 0)])) == [0]


@given(st.lists(st.tuples(st.lists(small, min_size=3, max_size=3), small), min_size=1, max_size=6),
       st.lists(small, min_size=3, max_size=3))
@settings(max_examples=80)
def test_lp_feasible_with_planted_point(rows, point):
    # planted feasible point: shift constants so the point satisfies every row strictly
    s = LinearSystem(3)
    for row, c in rows:
        val = sum(a * b for a, b in zip(row, point))
        s.strict.append((row, -val + abs(c) + 1))
    x = lp_feasible(s)
    assert x is not None and s.satisfied_by(x)
