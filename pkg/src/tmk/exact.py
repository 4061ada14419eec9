"""Exact integer and rational linear algebra.

Everything here works on plain Python ``int`` and ``fractions.Fraction``
values; matrices are lists of rows.  The LP solver is a dense two-phase
simplex with Bland's rule, run on an integer tableau with fraction-free
(Bareiss) pivoting so that no rounding ever happens.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Optional, Sequence

Rat = Fraction
IntVec = tuple[int, ...]
IntMat = list[list[int]]


class ZeroVector(ValueError):
    """Raised when a primitive vector is requested for the zero vector."""


def as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def lcm(a: int, b: int) -> int:
    return abs(a * b) // gcd(a, b) if a and b else 0


def content(vec: Sequence[int]) -> int:
    return reduce(gcd, vec, 0)


def primitive(vec: Sequence) -> IntVec:
    """Smallest integer vector on the ray spanned by ``vec``.

    Rational input is cleared of denominators first, so the result always
    points in the same direction as the input.
    """
    if all(type(x) is int for x in vec):
        ints = list(vec)
    else:
        vec = [as_rat(x) for x in vec]
        den = reduce(lcm, (x.denominator for x in vec), 1)
        ints = [int(x * den) for x in vec]
    if not any(ints):
        raise ZeroVector("zero vector has no primitive generator")
    g = content(ints)
    return tuple(x // g for x in ints)


def integral_row(vec: Sequence) -> list[int]:
    """Scale a rational row to integers without changing its direction."""
    if all(type(x) is int for x in vec):
        return list(vec)
    vec = [as_rat(x) for x in vec]
    den = reduce(lcm, (x.denominator for x in vec), 1)
    return [int(x * den) for x in vec]


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*m)]


def identity(n: int) -> IntMat:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]


# ---------------------------------------------------------------------------
# fraction-free elimination

def _echelon(rows: Sequence[Sequence]) -> tuple[IntMat, list[int]]:
    """Integer reduced row echelon form (rows scaled, not normalised).

    Returns the nonzero rows and their pivot columns.  Each pivot column
    is zero in every other row.
    """
    m = [integral_row(r) for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                a, b = pr[c], m[i][c]
                row = [a * x - b * y for x, y in zip(m[i], pr)]
                g = content(row)
                m[i] = [x // g for x in row] if g > 1 else row
        g = content(pr)
        if g > 1:
            m[r] = [x // g for x in pr]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(_echelon(rows)[1]) if rows else 0


def nullspace(rows: Sequence[Sequence], ncols: Optional[int] = None) -> list[IntVec]:
    """Basis of the rational kernel, as primitive integer vectors."""
    if ncols is None:
        ncols = len(rows[0])
    ech, pivots = _echelon(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        scale = reduce(lcm, (row[p] for row, p in zip(ech, pivots)), 1)
        v = [0] * ncols
        v[f] = scale
        for row, p in zip(ech, pivots):
            v[p] = -row[f] * scale // row[p]
        basis.append(primitive(v))
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """Some rational solution of ``a x = b``, or None when inconsistent."""
    n = len(a[0])
    aug = [list(map(as_rat, row)) + [as_rat(rhs)] for row, rhs in zip(a, b)]
    ech, pivots = _echelon(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(ech, pivots):
        x[p] = Fraction(row[n], row[p])
    return x


def det(m: Sequence[Sequence]) -> Fraction:
    """Determinant by Bareiss elimination (exact for rational input)."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    den = reduce(lcm, (as_rat(x).denominator for row in m for x in row), 1)
    a = [[int(as_rat(x) * den) for x in row] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], den ** n)


# ---------------------------------------------------------------------------
# Smith and Hermite normal forms

def smith_normal_form(m: Sequence[Sequence[int]]):
    """Return ``(u, s, v, factors)`` with ``u @ m @ v == s``, ``u, v`` unimodular.

    ``s`` is diagonal with nonnegative entries ``d1 | d2 | ...``, zeros last;
    ``factors`` lists that diagonal.
    Pivots are chosen by least absolute value and reduced with gcd steps.
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row dst += k * row src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for r in a:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    t = 0
    while t < min(rows, cols):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows)
                   for j in range(t, cols) if a[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            bad = next(((i, 0) for i in range(t + 1, rows) if a[i][t] % p), None)
            if bad is None:
                bad = next(((j, 1) for j in range(t + 1, cols) if a[t][j] % p), None)
            if bad is None:
                # column and row are divisible by the pivot: clear them
                for i in range(t + 1, rows):
                    if a[i][t]:
                        add_row(i, t, -(a[i][t] // p))
                for j in range(t + 1, cols):
                    if a[t][j]:
                        add_col(j, t, -(a[t][j] // p))
                rest = next(((i, j) for i in range(t + 1, rows)
                             for j in range(t + 1, cols) if a[i][j] % p), None)
                if rest is None:
                    break
                add_row(t, rest[0], 1)
                continue
            k, is_col = bad
            if is_col:
                add_col(k, t, -(a[t][k] // p))
                swap_cols(t, k)
            else:
                add_row(k, t, -(a[k][t] // p))
                swap_rows(t, k)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    factors = [a[i][i] for i in range(min(rows, cols))]
    return u, a, v, factors


def hermite_normal_form(m: Sequence[Sequence[int]]):
    """Row-style HNF: return ``(h, u)`` with ``u @ m == h``.

    ``h`` is upper echelon with positive pivots, entries above a pivot
    reduced into ``[0, pivot)``, and zero rows at the bottom.
    """
    h = [list(map(int, row)) for row in m]
    rows = len(h)
    cols = len(h[0]) if rows else 0
    u = identity(rows)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            nz = [(abs(h[i][c]), i) for i in range(r, rows) if h[i][c]]
            if not nz:
                break
            _, i = min(nz)
            h[r], h[i] = h[i], h[r]
            u[r], u[i] = u[i], u[r]
            done = True
            for i in range(r + 1, rows):
                q = h[i][c] // h[r][c]
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                if h[i][c]:
                    done = False
            if done:
                break
        if not h[r][c]:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return h, u


def solve_integer(a: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[list[int]]:
    """An integer solution of ``a x = b`` or None, via the Smith form."""
    u, s, v, _ = smith_normal_form(a)
    ub = [dot(row, b) for row in u]
    n = len(a[0])
    y = [0] * n
    for i, rhs in enumerate(ub):
        d = s[i][i] if i < n else 0
        if d == 0:
            if rhs:
                return None
        elif rhs % d:
            return None
        else:
            y[i] = rhs // d
    return [dot(row, y) for row in v]


# ---------------------------------------------------------------------------
# exact LP feasibility

@dataclass
class LinearSystem:
    """Constraints ``row . x + const`` compared with zero.

    ``nonstrict`` rows must be ``>= 0``, ``strict`` rows ``> 0`` and
    ``equalities`` rows ``== 0``.  Each constraint is a pair
    ``(row, const)``.
    """

    nvars: int
    nonstrict: list = field(default_factory=list)
    strict: list = field(default_factory=list)
    equalities: list = field(default_factory=list)

    def satisfied_by(self, x: Sequence) -> bool:
        def val(c):
            return dot(c[0], x) + as_rat(c[1])
        return (all(val(c) >= 0 for c in self.nonstrict)
                and all(val(c) > 0 for c in self.strict)
                and all(val(c) == 0 for c in self.equalities))


class _Tableau:
    """Integer simplex tableau; true entries are ``m[i][j] / d``."""

    def __init__(self, m: IntMat, basis: list[int], ncons: int):
        self.m = m
        self.d = 1
        self.basis = basis
        self.ncons = ncons

    def pivot(self, r: int, c: int):
        m, d = self.m, self.d
        pr = m[r]
        p = pr[c]
        for i, row in enumerate(m):
            if i == r:
                continue
            f = row[c]
            if f:
                m[i] = [(x * p - f * y) // d for x, y in zip(row, pr)]
            elif p != d:
                m[i] = [x * p // d for x in row]
        self.d = p
        if p < 0:
            self.m = [[-x for x in row] for row in m]
            self.d = -p
        self.basis[r] = c

    def run(self, obj: int, allowed: int) -> bool:
        """Maximise row ``obj`` (stored as negated costs) with Bland's rule.

        Only columns below ``allowed`` may enter.  Returns False when
        unbounded.
        """
        rhs = len(self.m[0]) - 1
        while True:
            row = self.m[obj]
            c = next((j for j in range(allowed) if row[j] < 0), None)
            if c is None:
                return True
            best = None
            for i in range(self.ncons):
                a = self.m[i][c]
                if a > 0:
                    key = (Fraction(self.m[i][rhs], a), self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], c)


def lp_feasible(system: LinearSystem) -> Optional[list[Fraction]]:
    """Exact feasibility of a system of linear (in)equalities.

    Returns a rational witness point or None.  Strict rows get a shared
    slack ``s`` with ``0 <= s <= 1`` that phase two maximises; the system
    is feasible exactly when the optimum is positive.
    """
    n = system.nvars
    rows = []  # (coeffs over free vars, const, kind) meaning row.x + const (kind) 0
    for row, c in system.equalities:
        rows.append((list(map(as_rat, row)), as_rat(c), "eq", False))
    for row, c in system.nonstrict:
        rows.append((list(map(as_rat, row)), as_rat(c), "ge", False))
    for row, c in system.strict:
        rows.append((list(map(as_rat, row)), as_rat(c), "ge", True))
    has_strict = bool(system.strict)

    # columns: x+ (n), x- (n), s (1 if strict), surplus per "ge" row, artificials
    ns = 1 if has_strict else 0
    n_ge = sum(1 for r in rows if r[2] == "ge") + ns
    base = 2 * n + ns
    cons = []
    ge_i = 0
    for coeffs, c, kind, strict in rows:
        # row.x + const ?? 0   ->   row.x - [s] - surplus = -const
        line = [Fraction(0)] * (base + n_ge)
        for j, a in enumerate(coeffs):
            line[j] = a
            line[n + j] = -a
        if strict:
            line[2 * n] = Fraction(-1)
        if kind == "ge":
            line[base + ge_i] = Fraction(-1)
            ge_i += 1
        cons.append((line, -c))
    if has_strict:  # s + surplus' = 1 with surplus' >= 0 written as -(-1)
        line = [Fraction(0)] * (base + n_ge)
        line[2 * n] = Fraction(1)
        line[base + ge_i] = Fraction(1)
        cons.append((line, Fraction(1)))
    nstruct = base + n_ge
    ncons = len(cons)

    # integer rows with nonnegative right-hand sides and a unit artificial
    nart = ncons
    width = nstruct + nart + 1
    m = []
    basis = []
    for i, (line, rhs) in enumerate(cons):
        if rhs < 0:
            line, rhs = [-x for x in line], -rhs
        ints = integral_row(line + [rhs])
        full = ints[:-1] + [0] * nart + [ints[-1]]
        full[nstruct + i] = 1
        basis.append(nstruct + i)
        m.append(full)
    # phase one maximises -sum(artificials); phase two maximises s
    obj1 = [0] * width
    for row in m:
        for j in range(nstruct):
            obj1[j] -= row[j]
        obj1[-1] -= row[-1]
    obj2 = [0] * width
    if has_strict:
        obj2[2 * n] = -1
    m.append(obj2)
    m.append(obj1)
    tab = _Tableau(m, basis + [-1, -1], ncons)
    tab.run(ncons + 1, nstruct)
    if tab.m[ncons + 1][-1] != 0:
        return None
    # drive remaining artificials out of the basis where possible
    for i in range(ncons):
        if tab.basis[i] >= nstruct:
            c = next((j for j in range(nstruct) if tab.m[i][j]), None)
            if c is not None:
                tab.pivot(i, c)
    if has_strict:
        for i in range(ncons):
            if tab.basis[i] >= nstruct:  # redundant row: freeze it
                tab.m[i] = [0] * (width - 1) + [0]
        tab.run(ncons, nstruct)
    x = [Fraction(0)] * (2 * n + ns)
    for i in range(ncons):
        b = tab.basis[i]
        if b < 2 * n + ns:
            x[b] = Fraction(tab.m[i][-1], tab.d)
    point = [x[j] - x[n + j] for j in range(n)]
    if has_strict and x[2 * n] <= 0:
        return None
    assert system.satisfied_by(point)
    return point
