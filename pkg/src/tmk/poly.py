"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are exponent tuples in the ring's variable order.  The default
term order is graded reverse lexicographic where later variables are
larger, so with variables ``x0, ..., x11, u1, u2, t`` the order is
``x0 < ... < x11 < u1 < u2 < t``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .exact import as_rat

Monomial = tuple[int, ...]


def grevlex_key(e: Monomial):
    # ties in degree are broken at the smallest variable: less of it wins
    return (sum(e), tuple(-x for x in e))


def lex_key(e: Monomial):
    return tuple(reversed(e))


ORDERS: dict[str, Callable] = {"grevlex": grevlex_key, "lex": lex_key}


@dataclass(frozen=True)
class Ring:
    names: tuple[str, ...]
    order: str = "grevlex"

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        if self.order not in ORDERS:
            raise ValueError(f"unknown order {self.order!r}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def key(self) -> Callable:
        return ORDERS[self.order]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def gen(self, name: str) -> "Polynomial":
        i = self.index(name)
        return Polynomial(self, {tuple(int(j == i) for j in range(self.nvars)): Fraction(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(n) for n in self.names]

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: as_rat(c)})

    def monomial(self, expo: Sequence[int], c=1) -> "Polynomial":
        return Polynomial(self, {tuple(expo): as_rat(c)})

    def extend(self, name: str) -> "Ring":
        """Same ring with one more variable, larger than all existing ones."""
        return Ring(self.names + (name,), self.order)

    def parse(self, text: str, params: Mapping[str, object] | None = None) -> "Polynomial":
        return parse(self, text, params)


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Fraction] | None = None):
        self.ring = ring
        self.terms = {e: Fraction(c) for e, c in (terms or {}).items() if c}

    # -- basic structure -------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        key = self.ring.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self) -> Monomial:
        return max(self.terms, key=self.ring.key)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def monic(self) -> "Polynomial":
        lc = self.leading_coefficient()
        return Polynomial(self.ring, {e: c / lc for e, c in self.terms.items()})

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring.names != self.ring.names:
                raise ValueError("polynomials over different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_rat(other)
            return Polynomial(self.ring, {e: a * c for e, a in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = as_rat(c)
        return Polynomial(self.ring, {e: a / c for e, a in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = self.ring.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_monomial(self, expo: Monomial, c=1) -> "Polynomial":
        c = as_rat(c)
        return Polynomial(self.ring, {tuple(a + b for a, b in zip(e, expo)): v * c
                                      for e, v in self.terms.items()})

    def diff(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.ring.index(name_or_index)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return Polynomial(self.ring, out)

    def evaluate(self, values: Sequence) -> Fraction:
        vals = [as_rat(v) for v in values]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term *= v ** k
            total += term
        return total

    def substitute(self, mapping: Mapping[str, object]) -> "Polynomial":
        """Replace named variables by rationals or polynomials."""
        out = Polynomial(self.ring)
        idx = {self.ring.index(n): v for n, v in mapping.items()}
        for e, c in self.terms.items():
            rest = list(e)
            term = self.ring.const(c)
            for i, v in idx.items():
                if rest[i]:
                    term = term * (v ** rest[i] if isinstance(v, Polynomial) else as_rat(v) ** rest[i])
                    rest[i] = 0
            out = out + term.mul_monomial(tuple(rest))
        return out

    def permute(self, perm: Mapping[str, str]) -> "Polynomial":
        """Rename variables by a permutation of the ring's names."""
        idx = [self.ring.index(perm.get(n, n)) for n in self.ring.names]
        out = {}
        for e, c in self.terms.items():
            f = [0] * len(e)
            for i, k in enumerate(e):
                f[idx[i]] += k
            out[tuple(f)] = c
        return Polynomial(self.ring, out)

    # -- text ------------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"

    def to_json(self) -> dict:
        return {"variables": list(self.ring.names),
                "terms": [[list(e), str(c)] for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: dict, order: str = "grevlex") -> "Polynomial":
        ring = Ring(tuple(data["variables"]), order)
        return cls(ring, {tuple(e): Fraction(c) for e, c in data["terms"]})


def monomial_str(ring: Ring, e: Monomial) -> str:
    parts = []
    for n, k in zip(ring.names, e):
        if k == 1:
            parts.append(n)
        elif k:
            parts.append(f"{n}^{k}")
    return " * ".join(parts) if parts else "1"


def format_poly(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    out = []
    for e, c in p.sorted_terms():
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = monomial_str(p.ring, e)
        if mono == "1":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a} * {mono}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


_TERM = re.compile(r"\s*((?:[+-]\s*)*)([^+-]+)")


def parse(ring: Ring, text: str, params: Mapping[str, object] | None = None) -> Polynomial:
    """Parse sums of terms like ``-3/2 * x0^3 * x6^3 + u1``.

    Names in ``params`` are treated as rational constants, so
    ``parse(ring, "3*lambda*x0", {"lambda": -2})`` works for any sign.
    """
    params = {k: as_rat(v) for k, v in (params or {}).items()}
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    out = Polynomial(ring)
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        pos = m.end()
        coef = Fraction((-1) ** m.group(1).count("-"))
        expo = [0] * ring.nvars
        for factor in m.group(2).split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {m.group(0)!r}")
            base, _, power = factor.partition("^")
            base = base.strip()
            k = int(power) if power else 1
            if base in ring.names:
                expo[ring.index(base)] += k
            elif base in params:
                coef *= params[base] ** k
            else:
                coef *= Fraction(base) ** k
        out = out + ring.monomial(expo, coef)
    return out


# ---------------------------------------------------------------------------
# monomial ideals

def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    keep: list[Monomial] = []
    for g in gens:
        if not any(divides(k, g) for k in keep):
            keep.append(g)
    return tuple(sorted(keep, key=grevlex_key, reverse=True))


class MonomialIdeal:
    """Monomial ideal stored by its minimal generators."""

    def __init__(self, ring: Ring, gens: Iterable[Monomial]):
        self.ring = ring
        self.gens = minimalize(tuple(g) for g in gens)

    def contains(self, e: Monomial) -> bool:
        return any(divides(g, e) for g in self.gens)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and set(self.gens) == set(other.gens)

    def __hash__(self):
        return hash(frozenset(self.gens))

    def __len__(self):
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def polynomials(self, ring: Ring | None = None) -> list[Polynomial]:
        ring = ring or self.ring
        pad = ring.nvars - self.ring.nvars
        return [ring.monomial(tuple(g) + (0,) * pad) for g in self.gens]

    def strings(self) -> list[str]:
        return [monomial_str(self.ring, g) for g in self.gens]

    def to_json(self) -> dict:
        return {"variables": list(self.ring.names), "generators": self.strings()}
