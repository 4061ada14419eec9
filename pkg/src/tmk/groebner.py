"""Buchberger's algorithm over the rationals.

Pairs are pruned with the Gebauer-Moeller criteria and selected by the
normal strategy (smallest lcm first).  Every basis element is kept monic
and fully reduced, and the final basis is the unique reduced one.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .poly import Monomial, Polynomial, Ring

DEFAULT_BUDGET = 200_000


def default_budget() -> int:
    env = os.environ.get("TMK_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class GroebnerBudgetExceeded(RuntimeError):
    def __init__(self, pairs: int, partial: list):
        super().__init__(f"S-pair budget exhausted after {pairs} pairs")
        self.pairs = pairs
        self.partial = partial


@dataclass
class Ideal:
    ring: Ring
    generators: list[Polynomial]
    is_groebner: bool = False
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        self.generators = [g for g in self.generators if not g.is_zero()]

    @property
    def order(self) -> str:
        return self.ring.order

    def contains_unit(self) -> bool:
        return any(g.degree() == 0 for g in self.generators)

    def to_json(self) -> dict:
        return {"variables": list(self.ring.names), "order": self.ring.order,
                "groebner": self.is_groebner,
                "generators": [str(g) for g in self.generators]}


# ---------------------------------------------------------------------------
# internal representation: monic polynomials as (lm, mask, tail)

def _heap_key(order: str):
    if order == "grevlex":
        return lambda e: (-sum(e), e)
    return lambda e: tuple(-x for x in reversed(e))


def _mask(e: Monomial) -> int:
    m = 0
    for i, k in enumerate(e):
        if k:
            m |= 1 << i
    return m


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


class _Elem:
    __slots__ = ("lm", "mask", "tail")

    def __init__(self, lm: Monomial, tail: list):
        self.lm = lm
        self.mask = _mask(lm)
        self.tail = tail


class _Reducer:
    def __init__(self, ring: Ring):
        self.ring = ring
        self.hkey = _heap_key(ring.order)
        self.key = ring.key

    def elem(self, terms: dict) -> Optional[_Elem]:
        if not terms:
            return None
        lm = max(terms, key=self.key)
        lc = terms[lm]
        tail = [(e, c / lc) for e, c in terms.items() if e != lm]
        tail.sort(key=lambda t: self.key(t[0]), reverse=True)
        return _Elem(lm, tail)

    def reduce(self, terms: dict, basis: Sequence[_Elem], full: bool = True) -> dict:
        """Remainder of ``terms`` on division by ``basis``."""
        acc = dict(terms)
        heap = [(self.hkey(e), e) for e in acc]
        heapq.heapify(heap)
        rem: dict = {}
        hkey = self.hkey
        while heap:
            _, e = heapq.heappop(heap)
            c = acc.pop(e, None)
            if c is None:
                continue
            em = _mask(e)
            g = None
            for b in basis:
                if b.mask & em == b.mask and _divides(b.lm, e):
                    g = b
                    break
            if g is None:
                rem[e] = c
                if not full:
                    rem.update(acc)
                    return rem
                continue
            q = tuple(x - y for x, y in zip(e, g.lm))
            for ge, gc in g.tail:
                ne = tuple(a + b for a, b in zip(ge, q))
                old = acc.get(ne)
                if old is None:
                    acc[ne] = -c * gc
                    heapq.heappush(heap, (hkey(ne), ne))
                else:
                    v = old - c * gc
                    if v:
                        acc[ne] = v
                    else:
                        del acc[ne]
        return rem

    def spoly(self, f: _Elem, g: _Elem) -> dict:
        l = _lcm(f.lm, g.lm)
        qf = tuple(a - b for a, b in zip(l, f.lm))
        qg = tuple(a - b for a, b in zip(l, g.lm))
        out: dict = {}
        for e, c in f.tail:
            out[tuple(a + b for a, b in zip(e, qf))] = c
        for e, c in g.tail:
            k = tuple(a + b for a, b in zip(e, qg))
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return out

    def to_poly(self, el: _Elem) -> Polynomial:
        terms = {el.lm: Fraction(1)}
        terms.update(el.tail)
        return Polynomial(self.ring, terms)


def _update(elems, active: list[int], pairs: list, h: int):
    """Gebauer-Moeller update of the active set and pair list for new element ``h``."""
    hl = elems[h].lm
    cand = [(g, _lcm(hl, elems[g].lm)) for g in active]
    keep = []
    for i, (g, l) in enumerate(cand):
        if _coprime(hl, elems[g].lm):
            keep.append((g, l))
            continue
        others = cand[i + 1:] + keep
        if not any(_divides(l2, l) for g2, l2 in others):
            keep.append((g, l))
    new_pairs = [(g, h, l) for g, l in keep if not _coprime(hl, elems[g].lm)]
    kept = []
    for a, b, l in pairs:
        if _divides(hl, l) and _lcm(elems[a].lm, hl) != l and _lcm(elems[b].lm, hl) != l:
            continue
        kept.append((a, b, l))
    new_active = [g for g in active if not _divides(hl, elems[g].lm)] + [h]
    return new_active, kept + new_pairs


def groebner(ideal: Ideal, budget: Optional[int] = None, stop_on_unit: bool = False) -> Ideal:
    """Reduced Groebner basis of ``ideal`` in its ring's order.

    With ``stop_on_unit`` the computation returns ``<1>`` as soon as a
    nonzero constant appears.
    """
    ring = ideal.ring
    budget = default_budget() if budget is None else budget
    red = _Reducer(ring)
    key = ring.key
    elems: list[_Elem] = []
    active: list[int] = []
    pairs: list = []
    unit = (0,) * ring.nvars

    def unit_ideal(n):
        return Ideal(ring, [ring.const(1)], True, {"pairs": n, "unit": True})

    inputs = sorted((g.terms for g in ideal.generators), key=lambda t: key(max(t, key=key)))
    for terms in inputs:
        rem = red.reduce(terms, [elems[i] for i in active])
        el = red.elem(rem)
        if el is None:
            continue
        if el.lm == unit and stop_on_unit:
            return unit_ideal(0)
        elems.append(el)
        active, pairs = _update(elems, active, pairs, len(elems) - 1)
    done = 0
    while pairs:
        if done >= budget:
            raise GroebnerBudgetExceeded(done, [red.to_poly(elems[i]) for i in active])
        pairs.sort(key=lambda p: key(p[2]), reverse=True)
        a, b, _ = pairs.pop()
        done += 1
        s = red.spoly(elems[a], elems[b])
        rem = red.reduce(s, [elems[i] for i in active])
        el = red.elem(rem)
        if el is None:
            continue
        if el.lm == unit and stop_on_unit:
            return unit_ideal(done)
        elems.append(el)
        active, pairs = _update(elems, active, pairs, len(elems) - 1)
    # interreduce into the reduced basis
    basis = [elems[i] for i in active]
    minimal = [b for b in basis if not any(o is not b and _divides(o.lm, b.lm) for o in basis)]
    out = []
    for b in minimal:
        others = [o for o in minimal if o is not b]
        rem = red.reduce({e: c for e, c in b.tail}, others)
        rem[b.lm] = Fraction(1)
        out.append(Polynomial(ring, rem))
    out.sort(key=lambda p: key(p.leading_monomial()), reverse=True)
    return Ideal(ring, out, True, {"pairs": done, "unit": out == [ring.const(1)]})


def normal_form(f: Polynomial, gb: Ideal) -> Polynomial:
    red = _Reducer(f.ring)
    basis = [red.elem(g.terms) for g in gb.generators]
    return Polynomial(f.ring, red.reduce(f.terms, basis))


def ideal_membership(f: Polynomial, ideal: Ideal, budget: Optional[int] = None) -> bool:
    gb = ideal if ideal.is_groebner else groebner(ideal, budget)
    return normal_form(f, gb).is_zero()


def _lift(p: Polynomial, ring: Ring) -> Polynomial:
    pad = ring.nvars - p.ring.nvars
    return Polynomial(ring, {e + (0,) * pad: c for e, c in p.terms.items()})


def radical_membership(f: Polynomial, ideal: Ideal, budget: Optional[int] = None,
                       var: str = "t") -> bool:
    """Decide ``f`` in the radical of ``ideal`` by adjoining ``1 - t*f``."""
    if f.is_zero():
        return True
    ring = ideal.ring.extend(var)
    t = ring.gen(var)
    gens = [_lift(g, ring) for g in ideal.generators]
    gens.append(ring.const(1) - t * _lift(f, ring))
    gb = groebner(Ideal(ring, gens), budget, stop_on_unit=True)
    return gb.contains_unit()
