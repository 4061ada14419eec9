"""Fans over a shared ray table, toric total spaces and Cox quotients."""

from __future__ import annotations

import random
from fractions import Fraction
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .exact import (LinearSystem, dot, lp_feasible, primitive, rank,
                    smith_normal_form, solve_integer)
from .polytope import cone_hrep, pulling_triangulation


class TorusFactor(ValueError):
    pass


class SupportNotPointed(ValueError):
    pass


@dataclass(frozen=True)
class Fan:
    dim: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(int(x) for x in r) for r in self.rays))
        object.__setattr__(self, "max_cones", tuple(tuple(sorted(c)) for c in self.max_cones))

    def cone_rays(self, cone: Sequence[int]) -> list[tuple[int, ...]]:
        return [self.rays[i] for i in cone]

    def relabel(self, rays: Sequence[Sequence[int]]) -> "Fan":
        """Same fan expressed over the ray table ``rays`` (a permutation of ours)."""
        rays = [tuple(r) for r in rays]
        index = {r: i for i, r in enumerate(rays)}
        if set(index) != set(self.rays):
            raise ValueError("ray tables differ as sets")
        cones = [tuple(sorted(index[self.rays[i]] for i in c)) for c in self.max_cones]
        return Fan(self.dim, tuple(rays), tuple(sorted(cones)))

    def to_json(self) -> dict:
        return {"dim": self.dim,
                "rays": [[str(x) for x in r] for r in self.rays],
                "max_cones": [list(c) for c in self.max_cones]}

    @classmethod
    def from_json(cls, data: dict) -> "Fan":
        return cls(int(data["dim"]), tuple(tuple(int(x) for x in r) for r in data["rays"]),
                   tuple(tuple(int(i) for i in c) for c in data["max_cones"]))


@dataclass
class FanValidation:
    is_fan: bool
    is_simplicial: bool
    is_complete: bool
    problems: list


def _separable(f: Fan, a: Sequence[int], b: Sequence[int]) -> bool:
    """True when cone a and cone b meet exactly in the cone on their common rays.

    Looks for a linear form vanishing on the shared rays, positive on the
    rest of ``a`` and negative on the rest of ``b``.
    """
    common = set(a) & set(b)
    sys = LinearSystem(f.dim)
    for i in common:
        sys.equalities.append((f.rays[i], 0))
    for i in a:
        if i not in common:
            sys.strict.append((f.rays[i], 0))
    for i in b:
        if i not in common:
            sys.strict.append(([-x for x in f.rays[i]], 0))
    return lp_feasible(sys) is not None


def _facet_separates(f: Fan, reps: dict, a, b) -> bool:
    """Cheap sufficient test: a facet of one cone is exactly the shared face."""
    common = set(a) & set(b)
    for x, y in ((a, b), (b, a)):
        for normal, tight in reps[x].facets:
            if {x[i] for i in tight} != common:
                continue
            vals = {j: dot(normal, f.rays[j]) for j in y}
            if all(v <= 0 for v in vals.values()) and \
                    {j for j, v in vals.items() if v == 0} == common:
                return True
    return False


def validate(f: Fan) -> FanValidation:
    problems = []
    reps = {c: cone_hrep(f.cone_rays(c)) for c in f.max_cones}
    simplicial = True
    for c, rep in reps.items():
        if rank(f.cone_rays(c)) != len(c):
            simplicial = False
        # every listed ray must be extremal
        for i, r in enumerate(f.cone_rays(c)):
            others = [f.rays[j] for j in c if j != c[i]]
            if others and cone_hrep(others).contains(r):
                problems.append(f"ray {c[i]} of cone {list(c)} is not extremal")
        pointed = LinearSystem(f.dim, strict=[(r, 0) for r in f.cone_rays(c)])
        if lp_feasible(pointed) is None:
            problems.append(f"cone {list(c)} is not strongly convex")
    for a, b in combinations(f.max_cones, 2):
        if not (_facet_separates(f, reps, a, b) or _separable(f, a, b)):
            problems.append(f"cones {list(a)} and {list(b)} do not meet in a common face")
    is_fan = not problems
    complete = False
    if is_fan and all(rep.rank == f.dim for rep in reps.values()):
        # in a fan of full-dimensional cones, completeness means every
        # facet of a maximal cone is a facet of exactly one other one
        count: dict = {}
        for c, rep in reps.items():
            for _, tight in rep.facets:
                key = frozenset(c[i] for i in tight)
                count[key] = count.get(key, 0) + 1
        complete = all(v == 2 for v in count.values())
    return FanValidation(is_fan, simplicial, complete, problems)


def mpcp_refine(f: Fan) -> Fan:
    """Triangulate every maximal cone on its own rays, pulling in ray order."""
    cones = []
    for c in f.max_cones:
        vecs = {i: f.rays[i] for i in c}
        cones.extend(pulling_triangulation(vecs, sorted(c)))
    return Fan(f.dim, f.rays, tuple(sorted(set(cones))))


def cone_contains(f: Fan, cone: Sequence[int], x: Sequence) -> bool:
    return cone_hrep(f.cone_rays(cone)).contains(x)


def sample_support_check(coarse: Fan, fine: Fan, samples: int = 1000, seed: int = 0) -> list:
    """Compare supports on pseudo-random integer points.

    Each sample must lie in some cone of ``coarse`` exactly when it lies in
    some cone of ``fine``, and every fine cone containing it must sit
    inside a coarse cone containing it.  Returns the failing samples.
    """
    rng = random.Random(seed)
    coarse_reps = [(c, cone_hrep(coarse.cone_rays(c))) for c in coarse.max_cones]
    fine_reps = [(c, cone_hrep(fine.cone_rays(c))) for c in fine.max_cones]
    bad = []
    for _ in range(samples):
        x = [rng.randint(-1000, 1000) for _ in range(coarse.dim)]
        in_coarse = [c for c, rep in coarse_reps if rep.contains(x)]
        in_fine = [c for c, rep in fine_reps if rep.contains(x)]
        if bool(in_coarse) != bool(in_fine):
            bad.append(x)
            continue
        for c in in_fine:
            if not any(set(c) <= set(k) for k in in_coarse):
                bad.append(x)
                break
    return bad


@dataclass(frozen=True)
class ToricDivisor:
    coeffs: tuple[int, ...]

    def __add__(self, other):
        return ToricDivisor(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return ToricDivisor(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return ToricDivisor(tuple(k * a for a in self.coeffs))

    @classmethod
    def prime(cls, nrays: int, *indices: int) -> "ToricDivisor":
        return cls(tuple(int(i in indices) for i in range(nrays)))


def total_space_fan(f: Fan, divisors: Sequence[ToricDivisor]) -> Fan:
    """Fan of the total space of the direct sum of the line bundles O(D_k)."""
    r = len(divisors)
    rays = []
    for j, u in enumerate(f.rays):
        rays.append(primitive(list(u) + [-d.coeffs[j] for d in divisors]))
    n = len(rays)
    for k in range(r):
        rays.append(tuple(int(i == f.dim + k) for i in range(f.dim + r)))
    extra = tuple(range(n, n + r))
    cones = [tuple(c) + extra for c in f.max_cones]
    return Fan(f.dim + r, tuple(rays), tuple(cones))


def support_dual_cone(f: Fan) -> list[tuple[int, ...]]:
    """Primitive extreme rays of the dual of the cone spanned by the support."""
    gens = list(f.rays)
    rep = cone_hrep(gens)
    if rep.rank != f.dim:
        raise SupportNotPointed("support is not full-dimensional")
    normals = [n for n, _ in rep.facets]
    if not normals or cone_hrep(normals).rank != f.dim:
        raise SupportNotPointed("support contains a line")
    return sorted(normals)


def slice_points(gens: Sequence[Sequence[int]], weights: Sequence[int], level: int = 1) -> list[tuple[int, ...]]:
    """Lattice points of ``cone(gens)`` on the slice ``<weights, x> = level``."""
    from .polytope import hull, lattice_points

    pts = []
    for g in gens:
        h = dot(weights, g)
        if h <= 0:
            raise SupportNotPointed("slice does not cut every generator")
        pts.append([Fraction(x * level, h) for x in g])
    return lattice_points(hull(pts))


@dataclass(frozen=True)
class CoxData:
    torus_rank: int
    torsion_factors: tuple[int, ...]
    irrelevant_generators: tuple[tuple[int, ...], ...]

    @property
    def torsion_order(self) -> int:
        out = 1
        for d in self.torsion_factors:
            out *= d
        return out


def cox_data(f: Fan) -> CoxData:
    n = len(f.rays)
    if rank(f.rays) != f.dim:
        raise TorusFactor("rays do not span the ambient space")
    _, s, _, factors = smith_normal_form(f.rays)
    torsion = tuple(d for d in factors if d > 1)
    gens = []
    for c in f.max_cones:
        gens.append(tuple(int(i not in c) for i in range(n)))
    return CoxData(n - f.dim, torsion, tuple(sorted(set(gens), reverse=True)))


def principal_divisor(f: Fan, m: Sequence[int]) -> ToricDivisor:
    return ToricDivisor(tuple(dot(m, u) for u in f.rays))


def linear_equivalence(f: Fan, d1: ToricDivisor, d2: ToricDivisor) -> Optional[tuple[int, ...]]:
    """A character ``m`` with ``div(chi^m) = d1 - d2``, or None."""
    diff = (d1 - d2).coeffs
    m = solve_integer([list(u) for u in f.rays], list(diff))
    return None if m is None else tuple(m)
