"""Polytopes in double description, cones, and nef partitions.

Facets come from the double description method applied to the cone over
the (homogenised) points, in integer arithmetic throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations, product
from math import ceil, floor
from typing import Iterable, Sequence

from .exact import (_echelon, as_rat, dot, lcm, nullspace, primitive, rank,
                    solve)

RatVec = tuple[Fraction, ...]


class DimensionMismatch(ValueError):
    pass


class OriginNotInterior(ValueError):
    pass


class NotFullDim(ValueError):
    pass


class NotNefPartition(ValueError):
    pass


def rat_vec(v: Iterable) -> RatVec:
    return tuple(as_rat(x) for x in v)


def _common_dim(points: Sequence[Sequence]) -> int:
    dims = {len(p) for p in points}
    if len(dims) != 1:
        raise DimensionMismatch(f"points of dimensions {sorted(dims)}")
    return dims.pop()


def _integerize(points: Sequence[RatVec]) -> tuple[list[list[int]], int]:
    den = reduce(lcm, (x.denominator for p in points for x in p), 1)
    return [[int(x * den) for x in p] for p in points], den


def chart(vectors: Sequence[Sequence]) -> list[int]:
    """Coordinates on which projection is injective over the span of ``vectors``."""
    if not vectors:
        return []
    ech, pivots = _echelon(vectors)
    return pivots


def _cone_facets(gens: list[list[int]], d: int) -> list[tuple[tuple[int, ...], frozenset]]:
    """Facets of the cone spanned by integer vectors that span ``R^d``.

    This is the double description method run on ``{y : <g, y> >= 0}``:
    its extreme rays are exactly the inner facet normals.  Returns
    ``(normal, tight)`` pairs, ``tight`` being the generators on the facet.
    """
    ids = [i for i, g in enumerate(gens) if any(g)]
    basis: list[int] = []
    for i in ids:
        if rank([gens[j] for j in basis + [i]]) > len(basis):
            basis.append(i)
        if len(basis) == d:
            break
    rays = []
    for j in basis:
        r = nullspace([gens[b] for b in basis if b != j], d)[0]
        rays.append(r if dot(gens[j], r) > 0 else tuple(-x for x in r))
    zeros = [frozenset(b for b in basis if dot(gens[b], r) == 0) for r in rays]
    for i in ids:
        if i in basis:
            continue
        g = gens[i]
        vals = [dot(g, r) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        new_rays = [rays[k] for k, v in enumerate(vals) if v >= 0]
        new_zeros = [zeros[k] | ({i} if v == 0 else set()) for k, v in enumerate(vals) if v >= 0]
        for p in pos:
            for n in neg:
                common = zeros[p] & zeros[n]
                if len(common) < d - 2:
                    continue
                # adjacent when no third ray is tight on all of ``common``
                if any(k != p and k != n and common <= zeros[k] for k in range(len(rays))):
                    continue
                r = primitive([vals[p] * b - vals[n] * a for a, b in zip(rays[p], rays[n])])
                new_rays.append(r)
                new_zeros.append(common | {i})
        rays, zeros = new_rays, new_zeros
    out = []
    for r in rays:
        out.append((tuple(r), frozenset(j for j, g in enumerate(gens) if dot(g, r) == 0)))
    return sorted(set(out))


def _full_dim_facets(pts: list[list[int]], d: int) -> list[tuple[tuple[int, ...], frozenset]]:
    """Inner facet normals of a full-dimensional integer point set.

    Returns ``(normal, tight)`` pairs where ``tight`` is the set of point
    indices on the facet; the offset is implied by any tight point.
    """
    lifted = [list(p) + [1] for p in pts]
    return [(normal[:d], tight) for normal, tight in _cone_facets(lifted, d + 1)]


@dataclass(frozen=True)
class Polytope:
    """Convex polytope with vertices and facets ``<normal, x> >= -offset``.

    Lower-dimensional polytopes also carry ``equations`` of their affine
    hull in the same ``(normal, offset)`` form, meaning ``<normal, x> = -offset``.
    """

    dim: int
    vertices: tuple[RatVec, ...]
    facets: tuple[tuple[tuple[int, ...], Fraction], ...]
    equations: tuple[tuple[tuple[int, ...], Fraction], ...] = ()

    @property
    def is_full_dim(self) -> bool:
        return not self.equations

    @property
    def is_lattice(self) -> bool:
        return all(x.denominator == 1 for v in self.vertices for x in v)

    def contains(self, x: Sequence) -> bool:
        x = rat_vec(x)
        if len(x) != self.dim:
            raise DimensionMismatch(f"point of dimension {len(x)} in a {self.dim}-polytope")
        return (all(dot(n, x) + c >= 0 for n, c in self.facets)
                and all(dot(n, x) + c == 0 for n, c in self.equations))

    def interior_contains(self, x: Sequence) -> bool:
        x = rat_vec(x)
        return self.is_full_dim and all(dot(n, x) + c > 0 for n, c in self.facets)

    def to_json(self) -> dict:
        out = {
            "dim": self.dim,
            "vertices": [[str(x) for x in v] for v in self.vertices],
            "facets": [{"normal": [str(x) for x in n], "offset": str(c)}
                       for n, c in self.facets],
        }
        if self.equations:
            out["equations"] = [{"normal": [str(x) for x in n], "offset": str(c)}
                                for n, c in self.equations]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Polytope":
        return hull([rat_vec(v) for v in data["vertices"]])


def contains(p: Polytope, x: Sequence) -> bool:
    return p.contains(x)


def hull(points: Sequence[Sequence]) -> Polytope:
    """Convex hull of a finite point set, in double description."""
    if not points:
        raise ValueError("empty point list")
    d = _common_dim(points)
    pts = sorted(set(rat_vec(p) for p in points))
    if len(pts) == 1:
        eqs = tuple((tuple(int(i == j) for j in range(d)), -pts[0][i]) for i in range(d))
        return Polytope(d, tuple(pts), (), eqs)
    diffs = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
    cols = chart(diffs)
    k = len(cols)
    ipts, den = _integerize(pts)
    proj = [[p[c] for c in cols] for p in ipts]
    raw = _full_dim_facets(proj, k)
    facets = set()
    vertex_ids = set()
    for normal, tight in raw:
        full = [0] * d
        for c, a in zip(cols, normal):
            full[c] = a
        full = primitive(full)
        offset = -Fraction(dot(full, ipts[next(iter(tight))]), den)
        facets.add((full, offset))
    # a point is a vertex when its tight facet normals span the chart
    for i, p in enumerate(proj):
        tight_normals = [n for n, t in raw if i in t]
        if k == 1 and len(tight_normals) >= 1 or rank(tight_normals) == k:
            vertex_ids.add(i)
    eqs = []
    if k < d:
        for a in nullspace(diffs, d):
            eqs.append((a, -dot(a, pts[0])))
    verts = tuple(sorted(pts[i] for i in vertex_ids))
    return Polytope(d, verts, tuple(sorted(facets)), tuple(sorted(eqs)))


def polar_dual(p: Polytope) -> Polytope:
    """The polar ``{y : <x, y> >= -1 for all x in p}``."""
    if not p.is_full_dim or any(c <= 0 for _, c in p.facets):
        raise OriginNotInterior("the origin must be an interior point")
    return hull([tuple(Fraction(a) / c for a in n) for n, c in p.facets])


def is_reflexive(p: Polytope) -> bool:
    """Lattice polytope with the origin inside whose polar is again a lattice polytope."""
    if not p.is_lattice:
        return False
    try:
        return polar_dual(p).is_lattice
    except OriginNotInterior:
        return False


def minkowski_sum(p: Polytope, q: Polytope) -> Polytope:
    if p.dim != q.dim:
        raise DimensionMismatch(f"{p.dim} != {q.dim}")
    return hull([tuple(a + b for a, b in zip(u, v)) for u in p.vertices for v in q.vertices])


def vertices_from_inequalities(ineqs: Sequence[tuple[Sequence, Fraction]], d: int) -> list[RatVec]:
    """Vertices of the bounded polyhedron ``{x : <a, x> + c >= 0}``."""
    ineqs = [(rat_vec(a), as_rat(c)) for a, c in ineqs]
    verts = set()
    for sub in combinations(range(len(ineqs)), d):
        rows = [ineqs[i][0] for i in sub]
        if rank(rows) < d:
            continue
        x = solve(rows, [-ineqs[i][1] for i in sub])
        if x is None:
            continue
        x = tuple(x)
        if x in verts:
            continue
        if all(dot(a, x) + c >= 0 for a, c in ineqs):
            verts.add(x)
    return sorted(verts)


def nef_partition_dual(parts: Sequence[Polytope]) -> list[Polytope]:
    """Dual parts ``{n : <m, n> >= -delta_ij for all m in part i}``."""
    if not parts:
        raise NotNefPartition("empty partition")
    d = parts[0].dim
    origin = (0,) * d
    if any(not q.contains(origin) for q in parts):
        raise NotNefPartition("every part must contain the origin")
    total = parts[0]
    for q in parts[1:]:
        total = minkowski_sum(total, q)
    if not is_reflexive(total):
        raise NotNefPartition("the Minkowski sum is not reflexive")
    duals = []
    for j in range(len(parts)):
        ineqs = [(m, Fraction(int(i == j))) for i, q in enumerate(parts) for m in q.vertices]
        duals.append(hull(vertices_from_inequalities(ineqs, d)))
    return duals


def lattice_points(p: Polytope) -> list[tuple[int, ...]]:
    lo = [floor(min(v[i] for v in p.vertices)) for i in range(p.dim)]
    hi = [ceil(max(v[i] for v in p.vertices)) for i in range(p.dim)]
    return [x for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))) if p.contains(x)]


def normal_fan(p: Polytope):
    """Inner normal fan: one maximal cone per vertex."""
    from .fan import Fan

    if not p.is_full_dim:
        raise NotFullDim("normal fan needs a full-dimensional polytope")
    rays = [n for n, _ in p.facets]
    cones = []
    for v in p.vertices:
        cones.append(tuple(i for i, (n, c) in enumerate(p.facets) if dot(n, v) + c == 0))
    return Fan(p.dim, tuple(rays), tuple(sorted(cones)))


# ---------------------------------------------------------------------------
# polyhedral cones

@dataclass(frozen=True)
class ConeRep:
    """H-description of a cone over a list of generators.

    ``facets`` pairs an inner normal with the indices of the generators
    on that facet; ``equations`` cut out the linear span.
    """

    dim: int
    rank: int
    facets: tuple[tuple[tuple[int, ...], frozenset], ...]
    equations: tuple[tuple[int, ...], ...]

    def contains(self, x: Sequence) -> bool:
        return (all(dot(n, x) >= 0 for n, _ in self.facets)
                and all(dot(a, x) == 0 for a in self.equations))

    def relative_interior_contains(self, x: Sequence) -> bool:
        return (all(dot(n, x) > 0 for n, _ in self.facets)
                and all(dot(a, x) == 0 for a in self.equations))


def cone_hrep(gens: Sequence[Sequence]) -> ConeRep:
    d = len(gens[0])
    ints = [list(primitive(g)) if any(g) else [0] * d for g in gens]
    cols = chart(ints)
    k = len(cols)
    eqs = tuple(nullspace(ints, d)) if k < d else ()
    if k == 0:
        return ConeRep(d, 0, (), eqs)
    proj = [[g[c] for c in cols] for g in ints]
    facets = set()
    for normal, tight in _cone_facets(proj, k):
        full = [0] * d
        for c, a in zip(cols, normal):
            full[c] = a
        facets.add((primitive(full), tight))
    return ConeRep(d, k, tuple(sorted(facets, key=lambda f: (sorted(f[1]), f[0]))), eqs)


def pulling_triangulation(vectors: dict, order: Sequence) -> list[tuple]:
    """Pulling triangulation of a vector configuration.

    ``vectors`` maps labels to integer vectors; ``order`` lists labels from
    first to last pulled.  Returns maximal simplices as label tuples sorted
    by ``order``.  For an affine point configuration pass homogenised
    points ``(p, 1)``.
    """
    pos = {lab: i for i, lab in enumerate(order)}

    def pull(labels: tuple) -> list[tuple]:
        vecs = [vectors[l] for l in labels]
        rep = cone_hrep(vecs)
        if len(labels) == rep.rank:
            return [labels]
        apex = labels[0]
        out = []
        for _, tight in rep.facets:
            if 0 in tight:
                continue
            face = tuple(labels[i] for i in sorted(tight))
            for simplex in pull(face):
                out.append((apex,) + simplex)
        return out

    start = tuple(sorted(vectors, key=pos.__getitem__))
    return sorted(pull(start), key=lambda s: [pos[l] for l in s])
