"""Regular subdivisions of labelled point configurations.

Points may span a proper affine subspace (the bundle configurations all
lie on ``t1 + t2 = 1``), so every computation runs in a coordinate chart
of the affine hull.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .exact import LinearSystem, as_rat, det, dot, lp_feasible, rank, solve
from .polytope import chart, pulling_triangulation


class LabelMismatch(ValueError):
    pass


class NotSimplicial(ValueError):
    pass


@dataclass(frozen=True)
class PointConfiguration:
    labels: tuple[str, ...]
    points: tuple[tuple[int, ...], ...]
    x_labels: tuple[str, ...] = ()
    u_labels: tuple[str, ...] = ()
    variables: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise LabelMismatch("labels must be distinct")
        if len({len(p) for p in self.points}) > 1:
            raise ValueError("points of different dimensions")

    @property
    def dim(self) -> int:
        return len(self.points[0])

    def point(self, label: str) -> tuple[int, ...]:
        return self.points[self.labels.index(label)]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def sort_labels(self, labels) -> tuple[str, ...]:
        return tuple(sorted(labels, key=self.labels.index))

    def variable(self, label: str) -> str:
        names = dict(self.variables)
        if label in names:
            return names[label]
        if label in self.x_labels:
            return f"x{self.x_labels.index(label)}"
        return f"u{self.u_labels.index(label) + 1}"

    def chart_points(self) -> dict[str, tuple]:
        """Affine chart coordinates of every point, keyed by label."""
        base = self.points[0]
        diffs = [[a - b for a, b in zip(p, base)] for p in self.points[1:]]
        cols = chart(diffs)
        return {l: tuple(p[c] for c in cols) for l, p in zip(self.labels, self.points)}

    @property
    def affine_dim(self) -> int:
        return len(next(iter(self.chart_points().values())))

    def to_json(self) -> dict:
        out = {"labels": list(self.labels),
               "points": [[str(x) for x in p] for p in self.points],
               "x_labels": list(self.x_labels), "u_labels": list(self.u_labels)}
        if self.variables:
            out["variables"] = dict(self.variables)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "PointConfiguration":
        return cls(tuple(data["labels"]),
                   tuple(tuple(int(x) for x in p) for p in data["points"]),
                   tuple(data.get("x_labels", ())), tuple(data.get("u_labels", ())),
                   tuple(sorted(data.get("variables", {}).items())))


@dataclass(frozen=True)
class Subdivision:
    config: PointConfiguration
    cells: tuple[tuple[str, ...], ...]

    @property
    def is_triangulation(self) -> bool:
        k = self.config.affine_dim
        return all(len(c) == k + 1 for c in self.cells)

    def to_json(self) -> dict:
        return {"cells": [list(c) for c in self.cells]}


class Triangulation(Subdivision):
    pass


def _cells(config: PointConfiguration, cells) -> tuple[tuple[str, ...], ...]:
    order = {l: i for i, l in enumerate(config.labels)}
    cells = {tuple(sorted(c, key=order.__getitem__)) for c in cells}
    return tuple(sorted(cells, key=lambda c: [order[l] for l in c]))


def regular_subdivision(config: PointConfiguration, weights: Sequence) -> Subdivision:
    """Project the lower faces of the lifted configuration.

    A cell is the set of points on which some affine function agrees with
    the weights while staying weakly below them everywhere, provided that
    set spans the whole affine hull.
    """
    weights = [as_rat(w) for w in weights]
    if len(weights) != len(config.labels):
        raise LabelMismatch("one weight per label required")
    pts = config.chart_points()
    q = [pts[l] for l in config.labels]
    k = len(q[0])
    n = len(q)
    found: list[frozenset] = []
    for sub in combinations(range(n), k + 1):
        if any(set(sub) <= c for c in found):
            continue
        rows = [list(q[i]) + [1] for i in sub]
        if rank(rows) < k + 1:
            continue
        coef = solve(rows, [weights[i] for i in sub])
        gaps = [weights[j] - dot(coef[:k], q[j]) - coef[k] for j in range(n)]
        if any(g < 0 for g in gaps):
            continue
        found.append(frozenset(j for j, g in enumerate(gaps) if g == 0))
    cells = [[config.labels[i] for i in c] for c in set(found)]
    return Subdivision(config, _cells(config, cells))


def _homogenised(config: PointConfiguration) -> dict[str, tuple]:
    return {l: tuple(p) + (1,) for l, p in config.chart_points().items()}


def normalized_volume(config: PointConfiguration, labels: Sequence[str]) -> Fraction:
    """Normalised volume (in the affine chart) of the hull of some points."""
    vecs = _homogenised(config)
    sub = {l: vecs[l] for l in labels}
    if rank(list(sub.values())) < config.affine_dim + 1:
        return Fraction(0)
    total = Fraction(0)
    for simplex in pulling_triangulation(sub, config.sort_labels(labels)):
        total += abs(det([vecs[l] for l in simplex]))
    return total


def covers_hull(sub: Subdivision) -> bool:
    """Cells' volumes add up to the volume of the whole configuration."""
    whole = normalized_volume(sub.config, sub.config.labels)
    return sum(normalized_volume(sub.config, c) for c in sub.cells) == whole


def refine_to_triangulation(config: PointConfiguration, sub: Subdivision) -> Triangulation:
    """Pull every non-simplex cell at its lowest label, recursively."""
    k = config.affine_dim
    vecs = _homogenised(config)
    cells = []
    for cell in sub.cells:
        if len(cell) == k + 1:
            cells.append(cell)
            continue
        sub_vecs = {l: vecs[l] for l in cell}
        cells.extend(pulling_triangulation(sub_vecs, config.sort_labels(cell)))
    return Triangulation(config, _cells(config, cells))


def _affine_coordinates(vecs: dict, simplex: Sequence[str], label: str) -> list[Fraction]:
    cols = [vecs[l] for l in simplex]
    rows = [[c[i] for c in cols] for i in range(len(cols[0]))]
    return solve(rows, vecs[label])


def regularity_system(config: PointConfiguration, tri: Subdivision) -> LinearSystem:
    """Heights making every cell a lower facet with nothing else on it.

    Each point off a cell must sit strictly above the affine interpolation
    of the cell's heights.  The system is homogeneous, so the strict rows
    are scaled to ``>= 1``.
    """
    vecs = _homogenised(config)
    pos = {l: i for i, l in enumerate(config.labels)}
    n = len(config.labels)
    sys = LinearSystem(n)
    seen = set()
    for cell in tri.cells:
        for lab in config.labels:
            if lab in cell:
                continue
            lam = _affine_coordinates(vecs, cell, lab)
            row = [Fraction(0)] * n
            row[pos[lab]] += 1
            for l, c in zip(cell, lam):
                row[pos[l]] -= c
            key = tuple(row)
            if key not in seen:
                seen.add(key)
                sys.nonstrict.append((row, -1))
    return sys


def regularity_witness(config: PointConfiguration, tri: Subdivision) -> Optional[list[Fraction]]:
    if not tri.is_triangulation:
        raise NotSimplicial("regularity witnesses are computed for triangulations")
    return lp_feasible(regularity_system(config, tri))


def is_witness(config: PointConfiguration, tri: Subdivision, weights: Sequence) -> bool:
    """Direct check that the weights induce exactly this triangulation."""
    return regular_subdivision(config, weights).cells == tri.cells


# ---------------------------------------------------------------------------
# the conditions used for the LT chamber

@dataclass
class ConditionReport:
    passed: bool
    missing: list = field(default_factory=list)
    violators: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)
    note: str = "pair index j for (A) ranges over 3..5"


LT_LABELS = tuple(f"P{i}" for i in range(12)) + ("S1", "S2")


def t0_simplices() -> list[tuple[str, ...]]:
    out = []
    for skip in range(6):
        out.append(tuple(f"P{i}" for i in range(6) if i != skip) + ("S1", "S2"))
    return out


def condition_a(cell) -> Optional[int]:
    """The pair index j (3..5) certifying condition (A), or None."""
    s = set(cell)
    if s & {"S1", "P6", "P7", "P8"}:
        return None
    return next((j for j in range(3, 6) if f"P{j}" not in s and f"P{6 + j}" not in s), None)


def condition_b(cell) -> Optional[int]:
    """The pair index j (0..2) certifying condition (B), or None."""
    s = set(cell)
    if s & {"S2", "P9", "P10", "P11"}:
        return None
    return next((j for j in range(0, 3) if f"P{j}" not in s and f"P{6 + j}" not in s), None)


def check_lt_conditions(tri: Subdivision) -> ConditionReport:
    if set(tri.config.labels) != set(LT_LABELS):
        raise LabelMismatch("expected labels P0..P11, S1, S2")
    cells = {frozenset(c) for c in tri.cells}
    t0 = [frozenset(s) for s in t0_simplices()]
    missing = [sorted(s, key=tri.config.labels.index) for s in t0 if s not in cells]
    violators = []
    witnesses = {}
    for cell in tri.cells:
        if frozenset(cell) in t0:
            continue
        a, b = condition_a(cell), condition_b(cell)
        if a is None and b is None:
            violators.append(list(cell))
        else:
            witnesses[" ".join(cell)] = f"A j={a}" if a is not None else f"B j={b}"
    return ConditionReport(not missing and not violators, missing, violators, witnesses)


def bb_star_triangulation(fan, config: PointConfiguration,
                          bundle_labels: Sequence[str] = ("S1", "S2")) -> Triangulation:
    """Cone every maximal cone of a simplicial fan over the bundle points."""
    d = fan.dim
    by_ray = {}
    for lab, p in zip(config.labels, config.points):
        if lab not in bundle_labels:
            by_ray[tuple(p[:d])] = lab
    cells = []
    for cone in fan.max_cones:
        if rank(fan.cone_rays(cone)) != len(cone) or len(cone) != d:
            raise NotSimplicial(f"cone {list(cone)} is not a full simplicial cone")
        cells.append([by_ray[fan.rays[i]] for i in cone] + list(bundle_labels))
    return Triangulation(config, _cells(config, cells))


def triangulation_ideals(tri: Subdivision):
    """Monomial ideals read off the simplices.

    For a simplex with x-labels ``I`` and u-labels ``J`` the first ideal
    gets the product of the x-variables outside ``I`` times the
    u-variables outside ``J``; the second ideal only collects simplices
    containing every u-label.
    """
    from .poly import MonomialIdeal, Ring

    c = tri.config
    names = [c.variable(l) for l in c.x_labels] + [c.variable(l) for l in c.u_labels]
    ring = Ring(tuple(names))
    gens_i, gens_j = [], []
    for cell in tri.cells:
        s = set(cell)
        expo = tuple(int(l not in s) for l in c.x_labels + c.u_labels)
        gens_i.append(expo)
        if set(c.u_labels) <= s:
            gens_j.append(expo)
    return MonomialIdeal(ring, gens_i), MonomialIdeal(ring, gens_j)


def interpolate_bounds(lo: Sequence, hi: Sequence, total) -> Optional[list[Fraction]]:
    lo = [as_rat(x) for x in lo]
    hi = [as_rat(x) for x in hi]
    total = as_rat(total)
    s_lo, s_hi = sum(lo), sum(hi)
    if not s_lo <= total <= s_hi:
        return None
    x = Fraction(0) if s_hi == s_lo else (total - s_lo) / (s_hi - s_lo)
    return [a + x * (b - a) for a, b in zip(lo, hi)]
