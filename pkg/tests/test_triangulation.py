from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tmk.fixtures import load
from tmk.triangulation import (LabelMismatch, NotSimplicial, PointConfiguration, Triangulation,
                               check_lt_conditions, condition_a, condition_b, covers_hull,
                               interpolate_bounds, is_witness, normalized_volume,
                               refine_to_triangulation, regular_subdivision,
                               regularity_witness, t0_simplices, triangulation_ideals)

SQUARE = PointConfiguration(("a", "b", "c", "d", "o"),
                            ((0, 0), (1, 0), (0, 1), (1, 1), (Fraction(1, 2), Fraction(1, 2))))


@pytest.fixture(scope="module")
def lt_config():
    return PointConfiguration.from_json(load("lt_configuration")["configuration"])


@pytest.fixture(scope="module")
def lt_triangulation(lt_config):
    cf = load("lt_configuration")
    sub = regular_subdivision(lt_config, [cf["weights"][l] for l in lt_config.labels])
    return refine_to_triangulation(lt_config, sub)


def test_square_subdivisions():
    flat = regular_subdivision(SQUARE, [0, 0, 0, 0, 0])
    assert flat.cells == (("a", "b", "c", "d", "o"),)
    assert not flat.is_triangulation
    lifted = regular_subdivision(SQUARE, [0, 1, 1, 0, 5])
    assert lifted.cells == (("a", "b", "d"), ("a", "c", "d"))
    assert lifted.is_triangulation
    coned = regular_subdivision(SQUARE, [1, 1, 1, 1, 0])
    assert len(coned.cells) == 4 and all("o" in c for c in coned.cells)


def test_refine_and_witness():
    sub = regular_subdivision(SQUARE, [0, 0, 0, 0, 1])
    tri = refine_to_triangulation(SQUARE, sub)
    assert tri.is_triangulation and covers_hull(tri)
    w = regularity_witness(SQUARE, tri)
    assert w is not None and is_witness(SQUARE, tri, w)
    assert regular_subdivision(SQUARE, w).cells == tri.cells
    with pytest.raises(NotSimplicial):
        regularity_witness(SQUARE, sub)


def test_non_regular_triangulation_has_no_witness():
    # the mother of all examples: two nested triangles
    pts = ((4, 0), (0, 4), (0, 0), (2, 1), (1, 2), (1, 1))
    cfg = PointConfiguration(tuple("ABCdef"), pts)
    cells = [("A", "B", "e"), ("A", "d", "e"), ("B", "C", "f"), ("B", "e", "f"),
             ("C", "A", "d"), ("C", "d", "f"), ("d", "e", "f")]
    tri = Triangulation(cfg, tuple(cfg.sort_labels(c) for c in cells))
    assert covers_hull(tri)
    assert regularity_witness(cfg, tri) is None


@given(st.lists(st.integers(0, 6), min_size=5, max_size=5))
@settings(max_examples=50, deadline=None)
def test_random_weights_give_regular_triangulations(weights):
    sub = regular_subdivision(SQUARE, weights)
    assert covers_hull(sub)
    tri = refine_to_triangulation(SQUARE, sub)
    assert covers_hull(tri)
    w = regularity_witness(SQUARE, tri)
    assert w is not None and regular_subdivision(SQUARE, w).cells == tri.cells


def test_normalized_volume():
    assert normalized_volume(SQUARE, ("a", "b", "c", "d")) == 2
    assert normalized_volume(SQUARE, ("a", "b", "c")) == 1


def test_configuration_json(lt_config):
    assert PointConfiguration.from_json(lt_config.to_json()) == lt_config
    assert lt_config.variable("P3") == "x3" and lt_config.variable("S2") == "u2"
    assert lt_config.affine_dim == 6


def test_lt_conditions(lt_triangulation):
    rep = check_lt_conditions(lt_triangulation)
    assert rep.passed and not rep.missing and not rep.violators
    assert len(lt_triangulation.cells) == 18


def test_corrupted_triangulation_names_violator(lt_config, lt_triangulation):
    bad = ("P0", "P1", "P2", "P3", "P6", "P9", "S1")
    dropped = t0_simplices()[0]
    cells = tuple(c for c in lt_triangulation.cells if c != dropped) + (bad,)
    rep = check_lt_conditions(Triangulation(lt_config, cells))
    assert not rep.passed
    assert rep.violators == [list(bad)]
    assert rep.missing == [list(dropped)]


def test_conditions():
    assert condition_a(("P0", "P1", "P2", "P3", "P4", "P10", "S2")) == 5
    assert condition_a(("P0", "P1", "P2", "P3", "P4", "P10", "S1")) is None
    assert condition_b(("P1", "P2", "P3", "P4", "P5", "P8", "S1")) == 0
    assert condition_b(("P1", "P2", "P3", "P4", "P5", "P9", "S1")) is None
    with pytest.raises(LabelMismatch):
        check_lt_conditions(Triangulation(SQUARE, (("a", "b", "c"),)))


def test_triangulation_ideals(lt_triangulation):
    i, j = triangulation_ideals(lt_triangulation)
    assert len(i) == 18 and len(j) == 6
    assert all(i.contains(g) for g in j.gens)
    # the T0 simplex without P_k contributes x_k * x6 * ... * x11
    tail = " * ".join(f"x{k}" for k in range(6, 12))
    assert sorted(j.strings()) == sorted(f"x{k} * {tail}" for k in range(6))
    assert i.ring.names[-2:] == ("u1", "u2")


def test_interpolate_bounds():
    assert interpolate_bounds([0, 0], [2, 4], 3) == [1, 2]
    assert interpolate_bounds([0, 0], [1, 1], 5) is None
