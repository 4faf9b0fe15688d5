import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minkcx.errors import BudgetExceeded, OriginContainmentError, StructuralError
from minkcx.generate import FamilyConfig, random_lattice_family, random_rational_point
from minkcx.oracle import oracle_box_membership, oracle_sum_contains
from minkcx.polytope import (
    IntBox,
    PolytopeFamily,
    contains,
    lattice_points,
    make_box,
    make_polytope,
    project_polytope,
    segment,
    sum_bounding_box,
    sum_contains,
)

F = Fraction


def e_segments():
    return PolytopeFamily(2, [make_polytope(2, [(0, 0), (1, 0)]), make_polytope(2, [(0, 0), (0, 1)])])


def test_make_polytope_basic():
    assert segment(1).vertices == ((0,), (1,))
    tri = make_polytope(2, [(0, 0), (1, 0), (0, 1)])
    assert len(tri.vertices) == 3
    assert make_polytope(1, [(0,), (1,), (1,)]).vertices == ((0,), (1,))


def test_origin_flag():
    with pytest.raises(OriginContainmentError):
        make_polytope(1, [(1,), (2,)], check_origin=True)
    with pytest.raises(OriginContainmentError):
        PolytopeFamily(1, [make_polytope(1, [(1,), (2,)])])
    PolytopeFamily(1, [make_polytope(1, [(1,), (2,)])], check_origin=False)


def test_dimension_mismatch():
    with pytest.raises(StructuralError):
        make_polytope(2, [(0, 0), (1,)])
    with pytest.raises(StructuralError):
        PolytopeFamily(2, [segment(1)])
    with pytest.raises(StructuralError):
        contains(segment(1), (0, 0))


def test_contains():
    assert contains(segment(1), ("1/2",))
    assert not contains(segment(1), ("3/2",))
    tri = make_polytope(2, [(0, 0), (2, 0), (0, 2)])
    assert contains(tri, (1, 1))
    assert not contains(tri, (F(3, 2), 1))


def test_sum_contains_examples():
    fam = PolytopeFamily(1, [segment(1), segment(2)])
    assert sum_contains(fam, {1, 2}, (3,))
    assert not sum_contains(fam, {1, 2}, ("7/2",))
    assert sum_contains(fam, set(), (0,))
    assert not sum_contains(fam, set(), (1,))
    assert sum_contains(e_segments(), {1, 2}, (1, 1))
    with pytest.raises(StructuralError):
        sum_contains(fam, {3}, (0,))


def test_bounding_box():
    fam = PolytopeFamily(1, [segment(1), segment(2)])
    assert sum_bounding_box(fam, {1, 2}) == IntBox((0,), (3,))
    assert sum_bounding_box(fam, ()) == IntBox((0,), (0,))
    assert sum_bounding_box(e_segments(), {1, 2}) == IntBox((0, 0), (1, 1))


def test_lattice_points():
    assert len(lattice_points(PolytopeFamily(1, [segment(1)]), {1})) == 2
    sq = make_polytope(2, [(0, 0), (1, 0), (0, 1), (1, 1)])
    assert len(lattice_points(PolytopeFamily(2, [sq]), {1})) == 4
    pts = lattice_points(e_segments(), {1, 2})
    assert pts == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_lattice_budget(monkeypatch):
    fam = PolytopeFamily(2, [make_box([10, 10])])
    with pytest.raises(BudgetExceeded, match="121 cells"):
        lattice_points(fam, {1}, budget=100)
    monkeypatch.setenv("MINKCX_BUDGET", "50")
    with pytest.raises(BudgetExceeded):
        lattice_points(fam, {1})


def test_projection_examples():
    sq = make_polytope(2, [(0, 0), (1, 0), (0, 1), (1, 1)])
    assert project_polytope(sq, (0, 1)).vertices == ((0,), (1,))
    diag = make_polytope(2, [(0, 0), (1, 1)])
    # frame of (1,-1)^perp is the primitive vector (1,1); (1,1) has coefficient 1
    assert project_polytope(diag, (1, -1)).vertices == ((0,), (1,))
    flat = make_polytope(3, [(0, 0, 0), (2, 1, 0), (1, 3, 0)])
    assert project_polytope(flat, (0, 0, 1)).vertices == ((0, 0), (1, 3), (2, 1))
    with pytest.raises(StructuralError):
        project_polytope(sq, (0, 0))


def test_box_is_product():
    b = make_box([1, 3])
    assert set(b.vertices) == {(0, 0), (1, 0), (0, 3), (1, 3)}
    assert contains(b, (1, 3)) and not contains(b, (1, "7/2"))


@pytest.mark.parametrize("seed", range(40))
def test_monotone_in_sigma(seed):
    rng = random.Random(seed)
    fam = random_lattice_family(rng)
    n = fam.n
    sigma = {i for i in range(1, n + 1) if rng.random() < 0.5}
    tau = sigma | {rng.randint(1, n)}
    box = sum_bounding_box(fam, range(1, n + 1))
    for _ in range(10):
        x = random_rational_point(rng, box.lower, box.upper)
        if sum_contains(fam, sigma, x):
            assert sum_contains(fam, tau, x)


def _random_boxes(rng, d, n):
    return [tuple(rng.randint(0, 3) for _ in range(d)) for _ in range(n)]


def test_box_oracle_equivalence_1000_queries():
    rng = random.Random(7)
    checked = 0
    while checked < 1000:
        d, n = rng.randint(1, 2), rng.randint(1, 3)
        ups = _random_boxes(rng, d, n)
        fam = PolytopeFamily(d, [make_box(u) for u in ups])
        for _ in range(25):
            sigma = [i for i in range(1, n + 1) if rng.random() < 0.6]
            x = random_rational_point(rng, [-1] * d, [7] * d)
            assert sum_contains(fam, sigma, x) == oracle_box_membership(ups, sigma, x)
            checked += 1


@pytest.mark.parametrize("seed", range(30))
def test_hull_oracle_equivalence(seed):
    rng = random.Random(500 + seed)
    fam = random_lattice_family(rng)
    full = range(1, fam.n + 1)
    box = sum_bounding_box(fam, full)
    for _ in range(10):
        sigma = [i for i in full if rng.random() < 0.6]
        x = random_rational_point(rng, [a - 1 for a in box.lower], [b + 1 for b in box.upper])
        assert sum_contains(fam, sigma, x) == oracle_sum_contains([fam.members[i - 1] for i in sigma], x)


@given(st.randoms(use_true_random=False))
def test_lattice_count_invariant_under_permutation(rnd):
    fam = random_lattice_family(rnd)
    full = list(range(1, fam.n + 1))
    base = len(lattice_points(fam, full))
    shuffled = []
    for P in fam.members:
        verts = list(P.vertices)
        rnd.shuffle(verts)
        shuffled.append(make_polytope(fam.dim, verts))
    rnd.shuffle(shuffled)
    assert len(lattice_points(PolytopeFamily(fam.dim, shuffled), full)) == base


@given(st.randoms(use_true_random=False))
def test_generators_are_contained(rnd):
    fam = random_lattice_family(rnd, FamilyConfig(d_max=3))
    for P in fam.members:
        for v in P.vertices:
            assert contains(P, v)
