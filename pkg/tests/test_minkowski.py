import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minkcx.complex import from_facets, reduced_euler
from minkcx.errors import DomainError, StructuralError
from minkcx.generate import (
    random_lattice_family,
    random_nested_pair,
    random_rational_point,
)
from minkcx.minkowski import (
    discrete_mixed_volume,
    discrete_volume,
    indicator_F,
    minkowski_complex,
    verify_theorem1,
)
from minkcx.oracle import oracle_cme, oracle_minkowski_complex_faces
from minkcx.polytope import PolytopeFamily, make_polytope, segment, sum_bounding_box


def unit_segments(mu=(0, 0)):
    return PolytopeFamily(
        2, [make_polytope(2, [(0, 0), (1, 0)]), make_polytope(2, [(0, 0), (0, 1)])], mu
    )


def test_minkowski_complex_examples():
    fam = PolytopeFamily(1, [segment(1), segment(2)], (2,))
    assert minkowski_complex(fam) == from_facets(2, [[1]])
    assert minkowski_complex(fam.with_basepoint((0,))).is_void
    assert minkowski_complex(unit_segments((1, 1))) == from_facets(2, [[1], [2]])


def test_minkowski_complex_dimension_mismatch():
    with pytest.raises(StructuralError):
        PolytopeFamily(1, [segment(1)], (1, 1))


def test_discrete_volume():
    assert discrete_volume(PolytopeFamily(1, [segment(1)]), {1}) == 2
    assert discrete_volume(PolytopeFamily(1, [segment(1)]), set()) == 1
    assert discrete_volume(unit_segments(), {1, 2}) == 4
    with pytest.raises(DomainError):
        discrete_volume(PolytopeFamily(1, [segment("1/2")]), {1})


def test_cme_examples():
    assert discrete_mixed_volume(PolytopeFamily(1, [segment(1)])) == 1
    assert discrete_mixed_volume(unit_segments()) == 1
    assert discrete_mixed_volume(PolytopeFamily(1, [segment(1), segment(1)])) == 0


def test_indicator_F():
    fam = unit_segments()
    assert indicator_F(fam, (1, 1)) == 1
    assert indicator_F(fam, (0, 0)) == 0
    assert indicator_F(fam, (5, 5)) == 0


def test_cme_euler_worked_examples():
    r = verify_theorem1(unit_segments())
    assert (r.cme, r.euler_sum, r.identity_holds) == (1, 1, True)
    assert [chi for _, chi in r.per_point] == [0, 0, 0, 1]

    r = verify_theorem1(PolytopeFamily(1, [segment(1)]))
    assert (r.cme, r.sign, r.euler_sum) == (1, -1, -1)
    assert [chi for _, chi in r.per_point] == [0, -1]
    assert r.identity_holds and r.pointwise_holds

    r = verify_theorem1(PolytopeFamily(1, [make_polytope(1, [(0,)])]))
    assert (r.cme, r.euler_sum, r.identity_holds) == (0, 0, True)


def test_unit_segment_complex_at_1_1_is_s0():
    cx = minkowski_complex(unit_segments((1, 1)))
    assert reduced_euler(cx) == 1
    assert minkowski_complex(unit_segments((1, 0))) == from_facets(2, [[2]])


@pytest.mark.parametrize("seed", range(25))
def test_cme_matches_hull_oracle(seed):
    fam = random_lattice_family(random.Random(seed))
    assert discrete_mixed_volume(fam) == oracle_cme(list(fam.members))


@pytest.mark.parametrize("seed", range(25))
def test_complex_matches_hull_oracle(seed):
    rng = random.Random(100 + seed)
    fam = random_lattice_family(rng)
    box = sum_bounding_box(fam, range(1, fam.n + 1))
    mu = random_rational_point(rng, box.lower, box.upper)
    faces = set(minkowski_complex(fam.with_basepoint(mu)).faces())
    assert faces == oracle_minkowski_complex_faces(list(fam.members), mu)


@given(st.randoms(use_true_random=False), st.data())
def test_pointwise_identity(rnd, data):
    fam = random_lattice_family(rnd)
    box = sum_bounding_box(fam, range(1, fam.n + 1))
    mu = random_rational_point(rnd, [a - 1 for a in box.lower], [b + 1 for b in box.upper], denom=3)
    cx = minkowski_complex(fam.with_basepoint(mu))
    assert (-1) ** fam.n * indicator_F(fam, mu) == reduced_euler(cx)


@given(st.randoms(use_true_random=False))
def test_cme_euler_random(rnd):
    rep = verify_theorem1(random_lattice_family(rnd))
    assert rep.identity_holds and rep.pointwise_holds


@given(st.randoms(use_true_random=False))
def test_cme_monotone(rnd):
    Q, P = random_nested_pair(rnd)
    assert 0 <= discrete_mixed_volume(Q) <= discrete_mixed_volume(P)
