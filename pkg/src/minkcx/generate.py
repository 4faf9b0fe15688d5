"""Seeded random instances and named example complexes."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .complex import SimplicialComplex, from_facets, join_all
from .polytope import PolytopeFamily, make_polytope


@dataclass(frozen=True)
class FamilyConfig:
    n_max: int = 3
    d_max: int = 2
    coord_max: int = 3
    extra_vertices_max: int = 3


@dataclass(frozen=True)
class ComplexConfig:
    n_min: int = 1
    n_max: int = 7
    facets_max: int = 5


def random_lattice_polytope(rng: random.Random, d: int, cfg: FamilyConfig):
    pts = [(0,) * d]
    for _ in range(rng.randint(0, cfg.extra_vertices_max)):
        pts.append(tuple(rng.randint(0, cfg.coord_max) for _ in range(d)))
    return make_polytope(d, pts)


def random_lattice_family(rng: random.Random, cfg: FamilyConfig = FamilyConfig()) -> PolytopeFamily:
    """Lattice polytopes in ``{0..coord_max}^d``, each containing the origin."""
    n = rng.randint(1, cfg.n_max)
    d = rng.randint(1, cfg.d_max)
    return PolytopeFamily(d, [random_lattice_polytope(rng, d, cfg) for _ in range(n)])


def random_nested_pair(rng: random.Random, cfg: FamilyConfig = FamilyConfig()) -> tuple:
    """``(Q, P)`` with ``Q_i`` the hull of 0 and a random subset of ``P_i``'s vertices."""
    P = random_lattice_family(rng, cfg)
    qs = []
    for Pi in P.members:
        gens = [v for v in Pi.vertices if any(v)]
        keep = [v for v in gens if rng.random() < 0.5]
        qs.append(make_polytope(P.dim, [(0,) * P.dim] + keep))
    return PolytopeFamily(P.dim, qs), P


def random_rational_point(rng: random.Random, lower, upper, denom: int = 4) -> tuple:
    return tuple(Fraction(rng.randint(lo * denom, hi * denom), denom) for lo, hi in zip(lower, upper))


def random_complex(rng: random.Random, cfg: ComplexConfig = ComplexConfig()) -> SimplicialComplex:
    """Non-void complex generated by a few random facets (possibly the empty face)."""
    n = rng.randint(cfg.n_min, cfg.n_max)
    facets = []
    for _ in range(rng.randint(1, cfg.facets_max)):
        facets.append([v for v in range(1, n + 1) if rng.random() < 0.5])
    return from_facets(n, facets)


def random_threshold_instance(rng: random.Random, n_max: int = 7, denom: int = 3) -> tuple:
    """``(weights, mu)`` with ``0 <= w_i <= mu``, rational with small denominators."""
    n = rng.randint(1, n_max)
    mu = Fraction(rng.randint(1, 6 * denom), denom)
    weights = [Fraction(rng.randint(0, mu.numerator * denom // mu.denominator), denom) for _ in range(n)]
    return [min(w, mu) for w in weights], mu


def all_complexes(n: int) -> list:
    """Every non-void complex on ``1..n`` (one per antichain of subsets)."""
    subsets = [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(1, n + 1), k)]
    out = []

    def extend(start, chosen):
        if chosen:
            out.append(from_facets(n, chosen))
        for j in range(start, len(subsets)):
            s = subsets[j]
            if all(not (s <= t or t <= s) for t in chosen):
                extend(j + 1, chosen + [s])

    extend(0, [])
    return out


# -- named complexes

def two_k2() -> SimplicialComplex:
    return from_facets(4, [[1, 2], [3, 4]])


def p4() -> SimplicialComplex:
    return from_facets(4, [[1, 2], [2, 3], [3, 4]])


def c4() -> SimplicialComplex:
    return from_facets(4, [[1, 2], [2, 3], [3, 4], [1, 4]])


def path3() -> SimplicialComplex:
    return from_facets(3, [[1, 2], [2, 3]])


def forbidden_graphs() -> dict:
    """The three graphs whose induced copies rule out thresholdness."""
    return {"2K2": two_k2(), "P4": p4(), "C4": c4()}


def c4_power(k: int) -> SimplicialComplex:
    return join_all([c4()] * k)
