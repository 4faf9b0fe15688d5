"""Minkowski complexes, discrete volumes and the discrete mixed volume."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .complex import SimplicialComplex, from_face_predicate, reduced_euler
from .errors import DomainError, StructuralError
from .exact import vector
from .polytope import PolytopeFamily, lattice_points, sum_bounding_box, sum_contains


def minkowski_complex(fam: PolytopeFamily) -> SimplicialComplex:
    """All ``sigma`` with ``mu`` outside ``P_sigma``; void exactly when ``mu = 0``."""
    mu = fam.basepoint
    return from_face_predicate(fam.n, lambda s: not sum_contains(fam, s, mu))


def _require_lattice(fam: PolytopeFamily) -> None:
    if not fam.is_lattice:
        raise DomainError("discrete volumes need lattice polytopes (integer generators)")


def discrete_volume(fam: PolytopeFamily, sigma, budget: Optional[int] = None) -> int:
    """Number of integer points of ``P_sigma``."""
    _require_lattice(fam)
    return len(lattice_points(fam, sigma, budget))


def _subsets(n: int):
    for k in range(n + 1):
        yield from itertools.combinations(range(1, n + 1), k)


def discrete_mixed_volume(fam: PolytopeFamily, budget: Optional[int] = None) -> int:
    """``sum_I (-1)^(n-|I|) E(P_I)`` over all ``I`` in ``[n]``."""
    if fam.n < 1:
        raise DomainError("the discrete mixed volume needs at least one polytope")
    _require_lattice(fam)
    n = fam.n
    return sum((-1) ** (n - len(I)) * discrete_volume(fam, I, budget) for I in _subsets(n))


def indicator_F(fam: PolytopeFamily, x) -> int:
    """``sum_I (-1)^(n-|I|) [x in P_I]``."""
    x = vector(x)
    if len(x) != fam.dim:
        raise StructuralError("point dimension mismatch")
    n = fam.n
    return sum((-1) ** (n - len(I)) for I in _subsets(n) if sum_contains(fam, I, x))


@dataclass(frozen=True)
class Thm1Report:
    cme: int
    sign: int
    per_point: tuple  # ((mu, reduced Euler characteristic), ...)
    euler_sum: int
    identity_holds: bool
    pointwise_holds: bool = True
    outside_checked: int = 0

    def as_dict(self) -> dict:
        from .io import format_vector

        return {
            "cme": self.cme,
            "sign": self.sign,
            "euler_sum": self.euler_sum,
            "identity_holds": self.identity_holds,
            "pointwise_holds": self.pointwise_holds,
            "outside_checked": self.outside_checked,
            "per_point": [{"mu": format_vector(mu), "reduced_euler": e} for mu, e in self.per_point],
        }


def verify_theorem1(fam: PolytopeFamily, budget: Optional[int] = None, outside_sample: int = 16) -> Thm1Report:
    """Check ``(-1)^n CME = sum over lattice points mu of P_[n] of chi~(Delta(P; mu))``.

    Both sides are computed independently.  At every lattice point the
    pointwise relation ``(-1)^n F(mu) = chi~`` is checked as well, and a few
    lattice points of the bounding box outside ``P_[n]`` are confirmed to
    contribute zero.
    """
    if fam.n < 1:
        raise DomainError("need at least one polytope")
    _require_lattice(fam)
    n = fam.n
    full = tuple(range(1, n + 1))
    sign = (-1) ** n
    cme = discrete_mixed_volume(fam, budget)

    per_point = []
    pointwise = True
    for mu in lattice_points(fam, full, budget):
        chi = reduced_euler(minkowski_complex(fam.with_basepoint(mu)))
        per_point.append((mu, chi))
        if sign * indicator_F(fam, mu) != chi:
            pointwise = False

    outside = 0
    for mu in sum_bounding_box(fam, full).points():
        if outside >= outside_sample:
            break
        if sum_contains(fam, full, mu):
            continue
        outside += 1
        chi = reduced_euler(minkowski_complex(fam.with_basepoint(mu)))
        if chi != 0 or indicator_F(fam, mu) != 0:
            pointwise = False

    euler_sum = sum(chi for _, chi in per_point)
    return Thm1Report(
        cme=cme,
        sign=sign,
        per_point=tuple(per_point),
        euler_sum=euler_sum,
        identity_holds=sign * cme == euler_sum,
        pointwise_holds=pointwise,
        outside_checked=outside,
    )
