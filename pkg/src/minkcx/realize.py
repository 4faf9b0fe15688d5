"""Constructing and transforming realizations of complexes.

* :func:`realize_boxes` - axis boxes in ``R^D``, one coordinate per facet.
* :func:`check_line_avoids` / :func:`project_realization` /
  :func:`reduce_dimension` - drop a dimension by projecting along a line
  through the basepoint that misses every face sum.
* :func:`check_lines_joins` - side-of-basepoint test for joinable faces.
* :func:`discrete_realization` - finite point sets realizing the same complex.
"""

from __future__ import annotations

import enum
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .complex import SimplicialComplex, from_face_predicate, member, minimal_nonfaces
from .errors import BudgetExceeded, DomainError, StructuralError, VerificationError
from .exact import RatVector, sub, unit, vector, zeros
from .minkowski import minkowski_complex
from .polytope import (
    PolytopeFamily,
    enumeration_budget,
    line_interval,
    line_meets,
    make_box,
    project_point,
    project_polytope,
    projection_frame,
    sum_witness,
)


def realize_boxes(cx: SimplicialComplex) -> PolytopeFamily:
    """Boxes ``P_i = prod_j [0, t_ij]`` with ``t_ij = 1`` if ``i`` is in facet ``j``
    and ``|facet_j| + 1`` otherwise; basepoint ``(|facet_j| + 1)_j``."""
    if cx.is_void:
        raise DomainError("the void complex has no box realization")
    facets = cx.facets
    members = []
    for i in range(1, cx.n + 1):
        members.append(make_box([1 if i in F else len(F) + 1 for F in facets]))
    mu = [len(F) + 1 for F in facets]
    fam = PolytopeFamily(len(facets), members, mu)
    if minkowski_complex(fam) != cx:
        raise VerificationError("box realization does not reproduce the complex")
    return fam


@dataclass(frozen=True)
class LineProbe:
    basepoint: RatVector
    direction: RatVector

    def __post_init__(self):
        object.__setattr__(self, "basepoint", vector(self.basepoint))
        object.__setattr__(self, "direction", vector(self.direction))
        if len(self.basepoint) != len(self.direction):
            raise StructuralError("basepoint and direction differ in dimension")
        if not any(self.direction):
            raise StructuralError("line direction must be nonzero")


def _check_probe(fam: PolytopeFamily, probe: LineProbe) -> None:
    if len(probe.direction) != fam.dim:
        raise StructuralError(f"direction has length {len(probe.direction)}, family dimension is {fam.dim}")
    if probe.basepoint != fam.basepoint:
        raise StructuralError("probe must pass through the family basepoint")


def check_line_avoids(fam: PolytopeFamily, cx: SimplicialComplex, probe: LineProbe) -> bool:
    """Whether the line misses ``P_F`` for every facet ``F`` (hence every face)."""
    _check_probe(fam, probe)
    return not any(line_meets(fam, F, probe.basepoint, probe.direction) for F in cx.facets)


def project_realization(fam: PolytopeFamily, cx: SimplicialComplex, probe: LineProbe) -> PolytopeFamily:
    """Project ``fam`` along an avoiding line; the complex is re-verified."""
    if not check_line_avoids(fam, cx, probe):
        raise DomainError("the line meets some face sum; projection would change the complex")
    v = probe.direction
    frame = projection_frame(v)
    out = PolytopeFamily(
        fam.dim - 1,
        [project_polytope(P, v) for P in fam.members],
        project_point(fam.basepoint, frame),
    )
    if minkowski_complex(out) != cx:
        raise VerificationError("projection changed the complex")
    return out


def _primitive_int(v) -> Optional[tuple]:
    if not any(v):
        return None
    den = math.lcm(*(Fraction(a).denominator for a in v))
    ints = [int(Fraction(a) * den) for a in v]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    first = next(c for c in ints if c)
    if first < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def candidate_directions(fam: PolytopeFamily, cx: SimplicialComplex, budget: int, rng: random.Random):
    """Coordinate axes, then generator differences (at most ``budget``), then
    ``budget`` random integer directions; duplicates up to sign are skipped."""
    d = fam.dim
    seen = set()

    def fresh(v):
        p = _primitive_int(v)
        if p is None or p in seen:
            return None
        seen.add(p)
        return vector(p)

    for k in range(d):
        v = fresh(unit(d, k))
        if v is not None:
            yield v
    in_facets = sorted({i for F in cx.facets for i in F})
    gens = sorted({g for i in in_facets for g in fam.members[i - 1].generators})
    emitted = 0
    for p, q in itertools.combinations(gens, 2):
        if emitted >= budget:
            break
        v = fresh(sub(q, p))
        if v is not None:
            emitted += 1
            yield v
    for _ in range(budget):
        v = fresh([rng.randint(-3, 3) for _ in range(d)])
        if v is not None:
            yield v


def reduce_dimension(
    fam: PolytopeFamily,
    cx: SimplicialComplex,
    budget: int = 32,
    seed: int = 0,
    trace: Optional[list] = None,
) -> PolytopeFamily:
    """Project along avoiding lines until none is found among the candidates.

    Best effort: stopping early says nothing about the convex threshold
    dimension.  ``trace`` (if given) receives ``(dim_before, direction)`` per
    step.
    """
    if minkowski_complex(fam) != cx:
        raise DomainError("family does not realize the given complex")
    rng = random.Random(seed)
    while fam.dim > 0:
        for v in candidate_directions(fam, cx, budget, rng):
            probe = LineProbe(fam.basepoint, v)
            if check_line_avoids(fam, cx, probe):
                if trace is not None:
                    trace.append((fam.dim, v))
                fam = project_realization(fam, cx, probe)
                break
        else:
            break
    return fam


class Verdict(enum.Enum):
    SAME_SIDE = "SameSide"
    VIOLATION = "Violation"
    NOT_APPLICABLE = "NotApplicable"


def check_lines_joins(fam: PolytopeFamily, cx: SimplicialComplex, sigma, tau, probe: LineProbe) -> Verdict:
    """If ``sigma | tau`` is a face, ``P_sigma`` and ``P_tau`` must meet the line
    on the same side of the basepoint."""
    _check_probe(fam, probe)
    for s in (sigma, tau):
        if not member(cx, s):
            raise DomainError(f"{sorted(s)} is not a face")
    if not member(cx, set(sigma) | set(tau)):
        return Verdict.NOT_APPLICABLE
    a = line_interval(fam, sigma, probe.basepoint, probe.direction)
    b = line_interval(fam, tau, probe.basepoint, probe.direction)
    if a is None or b is None:
        return Verdict.NOT_APPLICABLE
    if (a[1] < 0 and b[1] < 0) or (a[0] > 0 and b[0] > 0):
        return Verdict.SAME_SIDE
    return Verdict.VIOLATION


@dataclass(frozen=True)
class DiscreteFamily:
    """Finite point sets ``X_1..X_n`` in ``Q^dim``, each containing 0."""

    dim: int
    sets: tuple
    basepoint: RatVector

    def __post_init__(self):
        origin = zeros(self.dim)
        norm = []
        for i, X in enumerate(self.sets, start=1):
            pts = tuple(sorted({vector(p) for p in X}))
            if any(len(p) != self.dim for p in pts):
                raise StructuralError(f"X_{i} has a point of the wrong dimension")
            if origin not in pts:
                raise StructuralError(f"X_{i} does not contain the origin")
            norm.append(pts)
        object.__setattr__(self, "sets", tuple(norm))
        mu = vector(self.basepoint)
        if len(mu) != self.dim:
            raise StructuralError("basepoint dimension mismatch")
        object.__setattr__(self, "basepoint", mu)

    @property
    def n(self) -> int:
        return len(self.sets)


def minkowski_complex_discrete(dfam: DiscreteFamily, budget: Optional[int] = None) -> SimplicialComplex:
    """Faces are the ``sigma`` whose sumset misses the basepoint (exhaustive)."""
    limit = enumeration_budget(budget)
    size = math.prod(len(X) for X in dfam.sets)
    if size > limit:
        raise BudgetExceeded(f"{size} point combinations exceed budget {limit}")
    mu = dfam.basepoint

    def is_face(s):
        sums = {zeros(dfam.dim)}
        for i in sorted(s):
            sums = {tuple(a + b for a, b in zip(p, q)) for p in sums for q in dfam.sets[i - 1]}
        return mu not in sums

    return from_face_predicate(dfam.n, is_face)


def discrete_realization(fam: PolytopeFamily, cx: SimplicialComplex) -> DiscreteFamily:
    """Keep only 0 and one decomposition point per minimal nonface."""
    if minkowski_complex(fam) != cx:
        raise DomainError("family does not realize the given complex")
    sets = [{zeros(fam.dim)} for _ in range(fam.n)]
    if not cx.is_void:
        for tau in minimal_nonfaces(cx):
            parts = sum_witness(fam, tau, fam.basepoint)
            if parts is None:
                raise VerificationError(f"no decomposition of the basepoint over nonface {sorted(tau)}")
            for i, y in parts.items():
                sets[i - 1].add(y)
    out = DiscreteFamily(fam.dim, tuple(sets), fam.basepoint)
    if minkowski_complex_discrete(out) != cx:
        raise VerificationError("discrete realization does not reproduce the complex")
    return out
