"""V-represented polytopes, implicit Minkowski sums and lattice point sweeps.

A :class:`LatticePolytope` is stored as a Minkowski sum of one or more
vertex hulls ("parts").  Ordinary polytopes have a single part; axis boxes
``[0, t_1] x ... x [0, t_D]`` are stored as ``D`` segments so that a box in
``R^D`` costs ``D`` LP columns instead of ``2^D``.  Sums ``P_sigma`` of family
members are never expanded: membership is decided by one joint LP.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import BudgetExceeded, OriginContainmentError, StructuralError
from .exact import (
    EQ,
    LinearProgram,
    RatVector,
    dot,
    is_integral,
    lp_feasible,
    lp_solve,
    scale,
    sub,
    unit,
    vector,
    zeros,
)

DEFAULT_BUDGET = 10**6


def enumeration_budget(budget: Optional[int] = None) -> int:
    """Explicit budget, else ``$MINKCX_BUDGET``, else 10^6 cells."""
    if budget is not None:
        return budget
    env = os.environ.get("MINKCX_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _dedup(points: Iterable[RatVector]) -> tuple:
    return tuple(sorted(set(points)))


@dataclass(frozen=True, eq=True)
class LatticePolytope:
    dim: int
    parts: tuple  # tuple of tuples of RatVector
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.parts or any(not p for p in self.parts):
            raise StructuralError("a polytope needs at least one generator")
        for part in self.parts:
            for v in part:
                if len(v) != self.dim:
                    raise StructuralError(
                        f"vertex {v} has length {len(v)}, ambient dimension is {self.dim}"
                    )
        object.__setattr__(self, "_hash", hash((self.dim, self.parts)))

    def __hash__(self):
        return self._hash

    @property
    def generators(self) -> tuple:
        """All generators of all parts (flattened)."""
        return tuple(v for part in self.parts for v in part)

    @property
    def vertices(self) -> tuple:
        """Generator list of the polytope as a single hull.

        For multi-part polytopes this expands the sum of parts, which is
        exponential in the number of parts.
        """
        if len(self.parts) == 1:
            return self.parts[0]
        pts = [zeros(self.dim)]
        for part in self.parts:
            pts = _dedup(tuple(a + b for a, b in zip(p, q)) for p in pts for q in part)
        return pts

    @property
    def is_lattice(self) -> bool:
        return all(is_integral(v) for v in self.generators)

    def coord_range(self, k: int) -> tuple:
        """Exact ``(min, max)`` of coordinate ``k`` over the polytope."""
        lo = sum((min(v[k] for v in part) for part in self.parts), Fraction(0))
        hi = sum((max(v[k] for v in part) for part in self.parts), Fraction(0))
        return lo, hi


def make_polytope(dim: int, vertices: Sequence, check_origin: bool = False) -> LatticePolytope:
    """Convex hull of ``vertices`` in ``Q^dim`` (duplicates dropped)."""
    if not vertices:
        raise StructuralError("empty vertex list")
    P = LatticePolytope(dim, (_dedup(vector(v) for v in vertices),))
    if check_origin and not contains(P, zeros(dim)):
        raise OriginContainmentError(f"origin is not in conv{list(P.parts[0])}")
    return P


def make_sum(dim: int, parts: Sequence[Sequence]) -> LatticePolytope:
    """Minkowski sum of the hulls of ``parts``."""
    return LatticePolytope(dim, tuple(_dedup(vector(v) for v in part) for part in parts))


def make_box(upper: Sequence) -> LatticePolytope:
    """The axis box ``prod_j [0, upper_j]`` as a sum of coordinate segments."""
    d = len(upper)
    ups = vector(upper)
    parts = []
    for j, t in enumerate(ups):
        parts.append(_dedup([zeros(d), scale(t, unit(d, j))]))
    if not parts:
        parts.append(((),))
    return LatticePolytope(d, tuple(parts))


def segment(length) -> LatticePolytope:
    """``[0, length]`` in ``R^1``."""
    return make_polytope(1, [(0,), (length,)])


@dataclass(frozen=True)
class PolytopeFamily:
    """Ordered polytopes ``P_1..P_n`` in a common ``Q^dim`` plus a basepoint."""

    dim: int
    members: tuple
    basepoint: Optional[RatVector] = None
    check_origin: bool = True

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        mu = zeros(self.dim) if self.basepoint is None else vector(self.basepoint)
        if len(mu) != self.dim:
            raise StructuralError(f"basepoint has length {len(mu)}, ambient dimension is {self.dim}")
        object.__setattr__(self, "basepoint", mu)
        for i, P in enumerate(self.members, start=1):
            if P.dim != self.dim:
                raise StructuralError(f"P_{i} lives in dimension {P.dim}, family in {self.dim}")
            if self.check_origin and not _contains_origin(P):
                raise OriginContainmentError(f"P_{i} does not contain the origin")

    @property
    def n(self) -> int:
        return len(self.members)

    @property
    def is_lattice(self) -> bool:
        return all(P.is_lattice for P in self.members)

    def with_basepoint(self, mu) -> "PolytopeFamily":
        return replace(self, basepoint=vector(mu))


@dataclass(frozen=True)
class IntBox:
    lower: tuple
    upper: tuple

    def __post_init__(self):
        if any(lo > hi for lo, hi in zip(self.lower, self.upper)):
            raise StructuralError("box lower bound exceeds upper bound")

    @property
    def cells(self) -> int:
        return math.prod(hi - lo + 1 for lo, hi in zip(self.lower, self.upper))

    def points(self):
        """Integer points in lexicographic order."""
        ranges = [range(lo, hi + 1) for lo, hi in zip(self.lower, self.upper)]
        for p in itertools.product(*ranges):
            yield vector(p)


# --------------------------------------------------------------------------
# membership


def _membership_lp(polys: Sequence[LatticePolytope], x: RatVector, extra_col=None):
    """LP whose feasible set encodes ``x in sum(polys)``.

    Two-generator parts become one column ``s in [0, 1]`` on the segment;
    larger parts get convex-combination weights.  With ``extra_col`` (a
    direction ``v``) a free column ``t`` is appended and the target becomes
    ``x + t v``.
    """
    d = len(x)
    cols = []  # per column: contribution vector
    lower, upper = [], []
    convex_rows = []
    target = list(x)
    for P in polys:
        for part in P.parts:
            if len(part) == 1:
                target = [a - b for a, b in zip(target, part[0])]
            elif len(part) == 2:
                a, b = part
                target = [t - ai for t, ai in zip(target, a)]
                cols.append(sub(b, a))
                lower.append(0)
                upper.append(1)
            else:
                idx = []
                for v in part:
                    idx.append(len(cols))
                    cols.append(v)
                    lower.append(0)
                    upper.append(None)
                convex_rows.append(idx)
    if extra_col is not None:
        cols.append(tuple(-a for a in extra_col))
        lower.append(None)
        upper.append(None)
    nv = len(cols)
    cons = []
    for k in range(d):
        cons.append((tuple(c[k] for c in cols), EQ, target[k]))
    for idx in convex_rows:
        row = [0] * nv
        for j in idx:
            row[j] = 1
        cons.append((tuple(row), EQ, 1))
    return LinearProgram(nv, tuple(cons), lower=tuple(lower), upper=tuple(upper)), cols


def _witness_points(polys, lp_x):
    """Split an LP solution of :func:`_membership_lp` into one point per polytope."""
    out = []
    pos = 0
    for P in polys:
        y = [Fraction(0)] * P.dim
        for part in P.parts:
            if len(part) == 1:
                y = [a + b for a, b in zip(y, part[0])]
            elif len(part) == 2:
                a, b = part
                s = lp_x[pos]
                pos += 1
                y = [yi + ai + s * (bi - ai) for yi, ai, bi in zip(y, a, b)]
            else:
                for v in part:
                    w = lp_x[pos]
                    pos += 1
                    if w:
                        y = [yi + w * vi for yi, vi in zip(y, v)]
        out.append(tuple(y))
    return out


def _outside_bbox(polys, x) -> bool:
    for k, xk in enumerate(x):
        lo = hi = Fraction(0)
        for P in polys:
            a, b = P.coord_range(k)
            lo += a
            hi += b
        if xk < lo or xk > hi:
            return True
    return False


@lru_cache(maxsize=1 << 18)
def _sum_contains(polys: tuple, x: RatVector) -> bool:
    if not polys:
        return not any(x)
    if _outside_bbox(polys, x):
        return False
    lp, _ = _membership_lp(polys, x)
    return lp_feasible(lp).feasible


@lru_cache(maxsize=4096)
def _contains_origin(P: LatticePolytope) -> bool:
    return _sum_contains((P,), zeros(P.dim))


def contains(P: LatticePolytope, x) -> bool:
    """Whether ``x`` lies in ``P`` (exact LP)."""
    x = vector(x)
    if len(x) != P.dim:
        raise StructuralError(f"point has length {len(x)}, polytope dimension is {P.dim}")
    return _sum_contains((P,), x)


def _check_sigma(fam: PolytopeFamily, sigma) -> tuple:
    s = tuple(sorted(set(sigma)))
    for i in s:
        if not 1 <= i <= fam.n:
            raise StructuralError(f"index {i} out of range 1..{fam.n}")
    return s


def sum_contains(fam: PolytopeFamily, sigma, x) -> bool:
    """Whether ``x`` lies in ``P_sigma`` (1-based ``sigma``); ``P_{}`` is ``{0}``."""
    s = _check_sigma(fam, sigma)
    x = vector(x)
    if len(x) != fam.dim:
        raise StructuralError(f"point has length {len(x)}, family dimension is {fam.dim}")
    return _sum_contains(tuple(fam.members[i - 1] for i in s), x)


def sum_witness(fam: PolytopeFamily, sigma, x) -> Optional[dict]:
    """Points ``y_i in P_i`` with ``sum y_i = x``, keyed by index, or ``None``."""
    s = _check_sigma(fam, sigma)
    x = vector(x)
    polys = tuple(fam.members[i - 1] for i in s)
    if not s:
        return {} if not any(x) else None
    lp, _ = _membership_lp(polys, x)
    res = lp_feasible(lp)
    if not res.feasible:
        return None
    return dict(zip(s, _witness_points(polys, res.witness)))


def line_interval(fam: PolytopeFamily, sigma, mu, v) -> Optional[tuple]:
    """Exact ``[t_min, t_max]`` with ``mu + t v in P_sigma``, or ``None`` if the line misses."""
    s = _check_sigma(fam, sigma)
    mu, v = vector(mu), vector(v)
    if not any(v):
        raise StructuralError("line direction must be nonzero")
    polys = tuple(fam.members[i - 1] for i in s)
    lp, cols = _membership_lp(polys, mu, extra_col=v)
    obj = [0] * lp.num_vars
    obj[-1] = 1
    lo = lp_solve(replace(lp, objective=tuple(obj), sense="min"))
    if not lo.feasible:
        return None
    hi = lp_solve(replace(lp, objective=tuple(obj), sense="max"))
    return lo.objective_value, hi.objective_value


def line_meets(fam: PolytopeFamily, sigma, mu, v) -> bool:
    s = _check_sigma(fam, sigma)
    polys = tuple(fam.members[i - 1] for i in s)
    lp, _ = _membership_lp(polys, vector(mu), extra_col=vector(v))
    return lp_feasible(lp).feasible


def sum_bounding_box(fam: PolytopeFamily, sigma) -> IntBox:
    """Integer box containing ``P_sigma`` (sums of floors / ceilings per member)."""
    s = _check_sigma(fam, sigma)
    lower, upper = [], []
    for k in range(fam.dim):
        lo = hi = 0
        for i in s:
            a, b = fam.members[i - 1].coord_range(k)
            lo += math.floor(a)
            hi += math.ceil(b)
        lower.append(lo)
        upper.append(hi)
    return IntBox(tuple(lower), tuple(upper))


def lattice_points(fam: PolytopeFamily, sigma, budget: Optional[int] = None) -> list:
    """All integer points of ``P_sigma`` in lexicographic order."""
    box = sum_bounding_box(fam, sigma)
    limit = enumeration_budget(budget)
    if box.cells > limit:
        raise BudgetExceeded(
            f"bounding box {list(zip(box.lower, box.upper))} has {box.cells} cells, budget is {limit}"
        )
    return [p for p in box.points() if sum_contains(fam, sigma, p)]


# --------------------------------------------------------------------------
# projection


def _primitive(v) -> RatVector:
    den = math.lcm(*(a.denominator for a in v))
    ints = [int(a * den) for a in v]
    g = math.gcd(*ints)
    return vector(c // g for c in ints)


@lru_cache(maxsize=1024)
def projection_frame(v: RatVector) -> tuple:
    """Orthogonal primitive-integer basis of ``v^perp``.

    Gram-Schmidt over the standard basis projected onto ``v^perp``, taken in
    index order, skipping vectors that become dependent.
    """
    v = vector(v)
    if not any(v):
        raise StructuralError("projection direction must be nonzero")
    d = len(v)
    vv = dot(v, v)
    basis = []
    for k in range(d):
        w = unit(d, k)
        w = sub(w, scale(dot(w, v) / vv, v))
        for b in basis:
            w = sub(w, scale(dot(w, b) / dot(b, b), b))
        if any(w):
            basis.append(_primitive(w))
        if len(basis) == d - 1:
            break
    return tuple(basis)


def project_point(x: RatVector, frame: tuple) -> RatVector:
    """Coefficients of the orthogonal projection of ``x`` in ``frame``."""
    return tuple(dot(x, b) / dot(b, b) for b in frame)


def project_polytope(P: LatticePolytope, v) -> LatticePolytope:
    """Image of ``P`` under orthogonal projection onto ``v^perp`` (in ``d-1`` coordinates)."""
    v = vector(v)
    if len(v) != P.dim:
        raise StructuralError("direction dimension mismatch")
    frame = projection_frame(v)
    return LatticePolytope(
        P.dim - 1,
        tuple(_dedup(project_point(p, frame) for p in part) for part in P.parts),
    )
