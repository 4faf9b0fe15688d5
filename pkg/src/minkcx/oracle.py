"""Brute-force reference implementations for tests.

Nothing here touches the LP solver: boxes are handled by interval
arithmetic, planar sums by an explicit convex hull, complexes by full
subset enumeration.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .errors import DomainError


def box_upper(P) -> tuple:
    """Upper corner ``t`` if ``P`` is the box ``prod [0, t_j]``, else raise."""
    verts = {tuple(Fraction(a) for a in v) for v in P.vertices}
    d = P.dim
    t = tuple(max(v[k] for v in verts) for k in range(d))
    if any(min(v[k] for v in verts) != 0 for k in range(d)):
        raise DomainError("not a box anchored at the origin")
    corners = set(itertools.product(*[(Fraction(0), tk) if tk else (Fraction(0),) for tk in t]))
    if corners != verts:
        raise DomainError("not an axis-parallel box")
    return t


def oracle_box_membership(boxes, sigma, x) -> bool:
    """``x in sum_{i in sigma} [0, t_i]`` by per-coordinate interval sums.

    ``boxes`` holds either box polytopes or their upper corners.
    """
    uppers = [b if isinstance(b, tuple) and not hasattr(b, "dim") else box_upper(b) for b in boxes]
    x = [Fraction(a) for a in x]
    for k, xk in enumerate(x):
        hi = sum((Fraction(uppers[i - 1][k]) for i in sigma), Fraction(0))
        if not 0 <= xk <= hi:
            return False
    return True


def oracle_euler(cx) -> int:
    """Reduced Euler characteristic by enumerating all ``2^n`` subsets."""
    if cx.n > 20:
        raise DomainError("oracle_euler is limited to n <= 20")
    facets = [set(F) for F in cx.facets]
    total = 0
    for mask in range(1 << cx.n):
        s = {i + 1 for i in range(cx.n) if mask >> i & 1}
        if any(s <= F for F in facets):
            total += (-1) ** len(s)
    return -total


def oracle_threshold_bruteforce(cx, grid: int):
    """First integer certificate ``(weights, mu)`` with weights in ``0..grid``
    and ``mu`` in ``1..n*grid``, or ``None``."""
    n = cx.n
    if n > 4:
        raise DomainError("oracle_threshold_bruteforce is limited to n <= 4")
    facets = [set(F) for F in cx.facets]
    subsets = [({i + 1 for i in range(n) if mask >> i & 1}) for mask in range(1 << n)]
    is_face = [any(s <= F for F in facets) for s in subsets]
    for lam in itertools.product(range(grid + 1), repeat=n):
        for mu in range(1, max(n * grid, 1) + 1):
            if any(w > mu for w in lam):
                continue
            if all((sum(lam[i - 1] for i in s) < mu) == f for s, f in zip(subsets, is_face)):
                return lam, mu
    return None


# -- planar Minkowski sums


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points) -> list:
    """Andrew's monotone chain; counter-clockwise, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) >= 2 else pts[:1]


def _hull_contains_2d(hull, x) -> bool:
    if len(hull) == 1:
        return tuple(x) == hull[0]
    if len(hull) == 2:
        a, b = hull
        if _cross(a, b, x) != 0:
            return False
        return min(a[0], b[0]) <= x[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= x[1] <= max(a[1], b[1])
    return all(_cross(hull[k], hull[(k + 1) % len(hull)], x) >= 0 for k in range(len(hull)))


def explicit_sum_points(polys):
    """All sums of one generator per polytope (the sum's hull generators)."""
    pts = {tuple(Fraction(0) for _ in range(polys[0].dim))} if polys else {()}
    for P in polys:
        pts = {tuple(a + b for a, b in zip(p, q)) for p in pts for q in P.vertices}
    return pts


def oracle_sum_contains(polys, x) -> bool:
    """Membership in an explicit Minkowski sum, ambient dimension at most 2."""
    x = tuple(Fraction(a) for a in x)
    if not polys:
        return not any(x)
    d = polys[0].dim
    pts = explicit_sum_points(polys)
    if d == 0:
        return True
    if d == 1:
        vals = [p[0] for p in pts]
        return min(vals) <= x[0] <= max(vals)
    if d == 2:
        return _hull_contains_2d(convex_hull_2d(pts), x)
    raise DomainError("oracle_sum_contains supports dimension <= 2")


def oracle_lattice_count(polys) -> int:
    if not polys:
        return 1
    pts = explicit_sum_points(polys)
    d = polys[0].dim
    ranges = [range(math.floor(min(p[k] for p in pts)), math.ceil(max(p[k] for p in pts)) + 1) for k in range(d)]
    return sum(1 for q in itertools.product(*ranges) if oracle_sum_contains(polys, q))


def oracle_cme(polys) -> int:
    n = len(polys)
    total = 0
    for k in range(n + 1):
        for I in itertools.combinations(range(n), k):
            total += (-1) ** (n - k) * oracle_lattice_count([polys[i] for i in I])
    return total


def oracle_minkowski_complex_faces(polys, mu) -> set:
    """Faces of the Minkowski complex as a set of frozensets (dimension <= 2)."""
    n = len(polys)
    faces = set()
    for mask in range(1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        if not oracle_sum_contains([polys[i] for i in idx], mu):
            faces.add(frozenset(i + 1 for i in idx))
    return faces
