"""Threshold complexes and bounds on the convex threshold dimension.

``ctd(D)`` is the least ``d`` such that ``D`` is the Minkowski complex of
some polytope family in ``R^d``.  It is 0 only for the void complex, 1
exactly for threshold complexes, and every join factor whose 1-skeleton
carries an induced 2K2, P4 or C4 adds at least one to it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .complex import (
    SimplicialComplex,
    from_face_predicate,
    induced,
    join_decomposition,
    member,
    minimal_nonfaces,
    one_skeleton,
)
from .errors import DomainError, StructuralError, VerificationError
from .exact import GE, LE, LinearProgram, Status, lp_solve, rat
from .minkowski import minkowski_complex
from .polytope import PolytopeFamily, segment

EXHAUSTIVE_BLOCKS = 10


@dataclass(frozen=True)
class ThresholdCertificate:
    weights: tuple
    threshold: Fraction

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(rat(w) for w in self.weights))
        object.__setattr__(self, "threshold", rat(self.threshold))

    def complex(self) -> SimplicialComplex:
        return threshold_complex(self.weights, self.threshold)

    def ordering(self) -> list:
        """Vertices sorted by weight (ties by label), smallest first."""
        return sorted(range(1, len(self.weights) + 1), key=lambda i: (self.weights[i - 1], i))

    def realization(self) -> PolytopeFamily:
        """Segments ``[0, w_i]`` on the line with basepoint at the threshold."""
        return PolytopeFamily(1, [segment(w) for w in self.weights], (self.threshold,))


def threshold_complex(weights, threshold, n: Optional[int] = None) -> SimplicialComplex:
    """All ``sigma`` with ``sum_{i in sigma} w_i < threshold``."""
    w = [rat(x) for x in weights]
    mu = rat(threshold)
    if n is not None and n != len(w):
        raise StructuralError(f"{len(w)} weights for {n} vertices")
    for i, x in enumerate(w, start=1):
        if not 0 <= x <= mu:
            raise StructuralError(f"weight {x} of vertex {i} outside [0, {mu}]")
    return from_face_predicate(len(w), lambda s: sum((w[i - 1] for i in s), Fraction(0)) < mu)


def recognize_threshold(cx: SimplicialComplex) -> Optional[ThresholdCertificate]:
    """A certificate that ``cx`` is threshold, or ``None``.

    Solves ``max delta`` subject to ``0 <= w <= 1``, facet sums ``<= 1 - delta``
    and minimal nonface sums ``>= 1``; a positive optimum gives strict
    inequalities on every face.
    """
    if cx.is_void:
        raise DomainError("recognize_threshold on the void complex")
    n = cx.n
    cons = []
    for F in cx.facets:
        row = [1 if i in F else 0 for i in range(1, n + 1)] + [1]
        cons.append((row, LE, 1))
    for T in minimal_nonfaces(cx):
        row = [1 if i in T else 0 for i in range(1, n + 1)] + [0]
        cons.append((row, GE, 1))
    lp = LinearProgram(
        n + 1,
        tuple(cons),
        objective=(0,) * n + (1,),
        lower=(0,) * n + (None,),
        upper=(1,) * n + (1,),
    )
    res = lp_solve(lp)
    if res.status is not Status.OPTIMAL or res.objective_value <= 0:
        return None
    cert = ThresholdCertificate(res.witness[:n], 1)
    if cert.complex() != cx:
        raise VerificationError("threshold certificate does not regenerate the complex")
    return cert


@dataclass(frozen=True)
class ForbiddenWitness:
    """Edges ``{a,b}``, ``{c,d}`` present, crossing pairs ``{a,c}``, ``{b,d}`` absent."""

    a: int
    b: int
    c: int
    d: int
    shape: str  # "2K2", "P4" or "C4"

    @property
    def e(self):
        return (self.a, self.b)

    @property
    def f(self):
        return (self.c, self.d)

    @property
    def e_prime(self):
        return (self.a, self.c)

    @property
    def f_prime(self):
        return (self.b, self.d)

    @property
    def vertices(self):
        return tuple(sorted((self.a, self.b, self.c, self.d)))

    def holds_in(self, cx: SimplicialComplex) -> bool:
        return (
            len(set(self.vertices)) == 4
            and member(cx, self.e)
            and member(cx, self.f)
            and not member(cx, self.e_prime)
            and not member(cx, self.f_prime)
            and self.shape == _shape(cx, self.a, self.b, self.c, self.d)
        )

    def relabel(self, mapping) -> "ForbiddenWitness":
        return ForbiddenWitness(mapping[self.a], mapping[self.b], mapping[self.c], mapping[self.d], self.shape)

    def as_dict(self) -> dict:
        return {
            "shape": self.shape,
            "edges": [list(self.e), list(self.f)],
            "nonedges": [list(self.e_prime), list(self.f_prime)],
        }


def _shape(cx, a, b, c, d) -> str:
    extra = member(cx, (a, d)) + member(cx, (b, c))
    return ("2K2", "P4", "C4")[extra]


def _witnesses(cx: SimplicialComplex):
    """All witness 4-tuples in lexicographic order."""
    g = one_skeleton(cx)
    adj = {v: set() for v in range(1, cx.n + 1)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    for a, b, c, d in itertools.permutations(range(1, cx.n + 1), 4):
        if b in adj[a] and d in adj[c] and c not in adj[a] and d not in adj[b]:
            extra = (d in adj[a]) + (c in adj[b])
            yield ForbiddenWitness(a, b, c, d, ("2K2", "P4", "C4")[extra])


def find_forbidden(cx: SimplicialComplex) -> Optional[ForbiddenWitness]:
    """Lexicographically first induced 2K2 / P4 / C4 pattern in the 1-skeleton."""
    return next(_witnesses(cx), None)


# --------------------------------------------------------------------------
# convex threshold dimension bounds


@dataclass(frozen=True)
class LowerEvidence:
    """Join grouping behind a lower bound.

    ``cx`` is the join of the subcomplex induced on ``base_vertices`` and the
    subcomplexes induced on each group; each group carries a witness.
    Vertices that are not faces (``ghosts``) are ignored throughout.
    """

    groups: tuple
    witnesses: tuple
    base_vertices: tuple
    base_threshold: bool
    heuristic: bool = False
    ghosts: tuple = ()

    @property
    def bound(self) -> int:
        return (1 if self.base_threshold else 2) + len(self.groups)

    def as_dict(self) -> dict:
        return {
            "bound": self.bound,
            "base_vertices": list(self.base_vertices),
            "base_threshold": self.base_threshold,
            "groups": [
                {"vertices": list(g), "witness": w.as_dict()} for g, w in zip(self.groups, self.witnesses)
            ],
            "heuristic": self.heuristic,
            "ghost_vertices": list(self.ghosts),
        }


def check_lower_evidence(cx: SimplicialComplex, ev: LowerEvidence) -> bool:
    """Re-derive every claim in ``ev`` from ``cx``."""
    ghosts = tuple(v for v in range(1, cx.n + 1) if not member(cx, (v,)))
    if ghosts != ev.ghosts:
        return False
    pieces = [tuple(ev.base_vertices)] + [tuple(g) for g in ev.groups]
    flat = sorted(v for p in pieces for v in p)
    if flat != [v for v in range(1, cx.n + 1) if v not in ghosts]:
        return False
    # join check: facets of cx are exactly unions of facets of the pieces
    combos = [frozenset()]
    for p in pieces:
        ps = frozenset(p)
        restricted = {F & ps for F in cx.facets}
        maximal = [F for F in restricted if not any(F < G for G in restricted)]
        combos = [c | F for c in combos for F in maximal]
    if set(combos) != set(cx.facets):
        return False
    for g, w in zip(ev.groups, ev.witnesses):
        if not set(w.vertices) <= set(g) or not w.holds_in(cx):
            return False
    base_cx = induced(cx, ev.base_vertices)
    return (recognize_threshold(base_cx) is not None) == ev.base_threshold


def ctd_lower_bound(cx: SimplicialComplex, exhaustive_limit: int = EXHAUSTIVE_BLOCKS) -> tuple:
    """``(bound, evidence)`` from the finest join splitting of ``cx``.

    Blocks of the splitting are grouped so that every group but the base
    has a forbidden witness; each such group adds one to the base's bound
    (1 if the base is threshold, 2 otherwise).  Exhaustive over groupings
    up to ``exhaustive_limit`` blocks, greedy beyond (flagged).
    """
    if cx.is_void:
        raise DomainError("ctd_lower_bound on the void complex")
    verts = [v for v in range(1, cx.n + 1) if member(cx, (v,))]
    ghosts = tuple(v for v in range(1, cx.n + 1) if v not in verts)
    core = induced(cx, verts)
    back = dict(enumerate(verts, start=1))
    blocks, cone = join_decomposition(core)
    m = len(blocks)
    block_of = {v: i for i, B in enumerate(blocks) for v in B}

    witness_by_mask = {}
    for w in _witnesses(core):
        mask = 0
        for v in w.vertices:
            mask |= 1 << block_of[v]
        witness_by_mask.setdefault(mask, w)
    minimal = sorted(
        (mk for mk in witness_by_mask if not any(o != mk and o & mk == o for o in witness_by_mask)),
        key=lambda mk: (bin(mk).count("1"), mk),
    )

    def verts_of(mask):
        return [v for i, B in enumerate(blocks) if mask >> i & 1 for v in B]

    def witness_in(mask):
        for mk in minimal:
            if mk & mask == mk:
                return witness_by_mask[mk]
        return None

    def base_is_threshold(mask):
        return recognize_threshold(induced(core, sorted(verts_of(mask) + list(cone)))) is not None

    full = (1 << m) - 1
    heuristic = m > exhaustive_limit
    if not heuristic:
        NEG = -1
        has = [any(mk & mask == mk for mk in minimal) for mask in range(full + 1)]
        pack = [NEG] * (full + 1)
        pack[0] = 0
        split = [0] * (full + 1)
        for mask in range(1, full + 1):
            low = mask & -mask
            rest = mask ^ low
            sub = rest
            while True:
                g = sub | low
                if has[g] and pack[mask ^ g] != NEG and pack[mask ^ g] + 1 > pack[mask]:
                    pack[mask] = pack[mask ^ g] + 1
                    split[mask] = g
                if sub == 0:
                    break
                sub = (sub - 1) & rest
        candidates = sorted(
            ((pack[full ^ s0], s0) for s0 in range(full + 1) if pack[full ^ s0] != NEG),
            key=lambda t: (-t[0], t[1]),
        )
        best = None
        for k, s0 in candidates:
            if best is not None and k + 2 <= best[0]:
                break
            thr = base_is_threshold(s0)
            val = k + (1 if thr else 2)
            if best is None or val > best[0]:
                best = (val, s0, thr)
        _, s0, thr = best
        groups = []
        rest = full ^ s0
        while rest:
            groups.append(split[rest])
            rest ^= split[rest]
    else:
        used = 0
        groups = []
        for mk in minimal:
            if mk & used == 0:
                groups.append(mk)
                used |= mk
        s0 = full ^ used
        thr = base_is_threshold(s0)
        alt_thr = base_is_threshold(full)
        if (1 if alt_thr else 2) > len(groups) + (1 if thr else 2):
            groups, s0, thr = [], full, alt_thr

    ev = LowerEvidence(
        groups=tuple(tuple(back[v] for v in sorted(verts_of(g))) for g in groups),
        witnesses=tuple(witness_in(g).relabel(back) for g in groups),
        base_vertices=tuple(back[v] for v in sorted(verts_of(s0) + list(cone))),
        base_threshold=thr,
        heuristic=heuristic,
        ghosts=ghosts,
    )
    return ev.bound, ev


def ctd_upper_bound(cx: SimplicialComplex, budget: int = 32, seed: int = 0, trace: Optional[list] = None) -> tuple:
    """``(dimension, realization)`` for a verified realization of ``cx``.

    Threshold complexes get segments on a line; everything else starts from
    the box construction and is projected down while an avoiding line is
    found.
    """
    from .realize import realize_boxes, reduce_dimension

    if cx.is_void:
        raise DomainError("ctd_upper_bound on the void complex")
    cert = recognize_threshold(cx)
    if cert is not None:
        fam = cert.realization()
        if minkowski_complex(fam) != cx:
            raise VerificationError("segment realization does not reproduce the complex")
        return 1, fam
    fam = reduce_dimension(realize_boxes(cx), cx, budget=budget, seed=seed, trace=trace)
    return fam.dim, fam


@dataclass(frozen=True)
class CtdBounds:
    lower: int
    upper: int
    lower_evidence: LowerEvidence
    upper_evidence: PolytopeFamily
    trajectory: tuple = field(default=())


def ctd_bounds(cx: SimplicialComplex, budget: int = 32, seed: int = 0) -> CtdBounds:
    lower, ev = ctd_lower_bound(cx)
    trace = []
    upper, fam = ctd_upper_bound(cx, budget=budget, seed=seed, trace=trace)
    if not check_lower_evidence(cx, ev):
        raise VerificationError("lower-bound evidence failed its re-check")
    if minkowski_complex(fam) != cx:
        raise VerificationError("upper-bound realization does not reproduce the complex")
    if lower > upper:
        raise VerificationError(f"lower bound {lower} exceeds upper bound {upper}")
    return CtdBounds(lower, upper, ev, fam, tuple(trace))
