"""Finite simplicial complexes on vertices ``1..n`` stored by their facets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import DomainError, StructuralError, VerificationError


def _key(face: frozenset) -> tuple:
    return tuple(sorted(face))


def _maximal(sets: Iterable[frozenset]) -> tuple:
    uniq = sorted(set(sets), key=lambda s: (-len(s), _key(s)))
    kept = []
    for s in uniq:
        if not any(s <= t for t in kept):
            kept.append(s)
    return tuple(sorted(kept, key=_key))


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets.

    The void complex (no faces at all) has no facets; the complex ``{{}}``
    has the single facet ``frozenset()``.
    """

    n: int
    facets: tuple

    @property
    def is_void(self) -> bool:
        return not self.facets

    def __contains__(self, sigma) -> bool:
        return member(self, sigma)

    def faces(self) -> Iterator[frozenset]:
        """Every face exactly once, ordered by size then lexicographically."""
        seen = set()
        for F in self.facets:
            fs = _key(F)
            for k in range(len(fs) + 1):
                for c in itertools.combinations(fs, k):
                    seen.add(frozenset(c))
        yield from sorted(seen, key=lambda s: (len(s), _key(s)))

    def facet_lists(self) -> list:
        return [list(_key(F)) for F in self.facets]

    def __str__(self):
        if self.is_void:
            return f"void complex on {self.n} vertices"
        return "{" + ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facet_lists()) + "}"


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset  # of (u, v) with u < v

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


def from_facets(n: int, facet_list: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Normalize a facet list: dedupe, drop dominated sets, sort."""
    sets = []
    for f in facet_list:
        s = frozenset(f)
        for v in s:
            if not 1 <= v <= n:
                raise StructuralError(f"vertex {v} out of range 1..{n}")
        sets.append(s)
    return SimplicialComplex(n, _maximal(sets))


def void_complex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, ())


def empty_complex(n: int) -> SimplicialComplex:
    """The complex ``{{}}`` whose only face is the empty set."""
    return SimplicialComplex(n, (frozenset(),))


def simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, (frozenset(range(1, n + 1)),))


def from_face_predicate(n: int, is_face: Callable[[frozenset], bool]) -> SimplicialComplex:
    """Build a complex from a monotone face test.

    Subsets are visited by decreasing size; anything inside an already found
    facet is a face without asking ``is_face``.
    """
    facets = []
    for k in range(n, -1, -1):
        for c in itertools.combinations(range(1, n + 1), k):
            s = frozenset(c)
            if any(s <= F for F in facets):
                continue
            if is_face(s):
                facets.append(s)
    return SimplicialComplex(n, tuple(sorted(facets, key=_key)))


def member(cx: SimplicialComplex, sigma) -> bool:
    s = frozenset(sigma)
    return any(s <= F for F in cx.facets)


def minimal_nonfaces(cx: SimplicialComplex) -> list:
    """Inclusion-minimal non-faces, sorted by size then lexicographically."""
    if cx.is_void:
        raise DomainError("the void complex has no minimal nonfaces (the empty set is one)")
    found = []
    for k in range(1, cx.n + 1):
        for c in itertools.combinations(range(1, cx.n + 1), k):
            s = frozenset(c)
            if any(t <= s for t in found):
                continue
            if not member(cx, s):
                found.append(s)
    return found


def from_minimal_nonfaces(n: int, nonfaces: Sequence[frozenset]) -> SimplicialComplex:
    return from_face_predicate(n, lambda s: not any(t <= s for t in nonfaces))


def reduced_euler(cx: SimplicialComplex) -> int:
    """``-sum_{faces} (-1)^|face|``, empty face included; 0 for the void complex."""
    return -sum((-1) ** len(f) for f in cx.faces())


def f_vector(cx: SimplicialComplex) -> list:
    """Face counts by size, starting with the empty face."""
    counts = [0] * (cx.n + 1)
    for f in cx.faces():
        counts[len(f)] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """``a * b``; the vertices of ``b`` are shifted by ``a.n``."""
    if a.is_void or b.is_void:
        return void_complex(a.n + b.n)
    shifted = [frozenset(v + a.n for v in G) for G in b.facets]
    return SimplicialComplex(a.n + b.n, tuple(sorted((F | G for F in a.facets for G in shifted), key=_key)))


def join_all(parts: Sequence[SimplicialComplex]) -> SimplicialComplex:
    out = empty_complex(0)
    for p in parts:
        out = join(out, p)
    return out


def one_skeleton(cx: SimplicialComplex) -> Graph:
    edges = set()
    for F in cx.facets:
        for u, v in itertools.combinations(_key(F), 2):
            edges.add((u, v))
    return Graph(cx.n, frozenset(edges))


def induced(cx: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    """Subcomplex induced on ``vertices``, relabelled ``1..k`` in increasing order."""
    vs = sorted(set(vertices))
    relabel = {v: i for i, v in enumerate(vs, start=1)}
    keep = frozenset(vs)
    if cx.is_void:
        return void_complex(len(vs))
    return SimplicialComplex(
        len(vs), _maximal(frozenset(relabel[v] for v in F & keep) for F in cx.facets)
    )


def is_shifted(cx: SimplicialComplex, ordering: Sequence[int]) -> bool:
    """Exchange property under ``ordering`` (listed from smallest to largest)."""
    if sorted(ordering) != list(range(1, cx.n + 1)):
        raise StructuralError(f"{list(ordering)} is not a permutation of 1..{cx.n}")
    rank = {v: r for r, v in enumerate(ordering)}
    for face in cx.faces():
        for i in face:
            for j in ordering[: rank[i]]:
                if j in face:
                    continue
                if not member(cx, (face - {i}) | {j}):
                    return False
    return True


def join_decomposition(cx: SimplicialComplex) -> tuple:
    """Finest splitting of ``cx`` as a join.

    Returns ``(blocks, cone_vertices)``: the blocks are the connected
    components of "co-occur in a minimal nonface"; cone vertices lie in no
    minimal nonface.  The join of the induced pieces is checked against
    ``cx`` before returning.
    """
    if cx.is_void:
        raise DomainError("join decomposition of the void complex")
    nonfaces = minimal_nonfaces(cx)
    ghosts = [t for t in nonfaces if len(t) == 1]
    if ghosts:
        raise DomainError(f"vertex {min(ghosts[0])} is not a face")
    parent = list(range(cx.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    used = set()
    for t in nonfaces:
        ts = _key(t)
        used.update(ts)
        for u in ts[1:]:
            parent[find(u)] = find(ts[0])
    groups = {}
    for v in sorted(used):
        groups.setdefault(find(v), []).append(v)
    blocks = sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])
    cone = tuple(v for v in range(1, cx.n + 1) if v not in used)

    # every face must split into pieces that are faces of the induced pieces
    rebuilt = [frozenset(cone)]
    for B in blocks:
        pieces = _maximal(F & frozenset(B) for F in cx.facets)
        rebuilt = [R | P for R in rebuilt for P in pieces]
    if _maximal(rebuilt) != cx.facets:
        raise VerificationError("join decomposition does not reproduce the complex")
    return blocks, cone
