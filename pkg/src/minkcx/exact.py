"""Exact rational scalars, vectors and a small simplex-based LP solver.

Everything here works over :class:`fractions.Fraction`; there is no floating
point anywhere, so every feasibility verdict is exact.

The solver is a two-phase, bounded-variable primal simplex with Bland's
smallest-index rule.  Programs in this package have tens of variables at most,
so a dense tableau is fine.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Optional, Sequence, Union

from .errors import StructuralError, VerificationError

Rational = Fraction
RatVector = tuple  # tuple[Fraction, ...]; kept as a plain tuple for hashing

Scalar = Union[int, Fraction, str]

LE, EQ, GE = "<=", "==", ">="
_RELATIONS = (LE, EQ, GE)

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rat(x: Scalar) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: they would silently smuggle rounding into the
    exact pipeline.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise StructuralError(f"not an exact rational: {x!r}") from exc
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar: {x!r}")


def vector(xs: Iterable[Scalar]) -> RatVector:
    return tuple(rat(x) for x in xs)


def zeros(d: int) -> RatVector:
    return (_ZERO,) * d


def unit(d: int, k: int) -> RatVector:
    """The k-th standard basis vector of Q^d (0-based k)."""
    return tuple(_ONE if i == k else _ZERO for i in range(d))


def add(u: RatVector, v: RatVector) -> RatVector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: RatVector, v: RatVector) -> RatVector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Fraction, v: RatVector) -> RatVector:
    return tuple(c * a for a in v)


def dot(u: RatVector, v: RatVector) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), _ZERO)


def is_integral(v: RatVector) -> bool:
    return all(a.denominator == 1 for a in v)


# --------------------------------------------------------------------------
# Linear programs


@dataclass(frozen=True)
class Constraint:
    coeffs: RatVector
    relation: str
    rhs: Fraction

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        lhs = dot(self.coeffs, x)
        if self.relation == LE:
            return lhs <= self.rhs
        if self.relation == GE:
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class LinearProgram:
    """``max``/``min`` of ``objective . x`` subject to linear constraints.

    Variables without an explicit bound are free.  ``lower`` and ``upper``
    are per-variable tuples whose entries may be ``None`` (unbounded).
    """

    num_vars: int
    constraints: tuple = ()
    objective: Optional[RatVector] = None
    sense: str = "max"
    lower: Optional[tuple] = None
    upper: Optional[tuple] = None

    def __post_init__(self):
        n = self.num_vars
        if n < 0:
            raise StructuralError("num_vars must be nonnegative")
        cons = []
        for c in self.constraints:
            if not isinstance(c, Constraint):
                coeffs, rel, rhs = c
                c = Constraint(vector(coeffs), rel, rat(rhs))
            if len(c.coeffs) != n:
                raise StructuralError(
                    f"constraint has {len(c.coeffs)} coefficients, expected {n}"
                )
            if c.relation not in _RELATIONS:
                raise StructuralError(f"unknown relation {c.relation!r}")
            cons.append(c)
        object.__setattr__(self, "constraints", tuple(cons))
        if self.objective is not None:
            obj = vector(self.objective)
            if len(obj) != n:
                raise StructuralError(
                    f"objective has {len(obj)} coefficients, expected {n}"
                )
            object.__setattr__(self, "objective", obj)
        if self.sense not in ("max", "min"):
            raise StructuralError(f"unknown sense {self.sense!r}")
        for name in ("lower", "upper"):
            bounds = getattr(self, name)
            if bounds is None:
                bounds = (None,) * n
            elif len(bounds) != n:
                raise StructuralError(f"{name} bounds have length {len(bounds)}, expected {n}")
            object.__setattr__(
                self, name, tuple(None if b is None else rat(b) for b in bounds)
            )


class Status(enum.Enum):
    INFEASIBLE = "Infeasible"
    OPTIMAL = "Optimal"
    UNBOUNDED = "Unbounded"
    FEASIBLE = "FeasibleNoObjective"


@dataclass(frozen=True)
class LPResult:
    status: Status
    witness: Optional[RatVector] = None
    objective_value: Optional[Fraction] = None

    @property
    def feasible(self) -> bool:
        return self.status is not Status.INFEASIBLE


class _Tableau:
    """Dense bounded-variable simplex tableau over ``y``-space.

    Every column k has ``0 <= y_k <= caps[k]`` (``None`` meaning no cap).
    Nonbasic columns sit at 0 or at their cap (``at_upper``).
    """

    def __init__(self, rows, rhs, caps):
        self.T = rows
        self.beta = rhs
        self.caps = caps
        self.m = len(rows)
        self.N = len(caps)
        self.basis = [None] * self.m
        self.at_upper = [False] * self.N

    def reduced_costs(self, c):
        d = list(c)
        for i, b in enumerate(self.basis):
            cb = c[b]
            if cb:
                row = self.T[i]
                for k in range(self.N):
                    if row[k]:
                        d[k] -= cb * row[k]
        return d

    def pivot(self, r, e, d):
        T = self.T
        row = T[r]
        p = row[e]
        if p != 1:
            inv = 1 / p
            row = T[r] = [v * inv for v in row]
        nz = [k for k, v in enumerate(row) if v]
        for i in range(self.m):
            if i == r:
                continue
            other = T[i]
            f = other[e]
            if f:
                for k in nz:
                    other[k] -= f * row[k]
        f = d[e]
        if f:
            for k in nz:
                d[k] -= f * row[k]
        self.basis[r] = e

    def run(self, d, allowed):
        """Optimize from the current basis. Returns ``"optimal"`` or ``"unbounded"``."""
        T, beta, caps, basis, at_upper = self.T, self.beta, self.caps, self.basis, self.at_upper
        in_basis = set(basis)
        for _ in range(1_000_000):
            enter = None
            for j in range(self.N):
                if not allowed[j] or j in in_basis:
                    continue
                if d[j] > 0 and not at_upper[j]:
                    enter, s = j, 1
                    break
                if d[j] < 0 and at_upper[j]:
                    enter, s = j, -1
                    break
            if enter is None:
                return "optimal"

            theta = caps[enter]
            leave_row = None
            best_idx = enter
            to_upper = False
            for i in range(self.m):
                a = T[i][enter]
                if not a:
                    continue
                a = a if s > 0 else -a
                if a > 0:
                    t = beta[i] / a
                    up = False
                else:
                    cap = caps[basis[i]]
                    if cap is None:
                        continue
                    t = (cap - beta[i]) / (-a)
                    up = True
                if theta is None or t < theta or (t == theta and basis[i] < best_idx):
                    theta, leave_row, best_idx, to_upper = t, i, basis[i], up
            if theta is None:
                return "unbounded"

            if theta:
                step = theta if s > 0 else -theta
                for i in range(self.m):
                    a = T[i][enter]
                    if a:
                        beta[i] -= step * a
            if leave_row is None:
                at_upper[enter] = not at_upper[enter]
                continue

            start = caps[enter] if at_upper[enter] else _ZERO
            new_val = start + (theta if s > 0 else -theta)
            leaving = basis[leave_row]
            at_upper[leaving] = to_upper
            at_upper[enter] = False
            self.pivot(leave_row, enter, d)
            beta[leave_row] = new_val
            in_basis.discard(leaving)
            in_basis.add(enter)
        raise RuntimeError("simplex iteration limit reached")  # unreachable under Bland's rule

    def values(self):
        y = [(self.caps[k] if self.at_upper[k] else _ZERO) for k in range(self.N)]
        for i, b in enumerate(self.basis):
            y[b] = self.beta[i]
        return y


def _standard_form(lp: LinearProgram):
    """Rewrite ``lp`` over nonnegative, possibly capped columns ``y``.

    Returns ``(rows, rhs, caps, xmap)`` or ``None`` when a variable has an
    empty bound interval.  ``xmap[j] = (offset, [(col, sign), ...])``.
    """
    caps = []
    xmap = []
    for lo, hi in zip(lp.lower, lp.upper):
        if lo is not None:
            if hi is not None and hi < lo:
                return None
            caps.append(None if hi is None else hi - lo)
            xmap.append((lo, [(len(caps) - 1, 1)]))
        elif hi is not None:
            caps.append(None)
            xmap.append((hi, [(len(caps) - 1, -1)]))
        else:
            caps.append(None)
            caps.append(None)
            xmap.append((_ZERO, [(len(caps) - 2, 1), (len(caps) - 1, -1)]))
    n_struct = len(caps)
    n_slack = sum(1 for c in lp.constraints if c.relation != EQ)
    total = n_struct + n_slack

    rows, rhs = [], []
    slack = n_struct
    for c in lp.constraints:
        row = [_ZERO] * total
        b = c.rhs
        for j, a in enumerate(c.coeffs):
            if not a:
                continue
            off, cols = xmap[j]
            b -= a * off
            for k, sgn in cols:
                row[k] += a if sgn > 0 else -a
        if c.relation != EQ:
            row[slack] = _ONE if c.relation == LE else -_ONE
            caps.append(None)
            slack += 1
        if b < 0:
            row = [-v for v in row]
            b = -b
        rows.append(row)
        rhs.append(b)
    return rows, rhs, caps, xmap


def _recover(xmap, y):
    return tuple(off + sum((y[k] if s > 0 else -y[k] for k, s in cols), _ZERO) for off, cols in xmap)


def lp_solve(lp: LinearProgram) -> LPResult:
    """Solve ``lp`` exactly.

    Any returned witness is checked against every constraint and bound by
    exact substitution before it is handed back.
    """
    sf = _standard_form(lp)
    if sf is None:
        return LPResult(Status.INFEASIBLE)
    rows, rhs, caps, xmap = sf
    m, N = len(rows), len(caps)

    # phase 1: one artificial per row, minimise their sum
    for i, row in enumerate(rows):
        row.extend(_ONE if k == i else _ZERO for k in range(m))
    tab = _Tableau(rows, list(rhs), caps + [None] * m)
    tab.basis = [N + i for i in range(m)]
    c1 = [_ZERO] * N + [-_ONE] * m
    d = tab.reduced_costs(c1)
    tab.run(d, [True] * (N + m))
    if any(tab.beta[i] for i in range(m) if tab.basis[i] >= N):
        return LPResult(Status.INFEASIBLE)

    # drive zero-valued artificials out of the basis where possible
    for i in range(m):
        if tab.basis[i] < N:
            continue
        in_basis = set(tab.basis)
        for j in range(N):
            if j not in in_basis and tab.T[i][j]:
                val = caps[j] if tab.at_upper[j] else _ZERO
                tab.at_upper[j] = False
                tab.pivot(i, j, d)
                tab.beta[i] = val
                break
        # otherwise the row is zero on real columns and stays inert

    allowed = [True] * N + [False] * m
    if lp.objective is None:
        x = _recover(xmap, tab.values())
        _check(lp, x)
        return LPResult(Status.FEASIBLE, witness=x)

    obj = lp.objective if lp.sense == "max" else tuple(-a for a in lp.objective)
    c2 = [_ZERO] * (N + m)
    for a, (_, cols) in zip(obj, xmap):
        for k, s in cols:
            c2[k] += a if s > 0 else -a
    d = tab.reduced_costs(c2)
    outcome = tab.run(d, allowed)
    x = _recover(xmap, tab.values())
    _check(lp, x)
    if outcome == "unbounded":
        return LPResult(Status.UNBOUNDED, witness=x)
    return LPResult(Status.OPTIMAL, witness=x, objective_value=dot(lp.objective, x))


def lp_feasible(lp: LinearProgram) -> LPResult:
    """Feasibility only; ``lp`` must not carry an objective."""
    if lp.objective is not None:
        raise StructuralError("lp_feasible expects a program without objective")
    return lp_solve(lp)


def _check(lp: LinearProgram, x: RatVector) -> None:
    for c in lp.constraints:
        if not c.satisfied_by(x):
            raise VerificationError(f"LP witness violates {c}")
    for xj, lo, hi in zip(x, lp.lower, lp.upper):
        if (lo is not None and xj < lo) or (hi is not None and xj > hi):
            raise VerificationError("LP witness violates a variable bound")
