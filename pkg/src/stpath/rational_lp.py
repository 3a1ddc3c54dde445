"""Exact rational linear programming.

Solves ``min c.x  s.t.  A x >= b,  lower <= x <= upper`` with a bounded-variable
primal simplex (two phases, Bland's rule) over exact rationals.  The public
surface speaks :class:`fractions.Fraction`; the tableau itself runs on
``gmpy2.mpq`` when gmpy2 is importable, which is the same arithmetic, faster.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _Q = Fraction

Number = "int | Fraction"


class Status(str, enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class LinearProgram:
    """``min objective.x`` over ``>=`` rows and per-variable box bounds.

    ``upper[j] = None`` means unbounded above.
    """

    num_vars: int
    objective: list[Fraction]
    rows: list[tuple[list[Fraction], Fraction]] = field(default_factory=list)
    lower: list[Fraction] | None = None
    upper: list[Fraction | None] | None = None

    def __post_init__(self) -> None:
        k = self.num_vars
        self.objective = [Fraction(c) for c in self.objective]
        if len(self.objective) != k:
            raise ValueError("objective length must equal num_vars")
        if self.lower is None:
            self.lower = [Fraction(0)] * k
        if self.upper is None:
            self.upper = [None] * k
        self.lower = [Fraction(v) for v in self.lower]
        self.upper = [None if v is None else Fraction(v) for v in self.upper]
        if len(self.lower) != k or len(self.upper) != k:
            raise ValueError("bounds must have num_vars entries")
        self.rows = [([Fraction(a) for a in coeffs], Fraction(rhs)) for coeffs, rhs in self.rows]
        for coeffs, _ in self.rows:
            if len(coeffs) != k:
                raise ValueError("row width must equal num_vars")

    def add_row(self, coeffs: Sequence[Number], rhs: Number) -> None:
        coeffs = [Fraction(a) for a in coeffs]
        if len(coeffs) != self.num_vars:
            raise ValueError("row width must equal num_vars")
        self.rows.append((coeffs, Fraction(rhs)))


@dataclass
class LpSolution:
    status: Status
    values: list[Fraction] | None = None
    objective: Fraction | None = None
    pivots: int = 0


class _Tableau:
    """Bounded-variable simplex tableau.

    Row ``i`` reads ``y[basis[i]] + sum_j T[i][j] y[j] = const``; nonbasic
    variables sit at 0 or at their upper bound ``ub[j]``.
    """

    def __init__(self, T, basis, beta, ub, at_upper, cost, allowed):
        self.T = T
        self.basis = basis
        self.beta = beta
        self.ub = ub
        self.at_upper = at_upper
        self.allowed = allowed
        self.pivots = 0
        self.set_cost(cost)

    def set_cost(self, cost) -> None:
        ncol = len(self.ub)
        d = list(cost)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.T[i]
                for j in range(ncol):
                    if row[j]:
                        d[j] -= cb * row[j]
        for b in self.basis:
            d[b] = _Q(0)
        self.d = d
        self.cost = cost

    def value(self, j):
        return self.ub[j] if self.at_upper[j] else _Q(0)

    def values(self):
        vals = [self.value(j) for j in range(len(self.ub))]
        for i, b in enumerate(self.basis):
            vals[b] = self.beta[i]
        return vals

    def run(self) -> bool:
        """Iterate to optimality. Returns False if unbounded."""
        T, basis, beta, ub, d = self.T, self.basis, self.beta, self.ub, self.d
        is_basic = [False] * len(ub)
        for b in basis:
            is_basic[b] = True
        while True:
            enter = -1
            for j in range(len(ub)):
                if is_basic[j] or not self.allowed[j]:
                    continue
                dj = d[j]
                if self.at_upper[j]:
                    if dj > 0:
                        enter = j
                        break
                elif dj < 0 and (ub[j] is None or ub[j] > 0):
                    enter = j
                    break
            if enter < 0:
                return True
            j = enter
            sigma = -1 if self.at_upper[j] else 1
            theta = ub[j]
            leave = -1
            leave_to_upper = False
            for i in range(len(basis)):
                a = T[i][j]
                if not a:
                    continue
                b = basis[i]
                delta = -sigma * a
                if delta < 0:
                    lim = beta[i] / (-delta)
                    to_upper = False
                elif ub[b] is not None:
                    lim = (ub[b] - beta[i]) / delta
                    to_upper = True
                else:
                    continue
                if (
                    theta is None
                    or lim < theta
                    or (lim == theta and leave >= 0 and b < basis[leave])
                ):
                    theta, leave, leave_to_upper = lim, i, to_upper
            if theta is None:
                return False
            if theta:
                for i in range(len(basis)):
                    a = T[i][j]
                    if a:
                        beta[i] -= sigma * a * theta
            if leave < 0:
                self.at_upper[j] = not self.at_upper[j]
                continue
            entering_value = self.value(j) + sigma * theta
            b_out = basis[leave]
            self.at_upper[b_out] = leave_to_upper
            self.at_upper[j] = False
            self.pivot(leave, j)
            beta[leave] = entering_value
            is_basic[b_out] = False
            is_basic[j] = True

    def pivot(self, p: int, q: int) -> None:
        T, d = self.T, self.d
        row = T[p]
        piv = row[q]
        b_out = self.basis[p]
        # the leaving variable's column becomes e_p in the old tableau form
        row[b_out] = _Q(1)
        inv = 1 / piv
        nz = [j for j in range(len(row)) if row[j]]
        for j in nz:
            row[j] *= inv
        for i, other in enumerate(T):
            if i == p:
                continue
            f = other[q]
            if f:
                for j in nz:
                    other[j] -= f * row[j]
        f = d[q]
        if f:
            for j in nz:
                d[j] -= f * row[j]
        row[q] = _Q(0)
        for i, other in enumerate(T):
            if i != p:
                other[q] = _Q(0)
        d[q] = _Q(0)
        self.basis[p] = q
        self.pivots += 1


def solve(lp: LinearProgram) -> LpSolution:
    """Exact optimum of ``lp`` (an optimal basic solution), or its status."""
    k = lp.num_vars
    lower = [_Q(v) for v in lp.lower]
    ub_x = []
    for lo, hi in zip(lower, lp.upper):
        if hi is None:
            ub_x.append(None)
        else:
            width = _Q(hi) - lo
            if width < 0:
                return LpSolution(Status.INFEASIBLE)
            ub_x.append(width)

    rows = [([_Q(a) for a in coeffs], _Q(rhs)) for coeffs, rhs in lp.rows]
    r = len(rows)
    shifted = [rhs - sum((a * lo for a, lo in zip(coeffs, lower) if a), _Q(0)) for coeffs, rhs in rows]
    art_rows = [i for i in range(r) if shifted[i] > 0]
    na = len(art_rows)
    ncol = k + r + na
    art_col = {i: k + r + a for a, i in enumerate(art_rows)}

    T, basis, beta = [], [], []
    for i, (coeffs, _) in enumerate(rows):
        row = [_Q(0)] * ncol
        if i in art_col:
            # a.x' - s + art = rhs'
            for j, a in enumerate(coeffs):
                row[j] = a
            row[k + i] = _Q(-1)
            basis.append(art_col[i])
            beta.append(shifted[i])
        else:
            # -a.x' + s = -rhs'
            for j, a in enumerate(coeffs):
                row[j] = -a
            basis.append(k + i)
            beta.append(-shifted[i])
        T.append(row)
    ub = ub_x + [None] * (r + na)
    at_upper = [False] * ncol
    allowed = [True] * ncol

    pivots = 0
    if na:
        cost1 = [_Q(0)] * (k + r) + [_Q(1)] * na
        tab = _Tableau(T, basis, beta, ub, at_upper, cost1, allowed)
        tab.run()
        infeas = sum((tab.beta[i] for i, b in enumerate(tab.basis) if b >= k + r), _Q(0))
        pivots += tab.pivots
        if infeas > 0:
            return LpSolution(Status.INFEASIBLE, pivots=pivots)
        for i, b in enumerate(tab.basis):
            if b < k + r:
                continue
            row = tab.T[i]
            for j in range(k + r):
                if row[j] and j not in tab.basis:
                    value = tab.value(j)
                    tab.at_upper[b] = False
                    tab.at_upper[j] = False
                    tab.pivot(i, j)
                    tab.beta[i] = value
                    break
        for j in range(k + r, ncol):
            allowed[j] = False
        T, basis, beta, at_upper = tab.T, tab.basis, tab.beta, tab.at_upper
        pivots = tab.pivots

    cost2 = [_Q(c) for c in lp.objective] + [_Q(0)] * (r + na)
    tab = _Tableau(T, basis, beta, ub, at_upper, cost2, allowed)
    tab.pivots = pivots
    if not tab.run():
        return LpSolution(Status.UNBOUNDED, pivots=tab.pivots)
    y = tab.values()
    values = [Fraction(int(v.numerator), int(v.denominator)) + Fraction(lo) for v, lo in zip(y[:k], lp.lower)]
    objective = sum((c * v for c, v in zip(lp.objective, values)), Fraction(0))
    for coeffs, rhs in lp.rows:
        lhs = sum((a * v for a, v in zip(coeffs, values) if a), Fraction(0))
        if lhs < rhs:  # pragma: no cover - exact arithmetic makes this a hard bug
            raise AssertionError("simplex returned a point violating a row")
    return LpSolution(Status.OPTIMAL, values, objective, tab.pivots)
