"""Exact two-phase simplex over an :class:`HPolyhedron`.

Variables of the polyhedron are free. Each ``<=`` row gets a nonnegative
slack; free variables are pivoted into the basis before phase 1 so the
optimum reported for a pointed polyhedron is a basic solution, i.e. a
vertex. Pivoting follows Bland's lowest-index rule in both phases.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_arith import DimensionError, dot, vec
from .representations import LE, HPolyhedron, Row

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LPOutcome:
    status: str
    point: tuple | None = None
    value: Fraction | None = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


class _Tableau:
    def __init__(self, rows: Sequence[Row], n: int):
        self.n = n
        slack_rows = [i for i, r in enumerate(rows) if r.rel == LE]
        self.k = len(slack_rows)
        self.m = len(rows)
        self.art0 = n + self.k
        self.width = self.art0 + self.m  # one artificial slot per row
        self.t: list[list[Fraction]] = []
        for i, r in enumerate(rows):
            line = list(r.coeffs) + [Fraction(0)] * (self.k + self.m) + [r.rhs]
            if r.rel == LE:
                line[n + slack_rows.index(i)] = Fraction(1)
            self.t.append(line)
        self.basis: list[int | None] = [None] * self.m
        self.free_rows: set[int] = set()
        self.active: list[int] = []

    def pivot(self, r: int, j: int, cost_rows: list[list[Fraction]]) -> None:
        row = self.t[r]
        p = row[j]
        if p != 1:
            row = [x / p for x in row]
            self.t[r] = row
        for i, other in enumerate(self.t):
            if i != r and other[j]:
                f = other[j]
                self.t[i] = [a - f * b for a, b in zip(other, row)]
        for cr in cost_rows:
            if cr[j]:
                f = cr[j]
                cr[:] = [a - f * b for a, b in zip(cr, row)]
        self.basis[r] = j

    def _ratio_row(self, j: int) -> int | None:
        best = None
        best_ratio = None
        for r in self.active:
            a = self.t[r][j]
            if a > 0:
                ratio = self.t[r][-1] / a
                if (best is None or ratio < best_ratio
                        or (ratio == best_ratio and self.basis[r] < self.basis[best])):
                    best, best_ratio = r, ratio
        return best

    def run(self, cost: list[Fraction], candidates: range, extra: list[list[Fraction]]) -> bool:
        """Bland-rule iterations on ``cost``; returns False when unbounded."""
        while True:
            j = next((c for c in candidates if cost[c] < 0), None)
            if j is None:
                return True
            r = self._ratio_row(j)
            if r is None:
                return False
            self.pivot(r, j, [cost] + extra)


def simplex_solve(h: HPolyhedron, objective: Sequence, sense: str = "min") -> LPOutcome:
    """Optimize ``objective · x`` over ``h`` exactly."""
    c = vec(objective)
    if len(c) != h.dim:
        raise DimensionError(f"objective of length {len(c)} in dimension {h.dim}")
    if sense not in ("min", "max"):
        raise ValueError(f"sense must be 'min' or 'max', not {sense!r}")
    if sense == "max":
        c = tuple(-x for x in c)
    n = h.dim
    tab = _Tableau(h.rows, n)

    # free variables enter first; the rows they occupy carry no sign constraint
    unpivoted = []
    for j in range(n):
        r = next((i for i in range(tab.m)
                  if i not in tab.free_rows and tab.t[i][j] != 0), None)
        if r is None:
            unpivoted.append(j)
            continue
        tab.pivot(r, j, [])
        tab.free_rows.add(r)
    tab.active = [i for i in range(tab.m) if i not in tab.free_rows]

    # phase 1 on the remaining rows, artificial variable per row
    for r in tab.active:
        if tab.t[r][-1] < 0:
            tab.t[r] = [-x for x in tab.t[r]]
        a = tab.art0 + r
        tab.t[r][a] = Fraction(1)
        tab.basis[r] = a
    phase1 = [Fraction(0)] * (tab.width + 1)
    for r in tab.active:
        for j in range(tab.art0):
            phase1[j] -= tab.t[r][j]
        phase1[-1] -= tab.t[r][-1]
    slack_cols = range(n, tab.art0)
    tab.run(phase1, slack_cols, [])
    if -phase1[-1] != 0:
        return LPOutcome(INFEASIBLE)

    # drive zero-level artificials out, dropping redundant rows
    for r in list(tab.active):
        if tab.basis[r] is not None and tab.basis[r] >= tab.art0:
            j = next((c for c in slack_cols if tab.t[r][c] != 0), None)
            if j is None:
                tab.active.remove(r)
            else:
                tab.pivot(r, j, [])

    # phase 2 reduced costs
    cost = list(c) + [Fraction(0)] * (tab.width - n + 1)
    for r in tab.free_rows:
        cb = c[tab.basis[r]]
        if cb:
            cost = [a - cb * b for a, b in zip(cost, tab.t[r])]
    if any(cost[j] != 0 for j in unpivoted):
        return LPOutcome(UNBOUNDED)
    if not tab.run(cost, slack_cols, []):
        return LPOutcome(UNBOUNDED)

    x = [Fraction(0)] * n
    for r in tab.free_rows:
        x[tab.basis[r]] = tab.t[r][-1]
    x = tuple(x)
    value = dot(vec(objective), x)
    return LPOutcome(OPTIMAL, x, value)


def find_point(h: HPolyhedron) -> tuple | None:
    """Some point of ``h`` (a vertex when ``h`` is pointed), or None if empty."""
    out = simplex_solve(h, (0,) * h.dim)
    return out.point if out.optimal else None


def is_feasible(h: HPolyhedron) -> bool:
    return find_point(h) is not None
