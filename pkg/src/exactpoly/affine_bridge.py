"""Affine bridge ``x = C̄ y + b̄`` read off a graph system ``B x + C y = b``.

With ``BᵀB`` nonsingular, ``C̄ = -(BᵀB)⁻¹BᵀC`` and ``b̄ = (BᵀB)⁻¹Bᵀb``. A linear
objective over X can then be optimized over Y and mapped back.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact_arith import DimensionError, RatMatrix, dot, gram_inverse, rank, vec
from .lp import OPTIMAL, simplex_solve
from .polyhedron import enumerate_generators, membership_h, to_hrep
from .representations import HPolyhedron, VPolyhedron, ge, le


class BridgeError(ValueError):
    pass


@dataclass(frozen=True)
class GraphL:
    B: RatMatrix
    C: RatMatrix
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "b", vec(self.b))
        if not (self.B.rows == self.C.rows == len(self.b)):
            raise DimensionError("B, C and b must have the same number of rows")

    @property
    def p(self) -> int:
        return self.B.cols

    @property
    def q(self) -> int:
        return self.C.cols

    def residual(self, x: Sequence, y: Sequence) -> tuple:
        bx, cy = self.B.apply(x), self.C.apply(y)
        return tuple(u + v - w for u, v, w in zip(bx, cy, self.b))


@dataclass(frozen=True)
class AffineBridge:
    cbar: RatMatrix
    bbar: tuple

    def __post_init__(self):
        object.__setattr__(self, "bbar", vec(self.bbar))
        if len(self.bbar) != self.cbar.rows:
            raise DimensionError("bbar length differs from the rows of cbar")


def derive_bridge(graph: GraphL) -> AffineBridge | None:
    """Bridge for ``graph``, or None when ``BᵀB`` is singular."""
    g_inv = gram_inverse(graph.B)
    if g_inv is None:
        return None
    pinv = g_inv @ graph.B.T
    cbar = -(pinv @ graph.C)
    bbar = pinv.apply(graph.b)
    return AffineBridge(cbar, bbar)


def apply_bridge(br: AffineBridge, y: Sequence) -> tuple:
    if len(y) != br.cbar.cols:
        raise DimensionError(f"y of length {len(y)} for a bridge from dimension {br.cbar.cols}")
    return tuple(a + b for a, b in zip(br.cbar.apply(y), br.bbar))


@dataclass(frozen=True)
class TwoStepResult:
    x: tuple
    y: tuple
    value: Fraction


def two_step_optimize(alpha: Sequence, y_set: HPolyhedron, br: AffineBridge) -> TwoStepResult:
    """Minimize ``alpha·x`` by minimizing ``(alphaᵀC̄) y`` over Y, then mapping ``y*``.

    The constant ``alpha·b̄`` plays no part in the optimization and is added
    back to the reported value.
    """
    alpha = vec(alpha)
    if len(alpha) != br.cbar.rows:
        raise DimensionError(f"alpha of length {len(alpha)} for x in dimension {br.cbar.rows}")
    if y_set.dim != br.cbar.cols:
        raise DimensionError(f"Y in dimension {y_set.dim}, bridge expects {br.cbar.cols}")
    reduced = tuple(dot(alpha, br.cbar.col(j)) for j in range(br.cbar.cols))
    out = simplex_solve(y_set, reduced, "min")
    if out.status != OPTIMAL:
        raise BridgeError(f"optimization over Y is {out.status}")
    x = apply_bridge(br, out.point)
    return TwoStepResult(x, out.point, out.value + dot(alpha, br.bbar))


@dataclass
class Theorem2Report:
    holds: bool
    premise_ok: bool
    direct_value: Fraction | None = None
    two_step_value: Fraction | None = None
    x_star: tuple | None = None
    y_star: tuple | None = None
    x_feasible: bool = False
    note: str = ""
    details: dict = field(default_factory=dict)


def verify_theorem2(x_set: HPolyhedron, y_set: HPolyhedron, graph: GraphL, alpha: Sequence) -> Theorem2Report:
    """Compare direct optimization over X with the two-step route through Y."""
    br = derive_bridge(graph)
    if br is None:
        return Theorem2Report(False, False, note="BᵀB is singular")
    direct = simplex_solve(x_set, alpha, "min")
    if direct.status != OPTIMAL:
        return Theorem2Report(False, False, note=f"direct problem is {direct.status}")
    try:
        two = two_step_optimize(alpha, y_set, br)
    except BridgeError as exc:
        return Theorem2Report(False, False, direct_value=direct.value, note=str(exc))
    feasible = membership_h(two.x, x_set)
    if not feasible:
        return Theorem2Report(False, False, direct.value, two.value, two.x, two.y, False,
                              note="retrieved x* is infeasible for X")
    equal = direct.value == two.value
    return Theorem2Report(equal, True, direct.value, two.value, two.x, two.y, True,
                          note="" if equal else "optimal values differ")


# -- instance construction -----------------------------------------------------

@dataclass(frozen=True)
class BridgeInstance:
    x_set: HPolyhedron
    y_set: HPolyhedron
    graph: GraphL
    alpha: tuple
    mapping: RatMatrix
    shift: tuple


def random_polytope(rng: random.Random, dim: int, extra_rows: int) -> HPolyhedron:
    """Box ``[-3, 3]^dim`` cut by random rows that keep the origin strictly inside."""
    rows = []
    for k in range(dim):
        e = [int(i == k) for i in range(dim)]
        rows.append(le(e, rng.randint(1, 3)))
        rows.append(ge(e, -rng.randint(1, 3)))
    for _ in range(extra_rows):
        a = [rng.randint(-3, 3) for _ in range(dim)]
        if not any(a):
            a[rng.randrange(dim)] = 1
        rows.append(le(a, rng.randint(1, 6)))
    return HPolyhedron(dim, tuple(rows))


def random_invertible(rng: random.Random, dim: int) -> RatMatrix:
    while True:
        m = RatMatrix.from_rows([[rng.randint(-3, 3) for _ in range(dim)] for _ in range(dim)])
        if rank(m) == dim:
            return m


def make_instance(y_set: HPolyhedron, mapping: RatMatrix, shift: Sequence, alpha: Sequence) -> BridgeInstance:
    """X = mapping·Y + shift and L = {x - mapping·y = shift}."""
    shift = vec(shift)
    vy = enumerate_generators(y_set)
    vx = VPolyhedron(mapping.rows,
                     tuple(tuple(a + b for a, b in zip(mapping.apply(v), shift)) for v in vy.vertices),
                     tuple(mapping.apply(r) for r in vy.rays),
                     tuple(mapping.apply(l) for l in vy.lineality))
    x_set = to_hrep(vx)
    graph = GraphL(RatMatrix.identity(mapping.rows), -mapping, shift)
    return BridgeInstance(x_set, y_set, graph, vec(alpha), mapping, shift)


def random_instance(rng: random.Random, dim: int) -> BridgeInstance:
    y_set = random_polytope(rng, dim, rng.randint(0, max(0, 12 - 2 * dim)))
    mapping = random_invertible(rng, dim)
    shift = [rng.randint(-5, 5) for _ in range(dim)]
    alpha = [rng.randint(-4, 4) for _ in range(dim)]
    return make_instance(y_set, mapping, shift, alpha)
