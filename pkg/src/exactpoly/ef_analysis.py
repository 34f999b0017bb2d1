"""Extended-formulation checks under three competing definitions.

``standard``        projection of Q onto the x-coordinates equals P
``fiorini_exists``  x ∈ P  ⟺  some y puts (x, y) in Q
``fiorini_map``     P is the image of Q under a given linear map

The first two are computed along independent routes (Fourier-Motzkin versus
generators plus lifting LPs) so agreement between them is a real check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .exact_arith import DimensionError, RatMatrix, solve_linear, vec
from .lp import find_point
from .polyhedron import (as_hrep, as_vrep, canonical_v, enumerate_generators,
                         inclusion_witness, polyhedra_equal, remove_redundancy)
from .projection import fourier_motzkin
from .representations import EQ, HPolyhedron, Polyhedron, Row, VPolyhedron

STANDARD = "standard"
FIORINI_MAP = "fiorini_map"
FIORINI_EXISTS = "fiorini_exists"

EQ_AS_TWO = "eq_as_two"
EQ_SEPARATE = "eq_separate"


@dataclass(frozen=True)
class LinearMap:
    """``x -> matrix @ x (+ offset)``; linear when ``offset`` is None."""

    matrix: RatMatrix
    offset: tuple | None = None

    def __post_init__(self):
        if self.offset is not None:
            off = vec(self.offset)
            if len(off) != self.matrix.rows:
                raise DimensionError("offset length differs from target dimension")
            object.__setattr__(self, "offset", off)

    @property
    def source_dim(self) -> int:
        return self.matrix.cols

    @property
    def target_dim(self) -> int:
        return self.matrix.rows

    def __call__(self, point: Sequence) -> tuple:
        y = self.matrix.apply(point)
        if self.offset is not None:
            y = tuple(a + b for a, b in zip(y, self.offset))
        return y

    def linear_part(self, direction: Sequence) -> tuple:
        return self.matrix.apply(direction)


@dataclass(frozen=True)
class EFVerdict:
    definition: str
    holds: bool
    witness: Any = None


def _x_coords(q_dim: int, p_dim: int, x_coords: Sequence[int]) -> list[int]:
    xs = list(x_coords)
    if len(xs) != p_dim:
        raise DimensionError(f"{len(xs)} x-coordinates for a polyhedron of dimension {p_dim}")
    if len(set(xs)) != len(xs) or any(not 0 <= c < q_dim for c in xs):
        raise DimensionError(f"invalid x-coordinates {xs} for dimension {q_dim}")
    return xs


def is_ef_standard(q: HPolyhedron, p: Polyhedron, x_coords: Sequence[int]) -> EFVerdict:
    """Projection test via Fourier-Motzkin elimination of the non-x coordinates."""
    xs = _x_coords(q.dim, p.dim, x_coords)
    proj = fourier_motzkin(q, xs)
    w = inclusion_witness(proj, p)
    if w is None:
        w = inclusion_witness(p, proj)
    return EFVerdict(STANDARD, w is None, w)


def _lift_system(q: HPolyhedron, xs: list[int], x: Sequence[Fraction], recession: bool) -> HPolyhedron:
    """Constraints on the non-x coordinates of Q with x held fixed."""
    ys = [c for c in range(q.dim) if c not in set(xs)]
    rows = []
    for r in q.rows:
        fixed = sum((r.coeffs[c] * v for c, v in zip(xs, x)), Fraction(0))
        rhs = (0 if recession else r.rhs) - fixed
        rows.append(Row(tuple(r.coeffs[c] for c in ys), r.rel, rhs))
    return HPolyhedron(len(ys), rows)


def lifts(q: HPolyhedron, x_coords: Sequence[int], x: Sequence) -> bool:
    """True when some completion of ``x`` lies in ``q``."""
    xs = list(x_coords)
    return find_point(_lift_system(q, xs, vec(x), False)) is not None


def _lifts_direction(q: HPolyhedron, xs: list[int], d: Sequence[Fraction]) -> bool:
    return find_point(_lift_system(q, xs, d, True)) is not None


def is_ef_exists(q: HPolyhedron, p: Polyhedron, x_coords: Sequence[int]) -> EFVerdict:
    """Biconditional test without projecting Q.

    Forward: generators of Q, restricted to x, must stay inside P.
    Backward: every generator of P must lift into Q (exact LPs).
    """
    xs = _x_coords(q.dim, p.dim, x_coords)
    vq = enumerate_generators(q)
    vp = as_vrep(p)
    hp = as_hrep(p)

    def pick(g):
        return tuple(g[c] for c in xs)

    if not vq.is_empty:
        shadow = VPolyhedron(p.dim, tuple(pick(v) for v in vq.vertices),
                             tuple(pick(r) for r in vq.rays),
                             tuple(pick(l) for l in vq.lineality))
        w = inclusion_witness(shadow, hp)
        if w is not None:
            return EFVerdict(FIORINI_EXISTS, False, w)
    for v in vp.vertices:
        if not lifts(q, xs, v):
            return EFVerdict(FIORINI_EXISTS, False, v)
    base = vp.vertices[0] if vp.vertices else None
    directions = list(vp.rays) + list(vp.lineality) + [tuple(-x for x in l) for l in vp.lineality]
    for d in directions:
        if not _lifts_direction(q, xs, d):
            # walk far enough along d that no completion survives
            t = Fraction(1)
            while lifts(q, xs, tuple(b + t * x for b, x in zip(base, d))):
                t *= 2
            return EFVerdict(FIORINI_EXISTS, False, tuple(b + t * x for b, x in zip(base, d)))
    return EFVerdict(FIORINI_EXISTS, True)


def image_under_map(lmap: LinearMap, q: Polyhedron) -> VPolyhedron:
    """Canonical generator form of the image of ``q``."""
    if lmap.source_dim != q.dim:
        raise DimensionError(f"map from dimension {lmap.source_dim} applied to dimension {q.dim}")
    vq = as_vrep(q)
    if vq.is_empty:
        return VPolyhedron.empty(lmap.target_dim)
    rays = [r for r in (lmap.linear_part(r) for r in vq.rays) if any(r)]
    lin = [l for l in (lmap.linear_part(l) for l in vq.lineality) if any(l)]
    raw = VPolyhedron(lmap.target_dim, tuple(lmap(v) for v in vq.vertices), tuple(rays), tuple(lin))
    return canonical_v(raw)


def is_ef_linear_map(q: Polyhedron, p: Polyhedron, lmap: LinearMap) -> EFVerdict:
    if lmap.target_dim != p.dim:
        raise DimensionError(f"map into dimension {lmap.target_dim}, polyhedron in {p.dim}")
    image = image_under_map(lmap, q)
    if polyhedra_equal(image, p):
        return EFVerdict(FIORINI_MAP, True, lmap)
    w = inclusion_witness(image, p) or inclusion_witness(p, image)
    return EFVerdict(FIORINI_MAP, False, w)


def fit_linear_map(pairs: Sequence[tuple[Sequence, Sequence]]) -> LinearMap | None:
    """Linear map sending every source to its target, or None if inconsistent.

    Underdetermined rows take the particular solution of the elimination.
    """
    if not pairs:
        raise ValueError("fit_linear_map needs at least one pair")
    sources = [vec(s) for s, _ in pairs]
    targets = [vec(t) for _, t in pairs]
    sdim, tdim = len(sources[0]), len(targets[0])
    if any(len(s) != sdim for s in sources) or any(len(t) != tdim for t in targets):
        raise DimensionError("inconsistent pair dimensions")
    smat = RatMatrix.from_rows(sources, cols=sdim)
    rows = []
    for i in range(tdim):
        sol = solve_linear(smat, [t[i] for t in targets])
        if sol.kind == "none":
            return None
        rows.append(sol.particular)
    return LinearMap(RatMatrix.from_rows(rows, cols=sdim))


def is_degenerate_ef(q: HPolyhedron, x_coords: Sequence[int]) -> bool:
    """True when the minimal description of ``q`` never mentions the x-coordinates."""
    xs = list(x_coords)
    if any(not 0 <= c < q.dim for c in xs):
        raise DimensionError(f"invalid x-coordinates {xs} for dimension {q.dim}")
    minimal = remove_redundancy(q)
    return all(r.coeffs[c] == 0 for r in minimal.rows for c in xs)


def count_inequalities(h: HPolyhedron, convention: str = EQ_AS_TWO):
    """Inequality count of a description.

    ``eq_as_two`` returns one integer with each equality counted as two
    inequalities; ``eq_separate`` returns ``(inequalities, equalities)``.
    """
    n_eq = sum(1 for r in h.rows if r.rel == EQ)
    n_le = len(h.rows) - n_eq
    if convention == EQ_AS_TWO:
        return n_le + 2 * n_eq
    if convention == EQ_SEPARATE:
        return n_le, n_eq
    raise ValueError(f"unknown counting convention {convention!r}")
