"""Membership, conversion, redundancy removal and equality of polyhedra."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import dd
from .exact_arith import (DimensionError, dot, independent_rows, null_space,
                          primitive_integer, rank, rref, solve_linear, vec, RatMatrix)
from .lp import find_point, simplex_solve
from .representations import EQ, LE, HPolyhedron, Polyhedron, Row, VPolyhedron

__all__ = [
    "HPolyhedron", "VPolyhedron", "Row",
    "membership_h", "membership_v", "contains", "enumerate_generators", "to_hrep",
    "canonical_v", "remove_redundancy", "polyhedra_equal", "inclusion_witness",
    "affine_hull", "in_recession_cone", "EmptyPolyhedronError",
]


class EmptyPolyhedronError(ValueError):
    pass


def _check_dim(point, dim: int) -> tuple:
    p = vec(point)
    if len(p) != dim:
        raise DimensionError(f"point of length {len(p)} in dimension {dim}")
    return p


def membership_h(point: Sequence, h: HPolyhedron) -> bool:
    p = _check_dim(point, h.dim)
    return all(r.satisfied_by(p) for r in h.rows)


def _combination_system(v: VPolyhedron, target: Sequence[Fraction], with_vertices: bool) -> HPolyhedron:
    # unknowns: vertex weights, ray weights, lineality coefficients
    nv = len(v.vertices) if with_vertices else 0
    nr, nl = len(v.rays), len(v.lineality)
    size = nv + nr + nl
    gens = (list(v.vertices) if with_vertices else []) + list(v.rays) + list(v.lineality)
    rows = []
    for c in range(v.dim):
        rows.append(Row(tuple(g[c] for g in gens), EQ, target[c]))
    if with_vertices:
        rows.append(Row(tuple([1] * nv + [0] * (nr + nl)), EQ, 1))
    for k in range(nv + nr):
        rows.append(Row(tuple(-int(i == k) for i in range(size)), LE, 0))
    return HPolyhedron(size, rows)


def membership_v(point: Sequence, v: VPolyhedron) -> bool:
    """Exact LP test for ``point ∈ conv(V) + cone(R) + span(L)``."""
    p = _check_dim(point, v.dim)
    if v.is_empty:
        return False
    return find_point(_combination_system(v, p, True)) is not None


def contains(poly: Polyhedron, point: Sequence) -> bool:
    if isinstance(poly, HPolyhedron):
        return membership_h(point, poly)
    return membership_v(point, poly)


def in_recession_cone(direction: Sequence, poly: Polyhedron) -> bool:
    d = _check_dim(direction, poly.dim)
    if isinstance(poly, HPolyhedron):
        for r in poly.rows:
            s = dot(r.coeffs, d)
            if (r.rel == EQ and s != 0) or (r.rel == LE and s > 0):
                return False
        return True
    if all(x == 0 for x in d):
        return True
    return find_point(_combination_system(poly, d, False)) is not None


# -- conversions -------------------------------------------------------------

def _reduce_mod_lineality(point: Sequence[Fraction], lin_rref: list[tuple]) -> tuple:
    p = list(point)
    for row in lin_rref:
        piv = next(i for i, x in enumerate(row) if x != 0)
        f = p[piv]
        if f:
            p = [a - f * b for a, b in zip(p, row)]
    return tuple(p)


def _canonicalize(dim: int, vertices, rays, lineality) -> VPolyhedron:
    lin = rref(lineality) if lineality else []
    verts = sorted({_reduce_mod_lineality(v, lin) for v in vertices})
    rs = set()
    for r in rays:
        r = _reduce_mod_lineality(r, lin)
        if any(r):
            rs.add(tuple(Fraction(x) for x in primitive_integer(r)))
    return VPolyhedron(dim, tuple(verts), tuple(sorted(rs)), tuple(lin))


def enumerate_generators(h: HPolyhedron) -> VPolyhedron:
    """Canonical V-representation of ``h``; empty polyhedra have no vertices.

    Equalities are eliminated by null-space substitution, the inequalities
    are homogenized, and the resulting cone goes through double description.
    """
    d = h.dim
    eqs = h.equalities
    if eqs:
        sol = solve_linear(RatMatrix.from_rows([r.coeffs for r in eqs], cols=d),
                           [r.rhs for r in eqs])
        if sol.kind == "none":
            return VPolyhedron.empty(d)
        x0 = sol.particular
        basis = list(sol.null_basis)
    else:
        x0 = (Fraction(0),) * d
        basis = [tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d)]
    k = len(basis)
    # cone in (z, t): t*b' - (A N) z >= 0 and t >= 0
    g_rows = []
    for r in h.inequalities:
        an = [dot(r.coeffs, col) for col in basis]
        b2 = r.rhs - dot(r.coeffs, x0)
        g_rows.append([-x for x in an] + [b2])
    g_rows.append([Fraction(0)] * k + [Fraction(1)])
    rays, lin = dd.cone_generators(g_rows, k + 1)

    def lift(z, t):
        return tuple(x0[c] * t + sum((z[i] * basis[i][c] for i in range(k)), Fraction(0))
                     for c in range(d))

    vertices, out_rays = [], []
    for u in rays:
        t = u[k]
        if t > 0:
            vertices.append(tuple(x / t for x in lift([Fraction(y) for y in u[:k]], Fraction(t))))
        else:
            out_rays.append(lift([Fraction(y) for y in u[:k]], Fraction(0)))
    if not vertices:
        return VPolyhedron.empty(d)
    lineality = [lift([Fraction(y) for y in u[:k]], Fraction(0)) for u in lin]
    return _canonicalize(d, vertices, out_rays, lineality)


def to_hrep(v: VPolyhedron) -> HPolyhedron:
    """Minimal H-representation of a generator-form polyhedron.

    Valid inequalities ``a·x <= b`` form the cone of ``(a, b)`` with
    ``b - a·v >= 0`` on vertices, ``-a·r >= 0`` on rays and ``a·l = 0`` on
    lineality; its extreme rays are facets and its lineality gives the
    equalities.
    """
    d = v.dim
    if v.is_empty:
        return HPolyhedron(d, (Row((0,) * d, LE, -1),))
    g_rows = []
    for p in v.vertices:
        g_rows.append([-x for x in p] + [Fraction(1)])
    for r in v.rays:
        g_rows.append([-x for x in r] + [Fraction(0)])
    for l in v.lineality:
        g_rows.append([-x for x in l] + [Fraction(0)])
        g_rows.append(list(l) + [Fraction(0)])
    rays, lin = dd.cone_generators(g_rows, d + 1)
    rows = []
    for u in sorted(_sign_normal(u) for u in lin):
        if any(u[:d]):
            rows.append(Row(u[:d], EQ, u[d]))
    for u in sorted(rays):
        if any(u[:d]):
            rows.append(Row(u[:d], LE, u[d]))
    return HPolyhedron(d, _independent_equalities(rows, d))


def _sign_normal(u: tuple) -> tuple:
    first = next((x for x in u if x != 0), 0)
    return tuple(-x for x in u) if first < 0 else tuple(u)


def _independent_equalities(rows: list[Row], d: int) -> tuple:
    eqs = [r for r in rows if r.rel == EQ]
    keep = [eqs[i] for i in independent_rows([list(r.coeffs) + [r.rhs] for r in eqs])] if eqs else []
    return tuple(keep) + tuple(r for r in rows if r.rel == LE)


def canonical_v(v: VPolyhedron) -> VPolyhedron:
    """Minimal, sorted generator form of the same set."""
    if v.is_empty:
        return VPolyhedron.empty(v.dim)
    return enumerate_generators(to_hrep(v))


def as_vrep(poly: Polyhedron) -> VPolyhedron:
    return enumerate_generators(poly) if isinstance(poly, HPolyhedron) else poly


def as_hrep(poly: Polyhedron) -> HPolyhedron:
    return poly if isinstance(poly, HPolyhedron) else to_hrep(poly)


# -- redundancy --------------------------------------------------------------

def _normalized(row: Row) -> Row:
    ints = primitive_integer(list(row.coeffs) + [row.rhs])
    if row.rel == EQ:
        ints = _sign_normal(ints)
    return Row(ints[:-1], row.rel, ints[-1])


def remove_redundancy(h: HPolyhedron) -> HPolyhedron:
    """Minimal subsystem of ``h`` defining the same set.

    Inequalities tight on the whole set become equalities; an inequality is
    dropped when maximizing its left side over the remaining rows cannot
    exceed its right side. Row scaling is normalized to coprime integers.
    """
    if find_point(h) is None:
        raise EmptyPolyhedronError("cannot minimize an empty polyhedron")
    eqs = list(h.equalities)
    ineqs = []
    for r in h.inequalities:
        if r.is_trivial():
            continue
        out = simplex_solve(h, r.coeffs, "min")
        if out.optimal and out.value == r.rhs:
            eqs.append(Row(r.coeffs, EQ, r.rhs))
        else:
            ineqs.append(r)
    if eqs:
        idx = independent_rows([list(r.coeffs) + [r.rhs] for r in eqs])
        eqs = [_normalized(eqs[i]) for i in idx]
    kept = list(ineqs)
    i = 0
    while i < len(kept):
        others = HPolyhedron(h.dim, eqs + kept[:i] + kept[i + 1:])
        out = simplex_solve(others, kept[i].coeffs, "max")
        if out.optimal and out.value <= kept[i].rhs:
            kept.pop(i)
        else:
            i += 1
    return h.with_rows(eqs + [_normalized(r) for r in kept])


# -- equality ----------------------------------------------------------------

def _witness_from_direction(base: tuple, d: tuple, target: HPolyhedron) -> tuple | None:
    """Point ``base + t*d`` outside ``target``; equality violations first."""
    for rel in (EQ, LE):
        for r in target.rows:
            if r.rel != rel:
                continue
            s = dot(r.coeffs, d)
            if (rel == EQ and s != 0) or (rel == LE and s > 0):
                gap = r.rhs - dot(r.coeffs, base)
                if rel == EQ:
                    t = Fraction(1) if gap == 0 else abs(gap / s) + 1
                    if dot(r.coeffs, base) + t * s == r.rhs:
                        t += 1
                else:
                    t = max(Fraction(1), gap / s + 1)
                return tuple(b + t * x for b, x in zip(base, d))
    return None


def inclusion_witness(a: Polyhedron, b: Polyhedron) -> tuple | None:
    """A point of ``a`` outside ``b``, or None when ``a ⊆ b``.

    Generators of ``a`` are checked against ``b``: directions first, so the
    witness is preferably far outside ``b``'s affine hull, then vertices.
    """
    if a.dim != b.dim:
        raise DimensionError(f"dimensions differ: {a.dim} vs {b.dim}")
    va = as_vrep(a)
    if va.is_empty:
        return None
    hb = as_hrep(b)
    base = va.vertices[0]
    directions = list(va.lineality) + [tuple(-x for x in l) for l in va.lineality] + list(va.rays)
    for d in directions:
        if not in_recession_cone(d, hb):
            w = _witness_from_direction(base, d, hb)
            if w is not None and not membership_h(w, hb):
                return w
    for p in va.vertices:
        if not membership_h(p, hb):
            return p
    return None


def _subset(a: Polyhedron, b: Polyhedron) -> bool:
    va = as_vrep(a)
    if va.is_empty:
        return True
    if isinstance(b, VPolyhedron) and b.is_empty:
        return False
    if not all(contains(b, p) for p in va.vertices):
        return False
    if not all(in_recession_cone(r, b) for r in va.rays):
        return False
    for l in va.lineality:
        if not (in_recession_cone(l, b) and in_recession_cone(tuple(-x for x in l), b)):
            return False
    return True


def polyhedra_equal(a: Polyhedron, b: Polyhedron) -> bool:
    """Set equality by mutual generator-wise inclusion."""
    if a.dim != b.dim:
        raise DimensionError(f"dimensions differ: {a.dim} vs {b.dim}")
    return _subset(a, b) and _subset(b, a)


def affine_hull(v: VPolyhedron) -> list[Row]:
    """Independent equalities cutting out the affine hull of ``v``."""
    if v.is_empty:
        raise EmptyPolyhedronError("the empty set has no affine hull")
    base = v.vertices[0]
    dirs = [tuple(p - q for p, q in zip(x, base)) for x in v.vertices[1:]]
    dirs += list(v.rays) + list(v.lineality)
    normals = null_space(dirs, v.dim) if dirs and rank(dirs) else [
        tuple(Fraction(int(i == j)) for j in range(v.dim)) for i in range(v.dim)]
    rows = []
    for nvec in normals:
        ints = primitive_integer(nvec)
        rows.append(_normalized(Row(ints, EQ, dot(ints, base))))
    return rows
