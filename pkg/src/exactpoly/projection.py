"""Coordinate projections: Fourier-Motzkin on H-reps, dropping coordinates on V-reps."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exact_arith import DimensionError, primitive_integer
from .polyhedron import canonical_v
from .representations import EQ, LE, HPolyhedron, Row, VPolyhedron


def _check_keep(keep: Sequence[int], dim: int) -> list[int]:
    keep = list(keep)
    if len(set(keep)) != len(keep) or any(not 0 <= k < dim for k in keep):
        raise DimensionError(f"invalid coordinate selection {keep} for dimension {dim}")
    return keep


def _norm(coeffs: list[Fraction], rhs: Fraction, rel: str):
    ints = primitive_integer(coeffs + [rhs])
    if rel == EQ:
        first = next((x for x in ints if x != 0), 0)
        if first < 0:
            ints = tuple(-x for x in ints)
    return list(ints[:-1]), ints[-1]


def _prune(rows: list[tuple[list, int]]) -> list[tuple[list, int]]:
    """Drop trivially true rows and keep the tightest of parallel rows."""
    best: dict[tuple, int] = {}
    infeasible = False
    for coeffs, rhs in rows:
        if not any(coeffs):
            if rhs < 0:
                infeasible = True
            continue
        key = tuple(coeffs)
        if key not in best or rhs < best[key]:
            best[key] = rhs
    if infeasible:
        width = len(rows[0][0])
        return [([0] * width, -1)]
    return [(list(k), v) for k, v in sorted(best.items())]


def fourier_motzkin(h: HPolyhedron, keep: Sequence[int]) -> HPolyhedron:
    """Project ``h`` onto the coordinates ``keep`` (in the order given).

    Equalities are used for substitution first. Remaining coordinates are
    eliminated in order of fewest positive-times-negative row pairs, with
    parallel-row and trivial-row pruning after every step.
    """
    keep = _check_keep(keep, h.dim)
    drop = [c for c in range(h.dim) if c not in set(keep)]
    eqs = [_norm(list(r.coeffs), r.rhs, EQ) for r in h.rows if r.rel == EQ]
    ineqs = [_norm(list(r.coeffs), r.rhs, LE) for r in h.rows if r.rel == LE]

    # substitution through equalities
    remaining = list(drop)
    progress = True
    while progress:
        progress = False
        for c in remaining:
            src = next((e for e in eqs if e[0][c] != 0), None)
            if src is None:
                continue
            eqs.remove(src)
            a, b = src
            p = a[c]
            sign = 1 if p > 0 else -1

            def subst(row, rel):
                coeffs, rhs = row
                f = coeffs[c]
                if f == 0:
                    return row
                new = [abs(p) * x - sign * f * y for x, y in zip(coeffs, a)]
                return _norm(new, abs(p) * rhs - sign * f * b, rel)

            eqs = [subst(e, EQ) for e in eqs]
            ineqs = [subst(r, LE) for r in ineqs]
            bad = [e for e in eqs if not any(e[0]) and e[1] != 0]
            eqs = [e for e in eqs if any(e[0])]
            if bad:
                ineqs.append(([0] * h.dim, -1))
            remaining.remove(c)
            progress = True
            break
    ineqs = _prune(ineqs) if ineqs else []

    while remaining:
        def cost(c):
            pos = sum(1 for r in ineqs if r[0][c] > 0)
            neg = sum(1 for r in ineqs if r[0][c] < 0)
            return (pos * neg, c)
        c = min(remaining, key=cost)
        remaining.remove(c)
        pos = [r for r in ineqs if r[0][c] > 0]
        neg = [r for r in ineqs if r[0][c] < 0]
        out = [r for r in ineqs if r[0][c] == 0]
        for pa, pb in pos:
            for na, nb in neg:
                fp, fn = pa[c], -na[c]
                coeffs = [fn * x + fp * y for x, y in zip(pa, na)]
                out.append(_norm(coeffs, fn * pb + fp * nb, LE))
        ineqs = _prune(out) if out else []

    rows = [Row([e[0][k] for k in keep], EQ, e[1]) for e in eqs]
    rows += [Row([r[0][k] for k in keep], LE, r[1]) for r in ineqs]
    names = tuple(h.coord_names[k] for k in keep) if h.coord_names else None
    return HPolyhedron(len(keep), tuple(rows), names)


def project_v(v: VPolyhedron, keep: Sequence[int]) -> VPolyhedron:
    """Canonical generator form of the coordinate projection of ``v``."""
    keep = _check_keep(keep, v.dim)
    if v.is_empty:
        return VPolyhedron.empty(len(keep))

    def pick(p):
        return tuple(p[k] for k in keep)

    return canonical_v(VPolyhedron(
        len(keep),
        tuple(pick(p) for p in v.vertices),
        tuple(r for r in (pick(r) for r in v.rays) if any(r)),
        tuple(l for l in (pick(l) for l in v.lineality) if any(l)),
    ))
