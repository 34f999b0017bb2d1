"""Double description method for cones ``{u : G u >= 0}`` over the integers.

The lineality space is split off first; the remaining pointed cone is
handled in coordinates of the orthogonal complement, which keeps every
constraint matrix of full column rank. Adjacency of two rays is decided
combinatorially on bitmasks of tight constraints.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .exact_arith import independent_rows, inverse, null_space, primitive_integer, RatMatrix


def _primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def _idot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def cone_generators(g_rows: Sequence[Sequence], dim: int):
    """Minimal generators of ``{u in R^dim : G u >= 0}``.

    Returns ``(rays, lineality)``: primitive integer extreme rays of the
    pointed part, and an integer basis of the lineality space.
    """
    rows = [primitive_integer(r) for r in g_rows]
    rows = [r for r in rows if any(r)]
    lin = [primitive_integer(v) for v in null_space(rows, dim)] if rows else [
        tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    if not rows:
        return [], lin
    # W: columns spanning the row space of G (orthogonal to the lineality)
    basis_idx = independent_rows(rows)
    w_cols = [rows[i] for i in basis_idx]
    r = len(w_cols)
    h = [tuple(_idot(row, col) for col in w_cols) for row in rows]

    init = independent_rows(h)
    hb = RatMatrix.from_rows([h[i] for i in init], cols=r)
    hinv = inverse(hb)
    rays: list[tuple[int, ...]] = []
    for j in range(r):
        rays.append(primitive_integer(hinv.col(j)))

    order = init + [i for i in range(len(h)) if i not in set(init)]
    processed: list[int] = []

    def zero_mask(v: tuple[int, ...]) -> int:
        mask = 0
        for bit, i in enumerate(processed):
            if _idot(h[i], v) == 0:
                mask |= 1 << bit
        return mask

    processed = list(init)
    masks = [zero_mask(v) for v in rays]

    for i in order[r:]:
        a = h[i]
        vals = [_idot(a, v) for v in rays]
        pos = [k for k, s in enumerate(vals) if s > 0]
        neg = [k for k, s in enumerate(vals) if s < 0]
        zer = [k for k, s in enumerate(vals) if s == 0]
        bit = 1 << len(processed)
        new_rays = [rays[k] for k in pos] + [rays[k] for k in zer]
        new_masks = [masks[k] for k in pos] + [masks[k] | bit for k in zer]
        if neg:
            for p in pos:
                for q in neg:
                    common = masks[p] & masks[q]
                    if bin(common).count("1") < r - 2:
                        continue
                    adjacent = True
                    for k in range(len(rays)):
                        if k != p and k != q and masks[k] & common == common:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    vp, vq = vals[p], -vals[q]
                    comb = _primitive(tuple(vq * x + vp * y for x, y in zip(rays[p], rays[q])))
                    new_rays.append(comb)
                    new_masks.append(common | bit)
        processed.append(i)
        rays, masks = new_rays, new_masks

    out = []
    for v in rays:
        u = [sum(v[k] * w_cols[k][c] for k in range(r)) for c in range(dim)]
        out.append(_primitive(u))
    return out, lin


def to_fractions(v: Sequence[int]) -> tuple:
    return tuple(Fraction(x) for x in v)
