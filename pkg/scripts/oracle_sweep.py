"""Cross-check the solvers against each other on random polytopes.

For each polytope: simplex optimum against the minimum over brute-force
vertices, double description against the same vertex set, the H/V round
trip, and Fourier-Motzkin against projecting the generators.
"""
from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from exactpoly.exact_arith import RatMatrix, rank, solve_linear
from exactpoly.lp import OPTIMAL, simplex_solve
from exactpoly.polyhedron import enumerate_generators, polyhedra_equal, to_hrep
from exactpoly.projection import fourier_motzkin, project_v
from exactpoly.representations import HPolyhedron, ge, le


@dataclass
class OracleConfig:
    seed: int = 7
    polytopes: int = 25
    max_dim: int = 5
    max_rows: int = 12


def random_polytope(rng: random.Random, dim: int, max_rows: int) -> HPolyhedron:
    rows = []
    for k in range(dim):
        e = [int(i == k) for i in range(dim)]
        rows += [le(e, rng.randint(1, 4)), ge(e, -rng.randint(0, 4))]
    for _ in range(rng.randint(0, max_rows - 2 * dim)):
        a = [rng.randint(-3, 3) for _ in range(dim)]
        if any(a):
            rows.append(le(a, rng.randint(0, 6)))
    return HPolyhedron(dim, tuple(rows))


def brute_force_vertices(h: HPolyhedron) -> set:
    found = set()
    for subset in combinations(h.rows, h.dim):
        mat = RatMatrix.from_rows([r.coeffs for r in subset], cols=h.dim)
        if rank(mat) < h.dim:
            continue
        p = solve_linear(mat, [r.rhs for r in subset]).particular
        if all(r.satisfied_by(p) for r in h.rows):
            found.add(p)
    return found


def run(cfg: OracleConfig) -> int:
    rng = random.Random(cfg.seed)
    failures = 0
    start = time.perf_counter()
    for k in range(cfg.polytopes):
        dim = rng.randint(1, cfg.max_dim)
        h = random_polytope(rng, dim, cfg.max_rows)
        verts = brute_force_vertices(h)
        c = [Fraction(rng.randint(-5, 5)) for _ in range(dim)]
        lp = simplex_solve(h, c)
        lp_ok = lp.status == OPTIMAL and lp.value == min(sum(a * b for a, b in zip(c, v)) for v in verts)
        v = enumerate_generators(h)
        dd_ok = set(v.vertices) == verts
        trip_ok = polyhedra_equal(to_hrep(v), h)
        keep = sorted(rng.sample(range(dim), max(1, dim - 1)))
        fm_ok = polyhedra_equal(fourier_motzkin(h, keep), project_v(v, keep))
        ok = lp_ok and dd_ok and trip_ok and fm_ok
        failures += not ok
        print(f"{k:3d} dim={dim} rows={len(h.rows):2d} vertices={len(verts):3d} "
              f"lp={lp_ok} dd={dd_ok} roundtrip={trip_ok} fm={fm_ok}")
    print(f"{cfg.polytopes - failures}/{cfg.polytopes} polytopes agree "
          f"({time.perf_counter() - start:.2f}s)")
    return 1 if failures else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=OracleConfig.seed)
    ap.add_argument("--polytopes", type=int, default=OracleConfig.polytopes)
    ap.add_argument("--max-dim", type=int, default=OracleConfig.max_dim)
    ap.add_argument("--max-rows", type=int, default=OracleConfig.max_rows)
    args = ap.parse_args()
    return run(OracleConfig(args.seed, args.polytopes, args.max_dim, args.max_rows))


if __name__ == "__main__":
    sys.exit(main())
