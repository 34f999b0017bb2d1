import random
from fractions import Fraction
from itertools import combinations

import pytest

from exactpoly.exact_arith import RatMatrix, rank, solve_linear
from exactpoly.representations import HPolyhedron, Row, ge, le


def brute_force_vertices(h: HPolyhedron) -> set:
    """Vertices by trying every square subsystem of tight rows.

    Independent of the double description code: plain enumeration plus an
    exact feasibility check of each candidate.
    """
    d = h.dim
    eqs = [r for r in h.rows if r.rel == "="]
    ineqs = [r for r in h.rows if r.rel == "<="]
    found = set()
    eq_rank = rank([r.coeffs for r in eqs]) if eqs else 0
    need = d - eq_rank
    for subset in combinations(ineqs, need):
        rows = eqs + list(subset)
        mat = RatMatrix.from_rows([r.coeffs for r in rows], cols=d) if rows else RatMatrix(0, d, ())
        if rank(mat) != d:
            continue
        sol = solve_linear(mat, [r.rhs for r in rows])
        if sol.kind != "unique":
            continue
        if all(r.satisfied_by(sol.particular) for r in h.rows):
            found.add(sol.particular)
    return found


def random_bounded(rng: random.Random, dim: int, max_rows: int = 12) -> HPolyhedron:
    """Random polytope: a box plus random cuts, at most ``max_rows`` rows."""
    rows = []
    for k in range(dim):
        e = [int(i == k) for i in range(dim)]
        rows.append(le(e, rng.randint(1, 4)))
        rows.append(ge(e, -rng.randint(0, 4)))
    for _ in range(rng.randint(0, max_rows - 2 * dim)):
        a = [rng.randint(-3, 3) for _ in range(dim)]
        if any(a):
            rows.append(le(a, rng.randint(0, 6)))
    return HPolyhedron(dim, tuple(rows))


def random_general(rng: random.Random, dim: int, nrows: int) -> HPolyhedron:
    """Random system that may be unbounded, lower-dimensional or empty."""
    rows = []
    for _ in range(nrows):
        a = [rng.randint(-2, 2) for _ in range(dim)]
        rel = "=" if rng.random() < 0.15 else "<="
        rows.append(Row(a, rel, rng.randint(-3, 3)))
    return HPolyhedron(dim, tuple(rows))


def random_point(rng: random.Random, dim: int, spread: int = 6) -> tuple:
    return tuple(Fraction(rng.randint(-spread * 4, spread * 4), rng.randint(1, 4)) for _ in range(dim))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import ACCEPTANCE_LINES
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
