"""Exact rational polyhedral computation.

H/V conversion by double description, Fourier-Motzkin projection, an exact
simplex solver, extended-formulation checks, the assignment polytope of
rooted tours, and affine bridges between variable spaces.
"""
from .exact_arith import RatMatrix, gram_inverse, mat_mul, parse_rational, rank, solve_linear
from .lp import LPOutcome, simplex_solve
from .polyhedron import (affine_hull, enumerate_generators, membership_h, membership_v,
                         polyhedra_equal, remove_redundancy, to_hrep)
from .projection import fourier_motzkin, project_v
from .representations import HPolyhedron, Row, VPolyhedron, eq, ge, le

__all__ = [
    "RatMatrix", "gram_inverse", "mat_mul", "parse_rational", "rank", "solve_linear",
    "LPOutcome", "simplex_solve",
    "affine_hull", "enumerate_generators", "membership_h", "membership_v",
    "polyhedra_equal", "remove_redundancy", "to_hrep",
    "fourier_motzkin", "project_v",
    "HPolyhedron", "Row", "VPolyhedron", "eq", "ge", "le",
]

__version__ = "0.1.0"
