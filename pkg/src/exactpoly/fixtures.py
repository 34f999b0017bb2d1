"""Constants of the counterexample pair (P, Q) and the map between them.

P is the segment between two points of R^3; Q is the slab ``2 <= y <= 3``
in R^3 x R that never mentions x. Every check in the verification suite
reads these values from here.
"""
from __future__ import annotations

from fractions import Fraction

from .ef_analysis import LinearMap
from .exact_arith import RatMatrix
from .representations import HPolyhedron, VPolyhedron, eq, ge, le

# segment endpoints
P_VERTICES = ((8, 10, 6), (12, 15, 9))
P_V = VPolyhedron(3, P_VERTICES)

# 2 <= 0·x + y <= 3 over (x1, x2, x3, y)
Q_H = HPolyhedron(4, (ge((0, 0, 0, 1), 2), le((0, 0, 0, 1), 3)),
                  ("x1", "x2", "x3", "y"))
Q_X_COORDS = (0, 1, 2)

# linear map whose image of Q is P: only y matters
PI = LinearMap(RatMatrix.from_rows([
    [0, 0, 0, 4],
    [0, 0, 0, 5],
    [0, 0, 0, 3],
]))

# the larger description of P: 8 inequalities and 1 equality
P_H_DISPLAY = HPolyhedron(3, (
    le((-5, 4, 0), 0),
    eq((0, 3, -5), 0),
    le((3, 0, -4), 0),
    ge((1, 0, 0), 8), le((1, 0, 0), 12),
    ge((0, 1, 0), 10), le((0, 1, 0), 15),
    ge((0, 0, 1), 6), le((0, 0, 1), 9),
), ("x1", "x2", "x3"))

# a point that lifts into Q but is not in P; it breaks 3 x2 - 5 x3 = 0
WITNESS = (Fraction(45, 2), Fraction(-50), Fraction(100))
WITNESS_VIOLATED_ROW = P_H_DISPLAY.rows[1]

# the bridge instance built from the same segment: x = (4, 5, 3) y
SEGMENT_Y = HPolyhedron(1, (ge((1,), 2), le((1,), 3)))
SEGMENT_DIRECTION = (4, 5, 3)
