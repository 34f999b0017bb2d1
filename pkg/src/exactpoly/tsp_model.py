"""Tours rooted at city 0 and the assignment (travel-times) polytope.

A tour on cities ``0..n-1`` is the visiting order ``(a_1, ..., a_{n-1})`` of
the cities ``1..n-1``; city 0 opens and closes it. Its assignment matrix has
``w[i][s] = 1`` exactly when city ``i`` is visited at time ``s``.

Coordinates of the assignment polytope are row-major:
``w_(i,s)`` sits at index ``(i-1)*(n-1) + (s-1)``. Travel-leg vectors index
the arcs ``(i, j)``, ``i != j``, in lexicographic order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .polyhedron import enumerate_generators
from .representations import EQ, LE, HPolyhedron, Row

DEFAULT_TOUR_CAP = 8


class InvalidTourError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Tour:
    n: int
    order: tuple

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(c) for c in self.order))
        if self.n < 2:
            raise InvalidTourError(f"a tour needs at least 2 cities, got n={self.n}")
        if sorted(self.order) != list(range(1, self.n)):
            raise InvalidTourError(f"{self.order} is not a permutation of 1..{self.n - 1}")

    def cities(self) -> tuple:
        return (0,) + self.order + (0,)

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.cities())

    @classmethod
    def parse(cls, text: str) -> "Tour":
        cities = [int(t) for t in text.split()]
        if len(cities) < 3 or cities[0] != 0 or cities[-1] != 0:
            raise InvalidTourError(f"tour must start and end at city 0: {text!r}")
        return cls(len(cities) - 1, tuple(cities[1:-1]))


@dataclass(frozen=True)
class AssignmentMatrix:
    """``w[i-1][s-1]`` for city ``i`` and time ``s``."""

    n: int
    w: tuple

    def __post_init__(self):
        m = self.n - 1
        w = tuple(tuple(Fraction(x) for x in row) for row in self.w)
        if len(w) != m or any(len(row) != m for row in w):
            raise ValueError(f"assignment matrix must be {m}x{m}")
        object.__setattr__(self, "w", w)

    def is_permutation(self) -> bool:
        m = self.n - 1
        if any(x not in (0, 1) for row in self.w for x in row):
            return False
        rows_ok = all(sum(row) == 1 for row in self.w)
        cols_ok = all(sum(self.w[i][s] for i in range(m)) == 1 for s in range(m))
        return rows_ok and cols_ok

    def flat(self) -> tuple:
        return tuple(x for row in self.w for x in row)

    @classmethod
    def from_flat(cls, n: int, values) -> "AssignmentMatrix":
        m = n - 1
        values = tuple(values)
        return cls(n, tuple(values[i * m:(i + 1) * m] for i in range(m)))


@dataclass(frozen=True)
class TravelLegVector:
    n: int
    x: tuple

    def arcs_used(self) -> list[tuple[int, int]]:
        return [a for a, v in zip(arc_order(self.n), self.x) if v == 1]


def ap_index(n: int, city: int, time: int) -> int:
    return (city - 1) * (n - 1) + (time - 1)


def arc_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def tour_to_assignment(t: Tour) -> AssignmentMatrix:
    m = t.n - 1
    w = [[0] * m for _ in range(m)]
    for s, city in enumerate(t.order, start=1):
        w[city - 1][s - 1] = 1
    return AssignmentMatrix(t.n, tuple(tuple(r) for r in w))


def assignment_to_tour(w: AssignmentMatrix) -> Tour:
    if not w.is_permutation():
        raise InvalidTourError("assignment matrix is not a 0/1 permutation matrix")
    m = w.n - 1
    order = [next(i + 1 for i in range(m) if w.w[i][s] == 1) for s in range(m)]
    return Tour(w.n, tuple(order))


def build_ap_hrep(n: int) -> HPolyhedron:
    """Assignment polytope over ``(n-1)^2`` coordinates."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    m = n - 1
    size = m * m
    rows = []
    for i in range(1, n):
        coeffs = [0] * size
        for s in range(1, n):
            coeffs[ap_index(n, i, s)] = 1
        rows.append(Row(coeffs, EQ, 1))
    for s in range(1, n):
        coeffs = [0] * size
        for i in range(1, n):
            coeffs[ap_index(n, i, s)] = 1
        rows.append(Row(coeffs, EQ, 1))
    for k in range(size):
        rows.append(Row([-int(j == k) for j in range(size)], LE, 0))
    names = tuple(f"w{i}_{s}" for i in range(1, n) for s in range(1, n))
    return HPolyhedron(size, tuple(rows), names)


def tour_to_tl_vector(t: Tour) -> TravelLegVector:
    legs = set(zip(t.cities()[:-1], t.cities()[1:]))
    return TravelLegVector(t.n, tuple(int(a in legs) for a in arc_order(t.n)))


def enumerate_tours(n: int, cap: int = DEFAULT_TOUR_CAP) -> list[Tour]:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if n > cap:
        raise ValueError(f"n={n} exceeds the tour cap {cap}")
    return [Tour(n, p) for p in permutations(range(1, n))]


@dataclass
class Theorem1Report:
    n: int
    vertex_count: int
    expected_count: int
    all_integral: bool
    all_permutations: bool
    bijection: bool
    round_trips: bool
    details: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return (self.vertex_count == self.expected_count and self.all_integral
                and self.all_permutations and self.bijection and self.round_trips)


def verify_theorem1(n: int, cap: int = DEFAULT_TOUR_CAP) -> Theorem1Report:
    """Vertices of the assignment polytope versus rooted tours, by enumeration."""
    tours = enumerate_tours(n, cap)
    v = enumerate_generators(build_ap_hrep(n))
    verts = list(v.vertices)
    integral = all(x.denominator == 1 for p in verts for x in p) and not v.rays and not v.lineality
    mats = [AssignmentMatrix.from_flat(n, p) for p in verts]
    perms = all(m.is_permutation() for m in mats)
    from_tours = {tour_to_assignment(t).flat() for t in tours}
    bijection = perms and set(verts) == from_tours and len(from_tours) == len(tours)
    round_trips = all(assignment_to_tour(tour_to_assignment(t)) == t for t in tours)
    if perms:
        round_trips = round_trips and all(
            tour_to_assignment(assignment_to_tour(m)).flat() == m.flat() for m in mats)
    return Theorem1Report(n, len(verts), len(tours), integral, perms, bijection, round_trips,
                          {"rays": len(v.rays), "lineality": len(v.lineality)})


def dummy_extension_collisions(n: int) -> list[tuple[tuple, tuple]]:
    """Distinct dummy-rooted assignments that induce the same closed tour.

    With a dummy city as the root, all ``n`` real cities get times
    ``1..n``. Each assignment, read as a path and closed back on itself,
    gives a travel-leg vector; the returned pairs are assignments (as
    visiting orders) that differ but yield identical travel legs.
    """
    seen: dict[tuple, tuple] = {}
    clashes = []
    for order in permutations(range(n)):
        legs = set(zip(order, order[1:] + order[:1]))
        key = tuple(int(a in legs) for a in arc_order(n))
        if key in seen:
            clashes.append((seen[key], order))
        else:
            seen[key] = order
    return clashes
