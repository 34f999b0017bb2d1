"""H- and V-representation value types."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact_arith import DimensionError, dot, to_rational, vec

LE = "<="
EQ = "="


@dataclass(frozen=True)
class Row:
    """One constraint ``coeffs · x  rel  rhs`` with ``rel`` in {``<=``, ``=``}."""

    coeffs: tuple
    rel: str
    rhs: Fraction

    def __post_init__(self):
        if self.rel not in (LE, EQ):
            raise ValueError(f"unknown relation {self.rel!r}")
        object.__setattr__(self, "coeffs", vec(self.coeffs))
        object.__setattr__(self, "rhs", to_rational(self.rhs))

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        lhs = dot(self.coeffs, point)
        return lhs == self.rhs if self.rel == EQ else lhs <= self.rhs

    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def le(coeffs, rhs) -> Row:
    return Row(coeffs, LE, rhs)


def ge(coeffs, rhs) -> Row:
    return Row(tuple(-to_rational(c) for c in coeffs), LE, -to_rational(rhs))


def eq(coeffs, rhs) -> Row:
    return Row(coeffs, EQ, rhs)


@dataclass(frozen=True)
class HPolyhedron:
    """Finite system of linear equalities and inequalities.

    An empty row list denotes the whole space.
    """

    dim: int
    rows: tuple = ()
    coord_names: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for r in self.rows:
            if len(r.coeffs) != self.dim:
                raise DimensionError(
                    f"row with {len(r.coeffs)} coefficients in dimension {self.dim}")
        if self.coord_names is not None:
            object.__setattr__(self, "coord_names", tuple(self.coord_names))
            if len(self.coord_names) != self.dim:
                raise DimensionError("coord_names length differs from dim")

    @property
    def equalities(self) -> list[Row]:
        return [r for r in self.rows if r.rel == EQ]

    @property
    def inequalities(self) -> list[Row]:
        return [r for r in self.rows if r.rel == LE]

    def with_rows(self, rows: Iterable[Row]) -> "HPolyhedron":
        return HPolyhedron(self.dim, tuple(rows), self.coord_names)


@dataclass(frozen=True)
class VPolyhedron:
    """Generator form: ``conv(vertices) + cone(rays) + span(lineality)``.

    A polyhedron with no vertices is the empty set.
    """

    dim: int
    vertices: tuple = ()
    rays: tuple = ()
    lineality: tuple = ()

    def __post_init__(self):
        for name in ("vertices", "rays", "lineality"):
            pts = tuple(vec(p) for p in getattr(self, name))
            for p in pts:
                if len(p) != self.dim:
                    raise DimensionError(f"{name[:-1]} of length {len(p)} in dimension {self.dim}")
            object.__setattr__(self, name, pts)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def is_bounded(self) -> bool:
        return not self.rays and not self.lineality

    @classmethod
    def empty(cls, dim: int) -> "VPolyhedron":
        return cls(dim)

    @classmethod
    def whole_space(cls, dim: int) -> "VPolyhedron":
        basis = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
        return cls(dim, ((0,) * dim,), (), tuple(basis))


Polyhedron = HPolyhedron | VPolyhedron
