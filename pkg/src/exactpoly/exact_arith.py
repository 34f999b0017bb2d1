"""Exact rational scalars, vectors and matrices.

Scalars are :class:`fractions.Fraction`; vectors are tuples of fractions.
Elimination is done fraction-free (Bareiss) on integer-scaled copies of the
input so intermediate entries stay small.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)(/[+-]?\d+)?$")


class DimensionError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"``, ``"p/q"`` or an exact decimal such as ``"22.5"``."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if "." in num:
            raise ValueError(f"not a rational literal: {text!r}")
        if int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(s)


def to_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        # floats are accepted only through their shortest decimal repr
        return Fraction(repr(value))
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def vec(values: Iterable) -> tuple:
    return tuple(to_rational(v) for v in values)


def format_rational(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def primitive_integer(values: Sequence[Fraction]) -> tuple[int, ...]:
    """Positive multiple of ``values`` with coprime integer entries."""
    den = 1
    for v in values:
        den = lcm(den, Fraction(v).denominator)
    ints = [int(Fraction(v) * den) for v in values]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [vec(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged matrix rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def column(cls, values: Sequence) -> "RatMatrix":
        return cls.from_rows([[v] for v in values], cols=1)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[tuple]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix.from_rows([self.col(j) for j in range(self.cols)], cols=self.rows)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        return mat_mul(self, other)

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for {self.cols} columns")
        v = vec(v)
        return tuple(dot(self.row(i), v) for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bcols = [b.col(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        r = a.row(i)
        out.extend(dot(r, c) for c in bcols)
    return RatMatrix(a.rows, b.cols, tuple(out))


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            den = lcm(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in r])
    return out


def bareiss_echelon(rows: Sequence[Sequence], ncols: int | None = None):
    """Fraction-free row echelon form.

    Returns ``(echelon_rows, pivot_columns)``; the echelon rows are integer
    rows, each row scaled by a positive factor relative to plain Gaussian
    elimination, so the solution set of the homogeneous system is unchanged.
    ``ncols`` limits the columns used for pivoting (the rest are carried).
    """
    m = _integer_rows(rows)
    if not m:
        return [], []
    width = len(m[0])
    ncols = width if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p < 0:
            # keep the Bareiss divisor positive
            m[r] = [-x for x in m[r]]
            p = -p
        for i in range(r + 1, len(m)):
            f = m[i][c]
            m[i] = [(p * m[i][k] - f * m[r][k]) // prev for k in range(width)]
        prev = p
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(a: RatMatrix | Sequence[Sequence]) -> int:
    rows = a.to_rows() if isinstance(a, RatMatrix) else a
    return len(bareiss_echelon(rows)[1])


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of :func:`solve_linear` for a single right-hand side."""

    kind: str  # "unique" | "infinite" | "none"
    particular: tuple | None = None
    null_basis: tuple = ()


def _solve_rows(a_rows: list[tuple], rhs: list[Fraction], ncols: int) -> LinearSolution:
    aug = [list(r) + [b] for r, b in zip(a_rows, rhs)]
    if not aug:
        basis = tuple(tuple(Fraction(int(i == j)) for i in range(ncols)) for j in range(ncols))
        return LinearSolution("unique" if ncols == 0 else "infinite",
                              tuple(Fraction(0) for _ in range(ncols)), basis)
    ech, pivots = bareiss_echelon(aug, ncols=ncols)
    # a pivot in the rhs column means the system is inconsistent
    if len(bareiss_echelon(aug)[1]) > len(pivots):
        return LinearSolution("none")
    # back substitution to reduced form, with fractions on a small system
    red = [[Fraction(x) for x in row] for row in ech]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        p = red[k][c]
        red[k] = [x / p for x in red[k]]
        for i in range(k):
            f = red[i][c]
            if f:
                red[i] = [x - f * y for x, y in zip(red[i], red[k])]
    x = [Fraction(0)] * ncols
    for k, c in enumerate(pivots):
        x[c] = red[k][ncols]
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -red[k][f]
        basis.append(tuple(v))
    return LinearSolution("unique" if not free else "infinite", tuple(x), tuple(basis))


def solve_linear(a: RatMatrix, rhs: RatMatrix | Sequence) -> LinearSolution:
    """Solve ``a @ x = rhs`` exactly for a single right-hand-side column.

    The verdict is one of ``unique``, ``infinite`` (particular solution plus
    a basis of the null space of ``a``) or ``none``.
    """
    if isinstance(rhs, RatMatrix):
        if rhs.cols != 1:
            raise DimensionError("solve_linear expects a single rhs column")
        b = list(rhs.col(0))
    else:
        b = list(vec(rhs))
    if len(b) != a.rows:
        raise DimensionError(f"rhs of length {len(b)} for {a.rows} rows")
    return _solve_rows(a.to_rows(), b, a.cols)


def null_space(rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Basis of ``{x : rows @ x = 0}``."""
    sol = _solve_rows([vec(r) for r in rows], [Fraction(0)] * len(rows), ncols)
    return list(sol.null_basis)


def inverse(a: RatMatrix) -> RatMatrix | None:
    """Exact inverse, or ``None`` when ``a`` is singular."""
    if a.rows != a.cols:
        raise DimensionError("only square matrices are invertible")
    n = a.rows
    m = [list(a.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return RatMatrix.from_rows([r[n:] for r in m], cols=n)


def gram_inverse(b: RatMatrix) -> RatMatrix | None:
    """``(BᵀB)⁻¹``, or ``None`` when the Gram matrix is singular."""
    bt = b.T
    return inverse(bt @ b)


def independent_rows(rows: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal linearly independent subset, greedy in order."""
    chosen: list[int] = []
    basis: list[tuple] = []
    current = 0
    for i, r in enumerate(rows):
        trial = basis + [tuple(r)]
        k = rank(trial)
        if k > current:
            chosen.append(i)
            basis = trial
            current = k
    return chosen


def rref(rows: Sequence[Sequence]) -> list[tuple]:
    """Reduced row echelon form with zero rows removed."""
    ech, pivots = bareiss_echelon(rows)
    red = [[Fraction(x) for x in row] for row in ech]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        p = red[k][c]
        red[k] = [x / p for x in red[k]]
        for i in range(len(red)):
            if i != k and red[i][c]:
                f = red[i][c]
                red[i] = [x - f * y for x, y in zip(red[i], red[k])]
    return [tuple(r) for r in red]
