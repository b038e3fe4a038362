"""Exact linear algebra over the rationals.

``congruence_inertia`` counts eigenvalue signs of a symmetric rational matrix
by symmetric elimination alone (Sylvester's law of inertia), with no
eigenvalue solver anywhere. ``charpoly_interpolation`` recovers a
characteristic polynomial from integer determinants. Both serve as oracles
for the combinatorial formulas in :mod:`uniinertia.inertia`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import NotSymmetricError


@dataclass(frozen=True)
class Inertia:
    """Counts of positive, negative and zero eigenvalues."""

    i_plus: int
    i_minus: int
    i_zero: int

    def __post_init__(self):
        if min(self.i_plus, self.i_minus, self.i_zero) < 0:
            raise ValueError(f"negative count in {self}")

    def __add__(self, other: Inertia) -> Inertia:
        if not isinstance(other, Inertia):
            return NotImplemented
        return Inertia(self.i_plus + other.i_plus, self.i_minus + other.i_minus, self.i_zero + other.i_zero)

    def __iter__(self):
        return iter((self.i_plus, self.i_minus, self.i_zero))

    @property
    def rank(self) -> int:
        return self.i_plus + self.i_minus

    @property
    def order(self) -> int:
        return self.i_plus + self.i_minus + self.i_zero

    def __str__(self) -> str:
        return f"({self.i_plus}, {self.i_minus}, {self.i_zero})"


ZERO_INERTIA = Inertia(0, 0, 0)


class SymmetricRationalMatrix:
    """Dense symmetric matrix of Fractions. Symmetry is checked exactly."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        for i, row in enumerate(data):
            if len(row) != n:
                raise NotSymmetricError(f"row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if data[i][j] != data[j][i]:
                    raise NotSymmetricError(f"entry ({i},{j}) differs from ({j},{i})")
        self.rows = data

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, SymmetricRationalMatrix) and self.rows == other.rows

    def __repr__(self) -> str:
        return f"SymmetricRationalMatrix({[list(map(str, r)) for r in self.rows]})"

    def scaled(self, i: int, factor) -> SymmetricRationalMatrix:
        """Multiply row ``i`` and column ``i`` by ``factor`` (a congruence)."""
        factor = Fraction(factor)
        rows = [list(r) for r in self.rows]
        for j in range(self.n):
            rows[i][j] *= factor
        for j in range(self.n):
            rows[j][i] *= factor
        return SymmetricRationalMatrix(rows)


def congruence_inertia(M) -> Inertia:
    """Inertia of a symmetric rational matrix by congruence elimination.

    Pivot rule: the lowest-index nonzero diagonal entry of the active block
    is eliminated as a 1x1 pivot. When the active diagonal is all zero, the
    lexicographically first nonzero off-diagonal entry ``a = M[i][j]`` gives a
    2x2 block ``[[0, a], [a, 0]]`` with inertia (1, 1, 0), and both indices
    are eliminated by its Schur complement.
    """
    if not isinstance(M, SymmetricRationalMatrix):
        M = SymmetricRationalMatrix(M)
    A = [list(r) for r in M.rows]
    active = list(range(M.n))
    pos = neg = 0
    while active:
        piv = next((i for i in active if A[i][i] != 0), None)
        if piv is not None:
            d = A[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            active.remove(piv)
            col = {p: A[p][piv] for p in active if A[p][piv] != 0}
            for p, cp in col.items():
                f = cp / d
                row = A[p]
                for q in active:
                    if A[piv][q] != 0:
                        row[q] -= f * A[piv][q]
            continue
        pair = next(((i, j) for i in active for j in active if j > i and A[i][j] != 0), None)
        if pair is None:
            break
        i, j = pair
        a = A[i][j]
        active.remove(i)
        active.remove(j)
        pos += 1
        neg += 1
        for p in active:
            pi, pj = A[p][i], A[p][j]
            if pi == 0 and pj == 0:
                continue
            row = A[p]
            for q in active:
                # block inverse is [[0, 1/a], [1/a, 0]]
                delta = pi * A[j][q] + pj * A[i][q]
                if delta != 0:
                    row[q] -= delta / a
    return Inertia(pos, neg, M.n - pos - neg)


def bareiss_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    A = [list(map(int, r)) for r in rows]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if A[r][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def charpoly_interpolation(M) -> list[Fraction]:
    """Coefficients ``[1, a1, ..., an]`` of ``det(xI - M)``.

    ``M`` is scaled to an integer matrix ``B = D*M``; then
    ``det(xI - M) = D^{-n} det(xD I - B)`` is evaluated at ``x = 0..n`` with
    Bareiss elimination and the monic polynomial is recovered by Newton
    interpolation.
    """
    if not isinstance(M, SymmetricRationalMatrix):
        M = SymmetricRationalMatrix(M)
    n = M.n
    D = lcm(1, *(x.denominator for r in M.rows for x in r))
    B = [[int(x * D) for x in r] for r in M.rows]
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        shifted = [[(x * D if i == j else 0) - B[i][j] for j in range(n)] for i in range(n)]
        ys.append(Fraction(bareiss_determinant(shifted), D**n))
    # Newton divided differences, then expand to the monomial basis
    coef = list(ys)
    for level in range(1, n + 1):
        for i in range(n, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    poly = [Fraction(0)] * (n + 1)  # poly[d] multiplies x**d
    for i in range(n, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - xs[i] * p for s, p in zip(shifted, poly)]
        poly[0] += coef[i]
    return list(reversed(poly))
