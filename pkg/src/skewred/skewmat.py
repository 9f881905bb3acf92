"""Vectors and matrices over the skew polynomial ring.

Degree vocabulary for a row vector v (entries SkewPoly):

* ``vec_degree(v)``     max entry degree (MINUS_INFINITY for the zero row)
* ``leading_position``  rightmost index attaining that maximum
* ``value(v, m)``       0 for the zero row, else m*deg(v) + LP(v) + 1

For a matrix V, ``mat_degree`` is the SUM of its row degrees and ``max_degree``
the largest entry degree.  A matrix is in weak Popov form when its nonzero
rows have pairwise distinct leading positions; the shifted variants compare
degrees after right-multiplying column j by x^(w_j) (the shift map), which
pads coefficients without twisting them.

``simple_transform`` is the one rewrite rule every reduction here is built
from: subtract a left monomial multiple of one row from another so that the
target entry's leading term cancels.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ShiftError, TransformError, ZeroVectorError
from .ffield import FiniteField
from .skewpoly import MINUS_INFINITY, SkewPoly

Row = list[SkewPoly]


def vec_degree(row: Sequence[SkewPoly]):
    return max((p.degree for p in row), default=MINUS_INFINITY)


def max_degree(rows: Sequence[Sequence[SkewPoly]]):
    return max((p.degree for row in rows for p in row), default=MINUS_INFINITY)


def mat_degree(rows: Sequence[Sequence[SkewPoly]]):
    """Sum of row degrees; MINUS_INFINITY propagates if any row is zero."""
    total = 0
    for row in rows:
        d = vec_degree(row)
        if d is MINUS_INFINITY or d == MINUS_INFINITY:
            return MINUS_INFINITY
        total += d
    return total


def leading_position(row: Sequence[SkewPoly]) -> int:
    """Rightmost index of maximal degree; errors on the zero row."""
    best, pos = MINUS_INFINITY, -1
    for j, p in enumerate(row):
        if p.coeffs and p.degree >= best:
            best, pos = p.degree, j
    if pos < 0:
        raise ZeroVectorError("leading position of a zero vector")
    return pos


def shifted_degree(row: Sequence[SkewPoly], w: Sequence[int]):
    return max((p.degree + wj for p, wj in zip(row, w) if p.coeffs),
               default=MINUS_INFINITY)


def shifted_leading_position(row: Sequence[SkewPoly], w: Sequence[int]) -> int:
    best, pos = MINUS_INFINITY, -1
    for j, p in enumerate(row):
        if p.coeffs and p.degree + w[j] >= best:
            best, pos = p.degree + w[j], j
    if pos < 0:
        raise ZeroVectorError("leading position of a zero vector")
    return pos


def leading_term(row: Sequence[SkewPoly]) -> SkewPoly:
    return row[leading_position(row)]


def leading_coeff(row: Sequence[SkewPoly]) -> int:
    return leading_term(row).leading_coeff()


def value(row: Sequence[SkewPoly], m: int) -> int:
    """Termination measure: 0 for the zero row, else m*deg + LP + 1."""
    d = vec_degree(row)
    if d == MINUS_INFINITY:
        return 0
    return m * d + leading_position(row) + 1


class SkewMatrix:
    """Mutable dense matrix of SkewPoly entries (rows of equal width)."""

    __slots__ = ("field", "rows")

    def __init__(self, field: FiniteField, rows: Sequence[Sequence[SkewPoly]]):
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        self.field = field
        self.rows = rows

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "SkewMatrix":
        one, zero = SkewPoly.one(field), SkewPoly.zero(field)
        return cls(field, [[one if i == j else zero for j in range(n)]
                           for i in range(n)])

    @classmethod
    def zero_matrix(cls, field: FiniteField, n: int, m: int) -> "SkewMatrix":
        zero = SkewPoly.zero(field)
        return cls(field, [[zero for _ in range(m)] for _ in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def copy(self) -> "SkewMatrix":
        return SkewMatrix(self.field, [list(r) for r in self.rows])

    def __eq__(self, other) -> bool:
        return (isinstance(other, SkewMatrix) and self.rows == other.rows)

    def __matmul__(self, other: "SkewMatrix") -> "SkewMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        zero = SkewPoly.zero(self.field)
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    a = self.rows[i][k]
                    b = other.rows[k][j]
                    if a.coeffs and b.coeffs:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return SkewMatrix(self.field, out)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        body = "\n".join("  [" + ", ".join(map(str, r)) + "]" for r in self.rows)
        return f"SkewMatrix(\n{body}\n)"


def check_shift(w: Sequence[int], width: int) -> None:
    if len(w) != width:
        raise ShiftError(f"shift length {len(w)} != width {width}")
    if any(x < 0 for x in w):
        raise ShiftError("shift entries must be non-negative")


def apply_shift(V: SkewMatrix, w: Sequence[int]) -> SkewMatrix:
    """Right-multiply column j by x^(w_j)."""
    check_shift(w, V.ncols)
    return SkewMatrix(V.field, [[p.times_x_right(w[j]) for j, p in enumerate(row)]
                                for row in V.rows])


def unapply_shift(V: SkewMatrix, w: Sequence[int]) -> SkewMatrix:
    """Inverse of apply_shift; errors if a low-order coefficient is nonzero."""
    check_shift(w, V.ncols)
    out = []
    for row in V.rows:
        new_row = []
        for j, p in enumerate(row):
            k = w[j]
            if any(c != 0 for c in p.coeffs[:k]):
                raise ShiftError(f"entry not right-divisible by x^{k}")
            new_row.append(SkewPoly(V.field, p.coeffs[k:]))
        out.append(new_row)
    return SkewMatrix(V.field, out)


def simple_transform(V: SkewMatrix, i: int, j: int, h: int) -> tuple[int, int]:
    """Row j -= alpha * x^beta * row i, cancelling the lead of V[j][h].

    beta = deg V[j][h] - deg V[i][h] and alpha is chosen so the x^beta-twisted
    leading coefficients cancel.  Requires i != j, both pivot entries nonzero,
    and deg V[i][h] <= deg V[j][h].  Returns (alpha, beta).
    """
    if i == j:
        raise TransformError("rows must differ")
    F = V.field
    pi, pj = V.rows[i][h], V.rows[j][h]
    if not pi.coeffs or not pj.coeffs:
        raise TransformError("pivot entries must be nonzero")
    beta = pj.degree - pi.degree
    if beta < 0:
        raise TransformError("source entry degree exceeds target entry degree")
    alpha = F.mul(pj.leading_coeff(), F.inv(F.frobenius(pi.leading_coeff(), beta)))
    row_i, row_j = V.rows[i], V.rows[j]
    for c in range(len(row_j)):
        if row_i[c].coeffs:
            row_j[c] = row_j[c] - row_i[c].monomial_mul_left(alpha, beta)
    return alpha, beta


def is_weak_popov(V: SkewMatrix) -> bool:
    """Nonzero rows have pairwise distinct leading positions."""
    seen = set()
    for row in V.rows:
        if vec_degree(row) == MINUS_INFINITY:
            continue
        lp = leading_position(row)
        if lp in seen:
            return False
        seen.add(lp)
    return True


def is_shifted_weak_popov(V: SkewMatrix, w: Sequence[int]) -> bool:
    check_shift(w, V.ncols)
    seen = set()
    for row in V.rows:
        if vec_degree(row) == MINUS_INFINITY:
            continue
        lp = shifted_leading_position(row, w)
        if lp in seen:
            return False
        seen.add(lp)
    return True
