"""Skew polynomials: the twisted ring F[x; theta] with zero derivation.

Multiplication obeys x*a = theta(a)*x for field constants a, so the product
of two polynomials has coefficients (a*b)_k = sum a_i * theta^i(b_j) over
i + j = k.  The ring has no zero divisors and degrees are additive, which
gives a left Euclidean division (divisor on the right, quotient on the left).

Twisted evaluation ev_a(alpha) = sum a_i * theta^i(alpha) makes every
polynomial act as a linear operator over the fixed subfield; composition of
operators matches ring multiplication: ev_{a*b} = ev_a o ev_b.  Vanishing
sets of operators are subspaces, which is what the annihilator and
interpolation constructions below exploit.

Degrees: deg(zero) is MINUS_INFINITY, a sentinel ordered below every integer.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ContextError, DependentPointsError
from .ffield import FiniteField

MINUS_INFINITY = float("-inf")


def _join(a: "SkewPoly", b: "SkewPoly") -> FiniteField:
    if a.field is b.field:
        return a.field
    if a.field.signature() == b.field.signature():
        return a.field
    raise ContextError("operands live in different field contexts")


class SkewPoly:
    """Immutable skew polynomial; coefficients ascending, no trailing zeros."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Sequence[int]):
        n = len(coeffs)
        while n > 0 and coeffs[n - 1] == 0:
            n -= 1
        self.field = field
        self.coeffs = tuple(coeffs[:n])

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: FiniteField) -> "SkewPoly":
        return cls(field, ())

    @classmethod
    def one(cls, field: FiniteField) -> "SkewPoly":
        return cls(field, (1,))

    @classmethod
    def constant(cls, field: FiniteField, a: int) -> "SkewPoly":
        return cls(field, (a,))

    @classmethod
    def monomial(cls, field: FiniteField, coeff: int, deg: int) -> "SkewPoly":
        if coeff == 0:
            return cls.zero(field)
        return cls(field, (0,) * deg + (coeff,))

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or MINUS_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def leading_coeff(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other) -> bool:
        return (isinstance(other, SkewPoly) and self.coeffs == other.coeffs
                and self.field.signature() == other.field.signature())

    def __hash__(self) -> int:
        return hash((self.field.signature(), self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append("x" if c == 1 else f"{c}*x")
            else:
                parts.append(f"x^{k}" if c == 1 else f"{c}*x^{k}")
        return " + ".join(parts)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        F = _join(self, other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = F.add(out[k], c)
        return SkewPoly(F, out)

    def __neg__(self) -> "SkewPoly":
        F = self.field
        return SkewPoly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        F = _join(self, other)
        a, b = self.coeffs, other.coeffs
        out = [F.sub(a[k] if k < len(a) else 0, b[k] if k < len(b) else 0)
               for k in range(max(len(a), len(b)))]
        return SkewPoly(F, out)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        F = _join(self, other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return SkewPoly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj == 0:
                    continue
                out[i + j] = F.add(out[i + j], F.mul(ai, F.frobenius(bj, i)))
        return SkewPoly(F, out)

    def scale_left(self, c: int) -> "SkewPoly":
        """c * self for a field constant c."""
        F = self.field
        if c == 0:
            return SkewPoly.zero(F)
        return SkewPoly(F, [F.mul(c, a) if a else 0 for a in self.coeffs])

    def monomial_mul_left(self, alpha: int, beta: int) -> "SkewPoly":
        """(alpha * x^beta) * self."""
        F = self.field
        if alpha == 0 or not self.coeffs:
            return SkewPoly.zero(F)
        out = [0] * beta + [F.mul(alpha, F.frobenius(c, beta)) if c else 0
                            for c in self.coeffs]
        return SkewPoly(F, out)

    def times_x_right(self, k: int) -> "SkewPoly":
        """self * x^k: coefficients shift up untouched (no twist applied)."""
        if not self.coeffs or k == 0:
            return self if self.coeffs else SkewPoly.zero(self.field)
        return SkewPoly(self.field, (0,) * k + self.coeffs)

    def right_divmod(self, divisor: "SkewPoly") -> tuple["SkewPoly", "SkewPoly"]:
        """(d, r) with self = d * divisor + r and deg r < deg divisor."""
        F = _join(self, divisor)
        if not divisor.coeffs:
            raise ZeroDivisionError("right division by the zero polynomial")
        t = len(divisor.coeffs) - 1
        b_top = divisor.coeffs[-1]
        rem = list(self.coeffs)
        quo = [0] * max(len(rem) - t, 0)
        m = len(rem) - 1
        while m >= t:
            if rem[m]:
                shift = m - t
                coef = F.mul(rem[m], F.inv(F.frobenius(b_top, shift)))
                quo[shift] = coef
                for j, bj in enumerate(divisor.coeffs):
                    if bj:
                        rem[shift + j] = F.sub(rem[shift + j],
                                               F.mul(coef, F.frobenius(bj, shift)))
            m -= 1
        return SkewPoly(F, quo), SkewPoly(F, rem[:t])

    def mod_right(self, divisor: "SkewPoly") -> "SkewPoly":
        return self.right_divmod(divisor)[1]

    def monic(self) -> "SkewPoly":
        """Left-scale by the inverse leading coefficient; zero stays zero."""
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale_left(self.field.inv(self.coeffs[-1]))

    # -- operator evaluation ---------------------------------------------------

    def evaluate(self, alpha: int) -> int:
        """Twisted evaluation sum a_i * theta^i(alpha)."""
        F = self.field
        acc = 0
        for i, c in enumerate(self.coeffs):
            if c:
                acc = F.add(acc, F.mul(c, F.frobenius(alpha, i)))
        return acc


def annihilator(field: FiniteField, points: Sequence[int]) -> SkewPoly:
    """Monic minimal-degree polynomial whose operator kills all the points.

    Built incrementally: if A kills the first points and v = A(p) != 0, then
    (x - theta(v)/v) * A also kills p, by operator composition.  The degree
    equals the number of points, which forces the points to be linearly
    independent over the fixed subfield; a dependent point shows up as
    v == 0 and raises DependentPointsError.
    """
    F = field
    acc = SkewPoly.one(F)
    for pt in points:
        v = acc.evaluate(pt)
        if v == 0:
            raise DependentPointsError("points are dependent over the fixed subfield")
        c = F.mul(F.frobenius(v, 1), F.inv(v))
        acc = acc.monomial_mul_left(1, 1) - acc.scale_left(c)
    return acc


def interpolate(field: FiniteField, points: Sequence[int],
                values: Sequence[int]) -> SkewPoly:
    """Unique polynomial of degree < len(points) hitting all the values.

    Newton-style: maintain the annihilator A_j of the first j points and add
    a multiple of it that fixes the value at point j without disturbing the
    earlier ones.
    """
    if len(points) != len(values):
        raise ValueError("points and values must have equal length")
    F = field
    result = SkewPoly.zero(F)
    ann = SkewPoly.one(F)
    for pt, val in zip(points, values):
        w = ann.evaluate(pt)
        if w == 0:
            raise DependentPointsError("points are dependent over the fixed subfield")
        c = F.mul(F.sub(val, result.evaluate(pt)), F.inv(w))
        result = result + ann.scale_left(c)
        ann = ann.monomial_mul_left(1, 1) - ann.scale_left(F.mul(F.frobenius(w, 1), F.inv(w)))
    return result
