"""Interpolation step of Mahdavifar-Vardy list decoding.

Given n points (x_i, y_{i,1}, ..., y_{i,ell}) with F_q-independent x_i, find
a nonzero tuple Q = (Q_0, ..., Q_ell) of skew polynomials with

    Q_0(x_i) + Q_1(y_{i,1}) + ... + Q_ell(y_{i,ell}) = 0   for every i,
    deg Q_t < chi - t*(k-1),   chi = ceil((n+1)/(ell+1) + ell*(k-1)/2).

Candidates form a module with basis rows (G, 0, ..., 0) and
(-R_t, 0, ..., 1, ..., 0), where G annihilates the x_i and R_t interpolates
(x_i -> y_{i,t}); the parameter bound n > binom(ell+1,2)*(k-1) makes a short
enough vector of the module a solution.  Two engines find one: plain shifted
row reduction, and walking, which exploits that the basis is already in
weak Popov form for the inflated shift w + (0, n, ..., n) and lowers the
inflation one step at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InstanceError, PreconditionError
from .skewmat import (SkewMatrix, is_shifted_weak_popov, shifted_degree,
                      shifted_leading_position, vec_degree)
from .skewpoly import MINUS_INFINITY, SkewPoly, annihilator, interpolate


def chi(n: int, ell: int, k: int) -> int:
    """ceil((n+1)/(ell+1) + ell*(k-1)/2), computed exactly in integers."""
    num = 2 * (n + 1) + ell * (k - 1) * (ell + 1)
    den = 2 * (ell + 1)
    return -(-num // den)


class MvInstance:
    """Interpolation input: ell, k, and n points (x_i, y_{i,1..ell})."""

    def __init__(self, field, ell, k, points):
        if ell < 1 or k < 1:
            raise InstanceError("ell and k must be positive")
        n = len(points)
        if not comb(ell + 1, 2) * (k - 1) < n <= field.s:
            raise InstanceError(
                f"need binom(ell+1,2)*(k-1) < n <= s, got n={n}, "
                f"bound={comb(ell + 1, 2) * (k - 1)}, s={field.s}")
        pts = []
        for entry in points:
            x, ys = entry
            if len(ys) != ell:
                raise InstanceError("each point needs ell y-values")
            pts.append((x, tuple(ys)))
        self.field = field
        self.ell = ell
        self.k = k
        self.points = tuple(pts)

    @property
    def n(self) -> int:
        return len(self.points)


@dataclass
class MvSolution:
    qs: list[SkewPoly]


def degree_bounds(inst: MvInstance) -> list[int]:
    """Strict upper bounds on deg Q_t, positions t = 0..ell."""
    c = chi(inst.n, inst.ell, inst.k)
    return [c - t * (inst.k - 1) for t in range(inst.ell + 1)]


def weight_vector(inst: MvInstance) -> list[int]:
    return [t * (inst.k - 1) for t in range(inst.ell + 1)]


def build_basis(inst: MvInstance) -> SkewMatrix:
    """Rows (G, 0, ..., 0) and (-R_t, e_t); every row vanishes on all points."""
    F = inst.field
    xs = [x for x, _ in inst.points]
    G = annihilator(F, xs)
    zero = SkewPoly.zero(F)
    one = SkewPoly.one(F)
    rows = [[G] + [zero] * inst.ell]
    for t in range(1, inst.ell + 1):
        R_t = interpolate(F, xs, [ys[t - 1] for _, ys in inst.points])
        row = [-R_t] + [zero] * inst.ell
        row[t] = one
        rows.append(row)
    return SkewMatrix(F, rows)


def _pick_minimal(reduced: SkewMatrix, w) -> list[SkewPoly]:
    best = None
    key = None
    for row in reduced.rows:
        if vec_degree(row) == MINUS_INFINITY:
            continue
        cand = (shifted_degree(row, w), shifted_leading_position(row, w))
        if key is None or cand < key:
            key = cand
            best = row
    if best is None:  # pragma: no cover
        raise RuntimeError("reduced basis has no nonzero row")
    return list(best)


def interpolation_step(inst: MvInstance, engine: str = "reduce",
                       *, with_trace: bool = False):
    """Minimal w-shifted row of the candidate module, w = (0, k-1, ..., ell(k-1)).

    engine="reduce" row reduces the basis under w.  engine="walk" starts from
    the inflated shift w + (0, n, ..., n), for which the basis is already in
    shifted weak Popov form, and walks the first column weight up n times,
    which is equivalent and cheaper.  Ties on the shifted degree go to the
    smaller leading position.
    """
    from .rowreduce import reduce_shifted, walk

    M = build_basis(inst)
    w = weight_vector(inst)
    if engine == "reduce":
        reduced, trace = reduce_shifted(M, w)
        traces = [trace]
    elif engine == "walk":
        n = inst.n
        w_infl = [w[0]] + [wt + n for wt in w[1:]]
        if not is_shifted_weak_popov(M, w_infl):  # pragma: no cover
            raise PreconditionError("basis not in inflated-shift weak Popov form")
        reduced, traces = walk(M, w_infl, n)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    sol = MvSolution(_pick_minimal(reduced, w))
    return (sol, traces) if with_trace else sol


def verify(inst: MvInstance, sol: MvSolution) -> bool:
    """Nonzero, all n zero conditions, all ell+1 strict degree bounds."""
    qs = sol.qs
    if len(qs) != inst.ell + 1 or all(q.is_zero() for q in qs):
        return False
    for q, bound in zip(qs, degree_bounds(inst)):
        if q.degree >= bound:
            return False
    F = inst.field
    for x, ys in inst.points:
        total = qs[0].evaluate(x)
        for q, y in zip(qs[1:], ys):
            total = F.add(total, q.evaluate(y))
        if total != 0:
            return False
    return True
