"""Row reduction engines: weak Popov reduction, determinant degree, walking.

``mulders_storjohann`` repeatedly applies simple LP-transformations (cancel
the leading term of one row against another row with the same leading
position) until all nonzero rows have distinct leading positions.  The row
value m*deg + LP + 1 strictly decreases with every transformation, which both
proves termination and is asserted at runtime; for full-rank square inputs
the transformation count never exceeds m*(OD(V) + m), where the orthogonality
defect OD(V) = deg(V) - deg_det(V) measures how far V is from reduced.

``deg_det`` realizes the determinant-degree map operationally: reduce to weak
Popov form, where the defect is zero, and sum the row degrees.  It is
invariant under row operations, additive on products, adds sum(w) under the
column shift map, and matches the diagonal sum on triangular matrices; the
tests exercise all of those laws.

``walk_step`` converts a w-shifted weak Popov form into a
(w + (1,0,...,0))-shifted one by a single chain of simple transformations on
column 0, touching only the rows whose shifted leading position would move to
column 0.  Iterating it n times ("walking") costs O(width) field operations
per step on the interpolation matrices this package builds, which is what
makes it cheaper than re-reducing from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import PreconditionError, SingularMatrixError
from .skewmat import (SkewMatrix, apply_shift, check_shift, is_shifted_weak_popov,
                      leading_position, mat_degree, shifted_leading_position,
                      simple_transform, unapply_shift, value, vec_degree)
from .skewpoly import MINUS_INFINITY, SkewPoly


@dataclass
class ReductionTrace:
    """Counters from one reduction run.

    lp_transforms: number of simple LP-transformations applied.
    field_ops: base-field operation count consumed by the run.
    steps: optional per-transformation log of (src_row, dst_row, position, beta).
    unimodular / unimodular_inv: accumulated row-operation matrices U, U^-1
        with U @ V_in == V_out and unimodular_inv @ V_out == V_in, when tracked.
    """

    lp_transforms: int = 0
    field_ops: int = 0
    steps: list[tuple[int, int, int, int]] | None = None
    unimodular: SkewMatrix | None = None
    unimodular_inv: SkewMatrix | None = None


def _find_collision(rows) -> tuple[int, int, int] | None:
    seen: dict[int, int] = {}
    for idx, row in enumerate(rows):
        if vec_degree(row) == MINUS_INFINITY:
            continue
        lp = leading_position(row)
        if lp in seen:
            return seen[lp], idx, lp
        seen[lp] = idx
    return None


def mulders_storjohann(V: SkewMatrix, *, track_unimodular: bool = False,
                       log_steps: bool = False) -> tuple[SkewMatrix, ReductionTrace]:
    """Reduce V to weak Popov form; returns (reduced copy, trace).

    Deterministic selection rule: scan rows in increasing index order for the
    first leading-position collision, then apply the row of smaller degree
    (ties: smaller index) onto the other.  Zero rows are skipped.
    """
    W = V.copy()
    F = W.field
    m = W.ncols
    trace = ReductionTrace(steps=[] if log_steps else None)
    if track_unimodular:
        trace.unimodular = SkewMatrix.identity(F, W.nrows)
        trace.unimodular_inv = SkewMatrix.identity(F, W.nrows)
    ops0 = F.ops
    deg_in = mat_degree(W.rows)

    while True:
        hit = _find_collision(W.rows)
        if hit is None:
            break
        a, b, h = hit
        if vec_degree(W.rows[a]) <= vec_degree(W.rows[b]):
            i, j = a, b
        else:
            i, j = b, a
        before = value(W.rows[j], m)
        alpha, beta = simple_transform(W, i, j, h)
        after = value(W.rows[j], m)
        if after >= before:
            raise RuntimeError("row value failed to decrease")  # pragma: no cover
        trace.lp_transforms += 1
        if trace.steps is not None:
            trace.steps.append((i, j, h, beta))
        if track_unimodular:
            U, Ui = trace.unimodular, trace.unimodular_inv
            for c in range(U.ncols):
                if U.rows[i][c].coeffs:
                    U.rows[j][c] = U.rows[j][c] - U.rows[i][c].monomial_mul_left(alpha, beta)
            mono = SkewPoly.monomial(F, alpha, beta)
            for r in range(Ui.nrows):
                if Ui.rows[r][j].coeffs:
                    Ui.rows[r][i] = Ui.rows[r][i] + Ui.rows[r][j] * mono

    trace.field_ops = F.ops - ops0
    if (W.nrows == W.ncols and deg_in != MINUS_INFINITY
            and all(vec_degree(r) != MINUS_INFINITY for r in W.rows)):
        defect = deg_in - mat_degree(W.rows)
        if trace.lp_transforms > W.nrows * (defect + W.nrows):  # pragma: no cover
            raise RuntimeError("transformation count exceeded m*(OD+m)")
    return W, trace


def reduce_shifted(V: SkewMatrix, w: Sequence[int], *, track_unimodular: bool = False,
                   log_steps: bool = False) -> tuple[SkewMatrix, ReductionTrace]:
    """Reduce to w-shifted weak Popov form: shift, reduce, unshift."""
    check_shift(w, V.ncols)
    shifted = apply_shift(V, w)
    reduced, trace = mulders_storjohann(shifted, track_unimodular=track_unimodular,
                                        log_steps=log_steps)
    return unapply_shift(reduced, w), trace


def deg_det(V: SkewMatrix) -> int:
    """Determinant degree of a full-rank square matrix.

    Computed by reducing to weak Popov form (defect zero) and summing row
    degrees.  A zero row in the reduced form means rank deficiency.
    """
    if V.nrows != V.ncols:
        raise ValueError("deg_det requires a square matrix")
    reduced, _ = mulders_storjohann(V)
    total = 0
    for row in reduced.rows:
        d = vec_degree(row)
        if d == MINUS_INFINITY:
            raise SingularMatrixError("matrix is rank deficient")
        total += d
    return total


def orthogonality_defect(V: SkewMatrix) -> int:
    """deg(V) - deg_det(V); zero exactly on full-rank weak Popov matrices."""
    dd = deg_det(V)
    return mat_degree(V.rows) - dd


def walk_step(V: SkewMatrix, w: Sequence[int]) -> tuple[SkewMatrix, ReductionTrace]:
    """One walking step: from w-shifted weak Popov form to (w+e_0)-shifted.

    Chains simple transformations at column 0 through the rows whose shifted
    leading position would land on column 0 after the bump, keeping the row
    of larger column-0 degree as the running survivor.
    """
    check_shift(w, V.ncols)
    if V.nrows != V.ncols:
        raise PreconditionError("walking requires a square matrix")
    if not is_shifted_weak_popov(V, w):
        raise PreconditionError("input is not in w-shifted weak Popov form")
    W = V.copy()
    F = W.field
    w_hat = [w[0] + 1] + list(w[1:])
    trace = ReductionTrace()
    ops0 = F.ops

    candidates = []
    for idx, row in enumerate(W.rows):
        if vec_degree(row) == MINUS_INFINITY:
            continue
        if shifted_leading_position(row, w_hat) == 0:
            candidates.append((shifted_leading_position(row, w), idx))
    candidates.sort()
    order = [idx for _, idx in candidates]
    if order:
        t = order[0]
        for i in order[1:]:
            if W.rows[t][0].degree <= W.rows[i][0].degree:
                simple_transform(W, t, i, 0)
            else:
                simple_transform(W, i, t, 0)
                t = i
            trace.lp_transforms += 1
    trace.field_ops = F.ops - ops0
    return W, trace


def walk(V: SkewMatrix, w: Sequence[int],
         steps: int) -> tuple[SkewMatrix, list[ReductionTrace]]:
    """Iterate walk_step; ends in (w + (steps,0,...,0))-shifted weak Popov form."""
    current = V
    w_cur = list(w)
    traces = []
    for _ in range(steps):
        current, tr = walk_step(current, w_cur)
        traces.append(tr)
        w_cur[0] += 1
    return current, traces


def in_row_space(row: Sequence[SkewPoly], V: SkewMatrix) -> bool:
    """Left-module membership test against a weak Popov basis.

    Greedily cancels the leading term of the residual against the basis row
    with the same leading position; membership holds iff the residual reaches
    zero.  V must be in (unshifted) weak Popov form.
    """
    if not is_shifted_weak_popov(V, [0] * V.ncols):
        raise PreconditionError("basis must be in weak Popov form")
    F = V.field
    by_lp = {}
    for idx, r in enumerate(V.rows):
        if vec_degree(r) != MINUS_INFINITY:
            by_lp[leading_position(r)] = idx
    u = list(row)
    while vec_degree(u) != MINUS_INFINITY:
        h = leading_position(u)
        idx = by_lp.get(h)
        if idx is None:
            return False
        pivot = V.rows[idx][h]
        if pivot.degree > u[h].degree:
            return False
        beta = u[h].degree - pivot.degree
        alpha = F.mul(u[h].leading_coeff(), F.inv(F.frobenius(pivot.leading_coeff(), beta)))
        for c in range(len(u)):
            if V.rows[idx][c].coeffs:
                u[c] = u[c] - V.rows[idx][c].monomial_mul_left(alpha, beta)
    return True
