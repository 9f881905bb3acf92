"""Brute-force reference solvers and naive arithmetic for cross-checking.

Everything here trades speed for transparency: the solvers set up dense
linear systems over the coefficient field and run textbook Gaussian
elimination, and the naive product/evaluation routines take a different
route through the twist than the production code.  None of it calls into
the row reduction engines it exists to check.

These run in seconds only on deliberately small instances; the test suite
keeps degrees and dimensions tiny.
"""

from __future__ import annotations

from .ffield import FiniteField
from .skewpoly import SkewPoly


def naive_mul(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    """Product computed one left factor term at a time.

    Uses x * (c0 + c1 x + ...) = theta(c0) x + theta(c1) x^2 + ... repeatedly:
    maintain x^i * b by twisting all coefficients once per power, then scale
    by a_i and accumulate.  Independent of the convolution in SkewPoly.__mul__.
    """
    F = a.field
    if a.is_zero() or b.is_zero():
        return SkewPoly.zero(F)
    acc = {}
    shifted = list(b.coeffs)
    for i, ai in enumerate(a.coeffs):
        if i > 0:
            shifted = [F.frobenius(c, 1) for c in shifted]
        if ai == 0:
            continue
        for j, bj in enumerate(shifted):
            if bj == 0:
                continue
            k = i + j
            acc[k] = F.add(acc.get(k, 0), F.mul(ai, bj))
    top = max(acc) if acc else -1
    return SkewPoly(F, [acc.get(k, 0) for k in range(top + 1)])


def naive_eval(a: SkewPoly, alpha: int) -> int:
    """Twisted evaluation via the running-power route.

    Tracks theta^i(alpha) incrementally (one twist per step) instead of
    jumping straight to theta^i as SkewPoly.evaluate does.
    """
    F = a.field
    total = 0
    power = alpha
    for i, ai in enumerate(a.coeffs):
        if i > 0:
            power = F.frobenius(power, 1)
        if ai != 0:
            total = F.add(total, F.mul(ai, power))
    return total


def rank_over_fq(field: FiniteField, elements) -> int:
    """Rank of a set of field elements over the fixed subfield of theta.

    Expands each element times each fixed-subfield basis vector into base-p
    digit vectors, echelonizes those over GF(p) with its own elimination, and
    divides the GF(p) dimension by the subfield degree.
    """
    basis = field.fixed_subfield_basis()
    p = field.p
    pivots: dict[int, list[int]] = {}
    dim = 0
    for v in elements:
        for b in basis:
            vec = list(field.digits(field._raw_mul(b, v)))
            for pos in range(len(vec) - 1, -1, -1):
                if vec[pos] == 0:
                    continue
                if pos in pivots:
                    piv = pivots[pos]
                    factor = (vec[pos] * pow(piv[pos], -1, p)) % p
                    for t in range(pos + 1):
                        vec[t] = (vec[t] - factor * piv[t]) % p
                else:
                    pivots[pos] = vec
                    dim += 1
                    break
    if dim % len(basis) != 0:  # pragma: no cover
        raise AssertionError("span dimension not divisible by subfield degree")
    return dim // len(basis)


def solve_affine(field: FiniteField, rows: list[list[int]],
                 rhs: list[int]) -> list[int] | None:
    """One solution of A x = b over the field, or None; free variables -> 0."""
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(n):
        p = next((k for k in range(r, len(aug)) if aug[k][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = field.inv(aug[r][c])
        aug[r] = [field.mul(inv, x) for x in aug[r]]
        for k in range(len(aug)):
            if k != r and aug[k][c] != 0:
                f = aug[k][c]
                aug[k] = [field.sub(x, field.mul(f, y)) for x, y in zip(aug[k], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(aug):
            break
    for k in range(r, len(aug)):
        if aug[k][n] != 0:
            return None
    x = [0] * n
    for row_idx, c in enumerate(pivot_cols):
        x[c] = aug[row_idx][n]
    return x


def kernel_vector(field: FiniteField, rows: list[list[int]],
                  n_unknowns: int) -> list[int] | None:
    """A nonzero kernel vector of A x = 0, or None if A has full column rank."""
    aug = [list(r) for r in rows]
    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(n_unknowns):
        p = next((k for k in range(r, len(aug)) if aug[k][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = field.inv(aug[r][c])
        aug[r] = [field.mul(inv, x) for x in aug[r]]
        for k in range(len(aug)):
            if k != r and aug[k][c] != 0:
                f = aug[k][c]
                aug[k] = [field.sub(x, field.mul(f, y)) for x, y in zip(aug[k], aug[r])]
        pivot_of_col[c] = r
        r += 1
        if r == len(aug):
            break
    free = next((c for c in range(n_unknowns) if c not in pivot_of_col), None)
    if free is None:
        return None
    x = [0] * n_unknowns
    x[free] = 1
    for c, row_idx in pivot_of_col.items():
        x[c] = field.neg(aug[row_idx][free])
    return x


def brute_mglssr(inst, max_deg: int):
    """Minimal solution by staged linear algebra, or None if none up to max_deg.

    For each candidate degree d (ascending) pin the top coefficient of the
    monic candidate to 1 and require, for every index i, that the residue
    (lambda * s_i) mod g_i has zero coefficients from degree
    d + gamma_0 - gamma_i upward.  The first solvable stage is the minimum.
    """
    from .mglssr import MgLssrSolution

    F = inst.field
    ell = inst.ell
    residues: list[list[SkewPoly]] = []
    for s, g in zip(inst.s_list, inst.g_list):
        r = [s.mod_right(g)]
        for _ in range(max_deg):
            x_times = naive_mul(SkewPoly.monomial(F, 1, 1), r[-1])
            r.append(x_times.mod_right(g))
        residues.append(r)

    for d in range(max_deg + 1):
        rows: list[list[int]] = []
        rhs: list[int] = []
        for i in range(ell):
            g_deg = inst.g_list[i].degree
            cutoff = d + inst.gammas[0] - inst.gammas[i + 1]
            for m in range(max(0, cutoff), g_deg):
                rows.append([residues[i][j].coefficient(m) for j in range(d)])
                rhs.append(F.neg(residues[i][d].coefficient(m)))
        sol = solve_affine(F, rows, rhs) if rows else [0] * d
        if sol is None:
            continue
        lam = SkewPoly(F, sol + [1])
        omegas = [naive_mul(lam, s).mod_right(g)
                  for s, g in zip(inst.s_list, inst.g_list)]
        return MgLssrSolution(lam, omegas)
    return None


def brute_mv(inst):
    """Nonzero interpolation tuple by homogeneous kernel search, or None.

    Unknowns are all coefficients allowed by the per-position degree bounds;
    one equation per point.  The parameter check guarantees more unknowns
    than equations, so a kernel vector always exists.
    """
    from .mvinterp import MvSolution, degree_bounds

    F = inst.field
    bounds = degree_bounds(inst)
    layout: list[tuple[int, int]] = []
    for t, bound in enumerate(bounds):
        for j in range(max(0, bound)):
            layout.append((t, j))

    rows = []
    for x, ys in inst.points:
        row = []
        for t, j in layout:
            base = x if t == 0 else ys[t - 1]
            row.append(F.frobenius(base, j))
        rows.append(row)
    vec = kernel_vector(F, rows, len(layout))
    if vec is None:
        return None
    coeffs: list[list[int]] = [[0] * max(0, b) for b in bounds]
    for (t, j), c in zip(layout, vec):
        coeffs[t][j] = c
    return MvSolution([SkewPoly(F, cs) for cs in coeffs])
