"""Multiple shift register synthesis over skew polynomial rings.

Given pairs (s_1, g_1), ..., (s_ell, g_ell) and shifts (gamma_0, ..., gamma_ell),
find a nonzero lambda of minimal degree admitting omega_i with

    lambda * s_i = omega_i  (mod right division by g_i)   and
    deg lambda + gamma_0 > deg omega_i + gamma_i          for all i.

Solutions are read off the first column of a gamma-shifted weak Popov basis
of the module spanned by (1, s_1, ..., s_ell) and the diagonal rows
(0, ..., g_i, ..., 0).  Three engines compute one:

``solve``             full row reduction of the basis matrix.
``intermediate_solve``  works only on row 0 of the shifted matrix, swapping it
                      with a diagonal row whenever that row is the better
                      pivot; a stepping stone kept for cross-checking.
``demand_driven_solve`` tracks nothing but the running lambda and the pivot
                      scalars; every matrix coefficient it would have looked
                      at is recomputed on demand from lambda and the inputs.

All three return a monic lambda of the same (minimal) degree.  The demand
driven engine asks for single coefficients of (lambda * s_h) mod g_h; when
g_h is a binomial x^d + a those cost one short scalar chain instead of a full
product-and-divide, which is where the speedup on x^n - 1 style moduli
comes from.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InstanceError
from .skewmat import SkewMatrix, apply_shift, leading_position, unapply_shift, vec_degree
from .skewpoly import MINUS_INFINITY, SkewPoly


class MgLssrInstance:
    """Problem data: moduli g_i != 0, fractions s_i (stored reduced mod g_i),
    and nonnegative shifts gamma_0..gamma_ell."""

    def __init__(self, field, s_list, g_list, gammas):
        if len(s_list) != len(g_list) or len(s_list) == 0:
            raise InstanceError("need matching, nonempty s and g lists")
        if len(gammas) != len(s_list) + 1:
            raise InstanceError("need one shift per position, ell + 1 total")
        if any(int(g) != g or g < 0 for g in gammas):
            raise InstanceError("shifts must be nonnegative integers")
        for g in g_list:
            if g.is_zero():
                raise InstanceError("moduli must be nonzero")
        for poly in list(s_list) + list(g_list):
            if poly.field is not field and poly.field.signature() != field.signature():
                raise InstanceError("all polynomials must share the instance field")
        self.field = field
        self.g_list = list(g_list)
        self.s_list = [s.mod_right(g) for s, g in zip(s_list, g_list)]
        self.gammas = [int(g) for g in gammas]

    @property
    def ell(self) -> int:
        return len(self.s_list)

    @property
    def mu(self) -> int:
        """max_i (gamma_i + deg g_i), the working degree scale."""
        return max(g + p.degree for g, p in zip(self.gammas[1:], self.g_list))


@dataclass
class MgLssrSolution:
    lam: SkewPoly
    omegas: list[SkewPoly]


def is_solution(inst: MgLssrInstance, sol: MgLssrSolution) -> bool:
    """Exact check of the congruences and the degree conditions."""
    lam = sol.lam
    if lam.is_zero() or len(sol.omegas) != inst.ell:
        return False
    bound = lam.degree + inst.gammas[0]
    for s, g, omega, gamma in zip(inst.s_list, inst.g_list, sol.omegas,
                                  inst.gammas[1:]):
        if not (lam * s - omega).mod_right(g).is_zero():
            return False
        if omega.is_zero():
            continue
        if omega.degree + gamma >= bound:
            return False
    return True


def build_basis(inst: MgLssrInstance) -> SkewMatrix:
    """Module basis: top row (1, s_1, ..., s_ell), then diagonal g_i rows."""
    F = inst.field
    zero = SkewPoly.zero(F)
    rows = [[SkewPoly.one(F)] + list(inst.s_list)]
    for i, g in enumerate(inst.g_list):
        row = [zero] * (inst.ell + 1)
        row[i + 1] = g
        rows.append(row)
    return SkewMatrix(F, rows)


def _extract(inst: MgLssrInstance, row) -> MgLssrSolution:
    F = inst.field
    lam = row[0]
    unit = F.inv(lam.leading_coeff())
    return MgLssrSolution(lam.scale_left(unit),
                          [p.scale_left(unit) for p in row[1:]])


def solve(inst: MgLssrInstance, *, with_trace: bool = False):
    """Reduce the basis to gamma-shifted weak Popov form and return the
    (monic-normalized) row with leading position 0."""
    from .rowreduce import reduce_shifted
    from .skewmat import shifted_leading_position

    reduced, trace = reduce_shifted(build_basis(inst), inst.gammas)
    pick = None
    for row in reduced.rows:
        if vec_degree(row) == MINUS_INFINITY:
            continue
        if shifted_leading_position(row, inst.gammas) == 0:
            pick = row
            break
    if pick is None:  # pragma: no cover
        raise RuntimeError("reduced basis has no row with leading position 0")
    sol = _extract(inst, pick)
    return (sol, trace) if with_trace else sol


def _iteration_cap(inst: MgLssrInstance, eta: int) -> int:
    return (eta + 2) * (inst.ell + 1) + inst.ell + 2


def intermediate_solve(inst: MgLssrInstance, *, mod_reduce: bool = False,
                       full: bool = False):
    """Row-0-centric reduction of the shifted basis matrix.

    Walks the candidate pivot (eta, h) downward lexicographically.  When the
    coefficient of x^eta in entry (0, h) is nonzero, rows 0 and h are swapped
    if row h carries the smaller degree, then row h clears the coefficient.
    With mod_reduce the off-lead entries of row 0 are reduced modulo the
    shifted moduli after every transformation, which keeps intermediate
    degrees down without changing what the main loop reads.
    """
    F = inst.field
    w = inst.gammas
    V = apply_shift(build_basis(inst), w)
    ell = inst.ell
    g_shift = [V.rows[i + 1][i + 1] for i in range(ell)]

    eta = vec_degree(V.rows[0])
    h = leading_position(V.rows[0])
    if h != 0:
        guard = _iteration_cap(inst, eta)
        while V.rows[0][0].degree <= eta:
            guard -= 1
            if guard < 0:  # pragma: no cover
                raise RuntimeError("pivot countdown failed to terminate")
            alpha = V.rows[0][h].coefficient(eta)
            if alpha != 0:
                eta_h = vec_degree(V.rows[h])
                alpha_h = V.rows[h][h].coefficient(eta_h)
                if eta < eta_h:
                    V.rows[0], V.rows[h] = V.rows[h], V.rows[0]
                    alpha, alpha_h = alpha_h, alpha
                    eta, eta_h = eta_h, eta
                beta = eta - eta_h
                c = F.mul(alpha, F.inv(F.frobenius(alpha_h, beta)))
                row0, rowh = V.rows[0], V.rows[h]
                for col in range(ell + 1):
                    if rowh[col].coeffs:
                        row0[col] = row0[col] - rowh[col].monomial_mul_left(c, beta)
                if mod_reduce:
                    for col in range(1, ell + 1):
                        row0[col] = row0[col].mod_right(g_shift[col - 1])
            if h > 1:
                h -= 1
            else:
                eta -= 1
                h = ell
    out = unapply_shift(V, w)
    sol = _extract(inst, out.rows[0])
    return (sol, out) if full else sol


def _is_binomial(g: SkewPoly) -> bool:
    d = g.degree
    if not isinstance(d, int) or d < 1:
        return False
    return all(g.coefficient(k) == 0 for k in range(1, d))


def coefficient_query(inst: MgLssrInstance, lam0: SkewPoly, h: int, eta: int,
                      *, force_generic: bool = False) -> int:
    """Coefficient of x^eta in ((lam0 * s_h) mod g_h) * x^gamma_h, 1-based h.

    For binomial g_h = x^d + a every coefficient of the remainder is a short
    twisted-scalar combination of product coefficients eta', eta'+d, ...,
    computed without forming the product or dividing.  Otherwise multiply
    and reduce.
    """
    if not 1 <= h <= inst.ell:
        raise IndexError("position out of range")
    F = inst.field
    s = inst.s_list[h - 1]
    g = inst.g_list[h - 1]
    etp = eta - inst.gammas[h]
    if etp < 0 or lam0.is_zero() or s.is_zero():
        return 0
    if force_generic or not _is_binomial(g):
        return (lam0 * s).mod_right(g).coefficient(etp)
    d = g.degree
    if etp >= d:
        return 0
    a_mon = F.mul(F.inv(g.leading_coeff()), g.coefficient(0))
    la, sa = lam0.coeffs, s.coeffs
    kmax = (len(la) - 1) + (len(sa) - 1)
    alpha = 0
    scale = 1
    k = etp
    while k <= kmax:
        ck = 0
        for i in range(max(0, k - len(sa) + 1), min(k, len(la) - 1) + 1):
            if la[i] != 0 and sa[k - i] != 0:
                ck = F.add(ck, F.mul(la[i], F.frobenius(sa[k - i], i)))
        if ck != 0:
            alpha = F.add(alpha, F.mul(ck, scale))
        if a_mon == 0:
            break
        scale = F.mul(scale, F.neg(F.frobenius(a_mon, k)))
        k += d
    return alpha


def demand_driven_solve(inst: MgLssrInstance, *,
                        force_generic: bool = False) -> MgLssrSolution:
    """Shift register synthesis without materializing the basis matrix.

    State is the descaled first column (lambda_0 = v_00 / x^gamma_0 and one
    lambda_j per diagonal row), plus the pivot degree/coefficient pairs
    (eta_j, alpha_j).  Row updates touch only that column; the matrix
    coefficient steering each step comes from coefficient_query.
    """
    F = inst.field
    ell = inst.ell
    gam = inst.gammas
    degs = [gam[0]] + [s.degree + gam[i + 1] if not s.is_zero() else MINUS_INFINITY
                       for i, s in enumerate(inst.s_list)]
    top = max(degs)
    h = max(i for i, d in enumerate(degs) if d == top)
    lam = SkewPoly.one(F)
    if h != 0:
        eta = top
        lams = [lam] + [SkewPoly.zero(F)] * ell
        etas = [0] + [g.degree + gam[i + 1] for i, g in enumerate(inst.g_list)]
        alphas = [0] + [g.leading_coeff() for g in inst.g_list]
        guard = _iteration_cap(inst, eta)
        while (lams[0].degree + gam[0] if not lams[0].is_zero()
               else MINUS_INFINITY) <= eta:
            guard -= 1
            if guard < 0:  # pragma: no cover
                raise RuntimeError("pivot countdown failed to terminate")
            alpha = coefficient_query(inst, lams[0], h, eta,
                                      force_generic=force_generic)
            if alpha != 0:
                if eta < etas[h]:
                    lams[0], lams[h] = lams[h], lams[0]
                    alpha, alphas[h] = alphas[h], alpha
                    eta, etas[h] = etas[h], eta
                beta = eta - etas[h]
                c = F.mul(alpha, F.inv(F.frobenius(alphas[h], beta)))
                lams[0] = lams[0] - lams[h].monomial_mul_left(c, beta)
            if h > 1:
                h -= 1
            else:
                eta -= 1
                h = ell
        lam = lams[0]
    lam = lam.scale_left(F.inv(lam.leading_coeff()))
    omegas = [(lam * s).mod_right(g) for s, g in zip(inst.s_list, inst.g_list)]
    return MgLssrSolution(lam, omegas)
