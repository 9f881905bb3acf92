"""Shift register synthesis: three engines, one answer."""

import pytest

from skewred.errors import InstanceError
from skewred.mglssr import (MgLssrInstance, MgLssrSolution, build_basis,
                            coefficient_query, demand_driven_solve,
                            intermediate_solve, is_solution, solve)
from skewred.oracle import brute_mglssr
from skewred.randgen import random_mglssr, random_poly
from skewred.skewpoly import SkewPoly


def _inst(F, s_coeffs, g_coeffs, gammas):
    return MgLssrInstance(F, [SkewPoly(F, c) for c in s_coeffs],
                          [SkewPoly(F, c) for c in g_coeffs], gammas)


def test_instance_validation(f16):
    F = f16
    g = SkewPoly(F, [1, 0, 1])
    s = SkewPoly(F, [3])
    with pytest.raises(InstanceError):
        MgLssrInstance(F, [], [], [0])
    with pytest.raises(InstanceError):
        MgLssrInstance(F, [s], [g, g], [0, 0, 0])
    with pytest.raises(InstanceError):
        MgLssrInstance(F, [s], [g], [0])
    with pytest.raises(InstanceError):
        MgLssrInstance(F, [s], [g], [0, -1])
    with pytest.raises(InstanceError):
        MgLssrInstance(F, [s], [SkewPoly.zero(F)], [0, 0])


def test_fractions_stored_reduced(f16, rng):
    F = f16
    g = SkewPoly(F, [1, 0, 0, 1])
    s = random_poly(F, rng, 5)
    inst = MgLssrInstance(F, [s], [g], [0, 0])
    assert inst.s_list[0] == s.mod_right(g)
    assert inst.s_list[0].degree < g.degree


def test_mu(f16):
    F = f16
    inst = _inst(F, [[1], [2]], [[1, 1], [1, 0, 0, 1]], [4, 1, 2])
    assert inst.ell == 2
    assert inst.mu == max(1 + 1, 2 + 3)


def test_basis_rows_satisfy_congruences(f16, rng):
    F = f16
    inst = random_mglssr(F, rng, 3, 5, 3)
    M = build_basis(inst)
    assert M.nrows == 4 and M.ncols == 4
    assert M.rows[0][0] == SkewPoly.one(F)
    for i, g in enumerate(inst.g_list):
        assert M.rows[i + 1][i + 1] == g
        # every basis row encodes lambda * s_i = omega_i mod g_i
        for row in M.rows:
            r = (row[0] * inst.s_list[i] - row[i + 1]).mod_right(g)
            assert r.is_zero()


def test_trivial_when_shift_dominates(f16):
    # gamma_0 already exceeds every deg s_i + gamma_i, so lambda = 1 works
    F = f16
    inst = _inst(F, [[3]], [[1, 0, 1]], [5, 0])
    for sol in (solve(inst), intermediate_solve(inst), demand_driven_solve(inst)):
        assert sol.lam == SkewPoly.one(F)
        assert is_solution(inst, sol)


def test_engines_agree_and_oracle_confirms_minimality(f16, rng):
    F = f16
    for trial in range(25):
        inst = random_mglssr(F, rng, 1 + trial % 3, 4, 3,
                             binomial=(trial % 4 == 0))
        a = solve(inst)
        b = intermediate_solve(inst)
        c = demand_driven_solve(inst)
        for sol in (a, b, c):
            assert is_solution(inst, sol)
            assert sol.lam.leading_coeff() == 1
        assert a.lam.degree == b.lam.degree == c.lam.degree
        brute = brute_mglssr(inst, a.lam.degree)
        assert brute is not None
        assert brute.lam.degree == a.lam.degree
        if a.lam.degree > 0:
            assert brute_mglssr(inst, a.lam.degree - 1) is None


def test_demand_driven_mirrors_intermediate_exactly(f16, rng):
    # the descaled-column derivation says these produce the same polynomial,
    # not just the same degree
    F = f16
    for trial in range(20):
        inst = random_mglssr(F, rng, 1 + trial % 3, 4, 3,
                             binomial=(trial % 2 == 0))
        assert (demand_driven_solve(inst).lam
                == intermediate_solve(inst, mod_reduce=True).lam)


def test_mod_reduce_does_not_change_lambda(f16, rng):
    F = f16
    for trial in range(20):
        inst = random_mglssr(F, rng, 1 + trial % 3, 4, 3)
        assert (intermediate_solve(inst).lam
                == intermediate_solve(inst, mod_reduce=True).lam)


def test_solve_with_trace(f16):
    # gamma_0 = 0 with deg s = 2 forces at least one transformation
    inst = _inst(f16, [[0, 0, 1]], [[1, 0, 0, 0, 1]], [0, 0])
    sol, trace = solve(inst, with_trace=True)
    assert is_solution(inst, sol)
    assert trace.lp_transforms >= 1
    assert trace.field_ops > 0


def test_coefficient_query_generic_matches_definition(f16, rng):
    F = f16
    for _ in range(20):
        inst = random_mglssr(F, rng, 2, 5, 3)
        lam0 = random_poly(F, rng, rng.randrange(0, 6))
        h = rng.randrange(1, 3)
        s, g = inst.s_list[h - 1], inst.g_list[h - 1]
        rem = (lam0 * s).mod_right(g)
        for eta in range(inst.mu + 2):
            want = rem.coefficient(eta - inst.gammas[h]) \
                if eta >= inst.gammas[h] else 0
            assert coefficient_query(inst, lam0, h, eta) == want


def test_coefficient_query_binomial_fast_path(f16, rng):
    F = f16
    for _ in range(20):
        inst = random_mglssr(F, rng, 2, 6, 2, binomial=True)
        lam0 = random_poly(F, rng, rng.randrange(0, 9))
        h = rng.randrange(1, 3)
        for eta in range(inst.mu + 3):
            fast = coefficient_query(inst, lam0, h, eta)
            slow = coefficient_query(inst, lam0, h, eta, force_generic=True)
            assert fast == slow


def test_coefficient_query_bounds(f16):
    F = f16
    inst = _inst(F, [[3]], [[5, 0, 1]], [0, 2])
    lam0 = SkewPoly.one(F)
    assert coefficient_query(inst, lam0, 1, 1) == 0  # below gamma_h
    assert coefficient_query(inst, lam0, 1, 9) == 0  # above deg g + gamma_h
    assert coefficient_query(inst, SkewPoly.zero(F), 1, 2) == 0
    with pytest.raises(IndexError):
        coefficient_query(inst, lam0, 0, 0)
    with pytest.raises(IndexError):
        coefficient_query(inst, lam0, 2, 0)


def test_force_generic_engine_agrees(f16, rng):
    F = f16
    for _ in range(10):
        inst = random_mglssr(F, rng, 2, 4, 2, binomial=True)
        assert (demand_driven_solve(inst).lam
                == demand_driven_solve(inst, force_generic=True).lam)


def test_is_solution_rejects_bad_candidates(f16, rng):
    F = f16
    inst = random_mglssr(F, rng, 2, 4, 2)
    sol = solve(inst)
    assert not is_solution(inst, MgLssrSolution(SkewPoly.zero(F), sol.omegas))
    assert not is_solution(inst, MgLssrSolution(sol.lam, sol.omegas[:1]))
    # breaking one congruence must be caught
    broken = [sol.omegas[0] + SkewPoly.one(F)] + sol.omegas[1:]
    if inst.g_list[0].degree > 0:
        assert not is_solution(inst, MgLssrSolution(sol.lam, broken))
