"""The reference implementations must agree with the production code."""

from skewred.mglssr import MgLssrInstance, is_solution
from skewred.oracle import (brute_mglssr, kernel_vector, naive_eval,
                            naive_mul, rank_over_fq, solve_affine)
from skewred.randgen import random_mglssr, random_poly_upto
from skewred.skewpoly import SkewPoly


def test_naive_mul_matches_ring_product(f16, f64_e2, rng):
    for F in (f16, f64_e2):
        for _ in range(40):
            a = random_poly_upto(F, rng, rng.randrange(0, 6))
            b = random_poly_upto(F, rng, rng.randrange(0, 6))
            assert naive_mul(a, b) == a * b
    z = SkewPoly.zero(f16)
    assert naive_mul(z, z).is_zero()


def test_naive_eval_matches_evaluate(f16, f729, rng):
    for F in (f16, f729):
        for _ in range(40):
            a = random_poly_upto(F, rng, rng.randrange(0, 5))
            alpha = F.random_element(rng)
            assert naive_eval(a, alpha) == a.evaluate(alpha)


def test_rank_over_fq_agrees_with_field(f16, f64_e2, rng):
    for F in (f16, f64_e2):
        for _ in range(20):
            elems = [F.random_element(rng) for _ in range(rng.randrange(0, 5))]
            assert rank_over_fq(F, elems) == F.fq_rank(elems)
    assert rank_over_fq(f16, []) == 0
    assert rank_over_fq(f16, [0, 0]) == 0
    assert rank_over_fq(f16, f16.fq_basis()) == f16.s


def test_solve_affine_hand_cases(f16):
    F = f16
    # x = 3 directly
    assert solve_affine(F, [[1]], [3]) == [3]
    # inconsistent pair
    assert solve_affine(F, [[1], [1]], [1, 2]) is None
    # underdetermined: free variable pinned to zero
    sol = solve_affine(F, [[1, 1]], [5])
    assert sol is not None
    a, b = sol
    assert F.add(a, b) == 5 and b == 0
    # 2x2 with known answer: x=2, y=3 under rows (1,0),(1,1)
    rhs = [2, F.add(2, 3)]
    assert solve_affine(F, [[1, 0], [1, 1]], rhs) == [2, 3]


def test_kernel_vector(f16, rng):
    F = f16
    # full column rank leaves no kernel
    assert kernel_vector(F, [[1, 0], [0, 1]], 2) is None
    # dependent columns: (1, 1) scaled rows
    vec = kernel_vector(F, [[1, 1]], 2)
    assert vec is not None and any(v != 0 for v in vec)
    assert F.add(vec[0], vec[1]) == 0
    # random consistency: A v = 0 exactly
    for _ in range(10):
        rows = [[F.random_element(rng) for _ in range(4)] for _ in range(2)]
        v = kernel_vector(F, rows, 4)
        assert v is not None
        for row in rows:
            acc = 0
            for a, x in zip(row, v):
                acc = F.add(acc, F.mul(a, x))
            assert acc == 0


def test_brute_mglssr_trivial_and_cap(f16):
    F = f16
    g = SkewPoly(F, [1, 0, 1])
    inst = MgLssrInstance(F, [SkewPoly(F, [3])], [g], [5, 0])
    sol = brute_mglssr(inst, 3)
    assert sol is not None
    assert sol.lam == SkewPoly.one(F)
    assert is_solution(inst, sol)
    # a cap below the true minimum comes back empty
    hard = MgLssrInstance(F, [SkewPoly(F, [0, 1])], [g], [0, 0])
    assert brute_mglssr(hard, 0) is None


def test_brute_mglssr_solutions_are_solutions(f16, rng):
    for _ in range(10):
        inst = random_mglssr(f16, rng, 2, 3, 2)
        sol = brute_mglssr(inst, inst.mu + 1)
        assert sol is not None
        assert is_solution(inst, sol)
