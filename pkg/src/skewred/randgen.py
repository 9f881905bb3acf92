"""Seeded random generators for polynomials, matrices, and problem instances.

Everything takes a random.Random (or a seed to make one), so instance
generation is reproducible byte for byte; the CLI leans on that for its
"same seed, same file" guarantee.
"""

from __future__ import annotations

import random

from .ffield import FiniteField
from .gabidulin import GabCode
from .mglssr import MgLssrInstance
from .mvinterp import MvInstance
from .skewmat import SkewMatrix
from .skewpoly import SkewPoly


def as_rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_poly(field: FiniteField, rng, degree: int) -> SkewPoly:
    """Uniform polynomial of exactly the given degree (negative -> zero)."""
    if degree < 0:
        return SkewPoly.zero(field)
    coeffs = [field.random_element(rng) for _ in range(degree)]
    coeffs.append(field.random_nonzero(rng))
    return SkewPoly(field, coeffs)


def random_poly_upto(field: FiniteField, rng, max_degree: int) -> SkewPoly:
    """Uniform coefficients up to max_degree; degree may come out lower."""
    return SkewPoly(field, [field.random_element(rng)
                            for _ in range(max_degree + 1)])


def random_monic(field: FiniteField, rng, degree: int) -> SkewPoly:
    coeffs = [field.random_element(rng) for _ in range(degree)]
    coeffs.append(1)
    return SkewPoly(field, coeffs)


def random_matrix(field: FiniteField, rng, nrows: int, ncols: int,
                  max_degree: int) -> SkewMatrix:
    return SkewMatrix(field, [[random_poly_upto(field, rng, max_degree)
                               for _ in range(ncols)]
                              for _ in range(nrows)])


def random_full_rank(field: FiniteField, rng, m: int,
                     max_degree: int) -> SkewMatrix:
    """Rejection sampling on deg_det succeeding; retries on rank deficiency."""
    from .errors import SingularMatrixError
    from .rowreduce import deg_det

    while True:
        V = random_matrix(field, rng, m, m, max_degree)
        try:
            deg_det(V)
        except SingularMatrixError:
            continue
        return V


def random_mglssr(field: FiniteField, rng, ell: int, max_g_deg: int,
                  max_gamma: int, *, binomial: bool = False) -> MgLssrInstance:
    """Random instance; with binomial=True the moduli are x^d + a."""
    s_list = []
    g_list = []
    for _ in range(ell):
        d = rng.randrange(1, max_g_deg + 1)
        if binomial:
            g = SkewPoly.monomial(field, 1, d) + SkewPoly.constant(
                field, field.random_element(rng))
        else:
            g = random_monic(field, rng, d)
        g_list.append(g)
        s_list.append(random_poly_upto(field, rng, d - 1))
    gammas = [rng.randrange(max_gamma + 1) for _ in range(ell + 1)]
    return MgLssrInstance(field, s_list, g_list, gammas)


def independent_points(field: FiniteField, rng, n: int) -> list[int]:
    """n field elements independent over the fixed subfield, by rejection."""
    points: list[int] = []
    while len(points) < n:
        cand = field.random_nonzero(rng)
        if field.fq_independent(points + [cand]):
            points.append(cand)
    return points


def random_mv(field: FiniteField, rng, ell: int, k: int, n: int) -> MvInstance:
    xs = independent_points(field, rng, n)
    points = [(x, [field.random_element(rng) for _ in range(ell)]) for x in xs]
    return MvInstance(field, ell, k, points)


def random_messages(code: GabCode, rng) -> list[SkewPoly]:
    return [random_poly_upto(code.field, rng, k - 1) for k in code.k_list]
