"""Interleaved Gabidulin codes: evaluation encoding, rank-t channel, decoding.

A codeword of the t-th constituent code evaluates a message polynomial f_t
of degree < k_t at n fixed F_q-independent points.  The channel adds an
error whose ell*n symbols, taken together, span a t-dimensional F_q-space;
the decoder's job depends only on that joint rank, not on symbol positions.

Decoding is Gao-style: G annihilates the evaluation points, s_i interpolates
the i-th received word, and any error-span polynomial lambda (annihilator of
the error value span) satisfies lambda*s_i = lambda*f_i (mod g_i) together
with the degree gap deg(lambda*f_i) < deg lambda + k_i.  That is a shift
register instance with gammas (K, K-k_1, ..., K-k_ell), K = max k_i, so the
synthesis engines apply; the messages come back out of the solution by exact
division of omega_i by lambda on the left.

``decode`` never returns wrong messages silently: candidate messages must
divide out exactly, meet the degree bounds, and re-encode to within the
decoding radius of the received word, otherwise the result is a failure
value (DecodeResult with success False).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ChannelError, EncodeError, InstanceError
from .ffield import FiniteField
from .mglssr import MgLssrInstance, demand_driven_solve, solve
from .skewpoly import SkewPoly, annihilator, interpolate


class GabCode:
    """Code parameters: n evaluation points and per-constituent dimensions."""

    def __init__(self, field: FiniteField, n: int, k_list, eval_points=None):
        if not 1 <= n <= field.s:
            raise InstanceError("need 1 <= n <= s")
        if not k_list:
            raise InstanceError("need at least one constituent dimension")
        if any(not 1 <= k <= n for k in k_list):
            raise InstanceError("dimensions must satisfy 1 <= k_t <= n")
        if eval_points is None:
            eval_points = field.fq_basis()[:n]
        if len(eval_points) != n:
            raise InstanceError("need exactly n evaluation points")
        if not field.fq_independent(eval_points):
            raise InstanceError("evaluation points must be independent over F_q")
        self.field = field
        self.n = n
        self.k_list = list(k_list)
        self.eval_points = list(eval_points)

    @classmethod
    def subfield_points(cls, field: FiniteField, n: int, k_list) -> "GabCode":
        """Evaluation points spanning the intermediate field fixed by theta^n.

        Requires n | s; the point annihilator is then the binomial x^n - 1,
        which the demand driven solver's fast path likes.
        """
        return cls(field, n, k_list, eval_points=field.subfield_fq_basis(n))

    @property
    def ell(self) -> int:
        return len(self.k_list)

    @property
    def radius(self) -> int:
        """Largest error rank the decoder targets: sum(n-k_t) // (ell+1)."""
        return sum(self.n - k for k in self.k_list) // (self.ell + 1)


@dataclass
class DecodeResult:
    """Decoding outcome; failure is a value, not an exception."""

    success: bool
    messages: list[SkewPoly] | None = None
    rank_used: int | None = None
    reason: str | None = None


def encode(code: GabCode, messages) -> list[list[int]]:
    """Codeword matrix: row t lists evaluate(f_t, point_j) for j = 0..n-1."""
    if len(messages) != code.ell:
        raise EncodeError(f"expected {code.ell} messages, got {len(messages)}")
    for f, k in zip(messages, code.k_list):
        if f.degree >= k:
            raise EncodeError(f"message degree {f.degree} exceeds bound {k - 1}")
    return [[f.evaluate(pt) for pt in code.eval_points] for f in messages]


def _fq_elements(field: FiniteField) -> list[int]:
    basis = field.fixed_subfield_basis()
    elems = [0]
    for b in basis:
        elems = [field._raw_add(v, field._raw_mul(c, b))
                 for v in elems for c in range(field.p)]
    return elems


def _random_full_rank_fq(field: FiniteField, rng, t: int, width: int):
    """t x width matrix with entries in the fixed subfield, F_q-rank t."""
    fq = _fq_elements(field)
    while True:
        rows = [[fq[rng.randrange(len(fq))] for _ in range(width)]
                for _ in range(t)]
        # row echelon over F_q; subfield is closed under the field ops
        work = [row[:] for row in rows]
        rank = 0
        for col in range(width):
            piv = next((r for r in range(rank, t) if work[r][col] != 0), None)
            if piv is None:
                continue
            work[rank], work[piv] = work[piv], work[rank]
            inv = field.inv(work[rank][col])
            work[rank] = [field.mul(inv, v) for v in work[rank]]
            for r in range(t):
                if r != rank and work[r][col] != 0:
                    f = work[r][col]
                    work[r] = [field.sub(a, field.mul(f, b))
                               for a, b in zip(work[r], work[rank])]
            rank += 1
            if rank == t:
                return rows


def add_rank_error(code: GabCode, codewords, t: int, seed) -> list[list[int]]:
    """Received words: codewords plus an error of joint F_q-rank exactly t.

    The error is a t-dim value span (independent b_1..b_t) spread over the
    ell*n positions by a full-rank coordinate matrix over F_q; deterministic
    for a given seed.
    """
    if not 0 <= t <= code.n:
        raise ChannelError(f"rank {t} out of range for length-{code.n} code")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    F = code.field
    if t == 0:
        return [row[:] for row in codewords]
    while True:
        values = [F.random_nonzero(rng) for _ in range(t)]
        if F.fq_independent(values):
            break
    coords = _random_full_rank_fq(F, rng, t, code.ell * code.n)
    received = []
    for i, row in enumerate(codewords):
        out = []
        for j, c in enumerate(row):
            e = 0
            for r in range(t):
                a = coords[r][i * code.n + j]
                if a != 0:
                    e = F.add(e, F.mul(values[r], a))
            out.append(F.add(c, e))
        received.append(out)
    return received


def gao_instance(code: GabCode, received) -> MgLssrInstance:
    """Shift register instance whose minimal lambda spans the error values.

    All moduli equal the point annihilator G; s_i interpolates received word
    i; the shifts (K, K-k_1, ..., K-k_ell) with K = max k_i encode exactly
    deg f_i < k_i for the quotients of admissible solutions.
    """
    F = code.field
    G = annihilator(F, code.eval_points)
    s_list = [interpolate(F, code.eval_points, row) for row in received]
    K = max(code.k_list)
    gammas = [K] + [K - k for k in code.k_list]
    return MgLssrInstance(F, s_list, [G] * code.ell, gammas)


def _left_quotient(a: SkewPoly, lam: SkewPoly) -> SkewPoly | None:
    """f with a = lam * f, or None if no exact quotient exists."""
    F = a.field
    rem = a
    out: dict[int, int] = {}
    dl = lam.degree
    top = lam.leading_coeff()
    while not rem.is_zero() and rem.degree >= dl:
        shift = rem.degree - dl
        c = F.frobenius(F.mul(F.inv(top), rem.leading_coeff()), -dl)
        out[shift] = c
        rem = rem - lam * SkewPoly.monomial(F, c, shift)
    if not rem.is_zero():
        return None
    width = max(out) + 1 if out else 0
    return SkewPoly(F, [out.get(i, 0) for i in range(width)])


def _joint_rank(code: GabCode, a_rows, b_rows) -> int:
    diffs = [code.field.sub(x, y)
             for ra, rb in zip(a_rows, b_rows) for x, y in zip(ra, rb)]
    return code.field.fq_rank(diffs)


def decode(code: GabCode, received, engine: str = "solve") -> DecodeResult:
    """Rank-error decoding via shift register synthesis.

    engine selects the MgLSSR solver: "solve" (row reduction) or "dd"
    (demand driven).  Success requires exact left division of every omega_i
    by lambda, message degrees below k_i, and the re-encoded difference to
    have rank at most the decoding radius.
    """
    inst = gao_instance(code, received)
    if engine == "solve":
        sol = solve(inst)
    elif engine == "dd":
        sol = demand_driven_solve(inst)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    messages = []
    for omega, k in zip(sol.omegas, code.k_list):
        f = _left_quotient(omega, sol.lam)
        if f is None:
            return DecodeResult(False, reason="inexact division")
        if f.degree >= k:
            return DecodeResult(False, reason="quotient degree out of range")
        messages.append(f)
    residual = _joint_rank(code, received, encode(code, messages))
    if residual > code.radius:
        return DecodeResult(False, reason="residual rank exceeds radius",
                            rank_used=residual)
    return DecodeResult(True, messages=messages, rank_used=residual)
