"""Finite extension fields carrying a distinguished automorphism.

A ``FiniteField`` models F = GF(p^(e*s)) viewed as a degree-s extension of
GF(q), q = p^e, together with the automorphism ``theta: a -> a^(q^i)``
(``i = frob_power``).  The subfield fixed by theta plays the role of the base
field everywhere else in the package; it equals GF(q) exactly when
gcd(i, s) == 1.

Elements are represented as base-p packed integers: the element with
coordinate vector (c_0, c_1, ..., c_{d-1}) over GF(p), d = e*s, with respect
to the polynomial basis of the defining modulus, is the integer
sum(c_k * p^k).  For p == 2 this is the usual bit-packed representation and
arithmetic reduces to shifts and xors.

Multiplication and inversion go through discrete log/antilog tables when the
field is small enough to afford them; larger fields fall back to direct
computation.  Applications of theta^j always go through precomputed
basis-image tables, so a single application costs O(e*s) base-field work
regardless of j.

Every public arithmetic operation (add, sub, neg, mul, inv, frobenius)
increments ``self.ops`` by exactly one.  The counter is cheap, always on, and
is the quantity reported by reduction traces and benchmarks.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

from .errors import ConstructionError

# Fields up to this order get exp/log tables (2^16 elements = a few MB).
_TABLE_LIMIT = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


# ---------------------------------------------------------------------------
# Dense polynomial helpers over GF(p), coefficients as plain int lists
# (ascending degree).  Used only for modulus validation and searching.


def _pp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pp_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # reduce by monic m
    dm = len(m) - 1
    for k in range(len(out) - 1, dm - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            for i in range(dm):
                out[k - dm + i] = (out[k - dm + i] - c * m[i]) % p
    return _pp_trim(out)


def _pp_powmod(a: list[int], n: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = list(a)
    while n:
        if n & 1:
            result = _pp_mulmod(result, base, m, p)
        base = _pp_mulmod(base, base, m, p)
        n >>= 1
    return result


def _pp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _pp_trim(list(a)), _pp_trim(list(b))
    while b:
        # a mod b with b made monic on the fly
        inv_lead = pow(b[-1], p - 2, p)
        r = list(a)
        while len(r) >= len(b) and r:
            c = (r[-1] * inv_lead) % p
            shift = len(r) - len(b)
            for i, bi in enumerate(b):
                r[shift + i] = (r[shift + i] - c * bi) % p
            _pp_trim(r)
        a, b = b, r
    return a


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin test: x^(p^d) == x mod f, and gcd(x^(p^(d/r)) - x, f) = 1."""
    m = list(modulus)
    d = len(m) - 1
    if d < 1:
        return False
    x = [0, 1]
    t = x
    powers = {}
    for k in range(1, d + 1):
        t = _pp_powmod(t, p, m, p)
        powers[k] = t
    if _pp_trim(list(powers[d])) != x:
        return False
    for r in range(2, d + 1):
        if d % r == 0 and _is_prime(r):
            diff = list(powers[d // r]) + [0] * 2
            diff[1] = (diff[1] - 1) % p
            if len(_pp_gcd(diff, m, p)) > 1:
                return False
    return True


def find_irreducible(p: int, degree: int) -> tuple[int, ...]:
    """Smallest monic irreducible of the given degree over GF(p).

    Candidates are enumerated by packing the low coefficients in base p, so
    the result is deterministic (e.g. x^4 + x + 1 for p = 2, degree 4).
    """
    if degree == 1:
        return (0, 1)
    for packed in range(1, p**degree):
        low = []
        v = packed
        while v:
            low.append(v % p)
            v //= p
        coeffs = low + [0] * (degree - len(low)) + [1]
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise ConstructionError(f"no irreducible of degree {degree} over GF({p})")


class FiniteField:
    """Context object for GF(p^(e*s)) with automorphism a -> a^(q^i).

    Parameters
    ----------
    p : characteristic, a prime.
    e : degree of the fixed-by-convention base field GF(q), q = p^e.
    s : extension degree of the full field over GF(q).
    modulus : coefficients of a monic irreducible of degree e*s over GF(p),
        ascending order (constant term first).
    frob_power : the i in theta(a) = a^(q^i); 0 <= i < s.
    """

    def __init__(self, p: int, e: int, s: int, modulus: Sequence[int],
                 frob_power: int = 1):
        if not _is_prime(p):
            raise ConstructionError(f"p = {p} is not prime")
        if e < 1 or s < 1:
            raise ConstructionError("e and s must be positive")
        if not 0 <= frob_power < s:
            raise ConstructionError(f"frob_power must satisfy 0 <= i < s, got {frob_power}")
        dim = e * s
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != dim + 1 or modulus[-1] != 1:
            raise ConstructionError(f"modulus must be monic of degree {dim}")
        if not _is_irreducible(modulus, p):
            raise ConstructionError("modulus is reducible over GF(p)")

        self.p = p
        self.e = e
        self.s = s
        self.q = p**e
        self.modulus = modulus
        self.frob_power = frob_power
        self.dim = dim
        self.order = p**dim
        self.ops = 0  # public-operation counter, always on

        if p == 2:
            self._mod_int = sum(c << k for k, c in enumerate(modulus))

        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if self.order <= _TABLE_LIMIT:
            self._build_tables()

        # theta^j on the GF(p)-basis: _frob[j][k] = theta^j(p^k-basis vector)
        self._frob = self._build_frob_tables()
        self._frobq = self._basis_images(self.q)  # Frobenius of GF(q), used for subfields
        self._fq_basis: tuple[int, ...] | None = None

    # -- representation helpers ------------------------------------------

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def signature(self) -> tuple:
        return (self.p, self.e, self.s, self.modulus, self.frob_power)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"FiniteField(p={self.p}, e={self.e}, s={self.s}, i={self.frob_power})"

    def digits(self, a: int) -> list[int]:
        """Little-endian GF(p) coordinate vector of length e*s."""
        self._check_element(a)
        out = []
        for _ in range(self.dim):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, digits: Sequence[int]) -> int:
        if len(digits) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(digits)}")
        a = 0
        for c in reversed(digits):
            c = int(c)
            if not 0 <= c < self.p:
                raise ValueError(f"coordinate {c} out of range for GF({self.p})")
            a = a * self.p + c
        return a

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    def random_element(self, rng) -> int:
        return rng.randrange(self.order)

    def random_nonzero(self, rng) -> int:
        return rng.randrange(1, self.order)

    def _check_element(self, a: int) -> None:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise ValueError(f"{a!r} is not an element of this field")

    # -- raw (uncounted) arithmetic ---------------------------------------

    def _raw_add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        out = 0
        mult = 1
        for _ in range(self.dim):
            out += ((a + b) % self.p) * mult
            a //= self.p
            b //= self.p
            mult *= self.p
        return out

    def _raw_neg(self, a: int) -> int:
        if self.p == 2:
            return a
        out = 0
        mult = 1
        for _ in range(self.dim):
            out += (-a % self.p) * mult
            a //= self.p
            mult *= self.p
        return out

    def _raw_mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.p == 2:
            top = 1 << self.dim
            res = 0
            while b:
                if b & 1:
                    res ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= self._mod_int
            return res
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.dim - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % self.p
        for k in range(len(prod) - 1, self.dim - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(self.dim):
                    prod[k - self.dim + i] = (prod[k - self.dim + i] - c * self.modulus[i]) % self.p
        return self.from_digits(prod[: self.dim])

    def _raw_pow(self, a: int, n: int) -> int:
        result = 1
        base = a
        while n:
            if n & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            n >>= 1
        return result

    def _raw_inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self._log is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self._raw_pow(a, self.order - 2)

    # -- table construction ------------------------------------------------

    def _build_tables(self) -> None:
        n = self.order - 1
        factors = []
        m = n
        k = 2
        while k * k <= m:
            if m % k == 0:
                factors.append(k)
                while m % k == 0:
                    m //= k
            k += 1
        if m > 1:
            factors.append(m)
        gen = next(g for g in range(2, self.order)
                   if all(self._raw_pow(g, n // r) != 1 for r in factors))
        exp = [0] * n
        log = [0] * self.order
        v = 1
        for k in range(n):
            exp[k] = v
            log[v] = k
            v = self._raw_mul(v, gen)
        self._exp = exp
        self._log = log

    def _basis_images(self, exponent: int) -> list[int]:
        return [self._raw_pow(self.p**k, exponent) for k in range(self.dim)]

    def _apply_images(self, a: int, images: list[int]) -> int:
        if self.p == 2:
            out = 0
            k = 0
            while a:
                if a & 1:
                    out ^= images[k]
                a >>= 1
                k += 1
            return out
        out = 0
        for k in range(self.dim):
            d = a % self.p
            a //= self.p
            img = images[k]
            for _ in range(d):
                out = self._raw_add(out, img)
        return out

    def _build_frob_tables(self) -> list[list[int]]:
        theta_exp = self.q**self.frob_power
        theta1 = self._basis_images(theta_exp)
        tables = [[self.p**k for k in range(self.dim)]]
        prev = tables[0]
        for _ in range(1, self.s):
            prev = [self._apply_images(v, theta1) for v in prev]
            tables.append(prev)
        return tables

    # -- counted public arithmetic -----------------------------------------

    def add(self, a: int, b: int) -> int:
        self.ops += 1
        if self.p == 2:
            return a ^ b
        return self._raw_add(a, b)

    def sub(self, a: int, b: int) -> int:
        self.ops += 1
        if self.p == 2:
            return a ^ b
        return self._raw_add(a, self._raw_neg(b))

    def neg(self, a: int) -> int:
        self.ops += 1
        if self.p == 2:
            return a
        return self._raw_neg(a)

    def mul(self, a: int, b: int) -> int:
        self.ops += 1
        if self._log is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        self.ops += 1
        return self._raw_inv(a)

    def frobenius(self, a: int, j: int = 1) -> int:
        """theta^j(a); j may be any integer (reduced mod s, so j = -1 works)."""
        self.ops += 1
        return self._apply_images(a, self._frob[j % self.s])

    # -- fixed subfield and independence over it ----------------------------

    @property
    def fixed_field_order(self) -> int:
        return self.p ** (self.e * math.gcd(self.frob_power, self.s))

    def in_fixed_field(self, a: int) -> bool:
        return self._apply_images(a, self._frob[1 % self.s]) == a

    def _fp_span_basis(self, vectors: list[list[int]]) -> list[list[int]]:
        """Row-reduce GF(p) coordinate vectors; returns an echelon basis."""
        basis: list[list[int]] = []
        pivots: list[int] = []
        for vec in vectors:
            v = list(vec)
            for b, piv in zip(basis, pivots):
                c = v[piv]
                if c:
                    for k in range(self.dim):
                        v[k] = (v[k] - c * b[k]) % self.p
            for piv in range(self.dim):
                if v[piv]:
                    inv = pow(v[piv], self.p - 2, self.p)
                    v = [(c * inv) % self.p for c in v]
                    basis.append(v)
                    pivots.append(piv)
                    break
        return basis

    def fq_rank(self, elements: Sequence[int]) -> int:
        """Dimension over the fixed subfield of the span of the elements."""
        fb = self.fixed_subfield_basis()
        vecs = [self.digits(self._raw_mul(b, v)) for v in elements for b in fb]
        return len(self._fp_span_basis(vecs)) // len(fb)

    def fq_independent(self, elements: Sequence[int]) -> bool:
        return self.fq_rank(elements) == len(elements)

    def fixed_subfield_basis(self) -> tuple[int, ...]:
        """GF(p)-basis of the subfield fixed by theta."""
        if self._fq_basis is None:
            g = math.gcd(self.frob_power, self.s)
            if self.e * g == 1:
                self._fq_basis = (1,)
            else:
                self._fq_basis = tuple(self._kernel_of_power_minus_id(self._frob[1 % self.s]))
        return self._fq_basis

    def _kernel_of_power_minus_id(self, images: list[int]) -> list[int]:
        """Packed-basis of ker(L - id) for the GF(p)-linear map with given basis images."""
        # Columns of (L - id) indexed by basis vectors; solve homogeneous system.
        rows = []
        for k in range(self.dim):
            img = self.digits(self._raw_add(images[k], self._raw_neg(self.p**k)))
            rows.append(img)
        # rows[k] = (L - id)(b_k); kernel = combinations summing to 0.
        # Gaussian elimination on the transposed matrix.
        mat = [[rows[k][r] for k in range(self.dim)] for r in range(self.dim)]
        n = self.dim
        pivots = {}
        row = 0
        for col in range(n):
            sel = None
            for r in range(row, n):
                if mat[r][col]:
                    sel = r
                    break
            if sel is None:
                continue
            mat[row], mat[sel] = mat[sel], mat[row]
            inv = pow(mat[row][col], self.p - 2, self.p)
            mat[row] = [(c * inv) % self.p for c in mat[row]]
            for r in range(n):
                if r != row and mat[r][col]:
                    c = mat[r][col]
                    mat[r] = [(x - c * y) % self.p for x, y in zip(mat[r], mat[row])]
            pivots[col] = row
            row += 1
        kernel = []
        for free in range(n):
            if free in pivots:
                continue
            vec = [0] * n
            vec[free] = 1
            for col, r in pivots.items():
                vec[col] = (-mat[r][free]) % self.p
            kernel.append(self.from_digits(vec))
        return kernel

    def fq_basis(self) -> tuple[int, ...]:
        """Basis of the full field over the fixed subfield (s*e/|fq| elements).

        Deterministic: the greedy scan over packed integers, so for e = 1 and
        gcd(i, s) = 1 this is the polynomial basis 1, X, X^2, ...
        """
        fb = self.fixed_subfield_basis()
        target = self.dim // len(fb)
        picked: list[int] = []
        span: list[list[int]] = []
        pivset: list[int] = []
        for cand in range(1, self.order):
            vecs = [self.digits(self._raw_mul(b, cand)) for b in fb]
            trial = self._fp_span_basis([*map(list, span), *vecs]) if span else self._fp_span_basis(vecs)
            if len(trial) == (len(picked) + 1) * len(fb):
                picked.append(cand)
                span = trial
                if len(picked) == target:
                    return tuple(picked)
        raise ConstructionError("failed to build a basis")  # pragma: no cover

    def subfield_fq_basis(self, n: int) -> tuple[int, ...]:
        """n elements spanning the degree-n intermediate field over the fixed field.

        Requires n to divide s (and the fixed field to be GF(q), i.e.
        gcd(frob_power, s) == 1); the returned elements satisfy a^(q^n) = a.
        """
        if self.s % n != 0:
            raise ValueError(f"n = {n} does not divide s = {self.s}")
        images = [self.p**k for k in range(self.dim)]
        for _ in range(n):
            images = [self._apply_images(v, self._frobq) for v in images]
        fp_kernel = self._kernel_of_power_minus_id(images)
        fb = self.fixed_subfield_basis()
        picked: list[int] = []
        span: list[list[int]] = []
        for cand in fp_kernel:
            vecs = [self.digits(self._raw_mul(b, cand)) for b in fb]
            trial = self._fp_span_basis([*map(list, span), *vecs])
            if len(trial) == (len(picked) + 1) * len(fb):
                picked.append(cand)
                span = trial
                if len(picked) == n:
                    return tuple(picked)
        raise ConstructionError(f"subfield of degree {n} has too few independent elements")


def make_field(p: int, e: int, s: int, frob_power: int = 1,
               modulus: Sequence[int] | None = None) -> FiniteField:
    """Convenience constructor; picks the canonical modulus when none is given."""
    if modulus is None:
        modulus = find_irreducible(p, e * s)
    return FiniteField(p, e, s, modulus, frob_power)
