"""Designed-distance constructions: skew-BCH codes of both kinds, skew-RS
codes, evaluation codes, and an exact minimum-distance oracle.

First kind: the generator's right roots are consecutive ordinary powers of
an element alpha of an extension field (Hartmann-Tzeng style offsets
b + t1*i + t2*j).  Second kind: the roots are consecutive Frobenius powers
beta^(q^t) of beta = alpha^(q-1) for a normal element alpha.  Both reduce
to the minimal polynomial over the base field of a root orbit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, gcd

from .codes import Modulus, SkewCyclicCode
from .errors import ConditionViolatedError, GuardExceededError, SearchCancelledError
from .fields import FieldElement, norm_exponent
from .linalg import rank_i, right_kernel_i, unwrap
from .linearized import moore_matrix
from .rootsets import minimal_poly_over_subfield, minimal_polynomial, skew_vandermonde
from .skewpoly import SkewRing, apply_automorphism, lclm


# -- minimum distance oracle -------------------------------------------------------

_DISTANCE_LENGTH_GUARD = 24
_MESSAGE_ROUTE_GUARD = 1 << 24
_COLUMN_ROUTE_GUARD = 1 << 25


def _generator_rows_i(code):
    rows = getattr(code, "_gen_rows_i", None)
    if rows is None:
        rows = unwrap(code.generator_matrix)
    return rows


def min_distance_exact(code, strategy="auto", cancel=None):
    """Exact minimum Hamming distance of a linear code.

    Accepts any object with ``field`` and ``generator_matrix`` (full rank).
    Two search routes are implemented and must agree where both run: the
    smallest number of linearly dependent parity-check columns, and direct
    enumeration of all messages.  ``strategy`` picks "columns", "messages",
    or "auto" (cheaper estimated count).
    """
    field = code.field
    rows = _generator_rows_i(code)
    k = len(rows)
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    n = len(rows[0])
    if n > _DISTANCE_LENGTH_GUARD:
        raise GuardExceededError(f"distance oracle limited to n <= 24, got {n}")
    if rank_i(rows, field) != k:
        raise ValueError("generator matrix must have full rank")
    if strategy == "auto":
        msg_cost = field.order ** k
        col_cost = sum(comb(n, w) for w in range(1, n - k + 2))
        strategy = "messages" if msg_cost <= col_cost else "columns"
    if strategy == "messages":
        cost = field.order ** k
        if cost > _MESSAGE_ROUTE_GUARD:
            raise GuardExceededError(
                f"message enumeration cost {cost} exceeds 2^24", cost=cost
            )
        return _distance_by_messages(rows, field, n, cancel)
    if strategy == "columns":
        cost = sum(comb(n, w) for w in range(1, n - k + 2))
        if cost > _COLUMN_ROUTE_GUARD:
            raise GuardExceededError(
                f"column search cost {cost} exceeds 2^25", cost=cost
            )
        return _distance_by_columns(rows, field, n, k, cancel)
    raise ValueError(f"unknown strategy {strategy!r}")


def _distance_by_messages(rows, field, n, cancel=None):
    add, mul = field.add_i, field.mul_i
    best = n + 1
    k = len(rows)
    for msg in itertools.product(range(field.order), repeat=k):
        if cancel is not None and cancel.is_set():
            raise SearchCancelledError("distance search cancelled")
        if not any(msg):
            continue
        word = [0] * n
        for u, row in zip(msg, rows):
            if u:
                for j, c in enumerate(row):
                    if c:
                        word[j] = add(word[j], mul(u, c))
        w = sum(1 for c in word if c)
        if w < best:
            best = w
            if best == 1:
                return 1
    return best


def _distance_by_columns(rows, field, n, k, cancel=None):
    """Smallest w such that some w columns of the parity check are dependent."""
    parity = right_kernel_i(rows, field, ncols=n)   # rows of H
    cols = list(zip(*parity)) if parity else [()] * n
    for w in range(1, n + 1):
        for subset in itertools.combinations(range(n), w):
            if cancel is not None and cancel.is_set():
                raise SearchCancelledError("distance search cancelled")
            sub = [list(cols[j]) for j in subset]
            if rank_i(sub, field) < w:
                return w
    raise ArithmeticError("unreachable: the full column set is always dependent")


def is_mds(code):
    """d = n - k + 1, verified by the exact oracle."""
    rows = _generator_rows_i(code)
    n = len(rows[0]) if rows else 0
    k = len(rows)
    return min_distance_exact(code) == n - k + 1


# -- evaluation codes -----------------------------------------------------------------


class EvaluationCode:
    """The code {(p(a_1), ..., p(a_n)) : deg p < k} for points of full
    Vandermonde rank; dimension k, minimum distance n - k + 1 (MDS)."""

    def __init__(self, ring, points, k):
        field = ring.field
        pts = [field.element(a) for a in points]
        n = len(pts)
        if not 1 <= k < n:
            raise ValueError("need 1 <= k < n")
        full = skew_vandermonde(ring, n, pts)
        if rank_i(unwrap(full), field) != n:
            raise ConditionViolatedError(
                "points do not have full skew Vandermonde rank"
            )
        self.ring = ring
        self.field = field
        self.points = tuple(pts)
        self.n = n
        self.k = k
        self.generator_matrix = [row[:] for row in full[:k]]
        self._gen_rows_i = unwrap(self.generator_matrix)

    def __repr__(self):
        return f"EvaluationCode(n={self.n}, k={self.k})"


def evaluation_code(ring, points, k):
    return EvaluationCode(ring, points, k)


# -- skew-BCH codes of the first kind ---------------------------------------------------


@dataclass(frozen=True)
class Bch1Spec:
    """Parameters for a first-kind construction.

    ``base_ring`` is F_{q^m}[x; sigma]; ``emb`` embeds the base field into
    F_{q^(ms)} where alpha lives (the identity embedding when s = 1);
    designed roots are alpha^(b + t1*i + t2*j) for i <= delta-2, j <= nu.
    """

    base_ring: SkewRing
    emb: object
    alpha: FieldElement
    b: int
    t1: int
    t2: int
    delta: int
    nu: int
    n: int

    @property
    def s(self):
        return self.emb.target.degree // self.emb.source.degree

    @property
    def ext_ring(self):
        return SkewRing(self.emb.target, self.base_ring.e)

    @property
    def designed_distance(self):
        return self.delta + self.nu

    def validate(self):
        if self.emb.source != self.base_ring.field:
            raise ConditionViolatedError("embedding source must be the base field")
        if self.alpha.field != self.emb.target:
            raise ConditionViolatedError("alpha must live in the extension field")
        if self.delta < 2:
            raise ConditionViolatedError("delta must be at least 2")
        if self.t1 < 1 or self.t2 < 1 or self.b < 0 or self.nu < 0:
            raise ConditionViolatedError("need t1, t2 >= 1 and b, nu >= 0")
        field = self.emb.target
        q = self.base_ring.q
        exponents = (1,) if self.nu == 0 else (1, 2)
        for ell in exponents:
            t = self.t1 if ell == 1 else self.t2
            base = field.pow_i(self.alpha.i, t)
            for i in range(1, self.n):
                if field.pow_i(base, norm_exponent(q, i)) == 1:
                    raise ConditionViolatedError(
                        f"(alpha^t{ell})^[{i}] = 1 with [i] = (q^{i}-1)/(q-1); "
                        f"length {self.n} exceeds the admissible range"
                    )


def bch1_root_exponents(spec):
    return sorted(
        {
            spec.b + spec.t1 * i + spec.t2 * j
            for i in range(spec.delta - 1)
            for j in range(spec.nu + 1)
        }
    )


def bch1_max_length(spec):
    """Largest admissible n: the least i >= 1 with (alpha^t1)^[i] = 1
    (and the t2 analogue when nu > 0), scanned at desk scale."""
    field = spec.emb.target
    q = spec.base_ring.q
    bound = field.order
    best = None
    exponents = (spec.t1,) if spec.nu == 0 else (spec.t1, spec.t2)
    for t in exponents:
        base = field.pow_i(spec.alpha.i, t)
        for i in range(1, bound):
            if field.pow_i(base, norm_exponent(q, i)) == 1:
                best = i if best is None else min(best, i)
                break
    return best


def bch1_generator(spec):
    """(g, delta + nu): g is the least-degree monic polynomial over the base
    field vanishing at the designed roots; any length-n code it generates
    has minimum distance at least delta + nu."""
    spec.validate()
    field = spec.emb.target
    g = None
    for t in bch1_root_exponents(spec):
        root = FieldElement(field, field.pow_i(spec.alpha.i, t))
        m = minimal_poly_over_subfield(spec.base_ring, spec.emb, root)
        g = m if g is None else lclm(g, m)
    return g, spec.designed_distance


def constacyclic_modulus_for(ring, g, n):
    """x^n - a for the unique a in F* with g a right divisor, when one
    exists; scanned over all nonzero a."""
    for a in range(1, ring.field.order):
        f = ring.x_pow_minus(n, FieldElement(ring.field, a))
        if g.right_divides(f):
            return f
    return None


def left_x_multiple(g, n):
    """The monic degree-n left multiple x^(n - deg g) * g = sigma^k(g) x^k."""
    k = n - g.degree
    return apply_automorphism(g, k).times_x(k)


def bch1_code(spec, n=None):
    """The length-n code generated by the first-kind polynomial.

    The modulus defaults to x^n - a when some nonzero a makes g a right
    divisor, else to the monic left multiple x^(n - deg g) * g; the
    generator matrix does not depend on this choice.
    """
    n = spec.n if n is None else n
    g, designed = bch1_generator(spec)
    if g.degree > n:
        raise ConditionViolatedError(
            f"generator degree {g.degree} exceeds length {n}"
        )
    ring = spec.base_ring
    f = constacyclic_modulus_for(ring, g, n)
    if f is None:
        f = left_x_multiple(g, n)
    code = SkewCyclicCode(Modulus(f), g)
    return code, designed


def skew_rs1(ring, alpha, b, delta, n, f=None):
    """The code generated by lclm(x - alpha^(b+i) : i <= delta-2) for alpha
    in the base field; dimension n - delta + 1 and MDS."""
    field = ring.field
    alpha = field.element(alpha)
    q = ring.q
    seen = set()
    for i in range(n):
        v = field.pow_i(alpha.i, norm_exponent(q, i))
        if v in seen:
            raise ConditionViolatedError(
                "alpha^[0..n-1] are not distinct; length too large"
            )
        seen.add(v)
    roots = [
        FieldElement(field, field.pow_i(alpha.i, b + i)) for i in range(delta - 1)
    ]
    g = minimal_polynomial(ring, roots)
    if g.degree != delta - 1:
        raise ConditionViolatedError(
            "designed roots are not P-independent; generator degree dropped"
        )
    if f is None:
        f = constacyclic_modulus_for(ring, g, n)
        if f is None:
            f = left_x_multiple(g, n)
    elif not g.right_divides(f):
        raise ConditionViolatedError("supplied modulus is not a left multiple")
    return SkewCyclicCode(Modulus(f), g)


# -- skew-BCH codes of the second kind ----------------------------------------------------


def find_normal_element(ring):
    """The first power of the primitive element whose sigma-orbit is a basis
    over the fixed field (Moore matrix invertible); deterministic scan."""
    field = ring.field
    n = ring.m
    gen = field.gen
    for k in range(1, field.order - 1):
        cand = gen ** k
        orbit = [ring.sigma(cand, j) for j in range(n)]
        if rank_i(unwrap(moore_matrix(ring, orbit, n)), field) == n:
            return cand
    raise ArithmeticError("no normal element found; this cannot happen")


@dataclass(frozen=True)
class Bch2Spec:
    """Parameters for a second-kind construction over F_{q^m}, length n = ms.

    ``emb`` embeds the base field F_{q^m} into F_{q^n}; alpha generates a
    normal basis of F_{q^n} over F_q and beta = alpha^(q-1).  Designed root
    exponents are q^(b + t1*i + t2*j) applied to beta.
    """

    base_ring: SkewRing
    emb: object
    alpha: FieldElement
    b: int
    t1: int
    t2: int
    delta: int
    nu: int

    @property
    def s(self):
        return self.emb.target.degree // self.emb.source.degree

    @property
    def n(self):
        return self.base_ring.m * self.s

    @property
    def ext_ring(self):
        return SkewRing(self.emb.target, self.base_ring.e)

    @property
    def beta(self):
        field = self.emb.target
        return FieldElement(field, field.pow_i(self.alpha.i, self.base_ring.q - 1))

    @property
    def designed_distance(self):
        return self.delta + self.nu

    def validate(self):
        if self.emb.source != self.base_ring.field:
            raise ConditionViolatedError("embedding source must be the base field")
        if self.alpha.field != self.emb.target:
            raise ConditionViolatedError("alpha must live in the extension field")
        if self.delta < 2:
            raise ConditionViolatedError("delta must be at least 2")
        n = self.n
        ext = self.ext_ring
        if ext.m != n:
            raise ConditionViolatedError("extension ring order must equal the length")
        if gcd(n, self.t1) != 1:
            raise ConditionViolatedError(f"gcd(n, t1) = {gcd(n, self.t1)} != 1")
        if gcd(n, self.t2) >= self.delta:
            raise ConditionViolatedError(
                f"gcd(n, t2) = {gcd(n, self.t2)} >= delta = {self.delta}"
            )
        orbit = [ext.sigma(self.alpha, j) for j in range(n)]
        if rank_i(unwrap(moore_matrix(ext, orbit, n)), ext.field) != n:
            raise ConditionViolatedError("alpha does not generate a normal basis")


def bch2_exponent_sets(spec):
    """(S, S_closed): the designed exponent set modulo n, and its closure
    under the order-s subgroup generated by m (smallest union of cosets)."""
    n = spec.n
    m = spec.base_ring.m
    S = sorted(
        {
            (spec.b + spec.t1 * i + spec.t2 * j) % n
            for i in range(spec.delta - 1)
            for j in range(spec.nu + 1)
        }
    )
    closed = sorted({(t + m * l) % n for t in S for l in range(spec.s)})
    return S, closed


def bch2_generator(spec):
    """(g', delta + nu): g' = lclm(x - beta^(q^t) : t in the coset closure),
    computed in the extension ring with coefficients restricted to the base
    field; g' right-divides x^n - 1."""
    spec.validate()
    ext = spec.ext_ring
    field = ext.field
    q = spec.base_ring.q
    _, closed = bch2_exponent_sets(spec)
    beta = spec.beta
    factors = [
        ext.x_minus(FieldElement(field, field.pow_i(beta.i, q ** t))) for t in closed
    ]
    g_ext = lclm(*factors)
    coeffs = []
    for c in g_ext.coefficients:
        r = spec.emb.restrict(c)
        if r is None:
            raise ArithmeticError(
                "second-kind generator coefficient escaped the base field; bug"
            )
        coeffs.append(r)
    g = spec.base_ring.poly(coeffs)
    f = spec.base_ring.x_pow_minus(spec.n, spec.base_ring.field.one)
    if not g.right_divides(f):
        raise ArithmeticError("second-kind generator fails to divide x^n - 1; bug")
    return g, spec.designed_distance


def bch2_code(spec):
    g, designed = bch2_generator(spec)
    f = spec.base_ring.x_pow_minus(spec.n, spec.base_ring.field.one)
    return SkewCyclicCode(Modulus(f), g), designed
