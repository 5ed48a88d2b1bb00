"""The twisted polynomial ring F[x; sigma] with xa = sigma(a) x.

Polynomials carry left coefficients (ascending, trailing zeros trimmed).
Division, gcrd/lclm with Bezout data, right evaluation through the norm
formula, reciprocals, two-sidedness, similarity and irreducibility searches
all live here.  Coefficients are stored internally as packed field indices
so that enumeration loops stay fast; the public surface deals in
FieldElement values.
"""

from __future__ import annotations

import itertools
from math import inf

from .errors import (
    FieldMismatchError,
    GuardExceededError,
    SearchCancelledError,
)
from .fields import FieldElement, FrobeniusAut, norm_exponent

NEG_INF = -inf


class SkewRing:
    """F[x; sigma] for a finite field F = F_{q^m} and sigma the q-Frobenius.

    ``sigma`` may be a FrobeniusAut or the exponent e with sigma(a) = a^(p^e).
    The exponent must divide the field degree d; q = p^e, m = d/e, the fixed
    field is F_q and the center is F_q[x^m].  The commutative polynomial ring
    is the configuration e = d (sigma is then the identity and m = 1).
    """

    def __init__(self, field, sigma):
        if isinstance(sigma, FrobeniusAut):
            if sigma.field != field:
                raise FieldMismatchError("automorphism belongs to a different field")
            e = sigma.e
        else:
            e = int(sigma)
        d = field.degree
        if not 1 <= e <= d or d % e != 0:
            raise ValueError(
                f"sigma exponent {e} must divide the field degree {d} (use e = d for the identity)"
            )
        self.field = field
        self.e = e
        self.aut = sigma if isinstance(sigma, FrobeniusAut) else FrobeniusAut(field, e)
        self.q = field.p ** e
        self.m = d // e                       # order of sigma
        self.is_commutative = self.m == 1

    @property
    def sigma_order(self):
        return self.m

    def sigma(self, a, j=1):
        return self.aut.apply(a, j)

    def sigma_i(self, a, j=1):
        """sigma^j on a packed index."""
        return self.field.frob_i(a, (self.e * j) % self.field.degree)

    def in_fixed_field(self, a):
        a = self.field.element(a)
        return self.sigma_i(a.i) == a.i

    def __eq__(self, other):
        return (
            isinstance(other, SkewRing)
            and self.field == other.field
            and self.e == other.e
        )

    def __hash__(self):
        return hash((self.field, self.e))

    def __repr__(self):
        if self.is_commutative:
            return f"SkewRing({self.field.name}[x])"
        return f"SkewRing({self.field.name}[x; a->a^{self.q}])"

    # -- polynomial constructors ---------------------------------------------

    def poly(self, coeffs):
        """Polynomial from ascending coefficients (FieldElements, or 0/1 ints)."""
        ci = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != self.field:
                    raise FieldMismatchError("coefficient from a different field")
                ci.append(c.i)
            elif c in (0, 1):
                ci.append(c)
            else:
                raise TypeError("coefficients must be FieldElements (or the ints 0/1)")
        return SkewPoly._make(self, ci)

    def from_indices(self, indices):
        return SkewPoly._make(self, list(indices))

    @property
    def zero(self):
        return SkewPoly(self, ())

    @property
    def one(self):
        return SkewPoly(self, (1,))

    @property
    def x(self):
        return SkewPoly(self, (0, 1))

    def x_minus(self, a):
        a = self.field.element(a)
        return SkewPoly(self, (self.field.neg_i(a.i), 1))

    def x_pow_minus(self, n, a):
        """x^n - a."""
        a = self.field.element(a)
        ci = [0] * (n + 1)
        ci[0] = self.field.neg_i(a.i)
        ci[n] = self.field.add_i(ci[n], 1) if n == 0 else 1
        return SkewPoly._make(self, ci)

    def monic_polys(self, degree):
        """Iterate all monic polynomials of the exact degree, in lexicographic
        order of the ascending coefficient sequence."""
        if degree == 0:
            yield self.one
            return
        for tail in itertools.product(range(self.field.order), repeat=degree):
            yield SkewPoly(self, tail + (1,))

    def all_polys(self, max_degree):
        """Iterate every polynomial of degree at most max_degree (incl. zero)."""
        for ci in itertools.product(range(self.field.order), repeat=max_degree + 1):
            yield SkewPoly._make(self, list(ci))


# -- int-level kernels (ascending packed coefficient tuples) -------------------

def _trim(ci):
    n = len(ci)
    while n and ci[n - 1] == 0:
        n -= 1
    return ci[:n]


def _mul_ci(ring, a, b):
    if not a or not b:
        return ()
    field = ring.field
    mul = field.mul_i
    add = field.add_i
    frob = field.frob_i
    d = field.degree
    e = ring.e
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            t = (e * i) % d
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, frob(bj, t)))
    return tuple(out)


def _add_ci(ring, a, b):
    add = ring.field.add_i
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = add(out[i], c)
    return tuple(_trim(out))


def _sub_ci(ring, a, b):
    sub = ring.field.sub_i
    neg = ring.field.neg_i
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = sub(out[i], c) if i < len(a) else neg(c)
    return tuple(_trim(out))


def _right_divmod_ci(ring, f, g):
    """(s, r) with f = s*g + r and deg r < deg g."""
    if not g:
        raise ZeroDivisionError("right division by the zero polynomial")
    if len(f) < len(g):
        return (), tuple(f)
    field = ring.field
    mul = field.mul_i
    sub = field.sub_i
    frob = field.frob_i
    d = field.degree
    e = ring.e
    dg = len(g) - 1
    glead_inv = field.inv_i(g[-1])
    r = list(f)
    s = [0] * (len(f) - dg)
    for t in range(len(f) - 1 - dg, -1, -1):
        lead = r[t + dg]
        if lead:
            tw = (e * t) % d
            c = mul(lead, frob(glead_inv, tw))
            s[t] = c
            for j in range(dg):
                gj = g[j]
                if gj:
                    r[t + j] = sub(r[t + j], mul(c, frob(gj, tw)))
            r[t + dg] = 0
    return tuple(_trim(s)), tuple(_trim(r[:dg]))


def _left_divmod_ci(ring, f, g):
    """(s, r) with f = g*s + r and deg r < deg g."""
    if not g:
        raise ZeroDivisionError("left division by the zero polynomial")
    if len(f) < len(g):
        return (), tuple(f)
    field = ring.field
    mul = field.mul_i
    sub = field.sub_i
    frob = field.frob_i
    d = field.degree
    e = ring.e
    dg = len(g) - 1
    glead_inv = field.inv_i(g[-1])
    tw_back = (-e * dg) % d
    r = list(f)
    s = [0] * (len(f) - dg)
    for t in range(len(f) - 1 - dg, -1, -1):
        lead = r[t + dg]
        if lead:
            # g * (c x^t) puts g_l * sigma^l(c) at degree l + t
            c = frob(mul(glead_inv, lead), tw_back)
            s[t] = c
            for j in range(dg):
                gj = g[j]
                if gj:
                    r[t + j] = sub(r[t + j], mul(gj, frob(c, (e * j) % d)))
            r[t + dg] = 0
    return tuple(_trim(s)), tuple(_trim(r[:dg]))


def _right_divides_ci(ring, g, f):
    return not _right_divmod_ci(ring, f, g)[1]


def _monic_ci(ring, f):
    if not f:
        raise ZeroDivisionError("the zero polynomial cannot be made monic")
    if f[-1] == 1:
        return tuple(f)
    c = ring.field.inv_i(f[-1])
    mul = ring.field.mul_i
    return tuple(mul(c, x) for x in f)


def _monic_right_ci(ring, f):
    """Monic normalization by a right constant factor f * c, which preserves
    left-divisor and right-multiple properties (the left version preserves
    the mirrored ones)."""
    if not f:
        raise ZeroDivisionError("the zero polynomial cannot be made monic")
    if f[-1] == 1:
        return tuple(f)
    r = len(f) - 1
    d = ring.field.degree
    c = ring.field.frob_i(ring.field.inv_i(f[-1]), (-ring.e * r) % d)
    return _mul_ci(ring, f, (c,))


def _scale_ci(ring, c, f):
    if c == 0:
        return ()
    mul = ring.field.mul_i
    return tuple(mul(c, x) for x in f)


def _sigma_ci(ring, f, j):
    d = ring.field.degree
    t = (ring.e * j) % d
    frob = ring.field.frob_i
    return tuple(frob(c, t) for c in f)


def _eval_ci(ring, f, a):
    """Right evaluation sum_i f_i N_i(a) on packed indices."""
    field = ring.field
    mul = field.mul_i
    add = field.add_i
    frob = field.frob_i
    d = field.degree
    e = ring.e
    acc = 0
    cur = 1
    for i, c in enumerate(f):
        if i:
            cur = mul(cur, frob(a, (e * (i - 1)) % d))
        if c:
            acc = add(acc, mul(c, cur))
    return acc


class SkewPoly:
    """A polynomial in a SkewRing, with left coefficients.

    Immutable.  The degree of the zero polynomial is -inf.
    """

    __slots__ = ("ring", "_ci")

    def __init__(self, ring, ci):
        self.ring = ring
        self._ci = tuple(ci)

    @classmethod
    def _make(cls, ring, ci):
        return cls(ring, _trim(tuple(ci)))

    # -- structure -------------------------------------------------------------

    @property
    def degree(self):
        return len(self._ci) - 1 if self._ci else NEG_INF

    @property
    def is_zero(self):
        return not self._ci

    @property
    def is_monic(self):
        return bool(self._ci) and self._ci[-1] == 1

    @property
    def coefficients(self):
        return tuple(FieldElement(self.ring.field, c) for c in self._ci)

    def coefficient(self, i):
        c = self._ci[i] if 0 <= i < len(self._ci) else 0
        return FieldElement(self.ring.field, c)

    @property
    def leading_coefficient(self):
        if not self._ci:
            raise ValueError("the zero polynomial has no leading coefficient")
        return FieldElement(self.ring.field, self._ci[-1])

    @property
    def constant_coefficient(self):
        return self.coefficient(0)

    def monic(self):
        return SkewPoly(self.ring, _monic_ci(self.ring, self._ci))

    def _same_ring(self, other):
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise FieldMismatchError("polynomials from different rings")
        return other

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other):
        other = self._same_ring(other)
        return SkewPoly(self.ring, _add_ci(self.ring, self._ci, other._ci))

    def __sub__(self, other):
        other = self._same_ring(other)
        return SkewPoly(self.ring, _sub_ci(self.ring, self._ci, other._ci))

    def __neg__(self):
        neg = self.ring.field.neg_i
        return SkewPoly(self.ring, tuple(neg(c) for c in self._ci))

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            # f * c = sum f_i sigma^i(c) x^i
            if other.field != self.ring.field:
                raise FieldMismatchError("constant from a different field")
            mul = self.ring.field.mul_i
            out = [
                mul(fi, self.ring.sigma_i(other.i, i)) for i, fi in enumerate(self._ci)
            ]
            return SkewPoly._make(self.ring, out)
        other = self._same_ring(other)
        return SkewPoly(self.ring, _mul_ci(self.ring, self._ci, other._ci))

    def __rmul__(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.ring.field:
                raise FieldMismatchError("constant from a different field")
            return SkewPoly(self.ring, _scale_ci(self.ring, other.i, self._ci))
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def times_x(self, k=1):
        """Right multiplication by x^k (a plain coefficient shift)."""
        if self.is_zero:
            return self
        return SkewPoly(self.ring, (0,) * k + self._ci)

    # -- division ----------------------------------------------------------------

    def right_divmod(self, g):
        """(s, r) with self = s*g + r, deg r < deg g.  Unique."""
        g = self._same_ring(g)
        s, r = _right_divmod_ci(self.ring, self._ci, g._ci)
        return SkewPoly(self.ring, s), SkewPoly(self.ring, r)

    def left_divmod(self, g):
        """(s, r) with self = g*s + r, deg r < deg g.  Unique."""
        g = self._same_ring(g)
        s, r = _left_divmod_ci(self.ring, self._ci, g._ci)
        return SkewPoly(self.ring, s), SkewPoly(self.ring, r)

    def right_rem(self, g):
        return self.right_divmod(g)[1]

    def right_divides(self, f):
        """True when self is a right divisor of f (f = h * self)."""
        f = self._same_ring(f)
        return _right_divides_ci(self.ring, self._ci, f._ci)

    def left_divides(self, f):
        f = self._same_ring(f)
        return not _left_divmod_ci(self.ring, f._ci, self._ci)[1]

    # -- evaluation ----------------------------------------------------------------

    def __call__(self, a):
        """Right evaluation: the remainder of right division by x - a,
        computed as sum_i f_i N_i(a)."""
        a = self.ring.field.element(a)
        return FieldElement(self.ring.field, _eval_ci(self.ring, self._ci, a.i))

    # -- comparison and display -----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, SkewPoly)
            and self.ring == other.ring
            and self._ci == other._ci
        )

    def __hash__(self):
        return hash((self.ring, self._ci))

    def __bool__(self):
        return bool(self._ci)

    def _coeff_token(self, c):
        field = self.ring.field
        if field.primitive:
            return field.format_element(c)
        return "(" + field.format_element(c, style="tuple") + ")"

    def __str__(self):
        if not self._ci:
            return "0"
        parts = []
        for i in range(len(self._ci) - 1, -1, -1):
            c = self._ci[i]
            if not c:
                continue
            if i == 0:
                parts.append(self._coeff_token(c))
                continue
            xpart = "x" if i == 1 else f"x^{i}"
            if c == 1:
                parts.append(xpart)
            else:
                parts.append(self._coeff_token(c) + "*" + xpart)
        return "+".join(parts)

    def __repr__(self):
        return f"<{self.ring!r}: {self}>"


# -- Euclidean theory -------------------------------------------------------------


def evaluate(f, a):
    return f(a)


def gcrd_bezout(f1, f2):
    """(d, u, v) with d = gcrd(f1, f2) monic and d = u*f1 + v*f2.

    The multipliers come from the extended right Euclidean algorithm; when
    both inputs are nonzero and neither divides the other, deg u < deg f2.
    """
    f1._same_ring(f2)
    ring = f1.ring
    if f1.is_zero and f2.is_zero:
        raise ValueError("gcrd(0, 0) is undefined")
    r0, r1 = f1._ci, f2._ci
    u0, u1 = (1,), ()
    v0, v1 = (), (1,)
    while r1:
        q, r = _right_divmod_ci(ring, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _sub_ci(ring, u0, _mul_ci(ring, q, u1))
        v0, v1 = v1, _sub_ci(ring, v0, _mul_ci(ring, q, v1))
    c = ring.field.inv_i(r0[-1])
    return (
        SkewPoly(ring, _scale_ci(ring, c, r0)),
        SkewPoly(ring, _scale_ci(ring, c, u0)),
        SkewPoly(ring, _scale_ci(ring, c, v0)),
    )


def gcrd(f1, f2):
    return gcrd_bezout(f1, f2)[0]


def gcld_bezout(f1, f2):
    """(d, u, v) with d = gcld(f1, f2) monic and d = f1*u + f2*v."""
    f1._same_ring(f2)
    ring = f1.ring
    if f1.is_zero and f2.is_zero:
        raise ValueError("gcld(0, 0) is undefined")
    r0, r1 = f1._ci, f2._ci
    u0, u1 = (1,), ()
    v0, v1 = (), (1,)
    while r1:
        q, r = _left_divmod_ci(ring, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _sub_ci(ring, u0, _mul_ci(ring, u1, q))
        v0, v1 = v1, _sub_ci(ring, v0, _mul_ci(ring, v1, q))
    # monic normalization must multiply from the right: f1 (u c) + f2 (v c)
    lead = r0[-1]
    if lead != 1:
        r = len(r0) - 1
        d = ring.field.degree
        c = ring.field.frob_i(ring.field.inv_i(lead), (-ring.e * r) % d)
        cpoly = (c,)
        r0 = _mul_ci(ring, r0, cpoly)
        u0 = _mul_ci(ring, u0, cpoly)
        v0 = _mul_ci(ring, v0, cpoly)
    return SkewPoly(ring, r0), SkewPoly(ring, u0), SkewPoly(ring, v0)


def gcld(f1, f2):
    return gcld_bezout(f1, f2)[0]


def _lclm2(f1, f2):
    ring = f1.ring
    if f1.is_zero or f2.is_zero:
        raise ValueError("lclm requires nonzero operands")
    r0, r1 = f1._ci, f2._ci
    u0, u1 = (1,), ()
    while r1:
        q, r = _right_divmod_ci(ring, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _sub_ci(ring, u0, _mul_ci(ring, q, u1))
    # the multiplier row of the vanished remainder gives u with u*f1 = lclm
    ell = _mul_ci(ring, u1, f1._ci)
    return SkewPoly(ring, _monic_ci(ring, ell))


def lclm(*polys):
    """Least common left multiple, monic; variadic form folds pairwise."""
    if not polys:
        raise ValueError("lclm of nothing")
    acc = polys[0]
    acc._same_ring(acc)
    if acc.is_zero:
        raise ValueError("lclm requires nonzero operands")
    for f in polys[1:]:
        acc = _lclm2(acc, acc._same_ring(f))
    return acc.monic() if len(polys) == 1 else acc


def _lcrm2(f1, f2):
    ring = f1.ring
    if f1.is_zero or f2.is_zero:
        raise ValueError("lcrm requires nonzero operands")
    r0, r1 = f1._ci, f2._ci
    u0, u1 = (1,), ()
    while r1:
        q, r = _left_divmod_ci(ring, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _sub_ci(ring, u0, _mul_ci(ring, u1, q))
    ell = _mul_ci(ring, f1._ci, u1)
    return SkewPoly(ring, _monic_right_ci(ring, ell))


def lcrm(*polys):
    """Least common right multiple, monic."""
    if not polys:
        raise ValueError("lcrm of nothing")
    acc = polys[0]
    if acc.is_zero:
        raise ValueError("lcrm requires nonzero operands")
    for f in polys[1:]:
        acc = _lcrm2(acc, acc._same_ring(f))
    return acc.monic() if len(polys) == 1 else acc


# -- reciprocals and automorphism transport -------------------------------------


def left_reciprocal(g):
    """rho_l(g) = sum_i x^(r-i) g_i = sum_i sigma^i(g_{r-i}) x^i, r = deg g.

    With sigma = id this is the classical reciprocal x^r g(1/x).
    """
    if g.is_zero:
        raise ValueError("reciprocal of the zero polynomial")
    ring = g.ring
    r = len(g._ci) - 1
    out = [ring.sigma_i(g._ci[r - i], i) for i in range(r + 1)]
    return SkewPoly._make(ring, out)


def apply_automorphism(g, j=1):
    """Coefficientwise sigma^j; a ring automorphism with x*g = sigma(g)*x."""
    return SkewPoly(g.ring, _sigma_ci(g.ring, g._ci, j))


def product_eval_check(f, g, a):
    """(f*g)(a) via the case split: 0 when g(a) = 0, else f(a^g(a)) * g(a).

    Asserts agreement with direct evaluation of the product before returning.
    """
    f._same_ring(g)
    ring = f.ring
    field = ring.field
    a = field.element(a)
    ga = _eval_ci(ring, g._ci, a.i)
    if ga == 0:
        value = 0
    else:
        conj = field.mul_i(field.mul_i(ring.sigma_i(ga), a.i), field.inv_i(ga))
        value = field.mul_i(_eval_ci(ring, f._ci, conj), ga)
    direct = _eval_ci(ring, _mul_ci(ring, f._ci, g._ci), a.i)
    if value != direct:
        raise ArithmeticError("product evaluation identity failed; arithmetic bug")
    return FieldElement(field, value)


# -- two-sidedness, companion matrices, similarity --------------------------------


def is_two_sided(f):
    """True when f = c x^t g with g in the center F_q[x^m].

    The zero polynomial and nonzero constants are two-sided.  For x^n - a this
    reduces to: m divides n and sigma(a) = a.
    """
    if f.is_zero:
        return True
    ring = f.ring
    field = ring.field
    ci = f._ci
    t = next(i for i, c in enumerate(ci) if c)
    inv0 = field.inv_i(ci[t])
    for i in range(t, len(ci)):
        c = ci[i]
        if not c:
            continue
        if (i - t) % ring.m:
            return False
        ratio = field.mul_i(c, inv0)
        if ring.sigma_i(ratio) != ratio:
            return False
    return True


def companion_matrix(f):
    """The n x n companion matrix: superdiagonal ones, last row -f_0..-f_{n-1}."""
    if not f.is_monic:
        raise ValueError("companion matrix needs a monic polynomial")
    n = f.degree
    if n < 1:
        raise ValueError("companion matrix needs degree >= 1")
    field = f.ring.field
    zero, one = field.zero, field.one
    rows = []
    for i in range(n - 1):
        row = [zero] * n
        row[i + 1] = one
        rows.append(row)
    rows.append([-f.coefficient(j) for j in range(n)])
    return rows


_SIMILARITY_DEGREE_GUARD = 4
_SIMILARITY_FIELD_GUARD = 16


def similar_bruteforce(f, g, cancel=None):
    """Search a witness h (nonzero, deg h < deg f) with gcrd(f, h) = 1 and
    lclm(f, h) = monic(g * h).  Returns the witness or None.

    Such an h exists exactly when the quotient modules by f and by g are
    isomorphic: the witness is a representative of the image of the coset
    of 1, so its degree is below deg f, but it need not be monic and g*h is
    a least common left multiple only up to a left unit.  (Requiring a monic
    witness with g*h on the nose misses e.g. x-1 vs x-w over F_4.)

    Similar polynomials have equal degree, so unequal degrees raise.
    Guarded to deg f <= 4 and field size <= 16.
    """
    f._same_ring(g)
    if not (f.is_monic and g.is_monic):
        raise ValueError("similarity test needs monic polynomials")
    if f.degree != g.degree:
        raise ValueError("similar polynomials have equal degree")
    ring = f.ring
    n = f.degree
    if n > _SIMILARITY_DEGREE_GUARD or ring.field.order > _SIMILARITY_FIELD_GUARD:
        raise GuardExceededError(
            "similarity search guarded to degree <= 4 over fields of size <= 16",
            cost=ring.field.order ** n,
        )
    one = ring.one
    for ci in itertools.product(range(ring.field.order), repeat=n):
        if cancel is not None and cancel.is_set():
            raise SearchCancelledError("similarity search cancelled")
        h = SkewPoly._make(ring, ci)
        if h.is_zero:
            continue
        if gcrd(f, h) == one and lclm(f, h) == (g * h).monic():
            return h
    return None


_IRREDUCIBLE_COST_GUARD = 1 << 24


def _search_right_divisor(f, degrees, cancel=None):
    ring = f.ring
    fci = f._ci
    for d in degrees:
        for tail in itertools.product(range(ring.field.order), repeat=d):
            if cancel is not None and cancel.is_set():
                raise SearchCancelledError("divisor search cancelled")
            if _right_divides_ci(ring, tail + (1,), fci):
                return SkewPoly(ring, tail + (1,))
    return None


def _search_left_divisor(f, degrees, cancel=None):
    ring = f.ring
    fci = f._ci
    for d in degrees:
        for tail in itertools.product(range(ring.field.order), repeat=d):
            if cancel is not None and cancel.is_set():
                raise SearchCancelledError("divisor search cancelled")
            g = tail + (1,)
            if not _left_divmod_ci(ring, fci, g)[1]:
                return SkewPoly(ring, g)
    return None


def is_irreducible_bruteforce(f, cancel=None):
    """True when every right (hence left) divisor is a unit or has deg f.

    Searches monic right divisors of degree 1..floor(n/2) and monic left
    divisors of degree 1..floor((n-1)/2); cost-guarded.
    """
    n = f.degree
    if f.is_zero or n < 1:
        raise ValueError("irreducibility applies to polynomials of degree >= 1")
    if n == 1:
        return True
    N = f.ring.field.order
    cost = N ** (n // 2)
    if cost > _IRREDUCIBLE_COST_GUARD:
        raise GuardExceededError(
            f"irreducibility enumeration cost {cost} exceeds 2^24", cost=cost
        )
    if _search_right_divisor(f, range(1, n // 2 + 1), cancel) is not None:
        return False
    if _search_left_divisor(f, range(1, (n - 1) // 2 + 1), cancel) is not None:
        return False
    return True


# -- the commutative companion of right evaluation --------------------------------


class CommutativePoly:
    """A sparse ordinary polynomial over a finite field (exponent -> coeff)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = {e: c for e, c in coeffs.items() if c}

    def evaluate(self, a):
        a = self.field.element(a)
        acc = 0
        for e, c in self.coeffs.items():
            acc = self.field.add_i(acc, self.field.mul_i(c, self.field.pow_i(a.i, e)))
        return FieldElement(self.field, acc)

    @property
    def degree(self):
        return max(self.coeffs) if self.coeffs else NEG_INF

    def __eq__(self, other):
        return (
            isinstance(other, CommutativePoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            token = self.field.format_element(self.coeffs[e])
            if e == 0:
                parts.append(token)
            else:
                ypart = "y" if e == 1 else f"y^{e}"
                parts.append(ypart if self.coeffs[e] == 1 else f"{token}*{ypart}")
        return "+".join(parts)

    __repr__ = __str__


def to_commutative(f):
    """The ordinary polynomial sum_i f_i y^((q^i-1)/(q-1)); its usual
    evaluation agrees with right evaluation of f at every point."""
    q = f.ring.q
    return CommutativePoly(
        f.ring.field, {norm_exponent(q, i): c for i, c in enumerate(f._ci) if c}
    )
