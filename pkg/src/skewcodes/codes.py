"""Skew circulants, skew-cyclic and skew-constacyclic codes, duality,
check polynomials, divisor enumeration, and the classical circulant theory
as the sigma = id configuration.

A length-n word (c_0, ..., c_{n-1}) corresponds to the coset of the
polynomial sum c_i x^i modulo the left ideal of the modulus f; codes are the
row spaces of skew circulants, whose row i is x^i * g reduced by right
division modulo f.
"""

from __future__ import annotations

import itertools
import random

from .errors import (
    GuardExceededError,
    NotARightDivisorError,
    NotConstacyclicError,
    NotTwoSidedError,
    SearchCancelledError,
)
from .fields import FieldElement
from .linalg import (
    in_row_space_i,
    is_zero_matrix_i,
    mat_mul_i,
    rank_i,
    row_space_equal_i,
    unwrap,
    wrap,
)
from .rootsets import require_wedderburn_roots, skew_vandermonde
from .skewpoly import (
    SkewPoly,
    SkewRing,
    _left_divmod_ci,
    _mul_ci,
    _right_divmod_ci,
    _trim,
    apply_automorphism,
    is_two_sided,
    left_reciprocal,
)


class Modulus:
    """A monic degree-n modulus f, with derived structure flags.

    ``constacyclic_constant`` is a when f = x^n - a with a nonzero, else
    None; ``two_sided`` is recomputed from f, never user-set.
    """

    def __init__(self, f):
        if not f.is_monic or f.degree < 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.ring = f.ring
        self.poly = f
        self.n = f.degree
        self.two_sided = is_two_sided(f)
        a = None
        ci = f._ci
        if ci[0] and all(c == 0 for c in ci[1:-1]):
            a = FieldElement(self.ring.field, self.ring.field.neg_i(ci[0]))
        self.constacyclic_constant = a

    @property
    def is_constacyclic(self):
        return self.constacyclic_constant is not None

    def __eq__(self, other):
        return isinstance(other, Modulus) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"Modulus({self.poly})"


def _as_modulus(f):
    return f if isinstance(f, Modulus) else Modulus(f)


def _circulant_rows_i(mod, g_ci):
    """Rows v_f(x^i g) as packed index lists; row 0 is g reduced mod f."""
    ring = mod.ring
    field = ring.field
    n = mod.n
    _, row = _right_divmod_ci(ring, g_ci, mod.poly._ci)
    row = list(row) + [0] * (n - len(row))
    rows = [row]
    ftrunc = mod.poly._ci[:-1]
    sigma = ring.sigma_i
    mul = field.mul_i
    sub = field.sub_i
    for _ in range(n - 1):
        prev = rows[-1]
        top = sigma(prev[n - 1])
        nxt = [0] + [sigma(c) for c in prev[: n - 1]]
        if top:
            # x^n = f - sum_{j<n} f_j x^j in the coset: subtract top * f_j
            for j, fj in enumerate(ftrunc):
                if fj:
                    nxt[j] = sub(nxt[j], mul(top, fj))
        rows.append(nxt)
    return rows


class SkewCirculant:
    """The n x n matrix whose rows are x^i * g reduced modulo the modulus."""

    def __init__(self, mod, g):
        mod = _as_modulus(mod)
        g = mod.ring.poly(g.coefficients) if g.ring != mod.ring else g
        self.modulus = mod
        self.poly = g
        self._rows_i = _circulant_rows_i(mod, g._ci)

    @property
    def rows(self):
        return wrap(self._rows_i, self.modulus.ring.field)

    def rank(self):
        return rank_i(self._rows_i, self.modulus.ring.field)

    def row(self, i):
        return [FieldElement(self.modulus.ring.field, c) for c in self._rows_i[i]]

    def __eq__(self, other):
        if isinstance(other, SkewCirculant):
            return (
                self.modulus.ring == other.modulus.ring
                and self._rows_i == other._rows_i
            )
        return NotImplemented

    def __repr__(self):
        return f"SkewCirculant(f={self.modulus.poly}, g={self.poly})"


def skew_circulant(mod, g):
    return SkewCirculant(mod, g)


def poly_to_word(f, n):
    """v_f: the length-n left-coefficient vector of a degree < n polynomial."""
    if f.degree >= n:
        raise ValueError("polynomial degree must be below the length")
    ci = list(f._ci) + [0] * (n - len(f._ci))
    return tuple(FieldElement(f.ring.field, c) for c in ci)


def word_to_poly(ring, word):
    """p_f: the polynomial with the word as left coefficients."""
    return ring.from_indices(ring.field.element(c).i for c in word)


def constacyclic_shift(ring, a, word):
    """(c_0, ..., c_{n-1}) -> (a sigma(c_{n-1}), sigma(c_0), ..., sigma(c_{n-2}))."""
    field = ring.field
    a = field.element(a)
    idx = [field.element(c).i for c in word]
    out = [field.mul_i(a.i, ring.sigma_i(idx[-1]))]
    out.extend(ring.sigma_i(c) for c in idx[:-1])
    return tuple(FieldElement(field, c) for c in out)


class SkewCyclicCode:
    """The code generated by a monic right divisor g of the modulus f.

    Dimension k = n - deg g; the generator matrix is the banded k x n
    matrix whose row i carries sigma^i of the coefficients of g shifted i
    places (the first k rows of the skew circulant of g).
    """

    def __init__(self, mod, g):
        mod = _as_modulus(mod)
        if not g.is_monic:
            raise ValueError("generator must be monic")
        s, r = _right_divmod_ci(mod.ring, mod.poly._ci, g._ci)
        if r:
            raise NotARightDivisorError(
                f"{g} does not right-divide {mod.poly}; remainder {SkewPoly(mod.ring, r)}",
                remainder=SkewPoly(mod.ring, r),
            )
        self.modulus = mod
        self.ring = mod.ring
        self.field = mod.ring.field
        self.generator = g
        self.cofactor = SkewPoly(mod.ring, s)          # f = cofactor * g
        self.n = mod.n
        self.k = mod.n - g.degree
        self._gen_rows_i = self._banded_rows()

    def _banded_rows(self):
        ring = self.ring
        gci = self.generator._ci
        rows = []
        for i in range(self.k):
            shifted = [0] * i + [ring.sigma_i(c, i) for c in gci]
            rows.append(shifted + [0] * (self.n - len(shifted)))
        return rows

    @property
    def generator_matrix(self):
        return wrap(self._gen_rows_i, self.field)

    def circulant(self):
        return SkewCirculant(self.modulus, self.generator)

    def contains(self, word):
        """Membership via right division by g; cross-checked against the
        row-space test (the two must agree)."""
        idx = [self.field.element(c).i for c in word]
        if len(idx) != self.n:
            raise ValueError(f"word length {len(idx)}, expected {self.n}")
        _, r = _right_divmod_ci(self.ring, tuple(_trim(idx)), self.generator._ci)
        by_division = not r
        by_rank = in_row_space_i(idx, self._gen_rows_i, self.field)
        if by_division != by_rank:
            raise ArithmeticError("membership routes disagree; arithmetic bug")
        return by_division

    __contains__ = contains

    def words(self, limit=1 << 20):
        """Iterate all codewords (message enumeration); cost-guarded."""
        count = self.field.order ** self.k
        if count > limit:
            raise GuardExceededError(f"code has {count} words", cost=count)
        for msg in itertools.product(range(self.field.order), repeat=self.k):
            word = [0] * self.n
            add, mul = self.field.add_i, self.field.mul_i
            for u, row in zip(msg, self._gen_rows_i):
                if u:
                    for j, c in enumerate(row):
                        if c:
                            word[j] = add(word[j], mul(u, c))
            yield tuple(FieldElement(self.field, c) for c in word)

    def __eq__(self, other):
        return (
            isinstance(other, SkewCyclicCode)
            and self.modulus == other.modulus
            and self.generator == other.generator
        )

    def __repr__(self):
        return (
            f"SkewCyclicCode(n={self.n}, k={self.k}, f={self.modulus.poly}, "
            f"g={self.generator})"
        )


def code_from_generator(mod, g):
    return SkewCyclicCode(mod, g)


# -- two-sided moduli ------------------------------------------------------------


def circulant_diag(ring, c, n):
    """The circulant of a constant: diag(c, sigma(c), ..., sigma^{n-1}(c))."""
    field = ring.field
    c = field.element(c)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = ring.sigma_i(c.i, i)
    return wrap(rows, field)


def two_sided_circulant_product(mod, g, g2):
    """For a two-sided modulus, the circulant of g*g2 equals the product of
    the circulants.  Returns the common matrix; raises NotTwoSidedError for
    other moduli and ArithmeticError if the identity fails (a bug)."""
    mod = _as_modulus(mod)
    if not mod.two_sided:
        raise NotTwoSidedError(f"{mod.poly} is not two-sided")
    left = _circulant_rows_i(mod, _mul_ci(mod.ring, g._ci, g2._ci))
    right = mat_mul_i(
        _circulant_rows_i(mod, g._ci),
        _circulant_rows_i(mod, g2._ci),
        mod.ring.field,
    )
    if left != right:
        raise ArithmeticError("two-sided circulant multiplicativity failed; bug")
    return wrap(left, mod.ring.field)


# -- constacyclic machinery --------------------------------------------------------


def _require_constacyclic(mod):
    mod = _as_modulus(mod)
    if not mod.is_constacyclic:
        raise NotConstacyclicError(f"{mod.poly} is not of the form x^n - a")
    return mod


def cofactor_constant(mod, g, rng_seed=0):
    """For g a right divisor of x^n - a: c = sigma^n(g_0) a g_0^(-1).

    Verifies x^n - c = sigma^n(g) h for the cofactor h, and the product law
    circulant_a(g' g) = circulant_c(g') circulant_a(g) on a few
    deterministic pseudorandom g'.
    """
    mod = _require_constacyclic(mod)
    ring = mod.ring
    field = ring.field
    a = mod.constacyclic_constant
    g0 = g.constant_coefficient
    if not g0:
        raise ZeroDivisionError("divisor of x^n - a has nonzero constant term")
    s, r = _right_divmod_ci(ring, mod.poly._ci, g._ci)
    if r:
        raise NotARightDivisorError(f"{g} does not right-divide {mod.poly}")
    h = SkewPoly(ring, s)
    n = mod.n
    c = FieldElement(
        field,
        field.mul_i(field.mul_i(ring.sigma_i(g0.i, n), a.i), field.inv_i(g0.i)),
    )
    lhs = ring.x_pow_minus(n, c)
    if apply_automorphism(g, n) * h != lhs:
        raise ArithmeticError("cofactor constant identity failed; bug")
    mod_c = Modulus(lhs)
    rng = random.Random(rng_seed)
    for _ in range(3):
        gp = ring.from_indices(rng.randrange(field.order) for _ in range(n))
        prod_rows = _circulant_rows_i(mod, _mul_ci(ring, gp._ci, g._ci))
        split = mat_mul_i(
            _circulant_rows_i(mod_c, gp._ci), _circulant_rows_i(mod, g._ci), field
        )
        if prod_rows != split:
            raise ArithmeticError("constacyclic product law failed; bug")
    return c


def transpose_decomposition(mod, g):
    """Decompose the transpose of the circulant of a right divisor g of
    x^n - a.

    Returns (g_sharp, g_circ, c) with c = sigma^n(g_0) a g_0^(-1),
    g_sharp = a sigma^k(rho_l(g)) x^k and g_circ = a sigma^k(rho_l(g)),
    where k = n - deg g.  Checks numerically that the transpose equals the
    (x^n - c^(-1))-circulant of g_sharp, which factors as the
    (x^n - sigma^k(c^(-1)))-circulant of g_circ times the
    (x^n - c^(-1))-circulant of x^k, and that g_circ right-divides
    x^n - sigma^k(c^(-1)).
    """
    mod = _require_constacyclic(mod)
    ring = mod.ring
    field = ring.field
    n = mod.n
    a = mod.constacyclic_constant
    s, r = _right_divmod_ci(ring, mod.poly._ci, g._ci)
    if r:
        raise NotARightDivisorError(f"{g} does not right-divide {mod.poly}")
    k = n - g.degree
    c = cofactor_constant(mod, g)
    g_circ = a * apply_automorphism(left_reciprocal(g), k)
    g_sharp = g_circ.times_x(k)
    c_inv = c.inverse()
    mod_cinv = Modulus(ring.x_pow_minus(n, c_inv))
    sig_k_cinv = ring.sigma(c_inv, k)
    mod_sig = Modulus(ring.x_pow_minus(n, sig_k_cinv))
    lhs = [list(col) for col in zip(*_circulant_rows_i(mod, g._ci))]
    rhs = _circulant_rows_i(mod_cinv, g_sharp._ci)
    if lhs != rhs:
        raise ArithmeticError("transpose-of-circulant identity failed; bug")
    x_k = (0,) * k + (1,)
    split = mat_mul_i(
        _circulant_rows_i(mod_sig, g_circ._ci),
        _circulant_rows_i(mod_cinv, x_k),
        field,
    )
    if split != rhs:
        raise ArithmeticError("transpose factorization failed; bug")
    if not g_circ.monic().right_divides(mod_sig.poly):
        raise ArithmeticError("g_circ fails to right-divide its modulus; bug")
    return g_sharp, g_circ, c


class DualData:
    """The dual of a skew-constacyclic code with the raw (non-monic) dual
    generator and both parity-check matrices.

    ``primal_parity_check`` annihilates the primal codewords via H w^T = 0;
    ``dual_parity_check`` does the same for the dual code.
    """

    def __init__(self, code, raw_generator, primal_parity_check, dual_parity_check):
        self.code = code
        self.raw_generator = raw_generator
        self.primal_parity_check = primal_parity_check
        self.dual_parity_check = dual_parity_check


def dual_code(code):
    """The dual of a (sigma, x^n - a)-code, which is (sigma, x^n - a^(-1)).

    With f = h g, the dual generator is h_rec = rho_l(sigma^(-n)(h)).  The
    function checks that h_rec right-divides x^n - a^(-1), that the
    circulant of g annihilates the transposed circulant of h_rec, and the
    rank condition, then returns the dual code (monic-normalized generator)
    together with the raw h_rec, the primal parity check (first n-k rows of
    the h_rec circulant) and the dual's parity check (first k rows of the g
    circulant).
    """
    mod = _require_constacyclic(code.modulus)
    ring = code.ring
    field = ring.field
    n = code.n
    a = mod.constacyclic_constant
    h = code.cofactor
    h_rec = left_reciprocal(apply_automorphism(h, -n))
    dual_mod = Modulus(ring.x_pow_minus(n, a.inverse()))
    if not h_rec.monic().right_divides(dual_mod.poly):
        raise ArithmeticError("dual generator fails to divide its modulus; bug")
    g_rows = _circulant_rows_i(mod, code.generator._ci)
    h_rows = _circulant_rows_i(dual_mod, h_rec._ci)
    prod = mat_mul_i(g_rows, [list(col) for col in zip(*h_rows)], field)
    if not is_zero_matrix_i(prod):
        raise ArithmeticError("annihilation of the dual circulant failed; bug")
    if rank_i(h_rows, field) != n - code.k:
        raise ArithmeticError("dual circulant rank condition failed; bug")
    dual = SkewCyclicCode(dual_mod, h_rec.monic())
    if not row_space_equal_i(dual._gen_rows_i, h_rows, field):
        raise ArithmeticError("dual generator row space mismatch; bug")
    return DualData(
        dual,
        h_rec,
        wrap(h_rows[: n - code.k], field),
        wrap(g_rows[: code.k], field),
    )


def check_polynomial(code):
    """The check data (sigma^(-n)(h), c_tilde) of a code modulo x^n - a = h g.

    A word w lies in the code exactly when the product of its polynomial
    with sigma^(-n)(h) reduces to zero modulo x^n - c_tilde, where
    c_tilde = sigma^(-n)(c) and c = sigma^n(g_0) a g_0^(-1).
    """
    mod = _require_constacyclic(code.modulus)
    ring = code.ring
    n = code.n
    c = cofactor_constant(mod, code.generator)
    c_tilde = ring.sigma(c, (-n) % ring.m)
    check = apply_automorphism(code.cofactor, -n)
    # x^n - c_tilde = g * sigma^(-n)(h)
    if code.generator * check != ring.x_pow_minus(n, c_tilde):
        raise ArithmeticError("check polynomial identity failed; bug")
    return check, c_tilde


def check_kernel_contains(code, check, c_tilde, word):
    """Evaluate the check map on a word: True when w * check = 0 mod
    x^n - c_tilde (the kernel is exactly the code)."""
    ring = code.ring
    idx = tuple(_trim([ring.field.element(c).i for c in word]))
    prod = _mul_ci(ring, idx, check._ci)
    mod_ct = ring.x_pow_minus(code.n, c_tilde)
    _, r = _right_divmod_ci(ring, prod, mod_ct._ci)
    return not r


def self_dual_search(ring, n, eps=1, cancel=None):
    """All self-dual (sigma, x^n - eps)-codes, eps in {1, -1}, n even.

    Enumerates monic h of degree n/2 with x^n - eps = h * rho_l(sigma^(-n)(h))
    and returns the codes generated by the reciprocal factor; each returned
    code is verified equal to its dual as a row space.
    """
    if n % 2:
        raise ValueError("self-dual skew-constacyclic codes need even length")
    if eps not in (1, -1):
        raise ValueError("eps must be 1 or -1")
    field = ring.field
    eps_el = field.one if eps == 1 else -field.one
    cost = field.order ** (n // 2)
    if cost > (1 << 20):
        raise GuardExceededError(f"self-dual search cost {cost} exceeds 2^20", cost=cost)
    target = ring.x_pow_minus(n, eps_el)
    mod = Modulus(target)
    out = []
    for h in ring.monic_polys(n // 2):
        if cancel is not None and cancel.is_set():
            raise SearchCancelledError("self-dual search cancelled")
        if not h.constant_coefficient:
            continue
        h_rec = left_reciprocal(apply_automorphism(h, -n))
        if h * h_rec == target:
            code = SkewCyclicCode(mod, h_rec.monic())
            dual = dual_code(code).code
            if not row_space_equal_i(code._gen_rows_i, dual._gen_rows_i, field):
                raise ArithmeticError("claimed self-dual code differs from its dual")
            out.append(code)
    return out


def vandermonde_parity_check(code, roots=None, emb=None):
    """The skew Vandermonde parity check of a code whose generator is a
    Wedderburn polynomial: w is a codeword iff w M = 0.

    Without arguments the roots are those of the generator in its own field
    (raising NotWedderburnError when the generator is not their minimal
    polynomial).  With an embedding, the supplied roots live in the
    extension; the annihilation of all generator rows is then asserted and
    the matrix returned.
    """
    same_field = emb is None
    if roots is None:
        roots = require_wedderburn_roots(code.generator)
        ring = code.ring
    else:
        ring = code.ring if same_field else SkewRing(emb.target, code.ring.e)
        roots = [ring.field.element(rt) for rt in roots]
    M = skew_vandermonde(ring, code.n, roots)
    M_i = unwrap(M)
    field = ring.field
    for row in code._gen_rows_i:
        if not same_field:
            row = [emb.embed(FieldElement(code.field, c)).i for c in row]
        prod = mat_mul_i([list(row)], M_i, field)
        if not is_zero_matrix_i(prod):
            raise ArithmeticError("codeword fails Vandermonde annihilation; bug")
    if same_field:
        # annihilation plus matching kernel dimension pins the kernel to the code
        if code.n - rank_i(M_i, field) != code.k:
            raise ArithmeticError("Vandermonde kernel dimension mismatch; bug")
    return M


# -- divisor enumeration ------------------------------------------------------------

_ENUM_COST_GUARD = 1 << 25


def enumerate_right_divisors(f, degrees=None, cancel=None):
    """All monic right divisors of f, grouped by degree.

    Degrees up to n/2 are found by direct candidate enumeration with a
    right-division test; higher degrees enumerate the monic left cofactor h
    (f = h * g) and recover g as the left quotient, which is a bijection
    since quotients are unique.  Lists are ordered lexicographically on the
    ascending coefficient sequence.  Returns {degree: [divisors]} including
    the trivial degrees 0 and n.
    """
    f = f.poly if isinstance(f, Modulus) else f
    if not f.is_monic:
        raise ValueError("divisor enumeration needs a monic modulus")
    ring = f.ring
    N = ring.field.order
    n = f.degree
    if degrees is None:
        wanted = list(range(n + 1))
    elif isinstance(degrees, int):
        wanted = [degrees]
    else:
        wanted = sorted(set(degrees))
    cost = sum(N ** min(d, n - d) for d in wanted)
    if cost > _ENUM_COST_GUARD:
        raise GuardExceededError(
            f"divisor enumeration cost {cost} exceeds 2^25", cost=cost
        )
    fci = f._ci
    out = {}
    for d in wanted:
        if d < 0 or d > n:
            continue
        if d == 0:
            out[d] = [ring.one]
            continue
        if d == n:
            out[d] = [f]
            continue
        found = []
        if d <= n - d:
            for tail in itertools.product(range(N), repeat=d):
                if cancel is not None and cancel.is_set():
                    raise SearchCancelledError("divisor enumeration cancelled")
                g = tail + (1,)
                if not _right_divmod_ci(ring, fci, g)[1]:
                    found.append(SkewPoly(ring, g))
        else:
            # enumerate monic left cofactors h of degree n - d instead
            for tail in itertools.product(range(N), repeat=n - d):
                if cancel is not None and cancel.is_set():
                    raise SearchCancelledError("divisor enumeration cancelled")
                h = tail + (1,)
                q, r = _left_divmod_ci(ring, fci, h)
                if not r:
                    found.append(SkewPoly(ring, q))
            found.sort(key=lambda g: g._ci)
        out[d] = found
    return out


def count_divisors(result, modulus_degree=None, nontrivial=False):
    """Total divisor count over an enumeration result.

    With nontrivial=True the unit (degree 0) and the degree-n entries are
    excluded; modulus_degree must then be given.
    """
    total = sum(len(v) for v in result.values())
    if nontrivial:
        if modulus_degree is None:
            raise ValueError("nontrivial count needs the modulus degree")
        total -= len(result.get(0, ())) + len(result.get(modulus_degree, ()))
    return total
