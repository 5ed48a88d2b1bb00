"""Exact arithmetic in finite fields F_{p^d} with explicit defining polynomials.

Elements are coefficient vectors over F_p in the power basis of the residue
class of the variable.  A vector (c_0, ..., c_{d-1}) is packed positionally
into the integer sum(c_i * p^i); this is a packing of the canonical
coefficient form, not a discrete logarithm.  Log/antilog tables over a
multiplicative generator are built lazily (once, under a lock) for fields of
at most 2^16 elements and used to speed up multiplication and powering.
"""

from __future__ import annotations

import threading
from math import gcd

from .errors import FieldMismatchError, GuardExceededError

_TABLE_LIMIT = 1 << 16
_ADD_TABLE_LIMIT = 1 << 12


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomial helpers over F_p (int coefficient lists, ascending) --

def _fp_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_rem(a, b, p):
    """Remainder of a modulo monic-normalizable b, over F_p."""
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and a:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % p
        _fp_trim(a)
    return a


def _fp_is_irreducible(poly, p):
    """Trial division by all monic polynomials of degree <= d/2 (desk scale)."""
    d = len(poly) - 1
    if d < 1:
        return False
    half = d // 2
    if p ** half > _TABLE_LIMIT:
        raise GuardExceededError(
            f"irreducibility check needs {p}^{half} trial divisors", cost=p ** half
        )
    for deg in range(1, half + 1):
        for idx in range(p ** deg):
            cand = []
            k = idx
            for _ in range(deg):
                cand.append(k % p)
                k //= p
            cand.append(1)
            if not _fp_rem(poly, cand, p):
                return False
    return True


class FieldSpec:
    """An explicit finite field F_{p^d} with a chosen defining polynomial.

    Parameters
    ----------
    p
        Prime characteristic.
    modulus
        Monic defining polynomial of degree d as ascending coefficients over
        F_p, e.g. (1, 1, 1) for x^2 + x + 1.  Checked irreducible at
        construction by trial division (desk scale only).
    primitive
        Whether the residue class of the variable generates the
        multiplicative group.  Verified when the log table is built.
    name
        Optional display name.
    """

    def __init__(self, p, modulus, primitive=False, name=None):
        modulus = tuple(int(c) % p for c in modulus)
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("defining polynomial must be monic of degree >= 1")
        if not _fp_is_irreducible(list(modulus), p):
            raise ValueError(f"defining polynomial {modulus} is reducible over F_{p}")
        self.p = p
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.order = p ** self.degree
        self.primitive = bool(primitive)
        self.name = name or f"F{p}^{self.degree}"
        # x^d reduced: the element -sum_{i<d} m_i x^i, packed
        self._xd = self._pack([(-c) % p for c in modulus[:-1]])
        # reentrant: building one lazy table may trigger building another
        self._lock = threading.RLock()
        self._exp = None       # antilog table, length 2*(order-1)
        self._log = None       # log table, log[0] unused
        self._gen_index = None
        self._frob_tables = {}
        self._add_table = None
        if p == 2:
            self.add_i = lambda a, b: a ^ b
            self.sub_i = self.add_i
            self.neg_i = lambda a: a
        self._zero = FieldElement(self, 0)
        self._one = FieldElement(self, 1)
        if primitive:
            self._build_tables()   # validates the flag eagerly

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"FieldSpec({self.name}, p={self.p}, modulus={self.modulus})"

    # -- packing ------------------------------------------------------------

    def _pack(self, coeffs):
        idx = 0
        for c in reversed(coeffs):
            idx = idx * self.p + c
        return idx

    def coeffs_of(self, index):
        out = []
        p = self.p
        for _ in range(self.degree):
            out.append(index % p)
            index //= p
        return tuple(out)

    # -- construction of elements -------------------------------------------

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    @property
    def gen(self):
        """The residue class of the variable."""
        if self.degree == 1:
            return FieldElement(self, self._xd)
        return FieldElement(self, self.p)

    def element(self, value):
        """Build an element from an int index, coefficient iterable, or element."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"element of {value.field.name}, not {self.name}")
            return value
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise ValueError(f"index {value} out of range for {self.name}")
            return FieldElement(self, value)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.degree:
            raise ValueError("too many coefficients")
        coeffs += [0] * (self.degree - len(coeffs))
        return FieldElement(self, self._pack(coeffs))

    def from_coeffs(self, coeffs):
        return self.element(list(coeffs))

    def elements(self):
        for i in range(self.order):
            yield FieldElement(self, i)

    # -- raw arithmetic (no tables) ------------------------------------------

    def _slow_mul(self, a, b):
        p = self.p
        ac = list(self.coeffs_of(a))
        bc = self.coeffs_of(b)
        out = [0] * (2 * self.degree - 1) if self.degree > 1 else [0]
        for i, ai in enumerate(ac):
            if ai:
                for j, bj in enumerate(bc):
                    out[i + j] = (out[i + j] + ai * bj) % p
        red = _fp_rem(out, list(self.modulus), p)
        red += [0] * (self.degree - len(red))
        return self._pack(red)

    def _slow_pow(self, a, k):
        r = 1
        while k:
            if k & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            k >>= 1
        return r

    def _element_order_raw(self, a):
        n = self.order - 1
        order = n
        for q in _prime_factors(n):
            while order % q == 0 and self._slow_pow(a, order // q) == 1:
                order //= q
        return order

    def _build_tables(self):
        if self._exp is not None:
            return
        with self._lock:
            if self._exp is not None:
                return
            if self.order > _TABLE_LIMIT:
                raise GuardExceededError(
                    f"log tables limited to 2^16 elements, field has {self.order}"
                )
            n = self.order - 1
            gen = self.gen.i
            if self.primitive:
                if self._element_order_raw(gen) != n:
                    raise ValueError(
                        f"{self.name}: primitive flag set but the generator has "
                        f"order {self._element_order_raw(gen)}, not {n}"
                    )
            else:
                gen = next(
                    a for a in range(2, self.order)
                    if self._element_order_raw(a) == n
                )
            exp = [0] * (2 * max(n, 1))
            log = [0] * self.order
            acc = 1
            for k in range(n):
                exp[k] = acc
                exp[k + n] = acc
                log[acc] = k
                acc = self._slow_mul(acc, gen)
            self._gen_index = gen
            self._log = log
            self._exp = exp

    # -- table-backed kernel (int indices) ------------------------------------

    def add_i(self, a, b):  # overwritten for p == 2 in __init__
        if self._add_table is None and self.order <= _ADD_TABLE_LIMIT:
            self._build_add_table()
        if self._add_table is not None:
            return self._add_table[a][b]
        p = self.p
        out = [(x + y) % p for x, y in zip(self.coeffs_of(a), self.coeffs_of(b))]
        return self._pack(out)

    def _build_add_table(self):
        with self._lock:
            if self._add_table is not None:
                return
            p = self.p
            table = []
            for a in range(self.order):
                ac = self.coeffs_of(a)
                row = [0] * self.order
                for b in range(self.order):
                    bc = self.coeffs_of(b)
                    row[b] = self._pack([(x + y) % p for x, y in zip(ac, bc)])
                table.append(row)
            self._add_table = table

    def neg_i(self, a):  # overwritten for p == 2
        p = self.p
        return self._pack([(-c) % p for c in self.coeffs_of(a)])

    def sub_i(self, a, b):  # overwritten for p == 2
        return self.add_i(a, self.neg_i(b))

    def mul_i(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._exp is None:
            if self.order > _TABLE_LIMIT:
                return self._slow_mul(a, b)
            self._build_tables()
        return self._exp[self._log[a] + self._log[b]]

    def inv_i(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        if self._exp is None:
            if self.order > _TABLE_LIMIT:
                return self._slow_pow(a, self.order - 2)
            self._build_tables()
        n = self.order - 1
        return self._exp[(n - self._log[a]) % n]

    def div_i(self, a, b):
        return self.mul_i(a, self.inv_i(b))

    def pow_i(self, a, k):
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        n = self.order - 1
        k %= n
        if self._exp is None:
            if self.order > _TABLE_LIMIT:
                return self._slow_pow(a, k)
            self._build_tables()
        return self._exp[(self._log[a] * k) % n]

    def frob_i(self, a, j):
        """a^(p^j); j is reduced modulo the field degree."""
        j %= self.degree
        table = self._frob_tables.get(j)
        if table is None:
            table = self._build_frob_table(j)
        return table[a]

    def _build_frob_table(self, j):
        with self._lock:
            table = self._frob_tables.get(j)
            if table is not None:
                return table
            e = self.p ** j
            table = [self.pow_i(a, e) for a in range(self.order)]
            self._frob_tables[j] = table
            return table

    def log_i(self, a):
        """Discrete log with respect to the designated primitive element."""
        if not self.primitive:
            raise ValueError(f"{self.name} has no designated primitive element")
        if a == 0:
            raise ValueError("log of zero")
        self._build_tables()
        return self._log[a]

    def element_order(self, a):
        a = self.element(a)
        if a.i == 0:
            raise ValueError("zero has no multiplicative order")
        return self._element_order_raw(a.i)

    # -- formatting -----------------------------------------------------------

    def format_element(self, a, style="auto"):
        """Render an element index: 'a^k' powers when primitive, else a tuple."""
        if style == "auto":
            style = "power" if self.primitive else "tuple"
        if style == "power":
            if a == 0:
                return "0"
            k = self.log_i(a)
            if k == 0:
                return "1"
            if k == 1:
                return "a"
            return f"a^{k}"
        return ",".join(str(c) for c in self.coeffs_of(a))


class FieldElement:
    """An element of a FieldSpec; immutable, with exact operator arithmetic."""

    __slots__ = ("field", "i")

    def __init__(self, field, index):
        self.field = field
        self.i = index

    @property
    def coeffs(self):
        return self.field.coeffs_of(self.i)

    def _same(self, other):
        if other.field != self.field:
            raise FieldMismatchError(
                f"cannot mix elements of {self.field.name} and {other.field.name}"
            )
        return other

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        other = self._same(other)
        return FieldElement(self.field, self.field.add_i(self.i, other.i))

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        other = self._same(other)
        return FieldElement(self.field, self.field.sub_i(self.i, other.i))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_i(self.i))

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        other = self._same(other)
        return FieldElement(self.field, self.field.mul_i(self.i, other.i))

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        other = self._same(other)
        return FieldElement(self.field, self.field.div_i(self.i, other.i))

    def __pow__(self, k):
        return FieldElement(self.field, self.field.pow_i(self.i, k))

    def inverse(self):
        return FieldElement(self.field, self.field.inv_i(self.i))

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.i == other.i
        )

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.i))

    def __bool__(self):
        return self.i != 0

    def __str__(self):
        return self.field.format_element(self.i)

    def __repr__(self):
        return f"<{self.field.name}: {self}>"


class FrobeniusAut:
    """The automorphism a -> a^(p^e) of a FieldSpec.

    For ring-forming automorphisms e divides d, giving q = p^e, order
    m = d/e, and fixed field F_q.  The identity is represented by e = d.
    Arbitrary exponents are accepted so that relative automorphisms of a
    field tower can be expressed; then the order is d/gcd(e, d).
    """

    def __init__(self, field, e):
        if e < 0:
            raise ValueError("Frobenius exponent must be nonnegative")
        self.field = field
        self.e = e
        d = field.degree
        j = e % d
        self.order = d // gcd(j, d) if j else 1

    @property
    def q(self):
        return self.field.p ** self.e

    @property
    def fixed_degree(self):
        """Degree over F_p of the fixed field."""
        d = self.field.degree
        j = self.e % d
        return gcd(j, d) if j else d

    def apply(self, a, j=1):
        a = self.field.element(a)
        return FieldElement(self.field, self.field.frob_i(a.i, (self.e * j) % self.field.degree))

    def apply_i(self, a, j=1):
        return self.field.frob_i(a, (self.e * j) % self.field.degree)

    def fixes(self, a):
        a = self.field.element(a)
        return self.apply_i(a.i) == a.i

    def __eq__(self, other):
        return (
            isinstance(other, FrobeniusAut)
            and self.field == other.field
            and self.e % self.field.degree == other.e % other.field.degree
        )

    def __hash__(self):
        return hash((self.field, self.e % self.field.degree))

    def __repr__(self):
        return f"FrobeniusAut({self.field.name}, a -> a^{self.field.p}^{self.e})"


def frobenius_power(aut, j, a):
    """Apply sigma^j; j is reduced modulo the automorphism order."""
    return aut.apply(a, j % aut.order)


def norm_exponent(q, i):
    """The exponent (q^i - 1)/(q - 1), so that N_i(a) = a^norm_exponent(q, i)."""
    if q < 2:
        raise ValueError("q must be at least 2")
    if i < 0:
        raise ValueError("i must be nonnegative")
    return (q ** i - 1) // (q - 1)


def norm(aut, i, a):
    """The i-th norm N_i(a) = prod_{j<i} sigma^j(a), by the recurrence."""
    a = aut.field.element(a)
    field = aut.field
    acc = 1
    cur = a.i
    for j in range(i):
        if j:
            cur = aut.apply_i(a.i, j)
        acc = field.mul_i(acc, cur)
    return FieldElement(field, acc)


def norm_via_exponent(aut, i, a):
    """Closed form N_i(a) = a^((q^i - 1)/(q - 1)); must agree with norm()."""
    a = aut.field.element(a)
    return FieldElement(aut.field, aut.field.pow_i(a.i, norm_exponent(aut.q, i)))


def conjugate(aut, a, c):
    """The twisted conjugate sigma(c) * a * c^(-1) for nonzero c."""
    a = aut.field.element(a)
    c = aut.field.element(c)
    if not c:
        raise ZeroDivisionError("conjugation requires nonzero c")
    f = aut.field
    return FieldElement(f, f.mul_i(f.mul_i(aut.apply_i(c.i), a.i), f.inv_i(c.i)))


def conjugacy_class(aut, a):
    """The conjugacy class of a under c -> sigma(c) a c^(-1), as a frozenset."""
    a = aut.field.element(a)
    if not a:
        return frozenset([a])
    f = aut.field
    out = set()
    ai = a.i
    for c in range(1, f.order):
        out.add(f.mul_i(f.mul_i(f.frob_i(c, aut.e % f.degree), ai), f.inv_i(c)))
    return frozenset(FieldElement(f, i) for i in out)


def conjugacy_classes(aut):
    """All conjugacy classes, the zero class first, the rest sorted."""
    f = aut.field
    seen = set()
    out = [conjugacy_class(aut, f.zero)]
    seen.add(0)
    for i in range(1, f.order):
        if i in seen:
            continue
        cls = conjugacy_class(aut, FieldElement(f, i))
        seen.update(e.i for e in cls)
        out.append(cls)
    return out


class FieldEmbedding:
    """An embedding F_{p^d1} -> F_{p^d2} with d1 | d2.

    The image of the source generator is found by exhaustive root search of
    the source defining polynomial in the target (desk scale), picking the
    root with the lexicographically least coefficient sequence so the
    embedding is deterministic.  When source and target are the same spec the
    identity map is used.
    """

    _ROOT_SEARCH_LIMIT = 1 << 20

    def __init__(self, source, target):
        if source.p != target.p:
            raise ValueError("embedding requires equal characteristic")
        if target.degree % source.degree != 0:
            raise ValueError(
                f"degree {source.degree} does not divide {target.degree}"
            )
        if target.order > self._ROOT_SEARCH_LIMIT:
            raise GuardExceededError(
                f"root search limited to 2^20 elements, target has {target.order}"
            )
        self.source = source
        self.target = target
        if source == target:
            self.generator_image = target.gen
        else:
            self.generator_image = self._find_root()
        self._image_powers = self._gen_powers()
        self._inverse = None

    def _find_root(self):
        t = self.target
        mod = self.source.modulus
        best = None
        for cand in range(t.order):
            acc = 0
            power = 1
            for c in mod:
                if c:
                    acc = t.add_i(acc, t.mul_i(c % t.p, power))
                power = t.mul_i(power, cand)
            if acc == 0:
                key = t.coeffs_of(cand)
                if best is None or key < best[0]:
                    best = (key, cand)
        if best is None:
            raise ArithmeticError("no root found; defining polynomial not split")
        return FieldElement(t, best[1])

    def _gen_powers(self):
        t = self.target
        powers = [1]
        for _ in range(self.source.degree - 1):
            powers.append(t.mul_i(powers[-1], self.generator_image.i))
        return powers

    @property
    def relative_degree(self):
        return self.target.degree // self.source.degree

    def embed(self, a):
        a = self.source.element(a)
        t = self.target
        acc = 0
        for c, power in zip(a.coeffs, self._image_powers):
            if c:
                acc = t.add_i(acc, t.mul_i(c, power))
        return FieldElement(t, acc)

    def _build_inverse(self):
        # idempotent; a benign race just rebuilds the same dict
        inv = {}
        for a in range(self.source.order):
            inv[self.embed(FieldElement(self.source, a)).i] = a
        self._inverse = inv

    def restrict(self, b):
        """Invert the embedding; returns None when b is not in the subfield."""
        b = self.target.element(b)
        if self._inverse is None:
            self._build_inverse()
        idx = self._inverse.get(b.i)
        if idx is None:
            return None
        return FieldElement(self.source, idx)

    def __repr__(self):
        return f"FieldEmbedding({self.source.name} -> {self.target.name})"


def relative_automorphisms(emb):
    """The automorphisms of the target fixing the embedded source pointwise.

    Returns [tau_0, ..., tau_{s-1}] with tau_l : a -> a^(p^(d1*l)) and
    tau_0 the identity (represented with exponent d2).
    """
    d1 = emb.source.degree
    d2 = emb.target.degree
    s = d2 // d1
    out = [FrobeniusAut(emb.target, d2)]
    for level in range(1, s):
        out.append(FrobeniusAut(emb.target, d1 * level))
    return out


# -- presets ------------------------------------------------------------------

_PRESET_PARAMS = {
    # name: (p, ascending modulus coefficients, primitive)
    "F2": (2, (1, 1), True),
    "F4": (2, (1, 1, 1), True),
    "F8": (2, (1, 1, 0, 1), True),
    "F9": (3, (2, 1, 1), True),
    "F16": (2, (1, 1, 0, 0, 1), True),
    "F27": (3, (1, 2, 0, 1), True),
    "F2_6": (2, (1, 1, 0, 0, 0, 0, 1), True),
    "F2_12": (2, (1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1), True),
}

_preset_cache = {}
_preset_lock = threading.Lock()


def get_field(name):
    """Return the named preset field (cached singleton)."""
    key = name.upper().replace("^", "_")
    if key == "F64":
        key = "F2_6"
    if key not in _PRESET_PARAMS:
        raise KeyError(f"unknown field preset {name!r}; choices: {sorted(_PRESET_PARAMS)}")
    with _preset_lock:
        if key not in _preset_cache:
            p, modulus, primitive = _PRESET_PARAMS[key]
            _preset_cache[key] = FieldSpec(p, modulus, primitive=primitive, name=key)
        return _preset_cache[key]


def preset_names():
    return sorted(_PRESET_PARAMS)


def find_irreducible(p, degree):
    """Lexicographically first monic irreducible polynomial of the degree."""
    for idx in range(p ** degree):
        cand = []
        k = idx
        for _ in range(degree):
            cand.append(k % p)
            k //= p
        cand.append(1)
        try:
            if _fp_is_irreducible(cand, p):
                return tuple(cand)
        except GuardExceededError:
            raise
    raise ArithmeticError("no irreducible polynomial found")
