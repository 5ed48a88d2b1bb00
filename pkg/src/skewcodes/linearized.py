"""The bridge between F_{q^m}[x; sigma] and q-linearized polynomials.

A skew polynomial sum g_i x^i corresponds to the linearized polynomial
sum g_i y^(q^i); multiplication on the skew side becomes composition.
Moore matrices test F_q-linear independence and the Dickson matrix (the
q-circulant) represents the induced F_q-linear map.
"""

from __future__ import annotations

from .errors import FieldMismatchError
from .fields import FieldElement
from .skewpoly import SkewPoly, _trim


class LinearizedPoly:
    """sum_i f_i y^(q^i) over F_{q^m}; the induced map a -> f(a) is F_q-linear.

    Coefficients are kept as given (unreduced); reduce_map() folds exponents
    modulo m, which does not change the induced map on F_{q^m}.
    """

    __slots__ = ("ring", "_ci")

    def __init__(self, ring, ci):
        self.ring = ring
        self._ci = tuple(ci)

    @classmethod
    def _make(cls, ring, ci):
        return cls(ring, _trim(tuple(ci)))

    @property
    def coefficients(self):
        return tuple(FieldElement(self.ring.field, c) for c in self._ci)

    @property
    def q_degree(self):
        """Largest i with a y^(q^i) term, or -1 for zero."""
        return len(self._ci) - 1

    def _same_ring(self, other):
        if not isinstance(other, LinearizedPoly):
            raise TypeError(f"expected LinearizedPoly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise FieldMismatchError("linearized polynomials from different rings")
        return other

    def __add__(self, other):
        other = self._same_ring(other)
        add = self.ring.field.add_i
        a, b = self._ci, other._ci
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return LinearizedPoly._make(self.ring, out)

    def compose(self, other):
        """Composition, re-expressed in the y^(q^i) basis.

        (F o G) has coefficient sum over i+j=k of F_i * G_j^(q^i); only
        exponent arithmetic on q-powers is used, never a dense expansion.
        """
        other = self._same_ring(other)
        ring = self.ring
        field = ring.field
        a, b = self._ci, other._ci
        if not a or not b:
            return LinearizedPoly(ring, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = field.add_i(
                            out[i + j], field.mul_i(ai, ring.sigma_i(bj, i))
                        )
        return LinearizedPoly._make(ring, out)

    def reduce_map(self):
        """Fold exponents modulo m (valid on F_{q^m} since a^(q^m) = a)."""
        ring = self.ring
        out = [0] * ring.m
        for i, c in enumerate(self._ci):
            out[i % ring.m] = ring.field.add_i(out[i % ring.m], c)
        return LinearizedPoly._make(ring, out)

    def apply(self, a):
        """Evaluate the induced map: sum f_i a^(q^i)."""
        ring = self.ring
        field = ring.field
        a = field.element(a)
        acc = 0
        for i, c in enumerate(self._ci):
            if c:
                acc = field.add_i(acc, field.mul_i(c, ring.sigma_i(a.i, i)))
        return FieldElement(field, acc)

    def __eq__(self, other):
        return (
            isinstance(other, LinearizedPoly)
            and self.ring == other.ring
            and self._ci == other._ci
        )

    def __hash__(self):
        return hash((self.ring, self._ci))

    def __str__(self):
        if not self._ci:
            return "0"
        parts = []
        for i in range(len(self._ci) - 1, -1, -1):
            c = self._ci[i]
            if not c:
                continue
            if i == 0:
                ypart = "y"
            elif i == 1:
                ypart = "y^q"
            else:
                ypart = f"y^q^{i}"
            token = self.ring.field.format_element(c)
            parts.append(ypart if c == 1 else f"{token}*{ypart}")
        return "+".join(parts)

    def __repr__(self):
        return f"<linearized over {self.ring.field.name}: {self}>"


def to_linearized(g):
    """Transport exponents i -> q^i; a ring isomorphism onto composition."""
    return LinearizedPoly(g.ring, g._ci)


def from_linearized(L):
    """Inverse transport back to the skew ring."""
    return SkewPoly(L.ring, L._ci)


def lin_compose(F, G):
    return F.compose(G)


def moore_matrix(ring, elements, rows=None):
    """The rows x len(elements) matrix (b_j^(q^i)).

    Invertible (for rows = len(elements) elements of F_{q^m}, m = rows) iff
    the elements are linearly independent over F_q.
    """
    field = ring.field
    els = [field.element(b) for b in elements]
    if rows is None:
        rows = len(els)
    out = []
    for i in range(rows):
        out.append([FieldElement(field, ring.sigma_i(b.i, i)) for b in els])
    return out


def dickson_matrix(g):
    """The m x m q-circulant D with D[i][j] = sigma^i(g_{(j-i) mod m}).

    Input may be a SkewPoly (reduced modulo x^m - 1 first) or a
    LinearizedPoly (reduced modulo y^(q^m) - y).  Equals the skew circulant
    of g for the modulus x^m - 1, and represents the induced map of the
    linearized counterpart up to Moore-matrix conjugation.
    """
    ring = g.ring
    m = ring.m
    if isinstance(g, LinearizedPoly):
        ci = g.reduce_map()._ci
    else:
        ci = from_linearized(to_linearized(g).reduce_map())._ci
    coeffs = list(ci) + [0] * (m - len(ci))
    field = ring.field
    rows = []
    for i in range(m):
        rows.append(
            [
                FieldElement(field, ring.sigma_i(coeffs[(j - i) % m], i))
                for j in range(m)
            ]
        )
    return rows


def root_correspondence(g, b):
    """For nonzero b: the pair (g(b^(q-1)) == 0, linearized g vanishing at b).

    The two statements are equivalent; disagreement raises.
    """
    ring = g.ring
    b = ring.field.element(b)
    if not b:
        raise ValueError("root correspondence needs nonzero b")
    skew_side = g(b ** (ring.q - 1)).i == 0
    lin_side = to_linearized(g).apply(b).i == 0
    if skew_side != lin_side:
        raise ArithmeticError("root correspondence identity failed; arithmetic bug")
    return skew_side, lin_side
