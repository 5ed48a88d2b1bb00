"""Vanishing sets, algebraic sets, minimal polynomials and skew Vandermonde
matrices for right evaluation of skew polynomials."""

from __future__ import annotations

from .errors import GuardExceededError, NotWedderburnError
from .fields import FieldElement, relative_automorphisms
from .linalg import matrix_rank
from .skewpoly import SkewRing, _eval_ci, lclm

_DOMAIN_SWEEP_LIMIT = 1 << 20


class AlgebraicSet:
    """A finite, deduplicated set of points in one field.

    Stored sorted by packed index so iteration order, and therefore every
    lclm fold over the set, is deterministic.
    """

    def __init__(self, field, elements):
        idx = sorted({field.element(a).i for a in elements})
        self.field = field
        self.elements = tuple(FieldElement(field, i) for i in idx)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a):
        a = self.field.element(a)
        return any(a == b for b in self.elements)

    def __eq__(self, other):
        if isinstance(other, AlgebraicSet):
            return self.field == other.field and self.elements == other.elements
        if isinstance(other, (set, frozenset, list, tuple)):
            return {e for e in self.elements} == {self.field.element(a) for a in other}
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.elements))

    def __or__(self, other):
        return AlgebraicSet(self.field, list(self.elements) + list(other))

    def __repr__(self):
        return "{" + ", ".join(str(e) for e in self.elements) + "}"


def vanishing_set(f, emb=None):
    """All right roots of f, by full-domain sweep.

    With an embedding the sweep runs over the extension field, with sigma
    extended as the Frobenius power of the same q.
    """
    ring = f.ring
    if emb is not None:
        if emb.source != ring.field:
            raise ValueError("embedding source must be the coefficient field")
        target_ring = SkewRing(emb.target, ring.e)
        lifted = target_ring.from_indices(emb.embed(c).i for c in f.coefficients)
        return vanishing_set(lifted)
    domain = ring.field
    if domain.order > _DOMAIN_SWEEP_LIMIT:
        raise GuardExceededError(
            f"root sweep limited to 2^20 points, domain has {domain.order}"
        )
    ci = f._ci
    roots = [a for a in range(domain.order) if _eval_ci(ring, ci, a) == 0]
    return AlgebraicSet(domain, [FieldElement(domain, a) for a in roots])


def minimal_polynomial(ring, points):
    """m_A = lclm(x - a : a in A), the monic minimal polynomial of the set."""
    pts = points if isinstance(points, AlgebraicSet) else AlgebraicSet(ring.field, points)
    if len(pts) == 0:
        raise ValueError("minimal polynomial of the empty set")
    return lclm(*(ring.x_minus(a) for a in pts))


def set_rank(ring, points):
    """rk(A) = deg m_A; at most |A|."""
    return minimal_polynomial(ring, points).degree


def skew_vandermonde(ring, n, points):
    """The n x r matrix with entry (i, j) = N_i(a_j).

    Satisfies (g(a_1), ..., g(a_r)) = (g_0, ..., g_{n-1}) V for deg g < n,
    and its rank equals the rank of the point set when n >= r.
    """
    if n < 1:
        raise ValueError("need at least one row")
    field = ring.field
    pts = [field.element(a) for a in points]
    rows = []
    norms = [1] * len(pts)
    for i in range(n):
        if i:
            norms = [
                field.mul_i(cur, ring.sigma_i(a.i, i - 1))
                for cur, a in zip(norms, pts)
            ]
        rows.append([FieldElement(field, c) for c in norms])
    return rows


def is_wedderburn(f, emb=None):
    """True when f is the minimal polynomial of its own vanishing set.

    The sweep domain is the coefficient field, or the target of the given
    embedding; the minimal polynomial is then taken in that domain's ring.
    """
    if not f.is_monic:
        raise ValueError("Wedderburn test applies to monic polynomials")
    roots = vanishing_set(f, emb)
    ring = f.ring if emb is None else SkewRing(emb.target, f.ring.e)
    target_f = f if emb is None else ring.from_indices(
        emb.embed(c).i for c in f.coefficients
    )
    if len(roots) == 0:
        return target_f.degree == 0
    return minimal_polynomial(ring, roots) == target_f


def require_wedderburn_roots(f):
    """The root list of a Wedderburn polynomial (raises otherwise)."""
    roots = vanishing_set(f)
    if len(roots) == 0 or minimal_polynomial(f.ring, roots) != f:
        raise NotWedderburnError(
            f"{f} is not the minimal polynomial of its vanishing set"
        )
    return list(roots)


def minimal_poly_over_subfield(base_ring, emb, a):
    """The monic polynomial over the base field of least degree with right
    root a in the extension.

    Forms the orbit of a under the automorphisms of the extension fixing the
    base field, takes the minimal polynomial of the orbit in the extension
    ring, and restricts every coefficient back down.  Containment of the
    coefficients in the base field is a theorem, so a failed restriction
    means an arithmetic bug.
    """
    if emb.source != base_ring.field:
        raise ValueError("embedding source must be the base ring's field")
    a = emb.target.element(a)
    orbit = [tau.apply(a) for tau in relative_automorphisms(emb)]
    ext_ring = SkewRing(emb.target, base_ring.e)
    m = minimal_polynomial(ext_ring, orbit)
    coeffs = []
    for c in m.coefficients:
        r = emb.restrict(c)
        if r is None:
            raise ArithmeticError(
                "minimal polynomial coefficient escaped the base field; "
                "this indicates a bug in the orbit computation"
            )
        coeffs.append(r)
    return base_ring.poly(coeffs)


def vandermonde_rank(ring, n, points):
    return matrix_rank(skew_vandermonde(ring, n, points), ring.field)
