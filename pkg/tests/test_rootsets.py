import itertools
import random

import pytest

from skewcodes.fields import FieldEmbedding, conjugacy_class, get_field
from skewcodes.rootsets import (
    AlgebraicSet,
    is_wedderburn,
    minimal_poly_over_subfield,
    minimal_polynomial,
    set_rank,
    skew_vandermonde,
    vandermonde_rank,
    vanishing_set,
)
from skewcodes.skewpoly import SkewRing, gcrd, lclm


def test_vanishing_set_x21(R4, F4):
    V = vanishing_set(R4.poly([1, 0, 1]))
    assert V == {F4.one, F4.gen, F4.gen**2}


def test_sole_root_despite_splitting(R8, F8):
    al = F8.gen
    f = R8.x_minus(al**2) * R8.x_minus(al)
    assert vanishing_set(f) == {al}


def test_extension_sweep_finds_more_roots(R8, F8, F64):
    al = F8.gen
    f = R8.x_minus(al**2) * R8.x_minus(al)
    emb = FieldEmbedding(F8, F64)
    V = vanishing_set(f, emb)
    assert len(V) == 3
    assert emb.embed(al) in V


def test_f16_cubic_vanishing_set(R16, F16):
    g = F16.gen
    f = R16.poly([g, g**3, g**7, F16.one])
    expect = {F16.one, g**2, g**3, g**6, g**8, g**13, g**14}
    assert vanishing_set(f) == expect


def test_f16_cubic_factorizations(R16, F16):
    g = F16.gen
    f = R16.poly([g, g**3, g**7, F16.one])
    assert R16.x_minus(g**2) * R16.x_minus(g**12) * R16.x_minus(g**2) == f
    assert R16.x_minus(g**3) * R16.x_minus(g**14) * R16.x_minus(g**14) == f
    assert minimal_polynomial(R16, vanishing_set(f)) == f
    assert lclm(R16.x_minus(F16.one), R16.x_minus(g**2), R16.x_minus(g**3)) == f
    other = lclm(R16.x_minus(F16.one), R16.x_minus(g**2), R16.x_minus(g**8))
    assert other == R16.poly([g**10, g**5, F16.one])


def test_f27_minimal_polynomial(R27, F27):
    b = F27.gen
    mA = minimal_polynomial(R27, [b**14, b**25])
    assert mA == R27.poly([b, b, F27.one])
    assert R27.x_minus(b**13) * R27.x_minus(b**14) == mA
    assert R27.x_minus(b**2) * R27.x_minus(b**25) == mA
    assert vanishing_set(mA) == {b**14, b**25}
    # peel right roots: quotient by each stated right factor
    s1, r1 = mA.right_divmod(R27.x_minus(b**14))
    assert r1.is_zero and s1 == R27.x_minus(b**13)
    s2, r2 = mA.right_divmod(R27.x_minus(b**25))
    assert r2.is_zero and s2 == R27.x_minus(b**2)
    # the off-set factor roots are conjugate to set members
    assert b**13 in conjugacy_class(R27.aut, b**25)
    assert b**2 in conjugacy_class(R27.aut, b**14)


def test_singleton_minimal_polynomial(R8, F8):
    for a in F8.elements():
        assert minimal_polynomial(R8, [a]) == R8.x_minus(a)


@pytest.mark.parametrize("name,p,r", [("F4", 2, 2), ("F8", 2, 3), ("F9", 3, 2)])
def test_whole_field_minimal_polynomial(name, p, r):
    field = get_field(name)
    ring = SkewRing(field, 1)
    m = minimal_polynomial(ring, list(field.elements()))
    deg = r * (p - 1) + 1
    expect = ring.x.times_x(deg - 1) - ring.x    # x^(r(p-1)+1) - x
    assert m == expect
    assert set_rank(ring, list(field.elements())) == deg


def test_minimal_polynomial_empty_set_rejected(R4):
    with pytest.raises(ValueError):
        minimal_polynomial(R4, [])


def test_minimal_polynomial_divides_every_annihilator_exhaustive(R4, F4):
    # every polynomial of degree <= 3 over F4 vanishing on A is a left
    # multiple of m_A
    w = F4.gen
    for A in ([F4.one, w], [w, w * w], [F4.zero, w]):
        m = minimal_polynomial(R4, A)
        for ci in itertools.product(range(4), repeat=4):
            f = R4.from_indices(ci)
            if f.is_zero:
                continue
            if all(f(a) == F4.zero for a in A):
                assert m.right_divides(f)


def test_minimal_polynomial_left_divides_annihilators(R8, F8):
    rng = random.Random(5)
    for _ in range(30):
        pts = [F8.element(rng.randrange(8)) for _ in range(3)]
        m = minimal_polynomial(R8, pts)
        z = R8.from_indices([rng.randrange(8) for _ in range(3)] + [1])
        f = z * m
        for a in pts:
            assert f(a) == F8.zero
        assert m.right_divides(f)


def test_vandermonde_golden(R16, F16):
    g = F16.gen
    V = skew_vandermonde(R16, 3, [F16.one, g**2, g**8])
    assert V[0] == [F16.one, F16.one, F16.one]
    assert V[1] == [F16.one, g**2, g**8]
    assert V[2] == [F16.one, g**6, g**9]
    assert vandermonde_rank(R16, 3, [F16.one, g**2, g**8]) == 2


def test_vandermonde_all_ones_for_point_one(R8, F8):
    V = skew_vandermonde(R8, 4, [F8.one, F8.one])
    for row in V:
        assert row == [F8.one, F8.one]


def test_vandermonde_evaluation_identity(R8, F8):
    rng = random.Random(9)
    pts = [F8.element(i) for i in (1, 3, 5, 7)]
    n = 5
    V = skew_vandermonde(R8, n, pts)
    for _ in range(30):
        g = R8.from_indices([rng.randrange(8) for _ in range(n)])
        evals = [g(a) for a in pts]
        combo = [F8.zero] * len(pts)
        for i in range(n):
            gi = g.coefficient(i)
            combo = [acc + gi * V[i][j] for j, acc in enumerate(combo)]
        assert combo == evals


def test_vandermonde_rank_equals_set_rank(R8, F8):
    rng = random.Random(13)
    els = list(F8.elements())
    for _ in range(40):
        pts = rng.sample(els, rng.randrange(1, 6))
        assert vandermonde_rank(R8, len(pts), pts) == set_rank(R8, pts)


def test_wedderburn_checks(R4, R2, F4):
    x21 = R4.poly([1, 0, 1])
    assert is_wedderburn(x21)
    assert not is_wedderburn(R2.poly([1, 0, 1]))
    for a in F4.elements():
        assert is_wedderburn(R4.x_minus(a))
    w = F4.gen
    f = R4.poly([1, 1]) * R4.poly([w, 1])   # (x+1)(x+w), V = {w}
    assert vanishing_set(f) == {w}
    assert not is_wedderburn(f)


def test_union_rank_laws(R8, R9):
    rng = random.Random(17)
    for ring in (R8, R9):
        field = ring.field
        els = list(field.elements())
        for _ in range(40):
            A = AlgebraicSet(field, rng.sample(els, rng.randrange(1, 4)))
            B = AlgebraicSet(field, rng.sample(els, rng.randrange(1, 4)))
            mA = minimal_polynomial(ring, A)
            mB = minimal_polynomial(ring, B)
            mU = minimal_polynomial(ring, A | B)
            assert mU == lclm(mA, mB)
            assert mU.degree <= mA.degree + mB.degree


def test_union_rank_additivity_iff_coprime_f4(R4, F4):
    els = list(F4.elements())
    for sa in range(1, 3):
        for sb in range(1, 3):
            for A in itertools.combinations(els, sa):
                for B in itertools.combinations(els, sb):
                    mA = minimal_polynomial(R4, A)
                    mB = minimal_polynomial(R4, B)
                    mU = minimal_polynomial(R4, list(A) + list(B))
                    additive = mU.degree == mA.degree + mB.degree
                    coprime = gcrd(mA, mB) == R4.one
                    disjoint = not (
                        set(vanishing_set(mA).elements)
                        & set(vanishing_set(mB).elements)
                    )
                    assert additive == coprime == disjoint


def test_minimal_poly_splits_with_conjugate_roots(R9, R27):
    rng = random.Random(19)
    for ring in (R9, R27):
        field = ring.field
        els = list(field.elements())
        for _ in range(25):
            pts = rng.sample(els, rng.randrange(1, 4))
            m = minimal_polynomial(ring, pts)
            classes = [conjugacy_class(ring.aut, a) for a in pts]
            # peel linear right factors down to a constant
            rest = m
            while rest.degree > 0:
                root = next(a for a in field.elements() if not rest(a))
                assert any(root in cls for cls in classes)
                rest, rem = rest.right_divmod(ring.x_minus(root))
                assert rem.is_zero


def test_p_independence_heredity(R8, F8):
    els = list(F8.elements())
    for size in range(1, 5):
        for A in itertools.combinations(els, size):
            if set_rank(R8, A) == len(A):
                for r in range(1, size):
                    for B in itertools.combinations(A, r):
                        assert set_rank(R8, B) == len(B)


@pytest.mark.parametrize("name,m", [("F4", 2), ("F8", 3), ("F16", 4)])
def test_normal_basis_lclm_identity(name, m):
    # x^m - 1 = lclm(x - b^(q^j)) for b = gamma^(q-1), gamma a normal element
    field = get_field(name)
    ring = SkewRing(field, 1)
    from skewcodes.bch import find_normal_element

    gamma = find_normal_element(ring)
    b = gamma ** (ring.q - 1)
    factors = [ring.x_minus(ring.sigma(b, j)) for j in range(m)]
    assert lclm(*factors) == ring.x_pow_minus(m, field.one)
    for sub_size in range(1, m + 1):
        for combo in itertools.combinations(range(m), sub_size):
            ell = lclm(*(ring.x_minus(ring.sigma(b, j)) for j in combo))
            assert ell.degree == sub_size


def test_tower_minimal_polynomial_golden(R64, F4096, tower):
    alpha = F4096.gen
    gamma = alpha**65
    factors_roots = [alpha**0, alpha**23, alpha**46]
    g = None
    for root in factors_roots:
        m = minimal_poly_over_subfield(R64, tower, root)
        g = m if g is None else lclm(g, m)
    lifted = [tower.embed(c) for c in g.coefficients]
    assert lifted == [gamma**40, gamma**19, gamma**47, F4096.one]


def test_subfield_point_gives_linear(R64, tower):
    a = R64.field.gen
    m = minimal_poly_over_subfield(R64, tower, tower.embed(a))
    assert m == R64.x_minus(a)


def test_tower_minimal_polynomial_divides_vanishing_multiples(R64, F4096, tower):
    ext = SkewRing(F4096, 1)
    rng = random.Random(23)
    alpha = F4096.gen
    a = alpha**23
    m = minimal_poly_over_subfield(R64, tower, a)
    m_ext = ext.from_indices(tower.embed(c).i for c in m.coefficients)
    for _ in range(10):
        zc = [rng.randrange(64) for _ in range(3)] + [1]
        z = R64.from_indices(zc)
        z_ext = ext.from_indices(tower.embed(c).i for c in z.coefficients)
        f_ext = z_ext * m_ext
        assert f_ext(a) == F4096.zero
        assert m_ext.right_divides(f_ext)
