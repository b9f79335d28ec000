"""Unit tests for the exact algebra substrate."""

from fractions import Fraction

from skeindim.exactalg import (
    UniPoly, LaurentPoly, LaurentPoly2, ComplexBall,
    cheb_T, cheb_e, poly_gcd, is_squarefree, squarefree_part,
    multiplicity_at, distinct_roots_excluding, isolate_roots, ball_eval,
)

X = UniPoly.x_power(1)


# ---------------------------------------------------------------------------
# UniPoly basics
# ---------------------------------------------------------------------------

def test_unipoly_ring_ops():
    p = UniPoly.from_coeffs([1, 2, 3])          # 3x^2 + 2x + 1
    q = UniPoly.from_coeffs([-1, 1])            # x - 1
    assert (p * q).coeffs == tuple(map(Fraction, [-1, -1, -1, 3]))
    assert (p + q).coeffs == tuple(map(Fraction, [0, 3, 3]))
    assert (p - p).is_zero()
    assert (q ** 3).coeffs == tuple(map(Fraction, [-1, 3, -3, 1]))
    assert p(Fraction(1, 2)) == Fraction(11, 4)
    assert str(q) == "x - 1"


def test_unipoly_divmod_exact():
    num = UniPoly.from_coeffs([-1, 0, 0, 1])    # x^3 - 1
    den = UniPoly.from_coeffs([-1, 1])          # x - 1
    q, r = num.divmod(den)
    assert r.is_zero()
    assert q.coeffs == tuple(map(Fraction, [1, 1, 1]))
    # remainder path
    q2, r2 = num.divmod(UniPoly.from_coeffs([1, 1]))
    assert r2.coeffs == (Fraction(-2),)
    try:
        num.exact_div(UniPoly.from_coeffs([1, 1]))
        assert False, "exact_div must reject a nonzero remainder"
    except ValueError:
        pass


def test_unipoly_content_primitive():
    p = UniPoly.from_coeffs([Fraction(2, 3), Fraction(4, 3), -2])
    prim = p.primitive()
    assert prim.coeffs == tuple(map(Fraction, [-1, -2, 3]))
    assert prim.leading() > 0
    assert prim.int_coeffs() == [-1, -2, 3]


# ---------------------------------------------------------------------------
# Chebyshev families
# ---------------------------------------------------------------------------

def test_cheb_frozen_coefficients():
    assert cheb_T(0).coeffs == (Fraction(2),)
    assert cheb_T(1).coeffs == (Fraction(0), Fraction(1))
    assert cheb_T(2).coeffs == tuple(map(Fraction, [-2, 0, 1]))
    assert cheb_T(3).coeffs == tuple(map(Fraction, [0, -3, 0, 1]))
    assert cheb_T(6).coeffs == tuple(map(Fraction, [-2, 0, 9, 0, -6, 0, 1]))
    assert cheb_e(0).coeffs == (Fraction(1),)
    assert cheb_e(2).coeffs == tuple(map(Fraction, [-1, 0, 1]))
    assert cheb_e(4).coeffs == tuple(map(Fraction, [1, 0, -3, 0, 1]))


def test_cheb_trace_identities():
    z = LaurentPoly({1: 1, -1: 1})              # x + x^{-1}
    w = LaurentPoly({1: 1, -1: -1})             # x - x^{-1}
    for k in range(0, 20):
        assert cheb_T(k)(z) == LaurentPoly({k: 1, -k: 1} if k else {0: 2})
    for i in range(0, 20):
        assert cheb_e(i)(z) * w == LaurentPoly({i + 1: 1, -(i + 1): -1})


def test_cheb_negative_index_mirrors():
    assert cheb_T(-7) == cheb_T(7)


# ---------------------------------------------------------------------------
# gcd / squarefree
# ---------------------------------------------------------------------------

def test_poly_gcd_frozen():
    a = UniPoly.from_coeffs([-1, 0, 1]) * UniPoly.from_coeffs([1, 1, 1])
    b = UniPoly.from_coeffs([-1, 1]) * UniPoly.from_coeffs([2, 0, 0, 1])
    g = poly_gcd(a, b)
    assert g.coeffs == tuple(map(Fraction, [-1, 1]))   # monic x - 1


def test_squarefree_detection():
    p = UniPoly.from_coeffs([-1, 1]) ** 2 * UniPoly.from_coeffs([3, 1])
    assert not is_squarefree(p)
    sf = squarefree_part(p)
    assert sf.coeffs == tuple(map(Fraction, [-3, 2, 1]))   # (x-1)(x+3)
    assert is_squarefree(sf)
    # big structured polynomial: stays fast through the modular path
    big = UniPoly.from_coeffs([1] + [0] * 199 + [-3] + [0] * 199 + [1])
    assert is_squarefree(big) == (poly_gcd(big, big.derivative()).degree == 0)


def test_multiplicity_and_root_counts():
    p = (UniPoly.from_coeffs([-1, 1]) ** 3) * UniPoly.from_coeffs([2, 1])
    assert multiplicity_at(p, 1) == 3
    assert multiplicity_at(p, -2) == 1
    assert multiplicity_at(p, 5) == 0
    q = (UniPoly.from_coeffs([-1, 0, 1]) ** 2) * UniPoly.from_coeffs([4, 0, 1])
    # distinct roots: {1, -1, 2i, -2i}, excluding ±1 leaves two
    assert distinct_roots_excluding(q, {1, -1}) == 2
    assert distinct_roots_excluding(q, set()) == 4


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

def test_laurent_ops():
    a = LaurentPoly({2: 1, -2: 1})
    b = LaurentPoly({1: 1, -1: 1})
    assert b * b == a + 2
    assert (b ** 2) == a + 2
    p, m = (a * LaurentPoly.x_pow(-3)).to_unipoly()
    assert m == -5 and p.coeffs == tuple(map(Fraction, [1, 0, 0, 0, 1]))
    quot = (a + 2).exact_div(b)
    assert quot == b


def test_laurent2_substitution():
    # u^2 v - 3 u^{-1}  at u = x^2, v = x^{-1}: x^3 - 3 x^{-2}
    f = LaurentPoly2({(2, 1): 1, (-1, 0): -3})
    assert f.substitute_powers(2, -1) == LaurentPoly({3: 1, -2: -3})
    g = LaurentPoly2({(1, 0): 1}) * LaurentPoly2({(-1, 1): 1, (0, 0): 2})
    assert g == LaurentPoly2({(0, 1): 1, (1, 0): 2})


# ---------------------------------------------------------------------------
# complex balls
# ---------------------------------------------------------------------------

def test_ball_containment_after_arithmetic():
    third = ComplexBall.from_fraction(Fraction(1, 3), 128)
    one = third * 3
    assert (one - 1).contains_zero()
    nine_ninths = third * third * 9
    assert (nine_ninths - 1).contains_zero()
    assert float(nine_ninths.rad) < 1e-30


def test_ball_division_and_inverse():
    b = ComplexBall.from_fraction(Fraction(7, 5), 128)
    assert ((1 / b) * b - 1).contains_zero()
    z = ComplexBall.from_int(0, 128)
    try:
        z.inverse()
        assert False, "inverse of zero ball must fail"
    except ZeroDivisionError:
        pass


def test_ball_unit_roots():
    w8 = ComplexBall.unit_root(1, 8, 128)
    w4 = ComplexBall.unit_root(1, 4, 128)
    assert (w8 * w8 - w4).contains_zero()
    assert ((w8 ** 8) - 1).contains_zero()
    half = ComplexBall.two_cos_pi(Fraction(1, 3), 128)
    assert (half - 1).contains_zero()          # 2cos(π/3) = 1


def test_ball_pow_and_sqrt():
    b = ComplexBall.from_fraction(Fraction(5), 128)
    s = b.sqrt()
    assert ((s * s) - 5).contains_zero()
    assert ((b ** -2) * 25 - 1).contains_zero()


def test_ball_disjointness():
    a = ComplexBall.from_fraction(Fraction(1, 3), 128)
    b = ComplexBall.from_fraction(Fraction(1, 3) + Fraction(1, 10 ** 20), 128)
    assert a.is_disjoint_from(b)


# ---------------------------------------------------------------------------
# certified root isolation
# ---------------------------------------------------------------------------

def test_isolate_roots_cube_roots_of_unity():
    p = UniPoly.from_coeffs([-1, 0, 0, 1])
    roots = isolate_roots(p, 128)
    assert len(roots) == 3
    hits = [b for b in roots if (b - 1).contains_zero()]
    assert len(hits) == 1
    for b in roots:
        assert float(b.rad) < 2.0 ** -64
        assert ball_eval(p, b).contains_zero()
    for i in range(3):
        for j in range(i + 1, 3):
            assert roots[i].is_disjoint_from(roots[j])


def test_isolate_roots_requires_squarefree():
    p = UniPoly.from_coeffs([-1, 1]) ** 2
    try:
        isolate_roots(p, 128)
        assert False, "non-squarefree input must be rejected"
    except ValueError as e:
        assert "not separated" in str(e)


def test_isolate_roots_high_precision():
    # x^2 - 2 at 256 bits: radius must tighten accordingly
    p = UniPoly.from_coeffs([-2, 0, 1])
    roots = isolate_roots(p, 256)
    assert len(roots) == 2
    assert all(float(b.rad) < 2.0 ** -128 for b in roots)
    # deterministic order: sorted by (re, im)
    assert roots[0].mid.real < roots[1].mid.real


def test_isolate_roots_clustered_pair():
    # (x - 1)(x - 1 - 2^{-40}): close but separable roots
    eps = Fraction(1, 2 ** 40)
    p = UniPoly.from_coeffs([-1, 1]) * UniPoly.from_coeffs([-1 - eps, 1])
    roots = isolate_roots(p, 128)
    assert len(roots) == 2
    assert roots[0].is_disjoint_from(roots[1])
