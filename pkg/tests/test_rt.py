"""Unit tests for the cyclotomic surgery-invariant engine."""

from fractions import Fraction

import pytest

from skeindim.rt import (
    CycloField, colored_unknot_bracket, cyclotomic_poly, galois_conjugate,
    kirby_coeffs, legendre, meridian_colored_bracket, meridian_interpolant,
    meridian_nodes, murakami_check, quantum_int, rt_lens,
)

F5 = CycloField.of(5)
F7 = CycloField.of(7)


def _frozen(elem):
    return tuple(int(c) for c in elem.residue.coeffs)


# ---------------------------------------------------------------------------
# cyclotomic polynomials and field arithmetic
# ---------------------------------------------------------------------------

def test_cyclotomic_frozen():
    assert cyclotomic_poly(1).coeffs == tuple(map(Fraction, [-1, 1]))
    assert cyclotomic_poly(2).coeffs == tuple(map(Fraction, [1, 1]))
    assert cyclotomic_poly(6).coeffs == tuple(map(Fraction, [1, -1, 1]))
    assert cyclotomic_poly(10).coeffs == tuple(
        map(Fraction, [1, -1, 1, -1, 1]))
    assert cyclotomic_poly(18).coeffs == tuple(
        map(Fraction, [1, 0, 0, -1, 0, 0, 1]))
    assert cyclotomic_poly(12).coeffs == tuple(
        map(Fraction, [1, 0, -1, 0, 1]))


def test_field_construction():
    assert F5.degree == 4 and F7.degree == 6
    assert CycloField.of(13).degree == 12
    for bad in (1, 2, 4, 6):
        with pytest.raises(ValueError):
            CycloField.of(bad)


def test_root_of_unity_relations():
    z = F5.zeta()
    assert (z * F5.zeta(9)).is_one()
    assert z.inverse() == F5.zeta(-1) == F5.zeta(9)
    assert _frozen(z.inverse()) == (1, -1, 1, -1)
    assert F5.zeta(5) == F5.rational(-1)
    assert F5.zeta(10).is_one()


def test_field_arithmetic_errors():
    with pytest.raises(ZeroDivisionError):
        F5.zero().inverse()
    with pytest.raises(ValueError):
        quantum_int(F5, 1) + quantum_int(F7, 1)
    assert (F5.zeta(3) / F5.zeta(3)).is_one()
    assert F5.zeta(2) ** -3 == F5.zeta(-6)
    assert 2 / F5.one() == F5.rational(2)


def test_quantum_integers():
    assert quantum_int(F5, 0).is_zero()
    assert quantum_int(F5, 1).is_one()
    assert quantum_int(F5, 5).is_zero()
    assert quantum_int(F7, 7).is_zero()
    assert _frozen(quantum_int(F5, 2)) == (0, 0, 1, -1)


def test_quantum_integer_symmetry():
    for F in (F5, F7):
        for i in range(F.N + 1):
            assert quantum_int(F, F.N - i) == -quantum_int(F, i)
            assert quantum_int(F, F.N + i) == quantum_int(F, i)


def test_galois_conjugation():
    a = F5.zeta(3) + 2 * F5.zeta(1)
    assert galois_conjugate(a) == F5.zeta(-3) + 2 * F5.zeta(-1)
    assert galois_conjugate(galois_conjugate(a)) == a
    with pytest.raises(ValueError):
        galois_conjugate(a, 5)


# ---------------------------------------------------------------------------
# Kirby color and the colored unknot
# ---------------------------------------------------------------------------

def test_kirby_coeffs():
    assert [c for c in kirby_coeffs(CycloField.of(3))] == [
        CycloField.of(3).one()]
    cs = kirby_coeffs(F5)
    assert cs[0].is_one()
    assert cs[1] == -quantum_int(F5, 2)
    for N in (3, 5, 7, 9, 11, 13):
        assert kirby_coeffs(CycloField.of(N))[0].is_one()
        assert len(kirby_coeffs(CycloField.of(N))) == (N - 1) // 2


def test_colored_unknot_values():
    assert colored_unknot_bracket(F5, 0, 0).is_one()
    F11 = CycloField.of(11)
    for i in range(5):
        want = quantum_int(F11, i + 1)
        if i % 2:
            want = -want
        assert colored_unknot_bracket(F11, 0, i) == want
    assert colored_unknot_bracket(F5, 1, 1) == F5.zeta(3) * quantum_int(F5, 2)
    assert _frozen(colored_unknot_bracket(F5, 1, 1)) == (-1, 1)
    with pytest.raises(ValueError):
        colored_unknot_bracket(F5, 0, 2)
    with pytest.raises(ValueError):
        colored_unknot_bracket(F5, 0, -1)


# ---------------------------------------------------------------------------
# lens-space values
# ---------------------------------------------------------------------------

def test_rt_sphere_normalization():
    for N in (3, 5, 7, 9):
        F = CycloField.of(N)
        assert rt_lens(F, 1).is_one()
        assert rt_lens(F, -1).is_one()


def test_rt_zero_surgery_unnormalized():
    assert _frozen(rt_lens(F5, 0)) == (2, 0, -1, 1)
    assert rt_lens(CycloField.of(3), 0).is_one()


def test_rt_mirror_symmetry():
    for F in (F5, F7):
        for p in (2, 3, 4, 5):
            assert rt_lens(F, -p) == galois_conjugate(rt_lens(F, p))


# ---------------------------------------------------------------------------
# integrality and congruence
# ---------------------------------------------------------------------------

def test_legendre():
    for p in (3, 5, 7):
        assert legendre(1, p) == 1
    assert legendre(10, 5) == 0
    assert legendre(2, 5) == -1
    assert legendre(2, 7) == 1
    with pytest.raises(ValueError):
        legendre(4, 9)
    with pytest.raises(ValueError):
        legendre(3, 2)


def test_murakami_examples():
    r = murakami_check(F5, 2)
    assert r.integral and r.congruent and r.symbol == -1
    assert murakami_check(F5, 4).symbol == 1
    assert murakami_check(F5, 4).congruent
    assert murakami_check(F7, 2).symbol == 1
    assert murakami_check(F7, 2).congruent
    # negative framing runs through the mirror normalization
    r = murakami_check(F5, -3)
    assert r.h1 == 3 and r.integral and r.congruent


def test_murakami_preconditions():
    with pytest.raises(ValueError):
        murakami_check(CycloField.of(9), 2)
    with pytest.raises(ValueError):
        murakami_check(F5, 0)
    with pytest.raises(ValueError):
        murakami_check(F5, 10)


# ---------------------------------------------------------------------------
# meridian interpolation
# ---------------------------------------------------------------------------

def test_meridian_interpolant_shape():
    assert meridian_interpolant(CycloField.of(3)).degree == 0
    assert meridian_interpolant(F5).degree == 1
    assert meridian_interpolant(F7).degree == 2


def test_meridian_interpolant_conditions():
    for N in (5, 7, 11):
        F = CycloField.of(N)
        nodes = meridian_nodes(F)
        assert len(set(map(str, nodes))) == len(nodes)
        Q = meridian_interpolant(F)
        assert Q(nodes[0]).is_one()
        for lam in nodes[1:]:
            assert Q(lam).is_zero()


def test_meridian_collapse():
    assert meridian_colored_bracket(F7, 3).is_one()
    assert meridian_colored_bracket(F5, 0).is_one()
