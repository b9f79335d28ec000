"""Exact SO(3) Reshetikhin-Turaev values for integer surgeries on the unknot.

All arithmetic happens in ℚ(ζ) with ζ a primitive 2N-th root of unity and N
odd: elements are residues modulo the cyclotomic polynomial Φ_{2N}, so every
value is exact.  A single p-framed unknot presents the lens space L(p,1)
(S³ at p = ±1, S²×S¹ at p = 0).  The surgery component carries the Kirby
color Σ_i c_i e_i with c_i = (−1)^i [i+1] over the half range
i = 0..(N−3)/2; a color-i strand contributes the loop value
Δ_i = e_i(−ζ²−ζ^{−2}) = (−1)^i [i+1] and the twist eigenvalue
μ_i = (−1)^i ζ^{i²+2i} per framing unit, giving

    rt_lens(p) = Σ_i c_i μ_i^p Δ_i  /  Σ_i c_i μ_i^{sign p} Δ_i

with no normalization factor at p = 0.  Two independent consistency gates
pin the twist convention: rt_lens(±1) = 1, and the integrality/congruence
test on |p|·rt_lens(p) in ℤ[ζ²] (its reduction mod ζ²−1 must equal the
Legendre symbol (|p| over N)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exactalg import UniPoly, as_fraction, cheb_e

# ---------------------------------------------------------------------------
# cyclotomic polynomials
# ---------------------------------------------------------------------------

def _moebius(k: int) -> int:
    out = 1
    d = 2
    while d * d <= k:
        if k % d == 0:
            k //= d
            if k % d == 0:
                return 0
            out = -out
        d += 1
    if k > 1:
        out = -out
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> UniPoly:
    """Φ_m over ℤ, by Möbius inversion of x^m − 1 = Π_{d|m} Φ_d(x)."""
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    num = UniPoly.constant(1)
    den = UniPoly.constant(1)
    for d in range(1, m + 1):
        if m % d:
            continue
        mu = _moebius(m // d)
        if mu == 1:
            num = num * (UniPoly.x_power(d) - 1)
        elif mu == -1:
            den = den * (UniPoly.x_power(d) - 1)
    return num.exact_div(den)


# ---------------------------------------------------------------------------
# the coefficient field ℚ(ζ)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycloField:
    """ℚ(ζ) with ζ of order 2N, N odd, as residues mod Φ_{2N}."""

    N: int
    modulus: UniPoly

    @staticmethod
    def of(N: int) -> "CycloField":
        if N < 3 or N % 2 == 0:
            raise ValueError("root order 2N needs odd N >= 3")
        return CycloField(N, cyclotomic_poly(2 * N))

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def element(self, poly: UniPoly) -> "CycloElem":
        return CycloElem(self, poly % self.modulus)

    def rational(self, c) -> "CycloElem":
        return self.element(UniPoly.constant(as_fraction(c)))

    def zero(self) -> "CycloElem":
        return self.rational(0)

    def one(self) -> "CycloElem":
        return self.rational(1)

    def zeta(self, k: int = 1) -> "CycloElem":
        """ζ^k for any integer k (reduced through ζ^{2N} = 1)."""
        return self.element(UniPoly.x_power(k % (2 * self.N)))

    def __str__(self):
        return f"Q(zeta_{2 * self.N})"


def _poly_xgcd(a: UniPoly, b: UniPoly):
    """Extended Euclid in ℚ[x]: (g, s, t) with s·a + t·b = g."""
    r0, r1 = a, b
    s0, s1 = UniPoly.constant(1), UniPoly.zero()
    t0, t1 = UniPoly.zero(), UniPoly.constant(1)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


@dataclass(frozen=True)
class CycloElem:
    """Field element: a residue of degree < deg Φ_{2N} in the power basis of ζ."""

    field: CycloField
    residue: UniPoly

    def _peer(self, other):
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        if not isinstance(other, CycloElem):
            return None
        if other.field != self.field:
            raise ValueError("elements of different cyclotomic fields")
        return other

    def is_zero(self) -> bool:
        return self.residue.is_zero()

    def is_one(self) -> bool:
        return self.residue.coeffs == (Fraction(1),)

    def __add__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return CycloElem(self.field,
                         (self.residue + o.residue) % self.field.modulus)

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.field, -self.residue)

    def __sub__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return CycloElem(self.field,
                         (self.residue * o.residue) % self.field.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = _poly_xgcd(self.residue, self.field.modulus)
        # Φ_{2N} is irreducible over ℚ, so the gcd is a nonzero constant
        return CycloElem(self.field, (s * (1 / g[0])) % self.field.modulus)

    def __truediv__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.field.rational(other) / self

    def __pow__(self, k: int) -> "CycloElem":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __str__(self):
        return str(self.residue).replace("x", "z")


def galois_conjugate(a: CycloElem, k: int = -1) -> CycloElem:
    """Apply the automorphism ζ ↦ ζ^k; the default is complex conjugation."""
    m = 2 * a.field.N
    if gcd(k % m, m) != 1:
        raise ValueError("Galois exponent must be a unit modulo 2N")
    out = a.field.zero()
    for j, c in enumerate(a.residue.coeffs):
        if c != 0:
            out = out + c * a.field.zeta(j * k)
    return out


# ---------------------------------------------------------------------------
# quantum integers and the Kirby color
# ---------------------------------------------------------------------------

def quantum_int(F: CycloField, i: int) -> CycloElem:
    """[i] = (ζ^{2i} − ζ^{−2i}) / (ζ² − ζ^{−2})."""
    num = F.zeta(2 * i) - F.zeta(-2 * i)
    den = F.zeta(2) - F.zeta(-2)
    return num / den


def kirby_coeffs(F: CycloField) -> list:
    """Coefficients c_i = (−1)^i [i+1] of the surgery color, i = 0..(N−3)/2."""
    out = []
    for i in range((F.N - 1) // 2):
        c = quantum_int(F, i + 1)
        out.append(-c if i % 2 else c)
    return out


def colored_unknot_bracket(F: CycloField, framing: int, color: int) -> CycloElem:
    """Bracket of a color-i unknot with a framing twist: μ_i^framing · Δ_i.

    Δ_i is e_i evaluated at the loop value −ζ²−ζ^{−2} (which collapses to
    (−1)^i [i+1]); the twist eigenvalue is μ_i = (−1)^i ζ^{i²+2i}.
    """
    top = (F.N - 3) // 2
    if not 0 <= color <= top:
        raise ValueError(f"color {color} out of range 0..{top}")
    loop = cheb_e(color)(-F.zeta(2) - F.zeta(-2))
    twist = F.zeta((color * color + 2 * color) * framing)
    if (color * framing) % 2:
        twist = -twist
    return twist * loop


# ---------------------------------------------------------------------------
# lens-space values
# ---------------------------------------------------------------------------

def _surgery_sum(F: CycloField, framing: int) -> CycloElem:
    total = F.zero()
    for i, c in enumerate(kirby_coeffs(F)):
        total = total + c * colored_unknot_bracket(F, framing, i)
    return total


def rt_lens(F: CycloField, p: int) -> CycloElem:
    """Invariant of the p-framed unknot surgery, normalized by the sign-of-p
    unknot value; p = 0 (first homology ℤ) carries no normalization."""
    total = _surgery_sum(F, p)
    if p == 0:
        return total
    unit = _surgery_sum(F, 1 if p > 0 else -1)
    if unit.is_zero():
        raise ValueError("non-invertible normalization")
    return total / unit


# ---------------------------------------------------------------------------
# integrality and congruence of h₁ · rt
# ---------------------------------------------------------------------------

def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a over p) via Euler's criterion, in {−1, 0, 1}."""
    if not _is_odd_prime(p):
        raise ValueError("legendre symbol wants an odd prime modulus")
    e = pow(a % p, (p - 1) // 2, p)
    if e == 0:
        return 0
    return 1 if e == 1 else -1


def _even_power_coordinates(a: CycloElem) -> list:
    """Coordinates of a in the basis {ζ^{2j} : j < deg Φ_{2N}} of ℚ(ζ).

    N odd makes ζ² a primitive N-th root generating the same field, so the
    even powers form a ℚ-basis; the change of basis is an exact rational
    solve in the power basis of ζ.
    """
    F = a.field
    D = F.degree
    cols = [[F.zeta(2 * j).residue[i] for i in range(D)] for j in range(D)]
    rhs = [a.residue[i] for i in range(D)]
    aug = [[cols[j][i] for j in range(D)] + [rhs[i]] for i in range(D)]
    for c in range(D):
        piv = None
        for r in range(c, D):
            if aug[r][c] != 0:
                piv = r
                break
        if piv is None:
            raise ValueError("even powers of the root failed to span")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for r in range(D):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [vr - f * vc for vr, vc in zip(aug[r], aug[c])]
    return [aug[i][D] for i in range(D)]


@dataclass(frozen=True)
class MurakamiReport:
    """Outcome of the ℤ[ζ²] test on h₁·rt_lens(p).

    integral: every coordinate in the ζ²-power basis is an integer.
    congruent: the reduction ζ² ↦ 1 (the coordinate sum) matches the
    Legendre symbol (h₁ over N) modulo N.
    """

    integral: bool
    congruent: bool
    h1: int
    symbol: int
    coordinate_sum: Fraction


def murakami_check(F: CycloField, p: int) -> MurakamiReport:
    """Integrality and congruence of h₁·rt_lens(p) with h₁ = |p|."""
    if not _is_odd_prime(F.N):
        raise ValueError("congruence test wants prime N")
    if p == 0:
        raise ValueError("p = 0 has infinite first homology")
    if abs(p) % F.N == 0:
        raise ValueError("N must not divide the surgery coefficient")
    h1 = abs(p)
    val = h1 * rt_lens(F, p)
    coords = _even_power_coordinates(val)
    integral = all(c.denominator == 1 for c in coords)
    sym = legendre(h1, F.N)
    total = sum(coords)
    congruent = integral and (int(total) - sym) % F.N == 0
    return MurakamiReport(integral, congruent, h1, sym, total)


# ---------------------------------------------------------------------------
# meridian interpolation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycloPoly:
    """One-variable polynomial with coefficients in a cyclotomic field."""

    field: CycloField
    coeffs: tuple

    @staticmethod
    def from_coeffs(F: CycloField, cs) -> "CycloPoly":
        cs = list(cs)
        while cs and cs[-1].is_zero():
            cs.pop()
        return CycloPoly(F, tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: CycloElem) -> CycloElem:
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def meridian_nodes(F: CycloField) -> list:
    """Meridian eigenvalues λ_i = −ζ^{2i+2} − ζ^{−2i−2}, i = 0..(N−3)/2."""
    return [-(F.zeta(2 * i + 2)) - F.zeta(-2 * i - 2)
            for i in range((F.N - 1) // 2)]


def meridian_interpolant(F: CycloField) -> CycloPoly:
    """Least-degree Q with Q(λ₀) = 1 and Q(λ_i) = 0 for 1 ≤ i ≤ (N−3)/2.

    For N = 3 the condition list is the single normalization, so Q ≡ 1.
    """
    nodes = meridian_nodes(F)
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if nodes[i] == nodes[j]:
                raise ValueError("coincident meridian eigenvalues")
    coeffs = [F.one()]
    for lam in nodes[1:]:
        scale = (nodes[0] - lam).inverse()
        new = [F.zero()] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            new[k + 1] = new[k + 1] + c * scale
            new[k] = new[k] - c * lam * scale
        coeffs = new
    return CycloPoly.from_coeffs(F, coeffs)


def meridian_colored_bracket(F: CycloField, p: int) -> CycloElem:
    """Surgery sum with each color weighted by the interpolant at its node.

    The interpolation conditions kill every color but i = 0, whose twist
    eigenvalue is 1, so the value collapses to 1 for every framing p.
    """
    Q = meridian_interpolant(F)
    nodes = meridian_nodes(F)
    total = F.zero()
    for i, c in enumerate(kirby_coeffs(F)):
        total = total + c * Q(nodes[i]) * colored_unknot_bracket(F, p, i)
    return total
