"""Quantum torus and curve embeddings.

The algebra is spanned over ℚ(A) by basis symbols e_{p,q} indexed by ℤ²,
with the twisted product

    e_{p,q} · e_{r,s} = A^{ps−qr} · e_{p+r, q+s},          e_{0,0} = 1.

A simple closed curve of slope (p, q) on the torus embeds as

    embed_curve(p, q) = T_d(e_{a,b} + e_{−a,−b}),

where d = gcd(p, q), (a, b) = (p, q)/d and T_d is the trace Chebyshev
polynomial; the empty curve (0, 0) maps to the unit.  The product of two
embedded curves expands by the product-to-sum rule

    embed(p,q)·embed(r,s) = A^{ps−qr}·E(p+r, q+s) + A^{−(ps−qr)}·E(p−r, q−s)

with E(m, n) = embed_curve(m, n) except at a degenerate apex (m, n) = (0, 0),
where the e-basis expansion contributes the scalar 2 rather than the unit
(e.g. embed(1,0)² = embed(2,0) + 2).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .exactalg import LaurentPoly, cheb_T


class QTorusElem:
    """Element of the quantum torus: {(p, q): LaurentPoly in A}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for key, c in terms.items():
                if isinstance(c, (int, Fraction)):
                    c = LaurentPoly.constant(c)
                if not c.is_zero():
                    t[(int(key[0]), int(key[1]))] = c
        self.terms = t

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero() -> "QTorusElem":
        return QTorusElem()

    @staticmethod
    def one() -> "QTorusElem":
        return QTorusElem({(0, 0): 1})

    @staticmethod
    def e(p: int, q: int) -> "QTorusElem":
        return QTorusElem({(p, q): 1})

    # -- structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QTorusElem({(0, 0): other})
        return isinstance(other, QTorusElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QTorusElem({(0, 0): other})
        t = dict(self.terms)
        for key, c in other.terms.items():
            s = t.get(key, LaurentPoly.zero()) + c
            if s.is_zero():
                t.pop(key, None)
            else:
                t[key] = s
        return QTorusElem(t)

    __radd__ = __add__

    def __neg__(self):
        return QTorusElem({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QTorusElem({(0, 0): other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            if isinstance(other, (int, Fraction)):
                other = LaurentPoly.constant(other)
            return QTorusElem({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, QTorusElem):
            return NotImplemented
        return qt_mul(self, other)

    __rmul__ = __mul__

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for (p, q) in sorted(self.terms):
            parts.append(f"({self.terms[(p, q)]})·e[{p},{q}]")
        return " + ".join(parts)

    __repr__ = __str__


def qt_mul(a: QTorusElem, b: QTorusElem) -> QTorusElem:
    """Twisted product: e_{p,q}·e_{r,s} = A^{ps−qr} e_{p+r,q+s}, extended
    bilinearly over ℚ(A)."""
    t = {}
    for (p, q), ca in a.terms.items():
        for (r, s), cb in b.terms.items():
            key = (p + r, q + s)
            c = ca * cb * LaurentPoly.x_pow(p * s - q * r)
            acc = t.get(key, LaurentPoly.zero()) + c
            if acc.is_zero():
                t.pop(key, None)
            else:
                t[key] = acc
    return QTorusElem(t)


def theta(a: QTorusElem) -> QTorusElem:
    """The algebra involution e_{p,q} ↦ e_{−p,−q} (coefficients fixed)."""
    return QTorusElem({(-p, -q): c for (p, q), c in a.terms.items()})


def embed_curve(p: int, q: int) -> QTorusElem:
    """Embedding of the (p, q)-curve: T_{gcd}(e_{a,b} + e_{−a,−b}).

    The empty curve (0, 0) maps to the unit.
    """
    if p == 0 and q == 0:
        return QTorusElem.one()
    d = gcd(abs(p), abs(q))
    a, b = p // d, q // d
    base = QTorusElem.e(a, b) + QTorusElem.e(-a, -b)
    # Horner in the quantum torus
    acc = QTorusElem.zero()
    for c in reversed(cheb_T(d).coeffs):
        acc = qt_mul(acc, base) + QTorusElem({(0, 0): c})
    return acc


def curve_in_sum(p: int, q: int) -> QTorusElem:
    """The T-normalized curve symbol: embed_curve away from the origin and
    the scalar 2 at it (T₀ = 2; both orientations of the empty curve).

    This is the symbol for which the product-to-sum rule holds with no
    exceptions; embed_curve keeps the unit convention at (0, 0)."""
    if p == 0 and q == 0:
        return QTorusElem({(0, 0): 2})
    return embed_curve(p, q)


def product_to_sum_rhs(p: int, q: int, r: int, s: int) -> QTorusElem:
    """Right-hand side of the product-to-sum rule.

    Apexes (p±r, q±s) use curve_in_sum, so a degenerate apex at the origin
    contributes the scalar 2 rather than the unit (e.g. embed(1,0)² =
    embed(2,0) + 2)."""
    det = p * s - q * r
    return (curve_in_sum(p + r, q + s) * LaurentPoly.x_pow(det)
            + curve_in_sum(p - r, q - s) * LaurentPoly.x_pow(-det))
