"""Exact algebra substrate: rational polynomials, Laurent polynomials,
Chebyshev families, and certified complex ball arithmetic.

Everything trusted downstream reduces to this module:

* ``UniPoly``: univariate polynomials over ℚ (dense, exact),
* ``LaurentPoly``: one-variable Laurent polynomials over ℚ,
* ``LaurentPoly2``: two-variable Laurent polynomials (μ, λ exponent pairs),
* ``cheb_T``, ``cheb_e``: Chebyshev families with T_k(x+x⁻¹) = x^k+x^{−k}
  and e₀ = 1, e₁ = z, e_{i+1} = z·e_i − e_{i−1},
* squarefree machinery (primitive pseudo-remainder gcd with a modular
  fast path),
* ``ComplexBall``: midpoint/radius complex arithmetic on gmpy2 with
  conservative radius bookkeeping,
* ``isolate_roots``: certified isolation of all roots of a squarefree
  polynomial, each root enclosed in its own disjoint ball.

The ball layer never trusts floating point: every enclosure follows from
the inclusion bound  min_root |z − root| ≤ deg·|P(z)/P'(z)|  evaluated in
ball arithmetic, plus pairwise disjointness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import gmpy2

# ---------------------------------------------------------------------------
# rational helpers
# ---------------------------------------------------------------------------

def as_fraction(x) -> Fraction:
    """Coerce an int or Fraction to Fraction; reject floats (exactness contract)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# univariate polynomials over ℚ
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial over ℚ.

    ``coeffs[i]`` is the coefficient of x^i; the tuple carries no trailing
    zeros, and the zero polynomial is the empty tuple (degree −1).
    """

    coeffs: tuple

    # -- construction -------------------------------------------------------

    @staticmethod
    def from_coeffs(cs) -> "UniPoly":
        cs = [as_fraction(c) for c in cs]
        while cs and cs[-1] == 0:
            cs.pop()
        return UniPoly(tuple(cs))

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def constant(c) -> "UniPoly":
        return UniPoly.from_coeffs([c])

    @staticmethod
    def x_power(k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("x_power wants k >= 0")
        return UniPoly.from_coeffs([0] * k + [1])

    # -- inspection ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly.from_coeffs(
            [self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            return UniPoly.from_coeffs([c * a for a in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return UniPoly.from_coeffs(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "UniPoly"):
        """Euclidean division over ℚ: self = q·other + r with deg r < deg other."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        r = list(self.coeffs)
        d = other.degree
        lc = other.leading()
        while len(r) - 1 >= d and any(c != 0 for c in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            f = r[-1] / lc
            k = len(r) - 1 - d
            q[k] = f
            for i, b in enumerate(other.coeffs):
                r[k + i] -= f * b
            r.pop()
        return UniPoly.from_coeffs(q), UniPoly.from_coeffs(r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("exact_div: division left a remainder")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly.from_coeffs(
            [i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = 1 / self.leading()
        return UniPoly(tuple(c * inv for c in self.coeffs))

    # -- evaluation ----------------------------------------------------------

    def __call__(self, x):
        """Horner evaluation.  Works for any value supporting +, * with
        Fraction coefficients (Fraction, LaurentPoly, ComplexBall, field
        elements...)."""
        scalar = isinstance(x, (int, Fraction))
        if not self.coeffs:
            return Fraction(0) if scalar else 0 * x
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if self.degree == 0 and not scalar:
            # Horner never touched x; land in x's ring anyway
            return acc + 0 * x
        return acc

    # -- integer normal forms -------------------------------------------------

    def content(self) -> Fraction:
        """Positive generator of the fractional ideal of coefficients."""
        if self.is_zero():
            return Fraction(0)
        num = reduce(math.gcd, (c.numerator for c in self.coeffs))
        den = reduce(math.lcm, (c.denominator for c in self.coeffs))
        return Fraction(num, den)

    def primitive(self) -> "UniPoly":
        """Integer-primitive associate with positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.content()
        if self.leading() < 0:
            c = -c
        return UniPoly(tuple(a / c for a in self.coeffs))

    def int_coeffs(self) -> list:
        """Coefficients as plain ints (requires integral polynomial)."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError("int_coeffs on a non-integral polynomial")
            out.append(c.numerator)
        return out

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            mag = abs(c)
            cs = "" if (mag == 1 and i > 0) else str(mag)
            xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            term = cs + ("*" if cs and xs else "") + xs
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)


# ---------------------------------------------------------------------------
# gcd / squarefree machinery
# ---------------------------------------------------------------------------

def _int_content(cs) -> int:
    return reduce(math.gcd, (abs(c) for c in cs), 0)


def _int_primitive(cs) -> list:
    g = _int_content(cs)
    if g == 0:
        return list(cs)
    if cs[-1] < 0:
        g = -g
    return [c // g for c in cs]


def _int_pseudo_rem(a, b):
    """Pseudo-remainder of integer coefficient lists (dense, trimmed)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db:
        if a[-1] == 0:
            a.pop()
            continue
        la = a[-1]
        k = len(a) - 1 - db
        a = [c * lb for c in a]
        for i, bc in enumerate(b):
            a[k + i] -= la * bc
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over ℚ via the primitive pseudo-remainder sequence."""
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    a = _int_primitive(p.primitive().int_coeffs())
    b = _int_primitive(q.primitive().int_coeffs())
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_pseudo_rem(a, b)
        a, b = b, _int_primitive(r)
    return UniPoly.from_coeffs(a).monic()


_SQFREE_PRIMES = (2305843009213693951, 4611686018427387847, 9223372036854775783)


def _gcd_degree_mod(a, b, prime) -> int:
    """Degree of gcd(a, b) over GF(prime); a, b integer coefficient lists."""
    a = [c % prime for c in a]
    b = [c % prime for c in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        inv = pow(b[-1], prime - 2, prime)
        db = len(b) - 1
        r = list(a)
        while len(r) - 1 >= db:
            if r[-1] == 0:
                r.pop()
                continue
            f = r[-1] * inv % prime
            k = len(r) - 1 - db
            for i, bc in enumerate(b):
                r[k + i] = (r[k + i] - f * bc) % prime
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        a, b = b, r
    return len(a) - 1


def is_squarefree(p: UniPoly) -> bool:
    """Exact squarefreeness over ℚ.

    Fast path: gcd(P, P') ≡ constant mod a word-size prime not dividing the
    leading coefficient certifies squarefreeness over ℚ (specialization can
    only grow the gcd).  Falls back to the exact gcd when every tried prime
    reports a nontrivial modular gcd.
    """
    if p.is_zero():
        return False
    if p.degree <= 1:
        return True
    ints = p.primitive().int_coeffs()
    dints = [i * c for i, c in enumerate(ints)][1:]
    for prime in _SQFREE_PRIMES:
        if ints[-1] % prime == 0:
            continue
        if _gcd_degree_mod(ints, dints, prime) == 0:
            return True
    return poly_gcd(p, p.derivative()).degree == 0


def squarefree_part(p: UniPoly) -> UniPoly:
    """P / gcd(P, P'): same distinct roots, all simple.

    Returned integer-primitive with positive leading coefficient.
    """
    if p.is_zero():
        raise ValueError("squarefree_part of the zero polynomial")
    if is_squarefree(p):
        return p.primitive()
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g).primitive()


def multiplicity_at(p: UniPoly, r) -> int:
    """Multiplicity of the root x = r (0 when P(r) ≠ 0)."""
    if p.is_zero():
        raise ValueError("multiplicity_at on the zero polynomial")
    r = as_fraction(r)
    m = 0
    while p(r) == 0:
        p = p.exact_div(UniPoly.from_coeffs([-r, 1]))
        m += 1
    return m


def distinct_roots_excluding(p: UniPoly, excluded) -> int:
    """Number of distinct complex roots of P outside the excluded set."""
    sf = squarefree_part(p)
    hits = sum(1 for r in set(as_fraction(e) for e in excluded) if sf(r) == 0)
    return sf.degree - hits


# ---------------------------------------------------------------------------
# Chebyshev families
# ---------------------------------------------------------------------------

_T_CACHE = [UniPoly.constant(2), UniPoly.x_power(1)]
_E_CACHE = [UniPoly.constant(1), UniPoly.x_power(1)]


def cheb_T(k: int) -> UniPoly:
    """Trace Chebyshev family: T₀ = 2, T₁ = x, T_{k+1} = x·T_k − T_{k−1},
    so that T_k(x + x⁻¹) = x^k + x^{−k}."""
    if k < 0:
        k = -k
    x = UniPoly.x_power(1)
    while len(_T_CACHE) <= k:
        _T_CACHE.append(x * _T_CACHE[-1] - _T_CACHE[-2])
    return _T_CACHE[k]


def cheb_e(i: int) -> UniPoly:
    """Second-kind family: e₀ = 1, e₁ = z, e_{i+1} = z·e_i − e_{i−1},
    so that e_i(x + x⁻¹)·(x − x⁻¹) = x^{i+1} − x^{−i−1}."""
    if i < 0:
        raise ValueError("cheb_e wants i >= 0")
    z = UniPoly.x_power(1)
    while len(_E_CACHE) <= i:
        _E_CACHE.append(z * _E_CACHE[-1] - _E_CACHE[-2])
    return _E_CACHE[i]


# ---------------------------------------------------------------------------
# Laurent polynomials (one variable)
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Laurent polynomial Σ c_k x^k over ℚ, sparse dict {exponent: coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in terms.items():
                c = as_fraction(c)
                if c != 0:
                    t[int(e)] = c
        self.terms = t

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def x_pow(k: int) -> "LaurentPoly":
        return LaurentPoly({k: 1})

    @staticmethod
    def constant(c) -> "LaurentPoly":
        return LaurentPoly({0: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, Fraction(0)) + c
            if s == 0:
                t.pop(e, None)
            else:
                t[e] = s
        return LaurentPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            if c == 0:
                return LaurentPoly.zero()
            return LaurentPoly({e: c * a for e, a in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = t.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    t.pop(e, None)
                else:
                    t[e] = s
        return LaurentPoly(t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            # only monomials are invertible; general inversion unsupported
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            (e, c), = self.terms.items()
            return LaurentPoly({e * k: c ** k})
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def min_exp(self) -> int:
        if self.is_zero():
            raise ValueError("zero Laurent polynomial has no support")
        return min(self.terms)

    def max_exp(self) -> int:
        if self.is_zero():
            raise ValueError("zero Laurent polynomial has no support")
        return max(self.terms)

    def to_unipoly(self):
        """Clear the pole: returns (P, m) with  self = x^m · P,  P(0) ≠ 0."""
        if self.is_zero():
            return UniPoly.zero(), 0
        m = self.min_exp()
        cs = [Fraction(0)] * (self.max_exp() - m + 1)
        for e, c in self.terms.items():
            cs[e - m] = c
        return UniPoly.from_coeffs(cs), m

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division (raises when the quotient is not a Laurent polynomial)."""
        pn, mn = self.to_unipoly()
        pd, md = other.to_unipoly()
        q = pn.exact_div(pd)
        shift = mn - md
        return LaurentPoly({e + shift: c for e, c in
                            enumerate(q.coeffs) if c != 0})

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mag = abs(c)
            cs = "" if (mag == 1 and e != 0) else str(mag)
            xs = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            term = cs + ("*" if cs and xs else "") + xs
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Laurent polynomials (two variables)
# ---------------------------------------------------------------------------

class LaurentPoly2:
    """Two-variable Laurent polynomial Σ c_{a,b} u^a v^b over ℚ."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for (a, b), c in terms.items():
                c = as_fraction(c)
                if c != 0:
                    t[(int(a), int(b))] = c
        self.terms = t

    @staticmethod
    def from_term_list(triples) -> "LaurentPoly2":
        t = {}
        for c, a, b in triples:
            key = (a, b)
            s = t.get(key, Fraction(0)) + as_fraction(c)
            if s == 0:
                t.pop(key, None)
            else:
                t[key] = s
        return LaurentPoly2(t)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LaurentPoly2) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, Fraction(0)) + c
            if s == 0:
                t.pop(e, None)
            else:
                t[e] = s
        return LaurentPoly2(t)

    def __neg__(self):
        return LaurentPoly2({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            if c == 0:
                return LaurentPoly2()
            return LaurentPoly2({e: c * a for e, a in self.terms.items()})
        t = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                s = t.get(key, Fraction(0)) + c1 * c2
                if s == 0:
                    t.pop(key, None)
                else:
                    t[key] = s
        return LaurentPoly2(t)

    __rmul__ = __mul__

    def substitute_powers(self, ue: int, ve: int) -> LaurentPoly:
        """u ↦ x^{ue}, v ↦ x^{ve}: collapse to a one-variable Laurent polynomial."""
        t = {}
        for (a, b), c in self.terms.items():
            e = a * ue + b * ve
            s = t.get(e, Fraction(0)) + c
            if s == 0:
                t.pop(e, None)
            else:
                t[e] = s
        return LaurentPoly(t)

    def support(self):
        return set(self.terms)

    def __str__(self):
        if self.is_zero():
            return "0"
        def var(sym, e):
            if e == 0:
                return ""
            if e == 1:
                return sym
            return f"{sym}^{e}"
        parts = []
        for (a, b) in sorted(self.terms):
            c = self.terms[(a, b)]
            body = " ".join(filter(None, [var("u", a), var("v", b)]))
            mag = abs(c)
            cs = "" if (mag == 1 and body) else str(mag)
            term = " ".join(filter(None, [cs, body]))
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# certified complex balls (gmpy2 backend)
# ---------------------------------------------------------------------------

_RAD_PREC = 32       # radii carry little information; keep them cheap
_SLACK = 1.001953125 # 1 + 2^-9, exactly representable: collective upper-bound slack


def _rf(x) -> "gmpy2.mpfr":
    with gmpy2.context(precision=_RAD_PREC):
        return gmpy2.mpfr(x)


def _rup(*xs) -> "gmpy2.mpfr":
    """Sum of nonnegative radius terms, inflated so rounding cannot undercut."""
    with gmpy2.context(precision=_RAD_PREC):
        s = gmpy2.mpfr(0)
        for x in xs:
            s = s + gmpy2.mpfr(x)
        return s * gmpy2.mpfr(_SLACK)


class ComplexBall:
    """Complex ball: gmpy2 ``mpc`` midpoint + upper-bound radius.

    All operations return balls guaranteed to contain the exact result
    whenever the operands contain theirs.  Midpoint rounding is absorbed
    into the radius via a 2^{4−prec} relative bump (MPC ops are correctly
    rounded per component, so the true componentwise error is below
    2^{1−prec}; the slack is deliberate overkill, radii are not meant to
    be tight).
    """

    __slots__ = ("mid", "rad", "prec")

    def __init__(self, mid, rad, prec: int):
        self.mid = mid
        self.rad = rad
        self.prec = prec

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_int(n: int, prec: int) -> "ComplexBall":
        with gmpy2.context(precision=prec):
            m = gmpy2.mpc(n)
        if abs(n) < (1 << (prec - 1)):
            return ComplexBall(m, _rf(0), prec)
        return ComplexBall(m, _bump(m, _rf(0), prec), prec)

    @staticmethod
    def from_fraction(x, prec: int) -> "ComplexBall":
        x = as_fraction(x)
        with gmpy2.context(precision=prec):
            m = gmpy2.mpc(gmpy2.mpfr(gmpy2.mpq(x.numerator, x.denominator)))
        return ComplexBall(m, _bump(m, _rf(0), prec), prec)

    @staticmethod
    def from_mpc(m, prec: int) -> "ComplexBall":
        return ComplexBall(m, _bump(m, _rf(0), prec), prec)

    @staticmethod
    def exact_mpc(m, prec: int) -> "ComplexBall":
        """Trusted-exact midpoint (used for isolating-ball centers)."""
        return ComplexBall(m, _rf(0), prec)

    @staticmethod
    def unit_root(j: int, m: int, prec: int) -> "ComplexBall":
        """e^{2πi j/m} with a proven 2^{6−prec} radius."""
        with gmpy2.context(precision=prec):
            theta = 2 * gmpy2.const_pi() * j / m
            mid = gmpy2.mpc(gmpy2.cos(theta), gmpy2.sin(theta))
        # |θ| ≤ 2π|j|/m ≤ 2π·m: argument rounding ≤ a few ulp, derivative ≤ 1
        rad = _rf(gmpy2.exp2(-(prec - 6)))
        return ComplexBall(mid, rad, prec)

    @staticmethod
    def two_cos_pi(frac: Fraction, prec: int) -> "ComplexBall":
        """2·cos(π·frac) as a real ball with a proven 2^{6−prec} radius."""
        frac = as_fraction(frac)
        with gmpy2.context(precision=prec):
            theta = gmpy2.const_pi() * gmpy2.mpq(frac.numerator, frac.denominator)
            mid = gmpy2.mpc(2 * gmpy2.cos(theta))
        rad = _rf(gmpy2.exp2(-(prec - 6)))
        return ComplexBall(mid, rad, prec)

    @staticmethod
    def real_sqrt(x, prec: int) -> "ComplexBall":
        """√x for exact rational x > 0."""
        x = as_fraction(x)
        if x <= 0:
            raise ValueError("real_sqrt wants a positive rational")
        with gmpy2.context(precision=prec):
            mid = gmpy2.mpc(gmpy2.sqrt(gmpy2.mpfr(gmpy2.mpq(x.numerator, x.denominator))))
        return ComplexBall(mid, _bump(mid, _rf(0), prec), prec)

    # -- precision conversion ---------------------------------------------------

    def at_precision(self, prec: int) -> "ComplexBall":
        """The same enclosure re-rounded to another working precision."""
        if prec == self.prec:
            return self
        with gmpy2.context(precision=prec):
            m = gmpy2.mpc(self.mid)
        return ComplexBall(m, _bump(m, self.rad, prec), prec)

    # -- bounds ---------------------------------------------------------------

    def abs_upper(self):
        """Upper bound for |value| (L1 over components beats the modulus)."""
        return _rup(_mpfr_abs_upper(self.mid, self.prec), self.rad)

    def abs_lower(self):
        """Lower bound for |value| (max-component minus radius, clipped)."""
        with gmpy2.context(precision=_RAD_PREC):
            lo = _mpfr_abs_lower(self.mid) / gmpy2.mpfr(_SLACK) - gmpy2.mpfr(self.rad) * gmpy2.mpfr(_SLACK)
            return lo if lo > 0 else gmpy2.mpfr(0)

    def contains_zero(self) -> bool:
        return not (self.abs_lower() > 0)

    def is_disjoint_from(self, other: "ComplexBall") -> bool:
        return (self - other).abs_lower() > 0

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ComplexBall):
            if other.prec != self.prec:
                raise ValueError("mixed-precision ball arithmetic")
            return other
        if isinstance(other, int):
            return ComplexBall.from_int(other, self.prec)
        if isinstance(other, Fraction):
            return ComplexBall.from_fraction(other, self.prec)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        with gmpy2.context(precision=self.prec):
            m = self.mid + o.mid
        return ComplexBall(m, _bump(m, _rup(self.rad, o.rad), self.prec), self.prec)

    __radd__ = __add__

    def __neg__(self):
        with gmpy2.context(precision=self.prec):
            m = -self.mid
        return ComplexBall(m, self.rad, self.prec)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        with gmpy2.context(precision=self.prec):
            m = self.mid - o.mid
        return ComplexBall(m, _bump(m, _rup(self.rad, o.rad), self.prec), self.prec)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        with gmpy2.context(precision=self.prec):
            m = self.mid * o.mid
        # |xy − mm'| ≤ |m|r' + |m'|r + rr'
        a = _mpfr_abs_upper(self.mid, self.prec)
        b = _mpfr_abs_upper(o.mid, self.prec)
        with gmpy2.context(precision=_RAD_PREC):
            cross = a * gmpy2.mpfr(o.rad) + b * gmpy2.mpfr(self.rad) \
                + gmpy2.mpfr(self.rad) * gmpy2.mpfr(o.rad)
        return ComplexBall(m, _bump(m, _rup(cross), self.prec), self.prec)

    __rmul__ = __mul__

    def inverse(self) -> "ComplexBall":
        lo = self.abs_lower()
        if not lo > 0:
            raise ZeroDivisionError("ball contains zero")
        with gmpy2.context(precision=self.prec):
            m = 1 / self.mid
        # |1/x − 1/m| ≤ r / (|m|·(|m| − r))
        with gmpy2.context(precision=_RAD_PREC):
            mlo = _mpfr_abs_lower(self.mid) / gmpy2.mpfr(_SLACK)
            rad = gmpy2.mpfr(self.rad) / (mlo * lo)
        return ComplexBall(m, _bump(m, _rup(rad), self.prec), self.prec)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ComplexBall.from_int(1, self.prec)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "ComplexBall":
        with gmpy2.context(precision=self.prec):
            m = gmpy2.mpc(self.mid.real, -self.mid.imag)
        return ComplexBall(m, self.rad, self.prec)

    def real_part_ball(self) -> "ComplexBall":
        with gmpy2.context(precision=self.prec):
            m = gmpy2.mpc(self.mid.real)
        return ComplexBall(m, self.rad, self.prec)

    def sqrt(self) -> "ComplexBall":
        lo = self.abs_lower()
        if not lo > 0:
            raise ZeroDivisionError("sqrt of a ball containing zero")
        with gmpy2.context(precision=self.prec):
            m = gmpy2.sqrt(self.mid)
        # |√x − √m| ≤ |x − m| / (√|x| + √|m|) ≤ r / √(lower bound)
        with gmpy2.context(precision=_RAD_PREC):
            rad = gmpy2.mpfr(self.rad) / gmpy2.sqrt(lo)
        return ComplexBall(m, _bump(m, _rup(rad), self.prec), self.prec)

    def __repr__(self):
        return f"Ball({self.mid} ± {self.rad})"


def _mpfr_abs_upper(m, prec):
    with gmpy2.context(precision=_RAD_PREC):
        return (abs(gmpy2.mpfr(m.real)) + abs(gmpy2.mpfr(m.imag))) * gmpy2.mpfr(_SLACK)


def _mpfr_abs_lower(m):
    with gmpy2.context(precision=_RAD_PREC):
        return max(abs(gmpy2.mpfr(m.real)), abs(gmpy2.mpfr(m.imag)))


def _bump(mid, rad, prec):
    """Radius plus the midpoint-rounding allowance 2^{4−prec}·(|mid| + rad)."""
    with gmpy2.context(precision=_RAD_PREC):
        scale = _mpfr_abs_upper(mid, prec) + gmpy2.mpfr(rad)
        return _rup(rad, scale * gmpy2.exp2(-(prec - 4)))


def ball_eval(p: UniPoly, x: ComplexBall) -> ComplexBall:
    """Horner evaluation of a rational polynomial on a ball."""
    acc = ComplexBall.from_int(0, x.prec)
    for c in reversed(p.coeffs):
        acc = acc * x + ComplexBall.from_fraction(c, x.prec)
    return acc


# ---------------------------------------------------------------------------
# certified root isolation
# ---------------------------------------------------------------------------

def _initial_root_seeds(ints, dps_hint=None):
    """Unverified approximations of all roots (numpy first, mpmath backup)."""
    import numpy as np
    try:
        seeds = np.roots([float(c) for c in reversed(ints)])
        if len(seeds) == len(ints) - 1 and not any(
                math.isnan(s.real) or math.isnan(s.imag) for s in seeds):
            return [complex(s) for s in seeds], False
    except Exception:
        pass
    return _mpmath_seeds(ints, dps_hint or 40), True


def _mpmath_seeds(ints, dps):
    import mpmath as mp
    with mp.workdps(dps):
        rts = mp.polyroots([mp.mpf(c) for c in reversed(ints)],
                           maxsteps=200, extraprec=4 * dps)
        return [(mp.mpf(r.real), mp.mpf(r.imag)) if hasattr(r, "real") else r
                for r in rts]


def _to_mpc(seed, prec):
    with gmpy2.context(precision=prec):
        if isinstance(seed, complex):
            return gmpy2.mpc(seed.real, seed.imag)
        if isinstance(seed, tuple):
            return gmpy2.mpc(gmpy2.mpfr(str(seed[0])), gmpy2.mpfr(str(seed[1])))
        return gmpy2.mpc(seed)


def _newton_polish(ints, dints, z, prec, steps):
    with gmpy2.context(precision=prec):
        for _ in range(steps):
            pv = gmpy2.mpc(0)
            for c in reversed(ints):
                pv = pv * z + c
            dv = gmpy2.mpc(0)
            for c in reversed(dints):
                dv = dv * z + c
            if dv == 0:
                return z
            z = z - pv / dv
    return z


def isolate_roots(p: UniPoly, precision: int = 128) -> list:
    """Certified isolation of every complex root of a squarefree P.

    Returns one ``ComplexBall`` per root (deg P in total), pairwise
    disjoint, each of radius at most 2^{−precision/2}.  Certification uses
    only the inclusion bound  min_root |z − root| ≤ deg·|P(z)/P'(z)|  in
    ball arithmetic: with deg(P) pairwise-disjoint such disks, each must
    contain exactly one root.  Approximation sources (numpy/mpmath + Newton)
    never enter the trust chain.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if not is_squarefree(p):
        raise ValueError("roots not separated: polynomial is not squarefree")
    prim = p.primitive()
    d = prim.degree
    if d <= 0:
        return []
    ints = prim.int_coeffs()
    dints = [i * c for i, c in enumerate(ints)][1:]
    dpoly = prim.derivative()
    target = _rf(gmpy2.exp2(-(precision // 2)))

    seeds, _ = _initial_root_seeds(ints)
    work = max(2 * precision, 192)
    while work <= 32 * precision + 8192:
        balls = []
        ok = True
        for s in seeds:
            z = _newton_polish(ints, dints, _to_mpc(s, work), work,
                               steps=8 + work // 32)
            zball = ComplexBall.exact_mpc(z, work)
            pv = ball_eval(prim, zball)
            dv = ball_eval(dpoly, zball)
            dlo = dv.abs_lower()
            if not dlo > 0:
                ok = False
                break
            with gmpy2.context(precision=_RAD_PREC):
                rad = _rup(d * pv.abs_upper() / dlo)
            if not rad < target:
                ok = False
                break
            balls.append(ComplexBall(z, rad, work))
        if ok and len(balls) == d:
            for i in range(d):
                for j in range(i + 1, d):
                    if not balls[i].is_disjoint_from(balls[j]):
                        ok = False
                        break
                if not ok:
                    break
        if ok and len(balls) == d:
            balls.sort(key=lambda b: (b.mid.real, b.mid.imag))
            if work != precision:
                # downgrade midpoints to the requested precision, folding the
                # rounding error into the radius
                out = []
                for b in balls:
                    with gmpy2.context(precision=precision):
                        m = gmpy2.mpc(b.mid.real, b.mid.imag)
                    out.append(ComplexBall(m, _bump(m, b.rad, precision), precision))
                balls = out
            return balls
        work *= 2
        seeds = _mpmath_seeds(ints, dps=max(40, work // 3))
    raise ValueError("roots not separated at the precision limit")
