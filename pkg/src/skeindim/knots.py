"""Knot families, filling slopes, and boundary-polynomial specializations.

Two families are covered:

* the figure-eight knot, with boundary polynomial (eigenvalue coordinates
  μ for the meridian, λ for the longitude)

      A(μ, λ) = −λ + λμ² + μ⁴ + 2λμ⁴ + λ²μ⁴ + λμ⁶ − λμ⁸,

* the (2, 2n+1) torus knots (n ∉ {0, −1}), with A(μ, λ) = 1 + λμ^{4n+2}.

A filling slope p/q (coprime, q ≥ 0, meridian ∞ = 1/0) is substituted as
μ = x^{−q}, λ = x^{p}; the cleared one-variable polynomial controls the
nonabelian character count.  ``tameness`` and ``reducedness`` certify the
two hypotheses under which the point count equals the skein dimension:
finite generation (slope away from the excluded lines) and per-slope
reducedness (the specialization is squarefree after stripping its x = ±1
root multiplicities).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exactalg import (
    UniPoly, LaurentPoly, LaurentPoly2,
    cheb_T, is_squarefree, multiplicity_at,
)

# ---------------------------------------------------------------------------
# slopes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Slope:
    """Filling slope p/q in lowest terms.

    Canonical form: gcd(|p|, q) = 1, q ≥ 0, and q = 0 forces p = 1 (the
    meridian ∞); the zero slope is (0, 1).
    """

    p: int
    q: int

    def __post_init__(self):
        if self.q < 0:
            raise ValueError("canonical slope wants q >= 0")
        if self.q == 0 and self.p != 1:
            raise ValueError("infinite slope is represented as 1/0")
        if gcd(abs(self.p), self.q) != 1:
            raise ValueError("slope must be in lowest terms")

    @staticmethod
    def of(p: int, q: int) -> "Slope":
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a slope")
        if q < 0:
            p, q = -p, -q
        if q == 0:
            return Slope(1, 0)
        g = gcd(abs(p), q)
        return Slope(p // g, q // g)

    @staticmethod
    def parse(text: str) -> "Slope":
        t = text.strip().lower()
        if t in ("inf", "infinity", "1/0"):
            return Slope(1, 0)
        if "/" in t:
            ps, qs = t.split("/", 1)
            return Slope.of(int(ps), int(qs))
        return Slope.of(int(t), 1)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def is_zero(self) -> bool:
        return self.p == 0

    def __str__(self):
        return "inf" if self.q == 0 else f"{self.p}/{self.q}"


# ---------------------------------------------------------------------------
# knot families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KnotFamily:
    """Either the figure-eight knot or a (2, 2n+1) torus knot."""

    kind: str           # "fig8" | "torus"
    n: int | None = None

    def __post_init__(self):
        if self.kind == "fig8":
            if self.n is not None:
                raise ValueError("fig8 takes no parameter")
        elif self.kind == "torus":
            if self.n is None or self.n in (0, -1):
                raise ValueError("torus family wants n with |2n+1| >= 3")
        else:
            raise ValueError(f"unknown knot family {self.kind!r}")

    @staticmethod
    def fig8() -> "KnotFamily":
        return KnotFamily("fig8")

    @staticmethod
    def torus(n: int) -> "KnotFamily":
        return KnotFamily("torus", n)

    @property
    def is_fig8(self) -> bool:
        return self.kind == "fig8"

    def __str__(self):
        return "fig8" if self.is_fig8 else f"torus(2,{2 * self.n + 1})"


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

FINITELY_GENERATED = "FinitelyGenerated"
EXCLUDED = "Excluded"
REDUCED = "Reduced"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    """Certified status plus human-readable evidence."""

    status: str
    evidence: str

    def __post_init__(self):
        if not self.evidence:
            raise ValueError("a verdict must carry evidence")


# ---------------------------------------------------------------------------
# boundary polynomials
# ---------------------------------------------------------------------------

_FIG8_TERMS = (
    (-1, 0, 1),   # −λ
    (1, 2, 1),    # λμ²
    (1, 4, 0),    # μ⁴
    (2, 4, 1),    # 2λμ⁴
    (1, 4, 2),    # λ²μ⁴
    (1, 6, 1),    # λμ⁶
    (-1, 8, 1),   # −λμ⁸
)


def a_polynomial(K: KnotFamily) -> LaurentPoly2:
    """Boundary polynomial in (μ, λ) exponents; exponent keys are (μ, λ)."""
    if K.is_fig8:
        return LaurentPoly2.from_term_list(
            (c, mu, lam) for c, mu, lam in _FIG8_TERMS)
    return LaurentPoly2({(0, 0): 1, (4 * K.n + 2, 1): 1})


def specialize(K: KnotFamily, s: Slope) -> UniPoly:
    """Slope substitution μ = x^{−q}, λ = x^{p}, cleared to a polynomial.

    The pole is cleared by the minimal power of x, so the constant term is
    nonzero; no sign or content normalization is applied.
    """
    laurent = a_polynomial(K).substitute_powers(-s.q, s.p)
    if laurent.is_zero():
        raise ValueError("specialization vanished identically")
    poly, _ = laurent.to_unipoly()
    return poly


def strip_unit_roots(P: UniPoly):
    """Remove the x = ±1 root multiplicities: returns (stripped, m₁, m₋₁)."""
    m1 = multiplicity_at(P, 1)
    mm1 = multiplicity_at(P, -1)
    for _ in range(m1):
        P = P.exact_div(UniPoly.from_coeffs([-1, 1]))
    for _ in range(mm1):
        P = P.exact_div(UniPoly.from_coeffs([1, 1]))
    return P, m1, mm1


# ---------------------------------------------------------------------------
# hypothesis certificates
# ---------------------------------------------------------------------------

def excluded_slopes(K: KnotFamily) -> tuple:
    """Slopes on which finite generation fails (the excluded lines)."""
    if K.is_fig8:
        return (Slope.of(0, 1), Slope.of(4, 1), Slope.of(-4, 1))
    return (Slope.of(0, 1), Slope.of(4 * K.n + 2, 1))


def tameness(K: KnotFamily, s: Slope) -> Verdict:
    """FinitelyGenerated away from the excluded slopes, Excluded on them."""
    if s in excluded_slopes(K):
        return Verdict(EXCLUDED, f"slope {s} lies on an excluded line of {K}")
    return Verdict(
        FINITELY_GENERATED,
        f"slope {s} avoids the excluded lines {{{', '.join(map(str, excluded_slopes(K)))}}}",
    )


def reducedness(K: KnotFamily, s: Slope) -> Verdict:
    """Per-slope reducedness certificate.

    Torus knots: reduced when p is not divisible by 4, or when it is but
    gcd(p, 2n+1) = 1; otherwise the certificate is inconclusive.  Fig-eight:
    the specialization, with its x = ±1 multiplicities stripped, must be
    squarefree (simple roots give distinct transverse characters); a repeated
    root leaves the verdict Unknown, never NotReduced.
    """
    if s.is_zero:
        raise ValueError("excluded slope")
    if not K.is_fig8:
        if s.p % 4 != 0:
            return Verdict(REDUCED, f"p = {s.p} is not divisible by 4")
        g = gcd(abs(s.p), abs(2 * K.n + 1))
        if g == 1:
            return Verdict(
                REDUCED, f"4 | p and gcd({abs(s.p)}, {abs(2 * K.n + 1)}) = 1")
        return Verdict(
            UNKNOWN,
            f"4 | p and gcd({abs(s.p)}, {abs(2 * K.n + 1)}) = {g}; "
            "certificate inconclusive",
        )
    P = specialize(K, s)
    stripped, m1, mm1 = strip_unit_roots(P)
    if stripped.degree <= 0:
        return Verdict(REDUCED, "specialization is supported on x = ±1 only")
    if is_squarefree(stripped):
        return Verdict(
            REDUCED,
            f"stripped specialization (deg {stripped.degree}, "
            f"multiplicities {m1} at x=1, {mm1} at x=-1) is squarefree",
        )
    return Verdict(
        UNKNOWN,
        f"stripped specialization has repeated roots "
        f"(multiplicities {m1} at x=1, {mm1} at x=-1); certificate inconclusive",
    )


# ---------------------------------------------------------------------------
# the 1/q root polynomial
# ---------------------------------------------------------------------------

def rootsp1_poly(q: int) -> UniPoly:
    """Closed form for the fig-eight 1/q specialization with (x+1)² removed:

        x^{4q−1} − (x^{4q} + x^{2q} + 1) · ((x^{2q} − 1)/(x + 1))²,

    cleared to a polynomial without sign or content normalization (leading
    coefficient −1, constant term −1).
    """
    if q == 0:
        raise ValueError("rootsp1_poly wants q != 0")
    num = LaurentPoly({2 * q: 1, 0: -1})
    ratio = num.exact_div(LaurentPoly({1: 1, 0: 1}))
    lau = (LaurentPoly.x_pow(4 * q - 1)
           - (LaurentPoly({4 * q: 1, 2 * q: 1, 0: 1}) * ratio * ratio))
    poly, _ = lau.to_unipoly()
    return poly


def proportional(a: UniPoly, b: UniPoly) -> bool:
    """Equality up to a nonzero rational scalar."""
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    return a * b.leading() == b * a.leading()


# ---------------------------------------------------------------------------
# longitude consistency (torus family)
# ---------------------------------------------------------------------------

def torus_longitude_trace(n: int) -> UniPoly:
    """Longitude trace as a polynomial in the meridian trace: −T_{4n+2}."""
    return -cheb_T(4 * n + 2)
