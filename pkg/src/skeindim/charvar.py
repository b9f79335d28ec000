"""Character counts, enumeration, trace evaluation, and basis certificates.

For a Dehn filling M = K(p/q) of a supported knot the SL₂(ℂ) character
set X(M) splits into abelian characters (meridian eigenvalue μ a p-th
root of unity, taken modulo inversion) and nonabelian ones.  This module
counts both parts in closed form, recounts them by independent root
enumeration, materializes every character with certified ball
coordinates, constructs the trace-monomial bases of the coordinate ring,
and certifies each basis by bounding the evaluation-matrix determinant
away from zero.

Figure-eight fillings.  Nonabelian characters correspond to inverse
pairs {x, x⁻¹} of roots of the specialized A-polynomial off x = ±1,
with μ = x^{−q}, λ = x^p; the cube-trace coordinate τ is recovered from
τ·(λ + μ²) = (μ² − 1)(1 − λ).  When 4 | p the pair over x = ±i
degenerates and carries two characters with τ = (5 ± √5)/2 instead.

Torus-knot (2, 2n+1) fillings.  Nonabelian characters are pairs (ζ, t)
with ζ^{|2n+1|} = −1, Im ζ > 0, and T_k(t) = 2·(−1)^q for
k = |p − (4n+2)q|, minus finitely many reducible parameter points
(present only when 4 | p; their count is gcd(|2n+1|, |p|) − 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import gmpy2

from .exactalg import (
    ComplexBall,
    UniPoly,
    distinct_roots_excluding,
    is_squarefree,
    isolate_roots,
    squarefree_part,
)
from .knots import (
    EXCLUDED,
    REDUCED,
    KnotFamily,
    Slope,
    Verdict,
    excluded_slopes,
    reducedness,
    specialize,
    strip_unit_roots,
    tameness,
)

UNAVAILABLE = "Unavailable"

_DET_THRESHOLD = gmpy2.mpq(1, 10**6)
_PRECISION_CAP = 1024

_X2P1 = UniPoly.from_coeffs([1, 0, 1])  # x² + 1, the orbit {i, −i}


# ---------------------------------------------------------------------------
# closed-form counts
# ---------------------------------------------------------------------------

class FormulaCount(int):
    """Exact count that remembers whether the counting hypotheses held.

    Behaves as a plain integer.  ``admissible`` is False when the closed
    formula was evaluated outside its certified regime; the value is
    still the formula's output and ``reason`` names the failed
    hypothesis.
    """

    admissible: bool
    reason: str

    def __new__(cls, value: int, admissible: bool = True, reason: str = ""):
        self = super().__new__(cls, value)
        self.admissible = admissible
        self.reason = reason
        return self

    def __repr__(self):
        if self.admissible:
            return f"FormulaCount({int(self)})"
        return f"FormulaCount({int(self)}, admissible=False, reason={self.reason!r})"


def count_abelian(s: Slope) -> int:
    """1 + ⌊|p|/2⌋ eigenvalue classes {μ, μ⁻¹} with μ^p = 1."""
    if s.is_zero:
        raise ValueError("excluded slope")
    return 1 + abs(s.p) // 2


def _arc_count(K: KnotFamily) -> int:
    # one ζ per arc of the (2, 2n+1) diagram: (|2n+1| − 1)/2 of them
    return (abs(2 * K.n + 1) - 1) // 2


def _torus_k(K: KnotFamily, s: Slope) -> int:
    return abs(s.p - (4 * K.n + 2) * s.q)


def nonabelian_formula(K: KnotFamily, s: Slope) -> FormulaCount:
    """Closed-form nonabelian character count with an admissibility flag.

    Figure-eight: (|4q + p| + |4q − p|)/2 − [p odd].  Torus knot:
    τ·arcs with τ = (k − [p odd])/2, k = |p − (4n+2)q|.
    """
    if s.is_zero:
        raise ValueError("excluded slope")
    if K.is_fig8:
        value = (abs(4 * s.q + s.p) + abs(4 * s.q - s.p)) // 2 - (s.p % 2)
        if s in excluded_slopes(K):
            return FormulaCount(value, False, f"excluded slope {s}")
        certified, why = _fig8_genericity(K, s)
        if not certified:
            return FormulaCount(value, False, why)
        return FormulaCount(value)
    k = _torus_k(K, s)
    tau = (k - s.p % 2) // 2
    value = tau * _arc_count(K)
    if s in excluded_slopes(K):
        return FormulaCount(value, False, f"excluded slope {s}")
    g = gcd(abs(s.p), abs(2 * K.n + 1))
    if s.p % 4 == 0 and g != 1:
        return FormulaCount(
            value, False,
            f"4 | p and gcd(|p|, |2n+1|) = {g}: {g - 1} parameter points are reducible",
        )
    return FormulaCount(value)


def nonabelian_oracle(K: KnotFamily, s: Slope):
    """Independent recount by root enumeration instead of the formula.

    Figure-eight: inverse-pair orbits of the specialized A-polynomial,
    ``Unavailable`` when 4 | p (the x = ±i correction applies) or when
    the stripped specialization is not squarefree.  Torus knot: arcs
    times the number of distinct t with T_k(t) = 2·(−1)^q, t ≠ ±2,
    enumerated exactly through angle folding.
    """
    if s.is_zero:
        raise ValueError("excluded slope")
    if K.is_fig8:
        if s.p % 4 == 0:
            return UNAVAILABLE
        stripped, _, _ = strip_unit_roots(specialize(K, s))
        if not is_squarefree(stripped):
            return UNAVAILABLE
        return distinct_roots_excluding(specialize(K, s), (1, -1)) // 2
    k = _torus_k(K, s)
    if k == 0:
        return 0
    return _arc_count(K) * len(_meridian_angles(s, k))


def _meridian_angles(s: Slope, k: int) -> list:
    """Folded numerators r with 0 < r < k: t = 2cos(πr/k) solves T_k(t) = 2(−1)^q."""
    rs = set()
    for j in range(k):
        r = (s.q + 2 * j) % (2 * k)
        rs.add(min(r, 2 * k - r))
    rs.discard(0)
    rs.discard(k)
    return sorted(rs)


# ---------------------------------------------------------------------------
# fig8 specialization split at x = ±i
# ---------------------------------------------------------------------------

def _x2p1_multiplicity(P: UniPoly) -> int:
    m = 0
    while True:
        q, r = P.divmod(_X2P1)
        if not r.is_zero():
            return m
        P, m = q, m + 1


def _fig8_nonab_data(K: KnotFamily, s: Slope):
    """(generic, special, certified, why) for the stripped specialization.

    ``generic`` is squarefree and carries the ordinary inverse-pair
    orbits; ``special`` marks the presence of the degenerate x = ±i
    orbit (4 | p), whose two τ = (5 ± √5)/2 characters are emitted
    separately.  ``certified`` records whether the count formula's
    genericity hypothesis was verified exactly.
    """
    stripped, _, _ = strip_unit_roots(specialize(K, s))
    if s.p % 4 != 0:
        if is_squarefree(stripped):
            return stripped.primitive(), False, True, ""
        return (
            squarefree_part(stripped), False, False,
            "stripped specialization is not squarefree",
        )
    sf = squarefree_part(stripped)
    quotient, remainder = sf.divmod(_X2P1)
    if not remainder.is_zero():
        raise ValueError("count mismatch: 4 | p but x = ±i is not a root")
    mult = _x2p1_multiplicity(stripped)
    certified = mult == 2 and is_squarefree(
        stripped.exact_div(_X2P1).exact_div(_X2P1)
    )
    why = "" if certified else (
        f"x = ±i multiplicity {mult} in the stripped specialization (expected "
        "an exact double pair with squarefree cofactor)"
    )
    return quotient, True, certified, why


def _fig8_genericity(K: KnotFamily, s: Slope):
    _, _, certified, why = _fig8_nonab_data(K, s)
    return certified, why


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AbelianFig8Char:
    """Abelian character: μ = e^{2πi·root_index/|p|}, λ = 1."""

    family: KnotFamily
    slope: Slope
    mu: ComplexBall
    root_index: int


@dataclass(frozen=True, eq=False)
class AbelianTorusChar:
    """Abelian character of a torus-knot filling, same μ bookkeeping."""

    family: KnotFamily
    slope: Slope
    mu: ComplexBall
    root_index: int


@dataclass(frozen=True, eq=False)
class Fig8NonAbChar:
    """Nonabelian orbit {x, x⁻¹} with τ·(λ + μ²) = (μ² − 1)(1 − λ).

    ``special`` marks the two degenerate characters over x = ±i, where
    τ takes the values (5 ± √5)/2 instead of the quotient above.
    """

    family: KnotFamily
    slope: Slope
    x: ComplexBall
    tau: ComplexBall
    special: bool


@dataclass(frozen=True, eq=False)
class TorusNonAbChar:
    """Pair (ζ, t): ζ = e^{iπ(2·zeta_index+1)/|2n+1|}, t = 2cos(π·angle)."""

    family: KnotFamily
    slope: Slope
    zeta_index: int
    angle: Fraction
    t_m: ComplexBall


def is_abelian(chi) -> bool:
    return isinstance(chi, (AbelianFig8Char, AbelianTorusChar))


class _Inconclusive(Exception):
    """Ball arithmetic too coarse to certify; retry at higher precision."""


def _abelian_characters(K: KnotFamily, s: Slope, precision: int) -> list:
    cls = AbelianFig8Char if K.is_fig8 else AbelianTorusChar
    order = abs(s.p)
    return [
        cls(K, s, ComplexBall.unit_root(j, order, precision), j)
        for j in range(order // 2 + 1)
    ]


def _fold(a: Fraction) -> Fraction:
    return min(a, 2 - a)


def _torus_nonabelian(K: KnotFamily, s: Slope, precision: int) -> list:
    k = _torus_k(K, s)
    if k == 0:
        return []
    chars = []
    angles = _meridian_angles(s, k)
    for a in range(_arc_count(K)):
        shift = Fraction(K.n * (2 * a + 1), 2 * K.n + 1)
        reducible = {
            _fold((Fraction(1, 2) + shift) % 2),
            _fold((Fraction(1, 2) - shift) % 2),
        }
        for r in angles:
            angle = Fraction(r, k)
            if angle in reducible:
                continue
            chars.append(
                TorusNonAbChar(K, s, a, angle, ComplexBall.two_cos_pi(angle, precision))
            )
    return chars


def _orbit_representative(a: ComplexBall, b: ComplexBall) -> ComplexBall:
    # prefer |x| > 1, then Im x > 0; anything else is under-resolved
    if a.abs_lower() > 1:
        return a
    if b.abs_lower() > 1:
        return b
    if a.mid.imag > a.rad:
        return a
    if b.mid.imag > b.rad:
        return b
    raise _Inconclusive


def _pair_orbits(balls: list) -> list:
    """One representative per inverse pair {x, x⁻¹}, certified unique."""
    count = len(balls)
    partner = [None] * count
    for i in range(count):
        hits = [
            j for j in range(count)
            if j != i and (balls[i] * balls[j] - 1).contains_zero()
        ]
        if len(hits) != 1:
            raise _Inconclusive
        partner[i] = hits[0]
    reps = []
    seen = set()
    for i in range(count):
        if i in seen:
            continue
        j = partner[i]
        if partner[j] != i:
            raise _Inconclusive
        seen.update((i, j))
        reps.append(_orbit_representative(balls[i], balls[j]))
    return reps


def _recover_tau(x: ComplexBall, s: Slope) -> ComplexBall:
    musq = x ** (-2 * s.q)
    lam = x ** s.p
    den = lam + musq
    if den.contains_zero():
        raise _Inconclusive
    return (musq - 1) * (1 - lam) / den


def _fig8_generic_characters(K, s, generic, work, precision) -> list:
    reps = _pair_orbits(isolate_roots(generic, precision=work))
    reps.sort(key=lambda b: (b.mid.real, b.mid.imag))
    return [
        Fig8NonAbChar(
            K, s, rep.at_precision(precision),
            _recover_tau(rep, s).at_precision(precision), False,
        )
        for rep in reps
    ]


def _fig8_special_characters(K, s, precision) -> list:
    with gmpy2.context(precision=precision):
        i_unit = gmpy2.mpc(0, 1)
    x = ComplexBall.exact_mpc(i_unit, precision)
    root5 = ComplexBall.real_sqrt(5, precision)
    return [
        Fig8NonAbChar(K, s, x, (5 - root5) * Fraction(1, 2), True),
        Fig8NonAbChar(K, s, x, (5 + root5) * Fraction(1, 2), True),
    ]


def _fig8_nonabelian(K: KnotFamily, s: Slope, precision: int) -> list:
    generic, special, _, _ = _fig8_nonab_data(K, s)
    work = max(precision, 128)
    while True:
        try:
            chars = _fig8_generic_characters(K, s, generic, work, precision)
            break
        except _Inconclusive:
            if work >= _PRECISION_CAP:
                raise RuntimeError(
                    f"cannot certify the nonabelian characters of {K} at slope "
                    f"{s} even at {_PRECISION_CAP}-bit precision"
                )
            work *= 2
    if special:
        chars.extend(_fig8_special_characters(K, s, precision))
    return chars


def enumerate_characters(K: KnotFamily, s: Slope, precision: int = 128) -> list:
    """Every character of the filled manifold, ball coordinates included.

    Abelian characters come first (root index ascending), then the
    nonabelian ones in a deterministic order.  Raises "count mismatch"
    when the enumeration disagrees with an admissible count formula.
    """
    if s.is_zero:
        raise ValueError("excluded slope")
    chars = _abelian_characters(K, s, precision)
    if K.is_fig8:
        nonab = _fig8_nonabelian(K, s, precision)
    else:
        nonab = _torus_nonabelian(K, s, precision)
    formula = nonabelian_formula(K, s)
    if formula.admissible and len(nonab) != int(formula):
        raise ValueError(
            f"count mismatch: enumerated {len(nonab)} nonabelian characters "
            f"of {K} at slope {s}, the formula gives {int(formula)}"
        )
    return chars + nonab


# ---------------------------------------------------------------------------
# bases
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TraceMonomial:
    """Product t_m^m · t_b^b · t_{s/u}^su · t_{ab⁻¹}^ab1, exponents ≥ 0."""

    m: int = 0
    b: int = 0
    su: int = 0
    ab1: int = 0
    s: int | None = None
    u: int | None = None

    def __post_init__(self):
        if min(self.m, self.b, self.su, self.ab1) < 0:
            raise ValueError("monomial exponents must be nonnegative")

    def __str__(self):
        parts = []
        for name, e in (
            ("t_m", self.m),
            ("t_b", self.b),
            (f"t_{{{self.s}/{self.u}}}", self.su),
            ("t_{ab^-1}", self.ab1),
        ):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return " ".join(parts) if parts else "1"


@dataclass(frozen=True)
class Basis:
    """Ordered trace monomials spanning the coordinate ring."""

    monomials: tuple

    @property
    def cardinality(self) -> int:
        return len(self.monomials)


@dataclass(frozen=True)
class Unsupported:
    """No certified basis construction applies; ``reason`` says why."""

    reason: str


def _dual_curve(s: Slope) -> tuple:
    """(s, u) with p·u − q·s = 1 and the smallest u ≥ 1."""
    if s.q == 0:
        return (0, 1)
    u = next(u for u in range(1, s.q + 1) if (s.p * u - 1) % s.q == 0)
    return ((s.p * u - 1) // s.q, u)


def basis(K: KnotFamily, s: Slope):
    """Trace-monomial basis of the coordinate ring, or Unsupported.

    Torus knots support only p = ±1 (t_m/t_b mixed monomials); the
    figure-eight uses powers of one surgery-dual curve trace, plus four
    t_{ab⁻¹} monomials when 4 | p.  Ordering is graded lexicographic.
    """
    if K.is_fig8:
        if s in excluded_slopes(K):
            return Unsupported(f"excluded slope {s}")
        ds, du = _dual_curve(s)
        card = count_abelian(s) + int(nonabelian_formula(K, s))
        if s.p % 4 != 0:
            return Basis(tuple(
                TraceMonomial(su=j, s=ds, u=du) for j in range(card)
            ))
        monos = [TraceMonomial(su=j, s=ds, u=du) for j in range(card - 4)]
        monos += [
            TraceMonomial(ab1=1, s=ds, u=du),
            TraceMonomial(ab1=2, s=ds, u=du),
            TraceMonomial(ab1=1, su=1, s=ds, u=du),
            TraceMonomial(ab1=2, su=1, s=ds, u=du),
        ]
        monos.sort(key=lambda t: (t.su + t.ab1, t.su, t.ab1))
        return Basis(tuple(monos))
    if abs(s.p) != 1:
        return Unsupported(
            f"no certified monomial basis for torus-knot slope {s} (p must be ±1)"
        )
    tau = (_torus_k(K, s) - 1) // 2
    arcs = _arc_count(K)
    monos = [TraceMonomial(m=i, b=j) for i in range(tau) for j in range(arcs)]
    monos.append(TraceMonomial(m=tau))
    monos.sort(key=lambda t: (t.m + t.b, t.m, t.b))
    return Basis(tuple(monos))


# ---------------------------------------------------------------------------
# trace evaluation
# ---------------------------------------------------------------------------

def eval_trace(mono: TraceMonomial, chi) -> ComplexBall:
    """Ball value of a trace monomial at a character.

    Generator rules: t_m is μ + μ⁻¹ on abelian characters, the stored t
    on torus nonabelian ones, x^{−q} + x^{q} on figure-eight orbits;
    t_b is ζ + ζ⁻¹ (torus nonabelian) or μ² + μ⁻² (torus abelian);
    t_{s/u} is μ^s + μ^{−s} (abelian) or x + x⁻¹ (figure-eight orbits,
    since μ^s λ^u = x^{pu−qs} = x); t_{ab⁻¹} is 2 − τ on figure-eight
    orbits and 2 on abelian characters.
    """
    if isinstance(chi, (AbelianFig8Char, AbelianTorusChar)):
        fig8 = isinstance(chi, AbelianFig8Char)
        prec = chi.mu.prec
        val = ComplexBall.from_int(1, prec)
        if mono.b:
            if fig8:
                raise ValueError("generator t_b belongs to torus-knot fillings")
            val = val * (chi.mu ** 2 + chi.mu ** -2) ** mono.b
        if mono.su or mono.ab1:
            if not fig8:
                raise ValueError(
                    "generators t_{s/u}, t_{ab^-1} belong to figure-eight fillings"
                )
        if mono.m:
            val = val * (chi.mu + chi.mu ** -1) ** mono.m
        if mono.su:
            if mono.s is None or mono.u is None:
                raise ValueError("monomial lacks its (s, u) curve data")
            val = val * (chi.mu ** mono.s + chi.mu ** -mono.s) ** mono.su
        if mono.ab1:
            val = val * ComplexBall.from_int(2, prec) ** mono.ab1
        return val
    if isinstance(chi, Fig8NonAbChar):
        if mono.b:
            raise ValueError("generator t_b belongs to torus-knot fillings")
        prec = chi.x.prec
        val = ComplexBall.from_int(1, prec)
        if mono.m:
            q = chi.slope.q
            val = val * (chi.x ** -q + chi.x ** q) ** mono.m
        if mono.su:
            val = val * (chi.x + chi.x ** -1) ** mono.su
        if mono.ab1:
            val = val * (2 - chi.tau) ** mono.ab1
        return val
    if isinstance(chi, TorusNonAbChar):
        if mono.su or mono.ab1:
            raise ValueError(
                "generators t_{s/u}, t_{ab^-1} belong to figure-eight fillings"
            )
        prec = chi.t_m.prec
        val = ComplexBall.from_int(1, prec)
        if mono.m:
            val = val * chi.t_m ** mono.m
        if mono.b:
            order = abs(2 * chi.family.n + 1)
            beta = ComplexBall.two_cos_pi(
                Fraction(2 * chi.zeta_index + 1, order), prec
            )
            val = val * beta ** mono.b
        return val
    raise TypeError(f"not a character: {chi!r}")


# ---------------------------------------------------------------------------
# basis verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the evaluation-matrix determinant certificate."""

    passed: bool
    square: bool
    rows: int
    cols: int
    precision_used: int
    method: str
    det_lower: object = None   # mpfr lower bound for |det|
    det_upper: object = None   # mpfr upper bound
    note: str = ""


def _vandermonde_det(values: list, prec: int) -> ComplexBall:
    det = ComplexBall.from_int(1, prec)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            det = det * (values[j] - values[i])
    return det


def _torus_product_det(K, chars, prec) -> ComplexBall:
    # |det| factors as R(2) · V(t)^arcs · V(β)^τ when every (ζ, t) pair
    # is present and the only abelian character is the trivial one
    ts = [c.t_m for c in chars if isinstance(c, TorusNonAbChar) and c.zeta_index == 0]
    arcs = _arc_count(K)
    order = abs(2 * K.n + 1)
    betas = [
        ComplexBall.two_cos_pi(Fraction(2 * a + 1, order), prec)
        for a in range(arcs)
    ]
    det = ComplexBall.from_int(1, prec)
    for t in ts:
        det = det * (2 - t)
    for i in range(len(ts)):
        for j in range(i + 1, len(ts)):
            det = det * (ts[j] - ts[i]) ** arcs
    for i in range(arcs):
        for j in range(i + 1, arcs):
            det = det * (betas[j] - betas[i]) ** len(ts)
    return det


def _stalled_det_bound(mat, col, det, prec) -> ComplexBall:
    # every candidate pivot ball contains zero: bound the remaining block
    # by expansion along its first column (ε per entry, Hadamard cofactors)
    n = len(mat)
    m = n - col
    with gmpy2.context(precision=64, round=gmpy2.RoundUp):
        eps = gmpy2.mpfr(0)
        for r in range(col, n):
            eps = max(eps, gmpy2.mpfr(mat[r][col].abs_upper()))
        norms = []
        for r in range(col, n):
            sq = gmpy2.mpfr(0)
            for c in range(col + 1, n):
                up = gmpy2.mpfr(mat[r][c].abs_upper())
                sq += up * up
            norms.append(gmpy2.sqrt(sq))
        norms.sort(reverse=True)
        bound = gmpy2.mpfr(m) * eps * gmpy2.mpfr(det.abs_upper())
        for v in norms[: m - 1]:
            bound *= v
    return ComplexBall(gmpy2.mpc(0), bound, prec)


def _elimination_det(rows: list, prec: int) -> ComplexBall:
    """Determinant ball by elimination with certified pivots.

    When no remaining pivot can be certified nonzero the result is a
    zero-centered ball whose radius still bounds |det| from above.
    """
    n = len(rows)
    mat = [list(r) for r in rows]
    det = ComplexBall.from_int(1, prec)
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: mat[r][col].abs_lower())
        if not mat[pivot][col].abs_lower() > 0:
            return _stalled_det_bound(mat, col, det, prec)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]  # sign is irrelevant here
        det = det * mat[col][col]
        inv = mat[col][col].inverse()
        for r in range(col + 1, n):
            factor = mat[r][col] * inv
            mat[r] = [mat[r][c] - factor * mat[col][c] for c in range(n)]
    return det


def _det_ball(K, s, chars, b: Basis, prec: int):
    if not K.is_fig8:
        return _torus_product_det(K, chars, prec), "product"
    if s.p % 4 != 0:
        ds, du = _dual_curve(s)
        gen = TraceMonomial(su=1, s=ds, u=du)
        return _vandermonde_det([eval_trace(gen, c) for c in chars], prec), "vandermonde"
    rows = [[eval_trace(mono, c) for mono in b.monomials] for c in chars]
    return _elimination_det(rows, prec), "elimination"


def verify_basis(K: KnotFamily, s: Slope, precision: int = 128) -> VerificationReport:
    """Certify the basis by bounding |det| of the evaluation matrix.

    Passes when the ball lower bound exceeds 10⁻⁶; the working precision
    doubles (up to 1024 bits) while the determinant ball straddles the
    threshold.
    """
    b = basis(K, s)
    if isinstance(b, Unsupported):
        raise ValueError(f"basis unsupported: {b.reason}")
    prec = max(precision, 128)
    while True:
        chars = enumerate_characters(K, s, precision=prec)
        if len(chars) != b.cardinality:
            return VerificationReport(
                False, False, len(chars), b.cardinality, prec, "none",
                note=f"evaluation matrix is {len(chars)}×{b.cardinality}, not square",
            )
        det, method = _det_ball(K, s, chars, b, prec)
        lo, up = det.abs_lower(), det.abs_upper()
        if lo > _DET_THRESHOLD:
            return VerificationReport(
                True, True, len(chars), b.cardinality, prec, method,
                det_lower=lo, det_upper=up,
            )
        if up < _DET_THRESHOLD:
            return VerificationReport(
                False, True, len(chars), b.cardinality, prec, method,
                det_lower=lo, det_upper=up,
                note="determinant certified below the threshold",
            )
        if prec >= _PRECISION_CAP:
            return VerificationReport(
                False, True, len(chars), b.cardinality, prec, method,
                det_lower=lo, det_upper=up,
                note=(
                    "determinant ball straddles the threshold at "
                    f"{_PRECISION_CAP}-bit precision"
                ),
            )
        prec *= 2


# ---------------------------------------------------------------------------
# assembled report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CountBreakdown:
    """Abelian/nonabelian split of the character count."""

    abelian: int
    nonabelian_formula: int
    nonabelian_oracle: object   # int, or the UNAVAILABLE marker
    total_formula: int

    def __post_init__(self):
        if self.abelian < 1:
            raise ValueError("at least the trivial character exists")
        if self.total_formula != self.abelian + self.nonabelian_formula:
            raise ValueError("inconsistent totals")


@dataclass(frozen=True)
class Dimension:
    """Dimension claim: exact value, lower bound, or not determined."""

    kind: str                 # "exact" | "at least" | "not determined"
    value: int | None = None


@dataclass(frozen=True)
class DimensionReport:
    """Everything the pipeline can say about one filling."""

    family: KnotFamily
    slope: Slope
    tame: Verdict
    reduced: Verdict | None
    counts: CountBreakdown | None
    dimension: Dimension
    basis: "Basis | Unsupported"
    verification: VerificationReport | None
    notes: tuple


def dimension_report(K: KnotFamily, s: Slope, precision: int = 128) -> DimensionReport:
    """Assemble counts, certificates, and the dimension claim for K(p/q).

    The skein-module dimension equals the character count exactly when
    the filling is tame and the coordinate ring is certified reduced;
    with reducedness unknown the count is reported as a lower bound.
    """
    notes = []
    tame = tameness(K, s)
    if tame.status == EXCLUDED:
        notes.append("excluded slope; no dimension claim")
        return DimensionReport(
            K, s, tame, None, None, Dimension("not determined"),
            basis(K, s), None, tuple(notes),
        )
    red = reducedness(K, s)
    formula = nonabelian_formula(K, s)
    oracle = nonabelian_oracle(K, s)
    counts = CountBreakdown(
        count_abelian(s), formula, oracle, count_abelian(s) + int(formula)
    )
    if not formula.admissible:
        notes.append(f"count formula outside its certified regime: {formula.reason}")
    if oracle == UNAVAILABLE:
        notes.append("independent recount unavailable for this slope")
    elif oracle != int(formula):
        notes.append(f"recount disagrees with the formula: {oracle} vs {int(formula)}")
    if not formula.admissible:
        dim = Dimension("not determined")
    elif red.status == REDUCED:
        dim = Dimension("exact", counts.total_formula)
    else:
        dim = Dimension("at least", counts.total_formula)
        notes.append(f"reducedness not certified: {red.evidence}")
    b = basis(K, s)
    verification = None
    if isinstance(b, Unsupported):
        notes.append(f"verification skipped: {b.reason}")
    else:
        try:
            verification = verify_basis(K, s, precision)
        except (ValueError, RuntimeError) as exc:
            notes.append(f"verification skipped: {exc}")
        if verification is not None:
            if verification.passed:
                notes.append("verification passed: evaluation matrix certified nonsingular")
            else:
                notes.append(
                    "verification failed: "
                    + (verification.note or "determinant not certified above the threshold")
                )
    return DimensionReport(K, s, tame, red, counts, dim, b, verification, tuple(notes))


# ---------------------------------------------------------------------------
# smoothness certificate
# ---------------------------------------------------------------------------

def fig8_character_equation(tau, y) -> Fraction:
    """f(τ, y) = τ² + (3 − y)(1 − τ) with y = μ² + μ⁻², exactly."""
    tau, y = Fraction(tau), Fraction(y)
    return tau * tau + (3 - y) * (1 - tau)


def fig8_smoothness_witness() -> bool:
    """Certify that the nonabelian character curve f = 0 is smooth (μ ≠ 0).

    Writing f = τ² − (3−y)τ + (3−y) over ℚ[y], the τ-resultant of f and
    ∂f/∂τ = 2τ − (3−y) is computed exactly as a·e² − b·d·e + c·d².  The
    μ-derivative vanishes only when τ = 1 or μ⁴ = 1 (y = ±2): f(1, y) ≡ 1,
    and the resultant is nonzero at y = ±2, so the three polynomials
    share no zero.
    """
    y = UniPoly.x_power(1)
    three_minus_y = UniPoly.constant(3) - y
    a, b, c = UniPoly.constant(1), -three_minus_y, three_minus_y
    d, e = UniPoly.constant(2), -three_minus_y
    resultant = a * e * e - b * d * e + c * d * d
    if resultant.is_zero():
        return False
    at_tau_one = a + b + c    # f(1, y) as a polynomial in y
    return (
        at_tau_one == UniPoly.constant(1)
        and resultant(Fraction(2)) != 0
        and resultant(Fraction(-2)) != 0
    )
