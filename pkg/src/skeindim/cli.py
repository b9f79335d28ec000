"""Deterministic command-line front end for the dimension pipeline.

Subcommands: ``dim`` (one filling's full report), ``scan`` (slope ranges
with a formula/recount agreement table), ``basis`` and ``characters``
(the spanning monomials and the isolated characters of one filling),
``verify`` (the evaluation-matrix certificate alone), and ``rt lens``
(exact cyclotomic lens-space invariants with optional integrality and
congruence checks).

Exit status 0 covers every successfully produced report, including
excluded slopes and Unknown verdicts; 2 is a usage or precondition
error; 3 is a failed internal cross-check whose agreement is otherwise
guaranteed (formula versus independent recount).  Output, text or
``--json``, is byte-identical across runs for identical inputs: scan
rows are sorted by (n, p, q), JSON keys keep a fixed order, and ball
values are printed as decimal midpoint and radius strings.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from math import gcd

from .charvar import (
    UNAVAILABLE, Unsupported,
    basis, count_abelian, dimension_report, enumerate_characters,
    is_abelian, nonabelian_formula, nonabelian_oracle, verify_basis,
)
from .knots import EXCLUDED, KnotFamily, Slope, tameness
from .rt import CycloField, murakami_check, rt_lens


class _UsageError(Exception):
    """Bad arguments or a violated precondition; exit status 2."""


class _CheckFailure(Exception):
    """A cross-check that is guaranteed to agree did not; exit status 3."""


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

_N_RANGE = re.compile(r"(-?\d+)(?:\.\.(-?\d+))?")


def _parse_slope(text: str) -> Slope:
    t = text.strip().lower()
    try:
        if "/" in t:
            ps, qs = t.split("/", 1)
            if gcd(abs(int(ps)), abs(int(qs))) != 1:
                raise _UsageError(f"slope {text!r} is not in lowest terms")
        return Slope.parse(t)
    except ValueError as err:
        raise _UsageError(f"malformed slope {text!r}: {err}") from None


def _single_knot(args) -> KnotFamily:
    if args.knot == "fig8":
        if args.n is not None:
            raise _UsageError("--n applies to the torus family only")
        return KnotFamily.fig8()
    if args.n is None:
        raise _UsageError("--n is required for the torus family")
    try:
        n = int(args.n)
    except ValueError:
        raise _UsageError(f"--n wants a single integer here, got {args.n!r}") from None
    try:
        return KnotFamily.torus(n)
    except ValueError as err:
        raise _UsageError(str(err)) from None


def _scan_n_values(text: str) -> list:
    m = _N_RANGE.fullmatch(text.strip())
    if m is None:
        raise _UsageError(f"cannot parse --n {text!r} (want an integer or lo..hi)")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    values = [n for n in range(lo, hi + 1) if n not in (0, -1)]
    if not values:
        raise _UsageError(f"empty scan range: --n {text} admits no torus parameter")
    return values


def _check_precision(bits: int) -> int:
    if not 2 <= bits <= 4096:
        raise _UsageError("--precision wants a bit count in 2..4096")
    return bits


# ---------------------------------------------------------------------------
# serialization helpers
# ---------------------------------------------------------------------------

def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _ball_json(ball) -> dict:
    mid = ball.mid
    return {
        "midpoint": {"re": str(mid.real), "im": str(mid.imag)},
        "radius": str(ball.rad),
    }


def _ball_text(ball) -> str:
    im = str(ball.mid.imag)
    sign, mag = ("- ", im[1:]) if im.startswith("-") else ("+ ", im)
    return f"{ball.mid.real} {sign}{mag}i (radius {ball.rad})"


def _knot_json(K: KnotFamily) -> dict:
    return {"family": K.kind, "n": K.n}


def _verdict_json(v) -> dict:
    return {"status": v.status, "evidence": v.evidence}


def _counts_json(c) -> dict:
    oracle = c.nonabelian_oracle
    return {
        "abelian": c.abelian,
        "nonabelian_formula": int(c.nonabelian_formula),
        "nonabelian_oracle": oracle if isinstance(oracle, str) else int(oracle),
        "total_formula": c.total_formula,
    }


def _basis_json(b) -> dict:
    if isinstance(b, Unsupported):
        return {"supported": False, "reason": b.reason,
                "cardinality": None, "monomials": None}
    return {"supported": True, "reason": None, "cardinality": b.cardinality,
            "monomials": [str(m) for m in b.monomials]}


def _verification_json(v) -> dict | None:
    if v is None:
        return None
    return {
        "passed": v.passed,
        "square": v.square,
        "rows": v.rows,
        "cols": v.cols,
        "precision_used": v.precision_used,
        "method": v.method,
        "det_lower": None if v.det_lower is None else str(v.det_lower),
        "det_upper": None if v.det_upper is None else str(v.det_upper),
        "note": v.note,
    }


def _verification_text(v) -> str:
    if v.det_lower is None:
        return v.note or v.method
    body = (f"|det| in [{v.det_lower}, {v.det_upper}]"
            f" at {v.precision_used}-bit precision ({v.method})")
    return f"{body}; {v.note}" if v.note else body


def _character_json(chi) -> dict:
    if is_abelian(chi):
        return {"kind": "abelian", "root_index": chi.root_index,
                "mu": _ball_json(chi.mu)}
    if chi.family.is_fig8:
        return {"kind": "nonabelian", "special": chi.special,
                "x": _ball_json(chi.x), "tau": _ball_json(chi.tau)}
    return {"kind": "nonabelian", "zeta_index": chi.zeta_index,
            "angle": _frac_str(chi.angle), "t_m": _ball_json(chi.t_m)}


def _character_text(i: int, chi) -> str:
    if is_abelian(chi):
        return f"{i:>3}  abelian     root_index {chi.root_index}  mu = {_ball_text(chi.mu)}"
    if chi.family.is_fig8:
        tag = "special" if chi.special else "generic"
        return (f"{i:>3}  nonabelian  {tag}  x = {_ball_text(chi.x)}"
                f"  tau = {_ball_text(chi.tau)}")
    return (f"{i:>3}  nonabelian  angle {_frac_str(chi.angle)}"
            f"  t_m = {_ball_text(chi.t_m)}")


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


# ---------------------------------------------------------------------------
# dim
# ---------------------------------------------------------------------------

def _report_mismatch(report) -> bool:
    if any("count mismatch" in note for note in report.notes):
        return True
    c = report.counts
    if c is None or c.nonabelian_oracle == UNAVAILABLE:
        return False
    admissible = getattr(c.nonabelian_formula, "admissible", True)
    return admissible and int(c.nonabelian_oracle) != int(c.nonabelian_formula)


def _dim_lines(report) -> list:
    lines = [
        f"knot          {report.family}",
        f"slope         {report.slope}",
        f"tameness      {report.tame.status}: {report.tame.evidence}",
    ]
    if report.reduced is None:
        lines.append("reducedness   not assessed")
    else:
        lines.append(f"reducedness   {report.reduced.status}: {report.reduced.evidence}")
    c = report.counts
    if c is None:
        lines.append("characters    not counted")
    else:
        lines.append(
            f"characters    {c.abelian} abelian + {int(c.nonabelian_formula)} nonabelian"
            f" = {c.total_formula} (recount: {c.nonabelian_oracle})"
        )
    d = report.dimension
    if d.value is None:
        lines.append(f"dimension     {d.kind}")
    elif d.kind == "exact":
        lines.append(f"dimension     {d.value}")
    else:
        lines.append(f"dimension     {d.kind} {d.value}")
    b = report.basis
    if isinstance(b, Unsupported):
        lines.append(f"basis         unsupported: {b.reason}")
    else:
        lines.append("basis         " + ", ".join(str(m) for m in b.monomials))
    v = report.verification
    if v is None:
        lines.append("verification  skipped")
    else:
        lines.append(f"verification  {'passed' if v.passed else 'failed'}:"
                     f" {_verification_text(v)}")
    for note in report.notes:
        lines.append(f"note          {note}")
    return lines


def _cmd_dim(args) -> int:
    K = _single_knot(args)
    s = _parse_slope(args.slope)
    report = dimension_report(K, s, precision=_check_precision(args.precision))
    if args.json:
        _emit_json({
            "schema": 1,
            "command": "dim",
            "knot": _knot_json(K),
            "slope": str(s),
            "tameness": _verdict_json(report.tame),
            "reducedness": None if report.reduced is None else _verdict_json(report.reduced),
            "counts": None if report.counts is None else _counts_json(report.counts),
            "dimension": {"kind": report.dimension.kind, "value": report.dimension.value},
            "basis": _basis_json(report.basis),
            "verification": _verification_json(report.verification),
            "notes": list(report.notes),
        })
    else:
        for line in _dim_lines(report):
            print(line)
    return 3 if _report_mismatch(report) else 0


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def _scan_row(K: KnotFamily, s: Slope) -> dict:
    formula = nonabelian_formula(K, s)
    oracle = nonabelian_oracle(K, s)
    if oracle == UNAVAILABLE:
        flag, note = "unavailable", "no independent recount for this slope"
    elif not formula.admissible:
        flag, note = "unavailable", formula.reason
    elif int(oracle) == int(formula):
        flag, note = "agree", ""
    else:
        flag, note = "mismatch", f"recount {oracle} != formula {int(formula)}"
    return {
        "n": K.n,
        "p": s.p,
        "q": s.q,
        "slope": str(s),
        "abelian": count_abelian(s),
        "nonabelian_formula": int(formula),
        "nonabelian_oracle": oracle if isinstance(oracle, str) else int(oracle),
        "flag": flag,
        "note": note,
    }


def _scan_lines(rows: list, summary: dict) -> list:
    lines = ["   n     p    q  abelian  formula       oracle  flag"]
    for r in rows:
        n = "-" if r["n"] is None else str(r["n"])
        lines.append(
            f"{n:>4}  {r['p']:>4} {r['q']:>4}  {r['abelian']:>7}"
            f"  {r['nonabelian_formula']:>7}  {str(r['nonabelian_oracle']):>11}"
            f"  {r['flag']}"
        )
    lines.append(
        f"summary: {summary['rows']} rows, {summary['agreements']} agree,"
        f" {summary['unavailable']} unavailable, {summary['mismatches']} mismatches"
    )
    return lines


def _cmd_scan(args) -> int:
    if args.pmax < 1 or args.qmax < 1:
        raise _UsageError("empty scan range: --pmax and --qmax want values >= 1")
    if args.knot == "fig8":
        if args.n is not None:
            raise _UsageError("--n applies to the torus family only")
        knots = [KnotFamily.fig8()]
    else:
        if args.n is None:
            raise _UsageError("--n is required for the torus family")
        knots = [KnotFamily.torus(n) for n in _scan_n_values(args.n)]
    rows = []
    for K in knots:
        for p in range(-args.pmax, args.pmax + 1):
            for q in range(1, args.qmax + 1):
                if gcd(abs(p), q) != 1:
                    continue
                s = Slope.of(p, q)
                if tameness(K, s).status == EXCLUDED:
                    continue
                rows.append(_scan_row(K, s))
    rows.sort(key=lambda r: (r["n"] or 0, r["p"], r["q"]))
    summary = {
        "rows": len(rows),
        "agreements": sum(r["flag"] == "agree" for r in rows),
        "unavailable": sum(r["flag"] == "unavailable" for r in rows),
        "mismatches": sum(r["flag"] == "mismatch" for r in rows),
    }
    if args.json:
        _emit_json({
            "schema": 1,
            "command": "scan",
            "knot": args.knot,
            "n_values": None if args.knot == "fig8" else [K.n for K in knots],
            "pmax": args.pmax,
            "qmax": args.qmax,
            "rows": rows,
            "summary": summary,
        })
    else:
        for line in _scan_lines(rows, summary):
            print(line)
    return 3 if summary["mismatches"] else 0


# ---------------------------------------------------------------------------
# basis, characters, verify
# ---------------------------------------------------------------------------

def _cmd_basis(args) -> int:
    K = _single_knot(args)
    s = _parse_slope(args.slope)
    b = basis(K, s)
    if args.json:
        _emit_json({
            "schema": 1,
            "command": "basis",
            "knot": _knot_json(K),
            "slope": str(s),
            "basis": _basis_json(b),
        })
        return 0
    print(f"knot          {K}")
    print(f"slope         {s}")
    if isinstance(b, Unsupported):
        print(f"basis         unsupported: {b.reason}")
    else:
        print(f"cardinality   {b.cardinality}")
        for m in b.monomials:
            print(f"  {m}")
    return 0


def _cmd_characters(args) -> int:
    K = _single_knot(args)
    s = _parse_slope(args.slope)
    precision = _check_precision(args.precision)
    verdict = tameness(K, s)
    if verdict.status == EXCLUDED:
        if args.json:
            _emit_json({
                "schema": 1,
                "command": "characters",
                "knot": _knot_json(K),
                "slope": str(s),
                "precision": precision,
                "status": "excluded",
                "note": verdict.evidence,
                "counts": None,
                "characters": None,
            })
        else:
            print(f"knot          {K}")
            print(f"slope         {s}")
            print(f"status        excluded: {verdict.evidence}")
        return 0
    try:
        chars = enumerate_characters(K, s, precision=precision)
    except ValueError as err:
        if "mismatch" in str(err):
            raise _CheckFailure(str(err)) from None
        raise _UsageError(str(err)) from None
    except RuntimeError as err:
        raise _UsageError(str(err)) from None
    nab = sum(1 for chi in chars if not is_abelian(chi))
    counts = {"total": len(chars), "abelian": len(chars) - nab, "nonabelian": nab}
    if args.json:
        _emit_json({
            "schema": 1,
            "command": "characters",
            "knot": _knot_json(K),
            "slope": str(s),
            "precision": precision,
            "status": "enumerated",
            "note": None,
            "counts": counts,
            "characters": [_character_json(chi) for chi in chars],
        })
    else:
        print(f"knot          {K}")
        print(f"slope         {s}")
        print(f"characters    {counts['total']} = {counts['abelian']} abelian"
              f" + {counts['nonabelian']} nonabelian")
        for i, chi in enumerate(chars, start=1):
            print(_character_text(i, chi))
    return 0


def _cmd_verify(args) -> int:
    K = _single_knot(args)
    s = _parse_slope(args.slope)
    precision = _check_precision(args.precision)
    try:
        v = verify_basis(K, s, precision=precision)
    except ValueError as err:
        if "mismatch" in str(err):
            raise _CheckFailure(str(err)) from None
        raise _UsageError(str(err)) from None
    except RuntimeError as err:
        raise _UsageError(str(err)) from None
    if args.json:
        _emit_json({
            "schema": 1,
            "command": "verify",
            "knot": _knot_json(K),
            "slope": str(s),
            "verification": _verification_json(v),
        })
    else:
        print(f"knot          {K}")
        print(f"slope         {s}")
        print(f"verification  {'passed' if v.passed else 'failed'}:"
              f" {_verification_text(v)}")
    return 0


# ---------------------------------------------------------------------------
# rt lens
# ---------------------------------------------------------------------------

def _cmd_rt_lens(args) -> int:
    if args.order < 6 or args.order % 2 or (args.order // 2) % 2 == 0:
        raise _UsageError("--order wants 2N with N odd and N >= 3")
    F = CycloField.of(args.order // 2)
    report = None
    if args.murakami:
        try:
            report = murakami_check(F, args.p)
        except ValueError as err:
            raise _UsageError(str(err)) from None
    value = rt_lens(F, args.p)
    coeffs = [value.residue[i] for i in range(F.degree)]
    if args.json:
        _emit_json({
            "schema": 1,
            "command": "rt lens",
            "order": args.order,
            "p": args.p,
            "value": {
                "field": str(F),
                "coefficients": [_frac_str(c) for c in coeffs],
            },
            "murakami": None if report is None else {
                "integral": report.integral,
                "congruent": report.congruent,
                "h1": report.h1,
                "legendre": report.symbol,
                "coordinate_sum": _frac_str(report.coordinate_sum),
            },
        })
        return 0
    print(f"field         {F}")
    print(f"p             {args.p}")
    print(f"value         {value}")
    print(f"coefficients  {', '.join(_frac_str(c) for c in coeffs)}")
    if report is not None:
        print(f"integral      {'true' if report.integral else 'false'}")
        print(f"congruent     {'true' if report.congruent else 'false'}"
              f" (to legendre({report.h1}, {F.N}) = {report.symbol})")
    return 0


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="skeindim",
        description="Skein-module dimensions of Dehn fillings, with certificates.",
    )
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    def filling(name: str, help_text: str, precision: bool = False):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--knot", choices=("fig8", "torus"), required=True)
        cmd.add_argument("--n", help="torus parameter n of the (2, 2n+1) knot")
        cmd.add_argument("--slope", required=True, help="filling slope p/q, or inf")
        if precision:
            cmd.add_argument("--precision", type=int, default=128,
                             help="working precision in bits (default 128)")
        cmd.add_argument("--json", action="store_true", help="canonical JSON output")
        return cmd

    filling("dim", "full dimension report for one filling",
            precision=True).set_defaults(handler=_cmd_dim)

    scan = sub.add_parser("scan", help="formula/recount agreement over slope ranges")
    scan.add_argument("--knot", choices=("fig8", "torus"), required=True)
    scan.add_argument("--n", help="torus parameter: an integer or lo..hi")
    scan.add_argument("--pmax", type=int, required=True, help="scan |p| <= pmax")
    scan.add_argument("--qmax", type=int, required=True, help="scan 1 <= q <= qmax")
    scan.add_argument("--json", action="store_true", help="canonical JSON output")
    scan.set_defaults(handler=_cmd_scan)

    filling("basis", "trace-monomial spanning set for one filling"
            ).set_defaults(handler=_cmd_basis)
    filling("characters", "isolated characters with certified ball coordinates",
            precision=True).set_defaults(handler=_cmd_characters)
    filling("verify", "evaluation-matrix nonsingularity certificate",
            precision=True).set_defaults(handler=_cmd_verify)

    rt = sub.add_parser("rt", help="exact cyclotomic invariants")
    rtsub = rt.add_subparsers(dest="rt_command", required=True, metavar="target")
    lens = rtsub.add_parser("lens", help="invariant of p-framed unknot surgery")
    lens.add_argument("--p", type=int, required=True, help="surgery coefficient")
    lens.add_argument("--order", type=int, required=True,
                      help="root-of-unity order 2N with N odd")
    lens.add_argument("--murakami", action="store_true",
                      help="also check integrality and the residue congruence")
    lens.add_argument("--json", action="store_true", help="canonical JSON output")
    lens.set_defaults(handler=_cmd_rt_lens)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except _CheckFailure as err:
        print(f"internal check failed: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
