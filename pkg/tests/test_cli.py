"""End-to-end tests of the command-line front end via main(argv)."""

import json

import pytest

from skeindim import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


# ---------------------------------------------------------------------------
# dim
# ---------------------------------------------------------------------------

def test_dim_fig8_unit_slope(capsys):
    code, payload, _ = run_json(capsys, "dim", "--knot", "fig8", "--slope", "1/1")
    assert code == 0
    assert payload["schema"] == 1
    assert payload["dimension"] == {"kind": "exact", "value": 4}
    assert payload["counts"] == {
        "abelian": 1, "nonabelian_formula": 3,
        "nonabelian_oracle": 3, "total_formula": 4,
    }
    assert payload["verification"]["passed"] is True


def test_dim_poincare_sphere(capsys):
    code, payload, _ = run_json(
        capsys, "dim", "--knot", "torus", "--n", "1", "--slope", "1/1")
    assert code == 0
    assert payload["knot"] == {"family": "torus", "n": 1}
    assert payload["dimension"] == {"kind": "exact", "value": 3}
    assert payload["basis"]["monomials"] == ["1", "t_m", "t_m^2"]


def test_dim_excluded_slope_exits_zero(capsys):
    code, payload, _ = run_json(capsys, "dim", "--knot", "fig8", "--slope", "4/1")
    assert code == 0
    assert payload["tameness"]["status"] == "Excluded"
    assert payload["dimension"] == {"kind": "not determined", "value": None}
    assert payload["counts"] is None
    assert payload["basis"]["supported"] is False
    assert payload["notes"]


def test_dim_text_contains_the_claim(capsys):
    code, out, _ = run(capsys, "dim", "--knot", "fig8", "--slope", "1/1")
    assert code == 0
    assert "dimension     4" in out
    assert "verification  passed" in out


def test_dim_report_always_explains_verification(capsys):
    # integer dimension in the 4 | p regime: basis exists but the recount
    # does not, and the report must say what happened to verification
    code, payload, _ = run_json(capsys, "dim", "--knot", "fig8", "--slope", "8/1")
    assert code == 0
    assert payload["dimension"]["kind"] in ("exact", "at least")
    assert any("verification" in note for note in payload["notes"])


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def test_scan_torus_range_all_agree(capsys):
    code, payload, _ = run_json(
        capsys, "scan", "--knot", "torus", "--n", "1..3",
        "--pmax", "10", "--qmax", "5")
    assert code == 0
    assert payload["summary"]["mismatches"] == 0
    assert payload["summary"]["rows"] == len(payload["rows"])
    keys = [(r["n"], r["p"], r["q"]) for r in payload["rows"]]
    assert keys == sorted(keys)
    assert {r["flag"] for r in payload["rows"]} == {"agree"}


def test_scan_fig8_marks_multiples_of_four(capsys):
    code, payload, _ = run_json(
        capsys, "scan", "--knot", "fig8", "--pmax", "10", "--qmax", "5")
    assert code == 0
    for row in payload["rows"]:
        if row["p"] % 4 == 0:
            assert row["flag"] == "unavailable"
            assert row["nonabelian_oracle"] == "Unavailable"
        else:
            assert row["flag"] == "agree"
    assert payload["summary"]["mismatches"] == 0
    # excluded lines 0/1 and ±4/1 never appear as rows
    assert all((r["p"], r["q"]) not in {(0, 1), (4, 1), (-4, 1)}
               for r in payload["rows"])


def test_scan_mismatch_exits_three(capsys, monkeypatch):
    monkeypatch.setattr(cli, "nonabelian_oracle", lambda K, s: 10 ** 9)
    code, payload, _ = run_json(
        capsys, "scan", "--knot", "torus", "--n", "1", "--pmax", "3", "--qmax", "1")
    assert code == 3
    assert payload["summary"]["mismatches"] == payload["summary"]["rows"]
    assert all(r["flag"] == "mismatch" for r in payload["rows"])


def test_scan_empty_ranges_are_usage_errors(capsys):
    for argv in (
        ["scan", "--knot", "fig8", "--pmax", "0", "--qmax", "5"],
        ["scan", "--knot", "torus", "--n", "3..1", "--pmax", "5", "--qmax", "2"],
        ["scan", "--knot", "torus", "--n", "0", "--pmax", "5", "--qmax", "2"],
    ):
        code, _, err = run(capsys, *argv)
        assert code == 2
        assert "empty scan range" in err


# ---------------------------------------------------------------------------
# basis and characters
# ---------------------------------------------------------------------------

def test_basis_listing_matches_library(capsys):
    code, payload, _ = run_json(
        capsys, "basis", "--knot", "torus", "--n", "2", "--slope", "1/1")
    assert code == 0
    assert payload["basis"]["cardinality"] == 9
    assert payload["basis"]["monomials"][:3] == ["1", "t_b", "t_m"]


def test_basis_unsupported_is_reported_not_an_error(capsys):
    code, payload, _ = run_json(
        capsys, "basis", "--knot", "torus", "--n", "2", "--slope", "3/1")
    assert code == 0
    assert payload["basis"]["supported"] is False
    assert "±1" in payload["basis"]["reason"]


def test_characters_poincare_sphere(capsys):
    code, payload, _ = run_json(
        capsys, "characters", "--knot", "torus", "--n", "1", "--slope", "1/1")
    assert code == 0
    assert payload["counts"] == {"total": 3, "abelian": 1, "nonabelian": 2}
    angles = [c["angle"] for c in payload["characters"] if c["kind"] == "nonabelian"]
    assert angles == ["1/5", "3/5"]
    trivial = payload["characters"][0]
    assert trivial["kind"] == "abelian"
    assert trivial["mu"]["midpoint"]["re"] == "1.0"


def test_characters_excluded_slope(capsys):
    code, payload, _ = run_json(
        capsys, "characters", "--knot", "fig8", "--slope", "0/1")
    assert code == 0
    assert payload["status"] == "excluded"
    assert payload["characters"] is None


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_passes_on_a_torus_slope(capsys):
    code, payload, _ = run_json(
        capsys, "verify", "--knot", "torus", "--n", "2", "--slope", "1/3")
    assert code == 0
    v = payload["verification"]
    assert v["passed"] is True and v["square"] is True
    assert v["method"] == "product"


def test_verify_reports_certified_singular_matrix(capsys):
    code, payload, _ = run_json(
        capsys, "verify", "--knot", "fig8", "--slope", "8/1")
    assert code == 0
    v = payload["verification"]
    assert v["passed"] is False
    assert "below the threshold" in v["note"]
    assert float(v["det_upper"]) < 1e-6


def test_verify_unsupported_basis_is_a_precondition_error(capsys):
    code, _, err = run(capsys, "verify", "--knot", "torus", "--n", "2",
                       "--slope", "3/1")
    assert code == 2
    assert "unsupported" in err


# ---------------------------------------------------------------------------
# rt lens
# ---------------------------------------------------------------------------

def test_rt_lens_unit_surgery(capsys):
    code, payload, _ = run_json(capsys, "rt", "lens", "--p", "1", "--order", "10")
    assert code == 0
    assert payload["value"]["coefficients"] == ["1/1", "0/1", "0/1", "0/1"]
    assert payload["murakami"] is None


def test_rt_lens_murakami_flags(capsys):
    code, payload, _ = run_json(
        capsys, "rt", "lens", "--p", "2", "--order", "10", "--murakami")
    assert code == 0
    m = payload["murakami"]
    assert m["integral"] is True and m["congruent"] is True
    assert m["legendre"] == -1


def test_rt_lens_preconditions(capsys):
    for argv in (
        ["rt", "lens", "--p", "5", "--order", "10", "--murakami"],   # N | p
        ["rt", "lens", "--p", "2", "--order", "9"],                  # odd order
        ["rt", "lens", "--p", "2", "--order", "8"],                  # N even
        ["rt", "lens", "--p", "2", "--order", "18", "--murakami"],   # N = 9 not prime
    ):
        code, _, err = run(capsys, *argv)
        assert code == 2, argv
        assert err.startswith("error:")


# ---------------------------------------------------------------------------
# shared plumbing
# ---------------------------------------------------------------------------

def test_malformed_slopes_are_usage_errors(capsys):
    for text in ("4x/1", "2/4", "0/0", "3/0"):
        code, _, err = run(capsys, "dim", "--knot", "fig8", "--slope", text)
        assert code == 2, text
        assert "slope" in err


def test_infinite_slope_spelling(capsys):
    code, payload, _ = run_json(capsys, "dim", "--knot", "fig8", "--slope", "inf")
    assert code == 0
    assert payload["slope"] == "inf"
    assert payload["dimension"] == {"kind": "exact", "value": 1}


def test_unknown_subcommand_is_a_parse_error():
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_json_output_is_byte_identical_across_runs(capsys):
    outputs = []
    for _ in range(2):
        code, out, _ = run(capsys, "scan", "--knot", "torus", "--n", "1..2",
                           "--pmax", "8", "--qmax", "3", "--json")
        assert code == 0
        outputs.append(out.encode())
    assert outputs[0] == outputs[1]
    code, out, _ = run(capsys, "characters", "--knot", "fig8", "--slope", "1/2",
                       "--json")
    assert code == 0
    code2, out2, _ = run(capsys, "characters", "--knot", "fig8", "--slope", "1/2",
                         "--json")
    assert out.encode() == out2.encode()
