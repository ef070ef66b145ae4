import io
import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from aqg import BUNDLED, deffile
from aqg.cli import run
from aqg.errors import EXIT_CODES
from aqg.pipeline import build_manifest, coverage_gaps, load_manifest, run_command

from conftest import NAMES, qg_of


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def bundled_doc(name):
    return json.loads(deffile.bundled_path(f"{name}.aqg.json").read_text(encoding="utf-8"))


def test_exit_codes_are_distinct():
    assert len(set(EXIT_CODES.values())) == len(EXIT_CODES)
    assert EXIT_CODES["OK"] == 0


@pytest.mark.parametrize("name", NAMES)
def test_bundled_files_round_trip(name):
    path = deffile.bundled_path(f"{name}.aqg.json")
    text = path.read_text(encoding="utf-8")
    d = deffile.loads(text)
    assert deffile.dumps(d) == text
    assert deffile.dumps(BUNDLED[name]()) == text


@pytest.mark.parametrize("name,dim", [("group_z2", 2), ("kac_paljutkin", 8)])
def test_load_through_examples_path(name, dim):
    assert deffile.load(f"examples/{name}.aqg.json").dim == dim


def test_report_z2_passes():
    code, out, _ = cli("report", "examples/group_z2.aqg.json")
    assert code == 0
    assert "ALL PASS" in out


def test_fundamental_on_sweedler_needs_positivity():
    code, _, err = cli("fundamental", "examples/sweedler.aqg.json")
    assert code == EXIT_CODES["POSITIVITY_REQUIRED"]
    assert "POSITIVITY_REQUIRED" in err


def test_report_on_sweedler_skips_positive_sections():
    code, out, _ = cli("report", "sweedler", "--json")
    assert code == 0
    doc = json.loads(out)
    skipped = {s["id"] for s in doc["skipped"]}
    assert {"section:gns", "section:fundamental", "section:universal", "section:lift", "section:polar"} <= skipped


def test_corrupted_file_is_an_axiom_error(tmp_path):
    doc = bundled_doc("group_z2")
    doc["comult"][1][1][0][2] = [2, 0]
    p = tmp_path / "bad.aqg.json"
    p.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = cli("verify", str(p), "--json")
    assert code == EXIT_CODES["AXIOM_ERROR"]
    rep = json.loads(out)
    assert rep["errors"][0]["code"] == "AXIOM_ERROR"
    assert any(not e["pass"] for e in rep["entries"])


def test_index_out_of_range_is_a_schema_error(tmp_path):
    doc = bundled_doc("group_z2")
    doc["mult"][0][2][0][0] = 7
    p = tmp_path / "idx.aqg.json"
    p.write_text(json.dumps(doc), encoding="utf-8")
    code, _, err = cli("verify", str(p))
    assert code == EXIT_CODES["SCHEMA_ERROR"]
    assert "mult/0/2/0" in err


def test_missing_field_is_a_schema_error(tmp_path):
    doc = bundled_doc("group_z2")
    del doc["star"]
    p = tmp_path / "nostar.aqg.json"
    p.write_text(json.dumps(doc), encoding="utf-8")
    assert cli("verify", str(p))[0] == EXIT_CODES["SCHEMA_ERROR"]


def test_bad_json_reports_position(tmp_path):
    p = tmp_path / "broken.aqg.json"
    p.write_text('{\n "format": "aqg-definition",\n "version": \n}', encoding="utf-8")
    code, _, err = cli("verify", str(p))
    assert code == EXIT_CODES["PARSE_ERROR"]
    assert "line 4" in err


def test_missing_file(tmp_path):
    assert cli("verify", str(tmp_path / "nope.json"))[0] == EXIT_CODES["PARSE_ERROR"]


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate", "x"], out=io.StringIO(), err=io.StringIO())
    assert exc.value.code == EXIT_CODES["USAGE"]


def test_failed_check_exits_one(monkeypatch):
    from aqg import cli as cli_module
    from aqg.report import Report

    def failing(command, qg, seed=0, times=None):
        rep = Report(qg.name)
        rep.check("x.example", "a = b", 1.0)
        return rep

    monkeypatch.setattr(cli_module, "run_command", failing)
    code, out, _ = cli("haar", "group_z2")
    assert code == EXIT_CODES["VERIFICATION_FAILED"]
    assert "FAIL  x.example" in out


def test_json_report_is_deterministic():
    a = cli("report", "kac_paljutkin", "--json", "--seed", "3")[1]
    b = cli("report", "kac_paljutkin", "--json", "--seed", "3")[1]
    assert a == b
    doc = json.loads(a)
    assert doc["schema_version"] == "1"
    assert doc["stamp"]["tolerance"] == 1e-9
    for e in doc["entries"]:
        assert e["pass"] == (e["residual"] < e["tolerance"])


def test_times_flag():
    code, out, _ = cli("polar", "group_s3", "--json", "--times", "0.5,2")
    assert code == 0
    ids = {e["id"] for e in json.loads(out)["entries"]}
    assert "polar.R_tau[0.5]" in ids and "polar.R_tau[2.0]" in ids


def test_generate_matches_bundled(tmp_path):
    out = tmp_path / "s3.aqg.json"
    assert cli("generate", "function_algebra", "--group", "s3", "-o", str(out))[0] == 0
    assert out.read_text(encoding="utf-8") == deffile.bundled_path("function_s3.aqg.json").read_text(encoding="utf-8")
    code, text, _ = cli("generate", "sweedler")
    assert code == 0 and deffile.loads(text).dimension == 4


def test_generate_from_table(tmp_path):
    t = tmp_path / "z3.json"
    t.write_text("[[0,1,2],[1,2,0],[2,0,1]]", encoding="utf-8")
    code, text, _ = cli("generate", "group_algebra", "--table", str(t))
    assert code == 0
    assert deffile.loads(text).dimension == 3
    t.write_text("[[0,1,2],[1,0,0],[2,0,1]]", encoding="utf-8")
    assert cli("generate", "group_algebra", "--table", str(t))[0] == EXIT_CODES["NOT_A_GROUP"]


def test_manifest_is_current():
    assert load_manifest() == json.loads(json.dumps(build_manifest()))


@pytest.mark.parametrize("name", NAMES)
def test_report_covers_manifest(name):
    rep = run_command("report", qg_of(name))
    assert coverage_gaps(rep) == []


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.data())
def test_definition_round_trip_for_random_structure(n, data):
    from aqg.generate import Definition

    cplx = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False, width=64)
    sparse = st.one_of(st.just(0j), cplx)

    def arr(shape):
        size = int(np.prod(shape))
        return np.array(data.draw(st.lists(sparse, min_size=size, max_size=size)), dtype=complex).reshape(shape)

    d = Definition("random", [f"b{i}" for i in range(n)], arr((n, n, n)), arr((n, n)), arr((n,)), arr((n, n, n)), {})
    e = deffile.loads(deffile.dumps(d))
    for key in ("mult", "star", "unit", "comult"):
        assert np.array_equal(getattr(e, key), getattr(d, key))
    assert deffile.dumps(e) == deffile.dumps(d)
