"""CLI behaviour and output schemas. Needs VASSILIEV_CLI pointing at the built executable."""

import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

ROOT = Path(__file__).resolve().parents[2]
DATA = ROOT / "data"
SCHEMAS = DATA / "schemas"
CLI = os.environ.get("VASSILIEV_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="VASSILIEV_CLI not set")


def run(*args, expect=0):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, timeout=600)
    assert proc.returncode == expect, proc.stdout + proc.stderr
    return proc.stdout


def run_json(*args, schema, expect=0):
    out = json.loads(run(*args, expect=expect))
    jsonschema.validate(out, json.loads((SCHEMAS / f"{schema}.schema.json").read_text()))
    return out


def test_parse_and_invariants():
    out = run_json("parse", DATA / "trefoil.gauss", schema="diagram")
    assert out["crossings"] == 3 and out["components"] == 1 and out["writhe"] == 3
    assert run_json("parse", "--code", "V(1,1,2,2)", schema="diagram")["nodes"] == 1
    assert run_json("conway", DATA / "trefoil.gauss", schema="invariant")["value"] == "1 + z^2"
    assert run_json("conway", DATA / "figure8.pd", schema="invariant")["value"] == "1 - z^2"
    assert run_json("conway", DATA / "hopf.gauss", schema="invariant")["value"] == "z"
    assert run_json("v2", DATA / "trefoil.gauss", schema="invariant")["v2"] == 1
    assert run_json("v2", DATA / "figure8.gauss", schema="invariant")["v2"] == -1


def test_vassiliev_eval(tmp_path):
    code = tmp_path / "singular.gauss"
    code.write_text("N1+U2+O3+N1+O2+U3+\n")
    out = run_json("vassiliev-eval", code, "--a", 1, "--b", -1, "--c", 0, schema="invariant")
    assert out["value"] == "z^2"
    assert out["resolutions"] == 2
    out = run_json("vassiliev-eval", code, "--a", 1, "--b", 1, "--c", 1, schema="invariant")
    assert out["resolutions"] == 3


def test_chords_and_weights():
    out = run_json("chords", "enumerate", 2, schema="chords")
    assert out["raw_count"] == 3 and len(out["raw"]) == 3 and len(out["classes"]) == 2
    assert run_json("chords", "4t", 3, schema="fourterm")["count"] > 0
    out = run_json("weights", "--algebra", "su2", "--degree", 2, schema="weights")
    values = sorted(v["re"] for v in out["weights"].values())
    assert values == pytest.approx([-0.375, 1.125], abs=1e-12)
    assert out["four_term"] is True
    assert run_json("weights", "--algebra", "gl2", "--degree", 3, schema="weights")["four_term"] is True


def test_curves_and_integrals(tmp_path):
    curve = tmp_path / "hopf.curve.json"
    run("fixture", "hopf", "--samples", 200, "--output", curve)
    jsonschema.validate(json.loads(curve.read_text()), json.loads((SCHEMAS / "curve.schema.json").read_text()))
    out = run_json("kontsevich", curve, "--degree", 1, "--steps", 400, schema="coefficient_table")
    cross = [e for e in out["entries"] if e["circle_sizes"] == [1, 1]]
    assert len(cross) == 1 and abs(abs(cross[0]["re"]) - 1) < 1e-3
    for name in ["round", "hump", "trefoil2", "trefoil3", "figure8", "hopf", "torus_2_4", "split"]:
        jsonschema.validate(json.loads((DATA / f"{name}.curve.json").read_text()),
                            json.loads((SCHEMAS / "curve.schema.json").read_text()))


def test_compare():
    out = run_json("compare", DATA / "trefoil2.curve.json", DATA / "trefoil.gauss", "--degree", 2, schema="compare")
    assert out["skein_v2"] == 1 and out["agree"] is True
    assert abs(out["integral"]["re"] - 1) < 5e-2


def test_csv_and_output_file(tmp_path):
    text = run("--format", "csv", "weights", "--algebra", "su2", "--degree", 2)
    assert text.splitlines()[0] == "diagram,re,im"
    target = tmp_path / "v2.json"
    run("v2", DATA / "trefoil.gauss", "--output", target)
    assert json.loads(target.read_text())["v2"] == 1


def test_samples_are_seeded():
    a = run_json("--seed", 5, "samples", "--nodes", 2, "--count", 4, schema="samples")
    b = run_json("--seed", 5, "samples", "--nodes", 2, "--count", 4, schema="samples")
    assert a == b and len(a["samples"]) == 4


@pytest.mark.parametrize("args, module, has_position", [
    (["parse", "--code", "O1+U1"], "knot_codes", True),
    (["v2", str(DATA / "hopf.gauss")], "skein_engine", False),
    (["chords", "4t", "1"], "chord_diagrams", False),
    (["weights", "--algebra", "so5", "--degree", "2"], "lie_weights", False),
])
def test_errors_are_machine_readable(args, module, has_position):
    out = run_json(*args, schema="error", expect=1)
    assert out["error"]["module"] == module
    assert (out["error"]["position"] is not None) == has_position


def test_usage_errors():
    out = run_json("no-such-command", schema="error", expect=2)
    assert out["error"]["module"] == "cli"


@pytest.mark.parametrize("name, fixture", [
    ("round", "round"), ("hump", "hump"), ("trefoil", "trefoil2"), ("trefoil2", "trefoil2"),
    ("trefoil3", "trefoil3"), ("figure8", "figure8"), ("hopf", "hopf"), ("torus_2_4", "torus_2_4"),
    ("split", "split"),
])
def test_shipped_curves_match_fixtures(name, fixture):
    assert json.loads((DATA / f"{name}.curve.json").read_text()) == json.loads(run("fixture", fixture))


def test_compare_example_from_data_dir():
    proc = subprocess.run([CLI, "compare", "trefoil.curve.json", "trefoil.gauss", "--degree", "2"],
                          cwd=DATA, capture_output=True, text=True, timeout=600)
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert abs(out["integral"]["re"] - out["skein_v2"]) < 5e-2
