import json
import os
import pathlib
import shutil
import subprocess

import pytest

import tamefield as tf

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMA = json.loads((ROOT / "schema" / "report.schema.json").read_text())


def result_schema(name):
    return {"$defs": SCHEMA["$defs"], **SCHEMA["$defs"][name]}


def validate(instance, schema):
    jsonschema = pytest.importorskip("jsonschema")
    jsonschema.validate(instance, schema, cls=jsonschema.Draft202012Validator)


def cli():
    path = os.environ.get("TAMEFIELD_CLI") or shutil.which("tamefield")
    if not path or not os.path.exists(path):
        pytest.skip("tamefield CLI not built")
    return path


def test_field_parsing():
    K = tf.Field("F(9)((t^Q))")
    assert K.name == "F(9)((t^Q))"
    assert K.residue_size == 9
    assert K.characteristic == 3
    assert K.value_group == "Q"
    assert K.is_hahn
    F = tf.Field("F(3)(t^(1/3^inf))")
    assert not F.is_hahn
    assert F.value("t^(-1/9) + t") == "-1/9"
    assert tf.Field("F(2)((t^Z))").poly("X^2 - X - t^(-1)") == "X^2 + X + t^(-1)"
    assert tf.group("Z x Z[1/4]") == "Z x Z[1/2]"


def test_parse_errors_carry_positions():
    with pytest.raises(tf.ParseError) as info:
        tf.Field("F(6)((t^Z))")
    assert info.value.kind == "SemanticError"
    assert (info.value.line, info.value.column) == (1, 3)
    with pytest.raises(tf.TameFieldError):
        tf.formula("forall x (x <")


def test_defect_example():
    for p in (2, 3, 5):
        r = tf.analyze_extension(f"F({p})(t^(1/{p}^inf))", as_="t^(-1)")
        assert (r["n"], r["e"], r["f"], r["defect"]) == (p, 1, 1, p)
        assert r["outcome"] == "DEFECT"
        assert r["properties"]["immediate"] and r["properties"]["purely_wild"]
        assert r["certificate_values"][:3] == [f"-1/{p}", f"-1/{p * p}", f"-1/{p ** 3}"]
        validate(r, result_schema("extension"))


def test_kummer_and_classification():
    r = tf.analyze_extension("F(5)((t^Z))", poly="X^2 - t")
    assert (r["e"], r["f"], r["defect"]) == (2, 1, 1)
    assert r["properties"]["tame"]
    c = tf.classify_field("F(5)((t^Z))")
    assert c["tame"]["verdict"] == "NO"
    assert "witness" in c["tame"]
    assert tf.classify_field("F(5)((t^Q))")["tame"]["verdict"] == "YES"
    validate(c, result_schema("classification"))


def test_hensel_gauss_pcs():
    h = tf.hensel_lift("F(3)((t^Z))", "X^2 - 1 - t", target="40", prec=80)
    assert h["iterations"] <= 7
    assert h["root"].startswith("1 + 2*t + t^2")
    validate(h, result_schema("hensel"))
    g = tf.gauss_value("F(3)((t^Z))", "t*x1 + y1")
    assert g["value"] == "(0, 0)"
    validate(g, result_schema("gauss"))
    pcs = tf.pcs_trace("F(2)(t^(1/2^inf))", "artin-schreier:t^(-1)", steps=10)
    assert pcs["fit"] == {"kind": "AFFINE", "beta": "0", "tail_start": 0, "h": "2", "h_power_of_p": True}
    validate(pcs, result_schema("pcs"))


def test_decide_oag():
    assert tf.decide_oag("forall x exists y (y + y = x)")["value"] is True
    assert tf.decide_oag("exists x (x > 0)", trivial_allowed=True)["value"] is False
    r = tf.decide_oag("exists y (3*y = x & 2*y < z)")
    assert r["value"] is None
    assert r["quantifier_free"] == "2*x < 3*z"
    assert tf.decide_oag("forall x exists y (y + y = x)", group="Z")["group_value"] is False


def test_suite_filters():
    r = tf.run_suite("doag")
    assert [c["id"] for c in r["cases"]] == ["08-doag"]
    assert r["passed"]
    empty = tf.run_suite("nothing-matches")
    assert empty == {"passed": True, "cases": []}


@pytest.mark.parametrize(
    "args",
    [
        ["analyze-extension", "--field", "F(2)((t^Z))", "--as", "1"],
        ["analyze-extension", "--field", "F(3)((t^Z))", "--poly", "X^3 - t"],
        ["classify-field", "--field", "Q((t^Z x Q))"],
        ["gauss-value", "--field", "F(5)((t^Z))", "--mpoly", "x1^2 + t^(-1)*x1*y1"],
        ["hensel-lift", "--field", "F(3)((t^Z))", "--poly", "X^2 - 1 - t"],
        ["pcs-trace", "--field", "F(2)((t^Z))", "--gen", "geometric", "--poly", "X - 1"],
        ["decide-oag", "--sentence", "forall x, y (x < y -> exists z (x < z & z < y))", "--group", "Z[1/3]"],
        ["verify-suite", "--filter", "pcs"],
    ],
)
def test_cli_json_matches_schema(args):
    out = subprocess.run([cli(), "--json", *args], capture_output=True, text=True, check=True)
    report = json.loads(out.stdout)
    assert report["command"] == args[0]
    validate(report, SCHEMA)


def test_cli_exit_codes():
    path = cli()
    assert subprocess.run([path, "classify-field", "--field", "F(6)((t^Z))"], capture_output=True).returncode == 2
    assert subprocess.run([path, "no-such-command"], capture_output=True).returncode == 2
    assert subprocess.run([path, "verify-suite", "--filter", "defect"], capture_output=True).returncode == 0
