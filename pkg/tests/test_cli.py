import json

import jsonschema

import pytest
from freediv.cli import main
from freediv.report import REPORT_SCHEMA


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bezout_det(capsys):
    code, out, _ = run(capsys, "bezout", "--n", "2", "--emit", "det")
    assert code == 0 and out.strip() == "s1^2 - 4*s0*s2"


def test_bezout_matrix_json(capsys):
    code, out, _ = run(capsys, "bezout", "--n", "3", "--emit", "matrix")
    obj = json.loads(out)
    assert set(obj) == {"B", "Bprime"} and len(obj["Bprime"]["rows"]) == 3


def test_bezout_report_schema(capsys):
    code, out, _ = run(capsys, "bezout", "--n", "2")
    assert code == 0
    jsonschema.validate(json.loads(out), REPORT_SCHEMA)


@pytest.mark.parametrize("argv", [["bezout", "--n", "0"], ["bezout"], ["nosuch"],
                                  ["a4", "--numeric", "--tau", "1.1-0.5i"], ["a4", "--tau", "x"],
                                  ["a4", "--mutate", "A[9,9]"], ["a4", "--samples", "0"],
                                  ["bezout", "--n", "2", "--term-budget", "0"]])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_saito_exit_codes(capsys, tmp_path):
    f = tmp_path / "f.txt"
    f.write_text("x*y\n")
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"vars": ["x", "y"], "rows": [["x", "0"], ["0", "y"]]}))
    ident = tmp_path / "id.json"
    ident.write_text(json.dumps({"vars": ["x", "y"], "rows": [["1", "0"], ["0", "1"]]}))
    assert run(capsys, "saito", str(f), str(good))[0] == 0
    assert run(capsys, "saito", str(f), str(ident))[0] == 1
    f.write_text("x*+")
    assert run(capsys, "saito", str(f), str(good))[0] == 2
    assert run(capsys, "saito", str(tmp_path / "missing"), str(good))[0] == 2


def test_a4_mutation_named(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, stdout, _ = run(capsys, "a4", "--numeric", "--samples", "5", "--mutate", "A[2,3]", "--out", str(out))
    assert code == 1 and stdout == ""
    rep = json.loads(out.read_text())
    jsonschema.validate(rep, REPORT_SCHEMA)
    witnesses = {c["witness"] for c in rep["checks"] if c["id"].endswith("columns_tangent")}
    assert witnesses == {"suspected entry A[2,3]"}


def test_a4_symbolic_clean(capsys):
    code, out, _ = run(capsys, "a4", "--symbolic")
    assert code == 0
    assert all(c["status"] == "pass" for c in json.loads(out)["checks"])


def test_all_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "all", "--samples", "4", "--out", str(a))
    run(capsys, "all", "--samples", "4", "--out", str(b))
    ra, rb = json.loads(a.read_text()), json.loads(b.read_text())
    jsonschema.validate(ra, REPORT_SCHEMA)
    ra.pop("elapsed_ms"), rb.pop("elapsed_ms")
    assert ra == rb
    prefixes = {c["id"].split(".")[0] for c in ra["checks"]}
    assert {"bezout", "vandermonde", "saito", "wp", "symbolic", "numeric"} <= prefixes


def test_version(capsys):
    assert main(["--version"]) == 0
