import io
import json
from importlib import resources

import jsonschema
import pytest

from genconn import __version__
from genconn.cli import run
from genconn.families import block
from genconn.graph6 import encode

SCHEMA = json.loads(resources.files("genconn").joinpath("schemas/output.schema.json").read_text())


def call(argv, stdin="", monkeypatch=None):
    out = io.StringIO()
    if monkeypatch is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(argv, out)
    return code, out.getvalue()


def call_json(argv, stdin="", monkeypatch=None):
    code, text = call(argv + ["--json"], stdin, monkeypatch)
    doc = json.loads(text)
    jsonschema.validate(doc, SCHEMA)
    assert doc["version"] == __version__
    return code, doc


@pytest.fixture
def b_file(tmp_path):
    path = tmp_path / "B.g6"
    path.write_text(encode(block("B")) + "\n")
    return str(path)


def test_schema_is_valid():
    jsonschema.Draft202012Validator.check_schema(SCHEMA)


def test_kappa_from_file(b_file):
    assert call(["kappa", "--k", "4", "--file", b_file]) == (0, "1\n")


def test_kappa_stdin_and_terminals(monkeypatch):
    assert call(["kappa", "--k", "3"], "D~{\n", monkeypatch) == (0, "3\n")  # K5
    code, doc = call_json(["kappa", "--k", "3", "--terminals", "0,1,2"], "D~{\n", monkeypatch)
    assert code == 0 and doc["results"][0]["kappa"] == 3
    code, text = call(["kappa", "--k", "n", "--min"], "D~{\n", monkeypatch)
    assert (code, text) == (0, "2 2\n")


def test_classify(monkeypatch):
    code, doc = call_json(["classify", "--oracle", "--ears", "2"], "C^\nCl\n", monkeypatch)
    assert code == 0
    for row in doc["results"]:
        assert row["kappa3_is_one"] == row["oracle_kappa3_is_one"]
        assert row["kappa4_is_one"] == row["oracle_kappa4_is_one"]


def test_f_table_csv_json():
    code, text = call(["f", "--n", "6", "--k", "3"])
    assert code == 0 and "  6   3    7" in text
    code, text = call(["f", "--n", "5", "--n-max", "6", "--k", "4", "--csv"])
    assert text.splitlines() == ["n,k,f,count,method", "5,4,6,5,structural", "6,4,7,19,structural"]
    code, doc = call_json(["f", "--n", "3", "--n-max", "5"])
    assert [(r["n"], r["k"], r["f_value"]) for r in doc["results"]] == [
        (3, 3, 3), (4, 3, 4), (4, 4, 5), (5, 3, 5), (5, 4, 6), (5, 5, 7)
    ]
    assert all("elapsed" not in r for r in doc["results"])
    code, doc = call_json(["f", "--n", "6", "--k", "5", "--method", "oracle", "--timing"])
    assert doc["results"][0]["conjecture"] and "elapsed" in doc["results"][0]


def test_families_and_blocks(monkeypatch):
    code, text = call(["families", "G", "--n", "6"])
    assert code == 0 and len(text.split()) == 1
    code, text = call(["families", "H", "--member"], encode(block("B")) + "\n", monkeypatch)
    assert text == f"{encode(block('B'))} 1\n"
    code, doc = call_json(["blocks"])
    assert [r["name"] for r in doc["results"]][:3] == ["K1", "A", "B"]


def test_enumerate():
    assert call(["enumerate", "--n", "5", "--count"]) == (0, "21\n")
    assert call(["enumerate", "--n", "5", "--all", "--count"]) == (0, "34\n")
    code, doc = call_json(["enumerate", "--n", "4"])
    assert doc["results"][0]["count"] == 6


def test_counterexample():
    code, text = call(["counterexample", "--check"])
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == "H{dAH?`" and lines[1] == "kappa5=1"
    code, doc = call_json(["counterexample", "--check"])
    assert doc["results"][0]["n"] == 9 and doc["results"][0]["kappa5_is_one"]


def test_verify_single():
    code, text = call(["verify", "T3", "--n-max", "6"])
    assert code == 0 and text.endswith("ALL PASS\n")
    code, doc = call_json(["verify", "CEX"])
    assert code == 0 and doc["results"][0]["passed"]


@pytest.mark.parametrize(
    "argv, stdin",
    [
        (["nope"], ""),
        (["kappa"], "C~\n"),  # missing --k
        (["kappa", "--k", "3", "--bogus"], "C~\n"),
        (["kappa", "--k", "3"], "not graph6\n"),
        (["kappa", "--k", "3"], ""),  # no graphs
        (["kappa", "--k", "3"], "C?\n"),  # disconnected
        (["kappa", "--k", "3"], "J" + "~" * 9 + "\n"),  # order 11 > budget
        (["kappa", "--k", "3", "--file", "/nonexistent.g6"], ""),
        (["f", "--n", "8", "--k", "3", "--method", "oracle"], ""),
        (["f", "--n", "9", "--k", "3"], ""),
        (["f", "--n", "7", "--k", "5"], ""),  # no structural classifier
        (["enumerate", "--n", "9"], ""),
        (["families", "G"], ""),
        (["verify", "T9"], ""),
    ],
)
def test_usage_errors_exit_2(argv, stdin, monkeypatch, capsys):
    code, _ = call(argv, stdin, monkeypatch)
    assert code == 2


def test_budget_flags_raise_limits():
    assert call(["f", "--n", "8", "--k", "3", "--method", "oracle", "--oracle-max", "7"])[0] == 2
    code, text = call(["enumerate", "--n", "3", "--max-n", "3", "--count"])
    assert (code, text) == (0, "2\n")


def test_byte_identical_output(monkeypatch):
    runs = [call(["f", "--n", "4", "--n-max", "6", "--json", "--graphs"]) for _ in range(2)]
    assert runs[0] == runs[1]
    runs = [call(["classify", "--json"], "C^\nD?{\n", monkeypatch) for _ in range(2)]
    assert runs[0] == runs[1]


def test_verify_failure_exits_1(monkeypatch):
    from genconn import verify

    def broken(**_):
        report = verify.VerifyReport("CEX")
        report.add("forced failure", False)
        report.counterexamples.append("A_")
        return report

    monkeypatch.setitem(verify.RUNNERS, "CEX", broken)
    code, text = call(["verify", "CEX"])
    assert code == 1 and "counterexample A_" in text and text.endswith("FAILED\n")
    code, doc = call_json(["verify", "CEX"])
    assert code == 1 and doc["results"][0]["counterexamples"] == ["A_"]


@pytest.mark.slow
def test_verify_all_is_green():
    code, doc = call_json(["verify", "all"])
    assert code == 0
    assert [r["id"] for r in doc["results"]] == ["T3", "T4", "T-n", "L1", "P1", "P2", "NW", "CEX",
                                                 "LB", "BLOCKS", "INFRA"]
    assert all(r["passed"] and not r["counterexamples"] for r in doc["results"])
