import csv
import io
import json

import pytest

from hodgelab.cli import main
from hodgelab.report import render
from hodgelab.scenarios import ScenarioConfig, ScenarioError, run_scenario


@pytest.fixture(scope="module")
def dan_doc():
    return run_scenario(ScenarioConfig("dan-k1", 1, 5))


def test_dan_scenario_passes(dan_doc):
    assert dan_doc["all_passed"]
    assert dan_doc["ideals"]["intersection"]["hilbert"] == [1, 3, 5, 7, 6, 4, 2]
    assert dan_doc["gram"]["shape"] == [4, 3]


def test_formats_render(dan_doc):
    assert json.loads(render(dan_doc, "json"))["config"]["family"] == "dan-k1"
    rows = list(csv.reader(io.StringIO(render(dan_doc, "csv"))))
    assert rows[0] == ["section", "name", "key", "value"]
    assert len(rows) > 20
    md = render(dan_doc, "markdown")
    assert "| check |" in md


def test_run_command_writes_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = main(["run", "--family", "dan-k1", "--k", "1", "--d", "5", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["all_passed"] is True
    assert "timing" not in doc


def test_byte_identical_reports(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["run", "--family", "dan-k1", "--d", "5", "--seed", "2", "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_gram_command_custom_input(tmp_path, capsys):
    f = tmp_path / "f.txt"
    f.write_text("# Dan quintic\nx0*x1*(x0^3+x1^3+x2^3+x3^3)+x3*(x0^4+x1^4+x2^4+x3^4)\n")
    code = main(["gram", "--f", str(f), "--plane1", "x0,x3", "--plane2", "x1,x3", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["gram"]["shape"] == [4, 3]
    assert doc["config"]["family"] == "custom"


def test_singular_input_exit_code(tmp_path, capsys):
    f = tmp_path / "f.txt"
    f.write_text("x0*x1*(x0^3+x1^3+x2^3)+x3*(x0^4+x1^4+x2^4)\n")
    code = main(["gram", "--f", str(f), "--plane1", "x0,x3", "--plane2", "x1,x3"])
    assert code == 3
    assert "singular" in capsys.readouterr().err


def test_hilbert_command(tmp_path, capsys):
    f = tmp_path / "ideal.txt"
    f.write_text("x0^2\nx1^2; x2^2\n")
    assert main(["hilbert", "--ideal", str(f), "--max-degree", "4"]) == 0
    lines = capsys.readouterr().out.split("\n")
    assert lines[:5] == ["0 1", "1 3", "2 3", "3 1", "4 0"]


def test_bad_config_rejected():
    with pytest.raises(ScenarioError):
        ScenarioConfig("x-kd", 2, 3)
    with pytest.raises(ScenarioError):
        ScenarioConfig("lowdeg-d4k3", 3, 5)
    with pytest.raises(SystemExit):
        main(["run", "--family", "nonsense"])


def test_failed_check_exit_code(capsys):
    # the square Gram matrix of X_{2,6} has no 1x2 block, so one check fails
    code = main(["run", "--family", "x-kd", "--k", "2", "--d", "6"])
    assert code == 2
    doc = json.loads(capsys.readouterr().out)
    failed = [c["name"] for c in doc["checks"] if not c["passed"]]
    assert failed == ["all four block shapes occur"]
