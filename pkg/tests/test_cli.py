import json
import subprocess
import sys

from xel.cli import main
from xel.xml_io import parse_xel

from conftest import BROKEN_REF, SAMPLE_ORDER
from helpers import random_xes
import random


def test_validate_ok(capsys):
    assert main(["validate", str(SAMPLE_ORDER)]) == 0
    out = capsys.readouterr().out
    assert "0 error(s), 0 warning(s)" in out


def test_validate_broken_ref(capsys):
    assert main(["validate", str(BROKEN_REF)]) == 1
    captured = capsys.readouterr()
    assert "DANGLING_ACTIVITY_REF" in captured.err
    assert captured.err.count("\n") == 1  # single machine-parseable line
    assert captured.err.startswith("error[VALIDATION_FAILED]")
    assert "DANGLING_ACTIVITY_REF" in captured.out
    assert "1 error(s)" in captured.out


def test_validate_missing_file(capsys):
    assert main(["validate", "nope.xel"]) == 1
    assert capsys.readouterr().err.startswith("error[IO]")


def test_validate_syntax_error(tmp_path, capsys):
    bad = tmp_path / "bad.xel"
    bad.write_bytes(b"<xel version='1.0'><meta>")
    assert main(["validate", str(bad)]) == 1
    assert capsys.readouterr().err.startswith("error[XML_SYNTAX]")


def test_discover_dot_deterministic(capsysbinary):
    assert main(["discover", str(SAMPLE_ORDER), "--format", "dot"]) == 0
    first = capsysbinary.readouterr().out
    assert main(["discover", str(SAMPLE_ORDER), "--format", "dot"]) == 0
    assert capsysbinary.readouterr().out == first
    assert first.startswith(b"digraph")


def test_discover_json_to_file(tmp_path):
    out = tmp_path / "net.json"
    assert main(["discover", str(SAMPLE_ORDER), "--format", "json", "-o", str(out)]) == 0
    payload = json.loads(out.read_bytes())
    assert {n["id"] for n in payload["nodes"] if n["kind"] == "transition"} == {
        "register", "approve", "pack", "ship",
    }


def test_flatten_stdout(capsysbinary):
    assert main(["flatten", str(SAMPLE_ORDER), "--granularity", "step"]) == 0
    out = capsysbinary.readouterr().out
    assert out.startswith(b"case_id,activity,step,timestamp,objects")
    assert out.count(b"\n") == 19  # header + 18 step instances


def test_convert_xes(tmp_path):
    xes_path = tmp_path / "log.xes"
    xes_path.write_bytes(random_xes(random.Random(5), n_traces=4))
    out = tmp_path / "out.xel"
    assert main(["convert", "--from", "xes", str(xes_path), "-o", str(out)]) == 0
    log = parse_xel(out.read_bytes())
    assert len(log.cases) == 4


def test_replay_route(capsysbinary):
    assert main(["replay", str(SAMPLE_ORDER), "--case", "K2"]) == 0
    payload = json.loads(capsysbinary.readouterr().out)
    assert payload["caseId"] == "K2"
    assert payload["complete"] is True


def test_replay_unknown_case(capsys):
    assert main(["replay", str(SAMPLE_ORDER), "--case", "K9"]) == 1
    assert capsys.readouterr().err.startswith("error[NOT_FOUND]")


def test_discover_rejects_invalid_log(capsys):
    assert main(["discover", str(BROKEN_REF)]) == 1
    assert "error[VALIDATION_FAILED]" in capsys.readouterr().err


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "xel", "validate", str(SAMPLE_ORDER)],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "0 error(s)" in result.stdout
