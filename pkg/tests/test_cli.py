import json
import subprocess
import sys

import pytest

from arrangis.cli import main

from helpers import DATA


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_combinatorics(capsys):
    code, out, _ = run(capsys, "combinatorics", "--arrangement", str(DATA / "maclane_plus.json"))
    doc = json.loads(out)
    assert code == 0 and doc["valid"]
    assert ["L0", "L1", "L2", "L3"] in doc["points"]


def test_two_lines(tmp_path, capsys):
    f = tmp_path / "two.json"
    f.write_text(json.dumps({"lines": [{"label": "A", "coeffs": ["1", "0", "0"]},
                                       {"label": "B", "coeffs": ["0", "1", "0"]}]}))
    code, out, _ = run(capsys, "combinatorics", "--arrangement", str(f))
    assert code == 0 and json.loads(out)["points"] == [["A", "B"]]


@pytest.mark.parametrize("content, msg", [("", "line 1, column 1"), ("{", "line 1"), ("[]", "lines"),
                                          ('{"lines": [{"label": "A", "coeffs": ["1"]}]}', "three")])
def test_bad_arrangement_files(tmp_path, capsys, content, msg):
    f = tmp_path / "bad.json"
    f.write_text(content)
    code, _, err = run(capsys, "combinatorics", "--arrangement", str(f))
    assert code == 2 and msg in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "combinatorics", "--arrangement", "/nonexistent.json")
    assert code == 2 and "nonexistent" in err


def test_inner_cyclic(capsys):
    code, out, _ = run(capsys, "inner-cyclic", "--arrangement", str(DATA / "maclane_plus.json"), "--order", "3")
    assert code == 0 and len(json.loads(out)["characters"]) == 2
    code, out, _ = run(capsys, "inner-cyclic", "--arrangement", str(DATA / "pencil5.json"), "--order", "12")
    assert code == 0 and json.loads(out)["characters"] == []
    code, out, _ = run(capsys, "inner-cyclic", "--arrangement", str(DATA / "ceva7.json"), "--order", "2")
    want = json.loads((DATA / "ceva7_character.json").read_text())
    assert want in [c["character"] for c in json.loads(out)["characters"]]


def test_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("ARRANGIS_ENUM_CAP", "5")
    code, _, err = run(capsys, "inner-cyclic", "--arrangement", str(DATA / "ceva7.json"), "--order", "2")
    assert code == 4 and "cap" in err


@pytest.mark.parametrize("arr, want", [("ceva7", "1/2"), ("maclane_plus", "2/3"), ("maclane_minus", "1/3")])
def test_invariant(capsys, arr, want):
    char = "ceva7_character" if arr == "ceva7" else "maclane_character"
    cycle = "L0,P:L0:L3,L3,P:L3:L6,L6,P:L0:L6" if arr == "ceva7" else "L0,*,L6,*,L5,*"
    code, out, _ = run(capsys, "invariant", "--arrangement", str(DATA / f"{arr}.json"),
                       "--character", str(DATA / f"{char}.json"), "--cycle", cycle)
    doc = json.loads(out)
    assert code == 0 and doc["value"] == want
    assert list(doc) == ["value", "witness", "witness_note", "infinity", "source", "seed"]


def test_invariant_from_wiring_file(capsys):
    code, out, _ = run(capsys, "invariant", "--wiring", str(DATA / "maclane_plus.wiring"),
                       "--character", str(DATA / "maclane_character.json"),
                       "--cycle", "L0,P:L0:L6,L6,P:L5:L6,L5,P:L0:L5")
    doc = json.loads(out)
    assert code == 0 and doc["value"] == "2/3" and doc["witness"] == {"L4": -1, "L8": -1}


def test_invariant_explains_failed_condition(capsys):
    code, _, err = run(capsys, "invariant", "--arrangement", str(DATA / "ceva7.json"),
                       "--character", str(DATA / "ceva7_character.json"), "--cycle", "L0,*,L1,*,L3,*")
    assert code == 2 and "condition 1" in err


def test_depth_text_and_output(tmp_path, capsys):
    out = tmp_path / "d.txt"
    code, _, _ = run(capsys, "depth", "--arrangement", str(DATA / "ceva7.json"),
                     "--character", str(DATA / "ceva7_character.json"), "--format", "text", "--output", str(out))
    assert code == 0 and out.read_text().startswith("depth 2")


def test_depth_without_unramified_lines(tmp_path, capsys):
    char = tmp_path / "c.json"
    char.write_text(json.dumps({"order": 5, "exponents": {f"L{i}": "1/5" for i in range(5)}}))
    code, out, _ = run(capsys, "depth", "--arrangement", str(DATA / "pencil5.json"), "--character", str(char))
    doc = json.loads(out)
    assert code == 0 and doc["depth"] == 0 and doc["matrix"]["entries"] == []


def test_wiring_command_is_deterministic(capsys):
    outs = {run(capsys, "wiring", "--arrangement", str(DATA / "maclane_plus.json"), "--format", "text")[1]
            for _ in range(2)}
    assert len(outs) == 1
    assert next(iter(outs)).startswith("strands 8 labels")


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["invariant", "--character", "x"])
    assert err.value.code == 2


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "arrangis.cli", "combinatorics", "--arrangement",
                           str(DATA / "ceva7.json"), "--format", "text"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("lines: L0")
