import io
import json
import subprocess
import sys

import pytest

from permcoh.cli import main

SCRIPT = """\
gens a! b
mor e = eight(a)
mor xi = beta(a | a') ; inv(eta(a))
mor c = eps(a)
mor s = beta(b | b) ; beta(b | b)
mor i = id(b b)
check s == i
"""

FAILING = SCRIPT + "check xi == c\n"


@pytest.fixture
def script(tmp_path):
    p = tmp_path / "ok.pcoh"
    p.write_text(SCRIPT)
    q = tmp_path / "bad.pcoh"
    q.write_text(FAILING)
    return p, q


def test_check_ok(script, capsys):
    assert main(["check", str(script[0])]) == 0
    assert capsys.readouterr().out == "ok   check s == i: equal\n1 passed, 0 failed\n"


def test_check_failure_json(script, capsys):
    assert main(["--json", "check", str(script[1])]) == 1
    data = json.loads(capsys.readouterr().out)
    assert data["results"][1]["witnesses"] == [
        {"generator": "a", "kind": "parity", "lhs": "odd", "rhs": "even"}
    ]


def test_json_flag_after_subcommand(script, capsys):
    assert main(["check", "--json", str(script[0])]) == 0
    assert json.loads(capsys.readouterr().out)["summary"] == {"passed": 1, "failed": 0}


def test_check_several_files(script, capsys):
    assert main(["check", str(script[0]), str(script[1])]) == 1
    out = capsys.readouterr().out
    assert f"== {script[0]}" in out and f"== {script[1]}" in out


def test_check_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("gens a\nmor e = eta(a)\n"))
    assert main(["check", "-"]) == 2
    assert "2:9: not-invertible" in capsys.readouterr().err


def test_parity_and_perm(script, capsys):
    assert main(["parity", "--gen", "a", f"{script[0]}#e"]) == 0
    assert capsys.readouterr().out == "odd\n"
    assert main(["perm", "--gen", "b", f"{script[0]}#s"]) == 0
    assert capsys.readouterr().out == "[1,2]\n"
    assert main(["--json", "parity", "--gen", "a", f"{script[0]}#xi"]) == 0
    assert json.loads(capsys.readouterr().out) == {"morphism": "xi", "generator": "a", "parity": "odd"}


def test_invariant_errors(script, capsys):
    assert main(["parity", "--gen", "a", f"{script[0]}#nope"]) == 2
    assert main(["parity", "--gen", "b", f"{script[0]}#e"]) == 2
    assert main(["perm", "--gen", "a", f"{script[0]}#e"]) == 2
    assert main(["parity", "--gen", "a", str(script[0])]) == 2


def test_missing_file(capsys):
    assert main(["check", "/nonexistent/x.pcoh"]) == 2


def test_fmt(script, capsys):
    assert main(["fmt", str(script[0])]) == 0
    out = capsys.readouterr().out
    assert out.startswith("gens a! b\n")


def test_module_entry_point(script):
    r = subprocess.run([sys.executable, "-m", "permcoh", "check", str(script[0])], capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.endswith("1 passed, 0 failed\n")
