import io
import json
import subprocess
import sys

import pytest

from mbdom.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_path(capsys):
    code, out, _ = run(capsys, "solve", "--family", "path", "--n", "7", "--bias", "1", "--first", "dominator")
    assert code == 0 and json.loads(out)["value"] == 3


def test_solve_star_staller_first(capsys):
    code, out, _ = run(capsys, "solve", "--family", "star", "--k", "2", "--first", "staller")
    assert code == 0 and json.loads(out)["value"] == "infinity"


def test_solve_dominated_objective(capsys):
    code, out, _ = run(capsys, "solve", "--family", "fraction-sharp", "--n", "8", "--b", "1",
                       "--first", "staller", "--objective", "dominated")
    assert json.loads(out)["value"] == 6


def test_malformed_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("3 2\n0 1\n1 x\n")
    code, _, err = run(capsys, "solve", "--graph", str(f))
    assert code == 2 and "line 3" in err


def test_usage_errors(capsys):
    assert run(capsys, "solve")[0] == 2
    assert run(capsys, "solve", "--family", "path")[0] == 2
    assert run(capsys, "solve", "--family", "path", "--n", "40")[0] == 2
    assert run(capsys, "check-good", "--family", "cycle", "--n", "4")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["verify", "--suite", "nope"])
    assert e.value.code == 2


def test_check_good(tmp_path, capsys):
    f = tmp_path / "k13.txt"
    assert run(capsys, "construct", "--family", "star", "--k", "3", "-o", str(f))[0] == 0
    assert run(capsys, "check-good", "--graph", str(f), "--bias", "3")[1].strip() == "3-good: yes"
    assert run(capsys, "check-good", "--graph", str(f), "--bias", "2")[1].strip() == "2-good: no; witness: ∅ | 0"
    assert run(capsys, "check-good", "--graph", str(f), "--bias", "1")[1].strip() == "1-good: no; witness: ∅ | 0"
    out = run(capsys, "check-good", "--graph", str(f), "--bias", "1", "--first", "dominator")[1]
    assert out.strip() == "winnable: yes; A={0}"
    data = json.loads(run(capsys, "check-good", "--graph", str(f), "--json")[1])
    assert data["good"] is False and data["witness"] == {"sequence": [], "u": 0}


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--family", "tkb", "--k", "8", "--b", "2")
    assert code == 0 and out.splitlines()[1] == "8 7"
    data = json.loads(run(capsys, "construct", "--family", "ary-stack", "--b", "1", "--k", "2", "--json")[1])
    assert data["n"] == 14


def test_verify_pass_and_fail(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "beck", "--trials", "50", "--seed", "7")
    assert code == 0 and out.strip().endswith("PASS")
    code, out, _ = run(capsys, "verify", "--suite", "powers", "--max-n", "8", "--min-n", "2")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--suite", "powers", "--max-n", "4")
    assert code == 1 and "FAIL  path n=1" in out and "witness: D 0" in out
    code, out, _ = run(capsys, "verify", "--suite", "characterization", "--max-n", "7", "--bias", "1,2", "--json")
    assert code == 0 and json.loads(out)["status"] == "PASS"


def test_verify_is_deterministic(capsys):
    a = run(capsys, "verify", "--suite", "mindeg", "--trials", "5", "--seed", "3", "--json")[1]
    b = run(capsys, "verify", "--suite", "mindeg", "--trials", "5", "--seed", "3", "--json")[1]
    assert a == b


def test_play_engine_wins_p3(capsys, monkeypatch):
    code, out, _ = run(capsys, "play", "--family", "path", "--n", "3", "--human", "staller",
                       stdin="", monkeypatch=monkeypatch)
    assert code == 0 and "engine: D 1" in out and "DominatorWon 1" in out


def test_play_human_dominator_loses(capsys, monkeypatch):
    code, out, _ = run(capsys, "play", "--family", "star", "--k", "2", "--human", "dominator",
                       "--first", "staller", stdin="7\n0\n1\n", monkeypatch=monkeypatch)
    assert code == 0 and "engine: S 0" in out
    assert out.count("illegal input") == 2 and "StallerWon" in out


def test_play_quit(capsys, monkeypatch):
    code, out, _ = run(capsys, "play", "--family", "path", "--n", "5", stdin="quit\n", monkeypatch=monkeypatch)
    assert code == 0 and out.rstrip().endswith("quit")


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "mbdom.cli", "solve", "--family", "path", "--n", "4"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["value"] == 2
