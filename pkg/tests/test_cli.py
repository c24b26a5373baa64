import json
import subprocess
import sys

import pytest

from qhorn.cli import main


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("group,mode,count", [("G2", "th3", 48), ("A1", "th3", 10), ("Sp4", "max", 43)])
def test_generate_counts(group, mode, count, capsys):
    code, out, _ = run(["generate", "--group", group, "--mode", mode], capsys)
    assert code == 0
    assert out.rstrip().splitlines()[-1] == f"# {group} {mode}: {count} inequalities"


def test_generate_json_deterministic_across_jobs(capsys):
    _, a, _ = run(["generate", "-g", "Sp(6)", "-f", "json", "-j", "1"], capsys)
    _, b, _ = run(["generate", "-g", "Sp(6)", "-f", "json", "-j", "3"], capsys)
    assert a == b
    assert json.loads(a)["count"] == 200


def test_generate_to_file(tmp_path, capsys):
    path = tmp_path / "g2.csv"
    code, out, _ = run(["generate", "-g", "G2", "-f", "csv", "--out", str(path)], capsys)
    assert code == 0 and out == ""
    assert len(path.read_text().splitlines()) == 49


@pytest.mark.parametrize("group,f,v", [("G2", 48, 30), ("A1", 4, 4)])
def test_polytope(group, f, v, capsys):
    code, out, _ = run(["polytope", "-g", group, "-f", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and (doc["facets"], doc["vertices"]) == (f, v)


def test_polytope_full_a1(capsys):
    code, out, _ = run(["polytope", "-g", "A1", "--full"], capsys)
    lines = out.splitlines()
    verts = lines[lines.index("# vertices") + 1:]
    assert sorted(verts) == ["0 0 0", "0 1 1", "1 0 1", "1 1 0"]


@pytest.mark.parametrize("pts,status", [
    (["0", "0", "0"], "boundary"),
    (["1/4", "1/4", "1/4"], "inside"),
    (["1", "1", "0"], "boundary"),
    (["1", "1", "1"], "outside"),
])
def test_member_a1(pts, status, capsys):
    args = ["member", "-g", "A1"]
    for p in pts:
        args += ["-p", p]
    code, out, _ = run(args, capsys)
    assert code == 0 and out.splitlines()[0] == status


def test_member_json_and_t_flags(capsys):
    code, out, _ = run(["member", "-g", "A1", "--t1", "1", "--t2", "1", "--t3", "1", "-f", "json"], capsys)
    doc = json.loads(out)
    assert doc["verdict"] == "outside" and doc["violated"]


@pytest.mark.parametrize("args", [
    ["member", "-g", "A1", "-p", "1", "-p", "x", "-p", "0"],
    ["member", "-g", "A1", "-p", "1", "-p", "1"],
    ["member", "-g", "G2", "-p", "1", "-p", "1", "-p", "1"],
    ["table", "-g", "X9"],
    ["generate", "-g", "G2", "-m", "bogus"],
    ["generate"],
    ["generate", "-g", "E6"],
])
def test_config_errors_exit_2(args, capsys):
    code, _, err = run(args, capsys)
    assert code == 2 and "error" in err


def test_table_rows(capsys):
    code, out, _ = run(["table", "-g", "G2", "-g", "Sp(4)"], capsys)
    lines = out.splitlines()
    assert lines[1].split() == ["G2", "103", "82", "79", "48", "30", "48"]
    assert lines[2].split() == ["Sp(4)", "43", "42", "41", "38", "13", "38"]
    assert "interpretation" in lines[-1]


def test_table_skip_polytope_renders_question_marks(capsys):
    code, out, _ = run(["table", "-g", "G2", "--skip-polytope"], capsys)
    assert out.splitlines()[1].split()[-2:] == ["?", "?"]


def test_pw_scan(capsys):
    code, out, _ = run(["pw-scan", "-g", "G2"], capsys)
    assert code == 0
    assert "beta=2 d=1 h_PW=[0, 1] min<h_PW,alpha>=-1" in out
    assert out.rstrip().endswith("violations: 0")


def test_internal_failure_exit_1(monkeypatch, capsys):
    import qhorn.cli as cli

    def boom(cfg):
        raise RuntimeError("boom")

    monkeypatch.setitem(cli.COMMANDS, "generate", boom)
    code, _, err = run(["generate", "-g", "G2"], capsys)
    assert code == 1 and "internal error" in err


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "qhorn", "generate", "-g", "A1"], capture_output=True, text=True, check=True
    )
    assert res.stdout.rstrip().endswith("10 inequalities")
