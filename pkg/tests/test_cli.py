import json

import pytest

from nilhecke.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("group, w, w2, expect", [
    ("A2", "12", "21", "121"), ("A2", "", "1", "1"), ("affine:A1", "21", "21", "2121"),
])
def test_demazure(capsys, group, w, w2, expect):
    code, out, _ = run(capsys, "demazure", "--group", group, w, w2)
    assert code == 0 and out == expect + "\n"


def test_involutions_json(capsys):
    code, out, _ = run(capsys, "involutions", "--group", "A2", "--star", "id", "--max-len", "3",
                       "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert rows == [
        {"word": "", "len": 0, "phi": 0, "norm": 0},
        {"word": "1", "len": 1, "phi": 1, "norm": 1},
        {"word": "2", "len": 1, "phi": 1, "norm": 1},
        {"word": "121", "len": 3, "phi": 1, "norm": 2},
    ]


@pytest.mark.parametrize("star", ["swap:1-2", "perm:1-2,2-1", "minus-w0"])
def test_involutions_swap_star(capsys, star):
    code, out, _ = run(capsys, "involutions", "--group", "A2", "--star", star, "--max-len", "3",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["word,len,phi,norm", ",0,0,0", "12,2,0,1", "21,2,0,1", "121,3,1,2"]


def test_involutions_max_len_zero(capsys):
    code, out, _ = run(capsys, "involutions", "--group", "affine:A2", "--max-len", "0", "--format", "json")
    assert code == 0 and len(out.splitlines()) == 1


def test_involutions_dot(capsys):
    code, out, _ = run(capsys, "involutions", "--group", "A2", "--max-len", "3", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert '"e" -> "1" [label="1:sx"];' in out
    assert '"1" -> "121" [label="2:sxs*"];' in out


def test_pi(capsys):
    assert run(capsys, "pi", "--group", "A2", "12")[1] == "121\n"
    assert run(capsys, "pi", "--group", "A2", "")[1] == "\n"
    code, out, _ = run(capsys, "pi", "--group", "A2", "--format", "json", "12")
    assert json.loads(out) == {"w": "12", "pi": "121", "sign": 1, "len": 3, "phi": 1, "norm": 2}


def test_jpi(capsys):
    assert run(capsys, "jpi", "--group", "affine:A1", "--j", "1", "12")[1] == "121\n"
    code, out, _ = run(capsys, "jpi", "--group", "affine:A2", "--star", "swap:1-2", "--j", "1,2", "1213")
    assert out == "1213121\n"
    code, _, err = run(capsys, "jpi", "--group", "affine:A1", "--j", "1", "2")
    assert code == 2 and "not in ^JW" in err


@pytest.mark.parametrize("typ, k, rows", [("A1", "2", 6), ("A2", "1", 48), ("A1", "0", 2)])
def test_affine_table(capsys, typ, k, rows):
    code, out, _ = run(capsys, "affine-table", typ, k, "--format", "json")
    data = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert len(data) == rows and all(r["match"] for r in data)


def test_affine_translations(capsys):
    code, out, _ = run(capsys, "affine-table", "A1", "--translations", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "t,dominant,coset_rep,jpi,pi_prime,factorization"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "monoid")
    assert code == 0 and json.loads(out)["pass"] is True
    code, out, _ = run(capsys, "verify", "oracle-u0", "--max-len", "3")
    assert code == 0 and json.loads(out)["pass"] is True
    code, _, err = run(capsys, "verify", "empty-suite")
    assert code == 2 and "unknown suite" in err


def test_verify_reports_failures(capsys, monkeypatch):
    from nilhecke import verify
    monkeypatch.setitem(verify.SUITES, "monoid", lambda bound: ["broken"])
    code, out, _ = run(capsys, "verify", "monoid")
    assert code == 1 and json.loads(out)["failures"] == ["broken"]


def test_affine_table_mismatch_exit_code(capsys, monkeypatch):
    from nilhecke import cli
    monkeypatch.setattr(cli, "table_rows", lambda ctx, k: [{"match": False}])
    code, _, _ = run(capsys, "affine-table", "A1", "1")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["demazure", "--group", "A2", "13", "1"],
    ["demazure", "--group", "Z7", "1", "1"],
    ["involutions", "--group", "A2", "--star", "perm:1-1,2-3"],
    ["involutions", "--group", "A2", "--star", "rotate"],
    ["involutions", "--group", "A2", "--max-len", "-1"],
    ["jpi", "--group", "A2", "--j", "x", "1"],
    ["nonsense"],
    [],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_group_from_json_file_and_comma_words(capsys, tmp_path):
    n = 10
    cartan = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    path = tmp_path / "a10.json"
    path.write_text(json.dumps({"rank": n, "cartan": cartan, "name": "A10"}))
    code, out, _ = run(capsys, "demazure", "--group", f"@{path}", "10,9", "9,10")
    assert code == 0 and out == "9,10,9\n"
    assert main(["demazure", "--group", f"@{path}", "109", "9"]) == 2


def test_out_file_and_determinism(capsys, tmp_path):
    p1, p2 = tmp_path / "a.txt", tmp_path / "b.txt"
    for p in (p1, p2):
        assert main(["involutions", "--group", "B3", "--max-len", "9", "--format", "json", "--out", str(p)]) == 0
    assert p1.read_bytes() == p2.read_bytes()
    assert capsys.readouterr().out == ""
