"""Command-line interface: formats, exit codes, JSON certificates."""

import json

import pytest

from lcdcodes import cli, codes, refdata


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "2", "13", "5")
    assert code == 0
    assert out.strip() == "g=6 lcd_upper=5 rule=binary-odd-k-even-d"
    code, out, _ = run(capsys, "bound", "3", "14", "4")
    assert out.strip() == "g=9 lcd_upper=8 rule=ternary-d-div-3"


def test_bound_mod4_flag(capsys):
    _, out, _ = run(capsys, "bound", "2", "15", "4")
    assert "lcd_upper=8" in out
    _, out, _ = run(capsys, "bound", "2", "15", "4", "--mod4")
    assert "lcd_upper=7" in out and "rule=binary-d-div-4" in out


def test_check(capsys, tmp_path):
    p = tmp_path / "c.code"
    codes.save_code(refdata.build_paper_code("T11"), p)
    code, out, _ = run(capsys, "check", str(p))
    assert code == 0
    assert out.strip() == "3 11 4 6 3 true"


def test_simplex(capsys):
    _, out, _ = run(capsys, "simplex", "2", "3")
    lines = out.strip().splitlines()
    assert lines[0] == "2 3 7"
    assert len(lines) == 4


def test_cm(capsys):
    code, out, _ = run(capsys, "cm", "2", "3", "--m", "1111111")
    assert code == 0
    assert out.strip() == "2 7 3 4 3 false"


def test_cm_rejects_bad_length(capsys):
    code, _, err = run(capsys, "cm", "3", "4", "--m", "111")
    assert code != 0


def test_extend_and_shorten(capsys, tmp_path):
    src = tmp_path / "t11.code"
    codes.save_code(refdata.build_paper_code("T11"), src)
    dst = tmp_path / "t11x.code"
    code, _, err = run(capsys, "extend", str(src), "1", "-o", str(dst))
    assert code == 0
    ext = codes.load_code(dst)
    assert (ext.n, ext.k) == (51, 4)
    assert codes.min_weight(ext) == 33
    dst2 = tmp_path / "t11s.code"
    code, _, _ = run(capsys, "shorten", str(src), "1", "-o", str(dst2))
    assert code == 0
    assert codes.load_code(dst2).n == 10


def test_search_cm_json(capsys):
    code, out, _ = run(capsys, "search-cm", "3", "12", "4", "7",
                       "--goal", "empty")
    assert code == 0
    cert = json.loads(out)
    assert cert["kind"] == "exhaustive-nonexistence"
    assert cert["params"] == {"n": 12, "k": 4, "d": 7}


def test_search_cm_find_one(capsys):
    code, out, _ = run(capsys, "search-cm", "3", "11", "4", "6")
    cert = json.loads(out)
    assert cert["kind"] == "existence-witness"
    assert len(cert["witnesses"]) == 1


def test_method1_cli(capsys):
    code, out, _ = run(capsys, "method1", "2", "11", "3", "6",
                       "--goal", "empty")
    assert code == 0
    cert = json.loads(out)
    assert cert["kind"] == "exhaustive-nonexistence"


def test_highrate_cli(capsys):
    code, out, _ = run(capsys, "highrate", "2", "27", "5", "--goal", "empty")
    cert = json.loads(out)
    assert cert["kind"] == "exhaustive-nonexistence"


def test_reduce_cli(capsys):
    code, out, _ = run(capsys, "reduce", "2", "5", "30", "15")
    assert code == 0
    cert = json.loads(out)
    assert cert["kind"] == "exhaustive-nonexistence"
    assert "16s+15" in cert["conclusion"]


def test_verify_table_cli(capsys):
    code, out, _ = run(capsys, "verify-table", "r2-5")
    assert code == 0
    assert "16 pass" in out
    code, out, _ = run(capsys, "verify-table", "r2-5", "--json")
    assert json.loads(out)["summary"]["fail"] == 0


def test_paper_code_cli(capsys):
    code, out, _ = run(capsys, "paper-code", "T39")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("m=")
    assert lines[1] == "3 39 4 25"
    code, out, _ = run(capsys, "paper-code", "list")
    assert code == 0
    assert "H25" in out and "T11" in out


def test_paper_code_matrix(capsys):
    code, out, _ = run(capsys, "paper-code", "M11-5-5", "--matrix")
    assert code == 0
    assert out.splitlines()[0] == "3 5 11"


def test_unknown_table_errors(capsys):
    with pytest.raises(SystemExit):
        cli.main(["verify-table", "bogus"])


def test_budget_flag(capsys):
    code, out, _ = run(capsys, "search-cm", "3", "15", "4", "9",
                       "--goal", "empty", "--budget", "1000")
    cert = json.loads(out)
    assert cert["kind"] == "inconclusive"
