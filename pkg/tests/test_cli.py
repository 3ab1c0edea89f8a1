from __future__ import annotations

from hamiltonia.cli import main
from hamiltonia.constructions import build_circulant, build_complete, petersen
from hamiltonia.graph6 import from_graph6, to_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--family", "gnk", "--k", "5", "--m", "4")
    assert code == 0 and from_graph6(out.strip()).n == 24
    code, out, _ = run(capsys, "construct", "--spec", "family=gstar m=1")
    assert code == 0 and from_graph6(out.strip()).n == 16


def test_construct_bad_params(capsys):
    code, _, err = run(capsys, "construct", "--family", "gnk", "--k", "5", "--m", "1")
    assert code == 2 and "m >= 2" in err
    assert run(capsys, "construct")[0] == 2


def test_count(capsys, tmp_path):
    f = tmp_path / "in.g6"
    lines = [to_graph6(g) for g in (build_complete(5), build_circulant(7, [1, 2]), petersen())]
    f.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "count", "--in", str(f), "--oracle")
    assert code == 0
    assert [int(line.split()[1]) for line in out.splitlines()] == [12, 23, 0]


def test_count_malformed(capsys, tmp_path):
    f = tmp_path / "in.g6"
    f.write_text("D~{\nD~{?\n")
    code, _, err = run(capsys, "count", "--in", str(f))
    assert code == 3 and "line 2" in err


def test_formula(capsys):
    assert run(capsys, "formula", "--which", "ceil-h", "--k", "7", "--n", "14")[1].strip() == "156629"
    assert run(capsys, "formula", "--which", "gstar", "--n", "22")[1].strip() == "144"
    assert run(capsys, "formula", "--which", "menage", "--k", "6")[1].strip() == "744"
    assert run(capsys, "formula", "--which", "h", "--k", "4", "--n", "10")[1].strip() == "36"
    assert run(capsys, "formula", "--which", "gstar", "--n", "10")[0] == 2
    assert run(capsys, "formula", "--which", "h", "--k", "4")[0] == 2


def test_gen(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--n", "8", "--k", "3")
    assert code == 0 and len(out.splitlines()) == 5
    code, out, _ = run(capsys, "gen", "--n", "8", "--k", "3", "--all")
    assert len(out.splitlines()) == 6
    assert run(capsys, "gen", "--n", "30", "--k", "4")[0] == 2
    dest = tmp_path / "g.g6"
    assert run(capsys, "gen", "--n", "6", "--k", "3", "--out", str(dest))[0] == 0
    assert len(dest.read_text().splitlines()) == 2


def test_survey(capsys):
    code, out, _ = run(capsys, "survey", "--n", "7", "8", "--k", "4", "--workers", "1", "--no-timing")
    assert code == 0
    rows = out.splitlines()
    assert rows[1].startswith("7,4,2,2,23,24,") and rows[2].startswith("8,4,6,6,29,28,")
    code, out, _ = run(capsys, "survey", "--n", "13", "--k", "4")
    assert code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "named")
    assert code == 0 and "FAIL" not in out
