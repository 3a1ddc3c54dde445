import csv
import json

import pytest

from stpath.cli import main, parse_genspec
from stpath.gen import gen_random
from stpath.pipeline import CSV_COLUMNS, SolutionReport


@pytest.fixture
def star_file(tmp_path, star):
    f = tmp_path / "star.txt"
    f.write_text(star.to_text())
    return f


def test_solve_prints_and_writes_json(star_file, tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["solve", str(star_file), "--verify", "--json", str(out)]) == 0
    text = capsys.readouterr().out
    assert "lp value   4" in text and "cost       4" in text
    report = SolutionReport.from_json(out.read_text())
    assert report.id == "star" and report.opt == 4


def test_solve_timings_flag(star_file, tmp_path):
    out = tmp_path / "r.json"
    main(["solve", str(star_file), "--json", str(out), "--timings"])
    assert set(json.loads(out.read_text())["timings"]) >= {"relaxation", "tjoin", "shortcut"}


def test_solve_bad_input(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("3 1 0\n0 1\n")
    assert main(["solve", str(f)]) == 2
    assert "error" in capsys.readouterr().err
    assert main(["solve", str(tmp_path / "missing.txt")]) == 2


def test_solve_too_large(tmp_path, capsys):
    f = tmp_path / "big.txt"
    f.write_text(gen_random(13, 12, 0).to_text())
    assert main(["solve", str(f)]) == 2
    assert "exceeds" in capsys.readouterr().err


def test_gen_random_to_file(tmp_path):
    out = tmp_path / "g.txt"
    assert main(["gen", "random", "--n", "6", "--m", "7", "--seed", "42", "--out", str(out)]) == 0
    assert out.read_text() == gen_random(6, 7, 42).to_text()


def test_gen_gap_stdout(capsys):
    assert main(["gen", "gap", "--k", "2"]) == 0
    assert capsys.readouterr().out.splitlines()[0].split()[:2] == ["5", "6"]


def test_gen_rejects_bad_params(capsys):
    assert main(["gen", "gap", "--k", "1"]) == 2
    assert main(["gen", "random", "--n", "4", "--m", "9"]) == 2


def test_batch_empty_directory(tmp_path, capsys):
    assert main(["batch", str(tmp_path)]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["instances"] == 0 and summary["failures"] == []


def test_batch_isolates_malformed_file(tmp_path, capsys, star):
    (tmp_path / "a_good.txt").write_text(star.to_text())
    (tmp_path / "b_bad.txt").write_text("not a graph\n")
    (tmp_path / "c_good.txt").write_text(gen_random(6, 8, 1).to_text())
    csv_out, json_out = tmp_path.parent / "out.csv", tmp_path.parent / "out.json"
    code = main(["batch", str(tmp_path), "--verify", "--csv", str(csv_out), "--json", str(json_out)])
    assert code == 1
    summary = json.loads(capsys.readouterr().out)
    assert summary["instances"] == 3 and summary["solved"] == 2
    assert [f["id"] for f in summary["failures"]] == ["b_bad"]
    assert summary["failures"][0]["stage"] == "parse"
    with open(csv_out) as fh:
        rows = list(csv.DictReader(fh))
    assert list(rows[0]) == CSV_COLUMNS
    assert [r["id"] for r in rows] == ["a_good", "c_good"]
    payload = json.loads(json_out.read_text())
    assert len(payload["reports"]) == 2


def test_batch_genspec(capsys):
    assert main(["batch", "random:count=8,n=4-7,seed=3", "--verify"]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["solved"] == 8 and summary["skipped_checks"] == 0


def test_batch_bad_source(capsys):
    assert main(["batch", "/nonexistent/path"]) == 2


def test_genspec_densities():
    items = list(parse_genspec("random:count=8,n=5-6,seed=0"))
    assert [g.n for _, g in items] == [5, 6, 5, 6, 5, 6, 5, 6]
    assert [g.m for _, g in items] == [4, 5, 7, 10, 10, 15, 5, 7]
    assert [name for name, _ in parse_genspec("gap:k=2-3")] == ["gap-k2", "gap-k3"]
    with pytest.raises(ValueError):
        list(parse_genspec("weird:x=1"))
