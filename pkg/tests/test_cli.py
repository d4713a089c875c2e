import json

import pytest

from conftest import g3sym
from kohlberg.cli import main
from kohlberg.harness import random_game
from kohlberg.io import emit_game, emit_payoff


@pytest.fixture
def files(tmp_path):
    game = tmp_path / "g3.json"
    game.write_text(emit_game(g3sym()))
    eq = tmp_path / "eq.json"
    eq.write_text(emit_payoff(("1/3", "1/3", "1/3")))
    corner = tmp_path / "corner.json"
    corner.write_text(emit_payoff((1, 0, 0)))
    return tmp_path, str(game), str(eq), str(corner)


def test_compute(files, capsys):
    _, game, _, _ = files
    assert main(["compute", "--game", game, "--solution", "nucleolus", "--trace"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["payoff"] == ["1/3", "1/3", "1/3"] and out["trace"]["rounds"]


@pytest.mark.parametrize("method, solution", [
    ("kohlberg", "prenucleolus"), ("kohlberg", "nucleolus"),
    ("modified", "prenucleolus"), ("nguyen", "nucleolus")])
def test_verify_exit_codes(files, method, solution):
    _, game, eq, corner = files
    args = ["verify", "--game", game, "--method", method, "--solution", solution]
    assert main(args + ["--point", eq]) == 0
    assert main(args + ["--point", corner]) == 1


def test_verify_trace_output(files, capsys):
    _, game, _, corner = files
    main(["verify", "--game", game, "--point", corner, "--trace"])
    assert json.loads(capsys.readouterr().out)["reject_level"] == 0


def test_errors_exit_2(files, tmp_path):
    _, game, eq, _ = files
    assert main(["verify", "--game", str(tmp_path / "missing.json"), "--point", eq]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "coalitions": [{"players": [1], "value": "1/0"}]}')
    assert main(["verify", "--game", str(bad), "--point", eq]) == 2
    assert main(["verify", "--game", game, "--point", eq, "--method", "nguyen",
                 "--solution", "prenucleolus"]) == 2
    inefficient = tmp_path / "ones.json"
    inefficient.write_text(emit_payoff((1, 1, 1)))
    assert main(["verify", "--game", game, "--point", str(inefficient)]) == 2
    assert main(["compare", "--n", "3", "--count", "0", "--out", str(tmp_path / "r")]) == 2


def test_compare_and_replay(tmp_path, capsys):
    out = tmp_path / "runs"
    assert main(["compare", "--n", "3", "--count", "5", "--seed", "1",
                 "--point-rule", "oracle_perturbed", "--out", str(out)]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["rows"] == 5
    assert (out / "report.json").exists()
    for case in (out / "counterexamples").glob("*.json"):
        assert main(["replay", str(case)]) == 0


def test_bench(tmp_path):
    games = tmp_path / "games"
    games.mkdir()
    for s in range(3):
        (games / f"g{s}.json").write_text(emit_game(random_game(3, s)))
    (games / "g0.point.json").write_text(emit_payoff((0, 0, random_game(3, 0).worth[7])))
    out = tmp_path / "bench.json"
    assert main(["bench", "--games", str(games), "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["totals"]["games"] == 3 and doc["rows"]
    assert main(["bench", "--games", str(tmp_path / "nothing"), "--out", str(out)]) == 2
