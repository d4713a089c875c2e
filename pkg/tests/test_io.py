import json
from fractions import Fraction as F

import pytest

from conftest import g3sym
from kohlberg.harness import random_game
from kohlberg.io import (FormatError, dumps, emit_game, emit_payoff, format_rational, game_to_dict,
                         parse_game, parse_payoff, parse_rational, trace_to_dict)
from kohlberg.modified import verify_prenucleolus_modified
from kohlberg.verify import verify_prenucleolus


def doc(n, entries):
    return {"n": n, "coalitions": [{"players": p, "value": v} for p, v in entries]}


def test_g3sym_fixture():
    d = doc(3, [([1, 2], "1"), ([1, 3], "1"), ([2, 3], "1"), ([1, 2, 3], "1")])
    assert parse_game(d) == g3sym()


def test_omitted_coalitions_are_zero():
    g = parse_game(doc(2, [([1, 2], "1/2")]))
    assert g.worth == (0, 0, 0, F(1, 2))


def test_duplicate_coalition():
    with pytest.raises(FormatError, match=r"coalitions\[1\]"):
        parse_game(doc(2, [([1], "0"), ([1], "0")]))
    with pytest.raises(FormatError):
        parse_game(doc(2, [([1, 2], "0"), ([2, 1], "0")]))


@pytest.mark.parametrize("bad, field", [
    (doc(2, [([3], "1")]), "players"),
    (doc(2, [([0], "1")]), "players"),
    (doc(2, [([1, 1], "1")]), "players"),
    (doc(2, [([1], "1/0")]), "value"),
    (doc(2, [([1], "0.5")]), "value"),
    (doc(2, [([1], 0.5)]), "value"),
    (doc(2, [([], "1")]), "players"),
    ({"n": 17, "coalitions": []}, "n"),
    ({"coalitions": []}, "n"),
])
def test_parse_errors_name_the_field(bad, field):
    with pytest.raises(FormatError, match=field):
        parse_game(bad)


def test_bad_json_names_the_line():
    with pytest.raises(FormatError, match="line 2"):
        parse_game('{"n": 2,\n "coalitions": [}')


def test_rationals_are_canonical():
    assert format_rational(F(6, -4)) == "-3/2"
    assert format_rational(4) == "4"
    assert parse_rational("6/4") == F(3, 2)
    assert parse_rational(" -2 ") == -2
    assert parse_rational(3) == 3
    with pytest.raises(FormatError):
        parse_rational(True)


def test_payoff_round_trip():
    x = (F(1, 3), F(-2), F(5, 7))
    assert parse_payoff(emit_payoff(x), 3) == x
    with pytest.raises(FormatError):
        parse_payoff(emit_payoff(x), 2)
    with pytest.raises(FormatError):
        parse_payoff({"n": 4, "payoff": ["1", "2"]})


def test_emit_is_canonical():
    messy = doc(3, [([3, 1], "2/4"), ([1], "0"), ([2], "-6/3")])
    text = emit_game(parse_game(messy))
    assert json.loads(text) == doc(3, [([2], "-2"), ([1, 3], "1/2")])
    assert emit_game(parse_game(text)) == text


def test_random_games_round_trip():
    for seed in range(1000):
        g = random_game(1 + seed % 5, seed)
        text = emit_game(g)
        assert parse_game(text) == g
        assert emit_game(parse_game(text)) == text


def test_traces_serialise_deterministically():
    g = g3sym()
    for trace in (verify_prenucleolus(g, (1, 0, 0)), verify_prenucleolus_modified(g, (1, 0, 0))):
        d = trace_to_dict(trace)
        assert dumps(d) == dumps(json.loads(dumps(d)))
        assert d["final"] == "not_solution"
    assert game_to_dict(g)["n"] == 3
