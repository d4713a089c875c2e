"""Plain-text (JSON) documents for games, payoffs, traces and reports.

Rationals are written canonically as ``"p/q"`` with ``q > 0`` and
``gcd(p, q) = 1``, or ``"p"`` for integers. Players are 1-based in files.

Game document::

    {"n": 3, "coalitions": [{"players": [1, 2], "value": "1"}, ...]}

Omitted coalitions are worth 0. Payoff document::

    {"n": 3, "payoff": ["1/3", "1/3", "1/3"]}
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Union

from .game import MAX_PLAYERS, TUGame, mask_of, players

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class FormatError(ValueError):
    """Malformed document; the message names the offending field."""


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text, where: str = "value") -> Fraction:
    if isinstance(text, bool) or isinstance(text, float):
        raise FormatError(f"{where}: expected an integer or 'p/q' string, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise FormatError(f"{where}: expected a string, got {type(text).__name__}")
    m = _RATIONAL.match(text)
    if not m:
        raise FormatError(f"{where}: {text!r} is not a rational of the form p or p/q")
    if m.group(2) is not None and int(m.group(2)) == 0:
        raise FormatError(f"{where}: zero denominator in {text!r}")
    return Fraction(int(m.group(1)), int(m.group(2) or 1))


def _load(doc: Union[str, bytes, Dict[str, Any]]):
    if isinstance(doc, (str, bytes)):
        try:
            return json.loads(doc)
        except json.JSONDecodeError as exc:
            raise FormatError(f"line {exc.lineno}: {exc.msg}") from None
    return doc


def parse_game(doc) -> TUGame:
    d = _load(doc)
    if not isinstance(d, dict):
        raise FormatError("game document must be an object")
    n = d.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_PLAYERS:
        raise FormatError(f"n: expected an integer in 1..{MAX_PLAYERS}, got {n!r}")
    entries = d.get("coalitions", [])
    if not isinstance(entries, list):
        raise FormatError("coalitions: expected a list")
    worth: Dict[int, Fraction] = {}
    for k, entry in enumerate(entries):
        where = f"coalitions[{k}]"
        if not isinstance(entry, dict) or "players" not in entry or "value" not in entry:
            raise FormatError(f"{where}: expected an object with 'players' and 'value'")
        members = entry["players"]
        if not isinstance(members, list) or not members:
            raise FormatError(f"{where}.players: expected a nonempty list")
        for p in members:
            if not isinstance(p, int) or isinstance(p, bool) or not 1 <= p <= n:
                raise FormatError(f"{where}.players: player {p!r} is not in 1..{n}")
        if len(set(members)) != len(members):
            raise FormatError(f"{where}.players: repeated player")
        mask = mask_of(p - 1 for p in members)
        if mask in worth:
            raise FormatError(f"{where}: duplicate coalition {sorted(members)}")
        worth[mask] = parse_rational(entry["value"], f"{where}.value")
    return TUGame.from_dict(n, worth)


def game_to_dict(game: TUGame) -> Dict[str, Any]:
    return {
        "n": game.n,
        "coalitions": [{"players": [i + 1 for i in players(m)], "value": format_rational(game.worth[m])}
                       for m in game.coalitions() if game.worth[m] != 0],
    }


def emit_game(game: TUGame) -> str:
    return dumps(game_to_dict(game))


def parse_payoff(doc, n: int = None):
    d = _load(doc)
    values = d.get("payoff") if isinstance(d, dict) else d
    if not isinstance(values, list):
        raise FormatError("payoff: expected a list of rationals")
    if isinstance(d, dict) and "n" in d and d["n"] != len(values):
        raise FormatError(f"payoff: n={d['n']} but {len(values)} values given")
    if n is not None and len(values) != n:
        raise FormatError(f"payoff: expected {n} values, got {len(values)}")
    return tuple(parse_rational(v, f"payoff[{k}]") for k, v in enumerate(values))


def payoff_to_dict(x) -> Dict[str, Any]:
    return {"n": len(x), "payoff": [format_rational(v) for v in x]}


def emit_payoff(x) -> str:
    return dumps(payoff_to_dict(x))


def dumps(obj) -> str:
    """Deterministic JSON text (sorted keys, fixed indentation, trailing newline)."""
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def read_game(path) -> TUGame:
    return parse_game(Path(path).read_text())


def read_payoff(path, n: int = None):
    return parse_payoff(Path(path).read_text(), n)


# --- traces ---------------------------------------------------------------

def _coalitions(c):
    return [[i + 1 for i in players(m)] for m in c]


def _vec(y):
    return None if y is None else [format_rational(v) for v in y]


def verdict_to_dict(v):
    if v is None:
        return None
    return {
        "kind": v.kind,
        "weights": None if v.weights is None else
        [{"players": [i + 1 for i in players(m)], "weight": format_rational(w)}
         for m, w in sorted(v.weights.items())],
        "farkas_y": _vec(v.farkas_y),
    }


def trace_to_dict(trace) -> Dict[str, Any]:
    """Serialise a VerificationTrace or ModifiedTrace."""
    from .modified import ModifiedTrace

    if isinstance(trace, ModifiedTrace):
        steps = [{
            "k": s.k, "psi": format_rational(s.psi),
            "eps": None if s.eps is None else format_rational(s.eps),
            "d_hat": _coalitions(s.d_hat), "added": _coalitions(s.added),
            "dropped": _coalitions(s.dropped), "verdict": verdict_to_dict(s.verdict),
            "rank_hat": s.rank_hat, "rank_full": s.rank_full, "case": s.case,
        } for s in trace.steps]
        method = "modified"
    else:
        steps = [{
            "k": s.k, "psi": format_rational(s.psi), "collection": _coalitions(s.collection),
            "verdict": verdict_to_dict(s.verdict), "rank": s.rank,
        } for s in trace.steps]
        method = trace.method
    return {"method": method, "header": dict(trace.header), "steps": steps,
            "final": trace.final, "reject_level": trace.reject_level}


def solve_trace_to_dict(trace) -> Dict[str, Any]:
    return {
        "rounds": [{"value": format_rational(r.value), "fixed": _coalitions(r.fixed),
                    "fixed_players": [i + 1 for i in r.fixed_players], "dimension": r.dimension}
                   for r in trace.rounds],
        "result": _vec(trace.result),
    }
