"""Kohlberg's criterion: is a given payoff the (pre-)nucleolus?

The verifier walks the excess levels from the top. At every level the
cumulative collection ``D(psi)`` must be balanced (for the nucleolus:
balanced relative to a set of singletons). Once the collection spans
R^n every further level is automatically balanced, so the walk stops.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .balance import BalanceVerdict, check_balanced, nucleolus_verdict
from .exact_lp import StepCounter, rank
from .game import (TUGame, all_excesses, indicator, is_imputation, is_preimputation,
                   payoff)

IS_SOLUTION = "is_solution"
NOT_SOLUTION = "not_solution"


@dataclass
class TraceStep:
    k: int
    psi: Fraction
    collection: Tuple[int, ...]
    verdict: Optional[BalanceVerdict]
    rank: int


@dataclass
class VerificationTrace:
    method: str
    steps: List[TraceStep] = field(default_factory=list)
    final: Optional[str] = None
    reject_level: Optional[int] = None
    header: Dict[str, str] = field(default_factory=dict)

    @property
    def accepted(self) -> bool:
        return self.final == IS_SOLUTION

    @property
    def certificate(self) -> Optional[Tuple[Fraction, ...]]:
        """Farkas vector of the rejecting level, if any."""
        if self.reject_level is None:
            return None
        return self.steps[self.reject_level].verdict.farkas_y


def coalition_rank(c: Sequence[int], n: int, counter: Optional[StepCounter] = None) -> int:
    return rank([indicator(s, n) for s in c], counter)


def next_level(game: TUGame, x: Sequence, excluded: Sequence[int]) -> Fraction:
    """Largest excess among nonempty coalitions outside ``excluded``."""
    x = payoff(x)
    excluded = set(excluded)
    exc = all_excesses(game, x)
    rest = [exc[m] for m in game.coalitions() if m not in excluded]
    if not rest:
        raise ValueError("every coalition is excluded; there is no next level")
    return max(rest)


def _levels(game, x):
    """Yield (psi, D(psi)) for the distinct excess values, top down."""
    exc = all_excesses(game, x)
    order = sorted(game.coalitions(), key=lambda m: (-exc[m], m))
    i = 0
    while i < len(order):
        psi = exc[order[i]]
        while i < len(order) and exc[order[i]] == psi:
            i += 1
        yield psi, tuple(sorted(order[:i]))


def _walk(game, x, trace, test, check_final):
    n = game.n
    for k, (psi, d) in enumerate(_levels(game, x)):
        r = coalition_rank(d, n)
        verdict = test(d) if (r < n or check_final) else None
        trace.steps.append(TraceStep(k, psi, d, verdict, r))
        if verdict is not None and not verdict.balanced:
            trace.final = NOT_SOLUTION
            trace.reject_level = k
            return trace
        if r == n:
            trace.final = IS_SOLUTION
            return trace
    raise AssertionError("the last excess level contains every coalition and has full rank")


def verify_prenucleolus(game: TUGame, x: Sequence, check_final: bool = True) -> VerificationTrace:
    """Run Kohlberg's level-by-level balancedness test for the pre-nucleolus.

    ``check_final=False`` reproduces the textbook loop guard literally, which
    stops as soon as the collection has rank n without testing that last
    collection. That variant wrongly accepts e.g. ``(1, 0)`` in the game
    ``v({1}) = v({2}) = 0, v(N) = 1``; the default tests it.
    """
    x = payoff(x)
    if not is_preimputation(game, x):
        raise ValueError("x is not efficient: x(N) != v(N)")
    trace = VerificationTrace("kohlberg", header={"solution": "prenucleolus",
                                                  "check_final": str(check_final).lower()})
    return _walk(game, x, trace, lambda d: check_balanced(d, game.n), check_final)


def singleton_base(game: TUGame, x: Sequence, singleton_rule: str) -> Tuple[int, ...]:
    if singleton_rule == "all":
        return tuple(1 << i for i in range(game.n))
    if singleton_rule == "tight":
        return tuple(1 << i for i in range(game.n) if x[i] == game.worth[1 << i])
    raise ValueError(f"singleton_rule must be 'all' or 'tight', got {singleton_rule!r}")


def verify_nucleolus(game: TUGame, x: Sequence, singleton_rule: str = "tight",
                     check_final: bool = True) -> VerificationTrace:
    """Kohlberg's test for the nucleolus.

    Each level ``D(psi)`` needs weights ``w >= 0`` on ``C0 | D(psi)`` summing
    to ``1_N`` with ``w > 0`` on ``D(psi)``. ``singleton_rule="tight"`` takes
    ``C0`` as the singletons with ``x_i = v({i})``; ``"all"`` takes every
    singleton, under which the condition holds for any imputation.
    """
    x = payoff(x)
    if not is_imputation(game, x):
        raise ValueError("x is not an imputation")
    c0 = singleton_base(game, x, singleton_rule)
    trace = VerificationTrace("kohlberg", header={
        "solution": "nucleolus",
        "singleton_rule": singleton_rule,
        "c0": ",".join(str(s) for s in c0),
        "check_final": str(check_final).lower(),
    })
    return _walk(game, x, trace, lambda d: nucleolus_verdict(d, c0, game.n), check_final)
