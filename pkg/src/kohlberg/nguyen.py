"""Replica of a published "simplified Kohlberg" nucleolus verifier.

The procedure keeps a set ``H`` of characteristic vectors (starting with
``1_N``) and, at step k, picks ``T_k``: the coalitions of maximal excess among
those whose characteristic vector lies outside ``span(H)``. It then asks
whether ``T_1 | ... | T_k`` is "T0-balanced" and, if so, adds ``T_k`` to ``H``.
It is known to be unsound; it exists here so the harness can look for games
where its verdict disagrees with :func:`kohlberg.verify.verify_nucleolus`.

T0-balancedness is read as: weights ``w >= 0`` on ``T0 | Q`` summing to
``1_N`` with ``w > 0`` on every member of ``Q``, where ``T0`` holds the
singletons with ``x_i = v({i})``. Other readings can be passed as
``t0_test``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from .balance import BALANCED, UNBALANCED, BalanceVerdict, cone_witness, positive_weights
from .exact_lp import EchelonBasis, StepCounter
from .game import TUGame, all_excesses, collection, indicator, is_imputation, payoff
from .verify import IS_SOLUTION, NOT_SOLUTION, TraceStep, VerificationTrace

T0_READING = "w >= 0 on T0|Q, sum w_S 1_S = 1_N, w_S > 0 for S in Q"


@dataclass
class NguyenState:
    n: int
    H: EchelonBasis
    vectors: List[Tuple[int, ...]]
    T0: Tuple[int, ...]
    T_levels: List[Tuple[int, ...]] = field(default_factory=list)

    @classmethod
    def start(cls, game: TUGame, x: Sequence) -> "NguyenState":
        h = EchelonBasis(game.n)
        grand = indicator(game.grand, game.n)
        h.add(grand)
        return cls(game.n, h, [grand], t0_init(game, x))

    @property
    def union(self) -> Tuple[int, ...]:
        return collection(s for t in self.T_levels for s in t)


def t0_init(game: TUGame, x: Sequence) -> Tuple[int, ...]:
    """Singletons whose individual-rationality constraint is tight."""
    x = payoff(x)
    return tuple(1 << i for i in range(game.n) if x[i] == game.worth[1 << i])


def next_T(game: TUGame, x: Sequence, state: NguyenState) -> Tuple[int, ...]:
    """All max-excess coalitions whose characteristic vector is outside span(H)."""
    x = payoff(x)
    exc = all_excesses(game, x)
    candidates = [m for m in game.coalitions() if not state.H.contains(indicator(m, game.n))]
    if not candidates:
        raise ValueError("span(H) is already all of R^n")
    top = max(exc[m] for m in candidates)
    return tuple(m for m in candidates if exc[m] == top)


def is_T0_balanced(q: Sequence[int], t0: Sequence[int], n: int,
                   counter: Optional[StepCounter] = None) -> bool:
    if any(s & (s - 1) for s in t0):
        raise ValueError("t0 may only contain singletons")
    members = collection(tuple(t0) + tuple(q))
    return positive_weights(n, members, q, counter) is not None


def _t0_verdict(q, t0, n, counter=None) -> BalanceVerdict:
    members = collection(tuple(t0) + tuple(q))
    w = positive_weights(n, members, q, counter)
    if w is not None:
        return BalanceVerdict(BALANCED, w)
    return BalanceVerdict(UNBALANCED, None, cone_witness(n, members, q, counter))


def verify_nucleolus_nguyen(game: TUGame, x: Sequence,
                            t0_test: Optional[Callable] = None) -> VerificationTrace:
    """Execute the published procedure step by step.

    ``t0_test(q, t0, n) -> BalanceVerdict`` swaps in another reading of
    T0-balancedness.
    """
    x = payoff(x)
    if not is_imputation(game, x):
        raise ValueError("x is not an imputation")
    test = t0_test or _t0_verdict
    state = NguyenState.start(game, x)
    exc = all_excesses(game, x)
    trace = VerificationTrace("nguyen", header={
        "solution": "nucleolus",
        "t0": ",".join(str(s) for s in state.T0),
        "t0_balancedness": T0_READING if t0_test is None else getattr(t0_test, "__name__", "custom"),
    })
    k = 1
    while state.H.rank < game.n:
        t_k = next_T(game, x, state)
        state.T_levels.append(t_k)
        q = state.union
        verdict = test(q, state.T0, game.n)
        if not verdict.balanced:
            trace.steps.append(TraceStep(k, exc[t_k[0]], q, verdict, state.H.rank))
            trace.final, trace.reject_level = NOT_SOLUTION, len(trace.steps) - 1
            return trace
        for s in t_k:
            vec = indicator(s, game.n)
            state.vectors.append(vec)
            state.H.add(vec)
        trace.steps.append(TraceStep(k, exc[t_k[0]], q, verdict, state.H.rank))
        k += 1
    trace.final = IS_SOLUTION
    return trace
