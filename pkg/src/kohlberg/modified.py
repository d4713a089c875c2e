"""Span-pruned variant of Kohlberg's verifier.

Instead of testing the whole level collection ``D(psi)``, this variant keeps
a pruned collection ``D_hat``. When the walk descends from a level ``psi``
to the next level ``psi - eps`` (``eps`` is the gap to the next excess
value), only newly reached coalitions whose characteristic vectors are *not*
already in the span of ``D_hat`` are added. Whether balancedness of these
pruned collections still characterises the pre-nucleolus is unproven; the
harness compares this verifier with :func:`kohlberg.verify.verify_prenucleolus`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .balance import BalanceVerdict, check_balanced
from .exact_lp import EchelonBasis, StepCounter
from .game import (TUGame, all_excesses, collection, indicator, is_preimputation,
                   level_collection, payoff, to_fraction)
from .verify import IS_SOLUTION, NOT_SOLUTION, coalition_rank

log = logging.getLogger(__name__)

# containment of D(psi_prev) against D_hat at the next level
CASE_I = "i"      # D(psi) is contained in D_hat(psi - eps)
CASE_II = "ii"    # neither contains the other
CASE_III = "iii"  # D_hat(psi - eps) is a proper subset of D(psi)


@dataclass
class ModifiedStep:
    k: int
    psi: Fraction
    eps: Optional[Fraction]        # gap down to the next excess level; None at the bottom
    d_hat: Tuple[int, ...]
    added: Tuple[int, ...]         # coalitions reaching this level that entered D_hat
    dropped: Tuple[int, ...]       # coalitions reaching this level pruned by the span test
    verdict: Optional[BalanceVerdict]
    rank_hat: int
    rank_full: int
    case: Optional[str]


@dataclass
class ModifiedTrace:
    steps: List[ModifiedStep] = field(default_factory=list)
    final: Optional[str] = None
    reject_level: Optional[int] = None
    header: dict = field(default_factory=dict)

    @property
    def accepted(self) -> bool:
        return self.final == IS_SOLUTION

    @property
    def rank_mismatches(self) -> List[int]:
        return [s.k for s in self.steps if s.rank_hat != s.rank_full]


def epsilon_tilde(game: TUGame, x: Sequence, psi) -> Fraction:
    """``psi`` minus the largest excess outside ``D(psi)``."""
    x = payoff(x)
    psi = to_fraction(psi)
    exc = all_excesses(game, x)
    inside = [m for m in game.coalitions() if exc[m] >= psi]
    if not inside:
        raise ValueError(f"D(psi) is empty for psi={psi}")
    outside = [exc[m] for m in game.coalitions() if exc[m] < psi]
    if not outside:
        raise ValueError(f"D(psi) already holds every coalition for psi={psi}")
    return psi - max(outside)


def d_tilde(game: TUGame, x: Sequence, psi, eps, d_hat: Sequence[int],
            counter: Optional[StepCounter] = None) -> Tuple[int, ...]:
    """Coalitions of ``D(psi - eps)`` outside ``d_hat`` and outside its span."""
    x = payoff(x)
    psi, eps = to_fraction(psi), to_fraction(eps)
    d_hat = collection(d_hat)
    if not set(d_hat) <= set(level_collection(game, x, psi)):
        raise ValueError("d_hat must be a subset of D(psi)")
    basis = EchelonBasis(game.n, counter)
    for s in d_hat:
        basis.add(indicator(s, game.n))
    inside = set(d_hat)
    return tuple(s for s in level_collection(game, x, psi - eps)
                 if s not in inside and not basis.contains(indicator(s, game.n)))


def d_hat_next(d_hat: Sequence[int], d_til: Sequence[int]) -> Tuple[int, ...]:
    overlap = set(d_hat) & set(d_til)
    if overlap:
        raise ValueError(f"collections overlap in {sorted(overlap)}")
    return collection(tuple(d_hat) + tuple(d_til))


def containment_case(d_prev: Sequence[int], d_hat: Sequence[int]) -> str:
    prev, hat = set(d_prev), set(d_hat)
    if prev <= hat:
        return CASE_I
    if hat < prev:
        return CASE_III
    return CASE_II


def verify_prenucleolus_modified(game: TUGame, x: Sequence, check_final: bool = True,
                                 counter: Optional[StepCounter] = None) -> ModifiedTrace:
    """Walk the excess levels testing balancedness of the pruned collections.

    Starts from ``D_hat_0 = D(psi_0)``. While ``rank(D_hat) < n`` and the
    current ``D_hat`` is balanced, descend to the next level below the
    *full* collection ``D(psi_{k-1})`` and extend ``D_hat`` by ``d_tilde``.
    ``check_final`` has the same meaning as in ``verify_prenucleolus``.
    ``counter`` (if given) accumulates the span-check work only.
    """
    x = payoff(x)
    if not is_preimputation(game, x):
        raise ValueError("x is not efficient: x(N) != v(N)")
    n = game.n
    exc = all_excesses(game, x)
    levels = sorted({exc[m] for m in game.coalitions()}, reverse=True)
    trace = ModifiedTrace(header={"solution": "prenucleolus", "check_final": str(check_final).lower()})

    psi = levels[0]
    d_full = level_collection(game, x, psi)
    d_hat = d_full
    added, dropped, case = d_full, (), None
    k = 0
    while True:
        eps = psi - levels[k + 1] if k + 1 < len(levels) else None
        r_hat = coalition_rank(d_hat, n)
        r_full = coalition_rank(d_full, n)
        if r_hat != r_full:
            log.warning("rank mismatch at level %d: rank(D_hat)=%d, rank(D)=%d", k, r_hat, r_full)
        verdict = check_balanced(d_hat, n) if (r_hat < n or check_final) else None
        trace.steps.append(ModifiedStep(k, psi, eps, d_hat, added, dropped, verdict,
                                        r_hat, r_full, case))
        if verdict is not None and not verdict.balanced:
            trace.final, trace.reject_level = NOT_SOLUTION, k
            return trace
        if r_hat == n:
            trace.final = IS_SOLUTION
            return trace
        if eps is None:
            # rank(D_hat) < n with nothing left to add cannot happen: span(D_hat) = span(D)
            raise AssertionError("ran out of excess levels before reaching full rank")
        new = d_tilde(game, x, psi, eps, d_hat, counter)
        nxt = d_hat_next(d_hat, new)
        d_prev = d_full
        psi = psi - eps
        d_full = level_collection(game, x, psi)
        reached = set(d_full) - set(d_prev)
        added = tuple(s for s in new if s in reached)
        dropped = tuple(sorted(reached - set(new)))
        case = containment_case(d_prev, nxt)
        d_hat = nxt
        k += 1
