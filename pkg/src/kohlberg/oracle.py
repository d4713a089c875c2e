"""Ground-truth (pre-)nucleolus by iterated exact linear programming.

Round r solves ``min t`` subject to ``x(S) + t >= v(S)`` for the coalitions
not fixed yet, the equalities fixed in earlier rounds and ``x(N) = v(N)``
(plus ``x_i >= v({i})`` for the nucleolus). Coalitions whose constraint is
tight at *every* optimum are then fixed at excess ``t*``; a coalition is
tight at every optimum iff the largest slack it can reach over the optimal
face is zero. Rounds repeat until the fixed equalities pin down x.

Every LP here has free payoff variables and many inequality rows, so each
is solved through its dual, which has only n or n+1 equality rows; the
solver's equality duals are then exactly the primal optimiser.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .exact_lp import OPTIMAL, EchelonBasis, LPProblem, solve
from .game import (TUGame, all_excesses, coalition_sum, imputation_set_nonempty,
                   indicator, lex_compare, LESS, level_collection, payoff, theta)
from .balance import farkas_ok


@dataclass
class SolveRound:
    value: Fraction                 # minimised max excess t*
    fixed: Tuple[int, ...]          # coalitions fixed this round
    fixed_players: Tuple[int, ...]  # players whose x_i = v({i}) became binding (nucleolus)
    dimension: int                  # affine dimension of the payoff set left afterwards


@dataclass
class SolveTrace:
    rounds: List[SolveRound] = field(default_factory=list)
    result: Optional[Tuple[Fraction, ...]] = None


def _optimise(n_vars, objective, ineq, eq):
    """max objective.z  s.t.  g.z >= h for (g, h) in ineq,  e.z = f for (e, f) in eq.

    Solved as the dual LP ``max h.lam + f.mu`` s.t. ``G^T lam + E^T mu = -objective``,
    ``lam >= 0``, ``mu`` free; the returned equality duals are the optimal z.
    """
    cols = [g for g, _ in ineq] + [e for e, _ in eq]
    gains = [h for _, h in ineq] + [f for _, f in eq]
    A = [[col[i] for col in cols] for i in range(n_vars)]
    lower = [0] * len(ineq) + [None] * len(eq)
    out = solve(LPProblem(gains, A, [-c for c in objective], lower=lower))
    if out.status != OPTIMAL:
        raise AssertionError(f"face LP ended {out.status}")
    z = out.y
    assert all(sum(a * b for a, b in zip(g, z)) >= h for g, h in ineq)
    assert all(sum(a * b for a, b in zip(e, z)) == f for e, f in eq)
    return z


def _iterate(game: TUGame, individual_rationality: bool) -> Tuple[Tuple[Fraction, ...], SolveTrace]:
    n = game.n
    v = game.worth
    trace = SolveTrace()
    grand = game.grand
    eq: List[Tuple[int, Fraction]] = [(grand, v[grand])]   # (mask, required x(mask))
    basis = EchelonBasis(n)
    basis.add(indicator(grand, n))
    free = [m for m in game.coalitions() if m != grand]
    ir = list(range(n)) if individual_rationality else []

    x = None
    if basis.rank == n:
        x = (v[grand],)
    while basis.rank < n:
        # round LP over z = (x, t): maximise -t
        ineq = [(indicator(m, n) + (1,), v[m]) for m in free]
        ineq += [(indicator(1 << i, n) + (0,), v[1 << i]) for i in ir]
        eqs = [(indicator(m, n) + (0,), val) for m, val in eq]
        z = _optimise(n + 1, [0] * n + [-1], ineq, eqs)
        t, x0 = z[-1], z[:n]

        # face of optimal payoffs: z = x only, t fixed at t*
        face_ineq = [(indicator(m, n), v[m] - t) for m in free]
        face_ineq += [(indicator(1 << i, n), v[1 << i]) for i in ir]
        face_eq = [(indicator(m, n), val) for m, val in eq]

        def slack(point, m):
            return coalition_sum(point, m) + t - v[m]

        open_m = {m for m in free if slack(x0, m) > 0}
        open_i = {i for i in ir if x0[i] > v[1 << i]}
        for m in free:
            if m in open_m:
                continue
            pt = _optimise(n, indicator(m, n), face_ineq, face_eq)
            if slack(pt, m) > 0:
                open_m |= {q for q in free if slack(pt, q) > 0}
                open_i |= {i for i in ir if pt[i] > v[1 << i]}
        for i in ir:
            if i in open_i:
                continue
            pt = _optimise(n, indicator(1 << i, n), face_ineq, face_eq)
            if pt[i] > v[1 << i]:
                open_i.add(i)
                open_m |= {q for q in free if slack(pt, q) > 0}

        fixed = tuple(m for m in free if m not in open_m)
        fixed_players = tuple(i for i in ir if i not in open_i)
        for m in fixed:
            eq.append((m, v[m] - t))
            basis.add(indicator(m, n))
        for i in fixed_players:
            eq.append((1 << i, v[1 << i]))
            basis.add(indicator(1 << i, n))
        free = [m for m in free if m in open_m]
        ir = [i for i in ir if i in open_i]
        trace.rounds.append(SolveRound(t, fixed, fixed_players, n - basis.rank))
        x = tuple(x0)
    trace.result = tuple(Fraction(a) for a in x)
    return trace.result, trace


def prenucleolus(game: TUGame) -> Tuple[Tuple[Fraction, ...], SolveTrace]:
    """The unique lexicographic minimiser of theta over pre-imputations."""
    return _iterate(game, individual_rationality=False)


def nucleolus(game: TUGame) -> Tuple[Tuple[Fraction, ...], SolveTrace]:
    """The unique lexicographic minimiser of theta over imputations."""
    if not imputation_set_nonempty(game):
        raise ValueError("imputation set is empty: sum of v({i}) exceeds v(N)")
    return _iterate(game, individual_rationality=True)


@dataclass(frozen=True)
class ImprovingDirection:
    y: Tuple[Fraction, ...]
    delta_star: Fraction
    target: Tuple[int, ...]
    point: Tuple[Fraction, ...]     # x + delta_star * y


def improving_direction(game: TUGame, x: Sequence, unbalanced: Sequence[int],
                        farkas_y: Sequence) -> ImprovingDirection:
    """Step from x along a Farkas direction of an unbalanced level collection.

    With ``g`` the gap between the level and the next excess below it and
    ``M = max(1, max_S |y(S)|)``, the step ``delta* = g / (2M)`` keeps every
    member of the collection at least as dissatisfied as every outsider, so
    the top of theta can only drop, and it drops strictly somewhere.
    """
    x = payoff(x)
    y = payoff(farkas_y)
    target = tuple(sorted(set(unbalanced)))
    n = game.n
    if not target:
        raise ValueError("the unbalanced collection is empty")
    if not farkas_ok(n, y, target, target):
        raise ValueError("farkas_y must satisfy y(N) = 0, y(S) >= 0 on the collection and be positive somewhere")
    exc = all_excesses(game, x)
    psi = min(exc[m] for m in target)
    if level_collection(game, x, psi) != target:
        raise ValueError("the collection is not an excess level set D(psi, x)")
    outside = [exc[m] for m in game.coalitions() if m not in set(target)]
    if not outside:
        raise ValueError("the collection holds every coalition; there is no level gap")
    gap = psi - max(outside)
    assert gap > 0
    big = max([Fraction(1)] + [abs(coalition_sum(y, m)) for m in game.coalitions()])
    delta = gap / (2 * big)
    z = tuple(a + delta * b for a, b in zip(x, y))
    if lex_compare(theta(game, z), theta(game, x)) != LESS:
        raise AssertionError("step did not improve theta lexicographically")
    return ImprovingDirection(y, delta, target, z)
