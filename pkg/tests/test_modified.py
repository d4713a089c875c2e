import random
from fractions import Fraction as F

import pytest

from kohlberg.balance import BALANCED
from kohlberg.game import TUGame, level_collection
from kohlberg.harness import perturb, random_game
from kohlberg.modified import (CASE_I, CASE_II, CASE_III, containment_case, d_hat_next, d_tilde,
                               epsilon_tilde, verify_prenucleolus_modified)
from kohlberg.oracle import prenucleolus
from kohlberg.verify import IS_SOLUTION, NOT_SOLUTION, verify_prenucleolus

third = F(1, 3)
EQ = (third, third, third)
PAIRS = (0b011, 0b101, 0b110)


def test_epsilon_examples(sym3):
    assert epsilon_tilde(sym3, EQ, third) == third
    assert epsilon_tilde(sym3, (1, 0, 0), 1) == 1
    assert epsilon_tilde(sym3, EQ, 0) == third


def test_epsilon_errors(sym3):
    with pytest.raises(ValueError):
        epsilon_tilde(sym3, EQ, -third)
    with pytest.raises(ValueError):
        epsilon_tilde(sym3, EQ, 1)


def test_d_tilde_equal_split(sym3):
    assert d_tilde(sym3, EQ, third, third, PAIRS) == ()


def test_d_tilde_empty_base_is_the_whole_level(sym3):
    assert d_tilde(sym3, EQ, third, third, ()) == level_collection(sym3, EQ, 0)


def test_d_tilde_corner(sym3):
    # at (1,0,0) the excess-0 coalitions are {2},{3},{1,2},{1,3},N; {1} sits at -1
    got = d_tilde(sym3, (1, 0, 0), 1, 1, (0b110,))
    assert got == (0b010, 0b011, 0b100, 0b101, 0b111)


def test_d_tilde_requires_subset(sym3):
    with pytest.raises(ValueError):
        d_tilde(sym3, EQ, third, third, (0b001,))


def test_d_hat_next():
    assert d_hat_next((), PAIRS) == PAIRS
    assert d_hat_next(PAIRS, ()) == PAIRS
    assert d_hat_next((0b110,), (0b010, 0b011, 0b100, 0b101, 0b111)) == (2, 3, 4, 5, 6, 7)
    with pytest.raises(ValueError):
        d_hat_next((1, 2), (2, 3))


def test_containment_cases():
    assert containment_case((1, 2), (1, 2, 3)) == CASE_I
    assert containment_case((1, 2), (1, 3)) == CASE_II
    assert containment_case((1, 2), (1,)) == CASE_III


def test_modified_accepts_equal_split(sym3):
    t = verify_prenucleolus_modified(sym3, EQ)
    assert t.final == IS_SOLUTION and len(t.steps) == 1
    s = t.steps[0]
    assert s.d_hat == PAIRS and s.rank_hat == 3 and s.psi == third
    assert s.verdict.kind == BALANCED and s.verdict.weights == {m: F(1, 2) for m in PAIRS}


def test_modified_rejects_corner(sym3):
    t = verify_prenucleolus_modified(sym3, (1, 0, 0))
    assert t.final == NOT_SOLUTION and t.reject_level == 0
    assert t.steps[0].d_hat == (0b110,)
    y = t.steps[0].verdict.farkas_y
    assert all(v * -2 == y[0] * a for v, a in zip(y, (-2, 1, 1)))


def test_modified_one_player():
    t = verify_prenucleolus_modified(TUGame.from_dict(1, {1: 3}), (3,))
    assert t.final == IS_SOLUTION and len(t.steps) == 1


def test_modified_inefficient(sym3):
    with pytest.raises(ValueError):
        verify_prenucleolus_modified(sym3, (0, 0, 0))


def test_modified_literal_guard(unit2):
    assert verify_prenucleolus_modified(unit2, (1, 0), check_final=False).accepted
    assert not verify_prenucleolus_modified(unit2, (1, 0)).accepted


@pytest.mark.parametrize("n", [3, 4, 5])
def test_step_structure_on_random_games(n):
    rng = random.Random(100 + n)
    for seed in range(20):
        g = random_game(n, seed, "uniform_int(-3,3)")
        x, _ = prenucleolus(g)
        for point in (x, perturb(x, rng)):
            t = verify_prenucleolus_modified(g, point)
            for s in t.steps:
                if s.eps is not None:
                    assert s.eps > 0
                    assert set(s.d_hat) <= set(level_collection(g, point, s.psi - s.eps))
                assert set(s.d_hat) <= set(level_collection(g, point, s.psi))
                # the additions and the pruned ones split the coalitions reaching this level
                if s.k > 0:
                    reached = set(level_collection(g, point, s.psi)) - set(
                        level_collection(g, point, t.steps[s.k - 1].psi))
                    assert set(s.added) | set(s.dropped) == reached
                    assert not set(s.added) & set(s.dropped)
            assert t.rank_mismatches == []
            assert t.final == verify_prenucleolus(g, point).final
