from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from kohlberg.game import (EQUAL, GREATER, LESS, TUGame, all_excesses, distinct_excess_levels,
                           excess, indicator, is_imputation, is_preimputation, level_collection,
                           lex_compare, mask_of, players, theta)

third = F(1, 3)
EQ = (third, third, third)


def test_excess_examples(sym3):
    assert excess(sym3, 0b011, EQ) == third
    assert excess(sym3, 0b001, EQ) == -third
    assert excess(sym3, 0b111, EQ) == 0


def test_excess_empty_coalition_is_an_error(sym3):
    with pytest.raises(ValueError):
        excess(sym3, 0, EQ)


def test_excess_wrong_length(sym3):
    with pytest.raises(ValueError):
        excess(sym3, 1, (1, 0))


def test_theta_equal_split(sym3):
    th = theta(sym3, EQ)
    assert th.values == (third, third, third, 0, -third, -third, -third)
    assert th.coalitions == (0b011, 0b101, 0b110, 0b111, 0b001, 0b010, 0b100)


def test_theta_corner(sym3):
    assert theta(sym3, (1, 0, 0)).values == (1, 0, 0, 0, 0, 0, -1)


def test_theta_one_player():
    g = TUGame.from_dict(1, {1: 0})
    assert theta(g, (0,)).values == (0,)


def test_lex_compare_examples(sym3):
    assert lex_compare((1, 0, -1), (1, 0, -1)) == EQUAL
    assert lex_compare(theta(sym3, EQ), theta(sym3, (1, 0, 0))) == LESS
    assert lex_compare((0, 0), (0, -1)) == GREATER
    with pytest.raises(ValueError):
        lex_compare((0,), (0, 0))


def test_imputation_predicates(sym3):
    assert is_preimputation(sym3, EQ) and is_imputation(sym3, EQ)
    assert not is_preimputation(sym3, (1, 1, 1))
    assert not is_imputation(sym3, (1, 1, 1))
    assert is_preimputation(sym3, (2, -1, 0))
    assert not is_imputation(sym3, (2, -1, 0))


def test_level_collection_examples(sym3):
    assert level_collection(sym3, EQ, third) == (0b011, 0b101, 0b110)
    assert level_collection(sym3, EQ, -third) == tuple(range(1, 8))
    assert level_collection(sym3, EQ, 2) == ()


def test_distinct_levels(sym3):
    assert distinct_excess_levels(sym3, EQ) == (third, 0, -third)
    assert distinct_excess_levels(sym3, (1, 0, 0)) == (1, 0, -1)
    assert distinct_excess_levels(TUGame.from_dict(1, {1: 5}), (5,)) == (0,)


def test_game_validation():
    with pytest.raises(ValueError):
        TUGame(0, (0,))
    with pytest.raises(ValueError):
        TUGame(2, (0, 1, 1))
    with pytest.raises(ValueError):
        TUGame(1, (1, 1))
    with pytest.raises(ValueError):
        TUGame.from_dict(2, {4: 1})
    with pytest.raises(TypeError):
        TUGame.from_dict(2, {3: 0.5})


def test_from_function_matches_from_dict(sym3):
    table = {m: 1 for m in (0b011, 0b101, 0b110, 0b111)}
    assert TUGame.from_dict(3, table) == sym3


def test_mask_helpers():
    assert mask_of([0, 2]) == 0b101
    assert players(0b101) == (0, 2)
    assert indicator(0b101, 3) == (1, 0, 1)


# --- properties ---------------------------------------------------------------

def games(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.integers(-10, 10), min_size=(1 << n) - 1, max_size=(1 << n) - 1)
        .map(lambda w: TUGame(n, (0,) + tuple(w))))


def game_and_point(max_n=4):
    return games(max_n).flatmap(
        lambda g: st.lists(st.fractions(-10, 10, max_denominator=6), min_size=g.n, max_size=g.n)
        .map(lambda x: (g, tuple(x))))


@settings(max_examples=150, deadline=None)
@given(game_and_point())
def test_theta_is_a_permutation_of_the_excesses(gx):
    g, x = gx
    th = theta(g, x)
    assert sorted(th.coalitions) == list(g.coalitions())
    assert sorted(th.values) == sorted(excess(g, m, x) for m in g.coalitions())
    assert all(a >= b for a, b in zip(th.values, th.values[1:]))
    exc = all_excesses(g, x)
    assert all(exc[m] == excess(g, m, x) for m in g.coalitions())


@settings(max_examples=150, deadline=None)
@given(game_and_point(), st.fractions(-20, 20, max_denominator=4), st.fractions(-20, 20, max_denominator=4))
def test_level_sets_are_monotone(gx, a, b):
    g, x = gx
    hi, lo = max(a, b), min(a, b)
    assert set(level_collection(g, x, hi)) <= set(level_collection(g, x, lo))


vecs = st.lists(st.integers(-3, 3), min_size=4, max_size=4)


@given(vecs, vecs, vecs)
def test_lex_compare_is_a_total_order(a, b, c):
    assert lex_compare(a, b) == -lex_compare(b, a)
    assert (lex_compare(a, b) == EQUAL) == (a == b)
    if lex_compare(a, b) != GREATER and lex_compare(b, c) != GREATER:
        assert lex_compare(a, c) != GREATER
