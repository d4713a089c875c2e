from fractions import Fraction as F
from itertools import product

import pytest

from kohlberg.game import TUGame, lex_compare, theta, LESS


def g3sym():
    """v(S) = 1 when |S| >= 2, else 0."""
    return TUGame.from_function(3, lambda s: 1 if len(s) >= 2 else 0)


def g_pair4():
    """v({1,2}) = 4, v(N) = 4, every other coalition 0."""
    return TUGame.from_dict(3, {0b011: 4, 0b111: 4})


def g2_unit():
    return TUGame.from_dict(2, {0b11: 1})


@pytest.fixture
def sym3():
    return g3sym()


@pytest.fixture
def pair4():
    return g_pair4()


@pytest.fixture
def unit2():
    return g2_unit()


def grid_lexmin(game, step=F(1, 24), radius=6, individual_rationality=False):
    """Brute-force lexicographic minimiser on a grid of the efficient plane (n = 3 only).

    Test utility, not authoritative: it only sees grid points in a box of
    half-width ``radius`` around the origin.
    """
    assert game.n == 3
    total = game.worth[game.grand]
    ticks = [k * step for k in range(int(-radius / step), int(radius / step) + 1)]
    best, best_theta = None, None
    for a, b in product(ticks, repeat=2):
        x = (a, b, total - a - b)
        if individual_rationality and any(x[i] < game.worth[1 << i] for i in range(3)):
            continue
        th = theta(game, x)
        if best is None or lex_compare(th, best_theta) == LESS:
            best, best_theta = x, th
    return best


ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
