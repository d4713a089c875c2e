"""TU games, payoffs, excesses and the ordered complaint vector.

Players are indexed ``0..n-1`` internally and coalitions are bitmasks, so
coalition ``{1, 2}`` in 1-based notation is ``0b011``. Collections of
coalitions are plain tuples of masks in ascending order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Tuple, Union

MAX_PLAYERS = 16

Rational = Union[int, Fraction]
Payoff = Tuple[Fraction, ...]
Coalition = int
CoalitionCollection = Tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1


def to_fraction(value) -> Fraction:
    """Exact conversion; floats are refused so no rounding sneaks in."""
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}; pass int, str or Fraction")
    return Fraction(value)


def payoff(values: Iterable) -> Payoff:
    return tuple(to_fraction(v) for v in values)


def collection(masks: Iterable[int]) -> CoalitionCollection:
    """Canonical collection: duplicate-free, ascending mask order."""
    return tuple(sorted(set(masks)))


def players(mask: int) -> Tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def mask_of(members: Iterable[int]) -> int:
    m = 0
    for i in members:
        m |= 1 << i
    return m


def indicator(mask: int, n: int) -> Tuple[int, ...]:
    """Characteristic vector 1_S as a 0/1 tuple of length n."""
    return tuple(mask >> i & 1 for i in range(n))


def format_coalition(mask: int) -> str:
    """1-based set notation, e.g. ``{1,3}``."""
    return "{" + ",".join(str(i + 1) for i in players(mask)) + "}"


@dataclass(frozen=True)
class TUGame:
    """A transferable-utility game with a dense worth table.

    ``worth[mask]`` is v(S); ``worth[0]`` is always 0.
    """

    n: int
    worth: Tuple[Fraction, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_PLAYERS:
            raise ValueError(f"player count must be in 1..{MAX_PLAYERS}, got {self.n}")
        if len(self.worth) != 1 << self.n:
            raise ValueError(f"worth table must have {1 << self.n} entries")
        if self.worth[0] != 0:
            raise ValueError("v(empty) must be 0")
        object.__setattr__(self, "worth", tuple(to_fraction(w) for w in self.worth))

    @classmethod
    def from_dict(cls, n: int, worths: Mapping[int, Rational]) -> "TUGame":
        """Build from a sparse ``{mask: value}`` map; missing coalitions get 0."""
        table = [Fraction(0)] * (1 << n)
        for mask, value in worths.items():
            if not 0 < mask < 1 << n:
                raise ValueError(f"coalition mask {mask} out of range for n={n}")
            table[mask] = to_fraction(value)
        return cls(n, tuple(table))

    @classmethod
    def from_function(cls, n: int, fn) -> "TUGame":
        """``fn`` receives a tuple of 0-based players and returns v(S)."""
        table = [Fraction(0)] + [to_fraction(fn(players(m))) for m in range(1, 1 << n)]
        return cls(n, tuple(table))

    @property
    def grand(self) -> int:
        return (1 << self.n) - 1

    def v(self, mask: int) -> Fraction:
        return self.worth[mask]

    def coalitions(self) -> range:
        return range(1, 1 << self.n)


def coalition_sum(x: Sequence[Fraction], mask: int) -> Fraction:
    total = Fraction(0)
    i = 0
    while mask:
        if mask & 1:
            total += x[i]
        mask >>= 1
        i += 1
    return total


def _check_length(game: TUGame, x: Sequence) -> None:
    if len(x) != game.n:
        raise ValueError(f"payoff has length {len(x)}, game has {game.n} players")


def excess(game: TUGame, s: int, x: Sequence[Fraction]) -> Fraction:
    """e(S, x) = v(S) - x(S)."""
    if s == 0:
        raise ValueError("excess of the empty coalition is undefined")
    if not 0 < s <= game.grand:
        raise ValueError(f"coalition mask {s} out of range")
    _check_length(game, x)
    return game.worth[s] - coalition_sum(x, s)


def all_excesses(game: TUGame, x: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Excess of every coalition, indexed by mask (entry 0 is unused and 0).

    Uses x(S) = x(S - lowest player) + x_lowest so the table costs O(2^n).
    """
    _check_length(game, x)
    size = 1 << game.n
    sums = [Fraction(0)] * size
    for m in range(1, size):
        low = m & -m
        sums[m] = sums[m ^ low] + x[low.bit_length() - 1]
    return tuple(w - s for w, s in zip(game.worth, sums))


@dataclass(frozen=True)
class ThetaVector:
    values: Tuple[Fraction, ...]
    coalitions: Tuple[int, ...]

    def __len__(self):
        return len(self.values)


def theta(game: TUGame, x: Sequence[Fraction]) -> ThetaVector:
    """All 2^n - 1 excesses in non-increasing order.

    Ties are listed by ascending mask so the provenance is reproducible.
    """
    exc = all_excesses(game, x)
    order = sorted(game.coalitions(), key=lambda m: (-exc[m], m))
    return ThetaVector(tuple(exc[m] for m in order), tuple(order))


def lex_compare(a, b) -> int:
    """Return LESS, EQUAL or GREATER comparing two theta vectors lexicographically.

    Accepts ThetaVector instances or plain sequences of values.
    """
    va = a.values if isinstance(a, ThetaVector) else tuple(a)
    vb = b.values if isinstance(b, ThetaVector) else tuple(b)
    if len(va) != len(vb):
        raise ValueError(f"cannot compare vectors of length {len(va)} and {len(vb)}")
    for p, q in zip(va, vb):
        if p < q:
            return LESS
        if p > q:
            return GREATER
    return EQUAL


def is_preimputation(game: TUGame, x: Sequence[Fraction]) -> bool:
    _check_length(game, x)
    return sum(x, Fraction(0)) == game.worth[game.grand]


def is_imputation(game: TUGame, x: Sequence[Fraction]) -> bool:
    if not is_preimputation(game, x):
        return False
    return all(x[i] >= game.worth[1 << i] for i in range(game.n))


def imputation_set_nonempty(game: TUGame) -> bool:
    return sum(game.worth[1 << i] for i in range(game.n)) <= game.worth[game.grand]


def level_collection(game: TUGame, x: Sequence[Fraction], psi) -> CoalitionCollection:
    """D(psi, x): every nonempty coalition whose excess is at least psi."""
    psi = to_fraction(psi)
    exc = all_excesses(game, x)
    return tuple(m for m in game.coalitions() if exc[m] >= psi)


def distinct_excess_levels(game: TUGame, x: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Attained excess values, strictly decreasing."""
    exc = all_excesses(game, x)
    return tuple(sorted({exc[m] for m in game.coalitions()}, reverse=True))
