"""
Excesses and the complaint vector
=================================

Three players, any pair or the grand coalition earns 1.
"""

from fractions import Fraction as F

from kohlberg.game import TUGame, distinct_excess_levels, format_coalition, lex_compare, theta

g = TUGame.from_function(3, lambda s: 1 if len(s) >= 2 else 0)

# the equal split and a lopsided split
equal = (F(1, 3),) * 3
corner = (1, 0, 0)

for x in (equal, corner):
    th = theta(g, x)
    print(x)
    for value, mask in zip(th.values, th.coalitions):
        print(f"   {format_coalition(mask):9s} {value}")
    print("   levels:", ", ".join(str(v) for v in distinct_excess_levels(g, x)))

# -1 means the first vector is lexicographically smaller, i.e. fairer
print("compare:", lex_compare(theta(g, equal), theta(g, corner)))
