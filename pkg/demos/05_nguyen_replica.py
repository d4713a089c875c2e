"""
The simplified nucleolus test
=============================

The replica tracks a span H and argmax sets T_k. Another reading of
T0-balancedness can be passed in and compared.
"""

from fractions import Fraction as F

from kohlberg.balance import check_balanced
from kohlberg.game import TUGame
from kohlberg.nguyen import verify_nucleolus_nguyen
from kohlberg.verify import verify_nucleolus

g = TUGame.from_dict(3, {0b011: 4, 0b111: 4})
for x in [(2, 2, 0), (F(5, 2), F(3, 2), 0), (F(3, 2), F(3, 2), 1)]:
    t = verify_nucleolus_nguyen(g, x)
    print(x, "replica:", t.final, " kohlberg:", verify_nucleolus(g, x).final)
    for s in t.steps:
        print(f"   T-union {s.collection} rank(H)={s.rank} {s.verdict.kind}")


def ignore_t0(q, t0, n):
    """Drop T0 and ask for plain balancedness of the union."""
    return check_balanced(q, n)


print("plain-balancedness reading:", verify_nucleolus_nguyen(g, (2, 2, 0), ignore_t0).final)
