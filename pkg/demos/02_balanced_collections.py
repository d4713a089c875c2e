"""
Balanced collections and their certificates
===========================================

Every verdict carries a certificate: weights when the collection is
balanced, a Farkas vector y when it is not.
"""

from kohlberg.balance import check_balanced, property_I, property_II
from kohlberg.game import format_coalition

n = 3
examples = {
    "partition": (0b001, 0b010, 0b100),
    "all pairs": (0b011, 0b101, 0b110),
    "two pairs": (0b011, 0b101),
    "{1} and N": (0b001, 0b111),
}

for name, c in examples.items():
    v = check_balanced(c, n)
    print(f"{name:10s} {v.kind}")
    if v.weights:
        print("   weights:", {format_coalition(s): str(w) for s, w in v.weights.items()})
    if v.farkas_y:
        print("   farkas y:", [str(a) for a in v.farkas_y])
    # the dual and per-coalition routes must agree with the one-LP test
    print("   property I:", property_I(c, n)[0], " property II:", property_II(c, n)[0])
