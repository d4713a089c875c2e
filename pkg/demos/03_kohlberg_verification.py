"""
Verifying a pre-nucleolus, and improving a wrong guess
======================================================

A rejected point comes with a direction y; stepping along it strictly
lowers the complaint vector.
"""

from kohlberg.game import format_coalition, theta
from kohlberg.harness import random_game
from kohlberg.oracle import improving_direction, prenucleolus
from kohlberg.verify import verify_prenucleolus

g = random_game(4, seed=3)
x, solve = prenucleolus(g)
print("pre-nucleolus:", [str(a) for a in x])
for r in solve.rounds:
    print(f"   round value {r.value}, fixed {[format_coalition(s) for s in r.fixed]}")

trace = verify_prenucleolus(g, x)
print("verdict at the oracle point:", trace.final)
for s in trace.steps:
    print(f"   k={s.k} psi={s.psi} |D|={len(s.collection)} rank={s.rank} {s.verdict.kind}")

# a wrong guess: move 1 from player 4 to player 1
z = tuple(
    a + d for a, d in zip(x, (1, 0, 0, -1)))
bad = verify_prenucleolus(g, z)
print("verdict at the shifted point:", bad.final, "at level", bad.reject_level)

step = improving_direction(g, z, bad.steps[bad.reject_level].collection, bad.certificate)
print("y =", [str(a) for a in step.y], " delta* =", step.delta_star)
print("top of theta before:", [str(a) for a in theta(g, z).values[:4]])
print("top of theta after: ", [str(a) for a in theta(g, step.point).values[:4]])
