"""
Span checks against balancedness LPs
====================================
"""

from kohlberg.harness import bench_span_vs_lp, random_game
from kohlberg.oracle import prenucleolus

games = [random_game(6, s) for s in range(20)]
points = [prenucleolus(g)[0] for g in games]
table = bench_span_vs_lp(games, points)

for key, value in table.totals.items():
    print(f"{key:14s} {value:.4f}" if isinstance(value, float) else f"{key:14s} {value}")
