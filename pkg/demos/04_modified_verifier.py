"""
The span-pruned verifier
========================

Instead of the whole level set, each step keeps only coalitions whose
characteristic vector adds a new direction. The trace records what was
pruned and how the pruned collection relates to the full level set.
"""

from kohlberg.game import format_coalition
from kohlberg.harness import random_game
from kohlberg.modified import verify_prenucleolus_modified
from kohlberg.oracle import prenucleolus
from kohlberg.verify import verify_prenucleolus

g = random_game(5, seed=5, dist="uniform_int(-2,2)")
x, _ = prenucleolus(g)

t = verify_prenucleolus_modified(g, x)
for s in t.steps:
    print(f"k={s.k} psi={s.psi} eps={s.eps} |D_hat|={len(s.d_hat)} "
          f"rank={s.rank_hat}/{s.rank_full} case={s.case}")
    if s.dropped:
        print("   pruned:", [format_coalition(m) for m in s.dropped])
print("modified:", t.final, " kohlberg:", verify_prenucleolus(g, x).final)
