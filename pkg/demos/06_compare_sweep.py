"""
Comparing the verifiers on random games
=======================================

Each row holds the verdict of every method; disagreements are written as
self-contained files that replay to the same traces.
"""

import tempfile

from kohlberg.harness import CompareConfig, compare_methods, replay_counterexample

out = tempfile.mkdtemp()
for rule in ("oracle", "oracle_perturbed", "random_imputation"):
    report = compare_methods(CompareConfig(4, 40, seed=1, dist="zero_normalized", point_rule=rule), out)
    s = report.summary
    print(f"{rule:18s} kohlberg={s['kohlberg']} modified disagree={s['modified_disagree']} "
          f"nguyen disagree={s['nguyen_disagree']} cases={s['containment_cases']} "
          f"literal-guard disagree={s['kohlberg_literal_disagree']}")
    for path in report.counterexamples:
        print("   ", path, "replays:", replay_counterexample(path))
print("reports under", out)
