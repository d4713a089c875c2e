"""Random games, the verifier comparison sweep and the span-vs-LP benchmark."""

from __future__ import annotations

import hashlib
import json
import logging
import random
import re
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .balance import check_balanced
from .exact_lp import StepCounter
from .game import (TUGame, all_excesses, imputation_set_nonempty, is_imputation,
                   level_collection, theta)
from .io import (dumps, emit_game, game_to_dict, parse_game, parse_payoff,
                 payoff_to_dict, trace_to_dict)
from .modified import d_tilde, verify_prenucleolus_modified
from .nguyen import verify_nucleolus_nguyen
from .oracle import nucleolus, prenucleolus
from .verify import verify_nucleolus, verify_prenucleolus

log = logging.getLogger(__name__)

POINT_RULES = ("oracle", "oracle_perturbed", "random_imputation")
PERTURBATION = Fraction(1, 7)
_DIST = re.compile(r"^\s*(uniform_int|zero_normalized)\s*(?:\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))?\s*$")


def parse_dist(dist) -> Tuple[str, int, int]:
    """``"uniform_int(-10,10)"`` -> ``("uniform_int", -10, 10)``.

    ``zero_normalized`` without bounds draws from 0..10 so the imputation
    set is never empty; ``uniform_int`` defaults to -10..10.
    """
    if isinstance(dist, tuple):
        kind, lo, hi = dist
    else:
        m = _DIST.match(dist)
        if not m:
            raise ValueError(f"unknown distribution {dist!r}")
        kind = m.group(1)
        if m.group(2) is None:
            lo, hi = (0, 10) if kind == "zero_normalized" else (-10, 10)
        else:
            lo, hi = int(m.group(2)), int(m.group(3))
    if lo > hi:
        raise ValueError(f"empty range {lo}..{hi}")
    return kind, lo, hi


def random_game(n: int, seed: int, dist="uniform_int(-10,10)") -> TUGame:
    """Deterministic random integer game: one independent draw per coalition."""
    kind, lo, hi = parse_dist(dist)
    rng = random.Random(f"game:{n}:{seed}:{kind}:{lo}:{hi}")
    worth = [0] + [rng.randint(lo, hi) for _ in range(1, 1 << n)]
    if kind == "zero_normalized":
        for i in range(n):
            worth[1 << i] = 0
    return TUGame(n, tuple(worth))


def perturb(x: Sequence[Fraction], rng: random.Random, size: Fraction = PERTURBATION):
    """Move along ``e_i - e_j`` so efficiency holds and the inf-norm change is ``size``."""
    n = len(x)
    if n == 1:
        raise ValueError("a one-player pre-imputation cannot be perturbed")
    i, j = rng.sample(range(n), 2)
    z = list(x)
    z[i] += size
    z[j] -= size
    return tuple(z)


def random_imputation(game: TUGame, rng: random.Random, denominator: int = 12):
    """A rational point of the imputation set (random grid point on its simplex)."""
    n = game.n
    low = [game.worth[1 << i] for i in range(n)]
    spare = game.worth[game.grand] - sum(low)
    if spare < 0:
        raise ValueError("imputation set is empty")
    parts = [rng.randint(0, denominator) for _ in range(n)]
    if not any(parts):
        parts[0] = 1
    total = sum(parts)
    share = [Fraction(p, total) * spare for p in parts]
    return tuple(lo + s for lo, s in zip(low, share))


def random_preimputation(game: TUGame, rng: random.Random):
    n = game.n
    x = [Fraction(rng.randint(-20, 20), 4) for _ in range(n - 1)]
    x.append(game.worth[game.grand] - sum(x))
    return tuple(x)


def game_hash(game: TUGame) -> str:
    return hashlib.sha256(emit_game(game).encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# comparison sweep
# ---------------------------------------------------------------------------

@dataclass
class CompareConfig:
    n: int
    count: int
    seed: int = 0
    dist: str = "uniform_int(-10,10)"
    point_rule: str = "oracle"

    def validate(self):
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.point_rule not in POINT_RULES:
            raise ValueError(f"point_rule must be one of {POINT_RULES}")
        if not 1 <= self.n <= 16:
            raise ValueError("n must be in 1..16")
        parse_dist(self.dist)


@dataclass
class ComparisonReport:
    config: dict
    rows: List[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    counterexamples: List[str] = field(default_factory=list)


def structural_violations(game, x, ktrace, mtrace) -> List[str]:
    """Checks that must never fail: positive gaps, D_hat inside its level, level monotonicity,
    theta being a permutation of all excesses."""
    out = []
    for s in mtrace.steps:
        if s.eps is not None:
            if s.eps <= 0:
                out.append(f"modified step {s.k}: eps={s.eps} not positive")
            if not set(s.d_hat) <= set(level_collection(game, x, s.psi - s.eps)):
                out.append(f"modified step {s.k}: D_hat not inside D(psi - eps)")
        if not set(s.d_hat) <= set(level_collection(game, x, s.psi)):
            out.append(f"modified step {s.k}: D_hat not inside D(psi)")
    prev = None
    for s in ktrace.steps:
        if prev is not None and not (set(prev.collection) < set(s.collection) and s.psi < prev.psi):
            out.append(f"kohlberg step {s.k}: levels not strictly monotone")
        prev = s
    th = theta(game, x)
    exc = all_excesses(game, x)
    if sorted(th.coalitions) != list(game.coalitions()) or \
            sorted(th.values) != sorted(exc[m] for m in game.coalitions()):
        out.append("theta is not a permutation of the excesses")
    return out


def _candidate(game, rule, rng):
    """(pre-imputation to test, imputation to test or None)."""
    if rule == "random_imputation":
        if imputation_set_nonempty(game):
            x = random_imputation(game, rng)
            return x, x
        return random_preimputation(game, rng), None
    pre, _ = prenucleolus(game)
    nuc = nucleolus(game)[0] if imputation_set_nonempty(game) else None
    if rule == "oracle":
        return pre, nuc
    x = perturb(pre, rng)
    if nuc is None:
        return x, None
    z = perturb(nuc, rng)
    return x, (z if is_imputation(game, z) else None)


def evaluate_game(cfg: CompareConfig, index: int) -> Tuple[dict, List[dict]]:
    """One row of the report plus the counterexample documents it produced."""
    game_seed = cfg.seed * 1_000_003 + index
    game = random_game(cfg.n, game_seed, cfg.dist)
    rng = random.Random(f"point:{game_seed}:{cfg.point_rule}")
    x, xn = _candidate(game, cfg.point_rule, rng)

    kt = verify_prenucleolus(game, x)
    kt_literal = verify_prenucleolus(game, x, check_final=False)
    mt = verify_prenucleolus_modified(game, x)
    row = {
        "index": index, "seed": game_seed, "game_hash": game_hash(game),
        "point": payoff_to_dict(x)["payoff"],
        "kohlberg": kt.final, "kohlberg_literal": kt_literal.final, "modified": mt.final,
        "cases": dict(Counter(s.case for s in mt.steps if s.case is not None)),
        "rank_mismatches": len(mt.rank_mismatches),
        "agree_modified": kt.final == mt.final,
        "violations": structural_violations(game, x, kt, mt),
        "nucleolus_point": None, "nucleolus_kohlberg": None, "nguyen": None, "agree_nguyen": None,
    }
    cases = []
    if not row["agree_modified"]:
        cases.append(counterexample_doc("modified", game, x))
    if xn is not None:
        nk = verify_nucleolus(game, xn, "tight")
        ng = verify_nucleolus_nguyen(game, xn)
        row.update(nucleolus_point=payoff_to_dict(xn)["payoff"], nucleolus_kohlberg=nk.final,
                   nguyen=ng.final, agree_nguyen=nk.final == ng.final)
        if not row["agree_nguyen"]:
            cases.append(counterexample_doc("nguyen", game, xn))
    return row, cases


def _traces_for(kind, game, x) -> Dict[str, dict]:
    if kind == "modified":
        return {"kohlberg": trace_to_dict(verify_prenucleolus(game, x)),
                "modified": trace_to_dict(verify_prenucleolus_modified(game, x))}
    if kind == "nguyen":
        return {"kohlberg_nucleolus": trace_to_dict(verify_nucleolus(game, x, "tight")),
                "nguyen": trace_to_dict(verify_nucleolus_nguyen(game, x))}
    raise ValueError(f"unknown counterexample kind {kind!r}")


def counterexample_doc(kind: str, game: TUGame, x) -> dict:
    traces = _traces_for(kind, game, x)
    return {"kind": kind, "game": game_to_dict(game), "point": payoff_to_dict(x),
            "verdicts": {k: t["final"] for k, t in traces.items()}, "traces": traces}


def replay_counterexample(doc) -> bool:
    """Recompute every trace of a counterexample and compare byte for byte."""
    if isinstance(doc, (str, Path)) and Path(doc).exists():
        doc = json.loads(Path(doc).read_text())
    game = parse_game(doc["game"])
    x = parse_payoff(doc["point"], game.n)
    fresh = _traces_for(doc["kind"], game, x)
    return all(dumps(fresh[k]) == dumps(doc["traces"][k]) for k in doc["traces"]) \
        and set(fresh) == set(doc["traces"])


def _summarise(rows) -> dict:
    total = len(rows)
    dis_mod = sum(1 for r in rows if not r["agree_modified"])
    with_nuc = [r for r in rows if r["agree_nguyen"] is not None]
    dis_ng = sum(1 for r in with_nuc if not r["agree_nguyen"])
    hist = Counter()
    for r in rows:
        hist.update(r["cases"])
    return {
        "rows": total,
        "kohlberg": dict(Counter(r["kohlberg"] for r in rows)),
        "modified_agree": total - dis_mod, "modified_disagree": dis_mod,
        "kohlberg_literal_disagree": sum(1 for r in rows if r["kohlberg_literal"] != r["kohlberg"]),
        "nucleolus_rows": len(with_nuc),
        "nguyen_agree": len(with_nuc) - dis_ng, "nguyen_disagree": dis_ng,
        "containment_cases": {k: hist.get(k, 0) for k in ("i", "ii", "iii")},
        "rank_mismatch_steps": sum(r["rank_mismatches"] for r in rows),
        "structural_violations": sum(len(r["violations"]) for r in rows),
    }


def compare_methods(config: CompareConfig, out_dir=None, workers: int = 1) -> ComparisonReport:
    """Run all verifiers on ``config.count`` random games and collect disagreements.

    With ``out_dir`` the report goes to ``report.json`` and each disagreement to
    ``counterexamples/<kind>-<index>.json``. Rows stay in game order whatever
    ``workers`` is.
    """
    if isinstance(config, dict):
        config = CompareConfig(**config)
    config.validate()
    idx = range(config.count)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(evaluate_game, [config] * config.count, idx, chunksize=4))
    else:
        results = [evaluate_game(config, i) for i in idx]
    report = ComparisonReport(config=dict(vars(config)))
    out = Path(out_dir) if out_dir is not None else None
    if out is not None:
        (out / "counterexamples").mkdir(parents=True, exist_ok=True)
    for row, cases in results:
        paths = []
        for doc in cases:
            if out is not None:
                p = out / "counterexamples" / f"{doc['kind']}-n{config.n}-{config.point_rule}-{row['index']:05d}.json"
                p.write_text(dumps(doc))
                paths.append(str(p))
            else:
                paths.append(None)
        row["counterexamples"] = paths
        report.rows.append(row)
        report.counterexamples.extend(p for p in paths if p)
    report.summary = _summarise(report.rows)
    if out is not None:
        (out / "report.json").write_text(dumps({"config": report.config, "summary": report.summary,
                                                "rows": report.rows}))
    log.info("compare n=%d rule=%s: %s", config.n, config.point_rule, report.summary)
    return report


# ---------------------------------------------------------------------------
# span checks versus balancedness LPs
# ---------------------------------------------------------------------------

@dataclass
class BenchRow:
    game: int
    level: int
    lp_pivots: Optional[int] = None
    lp_row_ops: Optional[int] = None
    lp_seconds: Optional[float] = None
    span_checks: Optional[int] = None
    span_row_ops: Optional[int] = None
    span_seconds: Optional[float] = None


@dataclass
class BenchTable:
    rows: List[BenchRow]
    totals: dict

    def step_counts(self):
        """Everything except wall-clock, for determinism checks."""
        return [(r.game, r.level, r.lp_pivots, r.lp_row_ops, r.span_checks, r.span_row_ops)
                for r in self.rows]


def bench_span_vs_lp(games: Sequence[TUGame], points: Sequence) -> BenchTable:
    """Per-level cost of the LPs Kohlberg's walk solves versus the span tests of the pruned walk."""
    if not games or len(games) != len(points):
        raise ValueError("games and points must be nonempty lists of equal length")
    rows: List[BenchRow] = []
    for g, (game, x) in enumerate(zip(games, points)):
        kt = verify_prenucleolus(game, x)
        mt = verify_prenucleolus_modified(game, x)
        by_level: Dict[int, BenchRow] = {}
        for s in kt.steps:
            c = StepCounter()
            t0 = time.perf_counter()
            check_balanced(s.collection, game.n, c)
            by_level[s.k] = BenchRow(g, s.k, c.pivots, c.row_ops, time.perf_counter() - t0)
        for prev, s in zip(mt.steps, mt.steps[1:]):
            c = StepCounter()
            t0 = time.perf_counter()
            reached = d_tilde(game, x, prev.psi, prev.eps, prev.d_hat, c)
            elapsed = time.perf_counter() - t0
            checks = len(set(level_collection(game, x, prev.psi - prev.eps)) - set(prev.d_hat))
            row = by_level.setdefault(s.k, BenchRow(g, s.k))
            row.span_checks, row.span_row_ops, row.span_seconds = checks, c.row_ops, elapsed
            assert set(reached) == set(s.added)
        rows.extend(by_level[k] for k in sorted(by_level))

    def total(attr):
        return sum(getattr(r, attr) or 0 for r in rows)

    totals = {a: total(a) for a in ("lp_pivots", "lp_row_ops", "lp_seconds",
                                    "span_checks", "span_row_ops", "span_seconds")}
    totals["games"] = len(games)
    totals["levels"] = len(rows)
    return BenchTable(rows, totals)


def bench_to_dict(table: BenchTable) -> dict:
    return {"totals": table.totals, "rows": [vars(r) for r in table.rows]}
