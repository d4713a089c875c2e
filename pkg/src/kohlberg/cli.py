"""Command line entry point.

    kohlberg compute --game G.json --solution prenucleolus [--trace]
    kohlberg verify  --game G.json --point P.json --method kohlberg --solution prenucleolus
    kohlberg compare --n 4 --count 100 --seed 1 --dist "uniform_int(-10,10)" --point-rule oracle --out runs/
    kohlberg bench   --games DIR --out bench.json
    kohlberg replay  runs/counterexamples/modified-n4-oracle-00007.json

``verify`` exits 0 when the point is the solution, 1 when it is not and 2 on
any error. ``replay`` exits 0 when the recomputed traces match the file.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import io
from .harness import (POINT_RULES, CompareConfig, bench_span_vs_lp, bench_to_dict,
                      compare_methods, replay_counterexample)
from .modified import verify_prenucleolus_modified
from .nguyen import verify_nucleolus_nguyen
from .oracle import nucleolus, prenucleolus
from .verify import verify_nucleolus, verify_prenucleolus

EXIT_SOLUTION, EXIT_NOT_SOLUTION, EXIT_ERROR = 0, 1, 2


def _compute(args):
    game = io.read_game(args.game)
    solver = prenucleolus if args.solution == "prenucleolus" else nucleolus
    x, trace = solver(game)
    doc = io.payoff_to_dict(x)
    if args.trace:
        doc["trace"] = io.solve_trace_to_dict(trace)
    sys.stdout.write(io.dumps(doc))
    return 0


def _verify(args):
    game = io.read_game(args.game)
    x = io.read_payoff(args.point, game.n)
    key = (args.method, args.solution)
    if key == ("kohlberg", "prenucleolus"):
        trace = verify_prenucleolus(game, x)
    elif key == ("kohlberg", "nucleolus"):
        trace = verify_nucleolus(game, x, args.singleton_rule)
    elif key == ("modified", "prenucleolus"):
        trace = verify_prenucleolus_modified(game, x)
    elif key == ("nguyen", "nucleolus"):
        trace = verify_nucleolus_nguyen(game, x)
    else:
        raise ValueError(f"method {args.method!r} does not verify the {args.solution}")
    if args.trace:
        sys.stdout.write(io.dumps(io.trace_to_dict(trace)))
    else:
        print(trace.final)
    return EXIT_SOLUTION if trace.accepted else EXIT_NOT_SOLUTION


def _compare(args):
    cfg = CompareConfig(args.n, args.count, args.seed, args.dist, args.point_rule)
    report = compare_methods(cfg, args.out, workers=args.workers)
    sys.stdout.write(io.dumps(report.summary))
    return 0


def _bench(args):
    paths = sorted(p for p in Path(args.games).glob("*.json") if not p.name.endswith(".point.json"))
    if not paths:
        raise ValueError(f"no game files in {args.games}")
    games, points = [], []
    for p in paths:
        game = io.read_game(p)
        point_file = p.with_name(p.stem + ".point.json")
        x = io.read_payoff(point_file, game.n) if point_file.exists() else prenucleolus(game)[0]
        games.append(game)
        points.append(x)
    table = bench_span_vs_lp(games, points)
    doc = bench_to_dict(table)
    doc["games"] = [str(p) for p in paths]
    Path(args.out).write_text(io.dumps(doc))
    sys.stdout.write(io.dumps(table.totals))
    return 0


def _replay(args):
    ok = replay_counterexample(json.loads(Path(args.file).read_text()))
    print("identical" if ok else "mismatch")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kohlberg", description="Exact (pre-)nucleolus computation and verification.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute the pre-nucleolus or nucleolus")
    c.add_argument("--game", required=True)
    c.add_argument("--solution", choices=("prenucleolus", "nucleolus"), default="prenucleolus")
    c.add_argument("--trace", action="store_true")
    c.set_defaults(func=_compute)

    v = sub.add_parser("verify", help="check whether a payoff is the solution")
    v.add_argument("--game", required=True)
    v.add_argument("--point", required=True)
    v.add_argument("--method", choices=("kohlberg", "modified", "nguyen"), default="kohlberg")
    v.add_argument("--solution", choices=("prenucleolus", "nucleolus"), default="prenucleolus")
    v.add_argument("--singleton-rule", choices=("all", "tight"), default="tight")
    v.add_argument("--trace", action="store_true", help="print the full trace instead of the verdict")
    v.set_defaults(func=_verify)

    m = sub.add_parser("compare", help="run every verifier on random games")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--count", type=int, required=True)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--dist", default="uniform_int(-10,10)")
    m.add_argument("--point-rule", choices=POINT_RULES, default="oracle")
    m.add_argument("--out", required=True)
    m.add_argument("--workers", type=int, default=1)
    m.set_defaults(func=_compare)

    b = sub.add_parser("bench", help="span checks versus balancedness LPs")
    b.add_argument("--games", required=True, help="directory of game files (optional NAME.point.json)")
    b.add_argument("--out", required=True)
    b.set_defaults(func=_bench)

    r = sub.add_parser("replay", help="recompute a counterexample file")
    r.add_argument("file")
    r.set_defaults(func=_replay)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
