"""Command-line interface.

Exit codes: 0 success, 1 correctness failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .bench import InvarianceFailure, bench_conj, bench_grid
from .canonical import CanonConfig, canonical_image, same_orbit
from .problem import ProblemError, ProblemFile, load_group
from .perms import PermutationError, min_perm_list, parse_points, format_points
from .search import trace_dot, trace_json


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_canon(args) -> int:
    prob = ProblemFile.load(args.file)
    if prob.object is None:
        raise ProblemError(f"{args.file} has no object")
    cfg = prob.canon_config()
    if args.prune:
        cfg.prune = True
    if args.trace:
        cfg.trace = True
    G = prob.group()
    res = canonical_image(prob.object, G, cfg, keep_tree=bool(args.trace))
    if prob.object.act(res.witness) != res.image or not G.contains(res.witness):
        print("witness verification failed", file=sys.stderr)
        return 1
    if args.trace:
        path = Path(args.trace)
        text = trace_json(res.tree) if path.suffix == ".json" else trace_dot(res.tree)
        path.write_text(text + "\n")
    _emit(res.to_json())
    return 0


def cmd_orbit_eq(args) -> int:
    pa, pb = ProblemFile.load(args.a), ProblemFile.load(args.b)
    if pa.object is None or pb.object is None:
        raise ProblemError("both files need an object")
    if pa.degree != pb.degree or pa.generators != pb.generators:
        raise ProblemError("the two problem files must use the same group")
    eq, w = same_orbit(pa.object, pb.object, pa.group(), pa.canon_config())
    _emit({"equal": eq, "witness": str(w) if w is not None else None})
    return 0


def cmd_minlist(args) -> int:
    G = load_group(args.group)
    L = parse_points(args.list)
    image, g = min_perm_list(G, L)
    _emit({"image": format_points(image), "perm": str(g)})
    return 0


def cmd_selftest(args) -> int:
    from .laws import run_law_suite
    t0 = time.perf_counter()
    rep = run_law_suite(seed=args.seed, quick=args.quick)
    print(rep.jsonl())
    status = {"ok": rep.ok, "checks": len(rep.results), "failures": len(rep.failures()),
              "seconds": round(time.perf_counter() - t0, 3), "seed": args.seed}
    _emit(status)
    return 0 if rep.ok else 1


def _config_from_args(args) -> CanonConfig:
    cfg = CanonConfig()
    if getattr(args, "prune", False):
        cfg.prune = True
    return cfg


def cmd_bench_grid(args) -> int:
    sizes = args.setsize if args.setsize else None
    worst = 0.0
    count = 0
    for rec in bench_grid(args.n, sizes, args.reps, args.seed, _config_from_args(args)):
        _emit(rec.to_json())
        worst = max(worst, rec.seconds)
        count += 1
    _emit({"bench": "grid", "instances": count, "max_seconds": round(worst, 3), "seed": args.seed})
    return 0


def cmd_bench_conj(args) -> int:
    worst = 0.0
    count = 0
    for rec in bench_conj(args.n, args.cycles, args.reps, args.seed, _config_from_args(args)):
        _emit(rec.to_json())
        worst = max(worst, rec.seconds)
        count += 1
    _emit({"bench": "conj", "instances": count, "max_seconds": round(worst, 3), "seed": args.seed})
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gbcanon", description="Canonical images under permutation groups.")
    sub = p.add_subparsers(dest="cmd", parser_class=_Parser)

    c = sub.add_parser("canon", help="canonical image of the object in a problem file")
    c.add_argument("file")
    c.add_argument("--trace", metavar="OUT", help="write the search tree (.dot or .json)")
    c.add_argument("--prune", action="store_true", help="enable best-prefix pruning")
    c.set_defaults(func=cmd_canon)

    o = sub.add_parser("orbit-eq", help="decide whether two objects are in one orbit")
    o.add_argument("a")
    o.add_argument("b")
    o.set_defaults(func=cmd_orbit_eq)

    m = sub.add_parser("minlist", help="minimal image of an exhaustive list")
    m.add_argument("group", help="group file (degree + generators) or sym:N")
    m.add_argument("list", help='point list such as "[8,3,4,5,1,2,6,7]"')
    m.set_defaults(func=cmd_minlist)

    s = sub.add_parser("selftest", help="run the law suite on the shipped fixtures")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--quick", action="store_true")
    s.set_defaults(func=cmd_selftest)

    b = sub.add_parser("bench", help="benchmarks")
    bsub = b.add_subparsers(dest="bench", parser_class=_Parser)
    g = bsub.add_parser("grid", help="random sets in grid groups")
    g.add_argument("--n", type=int, nargs="+", required=True)
    g.add_argument("--setsize", type=int, nargs="+")
    g.add_argument("--reps", type=int, default=5)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--prune", action="store_true")
    g.set_defaults(func=cmd_bench_grid)
    j = bsub.add_parser("conj", help="involution conjugacy in grid groups")
    j.add_argument("--n", type=int, required=True)
    j.add_argument("--cycles", type=int, required=True)
    j.add_argument("--reps", type=int, default=5)
    j.add_argument("--seed", type=int, default=0)
    j.add_argument("--prune", action="store_true")
    j.set_defaults(func=cmd_bench_conj)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not hasattr(args, "func"):
            raise UsageError("missing subcommand")
        return args.func(args)
    except (UsageError, ProblemError, PermutationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvarianceFailure as exc:
        print(f"correctness failure: {exc}", file=sys.stderr)
        return 1


def cli_main(argv=None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
