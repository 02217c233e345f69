"""Grid-group scaling run: random point sets in Sym(n) x Sym(n) on the n x n grid.

Writes one JSON line per instance plus a per-(n, size) summary.
"""

import argparse
import json
import statistics

from gbcanon.bench import bench_grid
from gbcanon.canonical import CanonConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=list(range(2, 9)))
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--prune", action="store_true")
    ap.add_argument("--out", help="also write the records to this JSONL file")
    args = ap.parse_args()
    groups: dict = {}
    sink = open(args.out, "w") if args.out else None
    for rec in bench_grid(args.n, reps=args.reps, seed=args.seed, config=CanonConfig(prune=args.prune)):
        line = json.dumps(rec.to_json())
        if sink:
            sink.write(line + "\n")
        groups.setdefault((rec.n, rec.size), []).append(rec)
    if sink:
        sink.close()
    print(f"{'n':>3} {'size':>5} {'median s':>9} {'max s':>8} {'leaves':>8}")
    for (n, k), recs in sorted(groups.items()):
        ts = [r.seconds for r in recs]
        print(f"{n:>3} {k:>5} {statistics.median(ts):>9.3f} {max(ts):>8.3f} "
              f"{max(r.leaves for r in recs):>8}")
    print(f"seed {args.seed}")


if __name__ == "__main__":
    main()
