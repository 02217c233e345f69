"""Involution conjugacy in the n x n grid group, for several numbers of transpositions."""

import argparse
import statistics

from gbcanon.bench import bench_conj
from gbcanon.canonical import CanonConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--cycles", type=int, nargs="+", default=[5, 25, 45])
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--prune", action="store_true")
    args = ap.parse_args()
    print(f"{'cycles':>6} {'median s':>9} {'max s':>8}")
    for c in args.cycles:
        ts = [r.seconds for r in bench_conj(args.n, c, args.reps, args.seed, CanonConfig(prune=args.prune))]
        print(f"{c:>6} {statistics.median(ts):>9.3f} {max(ts):>8.3f}")
    print(f"n {args.n}, seed {args.seed}")


if __name__ == "__main__":
    main()
