"""Random (G, a, g) triples: check C(a) = C(a^g) and a^witness = C(a)."""

import argparse
import json

from gbcanon.canonical import CanonConfig
from gbcanon.laws import invariance_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-degree", type=int, default=10)
    ap.add_argument("--max-order", type=int, default=50_000)
    ap.add_argument("--prune", action="store_true")
    args = ap.parse_args()
    r = invariance_sweep(args.trials, args.seed, args.max_degree, args.max_order,
                         CanonConfig(prune=args.prune))
    for f in r.failures:
        print(json.dumps({"failure": f}))
    print(json.dumps({"trials": r.trials, "failures": len(r.failures), "kinds": r.kinds,
                      "max_degree": r.max_degree, "max_order": r.max_order,
                      "seconds": round(r.seconds, 2), "seed": args.seed}))
    raise SystemExit(0 if r.ok else 1)


if __name__ == "__main__":
    main()
