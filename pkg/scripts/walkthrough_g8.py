"""Walk through the eight-point example: search tree, leaf MinPerms, candidates, canonical image."""

import argparse
from importlib.resources import files

from gbcanon.canonical import canonical_image
from gbcanon.perms import min_perm_list
from gbcanon.problem import ProblemFile
from gbcanon.search import nodes_list


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--problem", default=str(files("gbcanon") / "data" / "example-g8-gamma.json"))
    args = ap.parse_args()
    pf = ProblemFile.load(args.problem)
    G, a = pf.group(), pf.object
    res = canonical_image(a, G, pf.canon_config(), keep_tree=True)
    T = res.tree
    print(f"|G| = {G.order()}, {len(T.leaves)} leaves, {T.nodes} nodes")
    for leaf in T.leaves:
        _, p = min_perm_list(G, list(leaf.ordering))
        print(f"leaf {list(leaf.ordering)}  MinPerm {p}  candidate {a.act(p)}  "
              f"stacks on path {len(nodes_list(T, leaf))}")
    print(f"canonical image {res.image}")
    print(f"witness {res.witness}")


if __name__ == "__main__":
    main()
