"""Search-tree construction: refine to a fixpoint, split, recurse."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .digraphs import DigraphStack, LabelledDigraph
from .partition import Refinement
from .refiners import (CompletionRefiner, EquitableSplitter, GroupRefiner, ObjectRefiner,
                       Refiner, is_contradiction)


class SearchError(RuntimeError):
    pass


@dataclass
class Leaf:
    id: int
    ordering: tuple[int, ...]
    #: cell sizes at every checkpoint from the root down, compared as a list
    key: tuple[tuple[int, ...], ...]
    #: stack length at every checkpoint
    lengths: tuple[int, ...]
    stack: DigraphStack


@dataclass
class SearchTree:
    n: int
    leaves: list[Leaf]
    nodes: int
    dead: int = 0
    pruned: int = 0
    trace: list[dict] | None = None

    def orderings(self) -> list[tuple[int, ...]]:
        return [l.ordering for l in self.leaves]


@dataclass
class _Node:
    id: int
    depth: int
    entries: tuple
    r: Refinement
    last: list
    checkpoints: list = field(default_factory=list)


def _checkpoint(node: _Node) -> None:
    node.checkpoints.append((len(node.entries), tuple(node.r.sizes())))


def _refine_node(node: _Node, pipeline: Sequence[Refiner]) -> bool:
    """Apply the pipeline until the partition is stable.  False on a dead branch."""
    r = node.r
    while True:
        before = r.ncells()
        for i, ref in enumerate(pipeline):
            if isinstance(ref, ObjectRefiner):
                out = ref.apply(node.entries, r)
            elif isinstance(ref, CompletionRefiner):
                if r.is_discrete():
                    continue
                L = tuple(r.fixed())
                if node.last[i] == L:
                    continue
                node.last[i] = L
                if not ref.applicable(L):
                    continue
                out = ref.apply_list(L)
            elif isinstance(ref, GroupRefiner):
                if r.is_discrete():
                    continue
                L = tuple(r.fixed())
                if node.last[i] == L:
                    continue
                node.last[i] = L
                out = ref.apply_list(L)
            else:
                out = ref.apply(DigraphStack(r.n, node.entries), r)
            if not out:
                continue
            if any(is_contradiction(d) for d in out):
                return False
            node.entries = node.entries + tuple(out)
            r.extend(out)
            _checkpoint(node)
        if r.ncells() == before:
            return True


def build_tree(n: int, pipeline: Sequence[Refiner], splitter=None, *, prune: bool = False,
               reverse_children: bool = False, trace: bool = False) -> SearchTree:
    """Depth-first construction of the search tree for one object.

    With ``prune`` set, subtrees whose checkpoint sizes already exceed those
    of the best leaf seen so far are skipped; only leaves that can be minimal
    are kept, so the canonical result is unchanged.
    """
    if splitter is None:
        splitter = EquitableSplitter()
    if not pipeline or not isinstance(pipeline[0], ObjectRefiner):
        raise SearchError("pipeline must start with the object refiner")
    root = _Node(0, 0, (), Refinement(n), [None] * len(pipeline))
    _checkpoint(root)
    todo = [(root, None)]
    leaves: list[Leaf] = []
    nodes = 1
    dead = 0
    pruned = 0
    best: list | None = None
    events: list[dict] | None = [] if trace else None

    def beaten(node):
        if best is None:
            return False
        k = [s for _, s in node.checkpoints]
        return k > best[:len(k)]

    while todo:
        node, parent = todo.pop()
        alive = _refine_node(node, pipeline)
        if events is not None:
            events.append({"id": node.id, "parent": parent, "depth": node.depth,
                           "partition": str(node.r.partition()),
                           "stack_length": len(node.entries), "dead": not alive})
        if not alive:
            dead += 1
            continue
        if prune and beaten(node):
            pruned += 1
            continue
        r = node.r
        if r.is_discrete():
            key = tuple(s for _, s in node.checkpoints)
            leaf = Leaf(len(leaves), tuple(r.fixed()), key,
                        tuple(l for l, _ in node.checkpoints), DigraphStack(n, node.entries))
            if prune:
                if best is None or list(key) < best:
                    best = list(key)
                    leaves = [leaf]
                    leaf.id = 0
                elif list(key) == best:
                    leaf.id = len(leaves)
                    leaves.append(leaf)
            else:
                leaves.append(leaf)
            if events is not None:
                events[-1]["leaf"] = leaf.ordering
            continue
        cell = splitter.cell(r)
        order = cell[::-1] if reverse_children else cell
        kids = []
        for v in order:
            nr = r.clone()
            d = LabelledDigraph.individualise(n, v)
            nr.add(d)
            child = _Node(nodes, node.depth + 1, node.entries + (d,), nr, list(node.last),
                          list(node.checkpoints))
            _checkpoint(child)
            nodes += 1
            kids.append((child, node.id))
        # pop order follows the child order
        todo.extend(reversed(kids))
    if not leaves and not pruned:
        raise SearchError("every branch of the search tree died")
    return SearchTree(n, leaves, nodes, dead, pruned, events)


def nodes_list(T: SearchTree, leaf: Leaf) -> list[DigraphStack]:
    """Stacks along the path from the root to ``leaf``."""
    if leaf.id >= len(T.leaves) or T.leaves[leaf.id] is not leaf:
        raise SearchError("leaf does not belong to this tree")
    return [leaf.stack[:k] for k in leaf.lengths]


def trace_json(T: SearchTree) -> str:
    if T.trace is None:
        raise SearchError("tree was built without tracing")
    return json.dumps({"n": T.n, "nodes": T.trace,
                       "leaves": [list(l.ordering) for l in T.leaves]}, indent=1)


def trace_dot(T: SearchTree) -> str:
    if T.trace is None:
        raise SearchError("tree was built without tracing")
    lines = ["digraph search {", "  node [shape=box];"]
    for ev in T.trace:
        label = f"{ev['partition']}\\nlen={ev['stack_length']}"
        if "leaf" in ev:
            label += "\\nleaf"
        if ev["dead"]:
            label += "\\ndead"
        lines.append(f'  n{ev["id"]} [label="{label}"];')
        if ev["parent"] is not None:
            lines.append(f"  n{ev['parent']} -> n{ev['id']};")
    lines.append("}")
    return "\n".join(lines)
