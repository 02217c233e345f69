"""Ordered partitions, colour refinement over digraph stacks, and approximators.

The refinement engine is incremental: stack entries are absorbed one at a
time and the state can be cloned at branch points.  Everything it does is
decided by labels and counts, never by point identities, so the resulting
ordered partition is equivariant under ``Sym(n)``.

Cell order follows one rule: when a cell splits it is removed and its pieces
are appended at the end, in ascending order of their splitting signature.
Live cells are therefore ordered by creation time, and singleton cells appear
in the order in which their points became fixed.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .digraphs import DigraphStack, LabelledDigraph
from .perms import Permutation, PermGroup, _identity, _inv, _mul


class OrderedPartition:
    """Ordered sequence of disjoint cells covering ``1..n``."""

    __slots__ = ("n", "cells")

    def __init__(self, cells: Iterable[Iterable[int]], n: int | None = None):
        cs = tuple(tuple(sorted(int(x) for x in c)) for c in cells)
        pts = sorted(x for c in cs for x in c)
        if n is None:
            n = len(pts)
        if pts != list(range(1, n + 1)) or any(not c for c in cs):
            raise ValueError(f"not an ordered partition of 1..{n}: {cs}")
        self.n = n
        self.cells = cs

    @classmethod
    def parse(cls, text: str) -> "OrderedPartition":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"bad partition {text!r}")
        body = body[1:-1]
        cells = [[int(x) for x in c.split(",") if x.strip()] for c in body.split("|")]
        return cls(cells)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells]

    def is_discrete(self) -> bool:
        return len(self.cells) == self.n

    def act(self, g: Permutation) -> "OrderedPartition":
        return OrderedPartition((g.act_list(c) for c in self.cells), self.n)

    def cell_index(self) -> dict[int, int]:
        return {x: i for i, c in enumerate(self.cells) for x in c}

    def __eq__(self, other) -> bool:
        return isinstance(other, OrderedPartition) and self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __str__(self) -> str:
        return "[" + "|".join(",".join(map(str, c)) for c in self.cells) + "]"

    __repr__ = __str__


def fixed_points(P: OrderedPartition) -> list[int]:
    return [c[0] for c in P.cells if len(c) == 1]


# ---------------------------------------------------------------------------
# refinement engine
# ---------------------------------------------------------------------------


class Refinement:
    """Equitable ordered partition of a growing digraph stack."""

    __slots__ = ("n", "entries", "cells", "cell_of", "next_id", "arc_entries")

    def __init__(self, n: int):
        self.n = n
        self.entries: list[LabelledDigraph] = []
        self.arc_entries: list[int] = []
        self.cells: dict[int, list[int]] = {0: list(range(n))} if n else {}
        self.cell_of = [0] * n
        self.next_id = 1

    def clone(self) -> "Refinement":
        r = Refinement.__new__(Refinement)
        r.n = self.n
        r.entries = list(self.entries)
        r.arc_entries = list(self.arc_entries)
        r.cells = {k: list(v) for k, v in self.cells.items()}
        r.cell_of = list(self.cell_of)
        r.next_id = self.next_id
        return r

    # -- views ---------------------------------------------------------------

    def partition(self) -> OrderedPartition:
        return OrderedPartition(([x + 1 for x in c] for c in self.cells.values()), self.n)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells.values()]

    def fixed(self) -> list[int]:
        return [c[0] + 1 for c in self.cells.values() if len(c) == 1]

    def is_discrete(self) -> bool:
        return len(self.cells) == self.n

    def ncells(self) -> int:
        return len(self.cells)

    # -- splitting -----------------------------------------------------------

    def _replace(self, cid: int, pieces: list[list[int]]) -> list[int]:
        del self.cells[cid]
        ids = []
        cell_of = self.cell_of
        for piece in pieces:
            nid = self.next_id
            self.next_id += 1
            self.cells[nid] = piece
            for v in piece:
                cell_of[v] = nid
            ids.append(nid)
        return ids

    @staticmethod
    def _enqueue(queue: deque, pending: dict, cid: int, ids: list[int], pieces, gen: int) -> None:
        """Queue the pieces of a split cell.

        If the old cell was not waiting in the queue, the partition is already
        stable with respect to it, so one largest piece can be left out: its
        counts are the old cell's minus the others'.
        """
        if cid in pending:
            del pending[cid]
            skip = -1
        else:
            sizes = [len(p) for p in pieces]
            skip = sizes.index(max(sizes))
        for i, nid in enumerate(ids):
            if i != skip:
                pending[nid] = True
                queue.append((nid, gen))

    def extend(self, digraphs: Iterable[LabelledDigraph], max_rounds: int | None = None) -> None:
        for d in digraphs:
            self.add(d, max_rounds)

    def add(self, d: LabelledDigraph, max_rounds: int | None = None) -> None:
        if d.n != self.n:
            raise ValueError(f"digraph degree {d.n} != {self.n}")
        idx = len(self.entries)
        self.entries.append(d)
        queue: deque = deque()
        pending: dict = {}
        vl = d.vlabels
        # a loop is seen by counting as an arc into the vertex's own cell,
        # which cannot tell it apart from an ordinary arc; use it as a colour
        loops: dict[int, list[int]] = {}
        for a, b, l in d.arcs:
            if a == b:
                loops.setdefault(a, []).append(l)
        if any(vl) or loops:
            for cid in list(self.cells):
                cell = self.cells[cid]
                groups: dict[tuple, list[int]] = {}
                for v in cell:
                    groups.setdefault((vl[v], tuple(sorted(loops.get(v, ())))), []).append(v)
                if len(groups) > 1:
                    keys = sorted(groups, key=lambda k: (k[0] == 0, k))
                    pieces = [groups[k] for k in keys]
                    self._enqueue(queue, pending, cid, self._replace(cid, pieces), pieces, 1)
        gen = 1
        if d.has_arcs():
            self.arc_entries.append(idx)
            if max_rounds is None or max_rounds >= 1:
                self._joint_pass(idx, queue, pending)
            gen = 2
        queue = deque((cid, max(g, gen)) for cid, g in queue)
        self._run(queue, pending, max_rounds)

    def _joint_pass(self, idx: int, queue: deque, pending: dict) -> None:
        """Split every cell once by arcs of entry ``idx`` into all current cells."""
        nb = self.entries[idx].nbrs()
        cell_of = self.cell_of
        for cid in list(self.cells):
            cell = self.cells[cid]
            if len(cell) == 1:
                continue
            sig: dict = {}
            for v in cell:
                key = tuple(sorted([(cell_of[w], code) for w, code in nb[v]]))
                lst = sig.get(key)
                if lst is None:
                    sig[key] = [v]
                else:
                    lst.append(v)
            if len(sig) > 1:
                keys = sorted(sig, key=lambda k: (len(k), k))
                pieces = [sig[k] for k in keys]
                self._enqueue(queue, pending, cid, self._replace(cid, pieces), pieces, 2)

    def _run(self, queue: deque, pending: dict, max_rounds: int | None) -> None:
        if not self.arc_entries:
            return
        cells = self.cells
        cell_of = self.cell_of
        nbl = [self.entries[e].nbrs() for e in self.arc_entries]
        while queue:
            cid, gen = queue.popleft()
            if max_rounds is not None and gen > max_rounds:
                break
            W = cells.get(cid)
            if W is None or cid not in pending:
                continue
            del pending[cid]
            # multiset of (entry, label, direction) codes of arcs joining v to W
            hits: dict[int, list[int]] = {}
            get = hits.get
            for e, nb in zip(self.arc_entries, nbl):
                shift = e << 40
                for w in W:
                    for v, code in nb[w]:
                        h = get(v)
                        if h is None:
                            hits[v] = [shift | code]
                        else:
                            h.append(shift | code)
            if not hits:
                continue
            touched: dict[int, int] = {}
            for v in hits:
                c = cell_of[v]
                touched[c] = touched.get(c, 0) + 1
            for tc in sorted(touched):
                cell = cells[tc]
                if len(cell) == 1:
                    continue
                sig: dict = {}
                if touched[tc] < len(cell):
                    sig[(0, ())] = []
                for v in cell:
                    h = get(v)
                    if h is None:
                        sig[(0, ())].append(v)
                    else:
                        h.sort()
                        key = (len(h), tuple(h))
                        lst = sig.get(key)
                        if lst is None:
                            sig[key] = [v]
                        else:
                            lst.append(v)
                if len(sig) == 1:
                    continue
                keys = sorted(sig)
                pieces = [sig[k] for k in keys]
                self._enqueue(queue, pending, tc, self._replace(tc, pieces), pieces, gen + 1)


def refine(S: DigraphStack | Sequence[LabelledDigraph], n: int | None = None,
           max_rounds: int | None = None) -> Refinement:
    if isinstance(S, DigraphStack):
        n = S.n
        ents = S.entries
    else:
        ents = list(S)
        if n is None:
            n = ents[0].n
    r = Refinement(n)
    r.extend(ents, max_rounds)
    return r


def refine_part(S: DigraphStack, max_rounds: int | None = None) -> OrderedPartition:
    """Ordered orbit approximator of a stack."""
    return refine(S, max_rounds=max_rounds).partition()


def stack_compare(S: DigraphStack, T: DigraphStack) -> str:
    """Compare stacks by the cell sizes of their partitions ("less", "equal", "greater")."""
    a, b = refine_part(S).sizes(), refine_part(T).sizes()
    return compare_sizes(a, b)


def compare_sizes(a: Sequence[int], b: Sequence[int]) -> str:
    a, b = list(a), list(b)
    if a < b:
        return "less"
    if a > b:
        return "greater"
    return "equal"


# ---------------------------------------------------------------------------
# isomorphism approximators
# ---------------------------------------------------------------------------


@dataclass
class ApproxResult:
    """A group, a right coset ``group * rep``, or the empty set."""

    kind: str
    group: PermGroup | None = None
    rep: Permutation | None = None
    _order: int | None = None

    def is_empty(self) -> bool:
        return self.kind == "empty"

    def size(self) -> int:
        if self.kind == "empty":
            return 0
        if self._order is not None:
            return self._order
        return self.group.order()

    def contains(self, g: Permutation) -> bool:
        if self.kind == "empty":
            return False
        if self.rep is not None:
            g = g * self.rep.inverse()
        return self.group.contains(g)

    def elements(self) -> set[Permutation]:
        """Explicit element set; only for small degrees."""
        if self.kind == "empty":
            return set()
        out = set()
        for e in self.group.chain.elements():
            p = Permutation._raw(e)
            out.add(p * self.rep if self.rep is not None else p)
        return out

    def orbits(self) -> list[list[int]]:
        if self.kind == "empty":
            return []
        return self.group.orbits()


def _combined(S: DigraphStack):
    n = S.n
    colour = [tuple(d.vlabels[v] for d in S.entries) for v in range(n)]
    arcs: dict[tuple[int, int], list] = {}
    for i, d in enumerate(S.entries):
        for a, b, l in d.arcs:
            arcs.setdefault((a, b), [None] * len(S)).__setitem__(i, l)
    mat = [[None] * n for _ in range(n)]
    for (a, b), ls in arcs.items():
        mat[a][b] = tuple(ls)
    return colour, mat


class _IsoSearch:
    """Backtracking over vertex assignments respecting all labels and arcs."""

    def __init__(self, S: DigraphStack, T: DigraphStack):
        self.n = S.n
        self.cs, self.ms = _combined(S)
        self.ct, self.mt = _combined(T)

    def find(self, prefix: Sequence[int]) -> tuple | None:
        """One isomorphism extending the 0-based image prefix, or None."""
        n = self.n
        img = [-1] * n
        used = [False] * n
        for x, y in enumerate(prefix):
            if used[y] or not self._ok(img, x, y):
                return None
            img[x] = y
            used[y] = True
        return self._rec(img, used, len(prefix))

    def _ok(self, img, x, y) -> bool:
        if self.cs[x] != self.ct[y]:
            return False
        ms, mt = self.ms, self.mt
        if ms[x][x] != mt[y][y]:
            return False
        for u in range(x):
            gu = img[u]
            if ms[u][x] != mt[gu][y] or ms[x][u] != mt[y][gu]:
                return False
        return True

    def _rec(self, img, used, x):
        n = self.n
        if x == n:
            return tuple(img)
        for y in range(n):
            if not used[y] and self._ok(img, x, y):
                img[x] = y
                used[y] = True
                r = self._rec(img, used, x + 1)
                if r is not None:
                    return r
                used[y] = False
                img[x] = -1
        return None


def automorphism_group(S: DigraphStack) -> PermGroup:
    """Aut(S) by brute-force search for strong generators along base 1..n."""
    n = S.n
    srch = _IsoSearch(S, S)
    gens: list[tuple] = []
    ident = _identity(n)
    # level i: stabilizer of 0..i-1; find coset reps for the orbit of i
    for i in range(n - 1, -1, -1):
        level_gens = [g for g in gens if all(g[j] == j for j in range(i))]
        orb = {i}
        todo = [i]
        while todo:
            x = todo.pop()
            for g in level_gens:
                if g[x] not in orb:
                    orb.add(g[x])
                    todo.append(g[x])
        for y in range(i + 1, n):
            if y in orb:
                continue
            g = srch.find(list(range(i)) + [y])
            if g is None:
                continue
            gens.append(g)
            level_gens.append(g)
            todo = list(orb)
            while todo:
                x = todo.pop()
                for h in level_gens:
                    if h[x] not in orb:
                        orb.add(h[x])
                        todo.append(h[x])
    gens = [g for g in gens if g != ident]
    return PermGroup(n, _raw_gens=gens)


def exact_iso(S: DigraphStack, T: DigraphStack) -> ApproxResult:
    """The exact set ``{g : S^g = T}``."""
    if S.n != T.n or len(S) != len(T):
        return ApproxResult("empty")
    h = _IsoSearch(S, T).find([])
    if h is None:
        return ApproxResult("empty")
    A = automorphism_group(S)
    hp = Permutation._raw(h)
    if S == T:
        return ApproxResult("group", A, None)
    return ApproxResult("coset", A, hp)


def cellwise_map(P: OrderedPartition, Q: OrderedPartition) -> Permutation | None:
    """The permutation sending each cell of P to the same-index cell of Q in sorted order."""
    if P.sizes() != Q.sizes():
        return None
    img = [0] * P.n
    for a, b in zip(P.cells, Q.cells):
        for x, y in zip(a, b):
            img[x - 1] = y
    return Permutation(img)


def partition_stabilizer(P: OrderedPartition) -> PermGroup:
    gens = []
    n = P.n
    for c in P.cells:
        if len(c) >= 2:
            gens.append(Permutation.from_cycles([(c[0], c[1])], n))
        if len(c) >= 3:
            gens.append(Permutation.from_cycles([tuple(c)], n))
    order = math.prod(math.factorial(len(c)) for c in P.cells)
    return PermGroup(n, gens, _order=order)


def partition_approx(S: DigraphStack, T: DigraphStack) -> ApproxResult:
    """Approximator derived from refine_part: all cell-preserving maps."""
    if S.n != T.n or len(S) != len(T):
        return ApproxResult("empty")
    P, Q = refine_part(S), refine_part(T)
    h = cellwise_map(P, Q)
    if h is None:
        return ApproxResult("empty")
    order = math.prod(math.factorial(len(c)) for c in P.cells)
    return ApproxResult("coset" if P != Q else "group", partition_stabilizer(P),
                        None if P == Q else h, order)


def components_partition(S: DigraphStack) -> OrderedPartition:
    """Connected components of the union of all arcs, ordered by (size, least point).

    Not an ordered orbit approximator; kept as a negative fixture for the
    law checker.
    """
    n = S.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for d in S.entries:
        for a, b, _ in d.arcs:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    comps: dict[int, list[int]] = {}
    for v in range(n):
        comps.setdefault(find(v), []).append(v + 1)
    cells = sorted(comps.values(), key=lambda c: (len(c), c[0]))
    return OrderedPartition(cells, n)


def all_isomorphisms_brute(S: DigraphStack, T: DigraphStack) -> set[Permutation]:
    """Every ``g`` in Sym(n) with ``S^g = T``, by full enumeration (tiny n only)."""
    out = set()
    if S.n != T.n or len(S) != len(T):
        return out
    for img in permutations(range(1, S.n + 1)):
        g = Permutation(img)
        if S.act(g) == T:
            out.add(g)
    return out
