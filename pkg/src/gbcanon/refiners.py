"""Refiners and the equitable splitter.

A refiner maps a digraph stack to a (possibly empty) list of digraphs to
append.  Each refiner exposes ``__call__(S)`` as the plain mathematical
function and ``apply(S, r)`` which reuses an existing refinement ``r`` of
``S`` so the search never recomputes partitions from scratch.
"""

from __future__ import annotations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .digraphs import DigraphStack, LabelledDigraph
from .objects import CombinatorialObject
from .partition import Refinement, refine
from .perms import Permutation, PermGroup, min_image_walk

ORBITAL_CAP = 64


class ContractError(RuntimeError):
    pass


def contradiction(n: int) -> LabelledDigraph:
    """Reserved marker digraph; a stack containing it is a dead branch."""
    return LabelledDigraph.vertex_coloured([-1] * n)


def is_contradiction(d: LabelledDigraph) -> bool:
    return d.n > 0 and d.vlabels[0] == -1 and not d.arcs and all(l == -1 for l in d.vlabels)


class Refiner:
    name = "refiner"

    def __call__(self, S: DigraphStack) -> list[LabelledDigraph]:
        return self.apply(S, refine(S))

    def apply(self, S: DigraphStack, r: Refinement) -> list[LabelledDigraph]:
        raise NotImplementedError


class ObjectRefiner(Refiner):
    """Adds the encoding of the object to the empty stack."""

    name = "object"

    def __init__(self, obj: CombinatorialObject):
        self.obj = obj
        self._graph = obj.encode()

    def apply(self, S, r):
        return [self._graph] if len(S) == 0 else []


class NullRefiner(Refiner):
    """Neighbour counting is already part of the partition refinement."""

    name = "neighbour"

    def apply(self, S, r):
        return []


# ---------------------------------------------------------------------------
# fixed-point refiners
# ---------------------------------------------------------------------------


def forbit_graph(H: PermGroup) -> LabelledDigraph:
    labels = [0] * H.degree
    for orb in H.orbits():
        m = orb[0]
        for x in orb:
            labels[x - 1] = m
    return LabelledDigraph.vertex_coloured(labels)


def orbital_graphs(H: PermGroup, cap: int | None = ORBITAL_CAP) -> list[LabelledDigraph]:
    """Off-diagonal orbital graphs of ``H`` ordered by least arc, at most ``cap``."""
    n = H.degree
    if n < 2:
        return []
    gens = H._gens
    idx = np.arange(n * n, dtype=np.int64)
    a, b = np.divmod(idx, n)
    rows, cols = [], []
    for g in gens:
        ga = np.asarray(g, dtype=np.int64)
        rows.append(idx)
        cols.append(ga[a] * n + ga[b])
    if rows:
        r = np.concatenate(rows)
        c = np.concatenate(cols)
    else:
        r = c = np.zeros(0, dtype=np.int64)
    m = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(n * n, n * n))
    _, comp = connected_components(m, directed=True, connection="weak")
    off = a != b
    # label components by their least arc index, which is the order we want
    least = np.full(comp.max() + 1, n * n, dtype=np.int64)
    np.minimum.at(least, comp[off], idx[off])
    order = np.argsort(least, kind="stable")
    out = []
    for cid in order:
        if least[cid] >= n * n:
            break
        if cap is not None and len(out) >= cap:
            break
        members = idx[(comp == cid) & off]
        arcs = [(int(x) // n + 1, int(x) % n + 1, 1) for x in members]
        out.append(LabelledDigraph(n, arcs))
    return out


def orbital_digraph(H: PermGroup, cap: int | None = ORBITAL_CAP) -> LabelledDigraph:
    """The orbital graphs of ``H`` merged into one digraph, arc label = rank."""
    arcs = []
    for i, d in enumerate(orbital_graphs(H, cap)):
        arcs.extend((a, b, i + 1) for a, b, _ in d.arc_list())
    return LabelledDigraph(H.degree, arcs)


def forbit(G: PermGroup, L) -> DigraphStack:
    return DigraphStack(G.degree, [forbit_graph(G.pointwise_stabilizer(list(L)))])


def forbital(G: PermGroup, L, cap: int | None = ORBITAL_CAP) -> DigraphStack:
    return DigraphStack(G.degree, orbital_graphs(G.pointwise_stabilizer(list(L)), cap))


class GroupRefiner(Refiner):
    """Refiner for a group ``G`` built from a fixed-point refiner ``F``.

    With ``L`` the fixed points of the stack and ``g`` taking ``L`` to its
    minimal image ``M``, the output is ``F(M)`` pulled back along ``g``.
    """

    def __init__(self, G: PermGroup, kind: str = "orbit", cap: int | None = ORBITAL_CAP):
        if kind not in ("orbit", "orbital"):
            raise ValueError(f"unknown fixed-point refiner {kind!r}")
        self.G = G
        self.kind = kind
        self.cap = cap
        self.name = "group-" + kind
        self._cache: dict[tuple, list[LabelledDigraph]] = {}

    def fixed_graphs(self, M: tuple, H: PermGroup) -> list[LabelledDigraph]:
        """F(M), where ``H`` is the pointwise stabilizer of ``M``."""
        out = self._cache.get(M)
        if out is None:
            if self.kind == "orbit":
                out = [forbit_graph(H)]
            else:
                d = orbital_digraph(H, self.cap)
                out = [d] if d.has_arcs() else []
            self._cache[M] = out
        return out

    def apply_list(self, L) -> list[LabelledDigraph]:
        M, g, H = min_image_walk(self.G, L)
        graphs = self.fixed_graphs(tuple(M), H)
        if g.is_identity():
            return list(graphs)
        ginv = g.inverse()
        return [d.act(ginv) for d in graphs]

    def apply(self, S, r):
        return self.apply_list(r.fixed())


class CompletionRefiner(Refiner):
    """Individualises every point once the fixed points have trivial stabilizer.

    The fixed list keeps its order; the other points follow in ascending
    order of their images under the element taking the fixed list to its
    minimal image.
    """

    name = "completion"

    def __init__(self, G: PermGroup):
        self.G = G

    def applicable(self, L) -> bool:
        _, _, H = min_image_walk(self.G, L)
        return H.is_trivial()

    def ordering(self, L) -> list[int]:
        L = list(L)
        _, g, H = min_image_walk(self.G, L)
        if not H.is_trivial():
            raise ContractError(f"stabilizer of {L} is not trivial")
        fixed = set(L)
        rest = sorted((x for x in range(1, self.G.degree + 1) if x not in fixed), key=g)
        return L + rest

    def apply_list(self, L) -> list[LabelledDigraph]:
        order = self.ordering(L)
        labels = [0] * self.G.degree
        for i, x in enumerate(order):
            labels[x - 1] = i + 1
        return [LabelledDigraph.vertex_coloured(labels)]

    def apply(self, S, r):
        return self.apply_list(r.fixed())


def completion_refiner(G: PermGroup, S: DigraphStack) -> DigraphStack:
    return DigraphStack(G.degree, CompletionRefiner(G)(S))


def group_refiner(G: PermGroup, F: str, S: DigraphStack) -> DigraphStack:
    return DigraphStack(G.degree, GroupRefiner(G, F)(S))


# ---------------------------------------------------------------------------
# splitter
# ---------------------------------------------------------------------------


def split_cell(r: Refinement) -> list[int]:
    """First cell of least size among the non-singleton cells (1-based points)."""
    best = None
    for c in r.cells.values():
        if len(c) > 1 and (best is None or len(c) < len(best)):
            best = c
    if best is None:
        raise ContractError("partition is discrete; nothing to split")
    return sorted(x + 1 for x in best)


def equitable_split(S: DigraphStack, r: Refinement | None = None) -> list[DigraphStack]:
    """Children ``S || [Gamma_v]`` for each ``v`` of the splitting cell."""
    if r is None:
        r = refine(S)
    cell = split_cell(r)
    return [S.append([LabelledDigraph.individualise(S.n, v)]) for v in cell]


class EquitableSplitter:
    name = "equitable"

    def cell(self, r: Refinement) -> list[int]:
        return split_cell(r)

    def __call__(self, S: DigraphStack) -> list[DigraphStack]:
        return equitable_split(S)


PIPELINE_NAMES = ("object", "group-orbit", "group-orbital", "neighbour", "completion")
DEFAULT_PIPELINE = ("object", "group-orbit", "group-orbital", "completion")


def build_pipeline(names, obj: CombinatorialObject, G: PermGroup,
                   orbital_cap: int | None = ORBITAL_CAP) -> list[Refiner]:
    out: list[Refiner] = []
    for name in names:
        if name == "object":
            out.append(ObjectRefiner(obj))
        elif name == "group-orbit":
            out.append(GroupRefiner(G, "orbit"))
        elif name == "group-orbital":
            out.append(GroupRefiner(G, "orbital", orbital_cap))
        elif name == "neighbour":
            out.append(NullRefiner())
        elif name == "completion":
            out.append(CompletionRefiner(G))
        else:
            raise ValueError(f"unknown refiner {name!r}; expected one of {PIPELINE_NAMES}")
    if not out or out[0].name != "object":
        raise ValueError("pipeline must start with the object refiner")
    return out
