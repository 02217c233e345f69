"""Vertex- and arc-labelled digraphs and persistent stacks of them."""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .perms import Permutation, PermutationError


class DigraphError(ValueError):
    pass


class LabelledDigraph:
    """Digraph on points ``1..n`` with integer vertex and arc labels.

    Label 0 means "unmarked".  Internally points are 0-based and arcs are
    kept as a sorted tuple of ``(a, b, label)`` triples, at most one label per
    ordered pair.
    """

    __slots__ = ("n", "vlabels", "arcs", "_out", "_in", "_nbrs", "_hash")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int, int]] = (),
                 vertex_labels: Sequence[int] | None = None):
        arcs0 = {}
        for a, b, lab in arcs:
            if not (1 <= a <= n and 1 <= b <= n):
                raise DigraphError(f"arc ({a},{b}) outside 1..{n}")
            key = (a - 1, b - 1)
            if key in arcs0 and arcs0[key] != lab:
                raise DigraphError(f"arc ({a},{b}) given two labels")
            arcs0[key] = int(lab)
        if vertex_labels is None:
            vl = (0,) * n
        else:
            vl = tuple(int(x) for x in vertex_labels)
            if len(vl) != n:
                raise DigraphError(f"{len(vl)} vertex labels for {n} points")
        self._set(n, vl, tuple(sorted((a, b, l) for (a, b), l in arcs0.items())))

    def _set(self, n, vl, arcs):
        self.n = n
        self.vlabels = vl
        self.arcs = arcs
        self._out = None
        self._in = None
        self._nbrs = None
        self._hash = None

    @classmethod
    def _raw(cls, n: int, vlabels: tuple, arcs: tuple) -> "LabelledDigraph":
        d = cls.__new__(cls)
        d._set(n, vlabels, arcs)
        return d

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], label: int = 1) -> "LabelledDigraph":
        """Undirected graph: each edge becomes two opposite arcs."""
        arcs = []
        for e in edges:
            a, b = e
            arcs.append((a, b, label))
            arcs.append((b, a, label))
        return cls(n, arcs)

    @classmethod
    def individualise(cls, n: int, v: int, label: int = 1) -> "LabelledDigraph":
        vl = [0] * n
        vl[v - 1] = label
        return cls._raw(n, tuple(vl), ())

    @classmethod
    def vertex_coloured(cls, labels: Sequence[int]) -> "LabelledDigraph":
        return cls._raw(len(labels), tuple(int(x) for x in labels), ())

    # -- structure -----------------------------------------------------------

    @property
    def vertex_labels(self) -> list[int]:
        return list(self.vlabels)

    def arc_list(self) -> list[tuple[int, int, int]]:
        """Arcs as 1-based ``(a, b, label)`` triples."""
        return [(a + 1, b + 1, l) for a, b, l in self.arcs]

    def has_arcs(self) -> bool:
        return bool(self.arcs)

    def out_adj(self) -> list[list[tuple[int, int]]]:
        if self._out is None:
            out = [[] for _ in range(self.n)]
            inn = [[] for _ in range(self.n)]
            for a, b, l in self.arcs:
                out[a].append((b, l))
                inn[b].append((a, l))
            self._out, self._in = out, inn
        return self._out

    def in_adj(self) -> list[list[tuple[int, int]]]:
        self.out_adj()
        return self._in

    def nbrs(self) -> list[list[tuple[int, int]]]:
        """For each ``w``: pairs ``(v, code)``, one per arc between v and w.

        ``code`` is ``2*label`` for an arc ``v -> w`` and ``2*label + 1`` for
        ``w -> v``.
        """
        if self._nbrs is None:
            nb = [[] for _ in range(self.n)]
            for a, b, l in self.arcs:
                nb[b].append((a, 2 * l))
                nb[a].append((b, 2 * l + 1))
            self._nbrs = nb
        return self._nbrs

    def edges(self) -> list[tuple[int, int]]:
        """Sorted 1-based undirected edges ``a < b`` (loops as ``(a, a)``)."""
        return sorted({(min(a, b) + 1, max(a, b) + 1) for a, b, _ in self.arcs})

    def is_symmetric(self) -> bool:
        s = set(self.arcs)
        return all((b, a, l) in s for a, b, l in self.arcs)

    # -- action --------------------------------------------------------------

    def act(self, g: Permutation) -> "LabelledDigraph":
        if g.degree != self.n:
            raise PermutationError(f"degree mismatch {g.degree} vs {self.n}")
        img = g._img
        vl = [0] * self.n
        for i, l in enumerate(self.vlabels):
            vl[img[i]] = l
        arcs = tuple(sorted((img[a], img[b], l) for a, b, l in self.arcs))
        return LabelledDigraph._raw(self.n, tuple(vl), arcs)

    __xor__ = act

    # -- comparison ----------------------------------------------------------

    def _key(self):
        return (self.n, self.vlabels, self.arcs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LabelledDigraph) and self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self) -> str:
        return f"LabelledDigraph(n={self.n}, arcs={self.arc_list()}, vertex_labels={list(self.vlabels)})"

    # -- io ------------------------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(t) for t in self.arc_list()],
                "vertex_labels": list(self.vlabels)}

    @classmethod
    def from_json(cls, data: dict) -> "LabelledDigraph":
        try:
            n = int(data["n"])
            arcs = [(int(a), int(b), int(l)) for a, b, l in data.get("arcs", [])]
            vl = data.get("vertex_labels")
        except (KeyError, TypeError, ValueError) as exc:
            raise DigraphError(f"bad digraph json: {exc}") from exc
        return cls(n, arcs, vl)

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def to_dot(self, name: str = "D") -> str:
        lines = [f"digraph {name} {{"]
        for i, l in enumerate(self.vlabels):
            lines.append(f'  {i + 1} [label="{i + 1}:{l}"];')
        for a, b, l in self.arc_list():
            lines.append(f'  {a} -> {b} [label="{l}"];')
        lines.append("}")
        return "\n".join(lines)


def act_on_digraph(D: LabelledDigraph, g: Permutation) -> LabelledDigraph:
    return D.act(g)


class DigraphStack:
    """Immutable sequence of digraphs of a common degree."""

    __slots__ = ("n", "entries", "_hash")

    def __init__(self, n: int, entries: Iterable[LabelledDigraph] = ()):
        ents = tuple(entries)
        for d in ents:
            if d.n != n:
                raise DigraphError(f"stack of degree {n} given a digraph of degree {d.n}")
        self.n = n
        self.entries = ents
        self._hash = None

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return DigraphStack(self.n, self.entries[i])
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def append(self, other: "DigraphStack | Iterable[LabelledDigraph]") -> "DigraphStack":
        if isinstance(other, DigraphStack):
            if other.n != self.n:
                raise DigraphError(f"degree mismatch {self.n} vs {other.n}")
            ents = other.entries
        else:
            ents = tuple(other)
        return DigraphStack(self.n, self.entries + ents)

    def act(self, g: Permutation) -> "DigraphStack":
        return DigraphStack(self.n, (d.act(g) for d in self.entries))

    __xor__ = act

    def is_prefix_of(self, other: "DigraphStack") -> bool:
        return len(self) <= len(other) and other.entries[:len(self)] == self.entries

    def __eq__(self, other) -> bool:
        return isinstance(other, DigraphStack) and self.n == other.n and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.entries))
        return self._hash

    def __repr__(self) -> str:
        return f"DigraphStack(n={self.n}, len={len(self)})"

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [d.to_json() for d in self.entries]}


def stack_append(S: DigraphStack, T: DigraphStack) -> DigraphStack:
    return S.append(T)
