"""Combinatorial objects acted on by permutation groups.

Four kinds are supported: point sets, point lists, undirected graphs and
permutations (under conjugation).  Each has an action, a total order given
by :meth:`CombinatorialObject.key`, and a digraph encoding that commutes with
the action.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .digraphs import LabelledDigraph
from .perms import Permutation, PermutationError

KINDS = ("set", "list", "graph", "perm")


class ObjectError(ValueError):
    pass


@dataclass(frozen=True)
class CombinatorialObject:
    kind: str
    degree: int
    payload: Any

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ObjectError(f"unknown object type {self.kind!r}")

    # -- constructors --------------------------------------------------------

    @classmethod
    def point_set(cls, n: int, points) -> "CombinatorialObject":
        pts = frozenset(int(x) for x in points)
        _check_points(pts, n)
        return cls("set", n, pts)

    @classmethod
    def point_list(cls, n: int, points) -> "CombinatorialObject":
        pts = tuple(int(x) for x in points)
        _check_points(pts, n)
        if len(set(pts)) != len(pts):
            raise ObjectError(f"repeated entries in list {list(pts)}")
        return cls("list", n, pts)

    @classmethod
    def graph(cls, n: int, edges) -> "CombinatorialObject":
        es = set()
        for e in edges:
            a, b = (int(x) for x in e)
            _check_points((a, b), n)
            es.add((min(a, b), max(a, b)))
        return cls("graph", n, tuple(sorted(es)))

    @classmethod
    def permutation(cls, n: int, p: Permutation | str) -> "CombinatorialObject":
        if isinstance(p, str):
            p = Permutation.parse(p, n)
        if p.degree != n:
            raise ObjectError(f"permutation degree {p.degree} != {n}")
        return cls("perm", n, p)

    # -- action and order ----------------------------------------------------

    def act(self, g: Permutation) -> "CombinatorialObject":
        if g.degree != self.degree:
            raise PermutationError(f"degree mismatch {g.degree} vs {self.degree}")
        n = self.degree
        if self.kind == "set":
            return CombinatorialObject("set", n, frozenset(g.act_list(self.payload)))
        if self.kind == "list":
            return CombinatorialObject("list", n, tuple(g.act_list(self.payload)))
        if self.kind == "graph":
            es = set()
            for a, b in self.payload:
                x, y = g(a), g(b)
                es.add((min(x, y), max(x, y)))
            return CombinatorialObject("graph", n, tuple(sorted(es)))
        return CombinatorialObject("perm", n, g.inverse() * self.payload * g)

    __xor__ = act

    def key(self) -> tuple:
        """Sort key realising the total order on objects of one kind."""
        if self.kind == "set":
            return tuple(sorted(self.payload))
        if self.kind == "list":
            return self.payload
        if self.kind == "graph":
            return self.payload
        return self.payload.images

    def __lt__(self, other: "CombinatorialObject") -> bool:
        return self.key() < other.key()

    # -- encoding ------------------------------------------------------------

    def encode(self) -> LabelledDigraph:
        n = self.degree
        if self.kind == "set":
            vl = [0] * n
            for x in self.payload:
                vl[x - 1] = 1
            return LabelledDigraph.vertex_coloured(vl)
        if self.kind == "list":
            vl = [0] * n
            for i, x in enumerate(self.payload):
                vl[x - 1] = i + 1
            return LabelledDigraph.vertex_coloured(vl)
        if self.kind == "graph":
            return LabelledDigraph.from_edges(n, self.payload)
        p = self.payload
        return LabelledDigraph(n, [(i, p(i), 1) for i in range(1, n + 1)])

    # -- io ------------------------------------------------------------------

    def to_json(self) -> dict:
        if self.kind == "set":
            return {"type": "set", "points": sorted(self.payload)}
        if self.kind == "list":
            return {"type": "list", "points": list(self.payload)}
        if self.kind == "graph":
            return {"type": "graph", "edges": [list(e) for e in self.payload]}
        return {"type": "perm", "perm": str(self.payload)}

    @classmethod
    def from_json(cls, n: int, data: dict) -> "CombinatorialObject":
        try:
            kind = data["type"]
            if kind == "set":
                return cls.point_set(n, data["points"])
            if kind == "list":
                return cls.point_list(n, data["points"])
            if kind == "graph":
                return cls.graph(n, data["edges"])
            if kind == "perm":
                return cls.permutation(n, data["perm"])
        except (KeyError, TypeError) as exc:
            raise ObjectError(f"bad object json: {exc}") from exc
        raise ObjectError(f"unknown object type {data.get('type')!r}")

    def __str__(self) -> str:
        if self.kind == "set":
            return "{" + ",".join(map(str, sorted(self.payload))) + "}"
        if self.kind == "list":
            return "[" + ",".join(map(str, self.payload)) + "]"
        if self.kind == "graph":
            return " ".join(f"{{{a},{b}}}" for a, b in self.payload) or "(no edges)"
        return str(self.payload)


def _check_points(pts, n):
    for x in pts:
        if not 1 <= x <= n:
            raise ObjectError(f"point {x} outside 1..{n}")
