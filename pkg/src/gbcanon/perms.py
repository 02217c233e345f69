"""Permutations, permutation groups and stabilizer chains.

Points are 1-based everywhere in the public interface.  Internally a
permutation is a tuple of 0-based images, ``img[i] = i^g``, and products are
read left to right: ``(p * q)`` first applies ``p`` and then ``q``.
"""

from __future__ import annotations

import math
import re
from collections import deque
from typing import Iterable, Sequence


class PermutationError(ValueError):
    pass


def _mul(p: tuple, q: tuple) -> tuple:
    return tuple(map(q.__getitem__, p))


def _inv(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _identity(n: int) -> tuple:
    return tuple(range(n))


class Permutation:
    """A bijection of ``{1..n}`` stored as its image sequence."""

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Iterable[int]):
        img = tuple(int(x) - 1 for x in images)
        if sorted(img) != list(range(len(img))):
            raise PermutationError(f"not a permutation: {[x + 1 for x in img]}")
        self._img = img
        self._hash = None

    @classmethod
    def _raw(cls, img: tuple) -> "Permutation":
        p = cls.__new__(cls)
        p._img = img
        p._hash = None
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(_identity(n))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], n: int) -> "Permutation":
        img = list(range(n))
        seen = set()
        for c in cycles:
            for x in c:
                if not 1 <= x <= n:
                    raise PermutationError(f"point {x} outside 1..{n}")
                if x in seen:
                    raise PermutationError(f"point {x} repeated in cycles")
                seen.add(x)
            for i, x in enumerate(c):
                img[x - 1] = c[(i + 1) % len(c)] - 1
        return cls._raw(tuple(img))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Parse ``"(1,2,3)(4,5)"``, ``"()"`` or an image list ``"[2,3,1]"``."""
        s = text.strip()
        if s.startswith("["):
            try:
                vals = [int(x) for x in s.strip("[]").split(",") if x.strip()]
            except ValueError as exc:
                raise PermutationError(f"bad image list {text!r}") from exc
            p = cls(vals)
            if n is not None and p.degree != n:
                if p.degree > n:
                    raise PermutationError(f"{text!r} has degree {p.degree} > {n}")
                p = p.extended(n)
            return p
        if not re.fullmatch(r"(\(\s*(\d+\s*(,\s*\d+\s*)*)?\))*", s.replace(" ", "")):
            raise PermutationError(f"bad cycle notation {text!r}")
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", s):
            body = body.strip()
            if body:
                cycles.append([int(x) for x in body.split(",")])
        top = max((x for c in cycles for x in c), default=0)
        if n is None:
            n = top
        elif top > n:
            raise PermutationError(f"{text!r} moves point {top} > degree {n}")
        return cls.from_cycles(cycles, n)

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        return tuple(x + 1 for x in self._img)

    def extended(self, n: int) -> "Permutation":
        return Permutation._raw(self._img + tuple(range(self.degree, n)))

    def image(self, point: int) -> int:
        return self._img[point - 1] + 1

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise PermutationError(f"degree mismatch {self.degree} vs {other.degree}")
        return Permutation._raw(_mul(self._img, other._img))

    def inverse(self) -> "Permutation":
        return Permutation._raw(_inv(self._img))

    __invert__ = inverse

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self._img[i] == i:
                continue
            c = []
            j = i
            while not seen[j]:
                seen[j] = True
                c.append(j + 1)
                j = self._img[j]
            out.append(tuple(c))
        return out

    def act_list(self, points: Iterable[int]) -> list[int]:
        img = self._img
        return [img[x - 1] + 1 for x in points]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __lt__(self, other: "Permutation") -> bool:
        return self._img < other._img

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._img)
        return self._hash

    def __str__(self) -> str:
        cs = self.cycles()
        if not cs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cs)

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, {self.degree})"


def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    """``i -> (i^p)^q``."""
    return p * q


# ---------------------------------------------------------------------------
# stabilizer chains
# ---------------------------------------------------------------------------


class _Level:
    """One level of a chain: basic orbit with transversal and strong generators."""

    __slots__ = ("point", "gens", "trans", "inv", "checked")

    def __init__(self, point: int, n: int):
        self.point = point
        self.gens: list[tuple] = []
        ident = _identity(n)
        self.trans = {point: ident}  # x -> u with point^u = x
        self.inv = {point: ident}  # x -> u^-1
        self.checked: set = set()

    def add_gen(self, g: tuple) -> None:
        self.gens.append(g)
        # extend the orbit without touching existing transversal elements
        trans, inv = self.trans, self.inv
        todo = deque()
        for x, u in list(trans.items()):
            y = g[x]
            if y not in trans:
                uy = _mul(u, g)
                trans[y] = uy
                inv[y] = _inv(uy)
                todo.append(y)
        while todo:
            x = todo.popleft()
            u = trans[x]
            for s in self.gens:
                y = s[x]
                if y not in trans:
                    uy = _mul(u, s)
                    trans[y] = uy
                    inv[y] = _inv(uy)
                    todo.append(y)


class StabilizerChain:
    """Base and strong generating set built by deterministic Schreier-Sims.

    ``known_order`` lets construction stop as soon as the product of basic
    orbit lengths reaches it; the chain is then provably complete.
    """

    def __init__(self, n: int, gens: Iterable[tuple], base_prefix: Sequence[int] = (),
                 known_order: int | None = None):
        self.n = n
        self.levels: list[_Level] = []
        ident = _identity(n)
        gens = list(dict.fromkeys(g for g in gens if g != ident))
        for b in base_prefix:
            self.levels.append(_Level(b, n))
        for g in gens:
            self._insert_generator(g, 0)
        self._schreier_sims(known_order)

    # -- construction --------------------------------------------------------

    def _size(self) -> int:
        return math.prod(len(lv.trans) for lv in self.levels)

    def _insert_generator(self, g: tuple, start: int) -> int:
        """Add ``g`` (fixing base points before ``start``) as a strong generator.

        Returns the deepest level that received it.
        """
        depth = start
        while depth < len(self.levels) and g[self.levels[depth].point] == self.levels[depth].point:
            depth += 1
        if depth == len(self.levels):
            moved = next(i for i, x in enumerate(g) if x != i)
            self.levels.append(_Level(moved, self.n))
        for lv in self.levels[start:depth + 1]:
            lv.add_gen(g)
        return depth

    def _sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            x = g[lv.point]
            u = lv.inv.get(x)
            if u is None:
                return g, i
            g = _mul(g, u)
        return g, len(self.levels)

    def _schreier_sims(self, known_order: int | None) -> None:
        ident = _identity(self.n)
        i = len(self.levels) - 1
        while i >= 0:
            if known_order is not None and self._size() == known_order:
                return
            lv = self.levels[i]
            found = False
            for x in list(lv.trans):
                for k, s in enumerate(lv.gens):
                    key = (x, k)
                    if key in lv.checked:
                        continue
                    lv.checked.add(key)
                    y = s[x]
                    sch = _mul(_mul(lv.trans[x], s), lv.inv[y])
                    if sch == ident:
                        continue
                    h, j = self._sift(sch, i + 1)
                    if h != ident:
                        i = self._insert_generator(h, i + 1)
                        found = True
                        break
                if found:
                    break
            if not found:
                i -= 1

    # -- queries -------------------------------------------------------------

    @property
    def base(self) -> list[int]:
        return [lv.point + 1 for lv in self.levels]

    def order(self) -> int:
        return self._size()

    def orbit_sizes(self) -> list[int]:
        return [len(lv.trans) for lv in self.levels]

    def strong_generators(self) -> list[tuple]:
        return list(self.levels[0].gens) if self.levels else []

    def sift(self, p: Permutation) -> Permutation:
        """Residue of ``p``; the identity iff ``p`` lies in the group."""
        h, _ = self._sift(p._img)
        return Permutation._raw(h)

    def contains_raw(self, g: tuple) -> bool:
        h, _ = self._sift(g)
        return h == _identity(self.n)

    def contains(self, p: Permutation) -> bool:
        return p.degree == self.n and self.contains_raw(p._img)

    def tail(self, k: int) -> "StabilizerChain":
        """The chain of the stabilizer of the first ``k`` base points."""
        c = StabilizerChain.__new__(StabilizerChain)
        c.n = self.n
        c.levels = self.levels[k:]
        return c

    def elements(self):
        """Enumerate all elements (only sensible for small groups)."""
        ident = _identity(self.n)

        def rec(i, acc):
            if i < 0:
                yield acc
                return
            for u in self.levels[i].trans.values():
                yield from rec(i - 1, _mul(acc, u))

        yield from rec(len(self.levels) - 1, ident)


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------


class PermGroup:
    """A permutation group given by generators, with a lazily built chain.

    Point stabilizers are cached, so repeated minimal-image computations walk
    a shared trie of subgroups.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = (), *,
                 _raw_gens: Sequence[tuple] | None = None, _order: int | None = None,
                 _chain: StabilizerChain | None = None):
        self.degree = degree
        if _raw_gens is None:
            raw = []
            for g in generators:
                if g.degree != degree:
                    raise PermutationError(f"generator {g} has degree {g.degree}, expected {degree}")
                raw.append(g._img)
            _raw_gens = raw
        ident = _identity(degree)
        self._gens = [g for g in dict.fromkeys(_raw_gens) if g != ident]
        self._order = _order
        self._chain = _chain
        self._stabs: dict[int, PermGroup] = {}
        self._based: dict[int, StabilizerChain] = {}
        self._orbit_cache: dict[int, frozenset] = {}

    @classmethod
    def symmetric(cls, n: int) -> "PermGroup":
        gens = []
        if n >= 2:
            gens.append(Permutation.from_cycles([(1, 2)], n))
        if n >= 3:
            gens.append(Permutation.from_cycles([tuple(range(1, n + 1))], n))
        G = cls(n, gens)
        G._order = math.factorial(n)
        return G

    @classmethod
    def trivial(cls, n: int) -> "PermGroup":
        return cls(n, [], _order=1)

    @classmethod
    def from_strings(cls, degree: int, gens: Iterable[str]) -> "PermGroup":
        return cls(degree, [Permutation.parse(s, degree) for s in gens])

    @property
    def generators(self) -> list[Permutation]:
        return [Permutation._raw(g) for g in self._gens]

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self._gens, known_order=self._order)
            self._order = self._chain.order()
        return self._chain

    def order(self) -> int:
        if self._order is None:
            self._order = self.chain.order()
        return self._order

    def is_trivial(self) -> bool:
        return not self._gens

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        if not self._gens:
            return p.is_identity()
        return self.chain.contains(p)

    def orbit(self, point: int) -> frozenset:
        """Orbit of a 1-based point, as a set of 1-based points."""
        if not 1 <= point <= self.degree:
            raise PermutationError(f"point {point} outside 1..{self.degree}")
        return frozenset(x + 1 for x in self._orbit0(point - 1))

    def _orbit0(self, x: int) -> frozenset:
        orb = self._orbit_cache.get(x)
        if orb is None:
            seen = {x}
            todo = [x]
            gens = self._gens
            while todo:
                y = todo.pop()
                for g in gens:
                    z = g[y]
                    if z not in seen:
                        seen.add(z)
                        todo.append(z)
            orb = frozenset(seen)
            for y in orb:
                self._orbit_cache[y] = orb
        return orb

    def orbits(self) -> list[list[int]]:
        out, seen = [], set()
        for x in range(self.degree):
            if x not in seen:
                orb = self._orbit0(x)
                seen |= orb
                out.append(sorted(y + 1 for y in orb))
        return out

    def _chain_based_at(self, x: int) -> StabilizerChain:
        """A chain whose first base point is the 0-based point ``x``."""
        c = self._based.get(x)
        if c is None:
            c = StabilizerChain(self.degree, self._gens, base_prefix=[x], known_order=self.order())
            self._based[x] = c
        return c

    def _stabilizer0(self, x: int) -> "PermGroup":
        H = self._stabs.get(x)
        if H is None:
            if not self._gens:
                H = self
            else:
                c = self._chain_based_at(x)
                sub = c.tail(1)
                H = PermGroup(self.degree, _raw_gens=sub.strong_generators(),
                              _order=self.order() // len(c.levels[0].trans), _chain=sub)
            self._stabs[x] = H
        return H

    def stabilizer(self, point: int) -> "PermGroup":
        return self._stabilizer0(point - 1)

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        if len(set(points)) != len(points):
            raise PermutationError(f"repeated entries in {list(points)}")
        H = self
        for p in points:
            H = H.stabilizer(p)
        return H

    def _map_to_min(self, x: int) -> tuple[int, tuple]:
        """Minimum ``m`` of the orbit of 0-based ``x`` and an element mapping x to m."""
        orb = self._orbit0(x)
        m = min(orb)
        if m == x:
            return m, _identity(self.degree)
        c = self._chain_based_at(m)
        return m, c.levels[0].inv[x]

    def random_element(self, rng) -> Permutation:
        """Uniform random element via the chain's transversals."""
        g = _identity(self.degree)
        for lv in reversed(self.chain.levels):
            keys = sorted(lv.trans)
            g = _mul(g, lv.trans[keys[rng.randrange(len(keys))]])
        return Permutation._raw(g)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"PermGroup({self.degree}, [{gens}])"


def orbit(G: PermGroup, point: int) -> frozenset:
    return G.orbit(point)


def build_chain(G: PermGroup) -> StabilizerChain:
    return G.chain


def pointwise_stabilizer(G: PermGroup, points: Sequence[int]) -> PermGroup:
    return G.pointwise_stabilizer(points)


def min_image_partial(G: PermGroup, points: Sequence[int]) -> tuple[list[int], Permutation]:
    """Lexicographically least image of a list under ``G`` and an element achieving it.

    Each entry in turn is sent to the least point of its orbit under the
    stabilizer of the entries already placed.  For a non-exhaustive list the
    returned element is one representative of a coset.
    """
    image, g, _ = min_image_walk(G, points)
    return image, g


def min_image_walk(G: PermGroup, points: Sequence[int]) -> tuple[list[int], Permutation, PermGroup]:
    """As :func:`min_image_partial`, also returning the stabilizer of the image."""
    n = G.degree
    if len(set(points)) != len(points):
        raise PermutationError(f"repeated entries in {list(points)}")
    g = _identity(n)
    H = G
    image = []
    for p in points:
        if not 1 <= p <= n:
            raise PermutationError(f"point {p} outside 1..{n}")
        x = g[p - 1]
        if H._gens:
            m, u = H._map_to_min(x)
            g = _mul(g, u)
            H = H._stabilizer0(m)
        else:
            m = x
        image.append(m + 1)
    return image, Permutation._raw(g), H


def min_perm_list(G: PermGroup, points: Sequence[int]) -> tuple[list[int], Permutation]:
    """Minimal image of an exhaustive list and the unique element mapping to it."""
    if sorted(points) != list(range(1, G.degree + 1)):
        raise PermutationError(f"list is not exhaustive on 1..{G.degree}: {list(points)}")
    return min_image_partial(G, points)


def format_points(points: Iterable[int]) -> str:
    return "[" + ",".join(str(p) for p in points) + "]"


def parse_points(text: str) -> list[int]:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise PermutationError(f"bad point list {text!r}")
    body = s[1:-1].strip()
    if not body:
        return []
    try:
        return [int(x) for x in body.split(",")]
    except ValueError as exc:
        raise PermutationError(f"bad point list {text!r}") from exc
