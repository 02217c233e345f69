"""Brute-force ground truth and law checkers.

Nothing here uses stabilizer chains or the search tree: group elements come
from plain closure under the generators, and isomorphisms from explicit
enumeration or the exact backtracking approximator.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from itertools import permutations
from typing import Callable, Iterable, Sequence

from .digraphs import DigraphStack, LabelledDigraph
from .objects import CombinatorialObject
from .partition import (OrderedPartition, exact_iso, partition_approx)
from .perms import Permutation, PermGroup, _mul

DEFAULT_CAP = 100_000


class EnumerationRefused(RuntimeError):
    pass


@dataclass
class EnumeratedGroup:
    degree: int
    elements: list[Permutation]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        if not hasattr(self, "_set"):
            self._set = set(self.elements)
        return g in self._set


def enumerate_group(G: PermGroup, cap: int = DEFAULT_CAP) -> EnumeratedGroup:
    """All elements of ``G`` by breadth-first closure."""
    n = G.degree
    ident = tuple(range(n))
    gens = [g._img for g in G.generators]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = _mul(x, s)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise EnumerationRefused(f"group order exceeds cap {cap}")
                    nxt.append(y)
        frontier = nxt
    return EnumeratedGroup(n, sorted(Permutation._raw(e) for e in seen))


enumerate = enumerate_group  # noqa: A001  (the documented operation name)


def symmetric_elements(n: int) -> EnumeratedGroup:
    return EnumeratedGroup(n, [Permutation(p) for p in permutations(range(1, n + 1))])


def orbit_min(a: CombinatorialObject, E: Iterable[Permutation]) -> CombinatorialObject:
    """The least image of ``a`` over all listed elements."""
    return min((a.act(g) for g in E), key=lambda o: o.key())


def orbit_min_closure(a: CombinatorialObject, G: PermGroup) -> CombinatorialObject:
    """Least element of the orbit, found by closing ``{a}`` under the generators."""
    seen = {a}
    todo = [a]
    gens = G.generators
    while todo:
        x = todo.pop()
        for g in gens:
            y = x.act(g)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return min(seen, key=lambda o: o.key())


def brute_min_list(E: Iterable[Permutation], L: Sequence[int]) -> tuple[list[int], list[Permutation]]:
    """Least image of a list and every element attaining it."""
    best, who = None, []
    for g in E:
        img = g.act_list(L)
        if best is None or img < best:
            best, who = img, [g]
        elif img == best:
            who.append(g)
    return best, who


def same_orbit_brute(a: CombinatorialObject, b: CombinatorialObject, E: Iterable[Permutation]) -> bool:
    return any(a.act(g) == b for g in E)


# ---------------------------------------------------------------------------
# law checking
# ---------------------------------------------------------------------------


@dataclass
class LawResult:
    component: str
    law: str
    fixture: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return json.dumps(asdict(self))


@dataclass
class LawReport:
    results: list[LawResult] = field(default_factory=list)

    def add(self, *args, **kw) -> None:
        self.results.append(LawResult(*args, **kw))

    def extend(self, other: "LawReport") -> None:
        self.results.extend(other.results)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def failures(self) -> list[LawResult]:
        return [r for r in self.results if not r.ok]

    def jsonl(self) -> str:
        return "\n".join(r.line() for r in self.results)


def _random_perm(n: int, rng: random.Random) -> Permutation:
    img = list(range(1, n + 1))
    rng.shuffle(img)
    return Permutation(img)


def check_refiner(name: str, ref: Callable[[DigraphStack], list[LabelledDigraph]],
                  fixtures: dict[str, DigraphStack], H: EnumeratedGroup,
                  compat_elements: Sequence[Permutation] | None = None,
                  samples: int = 20, seed: int = 0) -> LawReport:
    """Compatibility and soundness of a refiner for the group listed in ``H``.

    Compatibility is sampled from ``compat_elements`` (the group over which
    the refiner is claimed compatible); soundness is checked by brute force
    for ``T = S^h`` with ``h`` sampled from Sym(n).
    """
    rng = random.Random(seed)
    rep = LawReport()
    for fid, S in fixtures.items():
        n = S.n
        RS = DigraphStack(n, ref(S))
        bad = None
        for _ in range(samples):
            g = rng.choice(compat_elements) if compat_elements else _random_perm(n, rng)
            if DigraphStack(n, ref(S.act(g))) != RS.act(g):
                bad = g
                break
        rep.add(name, "compatibility", fid, bad is None, "" if bad is None else f"g={bad}")
        bad = None
        for _ in range(max(1, samples // 4)):
            h = _random_perm(n, rng)
            T = S.act(h)
            RT = DigraphStack(n, ref(T))
            SS, TT = S.append(RS), T.append(RT)
            for g in H:
                if S.act(g) == T and SS.act(g) != TT:
                    bad = (h, g)
                    break
            if bad:
                break
        rep.add(name, "soundness", fid, bad is None, "" if bad is None else f"h={bad[0]} g={bad[1]}")
    return rep


def check_object_refiner(make: Callable[[CombinatorialObject], Callable], objects: dict[str, CombinatorialObject],
                         stacks: Sequence[DigraphStack], samples: int = 20, seed: int = 0) -> LawReport:
    """Family compatibility ``R_{a^g}(S^g) = R_a(S)^g`` and soundness for Stab(a)."""
    rng = random.Random(seed)
    rep = LawReport()
    for fid, a in objects.items():
        n = a.degree
        R = make(a)
        bad = None
        for S in stacks:
            for _ in range(samples):
                g = _random_perm(n, rng)
                Rg = make(a.act(g))
                if DigraphStack(n, Rg(S.act(g))) != DigraphStack(n, R(S)).act(g):
                    bad = g
                    break
            if bad:
                break
        rep.add("object", "compatibility", fid, bad is None, "" if bad is None else f"g={bad}")
        enc = DigraphStack(n, [a.encode()])
        stab = exact_iso(enc, enc).elements()
        bad = None
        for S in stacks:
            h = _random_perm(n, rng)
            T = S.act(h)
            SS, TT = S.append(R(S)), T.append(R(T))
            for g in stab:
                if S.act(g) == T and SS.act(g) != TT:
                    bad = g
                    break
        rep.add("object", "soundness", fid, bad is None, "" if bad is None else f"g={bad}")
    return rep


def check_approximator(name: str, part: Callable[[DigraphStack], OrderedPartition],
                       fixtures: dict[str, DigraphStack], samples: int = 50, seed: int = 0) -> LawReport:
    """The two ordered-orbit-approximator laws."""
    rng = random.Random(seed)
    rep = LawReport()
    for fid, S in fixtures.items():
        P = part(S)
        where = P.cell_index()
        aut = exact_iso(S, S)
        bad = [o for o in aut.orbits() if len({where[x] for x in o}) > 1]
        rep.add(name, "orbits-in-cells", fid, not bad, "" if not bad else f"orbit {bad[0]} split by {P}")
        badg = None
        for _ in range(samples):
            g = _random_perm(S.n, rng)
            if part(S.act(g)) != P.act(g):
                badg = g
                break
        rep.add(name, "equivariance", fid, badg is None,
                "" if badg is None else f"g={badg}: {part(S.act(badg))} != {P.act(badg)}")
    return rep


def check_splitter(name: str, split: Callable[[DigraphStack], list[DigraphStack]],
                   fixtures: dict[str, DigraphStack], samples: int = 30, seed: int = 0) -> LawReport:
    """Covering, progress and compatibility of a splitter."""
    rng = random.Random(seed)
    rep = LawReport()
    for fid, T in fixtures.items():
        kids = split(T)
        k = len(T)
        # (i) covering
        aut = exact_iso(T, T).elements()
        union = set()
        for C in kids:
            union |= exact_iso(kids[0], C).elements()
        rep.add(name, "covering", fid, union == aut,
                "" if union == aut else f"|Aut|={len(aut)} |union|={len(union)}")
        # (ii) progress, using the partition-stabilizer approximator
        top = partition_approx(T, T).size()
        sizes = [partition_approx(kids[0], C).size() for C in kids]
        ok = all(s < top for s in sizes)
        rep.add(name, "progress", fid, ok, "" if ok else f"parent {top}, children {sizes}")
        # (iii) compatibility as sets of appended suffixes
        base = {tuple(C.entries[k:]) for C in kids}
        bad = None
        for _ in range(samples):
            g = _random_perm(T.n, rng)
            got = {tuple(C.entries[k:]) for C in split(T.act(g))}
            want = {tuple(d.act(g) for d in ext) for ext in base}
            if got != want:
                bad = g
                break
        rep.add(name, "compatibility", fid, bad is None, "" if bad is None else f"g={bad}")
    return rep


def check_iso_approximator(name: str, approx, pairs: dict[str, tuple[DigraphStack, DigraphStack]],
                           samples: int = 10, seed: int = 0) -> LawReport:
    """Conditions (i)-(iv) for an isomorphism approximator, by enumeration."""
    rng = random.Random(seed)
    rep = LawReport()
    from .partition import all_isomorphisms_brute
    for fid, (S, T) in pairs.items():
        A = approx(S, T)
        elems = A.elements()
        iso = all_isomorphisms_brute(S, T)
        rep.add(name, "overestimate", fid, iso <= elems)
        short = S[: max(0, len(S) - 1)]
        rep.add(name, "different-lengths", fid, len(short) == len(T) or approx(short, T).is_empty())
        if elems:
            AS = approx(S, S).elements()
            h = next(iter(elems))
            ok = {a * h for a in AS} == elems
        else:
            ok = True
        rep.add(name, "coset-of-aut", fid, ok)
        bad = None
        for _ in range(samples):
            g = _random_perm(S.n, rng)
            got = approx(S.act(g), T.act(g)).elements()
            want = {g.inverse() * x * g for x in elems}
            if got != want:
                bad = g
                break
        rep.add(name, "compatibility", fid, bad is None, "" if bad is None else f"g={bad}")
    return rep
