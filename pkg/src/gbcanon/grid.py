"""Grid groups and random benchmark instances."""

from __future__ import annotations

import random

from .perms import Permutation, PermGroup


def grid_point(i: int, j: int, n: int) -> int:
    return (i - 1) * n + j


def grid_group(n: int) -> PermGroup:
    """Sym(n) x Sym(n) acting on the n x n grid, ``(i,j) -> (i^s, j^t)``."""
    if n < 1:
        raise ValueError("grid side must be positive")
    small = []
    if n >= 2:
        small.append(Permutation.from_cycles([(1, 2)], n))
    if n >= 3:
        small.append(Permutation.from_cycles([tuple(range(1, n + 1))], n))
    gens = []
    for s in small:
        gens.append(Permutation([grid_point(s(i), j, n) for i in range(1, n + 1) for j in range(1, n + 1)]))
    for t in small:
        gens.append(Permutation([grid_point(i, t(j), n) for i in range(1, n + 1) for j in range(1, n + 1)]))
    return PermGroup(n * n, gens)


def random_subset(npoints: int, k: int, rng: random.Random) -> list[int]:
    return sorted(rng.sample(range(1, npoints + 1), k))


def random_involution(npoints: int, cycles: int, rng: random.Random) -> Permutation:
    """A product of ``cycles`` disjoint transpositions on random points."""
    if 2 * cycles > npoints:
        raise ValueError(f"{cycles} transpositions do not fit on {npoints} points")
    pts = rng.sample(range(1, npoints + 1), 2 * cycles)
    return Permutation.from_cycles([(pts[2 * i], pts[2 * i + 1]) for i in range(cycles)], npoints)


def random_group(degree: int, rng: random.Random, max_order: int = 50_000, ngens: int | None = None,
                 tries: int = 200) -> PermGroup:
    """A group from random generators whose order does not exceed ``max_order``.

    Generators are drawn as random permutations, restricted at random to a
    block decomposition of the points so that intransitive and imprimitive
    groups come up as well as large transitive ones.
    """
    for _ in range(tries):
        k = ngens if ngens is not None else rng.randint(1, 3)
        gens = [_random_generator(degree, rng) for _ in range(k)]
        G = PermGroup(degree, gens)
        if G.order() <= max_order:
            return G
    return PermGroup.trivial(degree)


def _random_generator(n: int, rng: random.Random) -> Permutation:
    style = rng.random()
    pts = list(range(1, n + 1))
    if style < 0.4:
        rng.shuffle(pts)
        return Permutation(pts)
    # a permutation moving only a random subset
    k = rng.randint(2, n) if n >= 2 else 1
    moved = rng.sample(pts, k)
    shuffled = moved[:]
    rng.shuffle(shuffled)
    img = list(pts)
    for a, b in zip(moved, shuffled):
        img[a - 1] = b
    if style < 0.7 or n < 2:
        return Permutation(img)
    # a short cycle
    c = rng.sample(pts, rng.randint(2, min(n, 5)))
    return Permutation.from_cycles([c], n)
