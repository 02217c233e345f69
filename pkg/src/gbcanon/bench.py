"""Benchmark drivers for grid-group sets and involution conjugacy.

Every instance checks the canonical labelling law on a freshly sampled
group element before its time is reported; a mismatch is raised, never
averaged away.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass

from .canonical import CanonConfig, canonical_image, same_orbit
from .grid import grid_group, random_involution, random_subset
from .objects import CombinatorialObject


class InvarianceFailure(AssertionError):
    pass


@dataclass
class BenchRecord:
    bench: str
    n: int
    size: int
    rep: int
    seed: int
    seconds: float
    leaves: int
    nodes: int
    ok: bool

    def to_json(self) -> dict:
        return asdict(self)


def default_set_sizes(n: int) -> list[int]:
    m = n * n
    return [m // 2, m // 4, m // 8]


def grid_instance(n: int, k: int, rng: random.Random, config: CanonConfig | None = None):
    G = grid_group(n)
    a = CombinatorialObject.point_set(n * n, random_subset(n * n, k, rng))
    g = G.random_element(rng)
    t0 = time.perf_counter()
    ra = canonical_image(a, G, config)
    rb = canonical_image(a.act(g), G, config)
    dt = time.perf_counter() - t0
    ok = (ra.image == rb.image and a.act(ra.witness) == ra.image
          and G.contains(ra.witness) and G.contains(rb.witness))
    return ok, dt, ra


def bench_grid(ns, sizes=None, reps: int = 5, seed: int = 0, config: CanonConfig | None = None):
    """Yield one record per instance; raise on a correctness failure."""
    rng = random.Random(seed)
    for n in ns:
        ks = sizes if sizes is not None else default_set_sizes(n)
        for k in ks:
            if not 0 <= k <= n * n:
                raise ValueError(f"set size {k} impossible on {n * n} points")
            for rep in range(reps):
                ok, dt, r = grid_instance(n, k, rng, config)
                rec = BenchRecord("grid", n, k, rep, seed, dt, r.leaves, r.nodes, ok)
                if not ok:
                    raise InvarianceFailure(f"canonical image not invariant: {rec}")
                yield rec


def bench_conj(n: int, cycles: int, reps: int = 5, seed: int = 0, config: CanonConfig | None = None):
    """Conjugacy of random involutions in the n x n grid group."""
    rng = random.Random(seed)
    G = grid_group(n)
    for rep in range(reps):
        p = random_involution(n * n, cycles, rng)
        g = G.random_element(rng)
        a = CombinatorialObject.permutation(n * n, p)
        b = a.act(g)
        t0 = time.perf_counter()
        eq, w = same_orbit(a, b, G, config)
        dt = time.perf_counter() - t0
        ok = eq and w is not None and a.act(w) == b and G.contains(w)
        rec = BenchRecord("conj", n, cycles, rep, seed, dt, 0, 0, ok)
        if not ok:
            raise InvarianceFailure(f"conjugate involutions not matched: {rec}")
        yield rec
