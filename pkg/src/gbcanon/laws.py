"""The shipped law suite: fixtures plus every check from :mod:`oracle`."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .canonical import CanonConfig, canonical_image
from .digraphs import DigraphStack, LabelledDigraph
from .grid import random_group
from .objects import CombinatorialObject
from .oracle import (LawReport, brute_min_list, check_approximator, check_iso_approximator,
                     check_object_refiner, check_refiner, check_splitter, enumerate_group)
from .partition import components_partition, exact_iso, refine_part
from .perms import Permutation, PermGroup
from .refiners import (CompletionRefiner, GroupRefiner, ObjectRefiner, equitable_split, forbit_graph,
                       orbital_digraph)

GAMMA1_EDGES = [(1, 2), (1, 3), (2, 3), (5, 6), (6, 7)]
GAMMA2_EDGES = [(1, 6), (1, 7), (2, 6), (2, 7), (3, 8), (4, 8), (5, 8)]
G8_GENERATORS = ["(1,2,3,4,5,6,8)", "(1,3,2,6,4,5)", "(1,6)(2,3)(4,5)(7,8)"]


def g8() -> PermGroup:
    return PermGroup.from_strings(8, G8_GENERATORS)


def gamma_stacks() -> dict[str, DigraphStack]:
    return {"gamma1": DigraphStack(8, [LabelledDigraph.from_edges(8, GAMMA1_EDGES)]),
            "gamma2": DigraphStack(8, [LabelledDigraph.from_edges(8, GAMMA2_EDGES)])}


def random_digraph(n: int, rng: random.Random, labels: int = 2, p: float = 0.3) -> LabelledDigraph:
    arcs = [(a, b, rng.randint(1, labels)) for a in range(1, n + 1) for b in range(1, n + 1)
            if rng.random() < p]
    vl = [rng.randint(0, labels) if rng.random() < 0.3 else 0 for _ in range(n)]
    return LabelledDigraph(n, arcs, vl)


def random_stack(n: int, rng: random.Random, max_len: int = 3) -> DigraphStack:
    ents = []
    for _ in range(rng.randint(1, max_len)):
        r = rng.random()
        if r < 0.25:
            ents.append(LabelledDigraph.individualise(n, rng.randint(1, n)))
        elif r < 0.5:
            es = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < 0.4]
            ents.append(LabelledDigraph.from_edges(n, es))
        else:
            ents.append(random_digraph(n, rng))
    return DigraphStack(n, ents)


def random_stacks(count: int, rng: random.Random, nmin: int = 3, nmax: int = 6) -> dict[str, DigraphStack]:
    return {f"rand{i}": random_stack(rng.randint(nmin, nmax), rng) for i in range(count)}


def _fixed_then(G_fn, kind):
    """Refiner function on stacks matching how the search calls it."""
    def f(S: DigraphStack):
        from .partition import refine
        r = refine(S)
        if r.is_discrete():
            return []
        if kind == "completion":
            if not G_fn.applicable(r.fixed()):
                return []
        return G_fn.apply_list(r.fixed())
    return f


def run_law_suite(seed: int = 0, quick: bool = False) -> LawReport:
    rng = random.Random(seed)
    rep = LawReport()
    gam = gamma_stacks()
    nrand = 6 if quick else 30
    rand = random_stacks(nrand, rng)

    # ordered orbit approximator, and the components negative control
    rep.extend(check_approximator("refine_part", refine_part, {**gam, **rand}, seed=seed))
    # the negative control passes when the checker rejects the fixture
    bad = check_approximator("components", components_partition, gam, seed=seed)
    per_fixture = {}
    for r in bad.results:
        per_fixture.setdefault(r.fixture, []).append(r)
    for fid, rs in per_fixture.items():
        failed = [r.law for r in rs if not r.ok]
        rep.add("components", "rejected-by-checker", fid, bool(failed),
                f"failed laws: {failed}" if failed else "checker accepted an invalid approximator")

    # splitter
    split_fixtures = {**gam, **{k: v for k, v in rand.items() if not refine_part(v).is_discrete()}}
    rep.extend(check_splitter("equitable", equitable_split, split_fixtures, seed=seed))

    # exact isomorphism approximator
    pairs = {}
    for fid, S in list(rand.items())[:8]:
        h = Permutation([x for x in rng.sample(range(1, S.n + 1), S.n)])
        pairs[fid + "-conj"] = (S, S.act(h))
        pairs[fid + "-rand"] = (S, random_stack(S.n, rng, max_len=len(S)))
    rep.extend(check_iso_approximator("exact_iso", exact_iso, pairs, seed=seed))

    # object refiner, all four object kinds
    objs = {}
    for i in range(4 if quick else 16):
        n = rng.randint(3, 6)
        kind = ["set", "list", "graph", "perm"][i % 4]
        objs[f"{kind}{i}"] = random_object(kind, n, rng)
    obj_stacks_by_n = {}
    for fid, a in objs.items():
        stacks = [DigraphStack(a.degree), random_stack(a.degree, rng)]
        obj_stacks_by_n[fid] = stacks
        rep.extend(check_object_refiner(lambda o: ObjectRefiner(o), {fid: a}, stacks, seed=seed))

    # group refiners and completion, compatible and sound for their group
    for j in range(3 if quick else 12):
        n = rng.randint(3, 6)
        G = random_group(n, rng, max_order=720)
        E = enumerate_group(G)
        fixtures = {}
        for i in range(3):
            S = random_stack(n, rng)
            fixtures[f"G{j}-s{i}"] = S
        fixtures[f"G{j}-ind"] = DigraphStack(n, [LabelledDigraph.individualise(n, 1),
                                                 LabelledDigraph.individualise(n, n)])
        for kind in ("orbit", "orbital"):
            ref = GroupRefiner(G, kind)
            rep.extend(check_refiner(f"group-{kind}", _fixed_then(ref, kind), fixtures, E,
                                     compat_elements=E.elements, seed=seed))
        comp = CompletionRefiner(G)
        rep.extend(check_refiner("completion", _fixed_then(comp, "completion"), fixtures, E,
                                 compat_elements=E.elements, seed=seed))
    return rep


def random_object(kind: str, n: int, rng: random.Random) -> CombinatorialObject:
    if kind == "set":
        return CombinatorialObject.point_set(n, rng.sample(range(1, n + 1), rng.randint(0, n)))
    if kind == "list":
        return CombinatorialObject.point_list(n, rng.sample(range(1, n + 1), rng.randint(0, n)))
    if kind == "graph":
        p = rng.random()
        es = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < p]
        return CombinatorialObject.graph(n, es)
    img = list(range(1, n + 1))
    rng.shuffle(img)
    return CombinatorialObject.permutation(n, Permutation(img))


def well_definedness_fixture(rng: random.Random, nmax: int = 7):
    """A random (G, L) with ``|G|`` small enough to enumerate."""
    n = rng.randint(2, nmax)
    G = random_group(n, rng, max_order=5040)
    for _ in range(20):
        if G.order() > 1:
            break
        G = random_group(n, rng, max_order=5040)
    # short lists leave a large stabiliser, so several minimisers to compare
    L = rng.sample(range(1, n + 1), rng.randint(0, max(1, n // 2)))
    return G, L


def check_well_defined(G: PermGroup, L, kind: str) -> tuple[bool, int]:
    """F(L^g)^{g^-1} is the same for every minimising g (found by enumeration).

    Returns the verdict and the number of minimisers compared.
    """
    E = enumerate_group(G)
    M, who = brute_min_list(E, L)
    H = G.pointwise_stabilizer(M)
    if kind == "orbit":
        F = [forbit_graph(H)]
    else:
        d = orbital_digraph(H)
        F = [d] if d.has_arcs() else []
    results = {tuple(d.act(g.inverse()) for d in F) for g in who}
    ours = tuple(GroupRefiner(G, kind).apply_list(L))
    return len(results) == 1 and ours in results, len(who)


@dataclass
class SweepResult:
    trials: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    kinds: dict = field(default_factory=dict)
    max_degree: int = 0
    max_order: int = 0
    images: list = field(default_factory=list, repr=False)

    @property
    def ok(self) -> bool:
        return self.trials > 0 and not self.failures


def invariance_sweep(count: int, seed: int = 0, max_degree: int = 10, max_order: int = 50_000,
                     config: CanonConfig | None = None) -> SweepResult:
    """Random (G, a, g): C(a) = C(a^g) and a^witness = C(a) with witness in G."""
    rng = random.Random(seed)
    out = SweepResult()
    t0 = time.perf_counter()
    kinds = ("set", "list", "graph", "perm")
    for t in range(count):
        n = rng.randint(1, max_degree)
        G = random_group(n, rng, max_order=max_order)
        kind = kinds[t % 4]
        a = random_object(kind, n, rng)
        g = G.random_element(rng)
        r1 = canonical_image(a, G, config)
        r2 = canonical_image(a.act(g), G, config)
        ok = (r1.image == r2.image and a.act(r1.witness) == r1.image and G.contains(r1.witness)
              and a.act(g).act(r2.witness) == r2.image and G.contains(r2.witness))
        out.trials += 1
        out.images.append(r1.image)
        out.kinds[kind] = out.kinds.get(kind, 0) + 1
        out.max_degree = max(out.max_degree, n)
        out.max_order = max(out.max_order, G.order())
        if not ok:
            out.failures.append({"degree": n, "generators": [str(x) for x in G.generators],
                                 "object": a.to_json(), "g": str(g)})
    out.seconds = time.perf_counter() - t0
    return out
