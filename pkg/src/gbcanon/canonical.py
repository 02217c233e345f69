"""Canonical images from search-tree leaves."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .objects import CombinatorialObject, ObjectError
from .perms import Permutation, PermGroup, min_perm_list
from .refiners import DEFAULT_PIPELINE, ORBITAL_CAP, build_pipeline
from .search import SearchTree, build_tree


@dataclass
class CanonConfig:
    pipeline: tuple[str, ...] = DEFAULT_PIPELINE
    splitter: str = "equitable"
    prune: bool = False
    reverse_children: bool = False
    orbital_cap: int | None = ORBITAL_CAP
    trace: bool = False

    def to_json(self) -> dict:
        return {"pipeline": list(self.pipeline), "splitter": self.splitter, "prune": self.prune,
                "reverse_children": self.reverse_children, "orbital_cap": self.orbital_cap}

    @classmethod
    def from_json(cls, data: dict | None) -> "CanonConfig":
        data = dict(data or {})
        known = {"pipeline", "splitter", "prune", "reverse_children", "orbital_cap", "seed"}
        extra = set(data) - known
        if extra:
            raise ValueError(f"unknown config keys {sorted(extra)}")
        data.pop("seed", None)
        if "pipeline" in data:
            data["pipeline"] = tuple(data["pipeline"])
        if data.get("splitter", "equitable") != "equitable":
            raise ValueError(f"unknown splitter {data['splitter']!r}")
        return cls(**data)


@dataclass
class CanonicalResult:
    image: CombinatorialObject
    witness: Permutation
    candidates: int
    leaves: int
    nodes: int
    seconds: float
    tree: SearchTree | None = field(default=None, repr=False)
    orderings: list = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {"image": self.image.to_json(), "witness": str(self.witness),
                "leaves": self.leaves, "nodes": self.nodes}


def canonical_image(a: CombinatorialObject, G: PermGroup,
                    config: CanonConfig | None = None, keep_tree: bool = False) -> CanonicalResult:
    """Canonical image of ``a`` under ``G`` with a canonising element."""
    config = config or CanonConfig()
    if a.degree != G.degree:
        raise ObjectError(f"object degree {a.degree} != group degree {G.degree}")
    t0 = time.perf_counter()
    pipeline = build_pipeline(config.pipeline, a, G, config.orbital_cap)
    tree = build_tree(G.degree, pipeline, prune=config.prune,
                      reverse_children=config.reverse_children, trace=config.trace)
    best = min(l.key for l in tree.leaves)
    chosen = [l for l in tree.leaves if l.key == best]
    perms = {}
    for l in chosen:
        _, p = min_perm_list(G, l.ordering)
        perms[p] = l.ordering
    best_img = None
    best_p = None
    for p in perms:
        img = a.act(p)
        k = (img.key(), p.images)
        if best_img is None or k < best_img:
            best_img, best_p = k, p
    image = a.act(best_p)
    return CanonicalResult(image, best_p, len(chosen), len(tree.leaves), tree.nodes,
                           time.perf_counter() - t0, tree if keep_tree else None,
                           sorted(l.ordering for l in chosen))


def same_orbit(a: CombinatorialObject, b: CombinatorialObject, G: PermGroup,
               config: CanonConfig | None = None) -> tuple[bool, Permutation | None]:
    """Decide whether ``b`` is in the orbit of ``a``; if so return ``w`` with ``a^w = b``."""
    if a.kind != b.kind or a.degree != b.degree:
        raise ObjectError("objects differ in type or degree")
    ca = canonical_image(a, G, config)
    cb = canonical_image(b, G, config)
    if ca.image != cb.image:
        return False, None
    w = ca.witness * cb.witness.inverse()
    if a.act(w) != b:
        raise AssertionError("orbit witness failed verification")
    return True, w
