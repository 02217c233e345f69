import random

import pytest

from gbcanon.digraphs import DigraphStack, LabelledDigraph
from gbcanon.grid import grid_group
from gbcanon.laws import g8, random_stacks, run_law_suite
from gbcanon.objects import CombinatorialObject
from gbcanon.oracle import (EnumerationRefused, check_approximator, check_iso_approximator, check_refiner,
                            check_splitter, enumerate_group, orbit_min, orbit_min_closure,
                            symmetric_elements)
from gbcanon.partition import (OrderedPartition, components_partition, exact_iso, partition_approx,
                               refine_part)
from gbcanon.perms import PermGroup
from gbcanon.refiners import equitable_split


def test_enumerate():
    assert len(enumerate_group(PermGroup.symmetric(3))) == 6
    assert len(enumerate_group(g8())) == 336
    assert len(enumerate_group(grid_group(2))) == 4
    with pytest.raises(EnumerationRefused):
        enumerate_group(PermGroup.symmetric(9), cap=1000)


def test_orbit_min():
    a = CombinatorialObject.point_set(4, [2, 4])
    C4 = PermGroup.from_strings(4, ["(1,2,3,4)"])
    assert orbit_min(a, enumerate_group(C4)) == CombinatorialObject.point_set(4, [1, 3])
    assert orbit_min(a, enumerate_group(PermGroup.trivial(4))) == a
    rng = random.Random(0)
    G = g8()
    E = enumerate_group(G)
    for _ in range(10):
        b = CombinatorialObject.point_set(8, rng.sample(range(1, 9), rng.randint(0, 8)))
        assert orbit_min(b, E) == orbit_min_closure(b, G)


def test_refine_part_passes(gamma1, gamma2):
    fx = {"g1": gamma1, "g2": gamma2, **random_stacks(5, random.Random(1))}
    assert check_approximator("refine", refine_part, fx).ok


def test_components_rejected(gamma1, gamma2):
    for S in (gamma1, gamma2):
        assert not check_approximator("components", components_partition, {"x": S}).ok


def test_orbit_splitting_approximator_rejected(gamma1):
    def bad(S):
        return OrderedPartition([[x] for x in range(1, S.n + 1)], S.n)
    rep = check_approximator("discrete", bad, {"g1": gamma1})
    assert [r.law for r in rep.failures()] == ["orbits-in-cells", "equivariance"]


def test_splitter_laws(gamma1, gamma2):
    assert check_splitter("equitable", equitable_split, {"g1": gamma1, "g2": gamma2}).ok

    def one_child(S):
        return equitable_split(S)[:1]
    rep = check_splitter("lazy", one_child, {"g2": gamma2})
    assert "covering" in [r.law for r in rep.failures()]


def test_incompatible_refiner_rejected(gamma2):
    H = enumerate_group(g8())

    def always_one(S):
        return [LabelledDigraph.individualise(S.n, 1)]
    rep = check_refiner("bad", always_one, {"g2": gamma2}, H)
    assert not rep.ok


def test_exact_iso_conditions(gamma1):
    pairs = {"self": (gamma1, gamma1)}
    assert check_iso_approximator("exact", exact_iso, pairs).ok


def test_law_suite_quick():
    rep = run_law_suite(seed=3, quick=True)
    assert rep.ok, rep.failures()[:3]
