import random

from gbcanon.digraphs import DigraphStack, LabelledDigraph
from gbcanon.laws import GAMMA2_EDGES, g8, random_stack
from gbcanon.partition import (OrderedPartition, all_isomorphisms_brute, automorphism_group,
                               components_partition, exact_iso, fixed_points, partition_approx,
                               refine_part, stack_compare, compare_sizes)
from gbcanon.perms import PermGroup
from gbcanon.refiners import forbit_graph


def cells(text):
    return OrderedPartition.parse(text)


def test_refine_examples(gamma1, gamma2):
    assert refine_part(gamma1, max_rounds=1) == cells("[4,8|5,7|1,2,3,6]")
    assert refine_part(gamma1) == cells("[4,8|5,7|1,2,3|6]")
    assert refine_part(gamma2) == cells("[3,4,5|1,2,6,7|8]")
    assert refine_part(DigraphStack(5)) == cells("[1,2,3,4,5]")


def test_refine_after_orbit_graph(gamma2):
    S = gamma2.append([forbit_graph(g8())])
    assert refine_part(S) == cells("[3,4,5|1,2,6,7|8]")


def test_loops_colour_vertices():
    # a functional digraph of (1,2): fixed points carry loops
    d = LabelledDigraph(4, [(1, 2, 1), (2, 1, 1), (3, 3, 1), (4, 4, 1)])
    P = refine_part(DigraphStack(4, [d]))
    assert sorted(map(sorted, P.cells)) == [[1, 2], [3, 4]]


def test_partition_text():
    P = cells("[3,4,5|1,2,6,7|8]")
    assert str(P) == "[3,4,5|1,2,6,7|8]"
    assert P.sizes() == [3, 4, 1]


def test_fixed_points():
    assert fixed_points(cells("[3,4,5|1,2,6,7|8]")) == [8]
    assert fixed_points(cells("[8|3|4|5|1|2|6|7]")) == [8, 3, 4, 5, 1, 2, 6, 7]
    assert fixed_points(cells("[1,2,3]")) == []


def test_stack_compare():
    assert compare_sizes([1, 1, 2, 4], [3, 4, 1]) == "less"
    assert compare_sizes([2, 2], [2, 2, 4]) == "less"
    rng = random.Random(0)
    for _ in range(10):
        S = random_stack(6, rng)
        g = PermGroup.symmetric(6).random_element(rng)
        assert stack_compare(S, S.act(g)) == "equal"


def test_exact_iso(gamma1):
    E = DigraphStack(4)
    assert exact_iso(E, E).size() == 24
    assert exact_iso(gamma1, DigraphStack(8)).is_empty()
    A = automorphism_group(gamma1)
    assert sorted(map(sorted, A.orbits())) == [[1, 2, 3], [4, 8], [5, 7], [6]]
    assert A.order() == 24


def test_exact_iso_matches_brute():
    rng = random.Random(4)
    for _ in range(15):
        S = random_stack(5, rng)
        g = PermGroup.symmetric(5).random_element(rng)
        for T in (S.act(g), random_stack(5, rng, max_len=len(S))):
            brute = all_isomorphisms_brute(S, T)
            res = exact_iso(S, T)
            assert (res.elements() if not res.is_empty() else set()) == brute


def test_partition_approx_contains_isos():
    rng = random.Random(5)
    for _ in range(10):
        S = random_stack(5, rng)
        g = PermGroup.symmetric(5).random_element(rng)
        T = S.act(g)
        A = partition_approx(S, T)
        assert A.contains(g)
        assert all_isomorphisms_brute(S, T) <= A.elements()


def test_components_negative_control(gamma1, gamma2):
    assert components_partition(gamma1) == cells("[4|8|1,2,3|5,6,7]")
    assert components_partition(gamma2) == cells("[1,2,6,7|3,4,5,8]")
