"""Property-based checks of the action laws and of canonical labelling."""

import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from gbcanon.canonical import canonical_image
from gbcanon.digraphs import DigraphStack, LabelledDigraph
from gbcanon.objects import CombinatorialObject
from gbcanon.oracle import enumerate_group, orbit_min
from gbcanon.partition import exact_iso, refine_part
from gbcanon.perms import Permutation, PermGroup, min_image_partial


@st.composite
def perms(draw, n):
    return Permutation(draw(st.permutations(range(1, n + 1))))


@st.composite
def groups(draw, n):
    gens = draw(st.lists(perms(n), min_size=0, max_size=3))
    return PermGroup(n, gens)


@st.composite
def digraphs(draw, n):
    pairs = st.tuples(st.integers(1, n), st.integers(1, n))
    arcs = draw(st.dictionaries(pairs, st.integers(1, 3), max_size=2 * n))
    vl = draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
    return LabelledDigraph(n, [(a, b, l) for (a, b), l in arcs.items()], vl)


@st.composite
def objects(draw, n):
    kind = draw(st.sampled_from(["set", "list", "graph", "perm"]))
    pts = st.permutations(range(1, n + 1))
    if kind == "set":
        return CombinatorialObject.point_set(n, draw(pts)[:draw(st.integers(0, n))])
    if kind == "list":
        return CombinatorialObject.point_list(n, draw(pts)[:draw(st.integers(0, n))])
    if kind == "graph":
        es = draw(st.lists(st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] != e[1]),
                           max_size=2 * n))
        return CombinatorialObject.graph(n, es)
    return CombinatorialObject.permutation(n, draw(perms(n)))


@st.composite
def setups(draw):
    n = draw(st.integers(1, 7))
    return n, draw(groups(n)), draw(objects(n)), draw(perms(n))


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(perms(n), perms(n), perms(n))))
def test_group_axioms(t):
    p, q, r = t
    assert (p * q) * r == p * (q * r)
    assert p * p.inverse() == Permutation.identity(p.degree)
    assert Permutation.parse(str(p), p.degree) == p


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(digraphs(n), perms(n))))
def test_refine_is_equivariant(t):
    d, g = t
    S = DigraphStack(d.n, [d])
    assert refine_part(S.act(g)) == refine_part(S).act(g)


@settings(max_examples=40, suppress_health_check=[HealthCheck.too_slow])
@given(st.integers(2, 6).flatmap(lambda n: digraphs(n)))
def test_refine_keeps_orbits_together(d):
    S = DigraphStack(d.n, [d])
    where = refine_part(S).cell_index()
    for orb in exact_iso(S, S).orbits():
        assert len({where[x] for x in orb}) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(groups(n), st.lists(st.integers(1, n), unique=True))))
def test_min_image_is_orbit_minimum(t):
    G, L = t
    img, g = min_image_partial(G, L)
    E = enumerate_group(G)
    assert img == min([x(p) for p in L] for x in E)
    assert [g(p) for p in L] == img and G.contains(g)


@settings(max_examples=60, deadline=None)
@given(setups())
def test_canonical_labelling_law(t):
    n, G, a, g = t
    if not G.contains(g):
        g = G.random_element(random.Random(str(g)))
    r1, r2 = canonical_image(a, G), canonical_image(a.act(g), G)
    assert r1.image == r2.image
    assert a.act(r1.witness) == r1.image and G.contains(r1.witness)


@settings(max_examples=30, deadline=None)
@given(setups())
def test_canonical_image_in_orbit(t):
    n, G, a, _ = t
    if G.order() > 5040:
        return
    E = enumerate_group(G)
    img = canonical_image(a, G).image
    assert any(a.act(x) == img for x in E)
    assert orbit_min(a, E).key() <= img.key()
