import random
from itertools import product

import pytest

from conftest import fam, random_connected_graph
from tdindex import constructs as C
from tdindex.graph import GraphError, empty_graph, from_edge_list, has_isolated_vertex, is_bipartite, relabel


def composition_by_rule(g1, g2):
    """Expand the adjacency rule pair by pair."""
    n2 = g2.order
    verts = list(product(range(g1.order), range(n2)))
    edges = []
    for (a1, b1), (a2, b2) in product(verts, verts):
        if (a1, b1) < (a2, b2) and (g1.has_edge(a1, a2) or (a1 == a2 and g2.has_edge(b1, b2))):
            edges.append((a1 * n2 + b1, a2 * n2 + b2))
    return from_edge_list(g1.order * n2, edges)


def test_union():
    g = C.disjoint_union(fam("path", 2), fam("path", 2))
    assert g.edges() == [(0, 1), (2, 3)]
    p = fam("path", 5)
    assert C.disjoint_union(p, empty_graph(0)) == p


def test_join():
    w = C.join(fam("complete", 1), fam("cycle", 4))
    assert w == fam("wheel", 4) and w.degree(0) == 4
    assert C.join(fam("complete", 1), fam("complete", 1)) == fam("complete", 2)


def test_composition():
    g = fam("cycle", 5)
    assert C.composition(fam("complete", 1), g) == g
    assert C.composition(fam("path", 2), fam("complete", 1)) == fam("path", 2)
    assert C.composition(fam("path", 2), fam("complete", 2)) == fam("complete", 4)


@pytest.mark.parametrize("a, b", [(("path", 3), ("path", 3)), (("cycle", 4), ("complete", 2)),
                                  (("star", 3), ("path", 2)), (("path", 4), ("cycle", 3))])
def test_composition_matches_rule(a, b):
    g1, g2 = fam(*a), fam(*b)
    assert C.composition(g1, g2) == composition_by_rule(g1, g2)


def test_corona():
    assert C.corona(fam("complete", 1), fam("complete", 1)) == fam("complete", 2)
    g = C.corona(fam("path", 2), fam("complete", 1))
    # 0-1 base, pendants 2 (on 0) and 3 (on 1): relabel to the path 2-0-1-3
    assert relabel(g, [1, 2, 0, 3]) == fam("path", 4)


def test_corona_layout():
    g = C.corona(fam("path", 3), fam("complete", 2))
    assert g.order == 9
    assert all(g.has_edge(1, v) for v in (5, 6)) and not g.has_edge(1, 3)
    assert g.has_edge(7, 8)


def test_cartesian():
    assert C.cartesian_product(fam("complete", 1), fam("cycle", 5)) == fam("cycle", 5)
    # (a, b) -> 2a + b, so P2 x P2 is the square 0-1-3-2-0
    p2p2 = C.cartesian_product(fam("path", 2), fam("path", 2))
    assert relabel(p2p2, [0, 1, 3, 2]) == fam("cycle", 4)


def test_subdivision():
    s3 = C.subdivision(fam("complete", 3))
    assert s3.order == 6 and set(s3.degrees()) == {2} and is_bipartite(s3)
    # K_3 edges (0,1),(0,2),(1,2) become 3,4,5: cycle 0-3-1-5-2-4-0
    assert relabel(s3, [0, 2, 4, 1, 5, 3]) == fam("cycle", 6)
    s = C.subdivision(fam("path", 3))
    assert relabel(s, [0, 2, 4, 1, 3]) == fam("path", 5)
    k4 = C.subdivision(fam("complete", 4))
    assert (k4.order, k4.size) == (10, 12)
    assert k4.degrees() == [3] * 4 + [2] * 6


def test_degree_splitting():
    g = C.degree_splitting(fam("path", 4))
    assert g.order == 6
    assert g.rows[4] == (1 << 0) | (1 << 3)
    assert g.rows[5] == (1 << 1) | (1 << 2)
    assert C.degree_splitting(fam("complete", 3)) == fam("complete", 4)


def test_degree_splitting_star():
    g = C.degree_splitting(fam("star", 3))
    # leaves 1,2,3 form the only class of size >= 2; the hub stays alone
    assert g.order == 5
    assert g.rows[4] == 0b1110
    assert g.degree(0) == 3


def test_apply_dispatch():
    p3 = fam("path", 3)
    assert C.apply("union", [p3, p3, p3]).order == 9
    with pytest.raises(GraphError):
        C.apply("corona", [p3, p3, p3])
    with pytest.raises(GraphError):
        C.apply("subdivision", [p3, p3])
    with pytest.raises(GraphError):
        C.apply("tensor", [p3, p3])


def _triples(seed=7, count=6):
    rng = random.Random(seed)
    for _ in range(count):
        yield [random_connected_graph(rng, rng.randint(1, 5), 0.4) for _ in range(3)]


@pytest.mark.parametrize("g1, g2, g3", list(_triples()))
def test_counts_and_associativity(g1, g2, g3):
    u = C.disjoint_union(g1, g2)
    assert u.size == g1.size + g2.size
    j = C.join(g1, g2)
    assert j.size == g1.size + g2.size + g1.order * g2.order
    cor = C.corona(g1, g2)
    assert cor.order == g1.order * (1 + g2.order)
    assert cor.size == g1.size + g1.order * g2.size + g1.order * g2.order
    for op in (C.disjoint_union, C.join):
        left, right = op(op(g1, g2), g3), op(g1, op(g2, g3))
        assert left.size == right.size and left == right
    sub = C.subdivision(g1)
    assert is_bipartite(sub) and sub.size == 2 * g1.size
    if not has_isolated_vertex(g1):
        assert not has_isolated_vertex(C.composition(g1, fam("complete", 3)))
