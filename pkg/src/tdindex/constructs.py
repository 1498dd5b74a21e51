"""Binary and unary graph operations with frozen vertex layouts.

Layout contracts:

* ``disjoint_union``/``join``: ``g1`` keeps ``0..n1-1``; ``g2`` shifts by ``n1``.
* ``composition``/``cartesian_product``: pair ``(i, j)`` has index ``i*n2 + j``.
* ``corona``: ``g1`` keeps ``0..n1-1``; copy ``i`` of ``g2`` starts at ``n1 + i*n2``.
* ``subdivision``: edge ``k`` (canonical order) becomes vertex ``n + k``.
* ``degree_splitting``: one new vertex per degree class of size >= 2, in
  ascending degree order, appended from index ``n``.
"""

from __future__ import annotations

from collections import defaultdict
from functools import reduce

from .graph import Graph, GraphError, from_edge_list

OPERATIONS = (
    "union",
    "join",
    "composition",
    "corona",
    "cartesian",
    "subdivision",
    "degree_splitting",
)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.order
    edges = g1.edges() + [(u + shift, v + shift) for u, v in g2.edges()]
    return from_edge_list(g1.order + g2.order, edges)


def join(g1: Graph, g2: Graph) -> Graph:
    base = disjoint_union(g1, g2)
    cross = [(u, g1.order + v) for u in range(g1.order) for v in range(g2.order)]
    return from_edge_list(base.order, base.edges() + cross)


def composition(g1: Graph, g2: Graph) -> Graph:
    """Lexicographic product: ``(a, b) ~ (a', b')`` iff ``a ~ a'``, or ``a = a'`` and ``b ~ b'``."""
    n2 = g2.order
    edges = []
    for a, a2 in g1.edges():
        edges += [(a * n2 + b, a2 * n2 + b2) for b in range(n2) for b2 in range(n2)]
    for a in range(g1.order):
        edges += [(a * n2 + b, a * n2 + b2) for b, b2 in g2.edges()]
    return from_edge_list(g1.order * n2, edges)


def corona(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.order, g2.order
    edges = list(g1.edges())
    for i in range(n1):
        start = n1 + i * n2
        edges += [(start + b, start + b2) for b, b2 in g2.edges()]
        edges += [(i, start + b) for b in range(n2)]
    return from_edge_list(n1 * (1 + n2), edges)


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    n2 = g2.order
    edges = []
    for a in range(g1.order):
        edges += [(a * n2 + b, a * n2 + b2) for b, b2 in g2.edges()]
    for a, a2 in g1.edges():
        edges += [(a * n2 + b, a2 * n2 + b) for b in range(n2)]
    return from_edge_list(g1.order * n2, edges)


def subdivision(g: Graph) -> Graph:
    n = g.order
    edges = []
    for k, (u, v) in enumerate(g.edges()):
        edges += [(u, n + k), (v, n + k)]
    return from_edge_list(n + g.size, edges)


def degree_classes(g: Graph) -> list[list[int]]:
    """Degree classes with at least two members, ordered by degree."""
    by_degree: dict[int, list[int]] = defaultdict(list)
    for v, d in enumerate(g.degrees()):
        by_degree[d].append(v)
    return [by_degree[d] for d in sorted(by_degree) if len(by_degree[d]) >= 2]


def degree_splitting(g: Graph) -> Graph:
    classes = degree_classes(g)
    edges = list(g.edges())
    for i, members in enumerate(classes):
        edges += [(g.order + i, v) for v in members]
    return from_edge_list(g.order + len(classes), edges)


_BINARY = {
    "union": disjoint_union,
    "join": join,
    "composition": composition,
    "corona": corona,
    "cartesian": cartesian_product,
}

_VARIADIC = ("union", "join")

_UNARY = {
    "subdivision": subdivision,
    "degree_splitting": degree_splitting,
}


def apply(op: str, graphs: list[Graph]) -> Graph:
    """Apply a named operation. ``union`` and ``join`` fold left over 2+ operands."""
    if op in _UNARY:
        if len(graphs) != 1:
            raise GraphError(f"{op} takes exactly one graph")
        return _UNARY[op](graphs[0])
    if op in _BINARY:
        if len(graphs) < 2 or (len(graphs) > 2 and op not in _VARIADIC):
            raise GraphError(f"{op} takes {'two or more' if op in _VARIADIC else 'exactly two'} graphs")
        return reduce(_BINARY[op], graphs)
    raise GraphError(f"unknown operation {op!r}; expected one of {', '.join(OPERATIONS)}")
