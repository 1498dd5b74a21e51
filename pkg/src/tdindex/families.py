"""Generators for the named graph families, with fixed 0-based layouts.

Layouts (the oracles depend on them):

* path / cycle: ``0..n-1`` in traversal order; the cycle closes ``n-1``-``0``.
* complete_bipartite(m, n): part A is ``0..m-1``, part B is ``m..m+n-1``.
* star(n): hub ``0``, leaves ``1..n``.
* wheel(n): hub ``0``, rim ``1..n`` in cycle order.
* book(n): centers ``0`` and ``1``; page ``i`` (1-based) is ``2i``, ``2i+1``
  with edges ``0-2i``, ``1-(2i+1)``, ``2i-(2i+1)``.
* windmill(p, q): center ``0``; copy ``i`` (1-based) occupies
  ``1+(i-1)(p-1) .. i(p-1)`` and forms ``K_p`` with the center.
* kragujevac(s_1..s_t): center ``0``; each branch lists its root first, then
  one (middle, leaf) pair per pendant ``P_3``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, from_edge_list

FAMILY_NAMES = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "wheel",
    "book",
    "windmill",
    "kragujevac",
    "petersen",
    "grotzsch",
    "herschel",
)

# outer 5-cycle 0..4, spokes i-(i+5), inner pentagram on 5..9
PETERSEN_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
)

# Mycielskian of C_5: cycle 0..4, shadows 5..9 (shadow of i sees the cycle
# neighbours of i), apex 10 adjacent to every shadow.
GROTZSCH_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, (i - 1) % 5) for i in range(5)]
    + [(5 + i, 10) for i in range(5)]
)

# bipartite, planar, 3-connected, 11 vertices / 18 edges, three vertices of degree 4
HERSCHEL_EDGES = [
    (0, 1), (0, 3), (0, 4), (1, 2), (1, 5), (1, 6), (2, 3), (2, 7), (3, 8),
    (3, 9), (4, 5), (4, 9), (5, 10), (6, 7), (6, 10), (7, 8), (8, 10), (9, 10),
]


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.name not in FAMILY_NAMES:
            raise GraphError(f"unknown family {self.name!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))

    def __str__(self) -> str:
        if not self.params:
            return self.name
        if self.name == "kragujevac":
            return f"kragujevac([{','.join(map(str, self.params))}])"
        return f"{self.name}({','.join(map(str, self.params))})"


_ARITY = {
    "path": 1, "cycle": 1, "complete": 1, "complete_bipartite": 2, "star": 1,
    "wheel": 1, "book": 1, "windmill": 2, "petersen": 0, "grotzsch": 0, "herschel": 0,
}

_MIN_PARAM = {
    "path": (1,), "cycle": (3,), "complete": (1,), "complete_bipartite": (1, 1),
    "star": (1,), "wheel": (3,), "book": (1,), "windmill": (2, 1),
}


def _validate(spec: FamilySpec) -> None:
    name, params = spec.name, spec.params
    if name == "kragujevac":
        if len(params) < 2:
            raise GraphError("kragujevac needs t >= 2 branches")
        for s in params:
            if s < 1:
                raise GraphError(f"kragujevac branch size must be >= 1, got {s}")
        return
    if len(params) != _ARITY[name]:
        raise GraphError(f"{name} takes {_ARITY[name]} parameter(s), got {len(params)}")
    for value, low in zip(params, _MIN_PARAM.get(name, ())):
        if value < low:
            raise GraphError(f"{name}: parameter {value} violates bound >= {low}")


def path_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def generate(spec: FamilySpec) -> Graph:
    _validate(spec)
    name, p = spec.name, spec.params
    if name == "path":
        return from_edge_list(p[0], path_edges(p[0]))
    if name == "cycle":
        n = p[0]
        return from_edge_list(n, path_edges(n) + [(n - 1, 0)])
    if name == "complete":
        n = p[0]
        return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if name == "complete_bipartite":
        m, n = p
        return from_edge_list(m + n, [(a, m + b) for a in range(m) for b in range(n)])
    if name == "star":
        n = p[0]
        return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)])
    if name == "wheel":
        n = p[0]
        rim = [(i, i % n + 1) for i in range(1, n + 1)]
        return from_edge_list(n + 1, rim + [(0, i) for i in range(1, n + 1)])
    if name == "book":
        n = p[0]
        edges = [(0, 1)]
        for i in range(1, n + 1):
            edges += [(0, 2 * i), (1, 2 * i + 1), (2 * i, 2 * i + 1)]
        return from_edge_list(2 * n + 2, edges)
    if name == "windmill":
        size, copies = p
        edges = []
        for i in range(copies):
            block = [0] + list(range(1 + i * (size - 1), 1 + (i + 1) * (size - 1)))
            edges += [(u, v) for k, u in enumerate(block) for v in block[k + 1:]]
        return from_edge_list(copies * (size - 1) + 1, edges)
    if name == "kragujevac":
        edges = []
        nxt = 1
        for s in p:
            root = nxt
            nxt += 1
            edges.append((0, root))
            for _ in range(s):
                edges += [(root, nxt), (nxt, nxt + 1)]
                nxt += 2
        return from_edge_list(nxt, edges)
    if name == "petersen":
        return from_edge_list(10, PETERSEN_EDGES)
    if name == "grotzsch":
        return from_edge_list(11, GROTZSCH_EDGES)
    return from_edge_list(11, HERSCHEL_EDGES)


def kragujevac_order(branches: list[int]) -> int:
    return 1 + sum(2 * s + 1 for s in branches)


def kragujevac_layout(branches: list[int]) -> dict[str, list[int]]:
    """Group kragujevac vertex indices into center, roots, middles, and leaves."""
    layout: dict[str, list[int]] = {"center": [0], "roots": [], "middles": [], "leaves": []}
    nxt = 1
    for s in branches:
        layout["roots"].append(nxt)
        nxt += 1
        for _ in range(s):
            layout["middles"].append(nxt)
            layout["leaves"].append(nxt + 1)
            nxt += 2
    return layout
