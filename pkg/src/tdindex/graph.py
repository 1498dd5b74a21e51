"""Immutable simple graphs backed by integer bit-mask adjacency rows.

Vertices are the dense integers ``0..n-1``.  Row ``v`` of the adjacency is
an ``int`` whose bit ``u`` is set iff ``u`` and ``v`` are adjacent.  Python
integers are arbitrary precision, so the same code serves graphs of any
order; the solver enforces its own cap.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input or an invalid graph query."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def popcount(x: int) -> int:
    return x.bit_count()


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices stored as a bit mask."""

    mask: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if v < 0:
                raise GraphError(f"negative vertex index {v}")
            mask |= 1 << v
        return cls(mask)

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.mask >> v & 1)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~other.mask)

    def add(self, v: int) -> "VertexSet":
        return VertexSet(self.mask | 1 << v)

    def discard(self, v: int) -> "VertexSet":
        return VertexSet(self.mask & ~(1 << v))

    def to_list(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph. ``rows[v]`` is the open neighborhood of ``v``."""

    order: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0 or len(self.rows) != self.order:
            raise GraphError("row count does not match order")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @property
    def size(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.order and bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.order) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def closed_rows(self) -> tuple[int, ...]:
        return tuple(r | 1 << v for v, r in enumerate(self.rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"no edge {u}-{v}")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.order, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices. Duplicate edges collapse; loops are rejected."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.order:
        raise GraphError(f"vertex {v} out of range for n={g.order}")


def neighbors(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return VertexSet(g.rows[v])


def closed_neighbors(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return VertexSet(g.rows[v] | 1 << v)


def has_isolated_vertex(g: Graph) -> bool:
    return any(r == 0 for r in g.rows)


def isolated_vertices(g: Graph) -> list[int]:
    return [v for v, r in enumerate(g.rows) if r == 0]


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Move vertex ``v`` to ``perm[v]``."""
    if sorted(perm) != list(range(g.order)):
        raise GraphError("relabeling map is not a permutation of 0..n-1")
    return from_edge_list(g.order, ((perm[u], perm[v]) for u, v in g.edges()))


def distances(g: Graph, v: int) -> list[float]:
    """BFS hop counts from ``v``; unreachable vertices get ``math.inf``."""
    _check_vertex(g, v)
    dist: list[float] = [math.inf] * g.order
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in iter_bits(g.rows[u]):
            if dist[w] == math.inf:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    return math.inf not in distances(g, 0)


def eccentricities(g: Graph) -> list[int]:
    if not is_connected(g):
        raise GraphError("eccentricity is undefined on a disconnected graph")
    return [int(max(distances(g, v))) for v in range(g.order)]


def radius_diameter(g: Graph) -> tuple[int, int]:
    if g.order == 0:
        raise GraphError("radius and diameter are undefined on the empty graph")
    ecc = eccentricities(g)
    return min(ecc), max(ecc)


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.order
    for s in range(g.order):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.rows[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_complete(g: Graph) -> bool:
    return g.size == g.order * (g.order - 1) // 2


def serialize(g: Graph) -> str:
    """Canonical edge-list text: ``"n m"`` header, then sorted ``"u v"`` lines."""
    lines = [f"{g.order} {g.size}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(lineno, f"expected two integers, got {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError(lineno, "negative count in header")
            header = (a, b)
            continue
        n = header[0]
        if a == b:
            raise ParseError(lineno, f"self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(lineno, f"vertex out of range for n={n}")
        edges.append((a, b))
        if len(edges) > header[1]:
            raise ParseError(lineno, f"more edge lines than the declared {header[1]}")
    if header is None:
        raise ParseError(1, "missing 'n m' header")
    if len(edges) != header[1]:
        raise ParseError(lineno, f"declared {header[1]} edges, found {len(edges)}")
    return from_edge_list(header[0], edges)
