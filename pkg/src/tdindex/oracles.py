"""Closed-form predictions for total domination degrees and indices.

Nothing here enumerates subsets.  Family oracles are pure arithmetic on the
family parameters.  Construct oracles combine facts about the operand graphs
(their own reports) with a closed-form rule per operation.

Per-vertex expectations are ``int`` (exact TDD), ``NON_COMPLIANT``,
``COMPLIANT`` (compliance claimed, value not) or ``None`` (no claim).
Families and constructs without a formula give ``NO_ORACLE``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence, Union

from .families import FamilySpec, generate, kragujevac_layout
from .graph import Graph, GraphError, is_complete
from .markers import COMPLIANT, NO_ORACLE, NON_COMPLIANT, UNDEFINED, Marker

Expected = Union[int, Marker, None]


@dataclass(frozen=True)
class OracleExpectation:
    per_vertex: tuple[Expected, ...]
    expected_gamma_t: int | None = None
    expected_tdi: int | Marker | None = None
    bounds: tuple[int | None, ...] | None = None
    source: dict[str, str] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        exact = [e for e in self.per_vertex if isinstance(e, int)]
        if isinstance(self.expected_tdi, int) and len(exact) == len(self.per_vertex):
            if sum(exact) != self.expected_tdi:
                raise ValueError("expected TDI disagrees with the per-vertex sum")


def gamma_t_path_cycle(n: int) -> int:
    """Total domination number shared by ``P_n`` and ``C_n``."""
    if n < 2:
        raise ValueError(f"gamma_t of a path/cycle needs n >= 2, got {n}")
    if n == 2:
        return 2
    r = n % 4
    if r == 0:
        return n // 2
    if r == 2:
        return n // 2 + 1
    return (n + 1) // 2


def path_tdd(n: int, i: int) -> int | Marker:
    """TDD of the ``i``-th vertex (1-based) of ``P_n``."""
    if not 1 <= i <= n:
        raise ValueError(f"vertex {i} outside 1..{n}")
    if n < 2:
        raise ValueError("P_1 has an isolated vertex")
    if n == 4:
        return NON_COMPLIANT if i in (1, 4) else 2
    if n == 7:
        return NON_COMPLIANT if i == 4 else 4
    r = n % 4
    if r == 2:
        return n // 2 + 1
    if r == 1:
        return (n + 1) // 2 + (1 if i % 4 == 1 else 0)
    if r == 3:
        return (n + 1) // 2 + (1 if i % 4 == 0 else 0)
    return n // 2 + (1 if i % 4 in (0, 1) else 0)


def path_tdi(n: int) -> int | Marker:
    """TDI of ``P_n`` by the four-case closed form; undefined for n = 4, 7."""
    if n in (4, 7):
        return UNDEFINED
    if n < 2:
        raise ValueError("P_1 has an isolated vertex")
    k, r = divmod(n, 4)
    if r == 2:
        return 4 * (2 * k + 1) * (k + 1)
    if r == 1 and k > 0:
        return 8 * k * k + 7 * k + 2
    if r == 3 and (k == 0 or k > 1):
        return 8 * k * k + 15 * k + 6
    if r == 0 and k > 1:
        return 2 * k * (4 * k + 1)
    raise ValueError(f"no closed form for n={n}")


def cycle_tdd(n: int) -> int:
    return gamma_t_path_cycle(n)


def cycle_tdi(n: int) -> int:
    r = n % 4
    if r == 0:
        return n * n // 2
    if r == 2:
        return n * n // 2 + n
    return n * (n + 1) // 2


def book_tdi(n: int) -> int:
    return 4 * (1 + n * n)


def windmill_tdi(p: int, q: int) -> int:
    return 2 * (q * (p - 1) + 1)


def _all(n: int, value: Expected) -> tuple[Expected, ...]:
    return (value,) * n


def expected_tdi(spec: FamilySpec) -> int | Marker:
    name, p = spec.name, spec.params
    if name == "path" and p[0] >= 2:
        return path_tdi(p[0])
    if name == "cycle":
        return cycle_tdi(p[0])
    if name == "book":
        return book_tdi(p[0])
    if name == "windmill":
        return windmill_tdi(*p)
    if name == "complete" and p[0] >= 2:
        return 2 * p[0]
    if name == "complete_bipartite":
        return 2 * (p[0] + p[1])
    if name in ("star", "wheel"):
        return 2 * (1 + p[0])
    if name in ("petersen", "grotzsch", "herschel"):
        return 4 * generate(spec).order
    if name == "kragujevac":
        return UNDEFINED
    return NO_ORACLE


def expected_tdd(spec: FamilySpec) -> OracleExpectation | Marker:
    name, p = spec.name, spec.params
    tdi = expected_tdi(spec)
    if name == "path":
        n = p[0]
        if n < 2:
            return NO_ORACLE
        per = tuple(path_tdd(n, i) for i in range(1, n + 1))
        return OracleExpectation(per, gamma_t_path_cycle(n), tdi, source={"tdd": "path-tdd", "tdi": "path-tdi", "gamma_t": "gamma-t-path-cycle"})
    if name == "cycle":
        n = p[0]
        return OracleExpectation(_all(n, cycle_tdd(n)), gamma_t_path_cycle(n), tdi, source={"tdd": "cycle-tdd", "tdi": "cycle-tdi", "gamma_t": "gamma-t-path-cycle"})
    if name == "book":
        n = p[0]
        per = (2, 2) + _all(2 * n, 2 * n)
        return OracleExpectation(per, 2, tdi, source={"tdd": "book-tdd", "tdi": "book-tdi"})
    if name == "windmill":
        order = p[1] * (p[0] - 1) + 1
        return OracleExpectation(_all(order, 2), 2, tdi, source={"tdd": "windmill-tdd", "tdi": "windmill-tdi"})
    if name in ("complete", "complete_bipartite", "star", "wheel"):
        g = generate(spec)
        if name == "complete" and g.order < 2:
            return NO_ORACLE
        props = {"complete": "complete-tdi", "complete_bipartite": "bipartite-tdi", "star": "star-wheel-tdi", "wheel": "star-wheel-tdi"}
        return OracleExpectation(_all(g.order, 2), 2, tdi, source={"tdd": "tdd-two", "tdi": props[name]})
    if name in ("petersen", "grotzsch", "herschel"):
        n = generate(spec).order
        return OracleExpectation(_all(n, 4), 4, tdi, source={"tdd": "named-tdd-four"})
    if name == "kragujevac":
        layout = kragujevac_layout(list(p))
        n = 1 + sum(2 * s + 1 for s in p)
        per: list[Expected] = [COMPLIANT] * n
        per[0] = NON_COMPLIANT
        if list(p) == [2, 2]:
            # two branches of size 2: roots and middles 6, leaves 7
            for v in layout["roots"] + layout["middles"]:
                per[v] = 6
            for v in layout["leaves"]:
                per[v] = 7
        return OracleExpectation(tuple(per), None, tdi, source={"tdd": "kragujevac-center"})
    return NO_ORACLE


def _is_labeled_path(g: Graph) -> bool:
    return g.order >= 1 and g == generate(FamilySpec("path", (g.order,)))


def expected_construct(
    op: str,
    graphs: Sequence[Graph],
    reports: Sequence,
    domination_degrees: Sequence[Sequence[int]] | None = None,
) -> OracleExpectation | Marker:
    """Expectation for ``op`` applied to ``graphs``.

    ``reports[i]`` is the DominationReport of ``graphs[i]`` (``None`` where the
    operand has isolated vertices).  ``domination_degrees[0]`` is required for
    the composition bound on a non-compliant base.
    """
    if op == "union":
        if any(r is None or not r.compliant for r in reports):
            return NO_ORACLE
        total = sum(r.gamma_t for r in reports)
        per: list[Expected] = []
        for r in reports:
            per += [t + total - r.gamma_t for t in r.per_vertex_tdd]
        return OracleExpectation(tuple(per), total, sum(per), source={"tdd": "union"})

    if op == "join":
        n = sum(g.order for g in graphs)
        if len(graphs) != 2 or any(g.order == 0 for g in graphs):
            return NO_ORACLE
        return OracleExpectation(_all(n, 2), 2, 2 * n, source={"tdd": "join"})

    if op == "composition":
        base, fiber = graphs
        if not is_complete(fiber) or fiber.order < 1 or reports[0] is None:
            return NO_ORACLE
        rep = reports[0]
        m = fiber.order
        if rep.compliant:
            per = tuple(rep.per_vertex_tdd[i] for i in range(base.order) for _ in range(m))
            return OracleExpectation(per, None, sum(per), source={"tdd": "composition-exact"})
        if domination_degrees is None:
            raise ValueError("composition over a non-compliant base needs domination degrees")
        dd = domination_degrees[0]
        bounds = tuple(2 * dd[i] for i in range(base.order) for _ in range(m))
        return OracleExpectation(_all(base.order * m, COMPLIANT), None, None, bounds, source={"tdd": "composition-bound"})

    if op == "corona":
        base, leaf = graphs
        rep = reports[1]
        n = base.order
        if rep is None or n == 0:
            return NO_ORACLE
        if rep.compliant:
            per = list(_all(n, n))
            for _ in range(n):
                per += [t + n - 1 for t in rep.per_vertex_tdd]
            return OracleExpectation(tuple(per), None, sum(per), source={"tdd": "corona-exact"})
        bound = 2 + (n - 1) * rep.gamma_t
        per = _all(n * (1 + leaf.order), COMPLIANT)
        bounds = _all(n, None) + _all(n * leaf.order, bound)
        return OracleExpectation(per, None, None, bounds, source={"tdd": "corona-bound"})

    if op == "subdivision":
        (g,) = graphs
        if not is_complete(g) or g.order < 2:
            return NO_ORACLE
        value = math.ceil(3 * g.order / 2) - 1
        total = g.order + g.size
        return OracleExpectation(_all(total, value), value, value * total, source={"tdd": "subdivision-tdd", "gamma_t": "subdivision-gamma-t"})

    if op == "degree_splitting":
        (g,) = graphs
        if g.order < 4 or not _is_labeled_path(g):
            return NO_ORACLE
        if g.order == 4:
            per = (3, 3, 3, 3, 3, 4)
        else:
            per = _all(g.order + 2, 4)
        return OracleExpectation(per, None, sum(per), source={"tdd": "degree-splitting"})

    if op in ("cartesian",):
        return NO_ORACLE
    raise GraphError(f"unknown operation {op!r}")
