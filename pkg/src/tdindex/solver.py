"""Exact total domination engine.

Everything here is exhaustive subset enumeration over bit masks.  Two routes
exist and must agree:

* ``sweep_minimal_tds`` scans the whole mask range in vectorized chunks and
  keeps, per vertex, the least ``(size, mask)`` minimal TDS containing it.
* ``tdd``, ``gamma_t`` and ``domination_degree`` walk subset sizes in
  ascending order and stop at the first size that produces a hit.

Both resolve ties the same way: smallest size first, then smallest mask,
which is the first witness met when subsets of each size are visited in
increasing mask order.
"""

from __future__ import annotations

import csv
import io
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Union

import numpy as np

from .graph import Graph, VertexSet, isolated_vertices
from .markers import NON_COMPLIANT, UNDEFINED, Marker

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 24
# masks live in uint64 and the (size, mask) key needs 6 extra bits
SWEEP_LIMIT = 58
CHUNK_BITS = 18

TDDValue = Union[int, Marker]


class SolverError(ValueError):
    pass


class IsolatedVertexError(SolverError):
    pass


class CapExceededError(SolverError):
    pass


def _as_mask(s: VertexSet | int) -> int:
    return s.mask if isinstance(s, VertexSet) else int(s)


def _require_total(g: Graph) -> None:
    bad = isolated_vertices(g)
    if bad:
        raise IsolatedVertexError(
            f"total domination undefined: isolated vertices {', '.join(map(str, bad))}"
        )


def _require_cap(g: Graph, max_n: int) -> None:
    if g.order == 0:
        raise SolverError("graph has no vertices")
    if g.order > max_n:
        raise CapExceededError(
            f"graph has n={g.order} vertices, above the solver cap of {max_n}; "
            f"raise it with --max-n (enumeration cost grows as 2^n)"
        )


def _covers(rows: Sequence[int], mask: int) -> bool:
    return all(r & mask for r in rows)


def _is_minimal_cover(rows: Sequence[int], mask: int) -> bool:
    # minimal iff every member owns a private neighbour: some row meets mask in exactly that member
    private = 0
    for r in rows:
        c = r & mask
        if not c:
            return False
        if not c & (c - 1):
            private |= c
    return private == mask


def is_tds(g: Graph, s: VertexSet | int) -> bool:
    _require_total(g)
    return _covers(g.rows, _as_mask(s))


def is_minimal_tds(g: Graph, s: VertexSet | int) -> bool:
    _require_total(g)
    return _is_minimal_cover(g.rows, _as_mask(s))


def is_ds(g: Graph, s: VertexSet | int) -> bool:
    return _covers(g.closed_rows(), _as_mask(s))


def is_minimal_ds(g: Graph, s: VertexSet | int) -> bool:
    return _is_minimal_cover(g.closed_rows(), _as_mask(s))


@dataclass(frozen=True)
class Certificate:
    vertex: int
    witness: VertexSet

    def verify(self, g: Graph) -> bool:
        return self.vertex in self.witness and is_minimal_tds(g, self.witness)


@dataclass(frozen=True)
class DominationReport:
    order: int
    per_vertex_tdd: tuple[TDDValue, ...]
    gamma_t: int
    upper_gamma_t: int
    delta_td: int
    Delta_td: int
    compliant: bool
    tdi: TDDValue
    is_tdr: bool
    certificates: tuple[Certificate | None, ...]

    @property
    def non_compliant_vertices(self) -> list[int]:
        return [v for v, t in enumerate(self.per_vertex_tdd) if t is NON_COMPLIANT]

    def to_dict(self, witnesses: bool = True) -> dict:
        out = {
            "order": self.order,
            "gamma_t": self.gamma_t,
            "upper_gamma_t": self.upper_gamma_t,
            "delta_td": self.delta_td,
            "Delta_td": self.Delta_td,
            "compliant": self.compliant,
            "tdi": self.tdi if isinstance(self.tdi, int) else self.tdi.value,
            "is_tdr": self.is_tdr,
            "per_vertex_tdd": [t if isinstance(t, int) else t.value for t in self.per_vertex_tdd],
        }
        if witnesses:
            out["witnesses"] = [c.witness.to_list() if c else None for c in self.certificates]
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["vertex", "tdd", "compliant", "witness"])
        for v, (t, cert) in enumerate(zip(self.per_vertex_tdd, self.certificates)):
            writer.writerow([
                v,
                t if isinstance(t, int) else t.value,
                str(isinstance(t, int)).lower(),
                " ".join(map(str, cert.witness)) if cert else "",
            ])
        return buf.getvalue()


@dataclass
class PartialSweep:
    """Aggregate over some slice of the mask space.

    ``best[v]`` is the least ``(size, mask)`` minimal cover containing ``v``.
    Merging is pointwise min/max, so any partition of the masks gives the
    same final result.
    """

    min_size: int | None
    max_size: int | None
    best: list[tuple[int, int] | None]

    @classmethod
    def empty(cls, n: int) -> "PartialSweep":
        return cls(None, None, [None] * n)

    def merge(self, other: "PartialSweep") -> "PartialSweep":
        def lo(a, b):
            return b if a is None else a if b is None else min(a, b)

        def hi(a, b):
            return b if a is None else a if b is None else max(a, b)

        return PartialSweep(
            lo(self.min_size, other.min_size),
            hi(self.max_size, other.max_size),
            [lo(a, b) for a, b in zip(self.best, other.best)],
        )


def sweep_range(rows: Sequence[int], lo: int, hi: int) -> PartialSweep:
    """Scan masks ``lo <= mask < hi`` for minimal covers of ``rows``."""
    n = len(rows)
    masks = np.arange(lo, hi, dtype=np.uint64)
    covered = np.ones(masks.shape, dtype=bool)
    private = np.zeros_like(masks)
    one = np.uint64(1)
    for r in rows:
        hit = masks & np.uint64(r)
        covered &= hit != 0
        # hit == 0 wraps to all-ones minus one; it contributes nothing either way
        single = (hit & (hit - one)) == 0
        private |= np.where(single, hit, np.uint64(0))
    found = masks[covered & (private == masks)]
    if found.size == 0:
        return PartialSweep.empty(n)
    sizes = np.bitwise_count(found).astype(np.uint64)
    keys = (sizes << np.uint64(n)) | found
    best: list[tuple[int, int] | None] = []
    full = np.uint64((1 << n) - 1)
    for v in range(n):
        sel = keys[(found >> np.uint64(v)) & one == one]
        if sel.size:
            k = int(sel.min())
            best.append((k >> n, k & int(full)))
        else:
            best.append(None)
    return PartialSweep(int(sizes.min()), int(sizes.max()), best)


def _chunks(n: int) -> list[tuple[int, int]]:
    total = 1 << n
    step = 1 << CHUNK_BITS
    return [(lo, min(lo + step, total)) for lo in range(1, total, step)]


def _sweep_task(args: tuple[tuple[int, ...], int, int]) -> PartialSweep:
    rows, lo, hi = args
    return sweep_range(rows, lo, hi)


def sweep_covers(rows: Sequence[int], jobs: int = 1) -> PartialSweep:
    n = len(rows)
    if n > SWEEP_LIMIT:
        raise CapExceededError(f"vectorized sweep supports at most {SWEEP_LIMIT} vertices")
    tasks = [(tuple(rows), lo, hi) for lo, hi in _chunks(n)]
    result = PartialSweep.empty(n)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_sweep_task, tasks):
                result = result.merge(part)
    else:
        for task in tasks:
            result = result.merge(_sweep_task(task))
    return result


def _report_from_sweep(g: Graph, part: PartialSweep) -> DominationReport:
    tdds: list[TDDValue] = []
    certs: list[Certificate | None] = []
    for v, b in enumerate(part.best):
        if b is None:
            tdds.append(NON_COMPLIANT)
            certs.append(None)
        else:
            tdds.append(b[0])
            certs.append(Certificate(v, VertexSet(b[1])))
    values = [t for t in tdds if isinstance(t, int)]
    compliant = len(values) == g.order
    return DominationReport(
        order=g.order,
        per_vertex_tdd=tuple(tdds),
        gamma_t=part.min_size,
        upper_gamma_t=part.max_size,
        delta_td=min(values),
        Delta_td=max(values),
        compliant=compliant,
        tdi=sum(values) if compliant else UNDEFINED,
        is_tdr=compliant and min(values) == max(values),
        certificates=tuple(certs),
    )


def sweep_minimal_tds(g: Graph, max_n: int = DEFAULT_MAX_N, jobs: int = 1) -> DominationReport:
    """Enumerate every minimal TDS of ``g`` and aggregate the full report."""
    _require_total(g)
    _require_cap(g, max_n)
    log.debug("sweeping %d masks on n=%d", 1 << g.order, g.order)
    return _report_from_sweep(g, sweep_covers(g.rows, jobs))


def _least_cover_with(rows: Sequence[int], v: int, k: int) -> int | None:
    """Least mask of size ``k`` containing ``v`` that is a minimal cover."""
    others = [u for u in range(len(rows)) if u != v]
    best = None
    vbit = 1 << v
    for combo in combinations(others, k - 1):
        mask = vbit
        for u in combo:
            mask |= 1 << u
        if (best is None or mask < best) and _is_minimal_cover(rows, mask):
            best = mask
    return best


def _ascending_degree(rows: Sequence[int], v: int, start: int) -> tuple[int, int] | None:
    for k in range(start, len(rows) + 1):
        mask = _least_cover_with(rows, v, k)
        if mask is not None:
            return k, mask
    return None


def tdd(g: Graph, v: int, max_n: int = DEFAULT_MAX_N) -> tuple[TDDValue, Certificate | None]:
    """Total domination degree of ``v`` with a witness, or ``NON_COMPLIANT``."""
    _require_total(g)
    _require_cap(g, max_n)
    if not 0 <= v < g.order:
        raise SolverError(f"vertex {v} out of range for n={g.order}")
    hit = _ascending_degree(g.rows, v, 2)
    if hit is None:
        return NON_COMPLIANT, None
    return hit[0], Certificate(v, VertexSet(hit[1]))


def domination_degree(g: Graph, v: int, max_n: int = DEFAULT_MAX_N) -> tuple[int, VertexSet]:
    """Size of the smallest minimal dominating set containing ``v``, and one such set."""
    _require_cap(g, max_n)
    if not 0 <= v < g.order:
        raise SolverError(f"vertex {v} out of range for n={g.order}")
    # never None: {v} extends to a maximal independent set, which is a minimal DS
    k, mask = _ascending_degree(g.closed_rows(), v, 1)
    return k, VertexSet(mask)


def domination_degrees(g: Graph, max_n: int = DEFAULT_MAX_N, jobs: int = 1) -> list[int]:
    _require_cap(g, max_n)
    part = sweep_covers(g.closed_rows(), jobs)
    return [b[0] for b in part.best]


def gamma_t(g: Graph, max_n: int = DEFAULT_MAX_N) -> int:
    _require_total(g)
    _require_cap(g, max_n)
    rows = g.rows
    for k in range(2, g.order + 1):
        for combo in combinations(range(g.order), k):
            mask = 0
            for u in combo:
                mask |= 1 << u
            if _covers(rows, mask):
                return k
    raise AssertionError("a graph without isolated vertices always has a TDS")


def upper_gamma_t(g: Graph, max_n: int = DEFAULT_MAX_N, jobs: int = 1) -> int:
    return sweep_minimal_tds(g, max_n, jobs).upper_gamma_t


def format_report(report: DominationReport, per_vertex: bool = False, witnesses: bool = False) -> str:
    lines = [
        f"n            {report.order}",
        f"gamma_t      {report.gamma_t}",
        f"Gamma_t      {report.upper_gamma_t}",
        f"delta_td     {report.delta_td}",
        f"Delta_td     {report.Delta_td}",
        f"compliant    {str(report.compliant).lower()}",
    ]
    if report.compliant:
        lines.append(f"TDI          {report.tdi}")
    else:
        bad = ", ".join(map(str, report.non_compliant_vertices))
        lines.append(f"TDI          undefined (non-compliant vertices: {bad})")
    lines.append(f"is_tdr       {str(report.is_tdr).lower()}")
    if per_vertex or witnesses:
        lines.append("")
        header = "vertex  tdd"
        if witnesses:
            header += "  witness"
        lines.append(header)
        for v, (t, cert) in enumerate(zip(report.per_vertex_tdd, report.certificates)):
            row = f"{v:>6}  {t if isinstance(t, int) else t.value:>3}"
            if witnesses:
                row += "  " + (" ".join(map(str, cert.witness)) if cert else "-")
            lines.append(row)
    return "\n".join(lines) + "\n"
