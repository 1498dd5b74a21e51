"""Oracle-vs-solver sweeps and property checks, plus a harness for unproven claims.

Proven claims produce ``match``/``mismatch`` (or bound) records and a
mismatch fails the run.  Unproven claims (subgraph monotonicity of TDD and
TDI) only produce ``bound-satisfied``/``bound-violated`` records plus a
counterexample report; they never fail the run.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Sequence

from . import constructs
from .families import FamilySpec, generate
from .graph import (
    Graph,
    distances,
    from_edge_list,
    has_isolated_vertex,
    is_connected,
    radius_diameter,
    relabel,
    serialize,
)
from .markers import COMPLIANT, NO_ORACLE, NON_COMPLIANT, Marker
from .oracles import OracleExpectation, expected_construct, expected_tdd
from .solver import (
    DEFAULT_MAX_N,
    DominationReport,
    domination_degrees,
    gamma_t,
    sweep_minimal_tds,
)

DEFAULT_SEED = 20240

MATCH = "match"
MISMATCH = "mismatch"
BOUND_OK = "bound-satisfied"
BOUND_BAD = "bound-violated"
NO_ORACLE_STATUS = "no-oracle"
SKIPPED = "skipped"

QUANTITIES = ("tdd", "gamma_t", "upper_gamma_t", "tdi", "compliance", "bound")


@dataclass(frozen=True)
class VerificationRecord:
    subject: str
    params: str
    vertex: int | None
    quantity: str
    expected: str
    observed: str
    status: str
    claim: str = ""

    def sort_key(self) -> tuple:
        return (_natural(self.subject), -1 if self.vertex is None else self.vertex, self.quantity, self.claim)


CSV_FIELDS = ["subject", "params", "vertex", "quantity", "expected", "observed", "status", "claim"]


def _natural(text: str) -> tuple:
    return tuple(int(t) if t.isdigit() else t for t in re.split(r"(\d+)", text))


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, Marker):
        return value.value
    return str(value)


def _compliance(value) -> str:
    return "non_compliant" if value is NON_COMPLIANT else "compliant"


def canonical(records: Iterable[VerificationRecord]) -> list[VerificationRecord]:
    return sorted(records, key=VerificationRecord.sort_key)


def has_mismatch(records: Iterable[VerificationRecord]) -> bool:
    return any(r.status in (MISMATCH, BOUND_BAD) and not r.claim.startswith("conj") for r in records)


# -- oracle comparison -------------------------------------------------------

def compare(subject: str, params: str, exp: OracleExpectation, rep: DominationReport) -> list[VerificationRecord]:
    out = []
    claim = exp.source.get("tdd", "")

    def rec(vertex, quantity, expected, observed, status, c=claim):
        out.append(VerificationRecord(subject, params, vertex, quantity, expected, observed, status, c))

    for v, (e, o) in enumerate(zip(exp.per_vertex, rep.per_vertex_tdd)):
        if isinstance(e, int):
            rec(v, "tdd", str(e), _fmt(o), MATCH if o == e else MISMATCH)
        elif e is NON_COMPLIANT or e is COMPLIANT:
            rec(v, "compliance", _compliance(e), _compliance(o), MATCH if _compliance(e) == _compliance(o) else MISMATCH)
        else:
            rec(v, "tdd", "-", _fmt(o), NO_ORACLE_STATUS)
        if exp.bounds is not None and exp.bounds[v] is not None:
            b = exp.bounds[v]
            ok = isinstance(o, int) and o <= b
            rec(v, "bound", f"<= {b}", _fmt(o), BOUND_OK if ok else BOUND_BAD)
    if exp.expected_gamma_t is not None:
        g = exp.expected_gamma_t
        rec(None, "gamma_t", str(g), str(rep.gamma_t), MATCH if g == rep.gamma_t else MISMATCH,
            exp.source.get("gamma_t", claim))
    rec(None, "upper_gamma_t", "-", str(rep.upper_gamma_t), NO_ORACLE_STATUS, "")
    if exp.expected_tdi is not None:
        t = exp.expected_tdi
        rec(None, "tdi", _fmt(t), _fmt(rep.tdi), MATCH if t == rep.tdi else MISMATCH, exp.source.get("tdi", claim))
    return out


def _skip(subject: str, params: str, reason: str) -> list[VerificationRecord]:
    return [VerificationRecord(subject, params, None, "tdd", "-", reason, SKIPPED)]


def _no_oracle(subject: str, params: str, rep: DominationReport) -> list[VerificationRecord]:
    out = [VerificationRecord(subject, params, v, "tdd", "-", _fmt(t), NO_ORACLE_STATUS)
           for v, t in enumerate(rep.per_vertex_tdd)]
    out.append(VerificationRecord(subject, params, None, "tdi", "-", _fmt(rep.tdi), NO_ORACLE_STATUS))
    return out


def verify_spec(spec: FamilySpec, max_n: int = DEFAULT_MAX_N) -> list[VerificationRecord]:
    subject, params = str(spec), " ".join(map(str, spec.params))
    g = generate(spec)
    if g.order > max_n:
        return _skip(subject, params, f"n={g.order} above cap {max_n}")
    if has_isolated_vertex(g):
        return _skip(subject, params, "isolated vertex")
    rep = sweep_minimal_tds(g, max_n)
    exp = expected_tdd(spec)
    if exp is NO_ORACLE:
        return _no_oracle(subject, params, rep)
    return compare(subject, params, exp, rep)


def _parallel(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _verify_spec_task(args: tuple[FamilySpec, int]) -> list[VerificationRecord]:
    return verify_spec(*args)


def verify_family(name: str, param_sets: Iterable[Sequence[int]] = ((),), max_n: int = DEFAULT_MAX_N,
                  jobs: int = 1) -> list[VerificationRecord]:
    specs = [FamilySpec(name, tuple(p)) for p in param_sets]
    parts = _parallel(_verify_spec_task, [(s, max_n) for s in specs], jobs)
    return canonical(r for part in parts for r in part)


def default_family_matrix() -> dict[str, list[tuple[int, ...]]]:
    return {
        "path": [(n,) for n in range(2, 15)],
        "cycle": [(n,) for n in range(3, 17)],
        "book": [(n,) for n in range(1, 5)],
        "windmill": [(p, q) for p in (2, 3, 4) for q in (2, 3)],
        "complete": [(n,) for n in range(2, 9)],
        "complete_bipartite": [(m, n) for m in range(1, 5) for n in range(1, 5)],
        "star": [(n,) for n in range(1, 9)],
        "wheel": [(n,) for n in range(3, 9)],
        "kragujevac": [(2, 2)],
        "petersen": [()],
        "grotzsch": [()],
        "herschel": [()],
    }


def verify_families(matrix: dict[str, list[tuple[int, ...]]] | None = None, max_n: int = DEFAULT_MAX_N,
                    jobs: int = 1) -> list[VerificationRecord]:
    matrix = default_family_matrix() if matrix is None else matrix
    tasks = [(FamilySpec(name, p), max_n) for name, plist in matrix.items() for p in plist]
    parts = _parallel(_verify_spec_task, tasks, jobs)
    return canonical(r for part in parts for r in part)


# -- constructs --------------------------------------------------------------

@dataclass(frozen=True)
class ConstructSpec:
    op: str
    operands: tuple[FamilySpec, ...]

    def __str__(self) -> str:
        return f"{self.op}({','.join(map(str, self.operands))})"

    def graphs(self) -> list[Graph]:
        return [generate(s) for s in self.operands]

    def build(self) -> Graph:
        return constructs.apply(self.op, self.graphs())


def _fs(name: str, *params: int) -> FamilySpec:
    return FamilySpec(name, params)


def default_construct_matrix() -> list[ConstructSpec]:
    P, C, K = (lambda n: _fs("path", n)), (lambda n: _fs("cycle", n)), (lambda n: _fs("complete", n))
    krag = _fs("kragujevac", 2, 2)
    out = [
        ConstructSpec("union", (P(5), P(5))),
        ConstructSpec("join", (P(3), P(3))),
        ConstructSpec("composition", (C(4), K(2))),
        ConstructSpec("composition", (P(5), K(2))),
        ConstructSpec("corona", (C(3), K(2))),
        ConstructSpec("corona", (P(3), K(2))),
    ]
    out += [ConstructSpec("subdivision", (K(n),)) for n in (3, 4, 5)]
    out += [ConstructSpec("degree_splitting", (P(n),)) for n in range(4, 11)]
    # non-compliant operands: bound cases
    for g in (P(4), P(7), krag):
        out.append(ConstructSpec("composition", (g, K(2))))
        out.append(ConstructSpec("corona", (P(3), g)))
    return out


def verify_construct(spec: ConstructSpec, max_n: int = DEFAULT_MAX_N) -> list[VerificationRecord]:
    subject = str(spec)
    params = ";".join(" ".join(map(str, s.params)) for s in spec.operands)
    graphs = spec.graphs()
    h = constructs.apply(spec.op, graphs)
    if h.order > max_n:
        return _skip(subject, params, f"n={h.order} above cap {max_n}")
    if has_isolated_vertex(h):
        return _skip(subject, params, "isolated vertex")
    reports = [None if has_isolated_vertex(g) else sweep_minimal_tds(g, max_n) for g in graphs]
    dd = None
    if spec.op == "composition" and reports[0] is not None and not reports[0].compliant:
        dd = [domination_degrees(graphs[0], max_n)]
    exp = expected_construct(spec.op, graphs, reports, dd)
    rep = sweep_minimal_tds(h, max_n)
    if exp is NO_ORACLE:
        return _no_oracle(subject, params, rep)
    return compare(subject, params, exp, rep)


def _verify_construct_task(args: tuple[ConstructSpec, int]) -> list[VerificationRecord]:
    return verify_construct(*args)


def verify_constructs(matrix: Sequence[ConstructSpec] | None = None, max_n: int = DEFAULT_MAX_N,
                      jobs: int = 1) -> list[VerificationRecord]:
    matrix = default_construct_matrix() if matrix is None else matrix
    parts = _parallel(_verify_construct_task, [(s, max_n) for s in matrix], jobs)
    return canonical(r for part in parts for r in part)


# -- proven propositions -----------------------------------------------------

def _random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def lower_bound_tdd(g: Graph) -> int:
    """Largest of ceil(n/Delta), rad and ceil((diam+1)/2) for a connected graph."""
    rad, diam = radius_diameter(g)
    return max(math.ceil(g.order / g.max_degree()), rad, math.ceil((diam + 1) / 2))


def check_propositions(g: Graph, subject: str = "graph", seed: int = DEFAULT_SEED,
                       max_n: int = DEFAULT_MAX_N, report: DominationReport | None = None,
                       permutations: int = 3, edge_samples: int = 3) -> list[VerificationRecord]:
    rng = random.Random(seed)
    rep = report if report is not None else sweep_minimal_tds(g, max_n)
    dd = domination_degrees(g, max_n)
    out: list[VerificationRecord] = []

    def rec(vertex, quantity, expected, observed, ok, claim):
        out.append(VerificationRecord(subject, "", vertex, quantity, expected, observed,
                                      MATCH if ok else MISMATCH, claim))

    lower = lower_bound_tdd(g) if is_connected(g) else None
    for v, t in enumerate(rep.per_vertex_tdd):
        if t is NON_COMPLIANT:
            continue
        rec(v, "bound", f"[{rep.gamma_t}, {rep.upper_gamma_t}]", str(t),
            rep.gamma_t <= t <= rep.upper_gamma_t, "gamma-bounds")
        rec(v, "bound", f">= {dd[v]}", str(t), t >= dd[v], "dd-lower")
        if lower is not None:
            rec(v, "bound", f">= {lower}", str(t), t >= lower, "distance-lower")
    if lower is not None:
        rec(None, "gamma_t", f">= {lower}", str(rep.gamma_t), rep.gamma_t >= lower, "distance-lower")
    if rep.compliant:
        n = g.order
        rec(None, "tdi", f"[{rep.gamma_t * n}, {rep.upper_gamma_t * n}]", str(rep.tdi),
            rep.gamma_t * n <= rep.tdi <= rep.upper_gamma_t * n, "tdi-mean")
        rec(None, "tdi", f">= {sum(dd)}", str(rep.tdi), rep.tdi >= sum(dd), "tdi-vs-di")

    eligible = [(u, v) for u, v in g.edges() if g.degree(u) > 1 and g.degree(v) > 1]
    for u, v in sorted(rng.sample(eligible, min(edge_samples, len(eligible)))):
        smaller = gamma_t(g.without_edge(u, v), max_n)
        rec(None, "gamma_t", f">= {rep.gamma_t} (delete {u}-{v})", str(smaller),
            smaller >= rep.gamma_t, "edge-deletion")

    for _ in range(permutations):
        perm = _random_permutation(rng, g.order)
        moved = sweep_minimal_tds(relabel(g, perm), max_n)
        same = all(moved.per_vertex_tdd[perm[v]] == t for v, t in enumerate(rep.per_vertex_tdd))
        rec(None, "tdi", f"{_fmt(rep.tdi)} (perm {' '.join(map(str, perm))})", _fmt(moved.tdi),
            same and moved.tdi == rep.tdi, "relabel-invariance")
    return out


# -- unproven claims ---------------------------------------------------------

def _is_bridge(g: Graph, u: int, v: int) -> bool:
    return distances(g.without_edge(u, v), u)[v] == math.inf


def random_spanning_subgraph(g: Graph, rng: random.Random) -> Graph | None:
    """Delete a random number of non-bridge edges, never isolating a vertex."""
    budget = rng.randint(1, max(1, g.size - g.order + 1))
    h = g
    for _ in range(budget):
        candidates = [(u, v) for u, v in h.edges()
                      if h.degree(u) > 1 and h.degree(v) > 1 and not _is_bridge(h, u, v)]
        if not candidates:
            break
        h = h.without_edge(*rng.choice(candidates))
    return None if h == g else h


def check_conjecture_pair(g: Graph, h: Graph, subject: str, max_n: int = DEFAULT_MAX_N,
                          g_report: DominationReport | None = None
                          ) -> tuple[list[VerificationRecord], list[dict]]:
    """Compare a graph against one of its spanning subgraphs."""
    rg = g_report if g_report is not None else sweep_minimal_tds(g, max_n)
    params = f"deleted {' '.join(f'{u}-{v}' for u, v in sorted(set(g.edges()) - set(h.edges())))}"
    if has_isolated_vertex(h):
        return [VerificationRecord(subject, params, None, "tdi", "-", "isolated vertex", NO_ORACLE_STATUS, "conj-subgraph-tdd")], []
    rh = sweep_minimal_tds(h, max_n)
    if not (rg.compliant and rh.compliant):
        why = "subgraph non-compliant" if rg.compliant else "graph non-compliant"
        return [VerificationRecord(subject, params, None, "tdi", "-", why, NO_ORACLE_STATUS, "conj-subgraph-tdd")], []
    records, found = [], []
    tree = h.size == h.order - 1
    for v in range(g.order):
        tg, th = rg.per_vertex_tdd[v], rh.per_vertex_tdd[v]
        ok = tg <= th
        records.append(VerificationRecord(subject, params, v, "bound", f"<= {th}", str(tg),
                                          BOUND_OK if ok else BOUND_BAD, "conj-spanning-tree-tdd" if tree else "conj-subgraph-tdd"))
        if not ok:
            found.append({
                "claim": "tdd(G, v) <= tdd(H, v)",
                "subject": subject,
                "vertex": v,
                "tdd_graph": tg,
                "tdd_subgraph": th,
                "witness_graph": rg.certificates[v].witness.to_list(),
                "witness_subgraph": rh.certificates[v].witness.to_list(),
                "graph": serialize(g),
                "subgraph": serialize(h),
            })
    ok = rg.tdi <= rh.tdi
    records.append(VerificationRecord(subject, params, None, "tdi", f"<= {rh.tdi}", str(rg.tdi),
                                      BOUND_OK if ok else BOUND_BAD, "conj-spanning-tdi"))
    if not ok:
        found.append({
            "claim": "TDI(G) <= TDI(H)",
            "subject": subject,
            "tdi_graph": rg.tdi,
            "tdi_subgraph": rh.tdi,
            "witnesses_graph": [c.witness.to_list() for c in rg.certificates],
            "witnesses_subgraph": [c.witness.to_list() for c in rh.certificates],
            "graph": serialize(g),
            "subgraph": serialize(h),
        })
    return records, found


def check_conjectures(g: Graph, samples: int = 5, subject: str = "graph", seed: int = DEFAULT_SEED,
                      max_n: int = DEFAULT_MAX_N) -> tuple[list[VerificationRecord], list[dict]]:
    rng = random.Random(seed)
    rg = sweep_minimal_tds(g, max_n)
    records: list[VerificationRecord] = []
    found: list[dict] = []
    for i in range(samples):
        h = random_spanning_subgraph(g, rng)
        if h is None:
            continue
        r, f = check_conjecture_pair(g, h, f"{subject}#sample{i}", max_n, rg)
        records += r
        found += f
    return records, found


SUBGRAPH_G = from_edge_list(6, [(0, 1), (0, 4), (1, 2), (1, 4), (1, 5), (2, 3), (2, 5), (3, 5), (4, 5)])


def default_conjecture_graphs() -> list[tuple[str, Graph, Graph | None]]:
    """(subject, G, fixed H or None for random sampling)."""
    c6, k4 = generate(_fs("cycle", 6)), generate(_fs("complete", 4))
    out = [
        ("cycle(6)-vs-path(6)", c6, c6.without_edge(0, 5)),
        ("complete(4)-vs-path(4)", k4, from_edge_list(4, [(0, 1), (1, 2), (2, 3)])),
        # known violation: deleting 2-5 lowers the TDD of vertex 3
        ("six-vertex-chorded", SUBGRAPH_G, SUBGRAPH_G.without_edge(2, 5)),
    ]
    for spec in (_fs("wheel", 5), _fs("cycle", 8), _fs("petersen"), _fs("book", 2),
                 _fs("complete_bipartite", 3, 3), _fs("complete", 5), _fs("windmill", 3, 3)):
        out.append((str(spec), generate(spec), None))
    return out


def run_conjectures(samples: int = 5, seed: int = DEFAULT_SEED, max_n: int = DEFAULT_MAX_N
                    ) -> tuple[list[VerificationRecord], list[dict]]:
    records, found = [], []
    for subject, g, h in default_conjecture_graphs():
        if h is not None:
            r, f = check_conjecture_pair(g, h, subject, max_n)
        else:
            r, f = check_conjectures(g, samples, subject, seed, max_n)
        records += r
        found += f
    return canonical(records), found


def proposition_graphs(max_order: int = 16) -> list[tuple[str, Graph]]:
    """Every family and construct instance of the default matrices up to ``max_order``."""
    out = []
    for name, plist in default_family_matrix().items():
        for p in plist:
            spec = FamilySpec(name, p)
            g = generate(spec)
            if g.order <= max_order and not has_isolated_vertex(g):
                out.append((str(spec), g))
    for spec in default_construct_matrix():
        h = spec.build()
        if h.order <= max_order and not has_isolated_vertex(h):
            out.append((str(spec), h))
    return out


def _prop_task(args: tuple[str, Graph, int, int]) -> list[VerificationRecord]:
    subject, g, seed, max_n = args
    return check_propositions(g, subject, seed, max_n)


def run_propositions(seed: int = DEFAULT_SEED, max_n: int = DEFAULT_MAX_N, max_order: int = 16,
                     jobs: int = 1) -> list[VerificationRecord]:
    tasks = [(s, g, seed, max_n) for s, g in proposition_graphs(max_order)]
    parts = _parallel(_prop_task, tasks, jobs)
    return canonical(r for part in parts for r in part)


# -- report files ------------------------------------------------------------

def records_to_csv(records: Sequence[VerificationRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        row = asdict(r)
        row["vertex"] = "" if r.vertex is None else r.vertex
        writer.writerow(row)
    return buf.getvalue()


def summarize(records: Sequence[VerificationRecord]) -> dict[str, int]:
    counts: dict[str, int] = {}
    for r in records:
        counts[r.status] = counts.get(r.status, 0) + 1
    return dict(sorted(counts.items()))


def records_to_json(records: Sequence[VerificationRecord], counterexamples: Sequence[dict] = (),
                    meta: dict | None = None) -> str:
    doc = {
        "meta": meta or {},
        "summary": summarize(records),
        "records": [asdict(r) for r in records],
        "counterexamples": list(counterexamples),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
