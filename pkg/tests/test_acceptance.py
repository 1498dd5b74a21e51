"""Acceptance gate.

Each test ends in ``verdict(criterion, ok, detail)``, which records a
PASS/FAIL line (printed in the terminal summary) and then asserts.
Expected values come from the closed forms in ``tdindex.oracles`` or are
written out inline; the solver is never its own reference.
"""

import math
import random
import time

from conftest import fam, random_connected_graph
from naive import naive_report
from tdindex import oracles as O
from tdindex import verify as V
from tdindex.constructs import apply, composition, corona
from tdindex.families import kragujevac_layout
from tdindex.markers import NON_COMPLIANT
from tdindex.solver import domination_degrees, gamma_t, sweep_minimal_tds

RESULTS: list[str] = []


def verdict(criterion, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {criterion:>2}  {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _nc(report):
    return report.non_compliant_vertices


# 1 -------------------------------------------------------------------------

def test_c01_path_matrix():
    start = time.perf_counter()
    bad = []
    for n in [2, 3, 5, 6] + list(range(8, 15)):
        want = tuple(O.path_tdd(n, i) for i in range(1, n + 1))
        got = sweep_minimal_tds(fam("path", n)).per_vertex_tdd
        if got != want:
            bad.append(f"P{n}: {got} != {want}")
    p4, p7 = sweep_minimal_tds(fam("path", 4)), sweep_minimal_tds(fam("path", 7))
    if _nc(p4) != [0, 3]:
        bad.append(f"P4 non-compliant {_nc(p4)}")
    if _nc(p7) != [3]:
        bad.append(f"P7 non-compliant {_nc(p7)}")
    elapsed = time.perf_counter() - start
    if elapsed >= 10:
        bad.append(f"{elapsed:.1f}s")
    verdict(1, not bad, "; ".join(bad) or f"paths match residue formula ({elapsed:.2f}s)")


# 2 -------------------------------------------------------------------------

def test_c02_gamma_t():
    bad = []
    for n in range(3, 17):
        want = O.gamma_t_path_cycle(n)
        for name in ("path", "cycle"):
            got = gamma_t(fam(name, n))
            if got != want:
                bad.append(f"{name}({n}) {got} != {want}")
    verdict(2, not bad, "; ".join(bad) or "gamma_t of P_n, C_n for 3..16")


# 3 -------------------------------------------------------------------------

def test_c03_cycles():
    bad = []
    for n in range(3, 17):
        r = sweep_minimal_tds(fam("cycle", n))
        if set(r.per_vertex_tdd) != {O.cycle_tdd(n)} or not r.compliant or not r.is_tdr:
            bad.append(f"C{n}: {r.per_vertex_tdd}")
    verdict(3, not bad, "; ".join(bad) or "cycles 3..16 compliant, TDR, tdd = gamma_t")


# 4 -------------------------------------------------------------------------

def test_c04_books():
    bad = []
    for n in range(1, 5):
        r = sweep_minimal_tds(fam("book", n))
        centers, pages = r.per_vertex_tdd[:2], r.per_vertex_tdd[2:]
        if centers != (2, 2):
            bad.append(f"B{n} centers {centers}")
        if set(pages) != {2 * n}:
            bad.append(f"B{n} pages {sorted(set(pages))} expected {2 * n}")
        if r.tdi != 4 * (1 + n * n):
            bad.append(f"B{n} TDI {r.tdi} expected {4 * (1 + n * n)}")
    verdict(4, not bad, "; ".join(bad) or "books 1..4")


# 5 -------------------------------------------------------------------------

def test_c05_tdd_two_families():
    cases = [("windmill", (p, q)) for p in (2, 3, 4) for q in (2, 3)]
    cases += [("complete", (n,)) for n in range(2, 9)]
    cases += [("complete_bipartite", (m, n)) for m in range(1, 5) for n in range(1, 5)]
    cases += [("star", (n,)) for n in range(1, 9)]
    cases += [("wheel", (n,)) for n in range(3, 9)]
    closed = {
        "windmill": lambda p, q: 2 * (q * (p - 1) + 1),
        "complete": lambda n: 2 * n,
        "complete_bipartite": lambda m, n: 2 * (m + n),
        "star": lambda n: 2 * (1 + n),
        "wheel": lambda n: 2 * (1 + n),
    }
    bad = []
    for name, params in cases:
        r = sweep_minimal_tds(fam(name, *params))
        if set(r.per_vertex_tdd) != {2} or r.tdi != closed[name](*params):
            bad.append(f"{name}{params}: tdd {sorted(set(r.per_vertex_tdd), key=str)} tdi {r.tdi}")
    verdict(5, not bad, "; ".join(bad) or f"{len(cases)} instances all 2, TDI closed forms")


# 6 -------------------------------------------------------------------------

def test_c06_named_graphs():
    bad = []
    for name in ("petersen", "grotzsch", "herschel"):
        start = time.perf_counter()
        r = sweep_minimal_tds(fam(name))
        elapsed = time.perf_counter() - start
        if set(r.per_vertex_tdd) != {4}:
            bad.append(f"{name} {r.per_vertex_tdd}")
        if name == "petersen" and not r.is_tdr:
            bad.append("petersen not TDR")
        if elapsed >= 5:
            bad.append(f"{name} {elapsed:.1f}s")
    verdict(6, not bad, "; ".join(bad) or "Petersen, Grotzsch, Herschel all 4")


# 7 -------------------------------------------------------------------------

def test_c07_path_tdi():
    bad = []
    for n in [2, 3, 5, 6] + list(range(8, 15)):
        got = sweep_minimal_tds(fam("path", n)).tdi
        if got != O.path_tdi(n):
            bad.append(f"P{n} solver {got} formula {O.path_tdi(n)}")
    for n in range(2, 41):
        if n in (4, 7):
            continue
        if O.path_tdi(n) != sum(O.path_tdd(n, i) for i in range(1, n + 1)):
            bad.append(f"P{n} closed form != per-vertex sum")
    verdict(7, not bad, "; ".join(bad) or "solver n<=14, symbolic n<=40")


# 8 -------------------------------------------------------------------------

def _exact(op, graphs, expected):
    return sweep_minimal_tds(apply(op, graphs)).per_vertex_tdd, tuple(expected)


def test_c08_constructs_exact():
    P, C, K = (lambda n: fam("path", n)), (lambda n: fam("cycle", n)), (lambda n: fam("complete", n))
    bad = []

    def check(label, op, graphs, expected):
        got, want = _exact(op, graphs, expected)
        if got != want:
            diff = [f"v{v}:{g}!={w}" for v, (g, w) in enumerate(zip(got, want)) if g != w]
            bad.append(f"{label} {' '.join(diff)}")

    # union: tdd in own component plus gamma_t of the other; P_5 has [4,3,3,3,4], gamma_t 3
    check("union(P5,P5)", "union", [P(5), P(5)], [7, 6, 6, 6, 7] * 2)
    check("join(P3,P3)", "join", [P(3), P(3)], [2] * 6)
    # composition with K_2 keeps the base tdd on both copies
    check("comp(C4,K2)", "composition", [C(4), K(2)], [2] * 8)
    check("comp(P5,K2)", "composition", [P(5), K(2)], [4, 4, 3, 3, 3, 3, 3, 3, 4, 4])
    # corona with K_2 (tdd 2): base vertices n, copy vertices 2 + (n - 1)
    check("corona(C3,K2)", "corona", [C(3), K(2)], [3] * 3 + [4] * 6)
    check("corona(P3,K2)", "corona", [P(3), K(2)], [3] * 3 + [4] * 6)
    start = time.perf_counter()
    for n in (3, 4, 5):
        value = math.ceil(3 * n / 2) - 1
        check(f"S(K{n})", "subdivision", [K(n)], [value] * (n + n * (n - 1) // 2))
    if time.perf_counter() - start >= 60:
        bad.append("subdivision too slow")
    check("DS(P4)", "degree_splitting", [P(4)], [3, 3, 3, 3, 3, 4])
    for n in range(5, 11):
        check(f"DS(P{n})", "degree_splitting", [P(n)], [4] * (n + 2))
    verdict(8, not bad, "; ".join(bad) or "all exact construct cases")


# 9 -------------------------------------------------------------------------

def test_c09_constructs_bounds():
    bad = []
    k2 = fam("complete", 2)
    for n in (4, 7):
        base = fam("path", n)
        dd = domination_degrees(base)
        r = sweep_minimal_tds(composition(base, k2))
        if not r.compliant:
            bad.append(f"comp(P{n},K2) non-compliant")
        for v, t in enumerate(r.per_vertex_tdd):
            if t is NON_COMPLIANT or t > 2 * dd[v // 2]:
                bad.append(f"comp(P{n},K2) v{v} {t} > {2 * dd[v // 2]}")
    p3, p4 = fam("path", 3), fam("path", 4)
    bound = 2 + (p3.order - 1) * gamma_t(p4)
    r = sweep_minimal_tds(corona(p3, p4))
    if not r.compliant:
        bad.append("corona(P3,P4) non-compliant")
    for v in range(3, r.order):
        t = r.per_vertex_tdd[v]
        if t is NON_COMPLIANT or t > bound:
            bad.append(f"corona(P3,P4) v{v} {t} > {bound}")
    verdict(9, not bad, "; ".join(bad) or "zero bound violations")


# 10 ------------------------------------------------------------------------

def test_c10_kragujevac():
    g = fam("kragujevac", 2, 2)
    r = sweep_minimal_tds(g)
    layout = kragujevac_layout([2, 2])
    bad = []
    if _nc(r) != layout["center"]:
        bad.append(f"non-compliant {_nc(r)}")
    for v in layout["roots"] + layout["middles"]:
        if r.per_vertex_tdd[v] != 6:
            bad.append(f"v{v} {r.per_vertex_tdd[v]} != 6")
    for v in layout["leaves"]:
        if r.per_vertex_tdd[v] != 7:
            bad.append(f"leaf v{v} {r.per_vertex_tdd[v]} != 7")
    verdict(10, not bad, "; ".join(bad) or "center only non-compliant; 6 and 7")


# 11 ------------------------------------------------------------------------

def test_c11_property_suite():
    listed = ("gamma-bounds", "dd-lower", "distance-lower", "edge-deletion", "relabel-invariance")
    graphs = V.proposition_graphs(max_order=22)
    records = [rec for subject, g in graphs for rec in V.check_propositions(g, subject)
               if rec.claim in listed]
    failing: dict[str, set] = {}
    for r in records:
        if r.status != V.MATCH:
            failing.setdefault(r.claim, set()).add(r.subject)
    missing = set(listed) - {r.claim for r in records}
    detail = "; ".join(f"{claim} violated on {len(subs)} graphs e.g. {min(subs)}"
                       for claim, subs in sorted(failing.items()))
    detail = "; ".join(filter(None, [detail, ", ".join(sorted(missing))]))
    verdict(11, not failing and not missing, detail or f"{len(graphs)} graphs, {len(records)} checks")


# 12 ------------------------------------------------------------------------

def test_c12_naive_equivalence():
    rng = random.Random(V.DEFAULT_SEED)
    bad = []
    for i in range(50):
        g = random_connected_graph(rng, rng.randint(4, 10), rng.choice([0.2, 0.35, 0.5]))
        if sweep_minimal_tds(g).to_dict() != naive_report(g):
            bad.append(f"graph {i}")
    verdict(12, not bad, "; ".join(bad) or "50 random graphs identical field for field")


# 13 ------------------------------------------------------------------------

def test_c13_conjecture_harness():
    meta = {"seed": V.DEFAULT_SEED}
    first = V.records_to_json(*V.run_conjectures(samples=5), meta=meta).encode()
    second = V.records_to_json(*V.run_conjectures(samples=5), meta=meta).encode()
    verdict(13, first == second and len(first) > 0, f"{len(first)} bytes, identical across runs")
