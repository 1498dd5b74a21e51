import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tdindex.families import FamilySpec, generate  # noqa: E402
from tdindex.graph import from_edge_list, is_connected  # noqa: E402


def fam(name, *params):
    return generate(FamilySpec(name, params))


def random_connected_graph(rng: random.Random, n: int, p: float):
    """Random spanning tree plus independent extra edges; connected, no isolated vertices."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    g = from_edge_list(n, sorted(edges))
    assert is_connected(g)
    return g


@pytest.fixture
def rng():
    return random.Random(20240)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2])):
            terminalreporter.write_line(line)
