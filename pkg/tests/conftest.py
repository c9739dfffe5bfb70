import os
import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from centerset.graph import Graph, build_graph, is_connected

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tools"))
sys.path.insert(0, str(Path(__file__).resolve().parent))


@st.composite
def graphs(draw, min_order=1, max_order=10, connected=False):
    n = draw(st.integers(min_order, max_order))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = build_graph(n, chosen)
    if connected:
        # a spanning path keeps the draw connected without biasing toward trees
        extra = [(i, i + 1) for i in range(n - 1) if not g.has_edge(i, i + 1)]
        g = build_graph(n, chosen + extra)
    return g


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return build_graph(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int, p: float = 0.3) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g


@pytest.fixture(scope="session")
def conn9_corpus():
    """Path to the complete catalog of connected order-9 graphs, or skip."""
    env = os.environ.get("CENTERSET_CONN9")
    path = Path(env) if env else ROOT / ".cache" / "conn9.g6"
    if path.exists():
        return path
    try:
        from connected_catalog import connected_catalog
    except ImportError:
        pytest.skip("no order-9 catalog and pynauty is unavailable to build one")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(connected_catalog(9)) + "\n")
    return path


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        status, title = results[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")
