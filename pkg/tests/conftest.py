from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import strategies as st

from uniinertia.graph_model import WeightedGraph

NONZERO = [x for x in range(-5, 6) if x != 0]

rationals = st.builds(Fraction, st.sampled_from(NONZERO), st.sampled_from(NONZERO))


def brute_matching_number(G: WeightedGraph) -> int:
    """Largest set of pairwise disjoint edges, by exhaustive search."""
    edges = G.edge_pairs()
    for size in range(len(edges), 0, -1):
        for subset in combinations(edges, size):
            ends = [x for e in subset for x in e]
            if len(ends) == len(set(ends)):
                return size
    return 0


@pytest.fixture
def edge_file(tmp_path):
    def write(text: str, name: str = "g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def from_networkx(H, weights=None) -> WeightedGraph:
    """Relabel a networkx graph onto 1..n, optionally with per-edge weights."""
    from uniinertia.graph_model import build_graph

    index = {v: i + 1 for i, v in enumerate(sorted(H.nodes))}
    edges = [(index[u], index[v]) for u, v in H.edges]
    if weights is not None:
        edges = [(u, v, w) for (u, v), w in zip(edges, weights)]
    return build_graph(H.number_of_nodes(), edges)


def atlas_forests(max_order: int = 7):
    """Every forest with 1..max_order vertices, up to isomorphism."""
    import networkx as nx

    return [H for H in nx.graph_atlas_g() if 0 < H.number_of_nodes() <= max_order and nx.is_forest(H)]


_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None or report.when == "teardown":
        return
    number, title = marker
    if report.when == "call" or report.outcome != "passed":
        _criteria[number] = (title, "PASS" if report.outcome == "passed" else "FAIL")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        outcome.get_result().criterion = mark.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, verdict = _criteria[number]
        terminalreporter.write_line(f"criterion {number} {verdict}: {title}")
