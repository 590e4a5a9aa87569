import os
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from rootedbasis.graph import RootedGraph, build_graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

K4_EDGES = [(0, 1), (0, 2), (1, 2), (1, 3), (0, 3), (2, 3)]


@pytest.fixture
def k4():
    return RootedGraph(build_graph(4, K4_EDGES), 0)


@pytest.fixture
def triangle():
    return RootedGraph(build_graph(3, [(0, 1), (1, 2), (2, 0)]), 0)


@pytest.fixture
def bowtie():
    return RootedGraph(build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]), 0)


def atlas_graphs(min_n=1, max_n=7, biconnected=False, connected=True):
    """Simple graphs from the networkx atlas as (n, edge list)."""
    import networkx as nx

    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if n < min_n or n > max_n:
            continue
        if connected and (n == 0 or not nx.is_connected(G)):
            continue
        if biconnected and (n < 3 or not nx.is_biconnected(G)):
            continue
        yield n, sorted(tuple(sorted(e)) for e in G.edges())


@st.composite
def multigraphs(draw, max_n=6, max_m=9, loops=True, max_weight=5):
    """Small multigraphs with at least one non-loop edge; returns a RootedGraph."""
    n = draw(st.integers(2, max_n))
    vert = st.integers(0, n - 1)
    u = draw(vert)
    v = draw(vert.filter(lambda x: x != u))
    edges = [(u, v, draw(st.integers(1, max_weight)))]
    for _ in range(draw(st.integers(0, max_m - 1))):
        a, b = draw(vert), draw(vert)
        if a == b and not loops:
            continue
        edges.append((a, b, draw(st.integers(1, max_weight))))
    perm = draw(st.permutations(range(len(edges))))
    edges = [edges[i] for i in perm]
    return RootedGraph(build_graph(n, edges), perm.index(0))


@st.composite
def biconnected_graphs(draw, max_n=8, max_extra=6, max_weight=10):
    """Hamiltonian cycle plus chords (possibly parallel); always 2-connected."""
    n = draw(st.integers(3, max_n))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[(i + 1) % n]) for i in range(n)]
    for _ in range(draw(st.integers(0, max_extra))):
        a, b = rng.sample(range(n), 2)
        edges.append((a, b))
    rng.shuffle(edges)
    weights = [rng.randint(1, max_weight) for _ in edges]
    g = build_graph(n, [(a, b, w) for (a, b), w in zip(edges, weights)])
    return RootedGraph(g, draw(st.integers(0, len(edges) - 1)))


# -- acceptance summary -------------------------------------------------------


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion, with the recorded detail."""
    by_criterion: dict[int, list] = {}
    for reports in terminalreporter.stats.values():
        for rep in reports:
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid or rep.when not in ("call", "setup"):
                continue
            if rep.when == "setup" and not rep.failed:
                continue
            num = int(nodeid.split("test_criterion_")[1].split("_")[0])
            by_criterion.setdefault(num, []).append(rep)
    if not by_criterion:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(by_criterion):
        reps = by_criterion[num]
        ok = all(r.passed for r in reps)
        details = [v for r in reps for k, v in r.user_properties if k == "detail"]
        notes = ["expected failure, see decisions ledger" if r.skipped
                 else "marked as expected failure but passed this run (timing is noisy)"
                 for r in reps if hasattr(r, "wasxfail")]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'} - " + "; ".join(details + notes))
