"""Deterministic instance families."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, RootedGraph, build_graph


def gen_ladder(k: int) -> RootedGraph:
    """Ladder with ``k`` rungs; the root is the rung at one end.

    Top rail is ``0..k-1``, bottom rail ``k..2k-1``.  Edge 0 is the rung
    ``(0, k)``; then for each ``i`` the top rail edge, bottom rail edge and
    rung that close the ``i``-th square.
    """
    if k < 2:
        raise ValueError("a ladder needs at least 2 rungs")
    edges = [(0, k)]
    for i in range(1, k):
        edges += [(i - 1, i), (k + i - 1, k + i), (i, k + i)]
    return RootedGraph(build_graph(2 * k, edges), 0)


def ladder_min_basis_total(k: int) -> int:
    """Closed form for the unit-weight ladder: squares of perimeter 4, 6, ..., 2k."""
    return (k - 1) * (k + 2)


def gen_cliques_with_paths(clique_size: int, path_len: int) -> RootedGraph:
    """Two cliques joined by two disjoint paths of ``path_len`` edges each.

    Clique A is ``0..s-1``, clique B is ``s..2s-1``; the paths join A's
    vertices 0 and 1 to B's vertices 0 and 1.  The root is the A-edge
    ``(s-2, s-1)``, away from both path ends.
    """
    s, L = clique_size, path_len
    if s < 3 or L < 1:
        raise ValueError("need clique_size >= 3 and path_len >= 1")
    edges = []
    for a, b in combinations(range(s), 2):
        edges.append((a, b))
    for a, b in combinations(range(s), 2):
        edges.append((s + a, s + b))
    n = 2 * s
    for i in range(2):
        prev = i
        for _ in range(L - 1):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, s + i))
    root = edges.index((s - 2, s - 1))
    return RootedGraph(build_graph(n, edges), root)


def far_clique_edges(clique_size: int) -> range:
    """Edge ids of clique B in :func:`gen_cliques_with_paths`."""
    k = clique_size * (clique_size - 1) // 2
    return range(k, 2 * k)


K33_BRANCH = ((0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5))
K33_SUBDIVIDED = ((0, 3), (1, 4), (2, 5), (0, 4))


def gen_k33_subdivision() -> RootedGraph:
    """K_{3,3} with four of its edges subdivided once: 10 vertices, 13 edges.

    Sides are ``{0, 1, 2}`` and ``{3, 4, 5}``; the perfect matching 0-3, 1-4,
    2-5 and the edge 0-4 carry subdivision vertices 6..9.  The root is the
    unsubdivided edge 0-5.
    """
    edges = []
    nxt = 6
    for a, b in K33_BRANCH:
        if (a, b) in K33_SUBDIVIDED:
            edges += [(a, nxt), (nxt, b)]
            nxt += 1
        else:
            edges.append((a, b))
    return RootedGraph(build_graph(nxt, edges), edges.index((0, 5)))


def sparsity_violations(g: Graph, a: float = 1.5, b: float = 2.0) -> list[tuple[int, ...]]:
    """Vertex subsets of size >= 2 inducing more than ``a*k - b`` edges (exhaustive)."""
    bad = []
    for k in range(2, g.n + 1):
        for sub in combinations(range(g.n), k):
            inside = set(sub)
            cnt = sum(1 for u, v, _ in g.edges if u in inside and v in inside)
            if cnt > a * k - b:
                bad.append(sub)
    return bad


def gen_random_biconnected(n: int, m: int, seed: int = 0, max_weight: int = 1,
                           distinct: bool = False) -> RootedGraph:
    """Random simple biconnected graph: a shuffled Hamiltonian cycle plus chords.

    Weights are uniform in ``[1, max_weight]``, or all distinct when
    ``distinct`` is set.  The root is edge 0.
    """
    if n < 3 or not n <= m <= n * (n - 1) // 2:
        raise ValueError(f"need n >= 3 and n <= m <= n(n-1)/2, got n={n}, m={m}")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = {tuple(sorted((perm[i], perm[(i + 1) % n]))) for i in range(n)}
    edges = [tuple(sorted((perm[i], perm[(i + 1) % n]))) for i in range(n)]
    while len(edges) < m:
        u, v = rng.sample(range(n), 2)
        key = (min(u, v), max(u, v))
        if key not in pairs:
            pairs.add(key)
            edges.append(key)
    rng.shuffle(edges)
    if distinct:
        ws = rng.sample(range(1, max(max_weight, m) + 1), m)
    else:
        ws = [rng.randint(1, max_weight) for _ in range(m)]
    return RootedGraph(build_graph(n, [(u, v, w) for (u, v), w in zip(edges, ws)]), 0)
