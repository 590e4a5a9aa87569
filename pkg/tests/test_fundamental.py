import random
from itertools import islice

import pytest

from conftest import K4_EDGES, atlas_graphs
from rootedbasis import testkit as tk
from rootedbasis.errors import (InvalidEmbedding, NotASpanningTree, RootNotInTree, SearchLimitExceeded,
                                WrongDegree)
from rootedbasis.fundamental import (PlaneEmbedding, dual_graph, embedding_from_coordinates,
                                     find_fundamental_rooted_tree, find_tree_partition, forced_edge_gadget,
                                     fundamental_basis, has_rooted_hamiltonian, is_fundamental_rooted,
                                     plane_catalogue, plane_grid, plane_prism, tree_from_partition)
from rootedbasis.generators import gen_random_biconnected
from rootedbasis.graph import RootedGraph, build_graph, gf2_rank, validate_rooted_basis

PETERSEN = [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + \
           [(5 + i, 5 + (i + 2) % 5) for i in range(5)]


def is_spanning_tree(g, edges):
    """n - 1 edges that connect every vertex."""
    edges = sorted(edges)
    sub = build_graph(g.n, [g.edges[e] for e in edges])
    return len(edges) == g.n - 1 and max(sub.components(), default=0) == 0


# -- fundamental checks -----------------------------------------------------


def test_triangle_path_tree(triangle):
    assert is_fundamental_rooted(triangle, {0, 1})
    assert is_fundamental_rooted(triangle, {0, 2})


def test_k4_trees(k4):
    assert is_fundamental_rooted(k4, {0, 1, 3})
    check = is_fundamental_rooted(k4, {0, 1, 4})
    assert not check and check.witness == 5


def test_tree_errors(k4):
    with pytest.raises(RootNotInTree):
        is_fundamental_rooted(k4, {1, 2, 3})
    with pytest.raises(NotASpanningTree):
        is_fundamental_rooted(k4, {0, 1, 2})
    with pytest.raises(NotASpanningTree):
        is_fundamental_rooted(k4, {0, 1})


def test_partition_search_on_k4(k4):
    part = find_tree_partition(k4)
    assert part is not None and 0 in part.side1 and 1 in part.side2
    tree = tree_from_partition(k4, part)
    assert is_fundamental_rooted(k4, tree)


def test_fundamental_basis_is_a_rooted_basis(k4):
    tree = find_fundamental_rooted_tree(k4)
    basis = fundamental_basis(k4.graph, tree)
    assert validate_rooted_basis(k4, basis).ok
    assert set(basis.witness_edges) == set(range(6)) - tree


def test_fundamental_basis_of_any_tree_spans():
    for seed in range(30):
        g = gen_random_biconnected(10, 17, seed).graph
        tree = next(tk.spanning_trees(g))
        basis = fundamental_basis(g, tree)
        assert len(basis) == g.m - g.n + 1
        assert gf2_rank([c.edge_ids for c in basis]) == len(basis)
        for c, w in zip(basis, basis.witness_edges):
            assert c.edge_ids == tk.fundamental_cycles(g, tree)[w]


def test_no_tree_when_a_side_must_hold_a_cycle():
    # K5: some side gets three mutually adjacent vertices
    k5 = build_graph(5, [(a, b) for a in range(5) for b in range(a + 1, 5)])
    assert find_fundamental_rooted_tree(RootedGraph(k5, 0)) is None
    assert tk.brute_fundamental_search(RootedGraph(k5, 0)) is None


def test_partition_matches_brute_force_on_atlas():
    for n, edges in atlas_graphs(3, 6, biconnected=True):
        g = build_graph(n, edges)
        for r in range(g.m):
            rg = RootedGraph(g, r)
            tree = find_fundamental_rooted_tree(rg)
            assert (tree is None) == (tk.brute_fundamental_search(rg) is None)
            if tree is not None:
                assert is_fundamental_rooted(rg, tree)


def test_search_limit():
    rg = gen_random_biconnected(30, 60, 3)
    with pytest.raises(SearchLimitExceeded):
        find_tree_partition(rg, limit=5)


# -- embeddings and duals -------------------------------------------------------


def test_triangle_dual_is_three_parallel_edges():
    t = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    d = dual_graph(embedding_from_coordinates(t, [(0, 0), (1, 0), (0, 1)]))
    assert d.graph.n == 2 and d.graph.m == 3
    assert all({u, v} == {0, 1} for u, v, _ in d.graph.edges)


def test_single_edge_dual_is_a_loop():
    g = build_graph(2, [(0, 1)])
    d = dual_graph(PlaneEmbedding(g, ((0,), (0,))))
    assert d.graph.n == 1 and d.graph.m == 1 and d.graph.is_loop(0)


def test_grid_dual():
    d = dual_graph(plane_grid(3, 3))
    assert d.graph.n == 5 and d.graph.m == 12


def test_double_dual_has_primal_shape():
    for name, pe in plane_catalogue().items():
        d = dual_graph(pe)
        dd = dual_graph(d.embedding)
        assert (dd.graph.n, dd.graph.m) == (pe.graph.n, pe.graph.m), name


def test_bad_embeddings_rejected():
    k4 = build_graph(4, K4_EDGES)
    with pytest.raises(InvalidEmbedding):
        PlaneEmbedding(k4, ((0, 1, 4), (0, 2, 3), (1, 2, 5)))
    with pytest.raises(InvalidEmbedding):
        PlaneEmbedding(k4, ((0, 1, 4), (0, 2, 3), (1, 2, 5), (3, 5)))
    # adjacency order gives two faces (a torus); flipping vertex 1 makes it plane
    with pytest.raises(InvalidEmbedding, match="Euler"):
        PlaneEmbedding(k4, ((0, 1, 4), (0, 2, 3), (1, 2, 5), (3, 4, 5)))
    assert len(PlaneEmbedding(k4, ((0, 1, 4), (0, 3, 2), (1, 2, 5), (3, 4, 5))).faces()) == 4


def test_tree_cotree_duality():
    rng = random.Random(1)
    for name, pe in plane_catalogue().items():
        g = pe.graph
        d = dual_graph(pe).graph
        trees = list(islice(tk.spanning_trees(g), 200))
        for tree in rng.sample(trees, min(10, len(trees))):
            cotree = set(range(g.m)) - set(tree)
            assert is_spanning_tree(d, cotree), name


def test_fundamental_iff_dual_hamiltonian_on_catalogue():
    """A plane graph has a fundamental rooted basis iff the dual has a Hamiltonian cycle through the root."""
    yes = no = 0
    for name, pe in plane_catalogue().items():
        d = dual_graph(pe).graph
        for r in range(pe.graph.m):
            fund = find_fundamental_rooted_tree(RootedGraph(pe.graph, r)) is not None
            ham = has_rooted_hamiltonian(RootedGraph(d, r))
            assert fund == ham, (name, r)
            yes += fund
            no += not fund
    assert yes and no


# -- Hamiltonian cycles ---------------------------------------------------------


def test_hamiltonian_examples():
    c5 = build_graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert has_rooted_hamiltonian(RootedGraph(c5, 2))
    star = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    assert not has_rooted_hamiltonian(RootedGraph(star, 3))
    assert has_rooted_hamiltonian(RootedGraph(build_graph(2, [(0, 1), (0, 1)]), 0))
    assert not has_rooted_hamiltonian(RootedGraph(build_graph(2, [(0, 1)]), 0))


def test_hamiltonian_matches_brute_force():
    for n, edges in atlas_graphs(3, 7, biconnected=True):
        g = build_graph(n, edges)
        for r in range(g.m):
            rg = RootedGraph(g, r)
            assert has_rooted_hamiltonian(rg) == tk.brute_rooted_hamiltonian(rg)


def test_hamiltonian_limit():
    g = build_graph(10, PETERSEN)
    with pytest.raises(SearchLimitExceeded):
        has_rooted_hamiltonian(RootedGraph(g, 0), limit=3)


# -- forced-edge gadget -------------------------------------------------------------


def _hamiltonian(g):
    return any(has_rooted_hamiltonian(RootedGraph(g, e)) for e in range(g.m))


@pytest.mark.parametrize("edges, n, v", [
    (K4_EDGES, 4, 0),
    (K4_EDGES, 4, 3),
    ([(i, (i + 1) % 4) for i in range(4)] + [(4 + i, 4 + (i + 1) % 4) for i in range(4)]
     + [(i, 4 + i) for i in range(4)], 8, 5),
    (PETERSEN, 10, 0),
])
def test_gadget_forces_its_edge(edges, n, v):
    g = build_graph(n, edges)
    h, forced = forced_edge_gadget(g, v)
    assert h.n == n + 3 and h.m == g.m + 6
    assert has_rooted_hamiltonian(RootedGraph(h, forced)) == _hamiltonian(g)


def test_petersen_is_not_hamiltonian():
    assert not _hamiltonian(build_graph(10, PETERSEN))


def test_gadget_needs_degree_three():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(WrongDegree):
        forced_edge_gadget(g, 0)


def test_cube_catalogue_entry():
    pe = plane_prism(4)
    assert (pe.graph.n, pe.graph.m, len(pe.faces())) == (8, 12, 6)
