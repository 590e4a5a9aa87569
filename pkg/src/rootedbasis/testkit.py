"""Brute-force oracles for desk-scale graphs.

These avoid the main algorithms on purpose: no Dijkstra, no split graphs,
no ear decompositions, and their own GF(2) elimination.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import CapExceeded, NoRootedBasis
from .graph import Cycle, CycleBasis, Graph, RootedGraph


def enumerate_rooted_cycles(rg: RootedGraph, max_cycles: int = 200_000,
                            max_length: int | None = None) -> list[Cycle]:
    """Every simple cycle through the root edge, by backtracking t1 -> t2."""
    g = rg.graph
    t1, t2, root = rg.t1, rg.t2, rg.root_edge
    out: list[Cycle] = []
    on_path = [False] * g.n
    on_path[t1] = True
    path: list[int] = []

    def go(v: int):
        for e, w in g.adjacency[v]:
            if e == root or on_path[w] or w == v:
                continue
            if max_length is not None and len(path) + 2 > max_length:
                continue
            path.append(e)
            if w == t2:
                if len(out) >= max_cycles:
                    raise CapExceeded(f"more than {max_cycles} rooted cycles")
                out.append(Cycle.from_edges(g, [root, *path]))
            else:
                on_path[w] = True
                go(w)
                on_path[w] = False
            path.pop()

    go(t1)
    return out


def count_rooted_cycles(rg: RootedGraph) -> int:
    """Number of rooted cycles via a memoized count over visited-vertex sets."""
    g = rg.graph
    if g.n > 20:
        raise CapExceeded("subset counting is limited to 20 vertices")
    t1, t2, root = rg.t1, rg.t2, rg.root_edge
    mult: dict[tuple[int, int], int] = {}
    for e, (u, v, _) in enumerate(g.edges):
        if e == root or u == v:
            continue
        mult[(u, v)] = mult.get((u, v), 0) + 1
        mult[(v, u)] = mult.get((v, u), 0) + 1
    nbrs = {}
    for (u, v), k in mult.items():
        nbrs.setdefault(u, []).append((v, k))

    @lru_cache(maxsize=None)
    def paths_from(v: int, used: int) -> int:
        if v == t2:
            return 1
        total = 0
        for w, k in nbrs.get(v, ()):
            if not used >> w & 1:
                total += k * paths_from(w, used | 1 << w)
        return total

    return paths_from(t1, 1 << t1)


def perturbation(edge_ids, order=None) -> Fraction:
    """Exact sum of ``1 / 2**(rank+1)`` over the edges; rank defaults to the id."""
    if order is None:
        return sum((Fraction(1, 2 ** (e + 1)) for e in edge_ids), Fraction(0))
    rank = {e: i for i, e in enumerate(order)}
    return sum((Fraction(1, 2 ** (rank[e] + 1)) for e in edge_ids), Fraction(0))


class _Eliminator:
    """GF(2) row reduction with pivots on the lowest set bit (frozenset rows)."""

    def __init__(self):
        self.rows: dict[int, frozenset] = {}

    def insert(self, s) -> bool:
        s = frozenset(s)
        while s:
            p = min(s)
            row = self.rows.get(p)
            if row is None:
                self.rows[p] = s
                return True
            s = s ^ row
        return False


def rank_of(edge_sets) -> int:
    el = _Eliminator()
    return sum(1 for s in edge_sets if el.insert(s))


def independent_by_subsets(edge_sets) -> bool:
    """Independence by checking that no nonempty subset XORs to zero."""
    sets = [frozenset(s) for s in edge_sets]
    for r in range(1, len(sets) + 1):
        for combo in combinations(sets, r):
            acc = frozenset()
            for s in combo:
                acc = acc ^ s
            if not acc:
                return False
    return True


def component_dimension(rg: RootedGraph) -> int:
    """Cycle-space dimension of the root component, by a plain flood fill."""
    g = rg.graph
    seen = {rg.t1}
    todo = [rg.t1]
    while todo:
        x = todo.pop()
        for _, y in g.adjacency[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    m = sum(1 for u, _, _ in g.edges if u in seen)
    return m - len(seen) + 1


def total_dimension(g: Graph) -> int:
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = g.n
    for u, v, _ in g.edges:
        a, b = find(u), find(v)
        if a != b:
            parent[a] = b
            comps -= 1
    return g.m - g.n + comps


def rooted_basis_exists(rg: RootedGraph, max_cycles: int = 200_000) -> bool:
    """Definitional check: the rooted cycles reach the full cycle-space dimension."""
    cycles = enumerate_rooted_cycles(rg, max_cycles)
    return rank_of(c.edge_ids for c in cycles) == total_dimension(rg.graph)


def sorted_rooted_cycles(rg: RootedGraph, order=None, max_cycles: int = 200_000) -> list[Cycle]:
    cycles = enumerate_rooted_cycles(rg, max_cycles)
    return sorted(cycles, key=lambda c: (c.weight, perturbation(c.edge_ids, order)))


def brute_min_rooted_basis(rg: RootedGraph, order=None, max_cycles: int = 200_000) -> CycleBasis:
    """Matroid greedy over all rooted cycles sorted by (weight, exact perturbation)."""
    dim = total_dimension(rg.graph)
    el = _Eliminator()
    chosen = []
    for c in sorted_rooted_cycles(rg, order, max_cycles):
        if el.insert(c.edge_ids):
            chosen.append(c)
            if len(chosen) == dim:
                break
    if len(chosen) < dim:
        raise NoRootedBasis(f"rooted cycles span rank {len(chosen)} < {dim}")
    return CycleBasis(tuple(chosen))


def brute_shortest_rooted_cycle(rg: RootedGraph, f: int, order=None, cycles=None) -> Cycle | None:
    """Lightest rooted cycle through ``f`` under exact perturbation, or None."""
    if cycles is None:
        cycles = enumerate_rooted_cycles(rg)
    through = [c for c in cycles if f in c.edge_ids]
    if not through:
        return None
    return min(through, key=lambda c: (c.weight, perturbation(c.edge_ids, order)))


def brute_disjoint_pair_weight(g: Graph, s: int, t1: int, t2: int) -> int | None:
    """Minimum total weight of vertex-disjoint s->t1 and s->t2 paths (all simple paths tried)."""
    def simple_paths(a, b, banned):
        out = []

        def go(v, seen, w):
            if v == b:
                out.append((w, frozenset(seen)))
                return
            for e, x in g.adjacency[v]:
                if x in seen or x in banned:
                    continue
                seen.add(x)
                go(x, seen, w + g.weight(e))
                seen.discard(x)

        go(a, {a}, 0)
        return out

    best = None
    first = simple_paths(s, t1, {t2})
    second = simple_paths(s, t2, {t1})
    for w1, v1 in first:
        for w2, v2 in second:
            if v1 & v2 == {s} and (best is None or w1 + w2 < best):
                best = w1 + w2
    return best


def spanning_trees(g: Graph, must_contain: int | None = None, max_trees: int = 2_000_000):
    """Yield spanning trees (sorted edge-id tuples) by trying all (n-1)-subsets."""
    count = 0
    for combo in combinations(range(g.m), g.n - 1):
        if must_contain is not None and must_contain not in combo:
            continue
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ok = True
        for e in combo:
            u, v = g.endpoints(e)
            a, b = find(u), find(v)
            if a == b:
                ok = False
                break
            parent[a] = b
        if ok:
            count += 1
            if count > max_trees:
                raise CapExceeded(f"more than {max_trees} spanning trees")
            yield combo


def tree_path(g: Graph, tree, a: int, b: int) -> list[int]:
    """Edge ids of the path from ``a`` to ``b`` inside ``tree`` (breadth-first)."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in tree:
        u, v = g.endpoints(e)
        adj.setdefault(u, []).append((e, v))
        adj.setdefault(v, []).append((e, u))
    back = {a: None}
    frontier = [a]
    while frontier and b not in back:
        nxt = []
        for x in frontier:
            for e, y in adj.get(x, ()):
                if y not in back:
                    back[y] = (e, x)
                    nxt.append(y)
        frontier = nxt
    path = []
    x = b
    while back[x] is not None:
        e, x = back[x]
        path.append(e)
    return path


def fundamental_cycles(g: Graph, tree) -> dict[int, frozenset[int]]:
    tree = set(tree)
    out = {}
    for f in range(g.m):
        if f in tree:
            continue
        u, v = g.endpoints(f)
        out[f] = frozenset([f, *tree_path(g, tree, u, v)])
    return out


def brute_fundamental_search(rg: RootedGraph, max_trees: int = 2_000_000):
    """First spanning tree containing the root whose fundamental cycles are all rooted."""
    g = rg.graph
    for tree in spanning_trees(g, rg.root_edge, max_trees):
        if all(rg.root_edge in c for c in fundamental_cycles(g, tree).values()):
            return frozenset(tree)
    return None


def brute_rooted_hamiltonian(rg: RootedGraph) -> bool:
    """Try every ordering of the other vertices between the root endpoints."""
    from itertools import permutations

    g = rg.graph
    t1, t2 = rg.t1, rg.t2
    links = set()
    for e, (u, v, _) in enumerate(g.edges):
        if e != rg.root_edge and u != v:
            links.add((u, v))
            links.add((v, u))
    rest = [v for v in range(g.n) if v not in (t1, t2)]
    for perm in permutations(rest):
        seq = [t2, *perm, t1]
        if all((a, b) in links for a, b in zip(seq, seq[1:])):
            return True
    return False
