"""Fundamental rooted cycle bases, plane duals and rooted Hamiltonian cycles.

A rooted graph has a fundamental rooted basis exactly when its vertices split
into two sides, one per root endpoint, each inducing a tree.  The spanning
tree is then both induced trees plus the root edge.  Deciding this is hard in
general, so the search is exact but capped.

For plane graphs the question is dual to finding a Hamiltonian cycle through
the dual root edge; the embedding, dual and Hamiltonian search here exist to
cross-check the partition search on that correspondence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (GraphError, InvalidEmbedding, NotASpanningTree, RootNotInTree,
                     SearchLimitExceeded, WrongDegree)
from .graph import Cycle, CycleBasis, Graph, RootedGraph, build_graph

DEFAULT_LIMIT = 1_000_000

Dart = tuple[int, int]  # (edge id, 0 = leaves the first endpoint, 1 = leaves the second)


# ---------------------------------------------------------------------------
# embeddings and duals


@dataclass(frozen=True)
class PlaneEmbedding:
    """Rotation system: for each vertex, its incident edge ids in cyclic order.

    A self-loop appears twice in its vertex's list; the first occurrence is
    the dart leaving through the loop's first end.
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = self.graph
        if len(self.rotation) != g.n:
            raise InvalidEmbedding(f"rotation lists {len(self.rotation)} vertices, graph has {g.n}")
        for v in range(g.n):
            want = sorted(e for e, _ in g.adjacency[v])
            if sorted(self.rotation[v]) != want:
                raise InvalidEmbedding(f"rotation at vertex {v} does not list its incident edges")
        faces = self.faces()
        comps = max(g.components(), default=-1) + 1
        if comps != 1:
            raise InvalidEmbedding("embedded graph must be connected")
        if g.n - g.m + len(faces) != 2:
            raise InvalidEmbedding(f"Euler check failed: n - m + f = {g.n - g.m + len(faces)}, not 2")

    def darts_at(self, v: int) -> list[Dart]:
        g = self.graph
        out = []
        seen_loop: set[int] = set()
        for e in self.rotation[v]:
            u, w, _ = g.edges[e]
            if u == w:
                out.append((e, 1 if e in seen_loop else 0))
                seen_loop.add(e)
            else:
                out.append((e, 0 if u == v else 1))
        return out

    def tail(self, d: Dart) -> int:
        u, v, _ = self.graph.edges[d[0]]
        return u if d[1] == 0 else v

    def _successor(self) -> dict[Dart, Dart]:
        succ = {}
        for v in range(self.graph.n):
            ds = self.darts_at(v)
            for i, d in enumerate(ds):
                succ[d] = ds[(i + 1) % len(ds)]
        return succ

    def faces(self) -> list[list[Dart]]:
        """Orbits of ``d -> next dart after reverse(d)`` around its head."""
        succ = self._successor()
        seen: set[Dart] = set()
        faces = []
        for start in sorted(succ):
            if start in seen:
                continue
            face = []
            d = start
            while d not in seen:
                seen.add(d)
                face.append(d)
                d = succ[(d[0], 1 - d[1])]
            faces.append(face)
        return faces


def embedding_from_coordinates(g: Graph, coords: Sequence[tuple[float, float]]) -> PlaneEmbedding:
    """Rotation system of a straight-line drawing (edges sorted by angle)."""
    rotation = []
    for v in range(g.n):
        x0, y0 = coords[v]

        def angle(item):
            e, w = item
            x1, y1 = coords[w]
            return math.atan2(y1 - y0, x1 - x0)

        rotation.append(tuple(e for e, _ in sorted(g.adjacency[v], key=angle)))
    return PlaneEmbedding(g, tuple(rotation))


@dataclass(frozen=True)
class DualGraph:
    """Dual multigraph; dual edge ``i`` crosses primal edge ``i``."""

    graph: Graph
    embedding: PlaneEmbedding
    faces: tuple[tuple[Dart, ...], ...]  # dual vertex -> primal face darts

    def edge_map(self) -> dict[int, int]:
        return {e: e for e in range(self.graph.m)}


def dual_graph(pe: PlaneEmbedding) -> DualGraph:
    """One vertex per face, one edge per primal edge joining the faces on its sides."""
    g = pe.graph
    faces = pe.faces()
    face_of: dict[Dart, int] = {}
    for i, face in enumerate(faces):
        for d in face:
            face_of[d] = i
    edges = [(face_of[(e, 0)], face_of[(e, 1)], g.weight(e)) for e in range(g.m)]
    dual = build_graph(len(faces), edges)
    # the dual rotation lists each face's edges in traversal order; a primal
    # dart (e, s) becomes the dual dart leaving face_of[(e, s)], which matches
    # the loop convention when both sides of e are the same face
    rotation = tuple(tuple(d[0] for d in face) for face in faces)
    emb = PlaneEmbedding(dual, rotation)
    return DualGraph(dual, emb, tuple(tuple(f) for f in faces))


# ---------------------------------------------------------------------------
# fundamental rooted trees


@dataclass(frozen=True)
class TreePartition:
    side1: frozenset[int]  # contains the first root endpoint
    side2: frozenset[int]


@dataclass(frozen=True)
class FundamentalCheck:
    ok: bool
    witness: int | None = None  # a non-tree edge whose fundamental cycle avoids the root

    def __bool__(self) -> bool:
        return self.ok


def _check_spanning_tree(g: Graph, tree) -> set[int]:
    tree = set(tree)
    if any(not 0 <= e < g.m for e in tree):
        raise NotASpanningTree("tree edge id out of range")
    if len(tree) != g.n - 1:
        raise NotASpanningTree(f"{len(tree)} edges, a spanning tree needs {g.n - 1}")
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in tree:
        a, b = (find(x) for x in g.endpoints(e))
        if a == b:
            raise NotASpanningTree(f"edge {e} closes a cycle")
        parent[a] = b
    return tree


def is_fundamental_rooted(rg: RootedGraph, tree) -> FundamentalCheck:
    """Do all fundamental cycles of ``tree`` pass through the root edge?

    Removing the root from the tree leaves two sides; a non-tree edge's
    fundamental cycle uses the root iff its ends lie on different sides.
    """
    g = rg.graph
    tree = _check_spanning_tree(g, tree)
    if rg.root_edge not in tree:
        raise RootNotInTree(f"root edge {rg.root_edge} is not in the tree")
    side = [-1] * g.n
    adj: dict[int, list[int]] = {}
    for e in tree:
        if e == rg.root_edge:
            continue
        u, v = g.endpoints(e)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for label, start in enumerate((rg.t1, rg.t2)):
        side[start] = label
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj.get(x, ()):
                if side[y] == -1:
                    side[y] = label
                    stack.append(y)
    for f in range(g.m):
        if f in tree:
            continue
        u, v = g.endpoints(f)
        if side[u] == side[v]:
            return FundamentalCheck(False, f)
    return FundamentalCheck(True)


def find_tree_partition(rg: RootedGraph, limit: int = DEFAULT_LIMIT) -> TreePartition | None:
    """Two-colour the vertices so each colour class induces a tree.

    Branch on vertices by decreasing degree; prune a colour as soon as it
    closes a cycle, or when its assigned vertices can no longer be joined
    through unassigned ones.  Raises SearchLimitExceeded after ``limit``
    branch nodes.
    """
    g = rg.graph
    n = g.n
    if any(g.is_loop(e) for e in range(g.m)):
        return None
    if max(g.components(), default=0) != 0:
        return None
    t1, t2 = rg.t1, rg.t2
    color = [-1] * n
    color[t1], color[t2] = 0, 1
    order = sorted((v for v in range(n) if v not in (t1, t2)), key=lambda v: (-g.degree(v), v))
    # union-find per colour, copied on the way down (desk scale)
    comp = list(range(n))
    nodes = 0

    def find(c, x):
        while c[x] != x:
            x = c[x]
        return x

    def joinable(col: int) -> bool:
        members = [v for v in range(n) if color[v] == col]
        seen = {members[0]}
        stack = [members[0]]
        while stack:
            x = stack.pop()
            for _, y in g.adjacency[x]:
                if y not in seen and color[y] in (col, -1):
                    seen.add(y)
                    stack.append(y)
        return all(v in seen for v in members)

    def place(v: int, col: int, c: list[int]) -> list[int] | None:
        c = c[:]
        for _, w in g.adjacency[v]:
            if color[w] != col:
                continue
            a, b = find(c, v), find(c, w)
            if a == b:
                return None
            c[a] = b
        return c

    def search(i: int, c: list[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise SearchLimitExceeded(f"partition search exceeded {limit} nodes")
        if i == len(order):
            return joinable(0) and joinable(1)
        v = order[i]
        for col in (0, 1):
            c2 = place(v, col, c)
            if c2 is None:
                continue
            color[v] = col
            if joinable(0) and joinable(1) and search(i + 1, c2):
                return True
            color[v] = -1
        return False

    # the root edge joins different colours, so it never closes a same-colour cycle
    if not search(0, comp):
        return None
    return TreePartition(frozenset(v for v in range(n) if color[v] == 0),
                         frozenset(v for v in range(n) if color[v] == 1))


def tree_from_partition(rg: RootedGraph, part: TreePartition) -> frozenset[int]:
    g = rg.graph
    inside = [e for e, (u, v, _) in enumerate(g.edges)
              if (u in part.side1 and v in part.side1) or (u in part.side2 and v in part.side2)]
    return frozenset([*inside, rg.root_edge])


def find_fundamental_rooted_tree(rg: RootedGraph, limit: int = DEFAULT_LIMIT) -> frozenset[int] | None:
    """Spanning tree whose fundamental cycles all contain the root, or None."""
    part = find_tree_partition(rg, limit)
    if part is None:
        return None
    return tree_from_partition(rg, part)


def fundamental_basis(g: Graph, tree) -> CycleBasis:
    """Fundamental cycles of a spanning tree, one per non-tree edge in id order.

    Each cycle's witness is its non-tree edge, which no other cycle uses.
    """
    tree = _check_spanning_tree(g, tree)
    parent = [-1] * g.n  # tree edge towards vertex 0
    depth = [0] * g.n
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    while stack:
        x = stack.pop()
        for e, y in g.adjacency[x]:
            if e in tree and not seen[y]:
                seen[y] = True
                parent[y] = e
                depth[y] = depth[x] + 1
                stack.append(y)
    cycles, witnesses = [], []
    for f in range(g.m):
        if f in tree:
            continue
        u, v = g.endpoints(f)
        ids = {f}
        while u != v:
            if depth[u] < depth[v]:
                u, v = v, u
            e = parent[u]
            ids.add(e)
            u = g.other(e, u)
        cycles.append(Cycle.from_edges(g, ids))
        witnesses.append(f)
    return CycleBasis(tuple(cycles), tuple(witnesses))


# ---------------------------------------------------------------------------
# rooted Hamiltonian cycles


def has_rooted_hamiltonian(rg: RootedGraph, limit: int = DEFAULT_LIMIT) -> bool:
    """Is there a Hamiltonian cycle using the root edge?

    Extends a path from ``t2`` until it reaches ``t1`` last.  Prunes on
    vertices left with fewer than two usable neighbours and on unvisited
    vertices cut off from ``t1``.
    """
    g = rg.graph
    n = g.n
    t1, t2, root = rg.t1, rg.t2, rg.root_edge
    nbrs = [sorted({w for e, w in g.adjacency[v] if e != root and w != v}) for v in range(n)]
    if n == 2:
        return any(e != root and not g.is_loop(e) for e, _ in g.adjacency[t1])
    if any(len(nbrs[v]) < (1 if v in (t1, t2) else 2) for v in range(n)):
        return False
    visited = [False] * n
    visited[t2] = True
    nodes = 0

    def hopeless(cur: int, left: int) -> bool:
        # every unvisited vertex (and t1) needs two neighbours among unvisited, t1 or cur
        for v in range(n):
            if visited[v]:
                continue
            free = sum(1 for w in nbrs[v] if not visited[w] or w == cur)
            if free < (1 if v == t1 else 2):
                return True
        # unvisited vertices must all reach t1 without the visited ones
        seen = {t1}
        stack = [t1]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if not visited[y] and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) != left

    def go(cur: int, left: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise SearchLimitExceeded(f"Hamiltonian search exceeded {limit} nodes")
        if left == 1:
            return t1 in nbrs[cur]
        if hopeless(cur, left):
            return False
        for w in nbrs[cur]:
            if visited[w] or w == t1:
                continue
            visited[w] = True
            if go(w, left - 1):
                return True
            visited[w] = False
        return False

    return go(t2, n - 1)


def forced_edge_gadget(g: Graph, v: int) -> tuple[Graph, int]:
    """Replace degree-3 vertex ``v`` by a K4 that any Hamiltonian cycle must cross via one edge.

    The K4 is on ``x1 = v`` and new vertices ``x2, x3, y``.  The three edges
    that met ``v`` now attach to ``x1, x2, x3`` in adjacency order, and ``y``
    is internal.  A Hamiltonian path through the K4 between any two of the
    attachment vertices can be chosen to use ``y-x3``, and one must exist for
    the cycle to pass, so the original graph is Hamiltonian iff the new graph
    has a Hamiltonian cycle through ``y-x3`` (the returned edge id).
    """
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    if g.degree(v) != 3 or any(w == v for _, w in g.adjacency[v]):
        raise WrongDegree(f"vertex {v} has degree {g.degree(v)} (or a self-loop); the gadget needs 3")
    x1, x2, x3, y = v, g.n, g.n + 1, g.n + 2
    attach = {e: x for (e, _), x in zip(g.adjacency[v], (x1, x2, x3))}
    edges = []
    for e, (a, b, w) in enumerate(g.edges):
        if e in attach:
            other = b if a == v else a
            edges.append((other, attach[e], w))
        else:
            edges.append((a, b, w))
    edges += [(x1, x2, 1), (x2, x3, 1), (x3, x1, 1), (y, x1, 1), (y, x2, 1), (y, x3, 1)]
    return build_graph(g.n + 3, edges), len(edges) - 1


# ---------------------------------------------------------------------------
# catalogue of plane graphs with straight-line drawings


def embedding_from_neighbour_order(g: Graph, order: Sequence[Sequence[int]]) -> PlaneEmbedding:
    """Rotation system of a simple graph given as cyclic neighbour lists."""
    rotation = []
    for v in range(g.n):
        by_nbr = {w: e for e, w in g.adjacency[v]}
        if len(by_nbr) != g.degree(v):
            raise InvalidEmbedding("neighbour orders need a simple graph")
        rotation.append(tuple(by_nbr[w] for w in order[v]))
    return PlaneEmbedding(g, tuple(rotation))


def _from_orders(order: Sequence[Sequence[int]]) -> PlaneEmbedding:
    edges = sorted({(min(v, w), max(v, w)) for v, ws in enumerate(order) for w in ws})
    return embedding_from_neighbour_order(build_graph(len(order), edges), order)


def _circle(k: int, r: float = 1.0, phase: float = 0.0):
    return [(r * math.cos(2 * math.pi * i / k + phase), r * math.sin(2 * math.pi * i / k + phase))
            for i in range(k)]


def plane_wheel(rim: int) -> PlaneEmbedding:
    """Hub ``0`` joined to a rim cycle ``1..rim``."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return embedding_from_coordinates(build_graph(rim + 1, edges), [(0.0, 0.0), *_circle(rim)])


def plane_prism(k: int) -> PlaneEmbedding:
    """Two concentric ``k``-cycles joined by spokes (``k = 4`` is the cube)."""
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return embedding_from_coordinates(build_graph(2 * k, edges), _circle(k, 1.0) + _circle(k, 2.0))


def plane_grid(rows: int, cols: int) -> PlaneEmbedding:
    """``rows x cols`` grid of vertices."""
    def vid(r, c):
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    coords = [(float(c), float(r)) for r in range(rows) for c in range(cols)]
    return embedding_from_coordinates(build_graph(rows * cols, edges), coords)


def plane_catalogue() -> dict[str, PlaneEmbedding]:
    """Small plane graphs used for the duality cross-check."""
    return {
        "W4": plane_wheel(4),
        "W5": plane_wheel(5),
        "W6": plane_wheel(6),
        "prism3": plane_prism(3),
        "cube": plane_prism(4),
        "grid2x3": plane_grid(2, 3),
        "grid3x3": plane_grid(3, 3),
        # these three have roots with no fundamental rooted basis
        "kite5": _from_orders([[1, 4], [0, 2, 3, 4], [1, 3], [2, 4, 1], [3, 0, 1]]),
        "fan6": _from_orders([[1, 5, 4, 2], [0, 2, 3, 4], [1, 0], [1, 4], [3, 0, 5, 1], [4, 0]]),
        "poly7": _from_orders([[1, 5, 6], [0, 3, 4], [5, 4, 3, 6], [1, 6, 2, 4], [2, 5, 1, 3],
                               [6, 0, 4, 2], [3, 0, 5, 2]]),
    }
