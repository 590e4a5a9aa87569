"""2-core peeling, open ear decompositions and vertex-disjoint paths to the root."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotBiconnected
from .graph import Graph, build_graph


@dataclass(frozen=True)
class Subgraph:
    """A subgraph with id maps back to its parent graph."""

    graph: Graph
    vertex_map: tuple[int, ...]  # new vertex -> parent vertex
    edge_map: tuple[int, ...]  # new edge -> parent edge

    def vertex_index(self) -> dict[int, int]:
        return {old: new for new, old in enumerate(self.vertex_map)}

    def edge_index(self) -> dict[int, int]:
        return {old: new for new, old in enumerate(self.edge_map)}


def edge_subgraph(g: Graph, edge_ids, vertices=None) -> Subgraph:
    """Subgraph on ``edge_ids`` (in increasing id order) and their endpoints.

    Extra ``vertices`` are kept even if isolated.
    """
    edge_ids = sorted(set(edge_ids))
    keep = set(vertices or ())
    for e in edge_ids:
        keep.update(g.endpoints(e))
    vmap = tuple(sorted(keep))
    index = {old: new for new, old in enumerate(vmap)}
    sub = build_graph(len(vmap), [(index[g.edges[e][0]], index[g.edges[e][1]], g.edges[e][2])
                                  for e in edge_ids])
    return Subgraph(sub, vmap, tuple(edge_ids))


def two_core(g: Graph) -> Subgraph:
    """Iteratively peel vertices of degree at most one."""
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    queue = [v for v in range(g.n) if deg[v] <= 1]
    for v in queue:
        removed[v] = True
    while queue:
        v = queue.pop()
        for _, w in g.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
                if deg[w] <= 1:
                    removed[w] = True
                    queue.append(w)
    kept_vertices = [v for v in range(g.n) if not removed[v]]
    kept_edges = [e for e, (u, v, _) in enumerate(g.edges) if not removed[u] and not removed[v]]
    return edge_subgraph(g, kept_edges, kept_vertices)


@dataclass(frozen=True)
class Ear:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def trivial(self) -> bool:
        """One-edge ear: no interior vertex, never used by path construction."""
        return len(self.edges) == 1


@dataclass(frozen=True)
class EarDecomposition:
    graph: Graph
    ears: tuple[Ear, ...]
    ear_of_vertex: tuple[int, ...]
    ear_of_edge: tuple[int, ...]
    position: tuple[int, ...]  # index of each vertex inside the ear that introduced it

    @property
    def root_edge(self) -> int:
        return self.ears[0].edges[0]

    @property
    def root_endpoints(self) -> tuple[int, int]:
        return self.ears[0].endpoints

    def __len__(self) -> int:
        return len(self.ears)


def _dfs(g: Graph, root: int, first_edge: int):
    """Iterative DFS from ``root`` taking ``first_edge`` first.

    Returns preorder, discovery times, low points, parent edges, and for each
    vertex the back edges running down to its descendants.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent_edge = [-1] * n
    down_back: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    order = [root]
    disc[root] = 0
    root_adj = sorted(g.adjacency[root], key=lambda ew: ew[0] != first_edge)
    stack = [(root, iter(root_adj))]
    t = 1
    root_children = 0
    while stack:
        v, it = stack[-1]
        advanced = False
        for e, w in it:
            if e == parent_edge[v]:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = t
                t += 1
                parent_edge[w] = e
                order.append(w)
                if v == root:
                    root_children += 1
                stack.append((w, iter(g.adjacency[w])))
                advanced = True
                break
            if disc[w] < disc[v]:
                down_back[w].append((e, v))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
    return order, disc, low, parent_edge, down_back, root_children


def find_cut_vertex(g: Graph, start: int = 0) -> int | None:
    """Return some articulation point of the component of ``start``, or None."""
    if g.n == 0:
        return None
    first = g.adjacency[start][0][0] if g.adjacency[start] else -1
    order, disc, low, parent_edge, _, root_children = _dfs(g, start, first)
    if root_children > 1:
        return start
    for w in order[1:]:
        p = g.other(parent_edge[w], w)
        if p != start and low[w] >= disc[p]:
            return p
    return None


def is_biconnected(g: Graph) -> bool:
    """2-vertex-connected in the ear-decomposition sense (loops disqualify)."""
    if g.n < 2 or g.m == 0:
        return False
    try:
        first = next(e for e in range(g.m) if not g.is_loop(e))
    except StopIteration:
        return False
    try:
        open_ear_decomposition(g, first)
    except NotBiconnected:
        return False
    return True


def open_ear_decomposition(g: Graph, first_edge: int) -> EarDecomposition:
    """Open ear decomposition whose first ear is ``first_edge``.

    Built from chain decomposition of a DFS tree rooted at one endpoint of
    ``first_edge`` with that edge as the first tree edge.
    """
    if not 0 <= first_edge < g.m:
        raise ValueError(f"first edge {first_edge} out of range")
    if g.is_loop(first_edge):
        raise ValueError(f"first edge {first_edge} is a self-loop")
    for e in range(g.m):
        if g.is_loop(e):
            raise NotBiconnected(f"self-loop {e} cannot lie on an open ear", self_loop=e)
    t1, t2 = g.endpoints(first_edge)
    order, disc, low, parent_edge, down_back, root_children = _dfs(g, t1, first_edge)
    for v in range(g.n):
        if disc[v] == -1:
            raise NotBiconnected(f"graph is disconnected: vertex {v} unreachable from {t1}",
                                 unreached_vertex=v)
    if root_children > 1:
        raise NotBiconnected(f"vertex {t1} is a cut vertex", cut_vertex=t1)
    for w in order[1:]:
        p = g.other(parent_edge[w], w)
        if p != t1 and low[w] >= disc[p]:
            raise NotBiconnected(f"vertex {p} is a cut vertex", cut_vertex=p)

    n = g.n
    visited = [False] * n
    ears: list[Ear] = [Ear((t1, t2), (first_edge,))]
    ear_of_vertex = [-1] * n
    position = [-1] * n
    ear_of_vertex[t1] = ear_of_vertex[t2] = 0
    position[t1], position[t2] = 0, 1
    ear_of_edge = [-1] * g.m
    ear_of_edge[first_edge] = 0
    for w in order:
        for e, v in down_back[w]:
            visited[w] = True
            verts = [w, v]
            edges = [e]
            x = v
            while not visited[x]:
                visited[x] = True
                pe = parent_edge[x]
                x = g.other(pe, x)
                edges.append(pe)
                verts.append(x)
            if len(ears) == 1:
                # first chain closes through the root edge; cut it off
                assert edges[-1] == first_edge and verts[0] == t1
                edges.pop()
                verts.pop()
            k = len(ears)
            for i, y in enumerate(verts[1:-1], start=1):
                ear_of_vertex[y] = k
                position[y] = i
            for f in edges:
                ear_of_edge[f] = k
            ears.append(Ear(tuple(verts), tuple(edges)))
    for f in range(g.m):
        if ear_of_edge[f] == -1:
            raise NotBiconnected(f"edge {f} is a bridge", bridge=f)
    for ear in ears[1:]:
        a, b = ear.endpoints
        if a == b:
            raise NotBiconnected(f"vertex {a} is a cut vertex", cut_vertex=a)
    return EarDecomposition(g, tuple(ears), tuple(ear_of_vertex), tuple(ear_of_edge),
                            tuple(position))


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]


@dataclass(frozen=True)
class PathToRootPair:
    path_u: Path
    path_v: Path


def _walk(ear: Ear, i: int, to_start: bool):
    """Vertices and edges from position ``i`` of ``ear`` to one of its endpoints."""
    if to_start:
        return ear.vertices[i::-1], ear.edges[i - 1::-1] if i else ()
    return ear.vertices[i:], ear.edges[i:]


def disjoint_paths_to_root(ed: EarDecomposition, u: int, v: int) -> PathToRootPair:
    """Vertex-disjoint paths from ``u`` and ``v`` to the two root endpoints.

    Peels the highest ear holding ``u`` or ``v`` as an interior vertex, moving
    that vertex to an ear endpoint, until both sit on the root edge.
    """
    if u == v:
        raise ValueError("u and v must be distinct")
    ears, ear_of, pos = ed.ears, ed.ear_of_vertex, ed.position
    a, b = u, v
    va, ea = [u], []
    vb, eb = [v], []
    while True:
        ka, kb = ear_of[a], ear_of[b]
        k = max(ka, kb)
        if k == 0:
            break
        ear = ears[k]
        p0, pl = ear.endpoints
        if ka == kb:
            to_start = pos[a] < pos[b]
            xs, fs = _walk(ear, pos[a], to_start)
            va.extend(xs[1:])
            ea.extend(fs)
            xs, fs = _walk(ear, pos[b], not to_start)
            vb.extend(xs[1:])
            eb.extend(fs)
            a, b = va[-1], vb[-1]
            continue
        if ka > kb:
            moving, other_end = a, b
        else:
            moving, other_end = b, a
        if p0 != other_end and pl != other_end:
            target = min(p0, pl)
        else:
            target = pl if p0 == other_end else p0
        xs, fs = _walk(ear, pos[moving], target == p0)
        if ka > kb:
            va.extend(xs[1:])
            ea.extend(fs)
            a = target
        else:
            vb.extend(xs[1:])
            eb.extend(fs)
            b = target
    return PathToRootPair(Path(tuple(va), tuple(ea)), Path(tuple(vb), tuple(eb)))
