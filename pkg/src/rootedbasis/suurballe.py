"""Shortest vertex-disjoint path pairs and shortest rooted cycles.

All searches run on integer edge keys supplied by a tie-break context (see
:mod:`rootedbasis.tiebreak`), so with the deterministic or randomized context
every shortest path and cycle is unique.

The split graph doubles every vertex ``v`` into ``in(v) = 2v`` and
``out(v) = 2v + 1``.  Off the first path an undirected edge ``uv`` becomes
``out(u) -> in(v)`` and ``out(v) -> in(u)``; a first-path edge traversed
``u -> v`` becomes the single arc ``in(v) -> out(u)`` with negated key, and
the internal ``in -> out`` arc of a first-path vertex is reversed.
"""

from __future__ import annotations

import heapq
from array import array
from dataclasses import dataclass, field
from typing import Sequence

from .connectivity import Path, find_cut_vertex, is_biconnected
from .errors import NoCycle, NoPair
from .graph import Cycle, Graph, RootedGraph
from .tiebreak import DeterministicTieBreak, TieBreak


def _default_tb(g: Graph, tb: TieBreak | None) -> TieBreak:
    return DeterministicTieBreak(g.m) if tb is None else tb


def dijkstra(n: int, adj, keys: Sequence[int], source: int, banned: int = -1):
    """Single-source shortest paths over ``adj[v] = [(edge, w), ...]``.

    Returns ``(dist, parent_edge)``; unreachable vertices get ``None`` and
    ``-1``.  Vertex ``banned`` is never entered.
    """
    dist: list[int | None] = [None] * n
    parent = [-1] * n
    best = {source: 0}
    heap = [(0, source)]
    while heap:
        d, v = heapq.heappop(heap)
        if dist[v] is not None:
            continue
        dist[v] = d
        for e, w in adj[v]:
            if w == banned or dist[w] is not None:
                continue
            nd = d + keys[e]
            old = best.get(w)
            if old is None or nd < old:
                best[w] = nd
                parent[w] = e
                heapq.heappush(heap, (nd, w))
    return dist, parent


# ---------------------------------------------------------------------------
# explicit split graph


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    weight: int
    edge: int | None  # None for the internal in/out arc of a vertex


@dataclass(frozen=True)
class SplitGraph:
    """Directed graph on ``2 * vertex_count`` nodes; see module docstring."""

    vertex_count: int
    arcs: tuple[Arc, ...]
    first_path_vertices: frozenset[int]

    @staticmethod
    def node_in(v: int) -> int:
        return 2 * v

    @staticmethod
    def node_out(v: int) -> int:
        return 2 * v + 1

    def reweighted(self, potential: Sequence[int | None]) -> "SplitGraph":
        """Reduced costs ``w + p(tail) - p(head)``; arcs touching unknown potentials are dropped."""
        arcs = []
        for a in self.arcs:
            pt, ph = potential[a.tail], potential[a.head]
            if pt is None or ph is None:
                continue
            arcs.append(Arc(a.tail, a.head, a.weight + pt - ph, a.edge))
        return SplitGraph(self.vertex_count, tuple(arcs), self.first_path_vertices)

    def out_arcs(self) -> list[list[Arc]]:
        out: list[list[Arc]] = [[] for _ in range(2 * self.vertex_count)]
        for a in self.arcs:
            out[a.tail].append(a)
        return out


def build_split_graph(n: int, edges: Sequence[tuple[int, int, int] | None],
                      first_vertices: Sequence[int], first_edges: Sequence[int],
                      sink: int, skip: set[int] = frozenset()) -> SplitGraph:
    """Split graph for a first path given as vertex/edge sequences.

    ``edges[i]`` is ``(u, v, key)`` or None for an absent edge.  Arcs leaving
    ``sink`` and every arc touching a vertex in ``skip`` are omitted.
    """
    on_path = set(first_vertices)
    path_edges = set(first_edges)
    arcs = []
    for v in range(n):
        if v in skip or v == sink:
            continue
        if v in on_path:
            arcs.append(Arc(2 * v + 1, 2 * v, 0, None))
        else:
            arcs.append(Arc(2 * v, 2 * v + 1, 0, None))
    for i, (a, b) in enumerate(zip(first_vertices, first_vertices[1:])):
        e = first_edges[i]
        arcs.append(Arc(2 * b, 2 * a + 1, -edges[e][2], e))
    for e, item in enumerate(edges):
        if item is None or e in path_edges:
            continue
        u, v, k = item
        if u == v or u in skip or v in skip:
            continue
        if u != sink:
            arcs.append(Arc(2 * u + 1, 2 * v, k, e))
        if v != sink:
            arcs.append(Arc(2 * v + 1, 2 * u, k, e))
    return SplitGraph(n, tuple(arcs), frozenset(on_path))


@dataclass(frozen=True)
class Rung:
    """Maximal run of first-path edges walked backwards by the second search."""

    edges: tuple[int, ...]
    near: int  # endpoint closer to the source along the first path
    far: int


@dataclass(frozen=True)
class DisjointPathPair:
    source: int
    path1: Path  # source -> t1
    path2: Path  # source -> t2
    rungs: tuple[Rung, ...]
    first_path: Path  # the plain shortest path found first
    key: int = field(compare=False)  # total key of both paths

    @property
    def edges(self) -> frozenset[int]:
        return frozenset(self.path1.edges) | frozenset(self.path2.edges)

    def rung_shortcut(self) -> frozenset[int] | None:
        """Edges of the pair rerouted through the rung nearest the source.

        The result is the cycle ``D`` minus the root edge: the first rung plus
        both path tails beyond its endpoints.  None when there are no rungs.
        """
        if not self.rungs:
            return None
        r = self.rungs[0]
        out = set(r.edges)
        for p in (self.path1, self.path2):
            for x in (r.near, r.far):
                if x in p.vertices:
                    i = p.vertices.index(x)
                    out.update(p.edges[i:])
        return frozenset(out)

    def length(self, weight_of) -> int:
        """Summed length of both paths; an edge on both paths counts twice."""
        return sum(map(weight_of, self.path1.edges)) + sum(map(weight_of, self.path2.edges))

    def source_to_first_rung(self, weight_of) -> int:
        """Length of the first path from the source to the near end of the first rung.

        :meth:`length` exceeds the length of the rung shortcut by at least
        twice this.  ``weight_of`` maps an edge id to its weight, so the
        caller decides how a split source edge is priced.
        """
        p = self.first_path
        i = p.vertices.index(self.rungs[0].near)
        return sum(weight_of(e) for e in p.edges[:i])


def _rungs(first: Path, steps: list[tuple[int, bool]]) -> tuple[Rung, ...]:
    """Runs of consecutive backwards steps, ordered by position along the first path.

    Two rungs may touch at a vertex, so contiguity on the first path alone
    does not identify them.
    """
    pos = {e: i for i, e in enumerate(first.edges)}
    runs: list[list[int]] = []
    prev_back = False
    for e, back in steps:
        if back:
            if prev_back:
                runs[-1].append(pos[e])
            else:
                runs.append([pos[e]])
        prev_back = back
    rungs = []
    for run in sorted(runs, key=min):
        lo, hi = min(run), max(run)
        if hi - lo + 1 != len(run):
            raise AssertionError("rung is not a contiguous piece of the first path")
        rungs.append(Rung(tuple(first.edges[lo:hi + 1]), first.vertices[lo], first.vertices[hi + 1]))
    return tuple(rungs)


def _combine(source: int, first: Path, second_steps: list[tuple[int, bool]], endpoints,
             t1: int, t2: int, key: int) -> DisjointPathPair:
    """Symmetric difference of the first path and the second search's walk.

    ``second_steps`` lists ``(edge, backwards)`` in walk order.
    """
    backward = {e for e, back in second_steps if back}
    forward = [e for e, back in second_steps if not back]
    union = [e for e in first.edges if e not in backward] + forward
    inc: dict[int, list[int]] = {}
    for e in union:
        u, v = endpoints(e)
        inc.setdefault(u, []).append(e)
        inc.setdefault(v, []).append(e)
    paths = []
    for start_edge in inc[source]:
        verts = [source]
        edges = []
        e, x = start_edge, source
        while True:
            u, v = endpoints(e)
            y = v if u == x else u
            verts.append(y)
            edges.append(e)
            if y in (t1, t2):
                break
            nxt = [f for f in inc[y] if f != e]
            if len(nxt) != 1:
                raise AssertionError("symmetric difference is not a pair of paths")
            e, x = nxt[0], y
        paths.append(Path(tuple(verts), tuple(edges)))
    if len(paths) != 2 or {paths[0].end, paths[1].end} != {t1, t2}:
        raise AssertionError("symmetric difference does not reach both terminals")
    p1, p2 = paths if paths[0].end == t1 else paths[::-1]
    return DisjointPathPair(source, p1, p2, _rungs(first, second_steps), first, key)


def _path_from_parents(parent, endpoints, source, target):
    verts = [target]
    edges = []
    x = target
    while x != source:
        e = parent[x]
        u, v = endpoints(e)
        x = u if v == x else v
        edges.append(e)
        verts.append(x)
    return Path(tuple(reversed(verts)), tuple(reversed(edges)))


@dataclass
class SuurballeTrace:
    """Intermediate objects of one run, kept for invariant checks."""

    split: SplitGraph
    potential: list[int | None]
    reduced: SplitGraph
    pair: DisjointPathPair


def suurballe(n: int, edges: Sequence[tuple[int, int, int] | None], s: int, t1: int, t2: int) -> SuurballeTrace:
    """Minimum-key vertex-disjoint paths ``s -> t1`` and ``s -> t2``.

    ``edges[i] = (u, v, key)`` with nonnegative keys, or None if absent.
    """
    if len({s, t1, t2}) != 3:
        raise ValueError("s, t1, t2 must be distinct")
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    keys = [0] * len(edges)
    for e, item in enumerate(edges):
        if item is None:
            continue
        u, v, k = item
        keys[e] = k
        if u != v:
            adj[u].append((e, v))
            adj[v].append((e, u))

    def endpoints(e):
        return edges[e][0], edges[e][1]

    dist, parent = dijkstra(n, adj, keys, s, banned=t2)
    if dist[t1] is None:
        raise NoPair(f"no path from {s} to {t1} avoiding {t2}")
    first = _path_from_parents(parent, endpoints, s, t1)
    unreachable = {v for v in range(n) if dist[v] is None and v != t2}
    split = build_split_graph(n, edges, first.vertices, first.edges, t2, unreachable)
    potential: list[int | None] = [None] * (2 * n)
    for v in range(n):
        if dist[v] is not None:
            potential[2 * v] = potential[2 * v + 1] = dist[v]
    into_sink = []
    for item in edges:
        if item is None:
            continue
        u, v, k = item
        for a, b in ((u, v), (v, u)):
            if b == t2 and a != t2 and dist[a] is not None:
                into_sink.append(dist[a] + k)
    if not into_sink:
        raise NoPair(f"{t2} is not adjacent to the reachable part of the graph")
    potential[2 * t2] = min(into_sink)
    reduced = split.reweighted(potential)
    out = reduced.out_arcs()
    src, dst = 2 * s + 1, 2 * t2
    rdist: dict[int, int] = {}
    best = {src: 0}
    via: dict[int, Arc] = {}
    heap = [(0, src)]
    while heap:
        d, x = heapq.heappop(heap)
        if x in rdist:
            continue
        rdist[x] = d
        if x == dst:
            break
        for a in out[x]:
            y = a.head
            if y in rdist:
                continue
            nd = d + a.weight
            if y not in best or nd < best[y]:
                best[y] = nd
                via[y] = a
                heapq.heappush(heap, (nd, y))
    if dst not in rdist:
        raise NoPair(f"no second path from {s} to {t2}")
    steps = []
    x = dst
    while x != src:
        a = via[x]
        if a.edge is not None:
            steps.append((a.edge, a.tail % 2 == 0))  # in -> out arcs walk the first path backwards
        x = a.tail
    steps.reverse()
    second_key = rdist[dst] - potential[src] + potential[dst]
    pair = _combine(s, first, steps, endpoints, t1, t2, dist[t1] + second_key)
    return SuurballeTrace(split, potential, reduced, pair)


def shortest_disjoint_path_pair(g: Graph, s: int, t1: int, t2: int, tb: TieBreak | None = None,
                                exclude_edges=()) -> DisjointPathPair:
    """Vertex-disjoint ``s -> t1`` and ``s -> t2`` paths of minimum total weight."""
    tb = _default_tb(g, tb)
    excluded = set(exclude_edges)
    edges = [None if i in excluded else (u, v, tb.edge_key(i, w)) for i, (u, v, w) in enumerate(g.edges)]
    return suurballe(g.n, edges, s, t1, t2).pair


def _subdivided(rg: RootedGraph, f: int, tb: TieBreak):
    """Edge list with root and ``f`` removed and ``f`` split at a new vertex ``n``.

    The half towards the first endpoint carries the full key of ``f`` and the
    other half carries zero, so every pair through the new vertex pays for
    ``f`` exactly once.
    """
    g = rg.graph
    edges: list[tuple[int, int, int] | None] = [
        None if i in (rg.root_edge, f) else (u, v, tb.edge_key(i, w))
        for i, (u, v, w) in enumerate(g.edges)
    ]
    a, b = g.endpoints(f)
    s = g.n
    edges.append((s, a, tb.edge_key(f, g.weight(f))))
    edges.append((s, b, 0))
    return edges, s


def shortest_rooted_pair_trace(rg: RootedGraph, f: int, tb: TieBreak | None = None) -> SuurballeTrace:
    """Full run behind :func:`shortest_rooted_pair_through_edge`, split and reduced graphs included."""
    g = rg.graph
    tb = _default_tb(g, tb)
    if f == rg.root_edge:
        raise ValueError("f must differ from the root edge")
    if g.is_loop(f):
        raise NoCycle(f"edge {f} is a self-loop")
    edges, s = _subdivided(rg, f, tb)
    try:
        return suurballe(g.n + 1, edges, s, rg.t1, rg.t2)
    except NoPair as exc:
        raise NoCycle(f"no rooted cycle through edge {f}") from exc


def shortest_rooted_pair_through_edge(rg: RootedGraph, f: int, tb: TieBreak | None = None) -> DisjointPathPair:
    """The disjoint pair behind :func:`shortest_rooted_cycle_through_edge`.

    Paths start at a virtual vertex ``n`` splitting ``f``; half-edge ids are
    ``m`` (towards the first endpoint of ``f``) and ``m + 1``.
    """
    return shortest_rooted_pair_trace(rg, f, tb).pair


def shortest_rooted_cycle_through_edge(rg: RootedGraph, f: int, tb: TieBreak | None = None) -> Cycle:
    """Minimum-weight cycle containing both ``f`` and the root edge."""
    g = rg.graph
    pair = shortest_rooted_pair_through_edge(rg, f, tb)
    ids = {e for e in pair.edges if e < g.m}
    ids.update((f, rg.root_edge))
    return Cycle.from_edges(g, ids)


# ---------------------------------------------------------------------------
# batched engine: shortest rooted cycle through every edge


class RootedCycleTable:
    """Shortest rooted cycle through every edge of a biconnected rooted graph.

    Let ``d1`` be distances to ``t1`` in ``G - t2``.  For an edge ``f = xy``
    with ``d1(x) < d1(y)``, the first path from a point on ``f`` is ``f``
    followed by the ``t1``-tree path of ``x``.  All edges sharing the same
    ``x`` share one split graph, so one backwards Dijkstra from ``in(t2)``
    prices all of them.  ``d1`` itself is a valid potential for every such
    split graph: it zeroes the reversed tree arcs and keeps the rest
    nonnegative.
    """

    def __init__(self, g: Graph, root: int, tb: TieBreak | None = None, keep_paths: bool = True):
        self.graph = g
        self.root = root
        self.tb = tb = _default_tb(g, tb)
        self.keys = [tb.edge_key(i, w) for i, (_, _, w) in enumerate(g.edges)]
        self.t1, self.t2 = g.endpoints(root)
        self.keep_paths = keep_paths
        self.cycle_key: list[int | None] = [None] * g.m
        self.anchor = [-1] * g.m  # endpoint of f on the first path
        self._next: dict[int, array] = {}
        self._compute()

    # -- setup ----------------------------------------------------------------
    def _compute(self):
        g, t1, t2, root = self.graph, self.t1, self.t2, self.root
        n = g.n
        keys = self.keys
        if not is_biconnected(g):
            raise NoCycle(f"graph is not biconnected (cut vertex {find_cut_vertex(g)})")
        adj = [[(e, w) for e, w in g.adjacency[v] if e != root] for v in range(n)]
        d1, par = dijkstra(n, adj, keys, t1, banned=t2)
        for v in range(n):
            if v != t2 and d1[v] is None:
                raise NoCycle(f"vertex {v} cannot reach {t1} without {t2}; graph is not biconnected")
        succ = [-1] * n
        for v in range(n):
            if par[v] != -1:
                succ[v] = g.other(par[v], v)
        into_t2 = [d1[u] - keys[e] for e, u in g.adjacency[t2] if e != root and u != t2]
        if not into_t2:
            raise NoCycle(f"{t2} has no edge besides the root")
        d1[t2] = max(into_t2)
        self.d1, self.tree_edge, self.succ = d1, par, succ

        # reduced arcs out(u) -> in(v), listed by head v; none leave t2.
        # Each arc stores the packed-key delta (cost << shift) + p - q so a
        # relaxation is one addition.  Arcs are split by tree role: the
        # reversed tree arc from a child is zero-cost on the first path only,
        # and the arc along v's own tree edge is dropped when v is on it.
        shift = (2 * n).bit_length()
        self._shift = shift
        plain: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
        child: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
        up: list[tuple[int, int, int] | None] = [None] * n
        for e, (u, v, _) in enumerate(g.edges):
            if e == root or u == v:
                continue
            k = keys[e]
            for a, b in ((u, v), (v, u)):
                if a == t2:
                    continue
                arc = (a, e, ((k - d1[a] + d1[b]) << shift) + 2 * a + 1 - 2 * b)
                if par[a] == e:
                    child[b].append(arc)
                elif par[b] == e:
                    up[b] = arc
                else:
                    plain[b].append(arc)
        self._arcs = (plain, child, up)

        # group edges by first-path endpoint
        by_anchor: dict[int, list[tuple[int, int]]] = {}
        for e, (u, v, _) in enumerate(g.edges):
            if e == root or u == v:
                continue
            if v == t2 or (u != t2 and d1[u] < d1[v]):
                x, y = u, v
            else:
                x, y = v, u
            self.anchor[e] = x
            by_anchor.setdefault(x, []).append((e, y))
        base = keys[root] - d1[t2]
        for x, items in by_anchor.items():
            far = {2 * y for _, y in items if y != t2}
            r = self._backward_search(x, far)
            for e, y in items:
                tail = 0 if y == t2 else r[2 * y] + d1[y]
                self.cycle_key[e] = base + keys[e] + d1[x] + tail + (d1[t2] if y == t2 else 0)
        finite = [k for k in self.cycle_key if k is not None]
        if finite:
            self.cycle_key[root] = min(finite)

    def _backward_search(self, x: int, needed: set[int]) -> dict[int, int]:
        """Reduced distances to ``in(t2)`` in the split graph of ``x``'s tree path.

        Returns the settled distances of the nodes in ``needed``.  Values are
        kept packed as ``(distance << shift) | node``, both in the heap and in
        ``best``.  Zero-cost arcs (internal arcs and reversed tree arcs) are
        followed without the heap: a node reached that way settles at the
        current distance.  Stops once every node in ``needed`` is settled.
        """
        g = self.graph
        n = g.n
        t1, t2 = self.t1, self.t2
        succ, tree_edge = self.succ, self.tree_edge
        on = bytearray(n)
        v = x
        while True:
            on[v] = 1
            if v == t1:
                break
            v = succ[v]
        plain, child, up = self._arcs
        shift = self._shift
        mask = (1 << shift) - 1
        size = 2 * n
        done = bytearray(size)
        best: list = [None] * size
        keep = self.keep_paths or not needed
        nxt = array("i", [-2]) * size if keep else None
        target = 2 * t2
        done[target] = 1
        best[target] = target
        pending = [target]
        heap: list[int] = []
        remaining = len(needed)
        pop, push = heapq.heappop, heapq.heappush
        while True:
            while pending:
                q = pending.pop()
                dq = best[q]
                v = q >> 1
                if q & 1:
                    # out(v) has one in-arc, of cost zero
                    if on[v]:
                        if v == t1:
                            continue
                        p = 2 * succ[v]
                        arc_edge = tree_edge[v]
                    else:
                        p = 2 * v
                        arc_edge = -1
                    if not done[p]:
                        done[p] = 1
                        best[p] = dq - q + p
                        if keep:
                            nxt[p] = arc_edge
                        pending.append(p)
                    continue
                if q in needed:
                    remaining -= 1
                    if remaining == 0:
                        break
                on_v = on[v]
                arcs = plain[v]
                if not on_v and up[v] is not None:
                    arcs = (*arcs, up[v])
                for u, e, delta in arcs:
                    p = 2 * u + 1
                    if done[p]:
                        continue
                    nd = dq + delta
                    b = best[p]
                    if b is None or nd < b:
                        best[p] = nd
                        if keep:
                            nxt[p] = e
                        push(heap, nd)
                for u, e, delta in child[v]:
                    if on[u]:
                        continue
                    p = 2 * u + 1
                    if done[p]:
                        continue
                    nd = dq + delta
                    b = best[p]
                    if b is None or nd < b:
                        best[p] = nd
                        if keep:
                            nxt[p] = e
                        push(heap, nd)
                if on_v:
                    p = 2 * v + 1
                    if not done[p]:
                        done[p] = 1
                        best[p] = dq - q + p
                        if keep:
                            nxt[p] = -1
                        pending.append(p)
            else:
                while heap:
                    item = pop(heap)
                    p = item & mask
                    if not done[p]:
                        done[p] = 1
                        pending.append(p)
                        break
                else:
                    break
                continue
            break
        if keep:
            self._next[x] = nxt
        return {q: best[q] >> shift for q in needed if best[q] is not None and done[q]}

    # -- queries --------------------------------------------------------------
    def weight(self, e: int) -> int | None:
        k = self.cycle_key[e]
        return None if k is None else self.tb.key_weight(k)

    def lengths(self) -> dict[int, int]:
        return {e: self.tb.key_weight(k) for e, k in enumerate(self.cycle_key) if k is not None}

    def first_path(self, x: int) -> Path:
        verts = [x]
        edges = []
        while verts[-1] != self.t1:
            v = verts[-1]
            edges.append(self.tree_edge[v])
            verts.append(self.succ[v])
        return Path(tuple(verts), tuple(edges))

    def _second_steps(self, x: int, y: int) -> list[tuple[int, bool]]:
        """(edge, backwards) steps of the second path from ``in(y)`` to ``in(t2)``."""
        if x not in self._next:
            self._backward_search(x, set())
        nxt = self._next[x]
        g = self.graph
        steps = []
        q = 2 * y
        target = 2 * self.t2
        while q != target:
            e = nxt[q]
            if e == -2:
                raise AssertionError("second path pointer missing")
            v = q >> 1
            if e == -1:
                q ^= 1
                continue
            w = g.other(e, v)
            if q & 1:
                steps.append((e, False))
                q = 2 * w
            else:
                steps.append((e, True))
                q = 2 * w + 1
        return steps

    def pair(self, f: int) -> DisjointPathPair:
        """Disjoint pair for ``f`` from a virtual source ``-1`` on ``f``.

        Both returned paths begin with edge ``f`` (one half each).
        """
        g = self.graph
        if f == self.root or self.anchor[f] == -1:
            raise NoCycle(f"no pair for edge {f}")
        x = self.anchor[f]
        y = g.other(f, x)
        first = self.first_path(x)
        steps = self._second_steps(x, y) if y != self.t2 else []
        # lift to the virtual source: prepend f to both walks
        first_s = Path((-1, *first.vertices), (f, *first.edges))
        backward = {e for e, back in steps if back}
        forward = [e for e, back in steps if not back]
        tail1 = [e for e in first.edges if e not in backward] + forward
        inc: dict[int, list[int]] = {}
        for e in tail1:
            u, v = g.endpoints(e)
            inc.setdefault(u, []).append(e)
            inc.setdefault(v, []).append(e)
        paths = []
        for start in (x, y):
            verts = [-1, start]
            edges = [f]
            cur = start
            prev = f
            while cur not in (self.t1, self.t2):
                nxt = [e for e in inc.get(cur, ()) if e != prev]
                if len(nxt) != 1:
                    raise AssertionError("symmetric difference is not a pair of paths")
                prev = nxt[0]
                cur = g.other(prev, cur)
                verts.append(cur)
                edges.append(prev)
            paths.append(Path(tuple(verts), tuple(edges)))
        p1, p2 = paths if paths[0].end == self.t1 else paths[::-1]
        return DisjointPathPair(-1, p1, p2, _rungs(first_s, steps), first_s, self.cycle_key[f] - self.keys[self.root])

    def cycle_edges(self, f: int) -> frozenset[int]:
        """Edge ids of the shortest rooted cycle through ``f`` (root included)."""
        if f == self.root:
            best = min((e for e in range(self.graph.m) if e != self.root and self.cycle_key[e] is not None),
                       key=lambda e: self.cycle_key[e])
            return self.cycle_edges(best)
        g = self.graph
        x = self.anchor[f]
        if x == -1:
            raise NoCycle(f"no rooted cycle through edge {f}")
        y = g.other(f, x)
        first = self.first_path(x)
        steps = self._second_steps(x, y) if y != self.t2 else []
        backward = {e for e, back in steps if back}
        out = {e for e in first.edges if e not in backward}
        out.update(e for e, back in steps if not back)
        out.add(f)
        out.add(self.root)
        return frozenset(out)

    def cycle(self, f: int) -> Cycle:
        return Cycle.from_edges(self.graph, self.cycle_edges(f))


def all_edges_shortest_rooted_cycle_lengths(rg: RootedGraph, tb: TieBreak | None = None) -> dict[int, int]:
    """Weight of the shortest rooted cycle through each edge (root included)."""
    return RootedCycleTable(rg.graph, rg.root_edge, tb, keep_paths=False).lengths()
