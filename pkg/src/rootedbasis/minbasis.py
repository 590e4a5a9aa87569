"""Greedy minimum-weight rooted cycle basis.

Every edge ``f`` has one shortest rooted cycle ``C(f)`` under the tie-break
keys, and it does not change as the basis grows.  The greedy sequence is
therefore: scan edges by the key of ``C(f)`` and take ``C(f)`` whenever ``f``
is still outside the ambit (the union of cycles taken so far).  The new edges
of each taken cycle must form a single path; that path sequence, after the
root edge, is an open ear decomposition of the 2-core.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .connectivity import Ear
from .errors import InternalEarViolation
from .graph import Cycle, CycleBasis, Graph, RootedGraph
from .rooted import require_root_core
from .suurballe import RootedCycleTable, dijkstra
from .tiebreak import DeterministicTieBreak, TieBreak

MAX_RETRIES = 8


@dataclass
class GreedyState:
    """Greedy sequence under construction, on the root's 2-core."""

    table: RootedCycleTable
    order: list[int]  # candidate edges by cycle key
    cursor: int = 0
    cycles: list[Cycle] = field(default_factory=list)
    witnesses: list[int] = field(default_factory=list)
    ears: list[Ear] = field(default_factory=list)
    ambit_edges: set[int] = field(default_factory=set)
    ambit_vertices: set[int] = field(default_factory=set)

    @classmethod
    def start(cls, g: Graph, root: int, tb: TieBreak) -> "GreedyState":
        table = RootedCycleTable(g, root, tb)
        order = sorted((e for e in range(g.m) if e != root and table.cycle_key[e] is not None),
                       key=lambda e: table.cycle_key[e])
        t1, t2 = g.endpoints(root)
        return cls(table, order, ambit_edges={root}, ambit_vertices={t1, t2})

    @property
    def graph(self) -> Graph:
        return self.table.graph

    @property
    def uncovered(self) -> int:
        return self.graph.m - len(self.ambit_edges)

    def done(self) -> bool:
        return len(self.ambit_edges) == self.graph.m


def new_edge_path(g: Graph, new_edges, ambit_vertices) -> Ear | None:
    """Arrange ``new_edges`` as one path with only its endpoints in the ambit."""
    if not new_edges:
        return None
    inc: dict[int, list[int]] = {}
    for e in new_edges:
        u, v = g.endpoints(e)
        inc.setdefault(u, []).append(e)
        inc.setdefault(v, []).append(e)
    ends = [v for v, es in inc.items() if len(es) == 1]
    if len(ends) != 2 or any(len(es) > 2 for es in inc.values()):
        return None
    if any(v not in ambit_vertices for v in ends):
        return None
    start = min(ends)
    verts, edges = [start], []
    prev = -1
    x = start
    while True:
        nxt = [e for e in inc[x] if e != prev]
        if not nxt:
            break
        prev = nxt[0]
        x = g.other(prev, x)
        verts.append(x)
        edges.append(prev)
    if len(edges) != len(new_edges):
        return None
    if any(v in ambit_vertices for v in verts[1:-1]):
        return None
    return Ear(tuple(verts), tuple(edges))


def _pick(state: GreedyState, fewest_new: bool) -> int | None:
    table, order, amb = state.table, state.order, state.ambit_edges
    while state.cursor < len(order) and order[state.cursor] in amb:
        state.cursor += 1
    if state.cursor == len(order):
        return None
    f = order[state.cursor]
    if not fewest_new:
        return f
    # among equal-weight candidates prefer the cycle with fewest new edges
    w = table.weight(f)
    best = (len(table.cycle_edges(f) - amb), f)
    i = state.cursor + 1
    while i < len(order) and table.weight(order[i]) == w:
        h = order[i]
        if h not in amb:
            new = len(table.cycle_edges(h) - amb)
            if new < best[0]:
                best = (new, h)
        i += 1
    return best[1]


def greedy_step(state: GreedyState, *, debug: bool = False, fewest_new: bool = False,
                strict: bool = True) -> Cycle | None:
    """Append the shortest rooted cycle with an edge outside the ambit.

    Returns None once the ambit is the whole graph.  Raises
    InternalEarViolation if the new edges are not a single path and
    ``strict`` is set; otherwise the cycle is kept and its ear left unset.
    """
    f = _pick(state, fewest_new)
    if f is None:
        return None
    g = state.graph
    table = state.table
    ids = table.cycle_edges(f)
    step = len(state.cycles)
    new = ids - state.ambit_edges
    ear = new_edge_path(g, new, state.ambit_vertices)
    if debug:
        _check_rungs(state, f, ids)
    if ear is None and strict:
        raise InternalEarViolation(
            f"step {step}: new edges {sorted(new)} of the cycle through edge {f} are not one path", step)
    cycle = Cycle.from_edges(g, ids)
    state.cycles.append(cycle)
    state.witnesses.append(f)
    if ear is not None:
        state.ears.append(ear)
    state.ambit_edges |= ids
    for e in ids:
        state.ambit_vertices.update(g.endpoints(e))
    if debug:
        _check_ambit_paths(state)
        if len(state.cycles) > 1 and state.cycles[-2].weight > cycle.weight:
            raise AssertionError(f"step {step}: cycle weights decreased")
    return cycle


def _check_rungs(state: GreedyState, f: int, ids) -> None:
    """Rungs and path tails past the first rung lie in the previous ambit; the rung shortcut saves at least twice the source segment."""
    table = state.table
    g = state.graph
    pair = table.pair(f)
    if (pair.edges | {table.root}) != ids:
        raise AssertionError(f"pair for edge {f} does not reproduce its cycle")
    if not pair.rungs:
        return
    amb = state.ambit_edges
    r = pair.rungs[0]
    for rung in pair.rungs:
        if not set(rung.edges) <= amb:
            raise AssertionError(f"rung {rung.edges} of the cycle through {f} leaves the ambit")
    shortcut = pair.rung_shortcut()
    if not shortcut <= amb:
        raise AssertionError(f"paths past rung {r.edges} of the cycle through {f} leave the ambit")
    # both table paths start with f, so the pair length counts it twice
    short = g.total_weight(shortcut)
    gap = pair.length(g.weight) - short
    if gap < 2 * pair.source_to_first_rung(g.weight) or short >= g.total_weight(ids) - g.weight(table.root):
        raise AssertionError(f"rung shortcut for edge {f} is not short enough")


def _check_ambit_paths(state: GreedyState) -> None:
    """Shortest paths from ambit vertices to both root endpoints stay in the ambit."""
    table = state.table
    g = state.graph
    trees = getattr(state, "_trees", None)
    if trees is None:
        adj = [[(e, w) for e, w in g.adjacency[v]] for v in range(g.n)]
        trees = [dijkstra(g.n, adj, table.keys, t)[1] for t in (table.t1, table.t2)]
        state._trees = trees
    for parent in trees:
        for v in state.ambit_vertices:
            e = parent[v]
            if e != -1 and e not in state.ambit_edges:
                raise AssertionError(f"shortest path from ambit vertex {v} leaves the ambit via edge {e}")


@dataclass
class GreedyRun:
    """Result of :func:`greedy_rooted_basis` in original edge ids."""

    basis: CycleBasis
    ears: tuple[Ear, ...]  # new-edge paths, original vertex/edge ids; root edge not included
    tiebreak: TieBreak | None
    attempts: int
    complete: bool  # False only for non-strict runs that broke the ear property


def greedy_rooted_basis(rg: RootedGraph, tb: TieBreak | None = None, *, debug: bool = False,
                        fewest_new: bool = False, strict: bool = True,
                        max_retries: int = MAX_RETRIES) -> GreedyRun:
    """Greedy minimum rooted basis with ears; retries randomized contexts on ear failures.

    ``tb`` must cover the edges of ``rg.graph``; it is applied to the 2-core
    through the edge map, so perturbation order follows original edge ids.
    """
    rc = require_root_core(rg)
    if rc is None:
        return GreedyRun(CycleBasis(()), (), tb, 0, True)
    g = rg.graph
    core = rc.sub.graph
    emap = rc.sub.edge_map
    vmap = rc.sub.vertex_map
    if tb is None:
        tb = DeterministicTieBreak(g.m)
    attempts = 0
    while True:
        attempts += 1
        local = _LocalTieBreak(tb, emap)
        state = GreedyState.start(core, rc.root, local)
        try:
            while greedy_step(state, debug=debug, fewest_new=fewest_new, strict=strict) is not None:
                pass
        except InternalEarViolation:
            nxt = tb.retry()
            if nxt is None or attempts > max_retries:
                raise
            tb = nxt
            continue
        break
    cycles = tuple(Cycle(frozenset(emap[e] for e in c.edge_ids), c.weight) for c in state.cycles)
    witnesses = tuple(emap[e] for e in state.witnesses)
    ears = tuple(Ear(tuple(vmap[v] for v in ear.vertices), tuple(emap[e] for e in ear.edges))
                 for ear in state.ears)
    complete = len(state.ears) == len(state.cycles) and len(cycles) == core.m - core.n + 1
    if strict and not complete:
        raise InternalEarViolation(f"greedy produced {len(cycles)} cycles, expected {core.m - core.n + 1}",
                                   len(cycles))
    return GreedyRun(CycleBasis(cycles, witnesses), ears, tb, attempts, complete)


def min_weight_rooted_basis(rg: RootedGraph, tb: TieBreak | None = None, *, debug: bool = False,
                            fewest_new: bool = False) -> CycleBasis:
    """Minimum-weight rooted cycle basis, cycles in greedy order with witness edges."""
    return greedy_rooted_basis(rg, tb, debug=debug, fewest_new=fewest_new).basis


class _LocalTieBreak(TieBreak):
    """View of a context through an edge map (subgraph id -> original id)."""

    def __init__(self, inner: TieBreak, emap):
        self.inner = inner
        self.emap = emap
        self.universe = len(emap)
        self.mode = inner.mode

    def edge_key(self, e, w):
        return self.inner.edge_key(self.emap[e], w)

    def key_weight(self, key):
        return self.inner.key_weight(key)

    def empty(self):
        return self.inner.empty()

    def extend(self, h, e):
        return self.inner.extend(h, self.emap[e])

    def from_sorted(self, edges):
        return self.inner.from_sorted([self.emap[e] for e in edges])

    def compare(self, wx, hx, wy, hy):
        return self.inner.compare(wx, hx, wy, hy)
