"""Existence test and ear-based construction of rooted cycle bases."""

from __future__ import annotations

from dataclasses import dataclass, field

from .connectivity import Subgraph, disjoint_paths_to_root, open_ear_decomposition, two_core
from .errors import NoRootedBasis, NotBiconnected
from .graph import Cycle, CycleBasis, RootedGraph


@dataclass(frozen=True)
class Existence:
    """Answer of :func:`has_rooted_cycle_basis` with the failing condition.

    ``reason`` is one of ``None`` (basis exists), ``"root-not-in-2-core"``,
    ``"cut-vertex"``, ``"self-loop"``, ``"cycle-outside-root-component"``.
    ``vacuous`` marks an acyclic root component, whose rooted basis is empty.
    """

    exists: bool
    reason: str | None = None
    detail: str = ""
    witness: int | None = None
    vacuous: bool = False

    def __bool__(self) -> bool:
        return self.exists


@dataclass(frozen=True)
class RootCore:
    """2-core of the root component, with the root edge re-indexed."""

    sub: Subgraph
    root: int  # root edge id inside ``sub.graph``
    existence: Existence = field(default=Existence(True))


def root_core(rg: RootedGraph) -> RootCore | Existence:
    """Return the root's 2-core component, or an Existence explaining why not."""
    g = rg.graph
    label = g.components()
    c = label[rg.t1]
    nv = [0] * (max(label) + 1)
    ne = [0] * len(nv)
    for x in label:
        nv[x] += 1
    for u, _, _ in g.edges:
        ne[label[u]] += 1
    for other in range(len(nv)):
        if other != c and ne[other] - nv[other] + 1 > 0:
            witness = label.index(other)
            return Existence(False, "cycle-outside-root-component",
                             f"component of vertex {witness} has cycles the root cannot reach",
                             witness)
    if ne[c] - nv[c] + 1 == 0:
        return Existence(True, None, "root component is acyclic; the empty basis is rooted",
                         vacuous=True)
    core = two_core(g)
    index = core.edge_index()
    if rg.root_edge not in index:
        return Existence(False, "root-not-in-2-core",
                         f"root edge {rg.root_edge} is not in the 2-core", rg.root_edge)
    for e in core.edge_map:
        if g.is_loop(e):
            return Existence(False, "self-loop", f"self-loop {e} is a cycle avoiding the root", e)
    root = index[rg.root_edge]
    try:
        open_ear_decomposition(core.graph, root)
    except NotBiconnected as exc:
        cut = exc.cut_vertex
        if cut is None:
            raise
        return Existence(False, "cut-vertex",
                         f"2-core is not 2-vertex-connected: vertex {core.vertex_map[cut]} is a cut vertex",
                         core.vertex_map[cut])
    return RootCore(core, root)


def has_rooted_cycle_basis(rg: RootedGraph) -> Existence:
    """True iff the root lies in a 2-vertex-connected 2-core (or nothing needs spanning)."""
    rc = root_core(rg)
    return rc.existence if isinstance(rc, RootCore) else rc


def require_root_core(rg: RootedGraph) -> RootCore | None:
    """Like :func:`root_core` but raises NoRootedBasis; None means an empty basis."""
    rc = root_core(rg)
    if isinstance(rc, Existence):
        if rc.exists:
            return None
        raise NoRootedBasis(rc.detail, rc.witness)
    return rc


def build_rooted_cycle_basis(rg: RootedGraph) -> CycleBasis:
    """One rooted cycle per ear: root + ear + disjoint paths back to the root."""
    rc = require_root_core(rg)
    if rc is None:
        return CycleBasis(())
    g = rg.graph
    core_graph = rc.sub.graph
    emap = rc.sub.edge_map
    ed = open_ear_decomposition(core_graph, rc.root)
    cycles = []
    witnesses = []
    for ear in ed.ears[1:]:
        a, b = ear.endpoints
        pair = disjoint_paths_to_root(ed, a, b)
        local = [rc.root, *ear.edges, *pair.path_u.edges, *pair.path_v.edges]
        cycles.append(Cycle.from_edges(g, (emap[e] for e in local)))
        witnesses.append(emap[ear.edges[0]])
    return CycleBasis(tuple(cycles), tuple(witnesses))

