"""Undirected multigraphs, cycles as edge-id sets, and GF(2) cycle-space algebra.

Edge sets are handled as Python ``int`` bitsets (bit ``i`` set means edge ``i``
is present), which gives word-parallel XOR for Gaussian elimination.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GraphError


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected multigraph with dense, stable edge ids.

    ``adjacency[v]`` lists ``(edge_id, other_endpoint)`` pairs; a self-loop is
    listed twice at its vertex so that degrees come out right.
    """

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, e: int) -> tuple[int, int]:
        u, v, _ = self.edges[e]
        return u, v

    def weight(self, e: int) -> int:
        return self.edges[e][2]

    def other(self, e: int, v: int) -> int:
        a, b, _ = self.edges[e]
        return b if a == v else a

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_loop(self, e: int) -> bool:
        u, v, _ = self.edges[e]
        return u == v

    def total_weight(self, edge_ids: Iterable[int]) -> int:
        return sum(self.edges[e][2] for e in edge_ids)

    def edge_list(self) -> list[tuple[int, int, int]]:
        return list(self.edges)

    def components(self) -> list[int]:
        """Component label for every vertex (labels are 0-based, by first vertex)."""
        label = [-1] * self.vertex_count
        c = 0
        for start in range(self.vertex_count):
            if label[start] != -1:
                continue
            label[start] = c
            stack = [start]
            while stack:
                x = stack.pop()
                for _, y in self.adjacency[x]:
                    if label[y] == -1:
                        label[y] = c
                        stack.append(y)
            c += 1
        return label

    def check_adjacency(self) -> bool:
        """Rebuild adjacency from the edge list and compare."""
        return _build_adjacency(self.vertex_count, self.edges) == self.adjacency


def _build_adjacency(n, edges):
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, (u, v, _) in enumerate(edges):
        adj[u].append((i, v))
        adj[v].append((i, u))
    return tuple(tuple(a) for a in adj)


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on vertices ``0..n-1``; edge ids follow input order.

    Each edge is ``(u, v)`` (unit weight) or ``(u, v, weight)``.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    edges = []
    for i, item in enumerate(edge_list):
        if len(item) == 2:
            u, v = item
            w = 1
        elif len(item) == 3:
            u, v, w = item
        else:
            raise GraphError(f"edge {i}: expected (u, v[, w]), got {item!r}")
        u, v, w = int(u), int(v), int(w)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {i}: vertex out of range in ({u}, {v}) for n={n}")
        if w < 1:
            raise GraphError(f"edge {i}: weight must be a positive integer, got {w}")
        edges.append((u, v, w))
    edges_t = tuple(edges)
    return Graph(n, edges_t, _build_adjacency(n, edges_t))


@dataclass(frozen=True, eq=False)
class RootedGraph:
    graph: Graph
    root_edge: int

    def __post_init__(self):
        g = self.graph
        if not 0 <= self.root_edge < g.m:
            raise GraphError(f"root edge {self.root_edge} out of range (m={g.m})")
        if g.is_loop(self.root_edge):
            raise GraphError(f"root edge {self.root_edge} is a self-loop")

    @property
    def t1(self) -> int:
        return self.graph.edges[self.root_edge][0]

    @property
    def t2(self) -> int:
        return self.graph.edges[self.root_edge][1]


@dataclass(frozen=True)
class Cycle:
    edge_ids: frozenset[int]
    weight: int

    @classmethod
    def from_edges(cls, g: Graph, edge_ids: Iterable[int]) -> "Cycle":
        ids = frozenset(edge_ids)
        return cls(ids, g.total_weight(ids))

    def __len__(self) -> int:
        return len(self.edge_ids)

    def sorted_edges(self) -> list[int]:
        return sorted(self.edge_ids)

    def mask(self) -> int:
        return edge_mask(self.edge_ids)


@dataclass(frozen=True)
class CycleBasis:
    cycles: tuple[Cycle, ...]
    witness_edges: tuple[int | None, ...] = ()

    def __post_init__(self):
        if not self.witness_edges:
            object.__setattr__(self, "witness_edges", (None,) * len(self.cycles))
        elif len(self.witness_edges) != len(self.cycles):
            raise ValueError("witness_edges must match cycles in length")

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    @property
    def total_weight(self) -> int:
        return sum(c.weight for c in self.cycles)

    @property
    def total_length(self) -> int:
        return sum(len(c) for c in self.cycles)


def edge_mask(edge_ids: Iterable[int]) -> int:
    mask = 0
    for e in edge_ids:
        mask |= 1 << e
    return mask


def cycle_problem(g: Graph, edge_ids: Iterable[int]) -> str | None:
    """Return why ``edge_ids`` is not a cycle of ``g``, or None if it is one."""
    ids = list(edge_ids)
    if not ids:
        return "empty edge set"
    if len(set(ids)) != len(ids):
        return "repeated edge id"
    for e in ids:
        if not 0 <= e < g.m:
            return f"edge id {e} out of range"
    deg: Counter[int] = Counter()
    for e in ids:
        u, v = g.endpoints(e)
        deg[u] += 1
        deg[v] += 1
    bad = [v for v, d in deg.items() if d != 2]
    if bad:
        return f"vertex {bad[0]} has degree {deg[bad[0]]} in the edge set"
    # connectivity over the touched vertices
    incident: dict[int, list[int]] = {}
    for e in ids:
        u, v = g.endpoints(e)
        incident.setdefault(u, []).append(v)
        incident.setdefault(v, []).append(u)
    start = next(iter(incident))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in incident[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(incident):
        return "edge set is not connected"
    return None


def is_cycle(g: Graph, edge_ids: Iterable[int]) -> bool:
    return cycle_problem(g, edge_ids) is None


def cycle_space_dimension(g: Graph) -> int:
    """``m - n + c`` where ``c`` counts connected components (isolated vertices too)."""
    if g.n == 0:
        return 0
    return g.m - g.n + (max(g.components()) + 1)


class XorBasis:
    """Incremental GF(2) basis over int bitsets, keyed by leading bit."""

    __slots__ = ("_rows",)

    def __init__(self):
        self._rows: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vec: int) -> int:
        rows = self._rows
        while vec:
            top = vec.bit_length() - 1
            row = rows.get(top)
            if row is None:
                return vec
            vec ^= row
        return 0

    def add(self, vec: int) -> bool:
        """Insert ``vec``; return False if it was already in the span."""
        r = self.reduce(vec)
        if not r:
            return False
        self._rows[r.bit_length() - 1] = r
        return True

    def contains(self, vec: int) -> bool:
        return self.reduce(vec) == 0


def gf2_rank(edge_sets: Iterable[Iterable[int] | int], universe: int | None = None) -> int:
    """Rank of edge-id sets viewed as vectors of GF(2)^universe.

    Sets may be given as iterables of ids or directly as int bitsets.
    """
    basis = XorBasis()
    for s in edge_sets:
        vec = s if isinstance(s, int) else edge_mask(s)
        if universe is not None and vec >> universe:
            raise ValueError(f"edge id outside universe of size {universe}")
        basis.add(vec)
    return len(basis)


@dataclass
class ValidationReport:
    failures: list[str]
    count: int
    rank: int
    dimension: int

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok


def root_component_dimension(rg: RootedGraph) -> int:
    """Cycle-space dimension of the connected component containing the root edge.

    Peeling to the 2-core never changes this number, so it is also the
    dimension of the root's 2-core component.
    """
    g = rg.graph
    label = g.components()
    c = label[rg.t1]
    n_c = sum(1 for x in label if x == c)
    m_c = sum(1 for u, _, _ in g.edges if label[u] == c)
    return m_c - n_c + 1


def validate_rooted_basis(rg: RootedGraph, basis: CycleBasis | Sequence[Cycle]) -> ValidationReport:
    """Check every rooted-basis condition and collect all failures."""
    g = rg.graph
    if isinstance(basis, CycleBasis):
        cycles = list(basis.cycles)
        witnesses = list(basis.witness_edges)
    else:
        cycles = list(basis)
        witnesses = [None] * len(cycles)
    failures = []
    xb = XorBasis()
    seen = 0
    for i, c in enumerate(cycles):
        problem = cycle_problem(g, c.edge_ids)
        if problem is not None:
            failures.append(f"cycle {i}: not a cycle ({problem})")
        elif c.weight != g.total_weight(c.edge_ids):
            failures.append(f"cycle {i}: stored weight {c.weight} != {g.total_weight(c.edge_ids)}")
        if rg.root_edge not in c.edge_ids:
            failures.append(f"cycle {i}: does not contain root edge {rg.root_edge}")
        mask = edge_mask(e for e in c.edge_ids if 0 <= e < g.m)
        w = witnesses[i]
        if w is not None:
            if w not in c.edge_ids:
                failures.append(f"cycle {i}: witness edge {w} not in cycle")
            elif seen >> w & 1:
                failures.append(f"cycle {i}: witness edge {w} already used by an earlier cycle")
        seen |= mask
        xb.add(mask)
    dim = root_component_dimension(rg)
    rank = len(xb)
    if len(cycles) != dim:
        failures.append(f"count {len(cycles)} != cycle space dimension {dim}")
    if rank < dim:
        failures.append(f"rank {rank} < dimension {dim}: cycles do not generate the cycle space")
    if rank != len(cycles):
        failures.append(f"rank {rank} < count {len(cycles)}: cycles are dependent")
    return ValidationReport(failures, len(cycles), rank, dim)
