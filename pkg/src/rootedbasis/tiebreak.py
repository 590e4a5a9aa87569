"""Simulating unambiguous weights.

Two contexts order edge sets of equal weight:

* :class:`DeterministicTieBreak` acts as if edge of rank ``i`` carried an extra
  ``delta / 2**(i+1)``.  Sets are stored as hash-consed subset objects over a
  fixed balanced binary tree whose leaves are the edges, so equal sets share
  one root object and the first differing element is found by walking down
  from the two roots.
* :class:`RandomizedTieBreak` adds a random ``bits``-bit salt per edge and
  compares salt sums when weights tie.

Path searches do not build handles per relaxation.  Each context also exposes
``edge_key(e, w)``: an integer whose sums over edge sets order exactly like
``compare`` does, so Dijkstra can run on plain integers (including the signed
sums produced by potential reweighting).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True, slots=True, eq=False)
class TieBreakHandle:
    context: object
    payload: object  # SubsetObject | None (deterministic) or int salt sum (randomized)


class SubsetObject:
    """Nonempty subset of the leaves under tree node ``node``."""

    __slots__ = ("node", "left", "right", "index")

    def __init__(self, node: int, left, right, index: int):
        self.node = node
        self.left = left
        self.right = right
        self.index = index

    def __repr__(self):
        return f"SubsetObject(node={self.node}, index={self.index})"


class TieBreak:
    """Common interface; see the concrete subclasses."""

    mode = "abstract"
    universe: int

    def edge_key(self, e: int, w: int) -> int:
        raise NotImplementedError

    def key_weight(self, key: int) -> int:
        raise NotImplementedError

    def set_key(self, weights: Sequence[int], edges: Iterable[int]) -> int:
        return sum(self.edge_key(e, weights[e]) for e in edges)

    def empty(self) -> TieBreakHandle:
        raise NotImplementedError

    def extend(self, h: TieBreakHandle, e: int) -> TieBreakHandle:
        raise NotImplementedError

    def from_sorted(self, edges: Sequence[int]) -> TieBreakHandle:
        raise NotImplementedError

    def compare(self, wx: int, hx: TieBreakHandle, wy: int, hy: TieBreakHandle) -> int:
        raise NotImplementedError

    def _own(self, *handles):
        for h in handles:
            if h.context is not self:
                raise ValueError("handles come from a different tie-break context")

    def retry(self) -> "TieBreak | None":
        """A fresh context to try again after an ear violation, if meaningful."""
        return None


class DeterministicTieBreak(TieBreak):
    """Incremental first-difference structure over a universe of edges.

    ``order`` optionally lists edge ids from most to least significant
    perturbation; by default edge ``i`` has rank ``i``.
    """

    mode = "det"

    def __init__(self, universe: int, order: Sequence[int] | None = None, capacity: int = 1 << 40):
        self.universe = universe
        if order is None:
            self._rank = list(range(universe))
            self._edge_at = list(range(universe))
        else:
            if sorted(order) != list(range(universe)):
                raise ValueError("order must be a permutation of the edge ids")
            self._edge_at = list(order)
            self._rank = [0] * universe
            for r, e in enumerate(order):
                self._rank[e] = r
        size = 1
        depth = 0
        while size < universe:
            size *= 2
            depth += 1
        self._size = size
        self._depth = depth
        self._q = capacity
        self._dict: dict[int, SubsetObject] = {}
        self._empty = TieBreakHandle(self, None)

    @property
    def object_count(self) -> int:
        return len(self._dict)

    def rank(self, e: int) -> int:
        return self._rank[e]

    # -- additive encoding -------------------------------------------------
    def edge_key(self, e: int, w: int) -> int:
        m = self.universe
        return (w << m) | (1 << (m - 1 - self._rank[e]))

    def key_weight(self, key: int) -> int:
        return key >> self.universe

    # -- subset objects ----------------------------------------------------
    def _make(self, node: int, left, right) -> SubsetObject:
        q = self._q
        a = left.index if left is not None else 0
        b = right.index if right is not None else 0
        key = node * q * q + a * q + b
        obj = self._dict.get(key)
        if obj is None:
            index = len(self._dict) + 1
            if index >= q:
                raise OverflowError("subset dictionary capacity exhausted")
            obj = SubsetObject(node, left, right, index)
            self._dict[key] = obj
        return obj

    def empty(self) -> TieBreakHandle:
        return self._empty

    def _handle(self, root):
        return self._empty if root is None else TieBreakHandle(self, root)

    def extend(self, h: TieBreakHandle, e: int) -> TieBreakHandle:
        self._own(h)
        pos = self._rank[e]
        x = h.payload
        node = 1
        path = []
        for level in range(self._depth):
            bit = (pos >> (self._depth - 1 - level)) & 1
            path.append((node, x, bit))
            if x is not None:
                x = x.right if bit else x.left
            node = 2 * node + bit
        if x is not None:
            raise ValueError(f"edge {e} already in the set")
        new = self._make(node, None, None)
        for node, x, bit in reversed(path):
            if bit:
                new = self._make(node, x.left if x is not None else None, new)
            else:
                new = self._make(node, new, x.right if x is not None else None)
        return TieBreakHandle(self, new)

    def from_sorted(self, edges: Sequence[int]) -> TieBreakHandle:
        """Build the set bottom-up from edges listed in increasing rank."""
        ranks = [self._rank[e] for e in edges]
        for a, b in zip(ranks, ranks[1:]):
            if a >= b:
                raise ValueError("edges must be strictly increasing in perturbation order")
        level = [(self._size + r, self._make(self._size + r, None, None)) for r in ranks]
        for _ in range(self._depth):
            nxt = []
            i = 0
            while i < len(level):
                node, obj = level[i]
                parent = node >> 1
                if node & 1:
                    nxt.append((parent, self._make(parent, None, obj)))
                    i += 1
                elif i + 1 < len(level) and level[i + 1][0] == node + 1:
                    nxt.append((parent, self._make(parent, obj, level[i + 1][1])))
                    i += 2
                else:
                    nxt.append((parent, self._make(parent, obj, None)))
                    i += 1
            level = nxt
        return self._handle(level[0][1] if level else None)

    def elements(self, h: TieBreakHandle) -> list[int]:
        """Edge ids of the set, in rank order."""
        out = []
        stack = [h.payload] if h.payload is not None else []
        while stack:
            x = stack.pop()
            if x.node >= self._size:
                out.append(self._edge_at[x.node - self._size])
                continue
            if x.right is not None:
                stack.append(x.right)
            if x.left is not None:
                stack.append(x.left)
        return out

    def _first_difference(self, x, y) -> tuple[int | None, int]:
        if x is y:
            return None, 0
        node = 1
        while x is not None and y is not None:
            if x.left is not y.left:
                x, y = x.left, y.left
                node = 2 * node
            else:
                x, y = x.right, y.right
                node = 2 * node + 1
        side = 1 if x is not None else -1
        z = x if x is not None else y
        while node < self._size:
            if z.left is not None:
                z = z.left
                node = 2 * node
            else:
                z = z.right
                node = 2 * node + 1
        return self._edge_at[node - self._size], side

    def first_difference(self, h1: TieBreakHandle, h2: TieBreakHandle) -> int | None:
        """Smallest-rank edge in exactly one of the sets, or None if equal."""
        self._own(h1, h2)
        return self._first_difference(h1.payload, h2.payload)[0]

    def compare(self, wx, hx, wy, hy) -> int:
        if wx != wy:
            return -1 if wx < wy else 1
        self._own(hx, hy)
        e, side = self._first_difference(hx.payload, hy.payload)
        # the set holding the first difference carries the larger perturbation
        return side


class RandomizedTieBreak(TieBreak):
    """Random per-edge salts of ``bits`` bits, compared when weights tie."""

    mode = "rand"

    def __init__(self, universe: int, seed: int = 0, bits: int = 64):
        if bits < 1:
            raise ValueError("bits must be positive")
        self.universe = universe
        self.seed = seed
        self.bits = bits
        rng = random.Random(seed)
        self.salts = [rng.getrandbits(bits) for _ in range(universe)]
        self._shift = bits + max(universe, 1).bit_length() + 1
        self._empty = TieBreakHandle(self, 0)
        self.equal_salt_events = 0

    @staticmethod
    def bits_for(n: int, c: float = 4.0) -> int:
        """Salt width ``ceil(c * log2 n)``; ``c > 3`` keeps the union bound small."""
        import math
        return max(1, math.ceil(c * math.log2(max(n, 2))))

    def edge_key(self, e: int, w: int) -> int:
        return (w << self._shift) + self.salts[e]

    def key_weight(self, key: int) -> int:
        return key >> self._shift

    def empty(self) -> TieBreakHandle:
        return self._empty

    def extend(self, h, e):
        self._own(h)
        return TieBreakHandle(self, h.payload + self.salts[e])

    def from_sorted(self, edges):
        for a, b in zip(edges, edges[1:]):
            if a >= b:
                raise ValueError("edges must be strictly increasing")
        return TieBreakHandle(self, sum(self.salts[e] for e in edges))

    def compare(self, wx, hx, wy, hy) -> int:
        if wx != wy:
            return -1 if wx < wy else 1
        self._own(hx, hy)
        if hx.payload != hy.payload:
            return -1 if hx.payload < hy.payload else 1
        if hx is hy:
            return 0
        # equal salt sums on distinct handles: arbitrary but fixed choice
        self.equal_salt_events += 1
        return -1

    def retry(self) -> "RandomizedTieBreak":
        return RandomizedTieBreak(self.universe, self.seed + 1, self.bits)


class NaiveTieBreak(TieBreak):
    """No tie-breaking at all: equal weights compare equal.

    Only for demonstrating that the greedy algorithm needs a perturbation.
    """

    mode = "naive"

    def __init__(self, universe: int):
        self.universe = universe
        self._empty = TieBreakHandle(self, None)

    def edge_key(self, e, w):
        return w

    def key_weight(self, key):
        return key

    def empty(self):
        return self._empty

    def extend(self, h, e):
        return h

    def from_sorted(self, edges):
        return self._empty

    def compare(self, wx, hx, wy, hy):
        return (wx > wy) - (wx < wy)


def make_tiebreak(mode: str, universe: int, *, seed: int = 0, bits: int = 64,
                  order: Sequence[int] | None = None) -> TieBreak:
    if mode == "det":
        return DeterministicTieBreak(universe, order)
    if mode == "rand":
        return RandomizedTieBreak(universe, seed, bits)
    if mode == "naive":
        return NaiveTieBreak(universe)
    raise ValueError(f"unknown tie-break mode {mode!r}")
