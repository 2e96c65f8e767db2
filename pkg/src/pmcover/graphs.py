"""Cubic multigraph data model and structural queries.

Vertices are 0..n-1.  Edges carry dense indices 0..m-1 that stay stable for
the lifetime of a graph: the edge list is sorted by (min endpoint, max
endpoint), parallel edges sitting next to each other in insertion order.
Parallel edges are allowed (the two-vertex theta graph is a legal operand),
loops are not.  Everything is immutable after construction, so instances can
be shared freely between threads.

Edge subsets (matchings, cuts, cycle edge sets) are ``EdgeSet`` values: a
fixed-width bit vector over edge indices backed by a plain int.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadEdgeIndex,
    Disconnected,
    NotCubic,
    NotPerfectMatching,
)

DEGREE = 3


class EdgeSet:
    """Immutable set of edge indices backed by an int bitmask."""

    __slots__ = ("width", "bits")

    def __init__(self, width: int, bits: int = 0):
        if width < 0:
            raise ValueError("width must be nonnegative")
        if bits < 0 or bits >> width:
            raise ValueError(f"bits 0x{bits:x} do not fit in width {width}")
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("EdgeSet is immutable")

    @classmethod
    def from_indices(cls, width: int, indices: Iterable[int]) -> "EdgeSet":
        bits = 0
        for e in indices:
            if not 0 <= e < width:
                raise BadEdgeIndex(f"edge index {e} out of range 0..{width - 1}")
            bits |= 1 << e
        return cls(width, bits)

    def _check(self, other: "EdgeSet") -> None:
        if self.width != other.width:
            raise ValueError(f"width mismatch: {self.width} != {other.width}")

    def __or__(self, other: "EdgeSet") -> "EdgeSet":
        self._check(other)
        return EdgeSet(self.width, self.bits | other.bits)

    def __and__(self, other: "EdgeSet") -> "EdgeSet":
        self._check(other)
        return EdgeSet(self.width, self.bits & other.bits)

    def __xor__(self, other: "EdgeSet") -> "EdgeSet":
        self._check(other)
        return EdgeSet(self.width, self.bits ^ other.bits)

    def __sub__(self, other: "EdgeSet") -> "EdgeSet":
        self._check(other)
        return EdgeSet(self.width, self.bits & ~other.bits)

    def complement(self) -> "EdgeSet":
        return EdgeSet(self.width, self.bits ^ ((1 << self.width) - 1))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __contains__(self, e: int) -> bool:
        return 0 <= e < self.width and (self.bits >> e) & 1 == 1

    def __bool__(self) -> bool:
        return self.bits != 0

    def __le__(self, other: "EdgeSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EdgeSet)
            and self.width == other.width
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.width, self.bits))

    def indices(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"EdgeSet({list(self)}, width={self.width})"


class CubicGraph:
    """Immutable 3-regular multigraph with canonically ordered edges."""

    __slots__ = ("n", "edges", "incidence", "principal_cuts", "_adj")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        principal_cuts: tuple[EdgeSet, ...] = (),
    ):
        if n <= 0 or n % 2:
            raise NotCubic(f"vertex count must be positive and even, got {n}")
        normalized = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise BadEdgeIndex(f"edge ({u},{v}) out of vertex range 0..{n - 1}")
            if u == v:
                raise NotCubic(f"loop at vertex {u}")
            normalized.append((u, v) if u < v else (v, u))
        normalized.sort()
        edge_tuple = tuple(normalized)
        if len(edge_tuple) != 3 * n // 2:
            raise NotCubic(
                f"expected {3 * n // 2} edges for n={n}, got {len(edge_tuple)}"
            )
        incidence: list[list[int]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(edge_tuple):
            incidence[u].append(e)
            incidence[v].append(e)
        for v, inc in enumerate(incidence):
            if len(inc) != DEGREE:
                raise NotCubic(f"vertex {v} has degree {len(inc)}, expected {DEGREE}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edge_tuple)
        object.__setattr__(self, "incidence", tuple(tuple(i) for i in incidence))
        object.__setattr__(self, "principal_cuts", tuple(principal_cuts))
        object.__setattr__(self, "_adj", None)

    def __setattr__(self, name, value):
        raise AttributeError("CubicGraph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, e: int) -> tuple[int, int]:
        if not 0 <= e < self.m:
            raise BadEdgeIndex(f"edge index {e} out of range 0..{self.m - 1}")
        return self.edges[e]

    def other_end(self, e: int, v: int) -> int:
        u, w = self.endpoints(e)
        if v == u:
            return w
        if v == w:
            return u
        raise BadEdgeIndex(f"vertex {v} is not an endpoint of edge {e}")

    def incident(self, v: int) -> tuple[int, int, int]:
        return self.incidence[v]

    def neighbors(self, v: int) -> tuple[int, int, int]:
        """Neighbors of v in ascending incident-edge order (with multiplicity)."""
        return tuple(self.other_end(e, v) for e in self.incidence[v])

    def edge_ids_between(self, u: int, v: int) -> tuple[int, ...]:
        return tuple(e for e in self.incidence[u] if self.other_end(e, u) == v)

    def is_simple(self) -> bool:
        return all(a != b for a, b in zip(self.edges, self.edges[1:]))

    def adjacency_counts(self) -> tuple[tuple[int, ...], ...]:
        """n x n matrix of edge multiplicities (cached)."""
        cached = self._adj
        if cached is None:
            counts = [[0] * self.n for _ in range(self.n)]
            for u, v in self.edges:
                counts[u][v] += 1
                counts[v][u] += 1
            cached = tuple(tuple(row) for row in counts)
            object.__setattr__(self, "_adj", cached)
        return cached

    def empty_edge_set(self) -> EdgeSet:
        return EdgeSet(self.m, 0)

    def full_edge_set(self) -> EdgeSet:
        return EdgeSet(self.m, (1 << self.m) - 1)

    def edge_set(self, indices: Iterable[int]) -> EdgeSet:
        return EdgeSet.from_indices(self.m, indices)

    def is_connected(self) -> bool:
        seen = 1
        stack = [0]
        while stack:
            v = stack.pop()
            for e in self.incidence[v]:
                w = self.other_end(e, v)
                if not (seen >> w) & 1:
                    seen |= 1 << w
                    stack.append(w)
        return seen == (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CubicGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"CubicGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class TwoFactor:
    """Cycle decomposition complementing a perfect matching.

    Each cycle is stored as a vertex sequence starting at its minimum vertex
    and traversed toward its smaller-indexed cycle neighbor; the aligned edge
    sequence has edge k joining vertex k to vertex k+1 (cyclically).  Cycles
    are sorted by their minimum vertex.
    """

    graph: CubicGraph
    matching: EdgeSet
    cycles: tuple[tuple[int, ...], ...]
    cycle_edges: tuple[tuple[int, ...], ...]

    def is_odd(self, i: int) -> bool:
        return len(self.cycles[i]) % 2 == 1

    @property
    def odd_cycle_ids(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.cycles)) if self.is_odd(i))

    @property
    def even_cycle_ids(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.cycles)) if not self.is_odd(i))

    def cycle_edge_set(self, i: int) -> EdgeSet:
        return self.graph.edge_set(self.cycle_edges[i])

    def all_cycle_edges(self) -> EdgeSet:
        bits = 0
        for es in self.cycle_edges:
            for e in es:
                bits |= 1 << e
        return EdgeSet(self.graph.m, bits)


def is_perfect_matching(g: CubicGraph, pm: EdgeSet) -> bool:
    if pm.width != g.m or len(pm) != g.n // 2:
        return False
    seen = 0
    for e in pm:
        u, v = g.endpoints(e)
        if (seen >> u) & 1 or (seen >> v) & 1:
            return False
        seen |= (1 << u) | (1 << v)
    return seen == (1 << g.n) - 1


def two_factor_of(g: CubicGraph, pm: EdgeSet) -> TwoFactor:
    """Decompose the complement of a perfect matching into cycles."""
    if not is_perfect_matching(g, pm):
        raise NotPerfectMatching("edge set is not a perfect matching of the graph")
    free = [tuple(e for e in g.incidence[v] if e not in pm) for v in range(g.n)]
    visited = [False] * g.n
    cycles: list[tuple[int, ...]] = []
    cycle_edges: list[tuple[int, ...]] = []
    for start in range(g.n):
        if visited[start]:
            continue
        e1, e2 = free[start]
        w1, w2 = g.other_end(e1, start), g.other_end(e2, start)
        # move toward the smaller-indexed cycle neighbor; lower edge id on ties
        first_edge = e1 if (w1, e1) <= (w2, e2) else e2
        verts = [start]
        edges = [first_edge]
        visited[start] = True
        prev_edge = first_edge
        v = g.other_end(first_edge, start)
        while v != start:
            verts.append(v)
            visited[v] = True
            f1, f2 = free[v]
            nxt = f2 if f1 == prev_edge else f1
            edges.append(nxt)
            prev_edge = nxt
            v = g.other_end(nxt, v)
        cycles.append(tuple(verts))
        cycle_edges.append(tuple(edges))
    return TwoFactor(g, pm, tuple(cycles), tuple(cycle_edges))


def find_bridges(g: CubicGraph) -> EdgeSet:
    """All cut edges, via one DFS with lowpoint tracking (multigraph aware)."""
    disc = [-1] * g.n
    low = [0] * g.n
    bridges = 0
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]  # vertex, via edge, ptr
        while stack:
            v, via, ptr = stack.pop()
            if ptr == 0:
                disc[v] = low[v] = timer
                timer += 1
            if ptr < DEGREE:
                stack.append((v, via, ptr + 1))
                e = g.incidence[v][ptr]
                if e == via:
                    continue
                w = g.other_end(e, v)
                if disc[w] == -1:
                    stack.append((w, e, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                if via != -1:
                    u = g.other_end(via, v)
                    low[u] = min(low[u], low[v])
                    if low[v] > disc[u]:
                        bridges |= 1 << via
    return EdgeSet(g.m, bridges)


def _components_with_cycle(g: CubicGraph, removed: int) -> int:
    """Number of components containing a cycle once `removed` edges are gone."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edge_count = [0] * g.n
    for e, (u, v) in enumerate(g.edges):
        if (removed >> e) & 1:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    for e, (u, v) in enumerate(g.edges):
        if (removed >> e) & 1:
            continue
        edge_count[find(u)] += 1
    size = [0] * g.n
    for v in range(g.n):
        size[find(v)] += 1
    return sum(1 for v in range(g.n) if parent[v] == v and edge_count[v] >= size[v])


def cyclic_connectivity_at_least(g: CubicGraph, k: int) -> bool:
    """True iff no cut of fewer than k edges separates two cycle-bearing parts.

    Exhaustive over all edge subsets of size < k (intended for k <= 4).
    """
    if not 1 <= k <= 4:
        raise ValueError("k must be in 1..4")
    if not g.is_connected():
        raise Disconnected("cyclic connectivity needs a connected graph")
    for s in range(1, k):
        for subset in combinations(range(g.m), s):
            removed = 0
            for e in subset:
                removed |= 1 << e
            if _components_with_cycle(g, removed) >= 2:
                return False
    return True


def is_bipartite(g: CubicGraph) -> bool:
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for e in g.incidence[v]:
                w = g.other_end(e, v)
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _component_vertices(g: CubicGraph, start: int) -> list[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for e in g.incidence[v]:
            w = g.other_end(e, v)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return sorted(seen)


def _bfs_order(g: CubicGraph, comp: Sequence[int]) -> list[tuple[int, int]]:
    """(vertex, bfs-parent) pairs covering comp; parent -1 for the root."""
    order = [(comp[0], -1)]
    seen = {comp[0]}
    qi = 0
    while qi < len(order):
        v = order[qi][0]
        qi += 1
        for e in g.incidence[v]:
            w = g.other_end(e, v)
            if w not in seen:
                seen.add(w)
                order.append((w, v))
    return order


def _isomorphic_connected(g: CubicGraph, h: CubicGraph) -> bool:
    ga, ha = g.adjacency_counts(), h.adjacency_counts()
    order = _bfs_order(g, list(range(g.n)))
    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v, parent = order[pos]
        if parent == -1:
            candidates = range(h.n)
        else:
            pv = mapping[parent]
            candidates = [w for w in range(h.n) if ha[pv][w] and not used[w]]
        for w in candidates:
            if used[w]:
                continue
            row_v, row_w = ga[v], ha[w]
            ok = True
            for u2, pu in enumerate(mapping):
                if pu != -1 and row_v[u2] != row_w[pu]:
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(pos + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return extend(0)


def is_isomorphic(g: CubicGraph, h: CubicGraph) -> bool:
    """Exact isomorphism test by backtracking (intended for n <= 24)."""
    if g.n != h.n or g.m != h.m:
        return False
    if g.is_connected() != h.is_connected():
        return False
    if g.is_connected():
        return _isomorphic_connected(g, h)
    # disconnected: split into components and match them up by backtracking
    g_comps = _split_components(g)
    h_comps = _split_components(h)
    if sorted(c.n for c in g_comps) != sorted(c.n for c in h_comps):
        return False
    remaining = list(h_comps)

    def match(i: int) -> bool:
        if i == len(g_comps):
            return True
        for j, hc in enumerate(remaining):
            if hc is not None and _isomorphic_connected(g_comps[i], hc):
                remaining[j] = None
                if match(i + 1):
                    return True
                remaining[j] = hc
        return False

    return match(0)


def _split_components(g: CubicGraph) -> list[CubicGraph]:
    out = []
    seen: set[int] = set()
    for v in range(g.n):
        if v in seen:
            continue
        comp = _component_vertices(g, v)
        seen.update(comp)
        relabel = {old: new for new, old in enumerate(comp)}
        edges = [
            (relabel[a], relabel[b])
            for a, b in g.edges
            if a in relabel and b in relabel
        ]
        out.append(CubicGraph(len(comp), edges))
    return out
