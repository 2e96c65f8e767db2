"""Exact solvers and verifiers for perfect matching coverings.

Everything runs over a complete ``PMCatalog``: the covering number tau
(branch-and-bound set cover), plain k-coverings, odd and even coverings
(GF(2) feasibility plus subset search), Fulkerson coverings, Fan-Raspaud
triples and the multiplicity structure of 4-coverings.  Searches are
deterministic and always break ties toward the lexicographically smallest
witness by sorted catalog indices.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum

from .errors import (
    CoveringError,
    DeadlineExceeded,
    InvalidParams,
    NotACovering,
    NotFRTriple,
    NotOdd,
    NotSize4,
)
from .gf2 import gf2_in_span
from .graphs import (
    CubicGraph,
    EdgeSet,
    cyclic_connectivity_at_least,
    find_bridges,
    is_perfect_matching,
)
from .matchings import (
    PMCatalog,
    check_catalog,
    enumerate_perfect_matchings,
    pm_pair_stats,
)


class CoveringKind(Enum):
    PLAIN = "plain"
    ODD = "odd"
    EVEN = "even"
    FULKERSON = "fulkerson"


class _Ticker:
    """Cooperative deadline checks, amortized over search nodes."""

    __slots__ = ("deadline", "count")

    def __init__(self, deadline: float | None):
        self.deadline = deadline
        self.count = 0

    def tick(self) -> None:
        if self.deadline is None:
            return
        self.count += 1
        if self.count & 1023 == 0 and time.monotonic() > self.deadline:
            raise DeadlineExceeded


@dataclass(frozen=True)
class Covering:
    """A multiset of perfect matchings tagged by covering kind.

    ``members`` holds sorted catalog indices (with multiplicities) whenever
    the covering is backed by a catalog; coverings produced constructively
    (without enumerating all matchings first) carry the matchings alone.
    """

    graph: CubicGraph
    matchings: tuple[EdgeSet, ...]
    kind: CoveringKind
    catalog: PMCatalog | None = None
    members: tuple[int, ...] | None = None

    @classmethod
    def from_indices(
        cls, catalog: PMCatalog, indices, kind: CoveringKind
    ) -> "Covering":
        members = tuple(sorted(indices))
        matchings = tuple(catalog.matchings[i] for i in members)
        cov = cls(catalog.graph, matchings, kind, catalog, members)
        cov.validate()
        return cov

    @classmethod
    def from_matchings(
        cls, graph: CubicGraph, matchings, kind: CoveringKind
    ) -> "Covering":
        ordered = tuple(sorted(matchings, key=lambda s: s.bits))
        cov = cls(graph, ordered, kind)
        cov.validate()
        return cov

    @property
    def size(self) -> int:
        return len(self.matchings)

    def multiplicities(self) -> tuple[int, ...]:
        counts = [0] * self.graph.m
        for pm in self.matchings:
            for e in pm:
                counts[e] += 1
        return tuple(counts)

    def union(self) -> EdgeSet:
        bits = 0
        for pm in self.matchings:
            bits |= pm.bits
        return EdgeSet(self.graph.m, bits)

    def validate(self) -> None:
        for pm in self.matchings:
            if not is_perfect_matching(self.graph, pm):
                raise NotACovering("member is not a perfect matching")
        mults = self.multiplicities()
        if self.kind is CoveringKind.PLAIN:
            if min(mults) < 1:
                raise NotACovering("plain covering leaves an edge uncovered")
        elif self.kind is CoveringKind.ODD:
            if any(c % 2 == 0 for c in mults):
                raise NotOdd("some edge is covered an even number of times")
        elif self.kind is CoveringKind.EVEN:
            if any(c % 2 == 1 or c < 2 for c in mults):
                raise CoveringError("even covering needs even multiplicity >= 2")
        elif self.kind is CoveringKind.FULKERSON:
            if self.size != 6 or any(c != 2 for c in mults):
                raise CoveringError("Fulkerson covering must cover twice with 6")


@dataclass(frozen=True)
class TauResult:
    status: str  # "ok" | "exceeds" | "infeasible"
    cap: int
    tau: int | None = None
    witness: Covering | None = None


@dataclass(frozen=True)
class OddCoverResult:
    status: str  # "ok" | "none_exists" | "exceeds"
    cap: int
    size: int | None = None
    witness: Covering | None = None
    count_minimum: int | None = None


@dataclass(frozen=True)
class MultiplicityReport:
    vector: tuple[int, ...]
    doubly_covered: EdgeSet


@dataclass(frozen=True)
class FRStructure:
    """Edge partition induced by a Fan-Raspaud triple.

    ``uncovered`` / ``single`` / ``double`` collect the edges lying in 0, 1
    and 2 of the three matchings; uncovered and double edges alternate along
    vertex-disjoint even cycles, returned as vertex sequences.
    """

    uncovered: EdgeSet
    single: EdgeSet
    double: EdgeSet
    alternating_cycles: tuple[tuple[int, ...], ...]


def _by_edge(masks: list[int], m: int) -> list[list[int]]:
    lists: list[list[int]] = [[] for _ in range(m)]
    for i, mask in enumerate(masks):
        bits = mask
        while bits:
            low = bits & -bits
            lists[low.bit_length() - 1].append(i)
            bits ^= low
    return lists


def _min_cover_exists(
    masks: list[int],
    by_edge: list[list[int]],
    uncovered: int,
    slots: int,
    lo: int,
    excluded: int,
    half: int,
    ticker: _Ticker,
) -> bool:
    """Can <= slots distinct members with index >= lo cover `uncovered`?

    Branch on the uncovered edge with the fewest usable members; members
    skipped at a branch point are excluded from the whole subtree.
    """
    if uncovered == 0:
        return True
    if slots == 0 or uncovered.bit_count() > slots * half:
        return False
    ticker.tick()
    best: list[int] | None = None
    bits = uncovered
    while bits:
        low = bits & -bits
        bits ^= low
        cands = [
            i
            for i in by_edge[low.bit_length() - 1]
            if i >= lo and not (excluded >> i) & 1
        ]
        if not cands:
            return False
        if best is None or len(cands) < len(best):
            best = cands
            if len(best) == 1:
                break
    assert best is not None
    ex = excluded
    for i in best:
        if _min_cover_exists(
            masks, by_edge, uncovered & ~masks[i], slots - 1, lo, ex, half, ticker
        ):
            return True
        ex |= 1 << i
    return False


def _lex_cover(
    masks: list[int],
    by_edge: list[list[int]],
    full: int,
    k: int,
    half: int,
    ticker: _Ticker,
) -> tuple[int, ...] | None:
    """Lexicographically smallest set of k distinct members covering full."""
    count = len(masks)
    if count < k:
        return None
    if not _min_cover_exists(masks, by_edge, full, k, 0, 0, half, ticker):
        return None
    chosen: list[int] = []
    uncovered = full
    lo = 0
    for slot in range(k):
        remaining = k - slot - 1
        for cand in range(lo, count - remaining):
            rest = uncovered & ~masks[cand]
            if _min_cover_exists(
                masks, by_edge, rest, remaining, cand + 1, 0, half, ticker
            ):
                chosen.append(cand)
                uncovered = rest
                lo = cand + 1
                break
        else:
            raise AssertionError("lex refinement lost a feasible cover")
    return tuple(chosen)


def covering_number(
    g: CubicGraph,
    catalog: PMCatalog,
    cap: int = 6,
    deadline: float | None = None,
) -> TauResult:
    """Exact minimum number of catalog members whose union is E(g).

    Returns infeasible when some edge lies in no perfect matching (bridged
    graphs), and exceeds when the minimum is larger than ``cap``.
    """
    check_catalog(g, catalog)
    if cap < 3:
        raise InvalidParams("cap must be at least 3")
    ticker = _Ticker(deadline)
    masks = catalog.masks()
    full = (1 << g.m) - 1
    union = 0
    for mask in masks:
        union |= mask
    if union != full:
        return TauResult("infeasible", cap)
    by_edge = _by_edge(masks, g.m)
    half = g.n // 2
    for k in range(3, cap + 1):
        if _min_cover_exists(masks, by_edge, full, k, 0, 0, half, ticker):
            witness_idx = _lex_cover(masks, by_edge, full, k, half, ticker)
            witness = Covering.from_indices(catalog, witness_idx, CoveringKind.PLAIN)
            return TauResult("ok", cap, k, witness)
    return TauResult("exceeds", cap)


def find_k_covering(
    g: CubicGraph,
    catalog: PMCatalog,
    k: int,
    deadline: float | None = None,
) -> Covering | None:
    """Some plain covering of size exactly k (lex smallest), or None."""
    check_catalog(g, catalog)
    if k < 3:
        raise InvalidParams("k must be at least 3")
    ticker = _Ticker(deadline)
    masks = catalog.masks()
    full = (1 << g.m) - 1
    chosen = _lex_cover(masks, _by_edge(masks, g.m), full, k, g.n // 2, ticker)
    if chosen is None:
        return None
    return Covering.from_indices(catalog, chosen, CoveringKind.PLAIN)


def has_k_covering(
    g: CubicGraph,
    catalog: PMCatalog,
    k: int,
    deadline: float | None = None,
) -> bool:
    """Existence probe for a plain covering of size k (no witness)."""
    check_catalog(g, catalog)
    masks = catalog.masks()
    full = (1 << g.m) - 1
    union = 0
    for mask in masks:
        union |= mask
    if union != full:
        return False
    return _min_cover_exists(
        masks, _by_edge(masks, g.m), full, k, 0, 0, g.n // 2, _Ticker(deadline)
    )


def covering_multiplicities(cov: Covering) -> MultiplicityReport:
    """Per-edge multiplicities of a plain 4-covering.

    In a cubic graph every 4-covering covers each edge once or twice and the
    doubly covered edges form a perfect matching; both facts are asserted.
    """
    if cov.size != 4:
        raise NotSize4(f"need a 4-covering, got size {cov.size}")
    mults = cov.multiplicities()
    if min(mults) < 1:
        raise NotACovering("members do not cover every edge")
    assert set(mults) <= {1, 2}, "4-covering multiplicity outside {1,2}"
    doubly = EdgeSet.from_indices(
        cov.graph.m, (e for e, c in enumerate(mults) if c == 2)
    )
    assert is_perfect_matching(cov.graph, doubly), "doubly covered set not a PM"
    return MultiplicityReport(mults, doubly)


def find_fr_triples(
    catalog: PMCatalog, limit: int | None = None
) -> list[tuple[int, int, int]]:
    """Index triples with empty three-way intersection, in lex order."""
    masks = catalog.masks()
    out: list[tuple[int, int, int]] = []
    count = len(masks)
    for i in range(count):
        for j in range(i + 1, count):
            ij = masks[i] & masks[j]
            for k in range(j + 1, count):
                if ij & masks[k] == 0:
                    out.append((i, j, k))
                    if limit is not None and len(out) >= limit:
                        return out
    return out


def fr_structure(
    g: CubicGraph, catalog: PMCatalog, triple: tuple[int, int, int]
) -> FRStructure:
    """T0/T1/T2 partition of an FR-triple, with its alternating even cycles."""
    check_catalog(g, catalog)
    m1, m2, m3 = (catalog.masks()[i] for i in triple)
    if m1 & m2 & m3:
        raise NotFRTriple("matchings have a common edge")
    full = (1 << g.m) - 1
    double = (m1 & m2) | (m1 & m3) | (m2 & m3)
    covered = m1 | m2 | m3
    single = covered & ~double
    uncovered = full & ~covered
    cycles = _trace_alternating_cycles(g, uncovered, double)
    return FRStructure(
        EdgeSet(g.m, uncovered),
        EdgeSet(g.m, single),
        EdgeSet(g.m, double),
        cycles,
    )


def _trace_alternating_cycles(
    g: CubicGraph, uncovered: int, double: int
) -> tuple[tuple[int, ...], ...]:
    active = uncovered | double
    deg = [0] * g.n
    inc: list[list[int]] = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        if (active >> e) & 1:
            deg[u] += 1
            deg[v] += 1
            inc[u].append(e)
            inc[v].append(e)
    assert all(d in (0, 2) for d in deg), "T0 ∪ T2 is not 2-regular where present"
    seen_edge = 0
    cycles = []
    for start in range(g.n):
        if deg[start] != 2 or any((seen_edge >> e) & 1 for e in inc[start]):
            continue
        verts = [start]
        edge = min(inc[start])
        path_edges = [edge]
        seen_edge |= 1 << edge
        v = g.other_end(edge, start)
        while v != start:
            verts.append(v)
            nxt = inc[v][0] if inc[v][1] == edge else inc[v][1]
            edge = nxt
            path_edges.append(edge)
            seen_edge |= 1 << edge
            v = g.other_end(edge, v)
        assert len(verts) % 2 == 0, "alternating cycle of odd length"
        for a, b in zip(path_edges, path_edges[1:] + path_edges[:1]):
            in_a, in_b = (uncovered >> a) & 1, (uncovered >> b) & 1
            assert in_a != in_b, "T0 and T2 edges fail to alternate"
        cycles.append(tuple(verts))
    return tuple(cycles)


def odd_covering_number(
    g: CubicGraph,
    catalog: PMCatalog,
    cap: int = 7,
    deadline: float | None = None,
    count_size_limit: int = 7,
    count_catalog_limit: int = 64,
) -> OddCoverResult:
    """Minimum size of a set of distinct matchings covering each edge oddly.

    Feasibility is settled first over GF(2): an odd covering exists iff the
    all-ones vector lies in the span of the matching incidence vectors.  The
    search then scans odd sizes; a subset qualifies iff the XOR of its
    members equals all-ones.  The number of minimum-size odd coverings is
    reported when the instance is small enough (size and catalog limits).
    """
    check_catalog(g, catalog)
    ticker = _Ticker(deadline)
    masks = catalog.masks()
    full = (1 << g.m) - 1
    if not gf2_in_span(masks, full):
        return OddCoverResult("none_exists", cap)
    index_of = {mask: i for i, mask in enumerate(masks)}
    count = len(masks)
    for size in range(3, cap + 1, 2):
        if size > count:
            break
        counting = size <= count_size_limit and count <= count_catalog_limit
        witness, found = _odd_subsets(
            masks, index_of, full, size, counting, ticker
        )
        if witness is not None:
            cov = Covering.from_indices(catalog, witness, CoveringKind.ODD)
            return OddCoverResult(
                "ok", cap, size, cov, found if counting else None
            )
    return OddCoverResult("exceeds", cap)


def _odd_subsets(
    masks: list[int],
    index_of: dict[int, int],
    target: int,
    size: int,
    count_all: bool,
    ticker: _Ticker,
) -> tuple[tuple[int, ...] | None, int]:
    """First (lex) size-subset whose XOR equals target, plus a full count.

    Enumerates (size-1)-prefixes in lex order; the last member is forced to
    the unique matching completing the XOR, so each subset is seen once.
    """
    count = len(masks)
    witness: tuple[int, ...] | None = None
    hits = 0
    prefix: list[int] = []

    def rec(start: int, depth: int, acc: int) -> bool:
        nonlocal witness, hits
        ticker.tick()
        if depth == size - 1:
            last = index_of.get(acc ^ target)
            if last is not None and (not prefix or last > prefix[-1]):
                if witness is None:
                    witness = tuple(prefix) + (last,)
                    if not count_all:
                        return True
                hits += 1
            return False
        for i in range(start, count - (size - 1 - depth)):
            prefix.append(i)
            if rec(i + 1, depth + 1, acc ^ masks[i]):
                return True
            prefix.pop()
        return False

    rec(0, 0, 0)
    return witness, hits


def odd_covering_from_four_covering(cov4: Covering) -> Covering:
    """Adjoin the doubly covered matching to a 4-covering: an odd 5-covering."""
    report = covering_multiplicities(cov4)
    extra = report.doubly_covered
    mults = [c + (1 if e in extra else 0) for e, c in enumerate(report.vector)]
    assert set(mults) <= {1, 3}, "derived covering not odd"
    if cov4.catalog is not None and cov4.members is not None:
        idx = cov4.catalog.index_of(extra)
        return Covering.from_indices(
            cov4.catalog, cov4.members + (idx,), CoveringKind.ODD
        )
    return Covering.from_matchings(
        cov4.graph, cov4.matchings + (extra,), CoveringKind.ODD
    )


def double_covering(cov: Covering) -> Covering:
    """Take every member twice: an even covering of twice the size."""
    if cov.kind is not CoveringKind.PLAIN:
        raise NotACovering("doubling expects a plain covering")
    if cov.catalog is not None and cov.members is not None:
        return Covering.from_indices(
            cov.catalog, cov.members * 2, CoveringKind.EVEN
        )
    return Covering.from_matchings(
        cov.graph, cov.matchings * 2, CoveringKind.EVEN
    )


def even_covering_from_four_covering(cov4: Covering) -> Covering:
    """Double a 4-covering: a size-8 even covering with multiplicities 2, 4."""
    if cov4.size != 4:
        raise NotSize4(f"need a 4-covering, got size {cov4.size}")
    covering_multiplicities(cov4)  # validates plain 4-covering
    doubled = double_covering(cov4)
    assert set(doubled.multiplicities()) <= {2, 4}
    return doubled


def fulkerson_covering(
    g: CubicGraph,
    catalog: PMCatalog,
    deadline: float | None = None,
) -> Covering | None:
    """Six members (each used at most twice) covering every edge exactly twice.

    Exhaustive search; ``None`` is returned only when no Fulkerson covering
    exists in the catalog, i.e. a counterexample to the double-cover
    conjecture for this graph.
    """
    check_catalog(g, catalog)
    ticker = _Ticker(deadline)
    masks = catalog.masks()
    count = len(masks)
    m = g.m
    half = g.n // 2
    # suffix_avail[e][i] = how many members with index >= i contain edge e
    suffix = [[0] * (count + 1) for _ in range(m)]
    for i in range(count - 1, -1, -1):
        mask = masks[i]
        for e in range(m):
            suffix[e][i] = suffix[e][i + 1] + ((mask >> e) & 1)

    mult = [0] * m
    chosen: list[int] = []

    def dfs(lo: int, slots: int, saturated: int, deficit_total: int) -> bool:
        if slots == 0:
            return deficit_total == 0
        if deficit_total > slots * half:
            return False
        ticker.tick()
        for e in range(m):
            if mult[e] < 2 and 2 * suffix[e][lo] < 2 - mult[e]:
                return False
        for cand in range(lo, count):
            if masks[cand] & saturated:
                continue
            if chosen.count(cand) >= 2:
                continue
            new_sat = saturated
            bits = masks[cand]
            while bits:
                low = bits & -bits
                bits ^= low
                e = low.bit_length() - 1
                mult[e] += 1
                if mult[e] == 2:
                    new_sat |= low
            chosen.append(cand)
            if dfs(cand, slots - 1, new_sat, deficit_total - half):
                return True
            chosen.pop()
            bits = masks[cand]
            while bits:
                low = bits & -bits
                bits ^= low
                mult[low.bit_length() - 1] -= 1
            prev = cand
        return False

    if dfs(0, 6, 0, 2 * m):
        return Covering.from_indices(catalog, chosen, CoveringKind.FULKERSON)
    return None


def reduce_odd_covering(cov: Covering) -> Covering:
    """Strip duplicate pairs from an odd multiset covering.

    Removing two copies of the same matching preserves parity; a pair is
    removed only when every one of its edges stays covered, scanning
    duplicates in ascending order until no pair is removable.
    """
    mults = cov.multiplicities()
    if any(c % 2 == 0 for c in mults):
        raise NotOdd("input does not cover every edge an odd number of times")
    if cov.catalog is not None and cov.members is not None:
        keyed = list(cov.members)
        lookup = cov.catalog.matchings
    else:
        keyed = [pm.bits for pm in cov.matchings]
        lookup = None
    counts = list(cov.multiplicities())
    changed = True
    while changed:
        changed = False
        for key in sorted(set(keyed)):
            if keyed.count(key) < 2:
                continue
            pm = lookup[key] if lookup is not None else EdgeSet(cov.graph.m, key)
            if all(counts[e] >= 3 for e in pm):
                keyed.remove(key)
                keyed.remove(key)
                for e in pm:
                    counts[e] -= 2
                changed = True
                break
    if cov.catalog is not None and cov.members is not None:
        return Covering.from_indices(cov.catalog, keyed, CoveringKind.ODD)
    return Covering.from_matchings(
        cov.graph, [EdgeSet(cov.graph.m, k) for k in keyed], CoveringKind.ODD
    )


@dataclass(frozen=True)
class ConjectureReport:
    berge_5: bool
    fulkerson: bool
    fr_triple: bool
    k_disjoint_intersection: int | None


def check_conjectures(
    g: CubicGraph,
    catalog: PMCatalog,
    deadline: float | None = None,
) -> ConjectureReport:
    """Decide the covering conjectures exactly at this instance."""
    check_catalog(g, catalog)
    berge = has_k_covering(g, catalog, 5, deadline)
    fulkerson = fulkerson_covering(g, catalog, deadline) is not None
    fr = bool(find_fr_triples(catalog, limit=1))
    return ConjectureReport(
        berge,
        fulkerson,
        fr,
        _smallest_empty_intersection(catalog.masks(), _Ticker(deadline)),
    )


def _smallest_empty_intersection(
    masks: list[int], ticker: _Ticker
) -> int | None:
    """Smallest k such that k distinct members have empty intersection."""
    count = len(masks)
    if count == 0:
        return None
    level = {}
    for i, mask in enumerate(masks):
        if mask not in level or level[mask] > i:
            level[mask] = i
    k = 1
    while level and k < count:
        nxt: dict[int, int] = {}
        for mask, last in level.items():
            for j in range(last + 1, count):
                ticker.tick()
                nm = mask & masks[j]
                if nm == 0:
                    return k + 1
                if nm not in nxt or nxt[nm] > j:
                    nxt[nm] = j
        level = nxt
        k += 1
    return None


REPORT_FIELDS = (
    "n", "m", "pm_count", "tau", "tau_cap", "tau_odd", "tau_odd_count",
    "fulkerson", "berge5", "fr_triple", "b", "max_two_pm_union",
    "bridges", "cyclically4ec",
)


def analyze_graph(
    g: CubicGraph,
    cap: int = 6,
    odd_cap: int = 7,
    max_matchings: int | None = None,
    deadline: float | None = None,
) -> tuple[dict, str]:
    """Full per-graph report as a JSON-ready dict, plus a status string.

    Status is "ok", "infeasible" (some edge lies in no perfect matching) or
    "timeout"; fields not reached before a timeout stay None, never guessed.
    """
    metrics: dict = {key: None for key in REPORT_FIELDS}
    metrics["n"], metrics["m"] = g.n, g.m
    metrics["tau_cap"] = cap
    status = "ok"
    try:
        metrics["bridges"] = len(find_bridges(g))
        if g.is_connected():
            metrics["cyclically4ec"] = cyclic_connectivity_at_least(g, 4)
        catalog = enumerate_perfect_matchings(g, max_matchings)
        metrics["pm_count"] = catalog.count
        if catalog.count >= 2:
            stats = pm_pair_stats(catalog)
            metrics["b"] = stats.min_intersection
            metrics["max_two_pm_union"] = stats.max_union
        tau = covering_number(g, catalog, cap, deadline)
        if tau.status == "infeasible":
            status = "infeasible"
        elif tau.status == "ok":
            metrics["tau"] = tau.tau
        odd = odd_covering_number(g, catalog, odd_cap, deadline)
        if odd.status == "ok":
            metrics["tau_odd"] = odd.size
            metrics["tau_odd_count"] = odd.count_minimum
        elif odd.status == "none_exists":
            metrics["tau_odd_count"] = 0
        if status == "infeasible":
            metrics["berge5"] = False
        elif metrics["tau"] is not None:
            metrics["berge5"] = metrics["tau"] <= 5
        elif cap >= 5:
            metrics["berge5"] = False
        else:
            metrics["berge5"] = has_k_covering(g, catalog, 5, deadline)
        metrics["fr_triple"] = bool(find_fr_triples(catalog, limit=1))
        metrics["fulkerson"] = fulkerson_covering(g, catalog, deadline) is not None
    except DeadlineExceeded:
        status = "timeout"
    return metrics, status
