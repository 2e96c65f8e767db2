"""Complete perfect-matching enumeration and pairwise matching statistics."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CatalogMismatch, FewerThanTwoMatchings, TooManyMatchings
from .graphs import CubicGraph, EdgeSet


@dataclass(frozen=True)
class PMCatalog:
    """The complete, canonically ordered list of perfect matchings of a graph.

    Matchings are sorted by ascending bit pattern, so catalog indices are
    deterministic across runs.
    """

    graph: CubicGraph
    matchings: tuple[EdgeSet, ...]

    @property
    def count(self) -> int:
        return len(self.matchings)

    def masks(self) -> list[int]:
        return [m.bits for m in self.matchings]

    def index_of(self, pm: EdgeSet) -> int:
        """Catalog index of a matching (ValueError if absent)."""
        return self.matchings.index(pm)


def check_catalog(g: CubicGraph, catalog: PMCatalog) -> None:
    if catalog.graph != g:
        raise CatalogMismatch("catalog was built for a different graph")


def enumerate_perfect_matchings(
    g: CubicGraph, max_matchings: int | None = None
) -> PMCatalog:
    """All perfect matchings, each exactly once, canonically sorted.

    Backtracking: repeatedly saturate the lowest-indexed free vertex,
    branching over its incident edges in ascending index order.
    """
    full = (1 << g.n) - 1
    incidence = g.incidence
    edges = g.edges
    found: list[int] = []

    def extend(saturated: int, chosen: int) -> None:
        if saturated == full:
            found.append(chosen)
            if max_matchings is not None and len(found) > max_matchings:
                raise TooManyMatchings(
                    f"more than {max_matchings} perfect matchings"
                )
            return
        free = ~saturated & full
        v = (free & -free).bit_length() - 1
        for e in incidence[v]:
            a, b = edges[e]
            w = b if a == v else a
            if not (saturated >> w) & 1:
                extend(saturated | (1 << v) | (1 << w), chosen | (1 << e))

    extend(0, 0)
    found.sort()
    return PMCatalog(g, tuple(EdgeSet(g.m, bits) for bits in found))


def edges_missing_from_all_pms(g: CubicGraph, catalog: PMCatalog) -> EdgeSet:
    """Complement of the union of all catalog members."""
    check_catalog(g, catalog)
    union = 0
    for pm in catalog.matchings:
        union |= pm.bits
    return EdgeSet(g.m, union ^ ((1 << g.m) - 1))


@dataclass(frozen=True)
class PairStats:
    """Extremes of |Mi ∩ Mj| and |Mi ∪ Mj| over unordered catalog pairs."""

    min_intersection: int
    argmin: tuple[int, int]
    max_union: int
    argmax: tuple[int, int]


def pm_pair_stats(catalog: PMCatalog) -> PairStats:
    """Exact pair extremes with lexicographically smallest witness pairs."""
    if catalog.count < 2:
        raise FewerThanTwoMatchings("need at least two perfect matchings")
    masks = catalog.masks()
    best_int = None
    best_int_pair = (0, 1)
    best_uni = -1
    best_uni_pair = (0, 1)
    for i in range(len(masks)):
        mi = masks[i]
        for j in range(i + 1, len(masks)):
            inter = (mi & masks[j]).bit_count()
            if best_int is None or inter < best_int:
                best_int = inter
                best_int_pair = (i, j)
            uni = (mi | masks[j]).bit_count()
            if uni > best_uni:
                best_uni = uni
                best_uni_pair = (i, j)
    return PairStats(best_int, best_int_pair, best_uni, best_uni_pair)


def matching_line(g: CubicGraph, pm: EdgeSet) -> str:
    """Render a matching as sorted "u-v" pairs, e.g. "0-10 1-5 ..."."""
    pairs = sorted(g.endpoints(e) for e in pm)
    return " ".join(f"{u}-{v}" for u, v in pairs)
