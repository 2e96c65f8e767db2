"""Constructive covering machinery on 2-factors.

A *good triple* between two odd cycles of a 2-factor is a set of three
cross edges whose endpoints cut both cycles into three odd arcs; a pair of
cycles carrying one is a *good pair*.  When the odd cycles of a 2-factor can
be arranged into good pairs, four perfect matchings covering the whole edge
set can be written down directly - no search - and the same construction
generalizes to families of balanced matchings sharing a base matching.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .coverings import Covering, CoveringKind
from .errors import (
    ConstructionFailed,
    InvalidCertificate,
    InvalidFamily,
    MalformedCert,
    NotOddCycles,
)
from .graphs import (
    CubicGraph,
    EdgeSet,
    TwoFactor,
    is_perfect_matching,
    two_factor_of,
)


@dataclass(frozen=True)
class GoodPairCert:
    """Witness that two odd cycles of a 2-factor form a good pair.

    ``cross_edges`` lists the three edges in ascending index order;
    ``first_endpoints`` / ``second_endpoints`` give their endpoints on the
    two cycles in the same order, and ``arcs`` the arc lengths cut on each
    cycle between consecutive chosen vertices (all six odd).
    """

    cycle_ids: tuple[int, int]
    cross_edges: tuple[int, int, int]
    first_endpoints: tuple[int, int, int]
    second_endpoints: tuple[int, int, int]
    arcs: tuple[tuple[int, int, int], tuple[int, int, int]]

    def to_json(self) -> str:
        return json.dumps(
            {
                "cycles": list(self.cycle_ids),
                "cross_edges": list(self.cross_edges),
                "arcs": [list(a) for a in self.arcs],
            }
        )


def _cycle_positions(cycle: tuple[int, ...]) -> dict[int, int]:
    return {v: i for i, v in enumerate(cycle)}


def _arc_lengths(
    positions: list[int], length: int
) -> tuple[int, int, int] | None:
    a, b, c = sorted(positions)
    arcs = (b - a, c - b, length - c + a)
    return arcs if all(x % 2 for x in arcs) else None


def check_good_triple(
    g: CubicGraph,
    tf: TwoFactor,
    ci: int,
    cj: int,
    edges: tuple[int, int, int],
) -> GoodPairCert | None:
    """Certificate for a specific cross-edge triple, or None if arcs fail.

    Raises NotOddCycles / InvalidCertificate when the cycles are not both
    odd or the edges do not run between them.
    """
    if not (tf.is_odd(ci) and tf.is_odd(cj)):
        raise NotOddCycles("good triples need two odd cycles")
    ca, cb = tf.cycles[ci], tf.cycles[cj]
    pos_a, pos_b = _cycle_positions(ca), _cycle_positions(cb)
    if len(set(edges)) != 3:
        raise InvalidCertificate("need three distinct edges")
    ends_a: list[int] = []
    ends_b: list[int] = []
    for e in edges:
        u, v = g.endpoints(e)
        if u in pos_a and v in pos_b:
            ends_a.append(u)
            ends_b.append(v)
        elif v in pos_a and u in pos_b:
            ends_a.append(v)
            ends_b.append(u)
        else:
            raise InvalidCertificate(f"edge {e} does not join the two cycles")
    arcs_a = _arc_lengths([pos_a[v] for v in ends_a], len(ca))
    arcs_b = _arc_lengths([pos_b[v] for v in ends_b], len(cb))
    if arcs_a is None or arcs_b is None:
        return None
    ordered = tuple(sorted(edges))
    order = [edges.index(e) for e in ordered]
    return GoodPairCert(
        (ci, cj),
        ordered,
        tuple(ends_a[i] for i in order),
        tuple(ends_b[i] for i in order),
        (arcs_a, arcs_b),
    )


def find_good_triple(
    g: CubicGraph, tf: TwoFactor, ci: int, cj: int
) -> GoodPairCert | None:
    """First good triple between two odd cycles, scanning cross-edge triples
    in ascending edge-index order."""
    if not (tf.is_odd(ci) and tf.is_odd(cj)):
        raise NotOddCycles("good triples need two odd cycles")
    in_a = set(tf.cycles[ci])
    in_b = set(tf.cycles[cj])
    cross = [
        e
        for e, (u, v) in enumerate(g.edges)
        if (u in in_a and v in in_b) or (v in in_a and u in in_b)
    ]
    for trio in combinations(cross, 3):
        cert = check_good_triple(g, tf, ci, cj, trio)
        if cert is not None:
            return cert
    return None


def pair_odd_cycles(
    g: CubicGraph, tf: TwoFactor
) -> list[tuple[int, int]] | None:
    """Arrange the odd cycles of a 2-factor into good pairs, or None.

    Backtracking over perfect pairings of the odd cycle ids; even cycles
    stay unpaired.
    """
    odd = list(tf.odd_cycle_ids)
    cache: dict[tuple[int, int], bool] = {}

    def good(i: int, j: int) -> bool:
        key = (i, j)
        if key not in cache:
            cache[key] = find_good_triple(g, tf, i, j) is not None
        return cache[key]

    pairing: list[tuple[int, int]] = []

    def solve(rest: list[int]) -> bool:
        if not rest:
            return True
        first, tail = rest[0], rest[1:]
        for pos, j in enumerate(tail):
            if good(first, j):
                pairing.append((first, j))
                if solve(tail[:pos] + tail[pos + 1 :]):
                    return True
                pairing.pop()
        return False

    if solve(odd):
        return pairing
    return None


def _near_matching(tf: TwoFactor, cycle_id: int, skip_vertex: int) -> list[int]:
    """Edge ids of the unique perfect matching of a cycle minus one vertex."""
    cyc = tf.cycles[cycle_id]
    edges = tf.cycle_edges[cycle_id]
    length = len(cyc)
    t = cyc.index(skip_vertex)
    return [edges[(t + off) % length] for off in range(1, length - 1, 2)]


def four_covering_from_good_pairs(
    g: CubicGraph,
    tf: TwoFactor,
    pairing: list[tuple[int, int]],
    certs: list[GoodPairCert],
) -> Covering:
    """The direct 4-covering built from a good-pair arrangement.

    One matching is the complement of the 2-factor; each of the other three
    takes one cross edge per pair plus the forced near-matchings of the two
    punctured cycles, and the even cycles contribute one alternating class
    to the second matching and the complementary class to the last two.
    """
    paired = [c for pair in pairing for c in pair]
    if sorted(paired) != sorted(tf.odd_cycle_ids):
        raise InvalidCertificate("pairing must cover each odd cycle exactly once")
    if len(certs) != len(pairing):
        raise InvalidCertificate("need one certificate per pair")
    rechecked = []
    for pair, cert in zip(pairing, certs):
        if tuple(cert.cycle_ids) != tuple(pair):
            raise InvalidCertificate("certificate does not match its pair")
        again = check_good_triple(g, tf, pair[0], pair[1], cert.cross_edges)
        if again is None:
            raise InvalidCertificate("certificate arcs are not all odd")
        rechecked.append(again)

    base = [tf.matching.bits, 0, 0, 0]
    for cycle_id in tf.even_cycle_ids:
        edges = tf.cycle_edges[cycle_id]
        class_a = [edges[i] for i in range(0, len(edges), 2)]
        class_b = [edges[i] for i in range(1, len(edges), 2)]
        if min(class_b) < min(class_a):
            class_a, class_b = class_b, class_a
        for e in class_a:
            base[1] |= 1 << e
        for e in class_b:
            base[2] |= 1 << e
            base[3] |= 1 << e
    for pair, cert in zip(pairing, rechecked):
        for j in range(3):
            bits = 1 << cert.cross_edges[j]
            for e in _near_matching(tf, pair[0], cert.first_endpoints[j]):
                bits |= 1 << e
            for e in _near_matching(tf, pair[1], cert.second_endpoints[j]):
                bits |= 1 << e
            base[1 + j] |= bits

    matchings = [EdgeSet(g.m, bits) for bits in base]
    union = 0
    for es in matchings:
        if not is_perfect_matching(g, es):
            raise ConstructionFailed("constructed member is not a perfect matching")
        union |= es.bits
    if union != (1 << g.m) - 1:
        raise ConstructionFailed("constructed members miss an edge")
    for j in (1, 2, 3):
        expected = {cert.cross_edges[j - 1] for cert in rechecked}
        if set(matchings[0] & matchings[j]) != expected:
            raise ConstructionFailed("cross-edge intersections are off")
    return Covering.from_matchings(g, matchings, CoveringKind.PLAIN)


@dataclass(frozen=True)
class FamilyCert:
    """Disjoint balanced matchings A, B, C (and maybe D) under a base matching.

    Each part must arise as witness ∩ base for its witness matching; three
    parts make a *good family* candidate, four a *nice family* candidate.
    """

    base: EdgeSet
    parts: tuple[EdgeSet, ...]
    witnesses: tuple[EdgeSet, ...]


@dataclass(frozen=True)
class FamilyCheck:
    valid: bool
    violated: str | None = None


def _family_shape(g: CubicGraph, cert: FamilyCert) -> None:
    if len(cert.parts) not in (3, 4):
        raise MalformedCert("need exactly 3 or 4 parts")
    if len(cert.witnesses) != len(cert.parts):
        raise MalformedCert("need one witness per part")
    for es in (cert.base, *cert.parts, *cert.witnesses):
        if es.width != g.m:
            raise MalformedCert("edge set width does not match the graph")
    if not is_perfect_matching(g, cert.base):
        raise MalformedCert("base is not a perfect matching")


def verify_family(g: CubicGraph, cert: FamilyCert) -> FamilyCheck:
    """Check the good-family (3 parts) or nice-family (4 parts) conditions.

    Violations: "disjointness" (parts overlap or escape the base),
    "witness" (witness not a matching with witness ∩ base = part),
    "condition (i)" (odd cycles: one vertex per part, odd arcs),
    "condition (ii)" (even cycles: fewer than two parts avoid the cycle).
    """
    _family_shape(g, cert)
    nice = len(cert.parts) == 4
    seen = 0
    for part in cert.parts:
        if part.bits & ~cert.base.bits or part.bits & seen:
            return FamilyCheck(False, "disjointness")
        seen |= part.bits
    for part, wit in zip(cert.parts, cert.witnesses):
        if not is_perfect_matching(g, wit) or (wit & cert.base) != part:
            return FamilyCheck(False, "witness")
    tf = two_factor_of(g, cert.base)
    for cid, cyc in enumerate(tf.cycles):
        on_cycle = set(cyc)
        marked: list[list[int]] = []
        for part in cert.parts:
            hits = []
            for e in part:
                hits += [v for v in g.endpoints(e) if v in on_cycle]
            marked.append(hits)
        if tf.is_odd(cid):
            if any(len(hits) != 1 for hits in marked):
                return FamilyCheck(False, "condition (i)")
            pos = sorted(cyc.index(hits[0]) for hits in marked)
            arcs = [b - a for a, b in zip(pos, pos[1:])]
            arcs.append(len(cyc) - pos[-1] + pos[0])
            odd_arcs = sum(1 for x in arcs if x % 2)
            if (not nice and odd_arcs != 3) or (nice and odd_arcs < 2):
                return FamilyCheck(False, "condition (i)")
        else:
            untouched = sum(1 for hits in marked if not hits)
            if untouched < 2:
                return FamilyCheck(False, "condition (ii)")
    return FamilyCheck(True)


def covering_from_family(g: CubicGraph, cert: FamilyCert) -> Covering:
    """Covering guaranteed by a verified family: size 4 (good) or 5 (nice).

    On each even cycle of the 2-factor, the two lowest-indexed avoiding
    witnesses swap in complementary alternating classes (the class holding
    the lowest-indexed cycle edge goes to the lower witness); odd cycles are
    already covered by the forced near-matchings.
    """
    check = verify_family(g, cert)
    if not check.valid:
        raise InvalidFamily(f"family violates {check.violated}")
    witnesses = [w.bits for w in cert.witnesses]
    tf = two_factor_of(g, cert.base)
    for cid in tf.even_cycle_ids:
        cyc = tf.cycles[cid]
        on_cycle = set(cyc)
        eligible = []
        for k, part in enumerate(cert.parts):
            touched = any(
                v in on_cycle for e in part for v in g.endpoints(e)
            )
            if not touched:
                eligible.append(k)
        x, y = eligible[0], eligible[1]
        edges = tf.cycle_edges[cid]
        cycle_bits = 0
        for e in edges:
            cycle_bits |= 1 << e
        class_a = [edges[i] for i in range(0, len(edges), 2)]
        class_b = [edges[i] for i in range(1, len(edges), 2)]
        if min(class_b) < min(class_a):
            class_a, class_b = class_b, class_a
        bits_a = 0
        for e in class_a:
            bits_a |= 1 << e
        witnesses[x] = (witnesses[x] & ~cycle_bits) | bits_a
        witnesses[y] = (witnesses[y] & ~cycle_bits) | (cycle_bits ^ bits_a)
    matchings = [cert.base] + [EdgeSet(g.m, bits) for bits in witnesses]
    union = 0
    for es in matchings:
        if not is_perfect_matching(g, es):
            raise ConstructionFailed("adjusted witness is not a perfect matching")
        union |= es.bits
    if union != (1 << g.m) - 1:
        raise ConstructionFailed("family covering misses an edge")
    return Covering.from_matchings(g, matchings, CoveringKind.PLAIN)
