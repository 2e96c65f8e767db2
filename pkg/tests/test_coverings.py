import math
from itertools import combinations

import pytest

from pmcover.compositions import tau5odd_example, three_cut_join
from pmcover.errors import (
    CatalogMismatch,
    InvalidParams,
    NotACovering,
    NotFRTriple,
    NotOdd,
    NotSize4,
)
from pmcover.generators import (
    blanusa,
    flower_snark,
    k4,
    k33,
    petersen,
    prism,
    random_bridgeless_cubic,
    theta,
)
from pmcover.gf2 import gf2_in_span
from pmcover.graphs import find_bridges, is_perfect_matching
from pmcover.matchings import enumerate_perfect_matchings
from pmcover.coverings import (
    Covering,
    CoveringKind,
    analyze_graph,
    check_conjectures,
    covering_multiplicities,
    covering_number,
    double_covering,
    even_covering_from_four_covering,
    find_fr_triples,
    find_k_covering,
    fr_structure,
    fulkerson_covering,
    has_k_covering,
    odd_covering_from_four_covering,
    odd_covering_number,
    reduce_odd_covering,
)

from test_graphs import bridged_double_k4


def catalog_of(g):
    return g, enumerate_perfect_matchings(g)


class TestCoveringNumber:
    @pytest.mark.parametrize(
        "graph,tau",
        [(petersen(), 5), (k33(), 3), (k4(), 3), (theta(), 3),
         (blanusa(1), 4), (blanusa(2), 4), (tau5odd_example(), 5)],
    )
    def test_known_values(self, graph, tau):
        g, cat = catalog_of(graph)
        assert covering_number(g, cat, cap=6).tau == tau

    def test_cap_exceeded_result(self):
        g, cat = catalog_of(three_cut_join(petersen(), 0, k33(), 0))
        res = covering_number(g, cat, cap=4)
        assert res.status == "exceeds" and res.tau is None

    def test_infeasible_iff_bridged(self):
        g, cat = catalog_of(bridged_double_k4())
        assert covering_number(g, cat, cap=6).status == "infeasible"
        for seed in range(6):
            h = random_bridgeless_cubic(12, seed)
            hcat = enumerate_perfect_matchings(h)
            res = covering_number(h, hcat, cap=6)
            assert (res.status == "infeasible") == bool(find_bridges(h))

    def test_witness_is_lex_smallest(self):
        g, cat = catalog_of(petersen())
        res = covering_number(g, cat, cap=6)
        assert res.witness.members == (0, 1, 2, 3, 4)
        # any five of the six matchings cover, so this really is the minimum
        masks = cat.masks()
        full = (1 << g.m) - 1
        for sub in combinations(range(6), 5):
            acc = 0
            for i in sub:
                acc |= masks[i]
            assert acc == full

    def test_catalog_mismatch(self):
        _, cat = catalog_of(petersen())
        with pytest.raises(CatalogMismatch):
            covering_number(k4(), cat)

    def test_matches_exhaustive_subset_search(self):
        for graph in (petersen(), k33(), prism(5), blanusa(2), flower_snark(3)):
            g, cat = catalog_of(graph)
            masks = cat.masks()
            full = (1 << g.m) - 1
            for k in (3, 4):
                exists = any(
                    _union(masks, sub) == full
                    for size in range(1, k + 1)
                    for sub in combinations(range(cat.count), size)
                )
                res = covering_number(g, cat, cap=k)
                assert exists == (res.status == "ok")


def _union(masks, sub):
    acc = 0
    for i in sub:
        acc |= masks[i]
    return acc


class TestFindKCovering:
    def test_petersen_has_no_4_covering(self):
        g, cat = catalog_of(petersen())
        assert find_k_covering(g, cat, 4) is None

    def test_petersen_5_covering(self):
        g, cat = catalog_of(petersen())
        cov = find_k_covering(g, cat, 5)
        assert cov.size == 5 and cov.members == (0, 1, 2, 3, 4)

    def test_flower5_4_covering(self):
        g, cat = catalog_of(flower_snark(5))
        cov = find_k_covering(g, cat, 4)
        assert cov is not None and min(cov.multiplicities()) >= 1

    def test_padding_allowed_when_tau_is_smaller(self):
        g, cat = catalog_of(k33())
        cov = find_k_covering(g, cat, 4)
        assert cov is not None and cov.size == 4

    def test_k_below_3_rejected(self):
        g, cat = catalog_of(k4())
        with pytest.raises(InvalidParams):
            find_k_covering(g, cat, 2)


class TestMultiplicities:
    def test_blanusa_doubly_covered_is_pm_of_size_9(self):
        g, cat = catalog_of(blanusa(1))
        cov = covering_number(g, cat, cap=4).witness
        report = covering_multiplicities(cov)
        assert len(report.doubly_covered) == 9
        assert is_perfect_matching(g, report.doubly_covered)

    def test_flower5_doubly_covered_size_10(self):
        g, cat = catalog_of(flower_snark(5))
        cov = covering_number(g, cat, cap=4).witness
        assert len(covering_multiplicities(cov).doubly_covered) == 10

    def test_tau4_witness_pairwise_intersections_nonempty(self):
        g, cat = catalog_of(blanusa(2))
        cov = covering_number(g, cat, cap=4).witness
        for a, b in combinations(cov.members, 2):
            assert cat.matchings[a] & cat.matchings[b]

    def test_wrong_size_rejected(self):
        g, cat = catalog_of(petersen())
        with pytest.raises(NotSize4):
            covering_multiplicities(
                covering_number(g, cat, cap=6).witness
            )

    def test_non_covering_rejected(self):
        g, cat = catalog_of(petersen())
        bad = Covering(g, tuple(cat.matchings[:4]), CoveringKind.PLAIN, cat, (0, 1, 2, 3))
        with pytest.raises(NotACovering):
            covering_multiplicities(bad)


class TestFRTriples:
    def test_petersen_all_20_triples_qualify(self):
        _, cat = catalog_of(petersen())
        triples = find_fr_triples(cat)
        assert len(triples) == 20 == math.comb(6, 3)

    def test_k4_single_triple(self):
        _, cat = catalog_of(k4())
        assert find_fr_triples(cat) == [(0, 1, 2)]

    def test_limit(self):
        _, cat = catalog_of(petersen())
        assert len(find_fr_triples(cat, limit=5)) == 5

    def test_petersen_structure(self):
        g, cat = catalog_of(petersen())
        s = fr_structure(g, cat, (0, 1, 2))
        assert len(s.double) == 3 and len(s.uncovered) == 3 and len(s.single) == 9
        assert len(s.alternating_cycles) == 1
        assert len(s.alternating_cycles[0]) == 6
        # vertex-degree identity: |T1| + 2 |T2| = 3n/2
        assert len(s.single) + 2 * len(s.double) == 3 * g.n // 2

    def test_k4_structure_vacuous(self):
        g, cat = catalog_of(k4())
        s = fr_structure(g, cat, (0, 1, 2))
        assert not s.double and not s.uncovered
        assert len(s.single) == 6
        assert s.alternating_cycles == ()

    def test_blanusa_alternation(self):
        g, cat = catalog_of(blanusa(1))
        triple = find_fr_triples(cat, limit=1)[0]
        s = fr_structure(g, cat, triple)  # internal assertions check alternation
        assert all(len(c) % 2 == 0 for c in s.alternating_cycles)

    def test_rejects_non_fr_triple(self):
        g, cat = catalog_of(petersen())
        # a triple with a common edge does not exist for Petersen, so build
        # one on the bridged graph where every matching shares the bridge
        gb, catb = catalog_of(bridged_double_k4())
        with pytest.raises(NotFRTriple):
            fr_structure(gb, catb, (0, 1, 2))


class TestOddCoverings:
    def test_petersen_has_none(self):
        g, cat = catalog_of(petersen())
        res = odd_covering_number(g, cat, cap=7)
        assert res.status == "none_exists"
        assert not gf2_in_span(cat.masks(), (1 << g.m) - 1)

    def test_k4_size_3(self):
        g, cat = catalog_of(k4())
        res = odd_covering_number(g, cat, cap=7)
        assert res.size == 3 and res.count_minimum == 1

    def test_blanusa_size_5(self):
        for which in (1, 2):
            g, cat = catalog_of(blanusa(which))
            res = odd_covering_number(g, cat, cap=7)
            assert res.size == 5

    def test_example_graph_counts(self):
        g, cat = catalog_of(tau5odd_example())
        res = odd_covering_number(g, cat, cap=7)
        assert res.size == 7 and res.count_minimum == 64
        assert math.comb(cat.count, 7) == 77520

    def test_witness_is_odd_everywhere(self):
        g, cat = catalog_of(blanusa(1))
        res = odd_covering_number(g, cat, cap=7)
        assert all(c % 2 == 1 for c in res.witness.multiplicities())

    def test_no_even_size_subset_is_an_odd_covering(self):
        # parity argument: at each vertex the three odd multiplicities sum
        # to the size, so odd coverings have odd size; verify exhaustively
        for graph in (k4(), k33(), petersen(), prism(4)):
            g, cat = catalog_of(graph)
            masks = cat.masks()
            full = (1 << g.m) - 1
            for size in (2, 4):
                for sub in combinations(range(cat.count), size):
                    acc = 0
                    for i in sub:
                        acc ^= masks[i]
                    assert acc != full

    def test_cap_exceeded(self):
        g, cat = catalog_of(tau5odd_example())
        res = odd_covering_number(g, cat, cap=5)
        assert res.status == "exceeds"

    def test_gf2_matches_exhaustive_existence(self):
        from test_graphs import random_cubic_any
        import random

        rng = random.Random(17)
        graphs = [k4(), k33(), petersen(), prism(5), tau5odd_example()]
        graphs += [random_cubic_any(12, rng) for _ in range(10)]
        for g in graphs:
            cat = enumerate_perfect_matchings(g)
            if not (1 <= cat.count <= 25):
                continue
            masks = cat.masks()
            full = (1 << g.m) - 1
            sub_exists = _subset_xor_exists(masks, full)
            assert sub_exists == gf2_in_span(masks, full)


def _subset_xor_exists(masks, target):
    half = len(masks) // 2
    reach = {0}
    for mask in masks[:half]:
        reach |= {x ^ mask for x in reach}
    probe = {0}
    for mask in masks[half:]:
        probe |= {x ^ mask for x in probe}
    return any((target ^ p) in reach for p in probe)


class TestDerivedCoverings:
    def _four_covering(self, g):
        cat = enumerate_perfect_matchings(g)
        return cat, covering_number(g, cat, cap=4).witness

    def test_odd_5_from_blanusa(self):
        g = blanusa(1)
        cat, cov4 = self._four_covering(g)
        odd5 = odd_covering_from_four_covering(cov4)
        assert odd5.size == 5 and odd5.kind is CoveringKind.ODD
        assert set(odd5.multiplicities()) <= {1, 3}

    def test_odd_5_from_flower(self):
        for k in (5, 7):
            g = flower_snark(k)
            cat, cov4 = self._four_covering(g)
            odd5 = odd_covering_from_four_covering(cov4)
            assert odd5.size == 5

    def test_even_8_from_blanusa(self):
        g = blanusa(1)
        _, cov4 = self._four_covering(g)
        even8 = even_covering_from_four_covering(cov4)
        assert even8.size == 8
        assert set(even8.multiplicities()) <= {2, 4}

    def test_doubled_3_coloring_is_degenerate_fulkerson(self):
        g, cat = catalog_of(k4())
        cov3 = covering_number(g, cat, cap=3).witness
        even6 = double_covering(cov3)
        assert even6.size == 6
        assert set(even6.multiplicities()) == {2}

    def test_even_needs_size_4(self):
        g, cat = catalog_of(k4())
        cov3 = covering_number(g, cat, cap=3).witness
        with pytest.raises(NotSize4):
            even_covering_from_four_covering(cov3)


class TestFulkerson:
    def test_petersen_uses_all_six(self):
        g, cat = catalog_of(petersen())
        cov = fulkerson_covering(g, cat)
        assert cov.members == (0, 1, 2, 3, 4, 5)
        assert set(cov.multiplicities()) == {2}

    def test_k4_doubles_its_three(self):
        g, cat = catalog_of(k4())
        cov = fulkerson_covering(g, cat)
        assert cov.members == (0, 0, 1, 1, 2, 2)

    def test_example_graph_has_one(self):
        g, cat = catalog_of(tau5odd_example())
        cov = fulkerson_covering(g, cat)
        assert cov is not None and set(cov.multiplicities()) == {2}

    def test_matching_free_graph_has_none(self):
        from test_matchings import matching_free_cubic

        g, cat = catalog_of(matching_free_cubic())
        assert fulkerson_covering(g, cat) is None


class TestReduceOddCovering:
    def test_duplicated_pair_removed(self):
        g, cat = catalog_of(k4())
        # {M0, M0, M0, M1, M2}: the 3-edge-coloring plus a duplicated pair
        cov = Covering.from_indices(cat, (0, 0, 0, 1, 2), CoveringKind.ODD)
        reduced = reduce_odd_covering(cov)
        assert reduced.members == (0, 1, 2)

    def test_fixpoint_on_distinct(self):
        g, cat = catalog_of(blanusa(1))
        five = odd_covering_number(g, cat, cap=7).witness
        assert reduce_odd_covering(five).members == five.members

    def test_rejects_non_odd_multiset(self):
        g, cat = catalog_of(k4())
        # A, A, B, B, C covers the A and B edges twice: not an odd covering
        with pytest.raises(NotOdd):
            cov = Covering(
                g,
                tuple(cat.matchings[i] for i in (0, 0, 1, 1, 2)),
                CoveringKind.ODD,
                cat,
                (0, 0, 1, 1, 2),
            )
            reduce_odd_covering(cov)


class TestConjectureReport:
    def test_petersen(self):
        g, cat = catalog_of(petersen())
        report = check_conjectures(g, cat)
        assert report.berge_5 and report.fulkerson and report.fr_triple
        assert report.k_disjoint_intersection == 3

    def test_k4(self):
        g, cat = catalog_of(k4())
        report = check_conjectures(g, cat)
        assert report.berge_5 and report.fulkerson and report.fr_triple
        assert report.k_disjoint_intersection == 2

    def test_blanusa(self):
        g, cat = catalog_of(blanusa(1))
        report = check_conjectures(g, cat)
        assert report.berge_5 and report.fr_triple


class TestAnalyze:
    def test_report_fields(self):
        metrics, status = analyze_graph(petersen())
        assert status == "ok"
        assert metrics["n"] == 10 and metrics["m"] == 15
        assert metrics["pm_count"] == 6 and metrics["tau"] == 5
        assert metrics["tau_odd"] is None and metrics["tau_odd_count"] == 0
        assert metrics["fulkerson"] and metrics["berge5"] and metrics["fr_triple"]
        assert metrics["b"] == 1 and metrics["max_two_pm_union"] == 9
        assert metrics["bridges"] == 0 and metrics["cyclically4ec"] is True

    def test_infeasible_status_for_bridged_graph(self):
        metrics, status = analyze_graph(bridged_double_k4())
        assert status == "infeasible"
        assert metrics["bridges"] == 1 and metrics["tau"] is None

    def test_timeout_nulls_missing_fields(self):
        import time

        metrics, status = analyze_graph(
            tau5odd_example(), deadline=time.monotonic() - 1.0
        )
        assert status == "timeout"
        assert metrics["n"] == 20
        assert metrics["fulkerson"] is None

    def test_has_k_covering_probe(self):
        g, cat = catalog_of(petersen())
        assert not has_k_covering(g, cat, 4)
        assert has_k_covering(g, cat, 5)


class TestCatalogFreeCoverings:
    """Constructive coverings at sizes where full enumeration is avoided."""

    def _goldberg_four_covering(self):
        from pmcover.constructions import (
            find_good_triple,
            four_covering_from_good_pairs,
            pair_odd_cycles,
        )
        from pmcover.generators import (
            goldberg_graph,
            goldberg_proof_cycles,
            two_factor_from_cycles,
        )

        g = goldberg_graph(5)
        tf = two_factor_from_cycles(g, goldberg_proof_cycles(5))
        pairing = pair_odd_cycles(g, tf)
        certs = [find_good_triple(g, tf, a, b) for a, b in pairing]
        return g, four_covering_from_good_pairs(g, tf, pairing, certs)

    def test_odd_5_covering_from_goldberg(self):
        g, cov4 = self._goldberg_four_covering()
        assert cov4.catalog is None
        odd5 = odd_covering_from_four_covering(cov4)
        assert odd5.size == 5
        assert set(odd5.multiplicities()) <= {1, 3}

    def test_even_8_covering_from_goldberg(self):
        g, cov4 = self._goldberg_four_covering()
        even8 = even_covering_from_four_covering(cov4)
        assert even8.size == 8
        assert set(even8.multiplicities()) <= {2, 4}


def _bridge_join(g1, e1, g2, e2):
    """Subdivide one edge in each graph and join the two new vertices."""
    from pmcover.graphs import CubicGraph

    a, b = g1.endpoints(e1)
    c, d = g2.endpoints(e2)
    off = g1.n
    sub1, sub2 = off + g2.n, off + g2.n + 1
    edges = [g1.endpoints(e) for e in range(g1.m) if e != e1]
    edges += [
        (u + off, v + off) for e, (u, v) in enumerate(g2.edges) if e != e2
    ]
    edges += [(a, sub1), (b, sub1), (c + off, sub2), (d + off, sub2),
              (sub1, sub2)]
    return CubicGraph(g1.n + g2.n + 2, edges)


def test_infeasible_matches_bridges_both_directions():
    """Connected graphs: some edge misses every matching iff a bridge exists."""
    import random

    from test_graphs import random_cubic_any

    rng = random.Random(41)
    graphs = [random_cubic_any(12, rng) for _ in range(20)]
    for seed in range(6):
        g1 = random_bridgeless_cubic(8, seed)
        g2 = random_bridgeless_cubic(10, 50 + seed)
        graphs.append(_bridge_join(g1, seed % g1.m, g2, seed % g2.m))
    bridged_seen = 0
    for g in graphs:
        if not g.is_connected():
            continue
        cat = enumerate_perfect_matchings(g)
        res = covering_number(g, cat, cap=6)
        has_bridges = bool(find_bridges(g))
        assert (res.status == "infeasible") == has_bridges
        bridged_seen += has_bridges
    assert bridged_seen >= 6


def test_analyze_disconnected_graph():
    from pmcover.graphs import CubicGraph

    edges = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    edges += [(u + 4, v + 4) for u, v in edges]
    metrics, status = analyze_graph(CubicGraph(8, edges))
    assert status == "ok"
    assert metrics["cyclically4ec"] is None
    assert metrics["tau"] == 3


class TestWitnessDeterminism:
    """Witnesses are the lexicographically smallest optima, brute-force checked."""

    def test_tau_witness_lex_minimal(self):
        for graph in (petersen(), k33(), blanusa(2), flower_snark(3)):
            g, cat = catalog_of(graph)
            res = covering_number(g, cat, cap=6)
            masks = cat.masks()
            full = (1 << g.m) - 1
            best = None
            for sub in combinations(range(cat.count), res.tau):
                if _union(masks, sub) == full:
                    best = sub
                    break  # combinations yields lex order: first hit is smallest
            assert res.witness.members == best

    def test_odd_witness_lex_minimal(self):
        for graph in (k4(), blanusa(1), tau5odd_example()):
            g, cat = catalog_of(graph)
            res = odd_covering_number(g, cat, cap=7)
            masks = cat.masks()
            full = (1 << g.m) - 1
            best = None
            for sub in combinations(range(cat.count), res.size):
                acc = 0
                for i in sub:
                    acc ^= masks[i]
                if acc == full:
                    best = sub
                    break
            assert res.witness.members == best

    def test_fulkerson_witness_lex_minimal_on_small_catalogs(self):
        from itertools import combinations_with_replacement

        for graph in (k4(), petersen(), k33()):
            g, cat = catalog_of(graph)
            found = fulkerson_covering(g, cat)
            masks = cat.masks()
            best = None
            for sub in combinations_with_replacement(range(cat.count), 6):
                counts = [0] * g.m
                ok = True
                for i in sub:
                    for e in cat.matchings[i]:
                        counts[e] += 1
                if all(c == 2 for c in counts):
                    best = sub
                    break
            assert found.members == best

    def test_repeated_runs_identical(self):
        g, cat = catalog_of(blanusa(1))
        a = covering_number(g, cat, cap=6)
        b = covering_number(g, cat, cap=6)
        assert a.witness.members == b.witness.members
        g2, cat2 = catalog_of(blanusa(1))
        c = covering_number(g2, cat2, cap=6)
        assert a.witness.members == c.witness.members


def test_odd_covering_size_is_exact_minimum():
    for graph in (k4(), blanusa(1), blanusa(2), tau5odd_example()):
        g, cat = catalog_of(graph)
        res = odd_covering_number(g, cat, cap=7)
        masks = cat.masks()
        full = (1 << g.m) - 1
        for smaller in range(1, res.size):
            assert not any(
                _xor_all(masks, sub) == full
                for sub in combinations(range(cat.count), smaller)
            )


def _xor_all(masks, sub):
    acc = 0
    for i in sub:
        acc ^= masks[i]
    return acc


class TestKindValidation:
    def test_plain_rejects_non_covering(self):
        g, cat = catalog_of(petersen())
        with pytest.raises(NotACovering):
            Covering.from_indices(cat, (0, 1, 2), CoveringKind.PLAIN)

    def test_even_rejects_odd_multiplicities(self):
        g, cat = catalog_of(k4())
        from pmcover.errors import CoveringError

        with pytest.raises(CoveringError):
            Covering.from_indices(cat, (0, 1, 2), CoveringKind.EVEN)

    def test_fulkerson_rejects_wrong_size(self):
        g, cat = catalog_of(petersen())
        from pmcover.errors import CoveringError

        with pytest.raises(CoveringError):
            Covering.from_indices(cat, (0, 1, 2, 3, 4), CoveringKind.FULKERSON)

    def test_odd_accepts_multiset(self):
        g, cat = catalog_of(k4())
        cov = Covering.from_indices(cat, (0, 0, 0, 1, 2), CoveringKind.ODD)
        assert cov.size == 5 and cov.members == (0, 0, 0, 1, 2)

    def test_non_matching_member_rejected(self):
        g = petersen()
        with pytest.raises(NotACovering):
            Covering.from_matchings(
                g, [g.edge_set([0, 1, 2, 3, 4])], CoveringKind.PLAIN
            )


def test_reduce_strips_duplicates_from_padded_five_covering():
    g, cat = catalog_of(blanusa(1))
    five = odd_covering_number(g, cat, cap=7).witness
    padded = Covering.from_indices(
        cat, five.members + (five.members[0],) * 2, CoveringKind.ODD
    )
    assert padded.size == 7
    assert reduce_odd_covering(padded).members == five.members


def test_example_graph_satisfies_fan_raspaud_with_k_3():
    g, cat = catalog_of(tau5odd_example())
    report = check_conjectures(g, cat)
    # two disjoint matchings would 3-edge-color the graph, impossible here
    assert report.k_disjoint_intersection == 3
    assert report.berge_5 and report.fulkerson and report.fr_triple


def test_tau_3_iff_three_edge_colorable_on_random_graphs():
    from pmcover.edge_coloring import is_three_edge_colorable

    for seed in range(30):
        n = (10, 12, 14, 16)[seed % 4]
        g = random_bridgeless_cubic(n, 7000 + seed)
        cat = enumerate_perfect_matchings(g)
        res = covering_number(g, cat, cap=6)
        assert (res.tau == 3) == is_three_edge_colorable(g)


def test_even_8_from_flower7():
    g = flower_snark(7)
    cat = enumerate_perfect_matchings(g)
    cov4 = covering_number(g, cat, cap=4).witness
    even8 = even_covering_from_four_covering(cov4)
    assert even8.size == 8
    assert set(even8.multiplicities()) <= {2, 4}


def test_find_k_covering_is_lex_smallest():
    for graph, k in ((k33(), 4), (blanusa(1), 5), (petersen(), 5)):
        g, cat = catalog_of(graph)
        cov = find_k_covering(g, cat, k)
        masks = cat.masks()
        full = (1 << g.m) - 1
        expect = next(
            sub
            for sub in combinations(range(cat.count), k)
            if _union(masks, sub) == full
        )
        assert cov.members == expect


def test_reduce_round_trips_random_padded_multisets():
    import random

    rng = random.Random(2)
    reduced_count = 0
    for seed in range(20):
        g = random_bridgeless_cubic((10, 12, 14)[seed % 3], 4000 + seed)
        cat = enumerate_perfect_matchings(g)
        res = odd_covering_number(g, cat, cap=5)
        if res.status != "ok":
            continue
        base = res.witness.members
        pad = tuple(rng.choice(range(cat.count)) for _ in range(2)) * 2
        padded = Covering.from_indices(
            cat, base + pad[:2] + pad[:2], CoveringKind.ODD
        )
        assert reduce_odd_covering(padded).members == base
        reduced_count += 1
    assert reduced_count >= 10
