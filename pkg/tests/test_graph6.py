import random

import pytest

from pmcover.errors import MalformedGraph6, NotCubic, NotSimple
from pmcover.generators import k4, petersen, theta
from pmcover.graph6 import parse_graph6, to_graph6


def reference_decode(line):
    """Independent decoder written directly from the format definition."""
    data = [ord(c) - 63 for c in line.strip()]
    if data[0] != 63:
        n, body = data[0], data[1:]
    elif data[1] != 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise NotImplementedError
    bitstring = "".join(format(x, "06b") for x in body)
    adj = [[0] * n for _ in range(n)]
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bitstring[pos] == "1":
                adj[i][j] = adj[j][i] = 1
            pos += 1
    return n, adj


def random_simple_cubic(n, rng):
    stubs = [v for v in range(n) for _ in range(3)]
    while True:
        rng.shuffle(stubs)
        pairs = [
            (min(stubs[i], stubs[i + 1]), max(stubs[i], stubs[i + 1]))
            for i in range(0, 3 * n, 2)
        ]
        if any(u == v for u, v in pairs) or len(set(pairs)) != len(pairs):
            continue
        from pmcover.graphs import CubicGraph

        return CubicGraph(n, pairs)


def test_k4_against_reference_decoder():
    line = to_graph6(k4())
    n, adj = reference_decode(line)
    assert n == 4
    assert parse_graph6(line).m == 6
    assert all(adj[u][v] for u in range(4) for v in range(4) if u != v)


def test_petersen_against_reference_decoder():
    g = petersen()
    line = to_graph6(g)
    n, adj = reference_decode(line)
    assert n == 10
    counts = g.adjacency_counts()
    assert all(adj[u][v] == counts[u][v] for u in range(10) for v in range(10))
    assert parse_graph6(line).m == 15


def test_four_cycle_is_not_cubic():
    # C4 in graph6: n=4, edges 01,12,23,03
    bits = "101101"  # order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3)
    line = chr(4 + 63) + chr(int(bits, 2) + 63)
    with pytest.raises(NotCubic):
        parse_graph6(line)


def test_header_is_accepted():
    line = to_graph6(petersen())
    assert parse_graph6(">>graph6<<" + line) == petersen()


def test_theta_refuses_to_encode():
    with pytest.raises(NotSimple):
        to_graph6(theta())


@pytest.mark.parametrize(
    "bad",
    ["", "I", "Ih", chr(40) + "abc", "I" + "~" * 20],
)
def test_malformed_lines_rejected(bad):
    with pytest.raises(MalformedGraph6):
        parse_graph6(bad)


def test_round_trip_preserves_adjacency_on_1000_random_graphs():
    rng = random.Random(20260809)
    for trial in range(1000):
        n = rng.choice((4, 6, 8, 10, 12, 14, 16, 18, 20))
        g = random_simple_cubic(n, rng)
        h = parse_graph6(to_graph6(g))
        assert h.adjacency_counts() == g.adjacency_counts()
        assert h == g


def test_large_vertex_count_size_field():
    # 3-byte size field kicks in above 62 vertices; build a 64-vertex prism
    from pmcover.generators import prism

    g = prism(32)
    line = to_graph6(g)
    assert line.startswith(chr(126))
    assert parse_graph6(line) == g
