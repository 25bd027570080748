import networkx as nx
import pytest

from helpers import C3, C4, K2, K4, ag, from_nx
from planar_subiso.generators import grid
from planar_subiso.oracle import (
    BudgetExceeded,
    brute_count,
    brute_decide,
    brute_list,
    count_simple_cycles,
    iter_matches,
)


def test_triangle_and_square_counts():
    assert brute_count(K4, C3) == 4
    assert brute_count(K4, C4) == 3
    assert brute_count(grid(3).graph, C4) == 4
    assert brute_count(grid(4).graph, C4) == 9


def test_edge_count_for_k2():
    g = grid(3, 4).graph
    assert brute_count(g, K2) == g.m


def test_pattern_larger_than_host():
    assert not brute_decide(C3, C4)
    assert brute_count(C3, K4) == 0


def test_matches_are_homomorphic_injections():
    for phi in iter_matches(K4, C4):
        assert len(set(phi)) == 4
        for u, v in C4.edges:
            assert K4.has_edge(phi[u], phi[v])
    # 3 four-cycles, 8 automorphisms each
    assert sum(1 for _ in iter_matches(K4, C4)) == 24


def test_list_is_deduplicated_and_sorted():
    recs = brute_list(K4, C3)
    assert len(recs) == 4
    assert len({r.edges for r in recs}) == 4
    assert [sorted(r.edges) for r in recs] == sorted(sorted(r.edges) for r in recs)


def test_budget():
    g = grid(5).graph
    with pytest.raises(BudgetExceeded):
        brute_count(g, from_nx(nx.path_graph(6)), max_steps=10)


def test_simple_cycle_counts():
    assert count_simple_cycles(C3) == 1
    assert count_simple_cycles(K4) == 7
    assert count_simple_cycles(from_nx(nx.path_graph(5))) == 0
    # 2x3 grid: two squares and the outer hexagon
    assert count_simple_cycles(grid(2, 3).graph) == 3
    with pytest.raises(BudgetExceeded):
        count_simple_cycles(grid(5).graph, max_n=16)


def test_cycle_counts_agree_with_networkx():
    for g in (grid(3).graph, from_nx(nx.wheel_graph(6)), from_nx(nx.octahedral_graph())):
        expected = sum(1 for c in nx.simple_cycles(g.to_networkx()) if len(c) >= 3)
        assert count_simple_cycles(g) == expected


def test_disconnected_host():
    g = ag([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert brute_count(g, C3) == 2
