import dataclasses
import random

import networkx as nx
import pytest

from helpers import C3, K2, K4, pe
from planar_subiso.generators import cycle, grid, random_planar, wheel
from planar_subiso.plane_graph import AbstractGraph, planar_embed
from planar_subiso.radial import radial_graph
from planar_subiso.sphere_cut import (
    DisconnectedRadial,
    EmptyGraph,
    radial_bfs_tree,
    sc_decomposition,
    validate,
)


def test_radial_graph_sizes():
    r = radial_graph(planar_embed(C3))
    assert (r.num_nodes, r.num_edges) == (5, 6)
    r = radial_graph(planar_embed(K2))
    assert (r.num_nodes, r.num_edges) == (3, 2)
    r = radial_graph(planar_embed(K4))
    assert (r.num_nodes, r.num_edges) == (8, 12)


@pytest.mark.parametrize("h", [planar_embed(K4), grid(3), wheel(6), cycle(5), planar_embed(K2)])
def test_radial_graph_is_plane_and_bipartite(h):
    r = radial_graph(h)
    assert r.euler_ok()
    for a, b in r.ends:
        assert r.is_face_node(a) != r.is_face_node(b)
    assert r.num_edges == 2 * h.m


def test_radial_bfs_depths():
    h = planar_embed(C3)
    assert radial_bfs_tree(radial_graph(h), 0).eccentricity == 2
    assert radial_bfs_tree(radial_graph(planar_embed(K2)), 0).eccentricity == 1
    r = radial_graph(planar_embed(K4))
    for f in range(4):
        assert radial_bfs_tree(r, f).eccentricity <= 3


def test_small_decompositions():
    s = sc_decomposition(planar_embed(K2), 0)
    assert s.width == 2 and s.num_leaves == 1
    s = sc_decomposition(planar_embed(C3), 0)
    assert s.width == 2 and validate(s).ok
    s = sc_decomposition(planar_embed(K4), 0)
    assert s.width == 3 and s.num_leaves == 6 and validate(s).ok


def test_errors():
    with pytest.raises(EmptyGraph):
        sc_decomposition(planar_embed(AbstractGraph(3, ())), 0)
    two = planar_embed(AbstractGraph.from_edges([(0, 1), (2, 3)]))
    with pytest.raises(DisconnectedRadial):
        sc_decomposition(two, 0)


def _random_hosts(count: int, seed: int):
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(3, 25)
        yield random_planar(n, seed=rng.randrange(10**9), keep=rng.choice([0.3, 0.6, 1.0]))


def test_random_decompositions_are_valid_and_narrow():
    for g in _random_hosts(60, 5):
        for f in {0, g.num_faces - 1}:
            s = sc_decomposition(g, f)
            d = validate(s)
            assert d.ok, d.violations
            assert s.width <= 2 * s.bfs.eccentricity + 1


def test_every_leaf_carries_its_edge():
    g = grid(4)
    s = sc_decomposition(g, 0)
    for i, (u, v) in enumerate(g.edges):
        assert s.is_leaf(i)
        assert len(s.adj[i]) == 1
        if i != s.root:
            assert s.mid(i) == {u, v}


def test_swapped_leaves_reported_as_middle_set_violation():
    g = grid(3)
    s = sc_decomposition(g, 0)
    assert validate(s).ok
    a = next(t for t in s.order if s.is_leaf(t))
    pa = s.parent[a]
    b = next(t for t in s.order if s.is_leaf(t) and s.parent[t] != pa and set(g.edges[t]).isdisjoint(g.edges[a]))
    pb = s.parent[b]
    adj = [list(x) for x in s.adj]
    adj[pa][adj[pa].index(a)] = b
    adj[pb][adj[pb].index(b)] = a
    adj[a], adj[b] = [pb], [pa]
    bad = dataclasses.replace(s, adj=adj, _nooses={})
    d = validate(bad)
    assert not d.ok
    assert any("middle set" in v for v in d.violations)


def test_degree_four_node_reported_as_arity_violation():
    g = grid(3)
    s = sc_decomposition(g, 0)
    t = next(t for t in s.order if not s.is_leaf(t) and not s.is_leaf(s.parent[t]))
    p = s.parent[t]
    adj = [list(x) for x in s.adj]
    # contract the tree edge t-p into p
    for c in adj[t]:
        if c != p:
            adj[c][adj[c].index(t)] = p
            adj[p].append(c)
    adj[p].remove(t)
    adj[t] = []
    bad = dataclasses.replace(s, adj=adj, _nooses={})
    d = validate(bad)
    assert any("arity" in v for v in d.violations)


def test_json_and_dot_exports():
    import json

    s = sc_decomposition(planar_embed(K4), 0)
    payload = json.loads(s.to_json())
    assert payload["width"] == 3 and payload["nodes"] == 10
    assert s.to_dot().startswith("graph scd {")


def test_dodecahedron_decomposition():
    g = pe(nx.dodecahedral_graph())
    s = sc_decomposition(g, 0)
    assert validate(s).ok
    assert s.width <= 2 * s.bfs.eccentricity + 1
