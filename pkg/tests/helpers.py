"""Small graph builders shared by the test modules."""

from __future__ import annotations

import networkx as nx

from planar_subiso.plane_graph import AbstractGraph, PlaneGraph, planar_embed


def ag(edges, n: int | None = None) -> AbstractGraph:
    return AbstractGraph.from_edges(edges, n=n)


def from_nx(g: nx.Graph) -> AbstractGraph:
    g = nx.convert_node_labels_to_integers(g)
    return AbstractGraph.from_edges(list(g.edges()), n=g.number_of_nodes())


def pe(g: nx.Graph | AbstractGraph) -> PlaneGraph:
    return planar_embed(g if isinstance(g, AbstractGraph) else from_nx(g))


K2 = ag([(0, 1)])
C3 = ag([(0, 1), (1, 2), (0, 2)])
C4 = ag([(0, 1), (1, 2), (2, 3), (0, 3)])
K4 = ag([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
STAR3 = ag([(0, 1), (0, 2), (0, 3)])


def connected_planar_patterns(max_k: int, min_k: int = 2) -> list[AbstractGraph]:
    """Every connected planar graph on ``min_k..max_k`` vertices, one per isomorphism class."""
    out = []
    for g in nx.graph_atlas_g():
        k = g.number_of_nodes()
        if k < min_k or k > max_k or g.number_of_edges() == 0:
            continue
        if nx.is_connected(g) and nx.check_planarity(g)[0]:
            out.append(from_nx(g))
    return out
