import itertools

import networkx as nx
import pytest

from helpers import C3, C4, K2, K4, ag, from_nx, pe
from planar_subiso.generators import cycle, grid, star, wheel
from planar_subiso.plane_graph import (
    CannotTriangulate,
    MalformedRotation,
    NonPlanar,
    NonPlanarEmbedding,
    build_plane_graph,
    canonical_code,
    equivalent_drawings,
    is_three_connected,
    is_triangulation,
    orientation_preserving_automorphisms,
    planar_embed,
    smooth_vertices,
    subdivide_all_edges,
    triangulate,
)
from planar_subiso.pattern_embed import rotation_systems


def test_triangle_has_two_faces():
    h = build_plane_graph(C3, [[1, 2], [2, 0], [0, 1]])
    assert h.num_faces == 2
    assert h.euler_ok()


def test_k4_every_planar_rotation_system_has_four_faces():
    seen = 0
    for rot in rotation_systems(K4):
        try:
            h = build_plane_graph(K4, rot)
        except NonPlanarEmbedding:
            continue
        seen += 1
        assert h.num_faces == 4
    assert seen > 0


def test_k5_no_rotation_system_is_spherical():
    k5 = from_nx(nx.complete_graph(5))
    for rot in rotation_systems(k5):
        with pytest.raises(NonPlanarEmbedding):
            build_plane_graph(k5, rot)


def test_malformed_rotation_rejected():
    with pytest.raises(MalformedRotation):
        build_plane_graph(C3, [[1, 2], [2, 0], [0, 0]])
    with pytest.raises(MalformedRotation):
        build_plane_graph(C3, [[1, 2], [2, 0]])


def test_planar_embed_examples():
    assert planar_embed(C4).num_faces == 2
    assert planar_embed(K4).num_faces == 4
    with pytest.raises(NonPlanar):
        planar_embed(from_nx(nx.complete_bipartite_graph(3, 3)))


def test_face_incidence_index():
    h = planar_embed(K4)
    for (u, v) in h.edges:
        f1, f2 = h.edge_faces(u, v)
        assert f1 != f2
        assert u in h.face_vertices(f1) and v in h.face_vertices(f2)
    for v in range(4):
        assert len(h.vertex_faces(v)) == 3
    p = planar_embed(K2)
    assert p.edge_faces(0, 1) == (0, 0)


def test_subdivision_examples():
    assert subdivide_all_edges(planar_embed(C3)).num_faces == 2
    s = subdivide_all_edges(planar_embed(C3))
    assert (s.n, s.m) == (6, 6)
    s = subdivide_all_edges(planar_embed(K2))
    assert (s.n, s.m, s.num_faces) == (3, 2, 1)
    s = subdivide_all_edges(planar_embed(K4))
    assert (s.n, s.m, s.num_faces) == (10, 12, 4)


@pytest.mark.parametrize("h", [planar_embed(K4), grid(3), wheel(5), star(4)])
def test_subdivide_then_smooth_round_trip(h):
    s = subdivide_all_edges(h)
    back = smooth_vertices(s, range(h.n, s.n))
    assert back.rotation == h.rotation


def test_triangulate_leaves_triangle_unchanged():
    t = triangulate(planar_embed(C3))
    assert t.m == 3 and is_triangulation(t)


def test_triangulate_cycle_and_star():
    # C4 has two quadrilateral faces; a simple triangulation needs both chords
    # of one quadrilateral, which would be a double edge, so one chord goes
    # in each face.
    t = triangulate(planar_embed(C4))
    assert is_triangulation(t) and t.m == 3 * t.n - 6
    t = triangulate(star(3))
    assert is_triangulation(t) and t.m == 6
    assert is_three_connected(t.graph)
    with pytest.raises(CannotTriangulate):
        triangulate(planar_embed(K2))


def test_triangulation_and_three_connectivity_predicates():
    assert is_triangulation(planar_embed(K4)) and is_three_connected(K4)
    assert not is_triangulation(planar_embed(C4)) and not is_three_connected(C4)
    assert not is_triangulation(planar_embed(K2)) and not is_three_connected(K2)
    assert is_three_connected(wheel(6).graph)


def test_cycle_drawings_all_equivalent():
    drawings = [build_plane_graph(C4, r) for r in rotation_systems(C4)]
    for a, b in itertools.combinations(drawings, 2):
        assert equivalent_drawings(a, b)


def test_star_leaf_orders_equivalent():
    s4 = ag([(0, 1), (0, 2), (0, 3), (0, 4)])
    rot_a = [[1, 2, 3, 4], [0], [0], [0], [0]]
    rot_b = [[1, 3, 2, 4], [0], [0], [0], [0]]
    assert equivalent_drawings(build_plane_graph(s4, rot_a), build_plane_graph(s4, rot_b))


def test_three_connected_mirror_equivalent():
    for h in (planar_embed(K4), wheel(5), pe(nx.dodecahedral_graph())):
        assert equivalent_drawings(h, h.mirror())


def test_inequivalent_drawings_detected():
    # Two triangles sharing a vertex, plus a pendant edge placed either
    # inside one triangle or in the outer face.
    g = ag([(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (1, 5)])
    codes = set()
    for rot in rotation_systems(g):
        try:
            codes.add(canonical_code(build_plane_graph(g, rot)))
        except NonPlanarEmbedding:
            pass
    assert len(codes) >= 2


def test_equivalence_invariant_under_relabelling():
    h = grid(3, 4)
    perm = list(range(h.n))
    perm.reverse()
    edges = [(perm[u], perm[v]) for u, v in h.edges]
    rot = [None] * h.n
    for v in range(h.n):
        rot[perm[v]] = [perm[u] for u in h.rotation[v]]
    relabelled = build_plane_graph(ag(edges, n=h.n), rot)
    assert equivalent_drawings(h, relabelled)


def test_automorphism_counts():
    assert orientation_preserving_automorphisms(planar_embed(K4)) == 12
    # on the sphere a half-turn swapping the two faces of C5 keeps orientation
    assert orientation_preserving_automorphisms(cycle(5)) == 10
    assert orientation_preserving_automorphisms(planar_embed(K2)) == 2


def test_restrict_keeps_rotation_order():
    h = grid(3)
    sub, old = h.restrict([0, 1, 3, 4])
    assert sub.m == 4 and sub.num_faces == 2
    for v, r in enumerate(sub.rotation):
        full = [u for u in h.rotation[old[v]] if u in set(old)]
        assert [old[u] for u in r] == full
