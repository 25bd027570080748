"""Combinatorial plane graphs.

A drawing is stored as a rotation system: ``rotation[v]`` lists the
neighbours of ``v`` in clockwise order.  Faces are traced with a single
convention used everywhere in the package: the dart following ``(a, b)`` on
its face is ``(b, c)`` where ``c`` is the clockwise successor of ``a`` in
``rotation[b]``.

Corner ``(v, i)`` is the angle at ``v`` between ``rotation[v][i]`` and
``rotation[v][i + 1]``; with the convention above it belongs to the face of
the dart ``(rotation[v][i], v)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

Edge = tuple[int, int]
Dart = tuple[int, int]


class PlaneGraphError(ValueError):
    pass


class MalformedRotation(PlaneGraphError):
    pass


class NonPlanarEmbedding(PlaneGraphError):
    pass


class NonPlanar(PlaneGraphError):
    pass


class CannotTriangulate(PlaneGraphError):
    pass


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class AbstractGraph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: tuple[Edge, ...]
    labels: tuple | None = None
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise PlaneGraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise PlaneGraphError(f"loop at {u}")
            e = norm_edge(u, v)
            if e in seen:
                raise PlaneGraphError(f"parallel edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: int | None = None) -> "AbstractGraph":
        edges = [tuple(e) for e in edges]
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


class PlaneGraph:
    """An abstract graph together with a rotation system of genus 0.

    Instances are treated as immutable.  Use :func:`build_plane_graph` to
    construct one with validation.
    """

    def __init__(self, graph: AbstractGraph, rotation: Sequence[Sequence[int]]):
        self.graph = graph
        self.n = graph.n
        self.edges = graph.edges
        self.rotation: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rotation)
        self.pos: tuple[dict[int, int], ...] = tuple(
            {u: i for i, u in enumerate(r)} for r in self.rotation
        )
        offsets = [0]
        for r in self.rotation:
            offsets.append(offsets[-1] + len(r))
        self.corner_offset: tuple[int, ...] = tuple(offsets)
        self._trace_faces()

    # -- construction helpers -------------------------------------------------

    def _trace_faces(self) -> None:
        rot, pos = self.rotation, self.pos
        dart_face: dict[Dart, int] = {}
        faces: list[tuple[Dart, ...]] = []
        for v in range(self.n):
            for u in rot[v]:
                if (v, u) in dart_face:
                    continue
                fid = len(faces)
                walk = []
                a, b = v, u
                while (a, b) not in dart_face:
                    dart_face[(a, b)] = fid
                    walk.append((a, b))
                    rb = rot[b]
                    a, b = b, rb[(pos[b][a] + 1) % len(rb)]
                faces.append(tuple(walk))
        self.dart_face = dart_face
        self.faces: tuple[tuple[Dart, ...], ...] = tuple(faces)
        # corner (v, i) lies in the face of dart (rot[v][i], v)
        self.corner_faces: tuple[tuple[int, ...], ...] = tuple(
            tuple(dart_face[(u, v)] for u in rot[v]) for v in range(self.n)
        )

    # -- basic queries --------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.pos[u]

    def corner_face(self, v: int, i: int) -> int:
        r = self.rotation[v]
        return self.dart_face[(r[i % len(r)], v)]

    def corner_id(self, v: int, i: int) -> int:
        return self.corner_offset[v] + i % len(self.rotation[v])

    def face_vertices(self, f: int) -> list[int]:
        """Boundary walk of face ``f`` as vertex sequence (tails of its darts)."""
        return [a for a, _ in self.faces[f]]

    def vertex_faces(self, v: int) -> set[int]:
        return set(self.corner_faces[v])

    def edge_faces(self, u: int, v: int) -> tuple[int, int]:
        return self.dart_face[(u, v)], self.dart_face[(v, u)]

    def is_connected(self) -> bool:
        return self.graph.is_connected()

    def euler_ok(self) -> bool:
        """Genus-0 check per component, using the traced boundary walks."""
        comp_of = {}
        comps = self.graph.components()
        for ci, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = ci
        walks = [0] * len(comps)
        for walk in self.faces:
            walks[comp_of[walk[0][0]]] += 1
        edges = [0] * len(comps)
        for u, _ in self.edges:
            edges[comp_of[u]] += 1
        for ci, comp in enumerate(comps):
            if edges[ci] == 0:
                continue
            if len(comp) - edges[ci] + walks[ci] != 2:
                return False
        return True

    def mirror(self) -> "PlaneGraph":
        return PlaneGraph(self.graph, [tuple(reversed(r)) for r in self.rotation])

    def restrict(self, vertices: Iterable[int]) -> tuple["PlaneGraph", list[int]]:
        """Induced subdrawing on ``vertices``; returns it with the new->old map."""
        old = sorted(set(vertices))
        new_of = {v: i for i, v in enumerate(old)}
        edges = [(new_of[u], new_of[v]) for u, v in self.edges if u in new_of and v in new_of]
        rot = [[new_of[u] for u in self.rotation[v] if u in new_of] for v in old]
        return PlaneGraph(AbstractGraph(len(old), tuple(edges)), rot), old

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.m}, faces={self.num_faces})"


def build_plane_graph(g: AbstractGraph, rotation: Sequence[Sequence[int]]) -> PlaneGraph:
    if len(rotation) != g.n:
        raise MalformedRotation(f"expected {g.n} rotation lists, got {len(rotation)}")
    for v, r in enumerate(rotation):
        if len(r) != len(set(r)) or set(r) != g.adj[v]:
            raise MalformedRotation(f"rotation of {v} is not a permutation of its neighbours")
    pg = PlaneGraph(g, rotation)
    if not pg.euler_ok():
        raise NonPlanarEmbedding("rotation system does not describe a sphere embedding")
    return pg


def planar_embed(g: AbstractGraph) -> PlaneGraph:
    ok, emb = nx.check_planarity(g.to_networkx())
    if not ok:
        raise NonPlanar("graph is not planar")
    rotation = [list(emb.neighbors_cw_order(v)) if g.adj[v] else [] for v in range(g.n)]
    return build_plane_graph(g, rotation)


def subdivide_all_edges(h: PlaneGraph) -> PlaneGraph:
    """Replace each edge by a path of length two; new vertex ``n + edge index``."""
    n = h.n
    mid = {e: n + i for i, e in enumerate(h.edges)}
    rot = [[mid[norm_edge(v, u)] for u in h.rotation[v]] for v in range(n)]
    edges = []
    for (u, v), w in mid.items():
        rot.append([u, v])
        edges += [(u, w), (w, v)]
    return build_plane_graph(AbstractGraph(n + len(mid), tuple(edges)), rot)


def smooth_vertices(h: PlaneGraph, vertices: Iterable[int]) -> PlaneGraph:
    """Inverse of subdivision: remove degree-2 vertices, joining their neighbours."""
    drop = set(vertices)
    rot = [list(r) for r in h.rotation]
    for w in drop:
        if len(rot[w]) != 2:
            raise PlaneGraphError(f"vertex {w} does not have degree 2")
    for w in drop:
        a, b = rot[w]
        rot[a][rot[a].index(w)] = b
        rot[b][rot[b].index(w)] = a
    keep = [v for v in range(h.n) if v not in drop]
    new_of = {v: i for i, v in enumerate(keep)}
    new_rot = [[new_of[u] for u in rot[v]] for v in keep]
    edges = {norm_edge(new_of[v], new_of[u]) for v in keep for u in rot[v]}
    return build_plane_graph(AbstractGraph(len(keep), tuple(edges)), new_rot)


def _insert_chord(rot: list[list[int]], x: int, after_x: int, z: int, after_z: int) -> None:
    rx = rot[x]
    rx.insert(rx.index(after_x) + 1, z)
    rz = rot[z]
    rz.insert(rz.index(after_z) + 1, x)


def triangulate(h: PlaneGraph) -> PlaneGraph:
    """Add chords until every face is a triangle, keeping the graph simple."""
    if not h.is_connected() or h.n < 3:
        raise CannotTriangulate("need a connected graph on at least 3 vertices")
    rot = [list(r) for r in h.rotation]
    edges = set(h.edges)
    cur = h
    while True:
        big = [walk for walk in cur.faces if len(walk) > 3]
        if not big:
            return cur
        walk = big[0]
        verts = [a for a, _ in walk]
        L = len(verts)
        for i in range(L):
            x, y, z = verts[i], verts[(i + 1) % L], verts[(i + 2) % L]
            if x != z and norm_edge(x, z) not in edges:
                prev_x = verts[(i - 1) % L]
                _insert_chord(rot, x, prev_x, z, y)
                edges.add(norm_edge(x, z))
                break
        else:
            raise CannotTriangulate("every chord of a face would duplicate an edge")
        cur = build_plane_graph(AbstractGraph(h.n, tuple(edges)), rot)


def is_triangulation(h: PlaneGraph) -> bool:
    if h.n < 3 or not h.is_connected():
        return False
    for walk in h.faces:
        if len(walk) != 3 or len({a for a, _ in walk}) != 3:
            return False
    return True


def is_three_connected(g: AbstractGraph) -> bool:
    if g.n < 4 or not g.is_connected():
        return False
    for a, b in itertools.combinations(range(g.n), 2):
        rest = [v for v in range(g.n) if v != a and v != b]
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y != a and y != b and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(rest):
            return False
    return True


# -- canonical forms of combinatorial maps -------------------------------------


def _code_from(h: PlaneGraph, start: Dart, orient: int) -> tuple[int, ...]:
    rot, pos = h.rotation, h.pos
    number = {start[0]: 0}
    ref = [start]
    code: list[int] = []
    i = 0
    while i < len(ref):
        v, w = ref[i]
        r = rot[v]
        d = len(r)
        j0 = pos[v][w]
        for t in range(d):
            u = r[(j0 + orient * t) % d]
            if u not in number:
                number[u] = len(ref)
                ref.append((u, v))
            code.append(number[u])
        code.append(-1)
        i += 1
    return tuple(code)


def canonical_code(h: PlaneGraph, orientations: Sequence[int] = (1, -1)) -> tuple:
    """Minimal breadth-first code over all start darts and the given orientations.

    Only meaningful for connected drawings; disconnected drawings compare by
    the sorted multiset of their component codes (nesting is ignored).
    """
    comps = h.graph.components()
    if len(comps) > 1:
        parts = []
        for comp in comps:
            sub, _ = h.restrict(comp)
            parts.append(canonical_code(sub, orientations))
        return ("multi", tuple(sorted(parts)))
    if h.m == 0:
        return (h.n,)
    best = None
    for v in range(h.n):
        for w in h.rotation[v]:
            for o in orientations:
                c = _code_from(h, (v, w), o)
                if best is None or c < best:
                    best = c
    return (h.n, h.m) + best


def equivalent_drawings(a: PlaneGraph, b: PlaneGraph) -> bool:
    """True iff some sphere homeomorphism (reflections included) maps a onto b."""
    if a.n != b.n or a.m != b.m:
        return False
    return canonical_code(a) == canonical_code(b)


def oriented_equivalent(a: PlaneGraph, b: PlaneGraph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    return canonical_code(a, (1,)) == canonical_code(b, (1,))


def orientation_preserving_automorphisms(h: PlaneGraph) -> int:
    """Number of rotation-preserving automorphisms of a connected drawing."""
    if h.m == 0:
        return 1
    v0 = next(v for v in range(h.n) if h.rotation[v])
    base = _code_from(h, (v0, h.rotation[v0][0]), 1)
    return sum(
        1 for v in range(h.n) for w in h.rotation[v] if _code_from(h, (v, w), 1) == base
    )
