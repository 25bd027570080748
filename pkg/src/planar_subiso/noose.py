"""Combinatorial nooses of plane graphs.

A combinatorial noose ``[v0, f0, v1, f1, ..., f_{m-1}, v0]`` is stored as the
two tuples ``vertices`` and ``faces`` where ``faces[i]`` sits between
``vertices[i]`` and ``vertices[i + 1]``.  Nooses are oriented; the canonical
rotation puts the smallest vertex first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .plane_graph import (
    AbstractGraph,
    CannotTriangulate,
    PlaneGraph,
    PlaneGraphError,
    build_plane_graph,
    is_triangulation,
    norm_edge,
    subdivide_all_edges,
    triangulate,
)


class UnknownId(PlaneGraphError):
    pass


class NotTriangulation(PlaneGraphError):
    pass


@dataclass(frozen=True)
class CombinatorialNoose:
    vertices: tuple[int, ...]
    faces: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.faces) or not self.vertices:
            raise ValueError("a noose needs as many faces as vertices, at least one")

    def __len__(self) -> int:
        return len(self.vertices)

    def canonical(self) -> "CombinatorialNoose":
        i = self.vertices.index(min(self.vertices))
        return CombinatorialNoose(self.vertices[i:] + self.vertices[:i], self.faces[i:] + self.faces[:i])

    def reversed(self) -> "CombinatorialNoose":
        vs = (self.vertices[0],) + tuple(reversed(self.vertices[1:]))
        fs = tuple(reversed(self.faces))
        return CombinatorialNoose(vs, fs).canonical()

    def unoriented(self) -> "CombinatorialNoose":
        return min(self.canonical(), self.reversed(), key=lambda x: (x.vertices, x.faces))

    def sequence(self) -> list[tuple[str, int]]:
        seq: list[tuple[str, int]] = []
        for v, f in zip(self.vertices, self.faces):
            seq += [("v", v), ("f", f)]
        return seq + [("v", self.vertices[0])]


@dataclass(frozen=True)
class EmptyNoose:
    """Noose meeting no vertex; ``face`` is the face it lies in, if known."""

    face: int | None = None

    def __len__(self) -> int:
        return 0


def _as_cycle(seq, h: PlaneGraph) -> tuple[list[int], list[int]]:
    if isinstance(seq, CombinatorialNoose):
        return list(seq.vertices), list(seq.faces)
    items = list(seq)
    if not items:
        raise UnknownId("empty sequence")
    if isinstance(items[0], tuple) and items[0] and isinstance(items[0][0], str):
        kinds = [k for k, _ in items]
        vals = [x for _, x in items]
    else:
        kinds = ["v" if i % 2 == 0 else "f" for i in range(len(items))]
        vals = list(items)
    if len(vals) < 3 or len(vals) % 2 == 0:
        raise UnknownId("sequence must alternate vertex, face, ..., vertex")
    for i, k in enumerate(kinds):
        if k != ("v" if i % 2 == 0 else "f"):
            raise UnknownId("sequence must alternate vertex, face, ..., vertex")
    vs, fs = vals[0::2], vals[1::2]
    for v in vs:
        if not 0 <= v < h.n:
            raise UnknownId(f"unknown vertex {v}")
    for f in fs:
        if not 0 <= f < h.num_faces:
            raise UnknownId(f"unknown face {f}")
    if vs[0] != vs[-1]:
        return vs, fs  # caught by the distinctness test
    return vs[:-1], fs


def _cyclic_order(a: int, b: int, c: int, d: int, L: int) -> bool:
    """True iff a, b, c, d are distinct positions in strict cyclic order."""
    if len({a, b, c, d}) < 4:
        return False
    return (b - a) % L < (c - a) % L < (d - a) % L


def passages_cross(h: PlaneGraph, f: int, p: tuple[int, int], q: tuple[int, int]) -> bool:
    """Whether passages p=(x, y) and q=(z, w) through face f must cross.

    With repeated vertices on the boundary walk, the passages cross only if
    every choice of boundary occurrences interleaves them.
    """
    walk = h.face_vertices(f)
    L = len(walk)
    occ = {}
    for i, x in enumerate(walk):
        occ.setdefault(x, []).append(i)
    (x, y), (z, w) = p, q
    for a in occ[x]:
        for b in occ[y]:
            for c in occ[z]:
                for d in occ[w]:
                    if not (_cyclic_order(a, c, b, d, L) or _cyclic_order(a, d, b, c, L)):
                        return False
    return True


def is_combinatorial_noose(seq, h: PlaneGraph) -> bool:
    vs, fs = _as_cycle(seq, h)
    m = len(vs)
    if len(fs) != m:
        return False
    if len(set(vs)) != m:
        return False
    walks = {}
    for i in range(m):
        f = fs[i]
        if f not in walks:
            walks[f] = set(h.face_vertices(f))
        if vs[i] not in walks[f] or vs[(i + 1) % m] not in walks[f]:
            return False
    for i, j in itertools.combinations(range(m), 2):
        if fs[i] == fs[j]:
            if passages_cross(h, fs[i], (vs[i], vs[(i + 1) % m]), (vs[j], vs[(j + 1) % m])):
                return False
    return True


def enumerate_nooses(h: PlaneGraph, max_len: int) -> set[CombinatorialNoose]:
    """All oriented combinatorial nooses of length at most ``max_len``.

    Depth-first extension from each start vertex, visiting only larger
    vertices so the output is already in canonical rotation.
    """
    if max_len < 1:
        return set()
    face_verts = [set(h.face_vertices(f)) for f in range(h.num_faces)]
    vfaces = [sorted(h.vertex_faces(v)) for v in range(h.n)]
    out: set[CombinatorialNoose] = set()
    verts: list[int] = []
    faces: list[int] = []

    def ok_with_earlier(f: int, a: int, b: int) -> bool:
        for i, g in enumerate(faces):
            if g == f and passages_cross(h, f, (verts[i], verts[i + 1]), (a, b)):
                return False
        return True

    def extend(start: int) -> None:
        cur = verts[-1]
        for f in vfaces[cur]:
            fv = face_verts[f]
            if start in fv and ok_with_earlier(f, cur, start):
                # closing passage must not cross any earlier one either
                faces.append(f)
                verts.append(start)
                out.add(CombinatorialNoose(tuple(verts[:-1]), tuple(faces)))
                verts.pop()
                faces.pop()
            if len(verts) == max_len:
                continue
            for nxt in sorted(fv):
                if nxt <= start or nxt in verts:
                    continue
                if not ok_with_earlier(f, cur, nxt):
                    continue
                faces.append(f)
                verts.append(nxt)
                extend(start)
                verts.pop()
                faces.pop()

    for s in range(h.n):
        if h.degree(s):
            verts.append(s)
            extend(s)
            verts.pop()
    return out


def unoriented_classes(nooses: Iterable[CombinatorialNoose]) -> set[CombinatorialNoose]:
    return {n.unoriented() for n in nooses}


def noose_to_cycle(t: PlaneGraph, nc: CombinatorialNoose) -> tuple[int, ...]:
    """Vertex cycle (length > 2), edge (length 2) or vertex (length 1) of a noose."""
    if not is_triangulation(t):
        raise NotTriangulation("noose_to_cycle needs a triangulation")
    vs = nc.vertices
    if len(vs) >= 2:
        for i in range(len(vs)):
            a, b = vs[i], vs[(i + 1) % len(vs)]
            if not t.has_edge(a, b):
                raise PlaneGraphError(f"consecutive noose vertices {a}, {b} are not adjacent")
    return tuple(vs)


def _face_map_to_subdivision(h: PlaneGraph, hs: PlaneGraph) -> dict[int, int]:
    mid = {e: h.n + i for i, e in enumerate(h.edges)}
    out = {}
    for f, walk in enumerate(h.faces):
        a, b = walk[0]
        out[f] = hs.dart_face[(a, mid[norm_edge(a, b)])]
    return out


def lift_noose_via_subdivision(
    h: PlaneGraph, nc: CombinatorialNoose, subdivide: bool = True
) -> tuple[PlaneGraph, tuple[int, ...]]:
    """Triangulation of ``h*`` (or of ``h``) in which the noose vertices form a cycle.

    Chords joining consecutive noose vertices are inserted inside the faces
    the noose passes, then the rest is triangulated arbitrarily.
    """
    if len(nc) <= 2:
        raise ValueError("needs a noose of length greater than two")
    base = subdivide_all_edges(h) if subdivide else h
    fmap = _face_map_to_subdivision(h, base) if subdivide else {f: f for f in range(h.num_faces)}
    vs = nc.vertices
    m = len(vs)

    def place(i: int, cur: PlaneGraph, owner: dict[int, int]) -> PlaneGraph | None:
        if i == m:
            return cur
        a, b = vs[i], vs[(i + 1) % m]
        if cur.has_edge(a, b):
            return place(i + 1, cur, owner)
        target = fmap[nc.faces[i]]
        for f, walk in enumerate(cur.faces):
            if owner.get(f) != target:
                continue
            wv = [x for x, _ in walk]
            L = len(wv)
            for p in (j for j in range(L) if wv[j] == a):
                for q in (j for j in range(L) if wv[j] == b):
                    rot = [list(r) for r in cur.rotation]
                    ra, rb = rot[a], rot[b]
                    ra.insert(ra.index(wv[(p - 1) % L]) + 1, b)
                    rb.insert(rb.index(wv[(q - 1) % L]) + 1, a)
                    edges = cur.edges + (norm_edge(a, b),)
                    try:
                        nxt = build_plane_graph(AbstractGraph(cur.n, edges), rot)
                    except PlaneGraphError:
                        continue
                    new_owner = {}
                    for g2, walk2 in enumerate(nxt.faces):
                        d = next((d for d in walk2 if d in cur.dart_face), None)
                        new_owner[g2] = owner.get(cur.dart_face[d]) if d else target
                    res = place(i + 1, nxt, new_owner)
                    if res is not None:
                        return res
        return None

    owner0 = {f: f for f in range(base.num_faces)}
    placed = place(0, base, owner0)
    if placed is None:
        raise CannotTriangulate("could not route the noose through chords")
    tri = triangulate(placed)
    return tri, tuple(vs)

