"""Radial (vertex-face incidence) graph of a plane graph.

Radial edges are the corners of the host: corner ``(v, i)`` joins vertex node
``v`` to the node of the face containing that corner.  A vertex that occurs
several times on one face boundary therefore has parallel radial edges, so
the radial graph keeps its own edge-level rotation system rather than being
a simple :class:`PlaneGraph`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .plane_graph import PlaneGraph


@dataclass(frozen=True)
class RadialGraph:
    host: PlaneGraph
    # node ids: 0..n-1 are host vertices, n + f is face f
    num_nodes: int
    # radial edge id == host corner id; endpoints (vertex node, face node)
    ends: tuple[tuple[int, int], ...]
    # radial edge ids around each node in embedding order
    rotation: tuple[tuple[int, ...], ...]

    def is_face_node(self, x: int) -> bool:
        return x >= self.host.n

    def origin(self, x: int) -> tuple[str, int]:
        n = self.host.n
        return ("face", x - n) if x >= n else ("vertex", x)

    def face_node(self, f: int) -> int:
        return self.host.n + f

    @property
    def num_edges(self) -> int:
        return len(self.ends)

    def other(self, c: int, x: int) -> int:
        a, b = self.ends[c]
        return b if x == a else a

    def trace_faces(self) -> list[list[tuple[int, int]]]:
        """Faces as lists of radial darts ``(node, edge)``."""
        where = {}
        for x, r in enumerate(self.rotation):
            for i, c in enumerate(r):
                where[(x, c)] = i
        seen = set()
        faces = []
        for x, r in enumerate(self.rotation):
            for c in r:
                if (x, c) in seen:
                    continue
                walk = []
                a, e = x, c
                while (a, e) not in seen:
                    seen.add((a, e))
                    walk.append((a, e))
                    b = self.other(e, a)
                    rb = self.rotation[b]
                    e = rb[(where[(b, e)] + 1) % len(rb)]
                    a = b
                faces.append(walk)
        return faces

    def euler_ok(self) -> bool:
        if self.num_edges == 0:
            return True
        isolated = sum(1 for r in self.rotation if not r)
        v = self.num_nodes - isolated
        return v - self.num_edges + len(self.trace_faces()) == 2


def radial_graph(g: PlaneGraph) -> RadialGraph:
    n = g.n
    ends = []
    rot: list[list[int]] = [[] for _ in range(n + g.num_faces)]
    for v in range(n):
        for i in range(g.degree(v)):
            c = g.corner_id(v, i)
            assert c == len(ends)
            ends.append((v, n + g.corner_faces[v][i]))
            rot[v].append(c)
    for f, walk in enumerate(g.faces):
        # corners in reverse walk order keep the radial rotation planar
        corners = [g.corner_id(b, g.pos[b][a]) for a, b in walk]
        rot[n + f] = corners[::-1]
    return RadialGraph(g, n + g.num_faces, tuple(ends), tuple(tuple(r) for r in rot))
