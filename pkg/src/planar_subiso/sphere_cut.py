"""Sphere-cut decompositions from a breadth-first tree of the radial graph.

Construction: BFS tree ``T_S`` of the radial graph, the dual spanning tree
``T*`` formed by the corners not in ``T_S`` (nodes are host edges), one local
ternary tree per node of ``T*`` with its neighbours in cyclic order, glued
along ``T*`` edges.  Gluing two identified leaves is realised by joining
their neighbours with one tree edge.

Every tree edge carries the host noose around one of its sides, as a cyclic
word of radial darts ``(corner, +1)`` (vertex to face) or ``(corner, -1)``
(face to vertex).  Nooses are computed bottom-up: the boundary word of a
union of two sides is the reduced splice of the two boundary words.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .noose import is_combinatorial_noose
from .plane_graph import PlaneGraph, PlaneGraphError, norm_edge
from .radial import RadialGraph, radial_graph

RDart = tuple[int, int]


class EmptyGraph(PlaneGraphError):
    pass


class DisconnectedRadial(PlaneGraphError):
    pass


@dataclass(frozen=True)
class BFSTree:
    root: int
    parent_edge: tuple[int, ...]  # radial edge to parent, -1 at the root
    depth: tuple[int, ...]
    tree_edges: frozenset[int]

    @property
    def eccentricity(self) -> int:
        return max(self.depth)


def radial_bfs_tree(r: RadialGraph, root_face: int) -> BFSTree:
    root = r.face_node(root_face)
    N = r.num_nodes
    depth = [-1] * N
    parent = [-1] * N
    depth[root] = 0
    queue = deque([root])
    while queue:
        x = queue.popleft()
        rot = r.rotation[x]
        start = rot.index(parent[x]) if parent[x] >= 0 else 0
        for t in range(len(rot)):
            c = rot[(start + t) % len(rot)]
            y = r.other(c, x)
            if depth[y] < 0:
                depth[y] = depth[x] + 1
                parent[y] = c
                queue.append(y)
    if any(d < 0 for x, d in enumerate(depth) if r.rotation[x]):
        raise DisconnectedRadial("radial graph is not connected")
    return BFSTree(
        root, tuple(parent), tuple(max(d, 0) for d in depth), frozenset(p for p in parent if p >= 0)
    )


@dataclass(frozen=True)
class HostNoose:
    """A host noose as the ordered vertices it meets.

    ``cin[i]`` / ``cout[i]`` are rotation indices of the corners through which
    the noose enters and leaves ``vertices[i]``; the side it bounds holds the
    edges clockwise strictly after ``cin[i]`` up to and including ``cout[i]``.
    ``faces[i]`` is the face passed between ``vertices[i]`` and the next one.
    """

    vertices: tuple[int, ...]
    cin: tuple[int, ...]
    cout: tuple[int, ...]
    faces: tuple[int, ...]
    lone_face: int | None = None  # face of an empty noose, when known

    def __len__(self) -> int:
        return len(self.vertices)

    def sequence(self) -> list[tuple[str, int]]:
        seq: list[tuple[str, int]] = []
        for v, f in zip(self.vertices, self.faces):
            seq += [("v", v), ("f", f)]
        if self.vertices:
            seq.append(("v", self.vertices[0]))
        return seq

    def arc(self, g: PlaneGraph, i: int) -> list[int]:
        """Neighbours of ``vertices[i]`` on the bounded side, clockwise."""
        v = self.vertices[i]
        d = g.degree(v)
        a, b = self.cin[i] % d, self.cout[i] % d
        steps = (b - a) % d or d
        return [g.rotation[v][(a + t) % d] for t in range(1, steps + 1)]


def _reduce_cyclic(word: list[RDart]) -> list[RDart]:
    stack: list[RDart] = []
    for c, s in word:
        if stack and stack[-1] == (c, -s):
            stack.pop()
        else:
            stack.append((c, s))
    lo, hi = 0, len(stack) - 1
    while lo < hi and stack[lo] == (stack[hi][0], -stack[hi][1]):
        lo += 1
        hi -= 1
    return stack[lo : hi + 1]


def _dart_head(r: RadialGraph, d: RDart) -> int:
    v, f = r.ends[d[0]]
    return f if d[1] > 0 else v


def splice(r: RadialGraph, a: list[RDart], b: list[RDart]) -> list[RDart]:
    """Boundary word of the union of two regions with boundary words a and b."""
    if not a:
        return list(b)
    if not b:
        return list(a)
    where_b = {d: i for i, d in enumerate(b)}
    for i, d in enumerate(a):
        j = where_b.get((d[0], -d[1]))
        if j is not None:
            word = a[i + 1 :] + a[:i] + b[j + 1 :] + b[:j]
            return _reduce_cyclic(word)
    heads_b = {}
    for j, d in enumerate(b):
        heads_b.setdefault(_dart_head(r, d), j)
    for i, d in enumerate(a):
        j = heads_b.get(_dart_head(r, d))
        if j is not None:
            return _reduce_cyclic(a[: i + 1] + b[j + 1 :] + b[: j + 1] + a[i + 1 :])
    raise PlaneGraphError("regions do not touch; cannot splice boundaries")


def reverse_word(word: list[RDart]) -> list[RDart]:
    return [(c, -s) for c, s in reversed(word)]


def word_to_noose(g: PlaneGraph, r: RadialGraph, word: list[RDart]) -> HostNoose:
    if not word:
        return HostNoose((), (), (), ())
    # rotate so the word starts by leaving a vertex
    k = next(i for i, (_, s) in enumerate(word) if s > 0)
    w = word[k:] + word[:k]
    verts, cin, cout, faces = [], [], [], []
    for i in range(0, len(w), 2):
        c_out, s_out = w[i]
        c_in_prev = w[i - 1][0]
        v = r.ends[c_out][0]
        if s_out < 0 or w[i - 1][1] > 0 or r.ends[c_in_prev][0] != v:
            raise PlaneGraphError("boundary word does not alternate vertices and faces")
        off = g.corner_offset[v]
        verts.append(v)
        cin.append(c_in_prev - off)
        cout.append(c_out - off)
        faces.append(r.ends[c_out][1] - g.n)
    return HostNoose(tuple(verts), tuple(cin), tuple(cout), tuple(faces))


def leaf_word(g: PlaneGraph, u: int, v: int) -> list[RDart]:
    iu, iv = g.pos[u][v], g.pos[v][u]
    word = [
        (g.corner_id(u, iu), 1),
        (g.corner_id(v, iv - 1), -1),
        (g.corner_id(v, iv), 1),
        (g.corner_id(u, iu - 1), -1),
    ]
    return _reduce_cyclic(word)


@dataclass
class ScDecomposition:
    """Ternary tree with leaves on host edges and nooses on tree edges.

    Node ids ``0..m-1`` are the leaves (leaf ``i`` carries ``host.edges[i]``);
    larger ids are internal.  ``root`` is a leaf used to orient the tree.
    """

    host: PlaneGraph
    radial: RadialGraph
    adj: list[list[int]]
    root: int
    parent: list[int]
    order: list[int]  # post-order of non-root nodes
    words: dict[int, list[RDart]]  # node -> boundary word of its subtree
    bfs: BFSTree | None = None
    _nooses: dict = field(default_factory=dict, repr=False)

    @property
    def num_leaves(self) -> int:
        return self.host.m

    def is_leaf(self, t: int) -> bool:
        return t < self.host.m

    def children(self, t: int) -> list[int]:
        return [c for c in self.adj[t] if c != self.parent[t]]

    def tree_edges(self) -> list[tuple[int, int]]:
        return [(t, self.parent[t]) for t in self.order]

    def noose(self, t: int) -> HostNoose:
        """Noose around the subtree hanging below node ``t``."""
        hn = self._nooses.get(t)
        if hn is None:
            hn = word_to_noose(self.host, self.radial, self.words[t])
            self._nooses[t] = hn
        return hn

    def mid(self, t: int) -> set[int]:
        return set(self.noose(t).vertices)

    @property
    def width(self) -> int:
        if not self.order:
            return 2
        return max(len(self.noose(t)) for t in self.order)

    def subtree_leaves(self, t: int) -> list[int]:
        out, stack = [], [t]
        while stack:
            x = stack.pop()
            if self.is_leaf(x):
                out.append(x)
            stack.extend(c for c in self.adj[x] if c != self.parent[x])
        return sorted(out)

    def to_json(self) -> str:
        nooses = {}
        for t in self.order:
            hn = self.noose(t)
            nooses[f"{t}-{self.parent[t]}"] = [
                [kind, x] for kind, x in hn.sequence()
            ]
        payload = {
            "schema": 1,
            "nodes": len(self.adj),
            "edges": [[t, self.parent[t]] for t in self.order],
            "leaf_edge": {str(i): list(self.host.edges[i]) for i in range(self.host.m)},
            "width": self.width,
            "nooses": nooses,
        }
        return json.dumps(payload, sort_keys=True)

    def to_dot(self) -> str:
        lines = ["graph scd {"]
        for i, (u, v) in enumerate(self.host.edges):
            lines.append(f'  {i} [shape=box,label="{u}-{v}"];')
        for t in self.order:
            label = " ".join(map(str, self.noose(t).vertices))
            lines.append(f'  {t} -- {self.parent[t]} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _root_tree(adj: list[list[int]], root: int) -> tuple[list[int], list[int]]:
    parent = [-1] * len(adj)
    seen = [False] * len(adj)
    seen[root] = True
    pre = []
    stack = [root]
    while stack:
        x = stack.pop()
        pre.append(x)
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                stack.append(y)
    order = [x for x in reversed(pre) if x != root]
    return parent, order


def _compute_words(scd: ScDecomposition) -> None:
    g, r = scd.host, scd.radial
    words = {}
    for t in scd.order:
        if scd.is_leaf(t):
            u, v = g.edges[t]
            words[t] = leaf_word(g, u, v)
        else:
            a, b = scd.children(t)
            words[t] = splice(r, words[a], words[b])
    scd.words = words
    scd._nooses.clear()


def build_tree(
    g: PlaneGraph, adj: list[list[int]], radial: RadialGraph | None = None, root: int = 0,
    bfs: BFSTree | None = None,
) -> ScDecomposition:
    radial = radial or radial_graph(g)
    parent, order = _root_tree(adj, root)
    scd = ScDecomposition(g, radial, adj, root, parent, order, {}, bfs)
    _compute_words(scd)
    return scd


def sc_decomposition(g: PlaneGraph, root_face: int = 0) -> ScDecomposition:
    if g.m == 0:
        raise EmptyGraph("graph has no edges")
    if not g.is_connected() and any(g.degree(v) == 0 for v in range(g.n)):
        g, _ = g.restrict([v for v in range(g.n) if g.degree(v)])
    r = radial_graph(g)
    bfs = radial_bfs_tree(r, root_face)
    m = g.m
    edge_id = {e: i for i, e in enumerate(g.edges)}
    adj: list[list[int]] = [[] for _ in range(m)]
    if m == 1:
        return build_tree(g, adj, r, 0, bfs)

    def across(v: int, i: int, x: int) -> int | None:
        """T* neighbour of edge x through corner (v, i), if that corner is a cotree edge."""
        c = g.corner_id(v, i)
        if c in bfs.tree_edges:
            return None
        d = g.degree(v)
        a, b = g.rotation[v][i % d], g.rotation[v][(i + 1) % d]
        ea, eb = edge_id[norm_edge(v, a)], edge_id[norm_edge(v, b)]
        return eb if ea == x else ea

    nbrs: list[list[int]] = []
    for x, (u, v) in enumerate(g.edges):
        iu, iv = g.pos[u][v], g.pos[v][u]
        ring = [across(u, iu, x), across(v, iv - 1, x), across(v, iv, x), across(u, iu - 1, x)]
        present = [k for k in range(4) if ring[k] is not None]
        if len(present) == 3:
            # the last two ports share a caterpillar node; they must meet at a
            # face (ring slots 0-1 or 2-3), never at a host vertex
            pair = [0, 1] if 0 in present and 1 in present else [2, 3]
            present = [k for k in present if k not in pair] + pair
        ys = []
        for k in present:
            if ring[k] not in ys:
                ys.append(ring[k])
        nbrs.append(ys)
    port: list[dict[int, int]] = [dict() for _ in range(m)]

    def new_node() -> int:
        adj.append([])
        return len(adj) - 1

    def link(a: int, b: int) -> None:
        adj[a].append(b)
        adj[b].append(a)

    for x, ys in enumerate(nbrs):
        d = len(ys)
        if d == 1:
            port[x][ys[0]] = x
            continue
        prev = x
        for j in range(d - 1):
            node = new_node()
            link(prev, node)
            port[x][ys[j]] = node
            prev = node
        port[x][ys[-1]] = prev
    for x, ys in enumerate(nbrs):
        for y in ys:
            if x < y:
                link(port[x][y], port[y][x])
    if len(adj) != 2 * m - 2 or sum(map(len, adj)) != 2 * (len(adj) - 1):
        raise PlaneGraphError("dual cotree did not yield a tree")
    return build_tree(g, adj, r, 0, bfs)


@dataclass
class Diagnostics:
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate(scd: ScDecomposition, g: PlaneGraph | None = None) -> Diagnostics:
    """Recompute every structural property of the decomposition from scratch."""
    g = g or scd.host
    out: list[str] = []
    m = g.m
    adj = scd.adj
    for t, nb in enumerate(adj):
        if t < m and len(nb) > 1 and m > 1:
            out.append(f"leaf {t} has degree {len(nb)}")
        elif t < m and m > 1 and len(nb) != 1:
            out.append(f"leaf {t} has degree {len(nb)}")
        elif t >= m and len(nb) != 3:
            out.append(f"arity: internal node {t} has degree {len(nb)}")
    if out:
        return Diagnostics(out)
    if m > 1 and sum(map(len, adj)) // 2 != len(adj) - 1:
        return Diagnostics(["tree has the wrong number of edges"])
    parent, order = _root_tree(adj, scd.root)
    if len(order) != len(adj) - 1:
        return Diagnostics(["tree is not connected"])
    below: dict[int, set[int]] = {}
    for t in order:
        s = {t} if t < m else set()
        for c in adj[t]:
            if c != parent[t]:
                s |= below[c]
        below[t] = s
    for t in order:
        side = below[t]
        v1 = {x for i in side for x in g.edges[i]}
        v2 = {x for i in range(m) if i not in side for x in g.edges[i]}
        mid = v1 & v2
        hn = scd.noose(t)
        if len(set(hn.vertices)) != len(hn.vertices):
            out.append(f"noose at {t}: repeated vertex")
            continue
        if set(hn.vertices) != mid:
            out.append(f"middle set mismatch at tree edge {t}-{parent[t]}")
            continue
        side_edges = {g.edges[i] for i in side}
        for i, v in enumerate(hn.vertices):
            arc = {norm_edge(v, u) for u in hn.arc(g, i)}
            mine = {e for e in side_edges if v in e}
            if arc != mine:
                out.append(f"noose at {t}: arc of vertex {v} does not match its side")
        if hn.vertices and not is_combinatorial_noose(hn.sequence(), g):
            out.append(f"noose at {t}: not a combinatorial noose")
    for t in range(m, len(adj)):
        nb = adj[t]
        sets = []
        for c in nb:
            if c == parent[t] or (t == scd.root):
                # side beyond the parent: complement of t's subtree
                sets.append(_corner_set(scd.words.get(t, [])))
            else:
                sets.append(_corner_set(scd.words.get(c, [])))
        if sets[0] ^ sets[1] != sets[2] or sets[0] ^ sets[2] != sets[1]:
            out.append(f"symmetric difference fails at node {t}")
    return Diagnostics(out)


def _corner_set(word: list[RDart]) -> set[int]:
    return {c for c, _ in word}
