"""Deterministic instance generators for tests and benchmarks."""

from __future__ import annotations

import random

from .plane_graph import AbstractGraph, PlaneGraph, build_plane_graph, norm_edge, planar_embed


def grid(rows: int, cols: int | None = None) -> PlaneGraph:
    """``rows x cols`` grid; vertex ``r * cols + c``."""
    cols = rows if cols is None else cols
    vid = lambda r, c: r * cols + c  # noqa: E731
    rot = []
    edges = []
    for r in range(rows):
        for c in range(cols):
            # clockwise in screen coordinates: right, down, left, up
            nb = []
            for dr, dc in ((0, 1), (1, 0), (0, -1), (-1, 0)):
                rr, cc = r + dr, c + dc
                if 0 <= rr < rows and 0 <= cc < cols:
                    nb.append(vid(rr, cc))
                    if (dr, dc) in ((0, 1), (1, 0)):
                        edges.append((vid(r, c), vid(rr, cc)))
            rot.append(nb)
    return build_plane_graph(AbstractGraph(rows * cols, tuple(edges)), rot)


def cycle(n: int) -> PlaneGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    edges = tuple(norm_edge(i, (i + 1) % n) for i in range(n))
    rot = [[(i + 1) % n, (i - 1) % n] for i in range(n)]
    return build_plane_graph(AbstractGraph(n, edges), rot)


def path(n: int) -> PlaneGraph:
    edges = tuple((i, i + 1) for i in range(n - 1))
    rot = [[u for u in (i - 1, i + 1) if 0 <= u < n] for i in range(n)]
    return build_plane_graph(AbstractGraph(n, edges), rot)


def wheel(spokes: int) -> PlaneGraph:
    """Hub 0 joined to a rim cycle 1..spokes."""
    if spokes < 3:
        raise ValueError("a wheel needs at least 3 spokes")
    rim = [1 + i for i in range(spokes)]
    edges = [(0, v) for v in rim]
    edges += [norm_edge(rim[i], rim[(i + 1) % spokes]) for i in range(spokes)]
    rot = [list(rim)]
    for i, v in enumerate(rim):
        nxt, prv = rim[(i + 1) % spokes], rim[(i - 1) % spokes]
        rot.append([nxt, 0, prv])
    return build_plane_graph(AbstractGraph(spokes + 1, tuple(edges)), rot)


def star(leaves: int) -> PlaneGraph:
    edges = tuple((0, i) for i in range(1, leaves + 1))
    rot = [list(range(1, leaves + 1))] + [[0] for _ in range(leaves)]
    return build_plane_graph(AbstractGraph(leaves + 1, edges), rot)


def random_triangulation(n: int, rng: random.Random) -> PlaneGraph:
    """Stack vertices into random faces starting from a triangle."""
    if n < 3:
        raise ValueError("need at least 3 vertices")
    rot: list[list[int]] = [[1, 2], [2, 0], [0, 1]]
    faces = [(0, 1, 2), (0, 2, 1)]
    for w in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces.pop(i)
        # face (a, b, c) is traced a->b->c; insert w inside it
        for x, nxt in ((a, b), (b, c), (c, a)):
            rx = rot[x]
            rx.insert(rx.index(nxt), w)
        rot.append([a, c, b])
        faces += [(a, b, w), (b, c, w), (c, a, w)]
    edges = {norm_edge(v, u) for v in range(n) for u in rot[v]}
    return build_plane_graph(AbstractGraph(n, tuple(sorted(edges))), rot)


def random_planar(n: int, seed: int = 0, keep: float = 0.6, connected: bool = True) -> PlaneGraph:
    """Random triangulation with random edge deletions, planarity re-verified.

    With ``connected`` the deletions never disconnect the graph.
    """
    rng = random.Random(seed)
    if n < 3:
        edges = tuple((i, i + 1) for i in range(n - 1))
        return planar_embed(AbstractGraph(n, edges))
    tri = random_triangulation(n, rng)
    edges = list(tri.edges)
    rng.shuffle(edges)
    kept = set(edges)
    for e in edges:
        if rng.random() < keep:
            continue
        kept.discard(e)
        if connected and not AbstractGraph(n, tuple(kept)).is_connected():
            kept.add(e)
    g = AbstractGraph(n, tuple(sorted(kept)))
    rot = [[u for u in tri.rotation[v] if norm_edge(u, v) in kept] for v in range(n)]
    pg = build_plane_graph(g, rot)
    planar_embed(g)  # independent re-verification
    return pg


def generate(kind: str, size: int, seed: int = 0) -> PlaneGraph:
    if kind == "grid":
        return grid(size)
    if kind == "cycle":
        return cycle(size)
    if kind == "wheel":
        return wheel(size)
    if kind == "random-planar":
        return random_planar(size, seed)
    raise ValueError(f"unknown generator {kind!r}")
