"""Top-level solvers: layered chunks of a plane host, then the DP per chunk.

The host is cut into BFS layers ``S_0, S_1, ...`` from a root vertex.  Chunk
``i`` is the plane subgraph induced by ``S_i .. S_{i+k}`` and only counts
occurrences that touch ``S_i``; an occurrence of a connected ``k``-vertex
pattern spans at most ``k`` consecutive layers, so it is found exactly once,
in the chunk of its lowest layer.

Each chunk component is decomposed from the face that contained the removed
inner layers.  Every ``S_i`` vertex lies on that face, which keeps the radial
depth, and hence the width, bounded in ``k``.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field

from .embedded_dp import DPResult, PatternContext, run_dp
from .pattern_embed import DEFAULT_MAX_K, PatternTooLarge, enumerate_embeddings, oriented_variants
from .plane_graph import AbstractGraph, NonPlanar, PlaneGraph, PlaneGraphError, planar_embed
from .sphere_cut import ScDecomposition, sc_decomposition

__all__ = [
    "DPResult",
    "LayerChunk",
    "NonPlanarHost",
    "PatternDisconnected",
    "WidthBoundViolated",
    "bfs_layers",
    "build_chunk",
    "plsi_plane",
    "planar_subgraph_iso",
]


class PatternDisconnected(PlaneGraphError):
    pass


class EmptyPattern(PlaneGraphError):
    pass


class NonPlanarHost(PlaneGraphError):
    pass


class WidthBoundViolated(AssertionError):
    pass


@dataclass
class ChunkComponent:
    graph: PlaneGraph
    old: list[int]  # component vertex -> host vertex
    root_face: int
    scd: ScDecomposition


@dataclass
class LayerChunk:
    index: int
    layers: list[list[int]]
    vertices: list[int]
    required: frozenset[int]
    components: list[ChunkComponent] = field(default_factory=list)


def bfs_layers(g: PlaneGraph, root: int) -> list[list[int]]:
    """Vertices of ``root``'s component grouped by distance from ``root``."""
    dist = {root: 0}
    layers = [[root]]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in g.rotation[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if dist[y] == len(layers):
                    layers.append([])
                layers[dist[y]].append(y)
                queue.append(y)
    return layers


def _outer_corner(g: PlaneGraph, w: int, keep: set[int], inner: set[int]) -> tuple[int, int] | None:
    """Corner at ``w`` (kept rotation index) where an inner neighbour used to sit."""
    rot = g.rotation[w]
    d = len(rot)
    kept = [u for u in rot if u in keep]
    if not kept:
        return None
    for p, x in enumerate(rot):
        if x in inner:
            for back in range(1, d + 1):
                u = rot[(p - back) % d]
                if u in keep:
                    return w, kept.index(u)
    return None


def build_chunk(
    g: PlaneGraph,
    i: int,
    k: int,
    layers: list[list[int]],
    whole: bool = False,
) -> LayerChunk:
    """Chunk ``i``: ``G[S_i .. S_{i+k}]``, required set ``S_i``, one decomposition per component.

    With ``whole`` the chunk is every layer and every vertex is required.
    """
    span = layers if whole else layers[i : i + k + 1]
    verts = sorted(v for layer in span for v in layer)
    keep = set(verts)
    required = frozenset(verts) if whole else frozenset(layers[i])
    inner = set() if whole or i == 0 else set(layers[i - 1])
    chunk = LayerChunk(i, [list(x) for x in span], verts, required)
    sub, old = g.restrict(verts)
    for comp in sub.graph.components():
        if len(comp) < 2:
            continue
        cg, cold = sub.restrict(comp)
        host_ids = [old[x] for x in cold]
        new_of = {hv: j for j, hv in enumerate(host_ids)}
        face = 0
        if not whole:
            anchor = next(hv for hv in host_ids if hv in required)
            if inner:
                for hv in host_ids:
                    if hv in required:
                        c = _outer_corner(g, hv, keep, inner)
                        if c is not None:
                            face = cg.corner_face(new_of[hv], c[1])
                            break
            else:
                face = cg.corner_face(new_of[anchor], 0)
        scd = sc_decomposition(cg, root_face=face)
        if not whole and scd.width > 2 * k + 3:
            raise WidthBoundViolated(f"chunk {i}: width {scd.width} exceeds {2 * k + 3}")
        chunk.components.append(ChunkComponent(cg, host_ids, face, scd))
    return chunk


def _check_pattern(h: AbstractGraph, max_k: int) -> None:
    if h.m == 0:
        raise EmptyPattern("pattern has no edges")
    if not h.is_connected():
        raise PatternDisconnected("pattern must be connected")
    if h.n > max_k:
        raise PatternTooLarge(f"pattern has {h.n} vertices, budget is {max_k}")


def plsi_plane(
    g: PlaneGraph,
    h: PlaneGraph,
    mode: str = "count",
    limit: int | None = None,
    max_k: int = DEFAULT_MAX_K,
    pattern_context: PatternContext | None = None,
    schedule_seed: int | None = None,
    stats: dict | None = None,
) -> DPResult:
    """Occurrences of the oriented drawing ``h`` as subdrawings of ``g``."""
    _check_pattern(h.graph, max_k)
    k = h.n
    pc = pattern_context or PatternContext(h)
    result = DPResult()
    seen_vertices: dict[int, int] = {}
    done = set()
    for start in range(g.n):
        if start in done or not g.rotation[start]:
            continue
        layers = bfs_layers(g, start)
        for layer in layers:
            done.update(layer)
        ell = len(layers) - 1
        whole = ell <= k
        chunk_ids = [0] if whole else range(ell + 1)
        for i in chunk_ids:
            t0 = time.perf_counter()
            chunk = build_chunk(g, i, k, layers, whole=whole)
            for v in chunk.vertices:
                seen_vertices[v] = seen_vertices.get(v, 0) + 1
            for comp in chunk.components:
                req = {j for j, hv in enumerate(comp.old) if hv in chunk.required}
                seed = None if schedule_seed is None else schedule_seed + 7919 * i
                r = run_dp(comp.scd, pc, req.__contains__, mode, limit, seed)
                if r.solutions:
                    r.solutions = [
                        frozenset(_host_edge(comp.old, e) for e in es) for es in r.solutions
                    ]
                result.add(r)
                if mode == "decide" and result.found:
                    return result
            if stats is not None:
                stats.setdefault("chunk_seconds", []).append(time.perf_counter() - t0)
    if seen_vertices and max(seen_vertices.values()) > k + 1:
        raise AssertionError("a vertex appears in more than k + 1 chunks")
    if mode == "list":
        if len(set(result.solutions)) != len(result.solutions):
            raise AssertionError("chunks reported the same occurrence twice")
        if limit is not None:
            result.solutions = result.solutions[:limit]
    return result


def _host_edge(old: list[int], e: tuple[int, int]) -> tuple[int, int]:
    a, b = old[e[0]], old[e[1]]
    return (a, b) if a < b else (b, a)


def planar_subgraph_iso(
    g: AbstractGraph | PlaneGraph,
    h: AbstractGraph,
    mode: str = "count",
    limit: int | None = None,
    max_k: int = DEFAULT_MAX_K,
    schedule_seed: int | None = None,
) -> DPResult:
    """Subgraphs of the planar graph ``g`` isomorphic to ``h``.

    ``count`` is the number of distinct host edge sets; automorphisms of
    ``h`` do not multiply it.
    """
    _check_pattern(h, max_k)
    if isinstance(g, PlaneGraph):
        pg = g
    else:
        try:
            pg = planar_embed(g)
        except NonPlanar as exc:
            raise NonPlanarHost(str(exc)) from exc
    catalog = enumerate_embeddings(h, max_k=max_k)
    total = DPResult()
    for d in oriented_variants(catalog):
        r = plsi_plane(pg, d, mode, None if mode != "list" else limit, max_k, schedule_seed=schedule_seed)
        total.found = total.found or r.found
        total.count += r.count
        total.solutions.extend(r.solutions)
        total.table_sizes.extend(r.table_sizes)
        total.widths.extend(r.widths)
        if mode == "decide" and total.found:
            break
    if mode == "list":
        uniq = sorted(set(total.solutions), key=sorted)
        if len(uniq) != len(total.solutions):
            raise AssertionError("two drawings of the pattern matched the same host subgraph")
        total.solutions = uniq[:limit] if limit is not None else uniq
        total.count = len(total.solutions)
    return total
