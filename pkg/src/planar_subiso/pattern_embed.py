"""Catalog of pairwise non-equivalent plane drawings of a pattern graph."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .plane_graph import (
    AbstractGraph,
    NonPlanar,
    PlaneGraph,
    PlaneGraphError,
    canonical_code,
    is_three_connected,
    planar_embed,
)

DEFAULT_MAX_K = 8
DEFAULT_MAX_ROTATIONS = 2_000_000


class NonPlanarPattern(PlaneGraphError):
    pass


class PatternTooLarge(PlaneGraphError):
    pass


@dataclass(frozen=True)
class EmbeddingCatalog:
    pattern: AbstractGraph
    drawings: tuple[PlaneGraph, ...]
    mirror_self_equivalent: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.drawings)


def count_rotation_systems(g: AbstractGraph) -> int:
    return math.prod(math.factorial(max(g.degree(v) - 1, 0)) for v in range(g.n))


def rotation_systems(g: AbstractGraph) -> Iterator[list[list[int]]]:
    """Every rotation system, each cyclic order listed once (smallest neighbour first)."""
    per_vertex = []
    for v in range(g.n):
        nb = sorted(g.adj[v])
        if len(nb) <= 2:
            per_vertex.append([nb])
        else:
            per_vertex.append([[nb[0], *p] for p in itertools.permutations(nb[1:])])
    for combo in itertools.product(*per_vertex):
        yield [list(r) for r in combo]


def all_sphere_drawings(g: AbstractGraph) -> Iterator[PlaneGraph]:
    """Rotation systems of ``g`` that pass the genus check."""
    for rot in rotation_systems(g):
        pg = PlaneGraph(g, rot)
        if pg.euler_ok():
            yield pg


def _is_mirror_self_equivalent(h: PlaneGraph) -> bool:
    return canonical_code(h, (1,)) == canonical_code(h.mirror(), (1,))


def enumerate_embeddings(
    h: AbstractGraph,
    max_k: int = DEFAULT_MAX_K,
    max_rotations: int = DEFAULT_MAX_ROTATIONS,
) -> EmbeddingCatalog:
    """All drawings of ``h`` up to sphere homeomorphism (reflections included).

    A 3-connected pattern has a unique drawing and is embedded once; otherwise
    every rotation system is tried and deduplicated by canonical code.
    """
    try:
        first = planar_embed(h)
    except NonPlanar as exc:
        raise NonPlanarPattern(str(exc)) from exc
    if is_three_connected(h) or h.m <= 2:
        drawings = [first]
    else:
        if h.n > max_k:
            raise PatternTooLarge(f"pattern has {h.n} vertices, budget is {max_k}")
        if count_rotation_systems(h) > max_rotations:
            raise PatternTooLarge("too many rotation systems to enumerate")
        seen: dict[tuple, PlaneGraph] = {}
        for pg in all_sphere_drawings(h):
            seen.setdefault(canonical_code(pg), pg)
        drawings = [seen[c] for c in sorted(seen)]
    flags = tuple(_is_mirror_self_equivalent(d) for d in drawings)
    return EmbeddingCatalog(h, tuple(drawings), flags)


def oriented_variants(catalog: EmbeddingCatalog) -> list[PlaneGraph]:
    """Each drawing, plus its reflection when the two differ as oriented maps."""
    out = []
    for d, selfmirror in zip(catalog.drawings, catalog.mirror_self_equivalent):
        out.append(d)
        if not selfmirror:
            out.append(d.mirror())
    return out
