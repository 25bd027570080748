"""Brute-force reference implementations, independent of any embedding."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .noose import CombinatorialNoose, is_combinatorial_noose
from .plane_graph import AbstractGraph, PlaneGraph, norm_edge

Edge = tuple[int, int]
EdgeSet = frozenset[Edge]


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class MatchRecord:
    mapping: tuple[int, ...]  # pattern vertex -> host vertex
    edges: EdgeSet


def _search_order(h: AbstractGraph) -> list[int]:
    """Pattern vertices so that each one after the first (per component) has an earlier neighbour."""
    order: list[int] = []
    seen: set[int] = set()
    for start in sorted(range(h.n), key=lambda v: -h.degree(v)):
        if start in seen:
            continue
        seen.add(start)
        order.append(start)
        i = len(order) - 1
        while i < len(order):
            for u in sorted(h.adj[order[i]], key=lambda u: -h.degree(u)):
                if u not in seen:
                    seen.add(u)
                    order.append(u)
            i += 1
    return order


def iter_matches(g: AbstractGraph, h: AbstractGraph, max_steps: int | None = None):
    """Injective maps V(h) -> V(g) sending edges to edges (backtracking)."""
    if h.n > g.n:
        return
    order = _search_order(h)
    earlier = [[u for u in h.adj[v] if u in order[:i]] for i, v in enumerate(order)]
    phi = [-1] * h.n
    used = [False] * g.n
    steps = 0

    def rec(i: int):
        nonlocal steps
        if i == len(order):
            yield tuple(phi)
            return
        a = order[i]
        back = earlier[i]
        cands = g.adj[phi[back[0]]] if back else range(g.n)
        for x in cands:
            steps += 1
            if max_steps is not None and steps > max_steps:
                raise BudgetExceeded("oracle search exceeded its step budget")
            if used[x] or g.degree(x) < h.degree(a):
                continue
            if any(x not in g.adj[phi[b]] for b in back):
                continue
            phi[a] = x
            used[x] = True
            yield from rec(i + 1)
            used[x] = False
            phi[a] = -1

    yield from rec(0)


def brute_list(g: AbstractGraph, h: AbstractGraph, max_steps: int | None = None) -> list[MatchRecord]:
    """One record per distinct host edge set isomorphic to ``h``, sorted."""
    seen: dict[EdgeSet, tuple[int, ...]] = {}
    for phi in iter_matches(g, h, max_steps):
        es = frozenset(norm_edge(phi[a], phi[b]) for a, b in h.edges)
        seen.setdefault(es, phi)
    out = [MatchRecord(phi, es) for es, phi in seen.items()]
    out.sort(key=lambda r: sorted(r.edges))
    return out


def brute_count(g: AbstractGraph, h: AbstractGraph, max_steps: int | None = None) -> int:
    return len(brute_list(g, h, max_steps))


def brute_decide(g: AbstractGraph, h: AbstractGraph, max_steps: int | None = None) -> bool:
    return next(iter_matches(g, h, max_steps), None) is not None


def count_simple_cycles(g: AbstractGraph, max_n: int = 16) -> int:
    """Simple cycles (length >= 3), each counted once."""
    if g.n > max_n:
        raise BudgetExceeded(f"cycle enumeration limited to n <= {max_n}")
    total = 0
    for s in range(g.n):
        # cycles whose smallest vertex is s; each found twice (two directions)
        stack = [(s, iter(sorted(g.adj[s])))]
        on_path = {s}
        while stack:
            v, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                on_path.discard(v)
                continue
            if nxt == s and len(stack) >= 3:
                total += 1
            elif nxt > s and nxt not in on_path:
                on_path.add(nxt)
                stack.append((nxt, iter(sorted(g.adj[nxt]))))
    return total // 2


def brute_nooses(h: PlaneGraph, max_len: int, max_sequences: int = 5_000_000):
    """Definitional noose filter over every alternating sequence.

    Each face slot only ranges over faces incident to both neighbouring
    vertices, which the definition demands anyway.
    """
    vs_all = [v for v in range(h.n) if h.degree(v)]
    vf = {v: sorted(h.vertex_faces(v)) for v in vs_all}
    work = sum(math.perm(len(vs_all), L) for L in range(1, min(max_len, len(vs_all)) + 1))
    if work * max(1, h.num_faces) > max_sequences:
        raise BudgetExceeded("too many alternating sequences")
    out = set()
    for L in range(1, max_len + 1):
        for vs in itertools.permutations(vs_all, L):
            if vs[0] != min(vs):
                continue
            slots = [[f for f in vf[vs[i]] if f in h.vertex_faces(vs[(i + 1) % L])] for i in range(L)]
            for fs in itertools.product(*slots):
                seq: list[int] = []
                for v, f in zip(vs, fs):
                    seq += [v, f]
                seq.append(vs[0])
                if is_combinatorial_noose(seq, h):
                    out.add(CombinatorialNoose(tuple(vs), tuple(fs)))
    return out
