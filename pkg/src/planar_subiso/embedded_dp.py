"""Embedded dynamic programming over a sphere-cut decomposition.

A table entry describes how one partial occurrence of the oriented pattern
drawing ``H`` meets the noose of a tree edge.  Its key is

``(esub, beta, flag)``

* ``esub``: bitmask of the pattern edges already mapped inside the subtree;
* ``beta``: one slot per noose vertex, ``None`` when no pattern vertex sits
  there, otherwise ``(a, s, cnt)``: pattern vertex ``a`` is mapped to that
  host vertex, and the mapped host edges on the bounded side of the noose,
  read in host rotation order, carry the pattern edges
  ``rot_H[a][s], ..., rot_H[a][s + cnt - 1]``;
* ``flag``: whether some mapped vertex lies in the required set.

Two partial occurrences with equal keys behave identically in every later
merge, so tables sum their multiplicities.  Matching rotations arc by arc
makes every completed occurrence a subdrawing equivalent to ``H`` with its
orientation, so the number of completions divided by the number of
orientation-preserving automorphisms of ``H`` counts host edge sets.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .noose import CombinatorialNoose, EmptyNoose, enumerate_nooses
from .plane_graph import PlaneGraph, norm_edge, orientation_preserving_automorphisms
from .sphere_cut import HostNoose, ScDecomposition, leaf_word, word_to_noose

Slot = tuple[int, int, int] | None
Key = tuple[int, tuple[Slot, ...], bool]
EdgeSet = frozenset[tuple[int, int]]


@dataclass(frozen=True)
class NooseMapping:
    """Readable view of one table key."""

    pattern_noose: CombinatorialNoose | EmptyNoose
    gamma: dict  # ("v", host vertex) / ("f", host face) -> ("v", a) / ("f", F)
    esub: int
    multiplicity: int
    flag: bool


@dataclass
class DPTable:
    noose: HostNoose
    entries: dict[Key, int] = field(default_factory=dict)
    provenance: dict[Key, "_Prov"] | None = None

    def __len__(self) -> int:
        return len(self.entries)


@dataclass
class DPResult:
    found: bool = False
    count: int = 0
    solutions: list[EdgeSet] = field(default_factory=list)
    table_sizes: list[int] = field(default_factory=list)
    widths: list[int] = field(default_factory=list)

    def add(self, other: "DPResult") -> None:
        self.found = self.found or other.found
        self.count += other.count
        self.solutions.extend(other.solutions)
        self.table_sizes.extend(other.table_sizes)
        self.widths.extend(other.widths)


class PatternContext:
    """Per-drawing data the DP consults on every state."""

    def __init__(self, h: PlaneGraph, nooses: set[CombinatorialNoose] | None = None, max_len: int | None = None):
        self.h = h
        self.k = h.n
        self.deg = [h.degree(a) for a in range(h.n)]
        self.rot = h.rotation
        self.pos = h.pos
        self.eid = {e: i for i, e in enumerate(h.edges)}
        self.full = (1 << h.m) - 1
        self.edge_ends = list(h.edges)
        # rot_edge[a][i]: edge id of rot[a][i]
        self.rot_edge = [[self.eid[norm_edge(a, b)] for b in h.rotation[a]] for a in range(h.n)]
        self.vmask_cache: dict[int, int] = {}
        if nooses is None:
            nooses = enumerate_nooses(h, max_len if max_len is not None else h.n)
        self.nooses = {(c.vertices, c.faces) for c in nooses}
        self.aut = orientation_preserving_automorphisms(h)

    def vmask(self, esub: int) -> int:
        m = self.vmask_cache.get(esub)
        if m is None:
            m = 0
            x = esub
            while x:
                low = x & -x
                a, b = self.edge_ends[low.bit_length() - 1]
                m |= (1 << a) | (1 << b)
                x ^= low
            self.vmask_cache[esub] = m
        return m

    def corner_face(self, a: int, i: int) -> int:
        return self.h.corner_face(a, i)

    def slot_mask(self, a: int, s: int, cnt: int) -> int:
        r = self.rot_edge[a]
        d = len(r)
        m = 0
        for t in range(cnt):
            m |= 1 << r[(s + t) % d]
        return m


class NodeContext:
    """Host-side data of one tree edge: its noose and the arcs at noose vertices."""

    def __init__(self, g: PlaneGraph, hn: HostNoose):
        self.noose = hn
        self.vertices = hn.vertices
        self.index = {v: i for i, v in enumerate(hn.vertices)}
        self.cin = hn.cin
        self.cout = hn.cout
        self.arc_len = []
        self.out_deg = []
        for i, v in enumerate(hn.vertices):
            d = g.degree(v)
            L = (hn.cout[i] - hn.cin[i]) % d or d
            self.arc_len.append(L)
            self.out_deg.append(d - L)

    def inside(self, g: PlaneGraph, i: int, w: int) -> bool:
        """Whether host edge (vertices[i], w) lies on the bounded side."""
        v = self.vertices[i]
        d = g.degree(v)
        p = g.pos[v][w]
        return 0 < (p - self.cin[i]) % d <= self.arc_len[i]


def state_ok(pc: PatternContext, g: PlaneGraph, nc: NodeContext, esub: int, beta: tuple[Slot, ...]) -> bool:
    """Necessary conditions for a partial occurrence to extend to a full one."""
    if esub == 0:
        return True
    deg = pc.deg
    open_slots = []
    for i, x in enumerate(beta):
        if x is None:
            continue
        a, s, cnt = x
        if cnt == deg[a]:
            continue
        if nc.out_deg[i] < deg[a] - cnt:
            return False
        open_slots.append((i, a, s, cnt))
    if not open_slots:
        return False  # a proper nonempty part of a connected pattern has an open vertex
    # pattern edges between two open vertices still to be placed need a host edge outside
    for p in range(len(open_slots)):
        i, a, _, _ = open_slots[p]
        for q in range(p + 1, len(open_slots)):
            j, b, _, _ = open_slots[q]
            e = pc.eid.get(norm_edge(a, b))
            if e is None or esub >> e & 1:
                continue
            w = nc.vertices[j]
            if not g.has_edge(nc.vertices[i], w) or nc.inside(g, i, w):
                return False
    # the open vertices in noose order must trace a noose of the pattern
    verts = []
    faces = []
    entry0 = None
    prev_exit = None
    for i, a, s, cnt in open_slots:
        entry = pc.corner_face(a, s - 1)
        exit_ = pc.corner_face(a, s + cnt - 1)
        if prev_exit is None:
            entry0 = entry
        elif prev_exit != entry:
            return False
        verts.append(a)
        faces.append(exit_)
        prev_exit = exit_
    if prev_exit != entry0:
        return False
    j = verts.index(min(verts))
    return (tuple(verts[j:] + verts[:j]), tuple(faces[j:] + faces[:j])) in pc.nooses


# -- provenance for listing ----------------------------------------------------


class _Prov:
    """Ways to realise one key: host edges of a leaf, a pair of child keys, or a child key."""

    __slots__ = ("items",)

    def __init__(self, items: list) -> None:
        self.items = items


def _expand(p: _Prov | None) -> Iterator[tuple[tuple[int, int], ...]]:
    if p is None:
        yield ()
        return
    for item in p.items:
        tag = item[0]
        if tag == "L":
            yield (item[1],)
        elif tag == "T":
            yield from _expand(item[1])
        else:
            for left in _expand(item[1]):
                for right in _expand(item[2]):
                    yield left + right


class _ProvBook:
    """Per-table provenance with aliasing of single pass-through entries."""

    def __init__(self) -> None:
        self.prov: dict[Key, _Prov | None] = {}
        self.alias: set[Key] = set()

    def add(self, key: Key, item, passthrough: _Prov | None = None) -> None:
        """Record ``item``; a pass-through to an existing node is given as ``passthrough``."""
        if key not in self.prov:
            if passthrough is not None:
                self.prov[key] = passthrough
                self.alias.add(key)
            else:
                self.prov[key] = _Prov([item]) if item is not None else None
            return
        cur = self.prov[key]
        if key in self.alias:
            cur = _Prov([("T", cur)])
            self.prov[key] = cur
            self.alias.discard(key)
        if cur is None:
            raise AssertionError("empty state has a unique realisation")
        cur.items.append(("T", passthrough) if passthrough is not None else item)


# -- leaf tables and merges ----------------------------------------------------


EMPTY_NOOSE = HostNoose((), (), (), ())


def init_leaf_table(
    t: int,
    scd: ScDecomposition,
    g: PlaneGraph,
    pc: PatternContext,
    required: Callable[[int], bool],
    nc: NodeContext | None = None,
    with_prov: bool = False,
) -> tuple[DPTable, list]:
    """Table of a leaf: the host edge unused, or carrying one pattern edge (either direction)."""
    nc = nc or NodeContext(g, scd.noose(t))
    u, v = g.edges[t]
    width = len(nc.vertices)
    table = DPTable(nc.noose, {}, {} if with_prov else None)
    book = _ProvBook() if with_prov else None
    empty: Key = (0, (None,) * width, False)
    table.entries[empty] = 1
    if book is not None:
        book.add(empty, None)
    completions: list = []
    flag = required(u) or required(v)
    for j, (a, b) in enumerate(pc.edge_ends):
        for p, q in ((a, b), (b, a)):
            slots: list[Slot] = [None] * width
            ok = True
            for x, y, hv in ((p, q, u), (q, p, v)):
                if g.degree(hv) < pc.deg[x]:
                    ok = False
                    break
                i = nc.index.get(hv)
                complete = pc.deg[x] == 1
                if i is None:
                    if not complete:
                        ok = False
                        break
                else:
                    slots[i] = (x, 0, 1) if complete else (x, pc.pos[x][y], 1)
            if not ok:
                continue
            esub = 1 << j
            if esub == pc.full:
                completions.append((flag, 1, _Prov([("L", (u, v))]) if with_prov else None))
                continue
            beta = tuple(slots)
            if not state_ok(pc, g, nc, esub, beta):
                continue
            key = (esub, beta, flag)
            table.entries[key] = table.entries.get(key, 0) + 1
            if book is not None:
                book.add(key, ("L", (u, v)))
    if book is not None:
        table.provenance = book.prov
    return table, completions


def _combine(pc: PatternContext, x: Slot, y: Slot, x_first: bool, y_first: bool) -> Slot | bool:
    """Slot of a host vertex shared by two sides; False when the rotations disagree."""
    if x is None:
        return y
    if y is None:
        return x
    a, s1, c1 = x
    b, s2, c2 = y
    if a != b:
        return False
    d = pc.deg[a]
    c = c1 + c2
    if c > d:
        return False
    if x_first and (s1 + c1) % d == s2:
        return (a, 0, d) if c == d else (a, s1, c)
    if y_first and (s2 + c2) % d == s1:
        return (a, 0, d) if c == d else (a, s2, c)
    return False


def merge_tables(
    ta: DPTable,
    tb: DPTable,
    na: NodeContext,
    nb: NodeContext,
    ng: NodeContext,
    pc: PatternContext,
    g: PlaneGraph,
    stop_on_flag: bool = False,
) -> tuple[DPTable, list]:
    """Join two sibling tables into their parent's table, diverting completions."""
    with_prov = ta.provenance is not None and tb.provenance is not None
    common = [v for v in na.vertices if v in nb.index]
    ia = [na.index[v] for v in common]
    ib = [nb.index[v] for v in common]
    a_first = []
    b_first = []
    for v, i, j in zip(common, ia, ib):
        d = g.degree(v)
        a_first.append(na.cout[i] % d == nb.cin[j] % d)
        b_first.append(nb.cout[j] % d == na.cin[i] % d)
    # where each parent slot comes from
    source = []
    cpos = {v: c for c, v in enumerate(common)}
    for v in ng.vertices:
        if v in cpos:
            source.append((2, cpos[v]))
        elif v in na.index:
            source.append((0, na.index[v]))
        else:
            source.append((1, nb.index[v]))
    dropped = [c for c, v in enumerate(common) if v not in ng.index]
    deg = pc.deg
    full = pc.full
    vmask = pc.vmask

    def project(beta, idx):
        return tuple(-1 if beta[i] is None else beta[i][0] for i in idx)

    groups_a: dict[tuple, list] = defaultdict(list)
    for key, mult in ta.entries.items():
        groups_a[project(key[1], ia)].append((key, mult))
    groups_b: dict[tuple, list] = defaultdict(list)
    for key, mult in tb.entries.items():
        groups_b[project(key[1], ib)].append((key, mult))

    out: dict[Key, int] = {}
    book = _ProvBook() if with_prov else None
    completions: list = []
    width = len(ng.vertices)
    for pa, la in groups_a.items():
        for pb, lb in groups_b.items():
            shared_ok = True
            shared_mask = 0
            for x, y in zip(pa, pb):
                if x >= 0 and y >= 0:
                    if x != y:
                        shared_ok = False
                        break
                    shared_mask |= 1 << x
            if not shared_ok:
                continue
            for ka, ma in la:
                ea, ba, fa = ka
                ua = vmask(ea)
                for kb, mb in lb:
                    eb, bb, fb = kb
                    if ea & eb:
                        continue
                    if ua & vmask(eb) & ~shared_mask:
                        continue
                    comb = []
                    ok = True
                    for c in range(len(common)):
                        r = _combine(pc, ba[ia[c]], bb[ib[c]], a_first[c], b_first[c])
                        if r is False:
                            ok = False
                            break
                        comb.append(r)
                    if not ok:
                        continue
                    for c in dropped:
                        r = comb[c]
                        if r is not None and r[2] != deg[r[0]]:
                            ok = False
                            break
                    if not ok:
                        continue
                    esub = ea | eb
                    flag = fa or fb
                    mult = ma * mb
                    if esub == full:
                        prov = None
                        if with_prov:
                            prov = _Prov([("P", ta.provenance[ka], tb.provenance[kb])])
                        completions.append((flag, mult, prov))
                        if stop_on_flag and flag:
                            return DPTable(ng.noose, out, None), completions
                        continue
                    beta = tuple(
                        comb[i] if src == 2 else (ba[i] if src == 0 else bb[i]) for src, i in source
                    )
                    if not state_ok(pc, g, ng, esub, beta):
                        continue
                    key = (esub, beta, flag)
                    out[key] = out.get(key, 0) + mult
                    if book is not None:
                        pva, pvb = ta.provenance[ka], tb.provenance[kb]
                        if ea == 0:
                            book.add(key, None, passthrough=pvb) if eb else book.add(key, None)
                        elif eb == 0:
                            book.add(key, None, passthrough=pva)
                        else:
                            book.add(key, ("P", pva, pvb))
    table = DPTable(ng.noose, out, book.prov if book is not None else None)
    return table, completions


# -- driving one decomposition ------------------------------------------------


def _schedule(scd: ScDecomposition, rng: random.Random | None) -> list[int]:
    """A bottom-up processing order; random among valid ones when ``rng`` is given."""
    if rng is None:
        return list(scd.order)
    waiting = {t: len(scd.children(t)) for t in scd.order}
    ready = [t for t in scd.order if waiting[t] == 0]
    out = []
    while ready:
        t = ready.pop(rng.randrange(len(ready)))
        out.append(t)
        p = scd.parent[t]
        if p in waiting:
            waiting[p] -= 1
            if waiting[p] == 0:
                ready.append(p)
    return out


def run_dp(
    scd: ScDecomposition,
    pc: PatternContext,
    required: Callable[[int], bool] | None = None,
    mode: str = "count",
    limit: int | None = None,
    schedule_seed: int | None = None,
    trace: list | None = None,
) -> DPResult:
    """Run the DP over one decomposition; ``mode`` is ``decide``, ``count`` or ``list``.

    Counts only completions flagged by ``required`` (every vertex when ``None``).
    ``schedule_seed`` randomises the merge order and operand sides.
    """
    if mode not in ("decide", "count", "list"):
        raise ValueError(f"unknown mode {mode!r}")
    g = scd.host
    required = required or (lambda v: True)
    with_prov = mode == "list"
    stop = mode == "decide"
    rng = random.Random(schedule_seed) if schedule_seed is not None else None
    result = DPResult()
    if pc.h.m == 0 or pc.k > g.n or pc.h.m > g.m:
        return result
    tables: dict[int, DPTable] = {}
    ctx: dict[int, NodeContext] = {}
    completions: list = []

    def node_ctx(t: int) -> NodeContext:
        c = ctx.get(t)
        if c is None:
            c = NodeContext(g, scd.noose(t))
            ctx[t] = c
        return c

    def record(comps: list) -> bool:
        completions.extend(comps)
        return stop and any(f for f, _, _ in comps)

    def leaf(t: int) -> DPTable:
        table, comps = init_leaf_table(t, scd, g, pc, required, node_ctx(t), with_prov)
        record(comps)
        return table

    def join(a: int, b: int, ta: DPTable, tb: DPTable, ng: NodeContext) -> DPTable:
        if rng is not None and rng.random() < 0.5:
            a, b, ta, tb = b, a, tb, ta
        table, comps = merge_tables(ta, tb, node_ctx(a), node_ctx(b), ng, pc, g, stop)
        record(comps)
        return table

    done = False
    for t in _schedule(scd, rng):
        if scd.is_leaf(t):
            tables[t] = leaf(t)
        else:
            a, b = scd.children(t)
            tables[t] = join(a, b, tables.pop(a), tables.pop(b), node_ctx(t))
        result.table_sizes.append(len(tables[t]))
        result.widths.append(len(node_ctx(t).vertices))
        if trace is not None:
            trace.append({"node": t, "parent": scd.parent[t], "width": len(node_ctx(t).vertices),
                          "size": len(tables[t])})
        if stop and any(f for f, _, _ in completions):
            done = True
            break
    if not done:
        root = scd.root
        u, v = g.edges[root]
        ctx[root] = NodeContext(g, word_to_noose(g, scd.radial, leaf_word(g, u, v)))
        troot = leaf(root)
        kids = scd.children(root)
        if kids and not (stop and any(f for f, _, _ in completions)):
            (c,) = kids
            join(root, c, troot, tables.pop(c), NodeContext(g, EMPTY_NOOSE))
    flagged = [(m, p) for f, m, p in completions if f]
    total = sum(m for m, _ in flagged)
    result.found = total > 0
    if mode != "decide":
        if total % pc.aut:
            raise AssertionError("completion count is not a multiple of the automorphism count")
        result.count = total // pc.aut
    if mode == "list":
        result.solutions = list(_list_solutions(flagged, limit))
    return result


def _list_solutions(flagged: list, limit: int | None) -> Iterator[EdgeSet]:
    seen: set[EdgeSet] = set()
    for _, prov in flagged:
        for edges in _expand(prov):
            es = frozenset(edges)
            if es in seen:
                continue
            seen.add(es)
            yield es
            if limit is not None and len(seen) >= limit:
                return


# -- readable mappings and the from-scratch validity check ---------------------


def mapping_of(key: Key, mult: int, nc: NodeContext, pc: PatternContext) -> NooseMapping:
    """Spell a table key out as a host-noose to pattern-noose mapping."""
    esub, beta, flag = key
    hn = nc.noose
    r = len(hn.vertices)
    open_pos = [i for i, x in enumerate(beta) if x is not None and x[2] != pc.deg[x[0]]]
    gamma: dict = {}
    if not open_pos:
        for v, f in zip(hn.vertices, hn.faces):
            gamma[("v", v)] = ("f", None)
            gamma[("f", f)] = ("f", None)
        return NooseMapping(EmptyNoose(None), gamma, esub, mult, flag)
    verts, faces = [], []
    for idx, i in enumerate(open_pos):
        a, s, cnt = beta[i]
        face = pc.corner_face(a, s + cnt - 1)
        verts.append(a)
        faces.append(face)
        gamma[("v", hn.vertices[i])] = ("v", a)
        j = open_pos[(idx + 1) % len(open_pos)]
        t = i
        while True:
            gamma[("f", hn.faces[t])] = ("f", face)
            t = (t + 1) % r
            if t == j:
                break
            gamma[("v", hn.vertices[t])] = ("f", face)
    nh = CombinatorialNoose(tuple(verts), tuple(faces)).canonical()
    return NooseMapping(nh, gamma, esub, mult, flag)


def valid_mapping(
    gamma: dict,
    hn: HostNoose,
    nh: CombinatorialNoose | EmptyNoose,
    g: PlaneGraph,
    h: PlaneGraph,
) -> bool:
    """Check a host-to-pattern noose mapping against the six validity conditions.

    a) vertex-mapped host vertices biject onto the pattern noose vertices;
    b) vertices map to pattern vertices or faces, faces map to faces;
    c) host faces map to faces of the pattern noose;
    d) everything between two consecutive vertex-mapped host vertices maps to
       the pattern face between their images, with the cyclic order kept;
    e) a face-mapped host vertex maps to the same face as its two neighbours;
    f) pattern noose vertices adjacent in the pattern come from adjacent host vertices.
    """
    from .noose import is_combinatorial_noose

    r = len(hn.vertices)
    seq = []
    for i in range(r):
        seq.append(("v", hn.vertices[i]))
        seq.append(("f", hn.faces[i]))
    if any(x not in gamma for x in seq):
        return False
    if isinstance(nh, EmptyNoose):
        # nothing of the pattern meets the noose: everything sits in one face
        return len({gamma[x] for x in seq}) <= 1 and all(
            gamma[x] == ("f", nh.face) or nh.face is None and gamma[x][0] == "f" for x in seq
        )
    # b) typing
    for x in seq:
        kind, val = gamma[x]
        if x[0] == "f" and kind != "f":
            return False
        if kind == "v" and not 0 <= val < h.n:
            return False
        if kind == "f" and not 0 <= val < h.num_faces:
            return False
    vmapped = [i for i in range(r) if gamma[("v", hn.vertices[i])][0] == "v"]
    if not vmapped:
        return False
    if not is_combinatorial_noose(nh, h):
        return False
    images = [gamma[("v", hn.vertices[i])][1] for i in vmapped]
    # a) bijection onto V(N^H)
    if len(set(images)) != len(images) or set(images) != set(nh.vertices):
        return False
    # d) cyclic order and the faces in between
    start = nh.vertices.index(images[0])
    rot_v = nh.vertices[start:] + nh.vertices[:start]
    rot_f = nh.faces[start:] + nh.faces[:start]
    if tuple(images) != rot_v:
        return False
    for idx, i in enumerate(vmapped):
        face = ("f", rot_f[idx])
        j = vmapped[(idx + 1) % len(vmapped)]
        t = i
        while True:
            if gamma[("f", hn.faces[t])] != face:
                return False
            t = (t + 1) % r
            if t == j:
                break
            # e) a face-mapped vertex sits in the face of both neighbours
            if gamma[("v", hn.vertices[t])] != face:
                return False
    # c) host faces land on faces of N^H (implied by d, kept explicit)
    fset = set(nh.faces)
    if any(gamma[("f", f)][1] not in fset for f in hn.faces):
        return False
    # f) adjacency
    pre = {a: hn.vertices[i] for a, i in zip(images, vmapped)}
    for a in nh.vertices:
        for b in nh.vertices:
            if a < b and h.has_edge(a, b) and not g.has_edge(pre[a], pre[b]):
                return False
    return True


def iter_mappings(table: DPTable, nc: NodeContext, pc: PatternContext) -> Iterator[NooseMapping]:
    for key, mult in table.entries.items():
        yield mapping_of(key, mult, nc, pc)
