"""Text formats.

``.pg`` (plane graph): first line ``n m``, then one line ``v: u1 u2 ... ud``
per vertex listing its neighbours in clockwise order.  ``.g`` (abstract
graph): first line ``n m``, then ``m`` lines ``u v``.  Ids are 0-indexed,
``#`` starts a comment.
"""

from __future__ import annotations

from pathlib import Path

from .plane_graph import AbstractGraph, PlaneGraph, PlaneGraphError, build_plane_graph


class FormatError(PlaneGraphError):
    pass


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _header(lines: list[str]) -> tuple[int, int]:
    if not lines:
        raise FormatError("empty input")
    parts = lines[0].split()
    if len(parts) != 2:
        raise FormatError("first line must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise FormatError("first line must be 'n m'") from exc
    if n < 0 or m < 0:
        raise FormatError("negative sizes")
    return n, m


def parse_g(text: str) -> AbstractGraph:
    lines = _lines(text)
    n, m = _header(lines)
    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line: {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"bad edge line: {line!r}") from exc
    try:
        return AbstractGraph.from_edges(edges, n=n)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def parse_pg(text: str) -> PlaneGraph:
    lines = _lines(text)
    n, m = _header(lines)
    if len(lines) - 1 != n:
        raise FormatError(f"expected {n} rotation lines, found {len(lines) - 1}")
    rot: list[list[int] | None] = [None] * n
    for line in lines[1:]:
        head, sep, rest = line.partition(":")
        if not sep:
            raise FormatError(f"bad rotation line: {line!r}")
        try:
            v = int(head)
            nb = [int(x) for x in rest.split()]
        except ValueError as exc:
            raise FormatError(f"bad rotation line: {line!r}") from exc
        if not 0 <= v < n or rot[v] is not None:
            raise FormatError(f"bad or repeated vertex {v}")
        rot[v] = nb
    edges = {(min(v, u), max(v, u)) for v in range(n) for u in rot[v]}  # type: ignore[union-attr]
    if len(edges) != m:
        raise FormatError(f"header says {m} edges, rotations give {len(edges)}")
    try:
        g = AbstractGraph.from_edges(sorted(edges), n=n)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    return build_plane_graph(g, rot)  # type: ignore[arg-type]


def format_g(g: AbstractGraph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def format_pg(h: PlaneGraph) -> str:
    lines = [f"{h.n} {h.m}"]
    for v in range(h.n):
        lines.append(f"{v}: " + " ".join(map(str, h.rotation[v])) if h.rotation[v] else f"{v}:")
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path, embedded: bool | None = None) -> AbstractGraph | PlaneGraph:
    """Read a ``.pg`` or ``.g`` file; ``embedded`` overrides the suffix."""
    p = Path(path)
    text = p.read_text(encoding="utf-8")
    if embedded is None:
        embedded = p.suffix == ".pg"
    return parse_pg(text) if embedded else parse_g(text)


def write_graph(path: str | Path, g: AbstractGraph | PlaneGraph) -> None:
    text = format_pg(g) if isinstance(g, PlaneGraph) else format_g(g)
    Path(path).write_text(text, encoding="utf-8")
