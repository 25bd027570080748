"""Grid scaling benchmark for a fixed pattern.

Sizes are timed in serpentine order (forward on even repeats, backward on odd
ones) so that slow drift of the machine affects all sizes alike, and the
cyclic garbage collector is flushed before each run.

The doubling ratio of a step is the median over repeats of the ratio of
two runs timed back to back (sizes n and 2n are adjacent in both directions of
the serpentine).  Comparing runs that are close in time cancels machine-speed
episodes lasting several seconds, which would otherwise distort a ratio of
per-size medians.
"""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass, field

from . import generators
from .driver import plsi_plane
from .embedded_dp import PatternContext
from .plane_graph import PlaneGraph

BENCH_SHAPES = {100: (10, 10), 200: (10, 20), 400: (20, 20), 800: (20, 40)}


def grid_shape(n: int) -> tuple[int, int]:
    if n in BENCH_SHAPES:
        return BENCH_SHAPES[n]
    r = max(d for d in range(1, int(n**0.5) + 1) if n % d == 0)
    return r, n // r


@dataclass
class BenchRun:
    n: int
    shape: tuple[int, int]
    count: int
    seconds: list[float] = field(default_factory=list)

    @property
    def median(self) -> float:
        return statistics.median(self.seconds)


def grid_scaling(
    pattern: PlaneGraph,
    sizes: list[int],
    repeats: int = 5,
    warmup: bool = True,
) -> list[BenchRun]:
    pc = PatternContext(pattern)
    hosts = [generators.grid(*grid_shape(n)) for n in sizes]
    runs = [BenchRun(g.n, grid_shape(n), 0) for n, g in zip(sizes, hosts)]
    if warmup:
        plsi_plane(hosts[0], pattern, "count", pattern_context=pc)

    def timed(g: PlaneGraph, run: BenchRun) -> None:
        gc.collect()
        t0 = time.perf_counter()
        run.count = plsi_plane(g, pattern, "count", pattern_context=pc).count
        run.seconds.append(time.perf_counter() - t0)

    for r in range(repeats):
        order = list(range(len(hosts)))
        if r % 2:
            order.reverse()
        for i in order:
            timed(hosts[i], runs[i])
    return runs


def doubling_ratios(runs: list[BenchRun]) -> list[float]:
    """Median over repeats of t(size i+1) / t(size i) for runs of the same repeat."""
    return [
        statistics.median(b / a for a, b in zip(runs[i].seconds, runs[i + 1].seconds))
        for i in range(len(runs) - 1)
    ]
