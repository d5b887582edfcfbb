"""Deterministic graph families used by tests, ``gen`` and ``bench``.

Random instances come from :class:`random.Random` seeded with an integer,
whose Mersenne Twister stream and ``sample`` routine are stable across
platforms and Python releases, so a given ``(n, m, seed)`` always yields
the same edge set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Graph

FIG5_LEFT_EDGES = [(0, 1), (0, 3), (0, 5), (0, 6), (1, 2), (2, 3), (3, 4), (3, 6), (4, 6), (5, 6)]
FIG5_RIGHT_EDGES = [(0, 2), (2, 3), (2, 4), (0, 1), (1, 3), (3, 5), (4, 5)]


def gen_fig5_left() -> Graph:
    """Seven-vertex example with exactly two chordless 0-4 paths."""
    return Graph.from_edges(FIG5_LEFT_EDGES)


def gen_fig5_right() -> Graph:
    """Six-vertex example where keeping both good neighbours of 0 breaks the listing."""
    return Graph.from_edges(FIG5_RIGHT_EDGES)


def gen_bipartite_path(r: int) -> Graph:
    """``K_{r,r}`` plus a chordless chain ``x1 p1 x2 ... p_{r-1} x_r``.

    Ids: ``x_i -> i-1``, ``y_i -> r+i-1``, ``p_i -> 2r+i-1``. The chain's
    degree sum is Theta(m) although only O(n) of it is wasted work.
    """
    if r < 2:
        raise ValueError("bipartite-path needs r >= 2")
    edges = [(x, r + y) for x in range(r) for y in range(r)]
    for i in range(r - 1):
        p = 2 * r + i
        edges.append((i, p))
        edges.append((p, i + 1))
    return Graph.from_edges(edges, n=3 * r - 1)


def bipartite_chain(r: int) -> list[int]:
    chain = []
    for i in range(r - 1):
        chain += [i, 2 * r + i]
    return chain + [r - 1]


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs n >= 3")
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges([(u, v) for u in range(n) for v in range(u + 1, n)], n=n)


def gen_gnm(n: int, m: int, seed: int = 0) -> Graph:
    """Uniform random simple graph with ``n`` vertices and ``m`` edges."""
    if n < 1:
        raise ValueError("gnm needs n >= 1")
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ValueError(f"gnm needs 0 <= m <= {total}, got m={m}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = random.Random(seed).sample(range(total), m)
    return Graph.from_edges([pairs[i] for i in sorted(chosen)], n=n)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)

    def build(self) -> Graph:
        p = self.params
        if self.family == "bipartite-path":
            return gen_bipartite_path(p["r"])
        if self.family == "cycle":
            return gen_cycle(p["n"])
        if self.family == "complete":
            return gen_complete(p["n"])
        if self.family == "gnm":
            return gen_gnm(p["n"], p["m"], p.get("seed", 0))
        if self.family == "fig5-left":
            return gen_fig5_left()
        if self.family == "fig5-right":
            return gen_fig5_right()
        raise ValueError(f"unknown family {self.family!r}")


FAMILIES = ("bipartite-path", "cycle", "complete", "gnm", "fig5-left", "fig5-right")
