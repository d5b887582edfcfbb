"""Exhaustive reference enumerations for small graphs.

Plain backtracking over simple paths and cycles followed by an induced-edge
check. Deliberately unclever: these are the ground truth the fast lister is
tested against.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph

MAX_N = 14


def _guard(g: Graph, allow_large: bool) -> None:
    if g.n > MAX_N and not allow_large:
        raise ValueError(f"brute force refuses n={g.n} > {MAX_N} (pass allow_large=True)")


def is_chordless(g: Graph, path: list[int], as_cycle: bool = False) -> bool:
    """True iff ``path`` induces exactly its own edges (plus the closing one)."""
    k = len(path)
    expected = k - 1 + (1 if as_cycle and k >= 3 else 0)
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            return False
    if as_cycle and k >= 3 and not g.has_edge(path[-1], path[0]):
        return False
    induced = sum(1 for a, b in combinations(path, 2) if g.has_edge(a, b))
    return induced == expected


def _simple_paths(g: Graph, prefix: list[int], t: int):
    u = prefix[-1]
    if u == t:
        yield list(prefix)
        return
    on_path = set(prefix)
    for w in sorted(g.adj[u]):
        if w not in on_path:
            prefix.append(w)
            yield from _simple_paths(g, prefix, t)
            prefix.pop()


def brute_chordless_st_paths(g: Graph, s: int, t: int, allow_large: bool = False) -> list[list[int]]:
    _guard(g, allow_large)
    if s == t:
        raise ValueError("s and t must differ")
    return sorted(p for p in _simple_paths(g, [s], t) if is_chordless(g, p))


def brute_chordless_cycles(g: Graph, allow_large: bool = False) -> list[list[int]]:
    """All chordless cycles, each once, rotated to start at its smallest id."""
    _guard(g, allow_large)
    found = []

    def extend(path: list[int], on_path: set[int]) -> None:
        start, u = path[0], path[-1]
        for w in sorted(g.adj[u]):
            if w == start and len(path) >= 3 and path[1] < path[-1]:
                if is_chordless(g, path, as_cycle=True):
                    found.append(list(path))
            elif w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.discard(w)
                path.pop()

    for s in g.vertices():
        extend([s], {s})
    return sorted(found)


def brute_good_neighbors(g: Graph, prefix: list[int], t: int, allow_large: bool = False) -> set[int]:
    """Neighbours ``v`` of ``prefix[-1]`` such that some chordless path to ``t`` starts with ``prefix + [v]``."""
    _guard(g, allow_large)
    u = prefix[-1]
    good = set()
    for p in _simple_paths(g, list(prefix), t):
        if is_chordless(g, p):
            good.add(p[len(prefix)])
    assert u not in good
    return good
