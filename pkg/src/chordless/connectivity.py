"""Connectivity oracles over a graph under edge deletions and insertions.

Two interchangeable implementations share one contract:

``ReferenceConnectivity``
    Keeps a mirror adjacency and answers every query with a fresh BFS.
``DynamicConnectivity``
    Fully dynamic connectivity with a hierarchy of spanning forests stored
    as Euler-tour trees (Holm, de Lichtenberg and Thorup). Updates are
    amortized polylogarithmic, queries logarithmic; a path is extracted by
    BFS restricted to the level-0 spanning forest, so it has at most
    ``n - 1`` edges and costs O(n).

Neither oracle has a vertex-removal primitive: callers delete the incident
edges one by one. Which path is returned is unspecified.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, asdict

from ._ett import EulerTourForest
from .graph import ContractError, Graph


@dataclass
class OracleOpCounters:
    queries: int = 0
    path_extractions: int = 0
    edge_deletes: int = 0
    edge_inserts: int = 0

    def reset(self) -> None:
        self.queries = self.path_extractions = self.edge_deletes = self.edge_inserts = 0

    def snapshot(self) -> "OracleOpCounters":
        return OracleOpCounters(**asdict(self))

    def __sub__(self, other: "OracleOpCounters") -> "OracleOpCounters":
        return OracleOpCounters(
            self.queries - other.queries,
            self.path_extractions - other.path_extractions,
            self.edge_deletes - other.edge_deletes,
            self.edge_inserts - other.edge_inserts,
        )

    def __add__(self, other: "OracleOpCounters") -> "OracleOpCounters":
        return OracleOpCounters(
            self.queries + other.queries,
            self.path_extractions + other.path_extractions,
            self.edge_deletes + other.edge_deletes,
            self.edge_inserts + other.edge_inserts,
        )

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


def _bfs_path(adj, u: int, v: int) -> list[int] | None:
    if u == v:
        return [u]
    parent = {u: u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                if y == v:
                    path = [v]
                    while path[-1] != u:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                queue.append(y)
    return None


class ConnectivityOracle:
    """Common surface; subclasses mirror the alive edge set of a graph."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.counters = OracleOpCounters()

    def connected(self, u: int, v: int) -> bool:
        self.counters.queries += 1
        return self._connected(u, v)

    def extract_path(self, u: int, v: int) -> list[int] | None:
        self.counters.path_extractions += 1
        return self._extract_path(u, v)

    def delete_edge(self, u: int, v: int) -> None:
        self.counters.edge_deletes += 1
        self._delete(u, v)

    def insert_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ContractError(f"insert_edge({u}, {v}): self-loop")
        self.counters.edge_inserts += 1
        self._insert(u, v)

    def _connected(self, u: int, v: int) -> bool:
        raise NotImplementedError

    def _extract_path(self, u: int, v: int) -> list[int] | None:
        raise NotImplementedError

    def _delete(self, u: int, v: int) -> None:
        raise NotImplementedError

    def _insert(self, u: int, v: int) -> None:
        raise NotImplementedError


class ReferenceConnectivity(ConnectivityOracle):
    """BFS on every question; O(n + m) per query or extraction."""

    def __init__(self, n: int) -> None:
        super().__init__(n)
        self.adj: list[set[int]] = [set() for _ in range(n)]

    def _connected(self, u: int, v: int) -> bool:
        return _bfs_path(self.adj, u, v) is not None

    def _extract_path(self, u: int, v: int) -> list[int] | None:
        return _bfs_path(self.adj, u, v)

    def _delete(self, u: int, v: int) -> None:
        if v not in self.adj[u]:
            raise ContractError(f"delete_edge({u}, {v}): edge not in mirror")
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def _insert(self, u: int, v: int) -> None:
        if v in self.adj[u]:
            raise ContractError(f"insert_edge({u}, {v}): edge already in mirror")
        self.adj[u].add(v)
        self.adj[v].add(u)


class DynamicConnectivity(ConnectivityOracle):
    """Holm-de Lichtenberg-Thorup fully dynamic connectivity.

    Every edge has a level in ``0..floor(log2 n)``. Forest ``F_i`` holds the
    tree edges of level ``>= i``; ``F_0`` is a spanning forest of the whole
    graph. Deleting a tree edge searches for a replacement from its level
    downwards, scanning the smaller side and promoting what it touches, so
    each edge is promoted at most ``log2 n`` times.
    """

    def __init__(self, n: int, seed: int = 0) -> None:
        super().__init__(n)
        self._rng = random.Random(seed)
        self.forests: list[EulerTourForest] = [EulerTourForest(n, self._rng)]
        self.nontree: list[list[set[int]]] = [[set() for _ in range(n)]]
        # edge (min, max) -> (level, is_tree)
        self.edges: dict[tuple[int, int], tuple[int, bool]] = {}
        self.tree_adj: list[set[int]] = [set() for _ in range(n)]

    def _level(self, i: int) -> EulerTourForest:
        while len(self.forests) <= i:
            self.forests.append(EulerTourForest(self.n, self._rng))
            self.nontree.append([set() for _ in range(self.n)])
        return self.forests[i]

    def _nt_add(self, i: int, u: int, v: int) -> None:
        self._level(i)
        nt = self.nontree[i]
        nt[u].add(v)
        nt[v].add(u)
        f = self.forests[i]
        if len(nt[u]) == 1:
            f.set_vertex_flag(u, True)
        if len(nt[v]) == 1:
            f.set_vertex_flag(v, True)

    def _nt_remove(self, i: int, u: int, v: int) -> None:
        nt = self.nontree[i]
        nt[u].discard(v)
        nt[v].discard(u)
        f = self.forests[i]
        if not nt[u]:
            f.set_vertex_flag(u, False)
        if not nt[v]:
            f.set_vertex_flag(v, False)

    def _connected(self, u: int, v: int) -> bool:
        return u == v or self.forests[0].connected(u, v)

    def _extract_path(self, u: int, v: int) -> list[int] | None:
        if not self._connected(u, v):
            return None
        return _bfs_path(self.tree_adj, u, v)

    def _insert(self, u: int, v: int) -> None:
        key = (u, v) if u < v else (v, u)
        if key in self.edges:
            raise ContractError(f"insert_edge({u}, {v}): edge already in mirror")
        f0 = self.forests[0]
        if f0.connected(u, v):
            self.edges[key] = (0, False)
            self._nt_add(0, u, v)
        else:
            self.edges[key] = (0, True)
            f0.link(u, v)
            f0.set_tree_flag(u, v, True)
            self.tree_adj[u].add(v)
            self.tree_adj[v].add(u)

    def _delete(self, u: int, v: int) -> None:
        key = (u, v) if u < v else (v, u)
        try:
            level, is_tree = self.edges.pop(key)
        except KeyError:
            raise ContractError(f"delete_edge({u}, {v}): edge not in mirror") from None
        if not is_tree:
            self._nt_remove(level, u, v)
            return
        self.tree_adj[u].discard(v)
        self.tree_adj[v].discard(u)
        for i in range(level + 1):
            self.forests[i].cut(u, v)
        for i in range(level, -1, -1):
            if self._replace(i, u, v):
                return

    def _replace(self, i: int, u: int, v: int) -> bool:
        f = self.forests[i]
        ru, rv = f.root(u), f.root(v)
        if ru.size > rv.size:
            ru = rv
        # push the smaller side's level-i tree edges up one level
        up = self._level(i + 1)
        for x, y in f.flagged_tree_edges(ru):
            f.set_tree_flag(x, y, False)
            self.edges[(x, y)] = (i + 1, True)
            up.link(x, y)
            up.set_tree_flag(x, y, True)
        nt = self.nontree[i]
        for x in f.flagged_vertices(ru):
            for y in list(nt[x]):
                if y not in nt[x]:
                    continue
                key = (x, y) if x < y else (y, x)
                self._nt_remove(i, x, y)
                if f.root(y) is ru:
                    self.edges[key] = (i + 1, False)
                    self._nt_add(i + 1, x, y)
                else:
                    self.edges[key] = (i, True)
                    for j in range(i + 1):
                        self.forests[j].link(x, y)
                    f.set_tree_flag(x, y, True)
                    self.tree_adj[x].add(y)
                    self.tree_adj[y].add(x)
                    return True
        return False


ORACLES = {
    "fast": DynamicConnectivity,
    "reference": ReferenceConnectivity,
}


def attach(g: Graph, kind: str = "fast") -> ConnectivityOracle:
    """Build an oracle mirroring ``g``'s alive edges. Counters start at zero."""
    try:
        cls = ORACLES[kind]
    except KeyError:
        raise ValueError(f"unknown oracle {kind!r}; expected one of {sorted(ORACLES)}") from None
    o = cls(g.n)
    for u, v in g.edges():
        o.insert_edge(u, v)
    o.counters.reset()
    return o
