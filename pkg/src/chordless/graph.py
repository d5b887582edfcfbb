"""Mutable undirected simple graph with stack-disciplined vertex removal.

Vertices are dense integer ids in ``[0, n)``. Removing a vertex marks it
dead and detaches all its incident edges; the returned
:class:`RemovalRecord` is enough to put the graph back exactly as it was.
Ids are never reused or compacted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class ContractError(RuntimeError):
    """A caller broke a precondition (programming error, not bad input)."""


@dataclass(frozen=True)
class RemovalRecord:
    vertex: int
    neighbors: tuple[int, ...]


class Graph:
    """Undirected simple graph over vertex ids ``0..n-1``.

    Attributes
    ----------
    n : int
        Number of vertex slots. Dead vertices keep their slot.
    adj : list of set of int
        Alive neighbours of every vertex. Dead vertices have empty sets.
    alive : list of bool
    m : int
        Current number of (alive) edges.
    duplicate_edges : int
        Number of repeated edges dropped while loading.
    """

    __slots__ = ("n", "adj", "alive", "m", "duplicate_edges")

    def __init__(self, n: int = 0) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.adj: list[set[int]] = [set() for _ in range(n)]
        self.alive: list[bool] = [True] * n
        self.m = 0
        self.duplicate_edges = 0

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None) -> "Graph":
        """Build a graph from an edge list.

        The vertex count is ``1 + max id`` unless ``n`` is given (it may
        only be larger). Repeated edges, in either orientation, are counted
        in ``duplicate_edges`` and otherwise ignored. Self-loops raise.
        """
        edges = [(int(u), int(v)) for u, v in edges]
        top = 0
        for u, v in edges:
            if u < 0 or v < 0:
                raise ValueError(f"negative vertex id in edge ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            top = max(top, u + 1, v + 1)
        if n is None:
            n = top
        elif n < top:
            raise ValueError(f"edge references vertex {top - 1} but n={n}")
        g = cls(n)
        for u, v in edges:
            if v in g.adj[u]:
                g.duplicate_edges += 1
                continue
            g.adj[u].add(v)
            g.adj[v].add(u)
            g.m += 1
        return g

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g.n = self.n
        g.adj = [set(a) for a in self.adj]
        g.alive = list(self.alive)
        g.m = self.m
        g.duplicate_edges = self.duplicate_edges
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and self.alive == other.alive
            and self.adj == other.adj
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, alive={sum(self.alive)})"

    # -- queries -------------------------------------------------------------

    def is_alive(self, u: int) -> bool:
        return 0 <= u < self.n and self.alive[u]

    def vertices(self) -> Iterator[int]:
        return (u for u in range(self.n) if self.alive[u])

    def neighbors(self, u: int) -> Iterator[int]:
        if not self.is_alive(u):
            raise ContractError(f"neighbors() of dead or unknown vertex {u}")
        return iter(self.adj[u])

    def degree(self, u: int) -> int:
        if not self.is_alive(u):
            raise ContractError(f"degree() of dead or unknown vertex {u}")
        return len(self.adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Alive edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    # -- mutation ------------------------------------------------------------

    def remove_vertex(self, v: int) -> RemovalRecord:
        if not self.is_alive(v):
            raise ContractError(f"remove_vertex({v}): vertex is not alive")
        nbrs = tuple(sorted(self.adj[v]))
        for w in nbrs:
            self.adj[w].discard(v)
        self.adj[v] = set()
        self.alive[v] = False
        self.m -= len(nbrs)
        return RemovalRecord(v, nbrs)

    def restore_vertex(self, rec: RemovalRecord) -> None:
        v = rec.vertex
        if not (0 <= v < self.n) or self.alive[v]:
            raise ContractError(f"restore_vertex({v}): vertex is not removed")
        for w in rec.neighbors:
            if not self.alive[w]:
                raise ContractError(
                    f"restore_vertex({v}): neighbour {w} is dead (out-of-order restore)"
                )
        self.alive[v] = True
        self.adj[v] = set(rec.neighbors)
        for w in rec.neighbors:
            self.adj[w].add(v)
        self.m += len(rec.neighbors)

    def remove_edge(self, u: int, v: int) -> None:
        if v not in self.adj[u]:
            raise ContractError(f"remove_edge({u}, {v}): no such edge")
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.m -= 1

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ContractError(f"add_edge({u}, {v}): self-loop")
        if not (self.is_alive(u) and self.is_alive(v)):
            raise ContractError(f"add_edge({u}, {v}): endpoint not alive")
        if v in self.adj[u]:
            raise ContractError(f"add_edge({u}, {v}): edge already present")
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.m += 1

    def check_invariants(self) -> None:
        """Raise ``ContractError`` if symmetry, simplicity or the edge count is off."""
        total = 0
        for u in range(self.n):
            if not self.alive[u] and self.adj[u]:
                raise ContractError(f"dead vertex {u} has neighbours")
            for w in self.adj[u]:
                if w == u:
                    raise ContractError(f"self-loop at {u}")
                if not self.alive[w]:
                    raise ContractError(f"edge ({u}, {w}) to dead vertex")
                if u not in self.adj[w]:
                    raise ContractError(f"asymmetric edge ({u}, {w})")
            total += len(self.adj[u])
        if total != 2 * self.m:
            raise ContractError(f"edge count {self.m} != {total // 2}")
