"""Listing chordless st-paths and chordless cycles.

The st-path lister carries, next to the chordless prefix ``s ~> u`` built
so far, an arbitrary ``u ~> t`` path as a certificate that some chordless
extension exists (any st-path can be shortcut into a chordless one). At
each node the neighbours of ``u`` that extend the prefix are found by a
cleanup loop: take the neighbour of ``u`` lying closest to ``t`` on the
certificate, remove it, and ask the connectivity oracle for a new
certificate until ``u`` and ``t`` separate. Each neighbour found this way
is then explored with all the other ones still removed.

Cycles are listed with the usual reduction: for every vertex ``s`` in
increasing id order and every neighbour ``t`` of ``s``, delete the edge
``(s, t)``, list the chordless st-paths (each one closes into a chordless
cycle), then drop ``t`` for the rest of ``s``'s turn; finally drop ``s``.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from typing import Callable

from .connectivity import ConnectivityOracle, OracleOpCounters, attach
from .graph import ContractError, Graph, RemovalRecord

Sink = Callable[[list[int]], None]


class DistanceLabels:
    """Epoch-stamped distance-to-``t`` labels along the current certificate.

    A label is valid only while its epoch equals ``current``; relabelling a
    new certificate bumps the epoch, which invalidates every older label in
    O(1).
    """

    __slots__ = ("epoch", "dist", "current")

    def __init__(self, n: int) -> None:
        self.epoch = [0] * n
        self.dist = [0] * n
        self.current = 0

    def get(self, v: int) -> int | None:
        return self.dist[v] if self.epoch[v] == self.current else None

    def relabel(self, path: list[int]) -> None:
        self.current += 1
        cur = self.current
        last = len(path) - 1
        for i, v in enumerate(path):
            self.epoch[v] = cur
            self.dist[v] = last - i


def relabel_certificate(path: list[int], labels: DistanceLabels) -> None:
    labels.relabel(path)


@dataclass
class GoodEntry:
    v: int
    suffix: list[int]
    removal: RemovalRecord


@dataclass
class EnumStats:
    """Recursion-tree and work counters of one enumeration.

    ``nongood_scans_per_solution[i]`` is the summed reduced degree along the
    root-to-leaf path of the i-th solution: at every internal node ``u`` it
    counts the neighbours of ``u`` present at cleanup time that are neither
    good nor the previous path vertex, plus one for the next path vertex.

    ``branching_excess`` sums ``children - 1`` over branching nodes, so it
    equals ``leaves - 1`` for every tree with at least one leaf;
    ``branching_nodes`` reaches that value only when no node has three or
    more children.
    """

    solutions: int = 0
    leaves: int = 0
    emitted: int = 0
    branching_nodes: int = 0
    branching_excess: int = 0
    unary_nodes: int = 0
    max_depth: int = 0
    nongood_scans_max: int = 0
    nongood_scans_per_solution: list[int] = field(default_factory=list)
    delays_us: list[float] = field(default_factory=list)
    oracle: OracleOpCounters = field(default_factory=OracleOpCounters)
    wall_ms: float = 0.0
    runs: int = 0
    productive_runs: int = 0

    @property
    def internal_nodes(self) -> int:
        return self.branching_nodes + self.unary_nodes

    def absorb(self, run: "EnumStats") -> None:
        """Fold the counters of one st-path run into these totals."""
        self.solutions += run.solutions
        self.leaves += run.leaves
        self.branching_nodes += run.branching_nodes
        self.branching_excess += run.branching_excess
        self.unary_nodes += run.unary_nodes
        self.max_depth = max(self.max_depth, run.max_depth)
        self.nongood_scans_max = max(self.nongood_scans_max, run.nongood_scans_max)
        self.nongood_scans_per_solution.extend(run.nongood_scans_per_solution)
        self.runs += 1
        if run.solutions:
            self.productive_runs += 1


class _Lister:
    def __init__(self, g: Graph, oracle: ConnectivityOracle, t: int, sink: Sink,
                 labels: DistanceLabels, stats: EnumStats, debug: bool = False) -> None:
        self.g = g
        self.o = oracle
        self.t = t
        self.sink = sink
        self.labels = labels
        self.stats = stats
        self.debug = debug
        self.clock = time.perf_counter()

    def remove(self, v: int) -> RemovalRecord:
        rec = self.g.remove_vertex(v)
        delete = self.o.delete_edge
        for w in rec.neighbors:
            delete(v, w)
        return rec

    def restore(self, rec: RemovalRecord) -> None:
        self.g.restore_vertex(rec)
        insert = self.o.insert_edge
        v = rec.vertex
        for w in rec.neighbors:
            insert(v, w)

    def closest_good_neighbor(self, u: int) -> int:
        epoch, dist, cur = self.labels.epoch, self.labels.dist, self.labels.current
        if epoch[u] != cur:
            raise ContractError(f"vertex {u} is not on the current certificate")
        best, best_d = -1, dist[u]
        for w in self.g.adj[u]:
            if epoch[w] == cur and dist[w] < best_d:
                best, best_d = w, dist[w]
        if best < 0:
            raise ContractError(f"no neighbour of {u} lies on its certificate")
        return best

    def cleanup(self, u: int, cert: list[int]) -> list[GoodEntry]:
        entries = []
        t = self.t
        while True:
            v = self.closest_good_neighbor(u)
            # cert is labelled, so v's position follows from its distance
            suffix = cert[len(cert) - 1 - self.labels.dist[v]:]
            entries.append(GoodEntry(v, suffix, self.remove(v)))
            if not self.o.connected(u, t):
                return entries
            cert = self.o.extract_path(u, t)
            self.labels.relabel(cert)

    def _check_node(self, u: int, cert: list[int]) -> None:
        self.g.check_invariants()
        if cert[0] != u or cert[-1] != self.t:
            raise ContractError(f"certificate {cert} does not run from {u} to {self.t}")
        for a, b in zip(cert, cert[1:]):
            if not self.g.has_edge(a, b):
                raise ContractError(f"certificate edge ({a}, {b}) is not alive")
        last = len(cert) - 1
        for i, v in enumerate(cert):
            if self.labels.get(v) != last - i:
                raise ContractError(f"stale distance label on {v}")

    def emit(self, prefix: list[int], acc: int) -> None:
        st = self.stats
        st.solutions += 1
        st.leaves += 1
        st.nongood_scans_per_solution.append(acc)
        if acc > st.nongood_scans_max:
            st.nongood_scans_max = acc
        now = time.perf_counter()
        st.delays_us.append((now - self.clock) * 1e6)
        self.clock = now
        self.sink(list(prefix))

    def recurse(self, prefix: list[int], u: int, cert: list[int], acc: int) -> None:
        st = self.stats
        depth = len(prefix) - 1
        if depth > st.max_depth:
            st.max_depth = depth
        if u == self.t:
            self.emit(prefix, acc)
            return
        if self.debug:
            self._check_node(u, cert)
        deg = len(self.g.adj[u])
        entries = self.cleanup(u, cert)
        acc += deg - len(entries) - (1 if depth else 0) + 1
        if len(entries) == 1:
            st.unary_nodes += 1
        else:
            st.branching_nodes += 1
            st.branching_excess += len(entries) - 1
        alive = self.g.alive
        # only one entry present at a time; the others stay removed
        for e in entries:
            back = RemovalRecord(e.v, tuple(w for w in e.removal.neighbors if alive[w]))
            self.restore(back)
            if len(entries) > 1:
                self.labels.relabel(e.suffix)
            prefix.append(e.v)
            self.recurse(prefix, e.v, e.suffix, acc)
            prefix.pop()
            self.remove(e.v)
        for e in reversed(entries):
            self.restore(e.removal)


def _recursion_headroom(n: int) -> None:
    need = 2 * n + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def _resolve_oracle(g: Graph, oracle: str | ConnectivityOracle) -> ConnectivityOracle:
    if isinstance(oracle, ConnectivityOracle):
        return oracle
    return attach(g, oracle)


def _check_certificate(g: Graph, cert: list[int], s: int, t: int) -> None:
    if not cert or cert[0] != s or cert[-1] != t or len(set(cert)) != len(cert):
        raise ValueError(f"certificate must be a simple path from {s} to {t}")
    for a, b in zip(cert, cert[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"certificate uses missing edge ({a}, {b})")


def list_st_paths(
    g: Graph,
    s: int,
    t: int,
    sink: Sink | None = None,
    oracle: str | ConnectivityOracle = "fast",
    certificate: list[int] | None = None,
    debug: bool = False,
) -> EnumStats:
    """List every chordless path from ``s`` to ``t`` in ``g``.

    Parameters
    ----------
    g : Graph
        Mutated during the call and restored before returning.
    s, t : int
        Distinct alive vertices.
    sink : callable, optional
        Receives each solution as a fresh list of vertex ids.
    oracle : {"fast", "reference"} or ConnectivityOracle
        A ready oracle must mirror ``g``'s current edges.
    certificate : list of int, optional
        Initial s-t path; by default any path the oracle hands back.
    debug : bool
        Check graph and label invariants at every recursion node.

    Returns
    -------
    EnumStats
    """
    if s == t:
        raise ValueError("s and t must differ; list cycles through the cycle driver")
    for x in (s, t):
        if not g.is_alive(x):
            raise ValueError(f"vertex {x} is not in the graph")
    start = time.perf_counter()
    o = _resolve_oracle(g, oracle)
    before = o.counters.snapshot()
    stats = EnumStats()
    stats.runs = 1
    if certificate is not None:
        _check_certificate(g, certificate, s, t)
    if certificate is not None or o.connected(s, t):
        cert = list(certificate) if certificate is not None else o.extract_path(s, t)
        labels = DistanceLabels(g.n)
        labels.relabel(cert)
        _recursion_headroom(g.n)
        lister = _Lister(g, o, t, sink or (lambda p: None), labels, stats, debug)
        lister.recurse([s], s, cert, 0)
    stats.productive_runs = 1 if stats.solutions else 0
    stats.emitted = stats.solutions
    stats.oracle = o.counters - before
    stats.wall_ms = (time.perf_counter() - start) * 1e3
    return stats


def cleanup_good_neighbors(
    g: Graph,
    oracle: ConnectivityOracle,
    u: int,
    t: int,
    certificate: list[int],
    labels: DistanceLabels | None = None,
) -> list[GoodEntry]:
    """Run the cleanup loop of ``u`` once and return its good neighbours.

    On return every entry is still removed from ``g`` and ``oracle``;
    restore them in reverse order with their ``removal`` records.
    """
    if u == t:
        raise ValueError("cleanup needs u != t")
    if labels is None:
        labels = DistanceLabels(g.n)
        labels.relabel(certificate)
    lister = _Lister(g, oracle, t, lambda p: None, labels, EnumStats())
    return lister.cleanup(u, list(certificate))


def closest_good_neighbor(g: Graph, u: int, labels: DistanceLabels) -> int:
    """Neighbour of ``u`` with the smallest valid distance label below ``u``'s."""
    lister = _Lister(g, None, -1, None, labels, None)  # type: ignore[arg-type]
    return lister.closest_good_neighbor(u)


def canonical_cycle(cycle: list[int]) -> list[int]:
    """Rotate to the smallest id and orient towards its smaller neighbour."""
    k = len(cycle)
    i = min(range(k), key=cycle.__getitem__)
    out = cycle[i:] + cycle[:i]
    if k > 2 and out[-1] < out[1]:
        out = [out[0]] + out[:0:-1]
    return out


def list_chordless_cycles(
    g: Graph,
    sink: Sink | None = None,
    min_len: int = 3,
    oracle: str | ConnectivityOracle = "fast",
    trace: list | None = None,
    debug: bool = False,
) -> EnumStats:
    """List every chordless cycle of ``g`` with at least ``min_len`` vertices.

    Cycles reach ``sink`` in canonical form (see :func:`canonical_cycle`).
    ``min_len=4`` lists the holes. The length filter is applied on output;
    the counters always describe the full enumeration.

    Tree counters are summed over the ``(s, t)`` runs, so
    ``branching_excess == solutions - productive_runs``.

    If ``trace`` is a list, one ``(s, t, run_stats, paths)`` tuple is
    appended per edge examined.
    """
    if min_len < 3:
        raise ValueError("min_len must be at least 3")
    start = time.perf_counter()
    o = _resolve_oracle(g, oracle)
    before = o.counters.snapshot()
    total = EnumStats()
    _recursion_headroom(g.n)
    labels = DistanceLabels(g.n)
    sink = sink or (lambda c: None)
    journal: list[tuple[int, int] | RemovalRecord] = []
    clock = [time.perf_counter()]

    def remove(v: int) -> RemovalRecord:
        rec = g.remove_vertex(v)
        for w in rec.neighbors:
            o.delete_edge(v, w)
        return rec

    def restore(rec: RemovalRecord) -> None:
        g.restore_vertex(rec)
        for w in rec.neighbors:
            o.insert_edge(rec.vertex, w)

    for s in range(g.n):
        if not g.alive[s]:
            continue
        dropped = []
        for t in sorted(g.adj[s]):
            g.remove_edge(s, t)
            o.delete_edge(s, t)
            journal.append((s, t))
            run = EnumStats()
            paths: list[list[int]] = []

            def emit(path: list[int], paths=paths) -> None:
                if trace is not None:
                    paths.append(path)
                if len(path) >= min_len:
                    total.emitted += 1
                    sink(canonical_cycle(path))

            if o.connected(s, t):
                cert = o.extract_path(s, t)
                labels.relabel(cert)
                lister = _Lister(g, o, t, emit, labels, run, debug)
                lister.clock = clock[0]
                lister.recurse([s], s, cert, 0)
                clock[0] = lister.clock
                total.delays_us.extend(run.delays_us)
            total.absorb(run)
            if trace is not None:
                trace.append((s, t, run, paths))
            dropped.append(remove(t))
        for rec in reversed(dropped):
            restore(rec)
        journal.append(remove(s))

    for item in reversed(journal):
        if isinstance(item, RemovalRecord):
            restore(item)
        else:
            g.add_edge(*item)
            o.insert_edge(*item)

    total.oracle = o.counters - before
    total.wall_ms = (time.perf_counter() - start) * 1e3
    return total
