"""Cross-checks of the lister against brute force and its own counters.

Every ``check_*`` function returns a list of human-readable failure
messages; an empty list means the check passed.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import permutations

from .bruteforce import brute_chordless_cycles, brute_chordless_st_paths, brute_good_neighbors, is_chordless
from .connectivity import attach
from .graph import Graph
from .io import format_edge_list
from .listing import EnumStats, cleanup_good_neighbors, list_chordless_cycles, list_st_paths


def proper_prefixes(paths: list[list[int]]) -> set[tuple[int, ...]]:
    return {tuple(p[:k]) for p in paths for k in range(1, len(p))}


def tree_counter_errors(stats: EnumStats, paths: list[list[int]], n: int) -> list[str]:
    errors = []
    if stats.leaves != stats.solutions or stats.solutions != len(paths):
        errors.append(f"leaves={stats.leaves} solutions={stats.solutions} emitted={len(paths)}")
    if stats.solutions and stats.branching_excess != stats.solutions - 1:
        errors.append(f"branching_excess={stats.branching_excess} != solutions-1={stats.solutions - 1}")
    if stats.solutions and stats.branching_nodes > stats.solutions - 1:
        errors.append(f"branching_nodes={stats.branching_nodes} > solutions-1={stats.solutions - 1}")
    if stats.internal_nodes != len(proper_prefixes(paths)):
        errors.append(f"internal_nodes={stats.internal_nodes} != proper prefixes={len(proper_prefixes(paths))}")
    if stats.max_depth > n:
        errors.append(f"max_depth={stats.max_depth} > n={n}")
    return errors


def check_paths(g: Graph, s: int, t: int, oracle: str = "fast", expected=None) -> list[str]:
    before = g.copy()
    found: list[list[int]] = []
    stats = list_st_paths(g, s, t, found.append, oracle=oracle)
    errors = []
    if g != before:
        errors.append("graph not restored")
    if expected is None:
        expected = brute_chordless_st_paths(g, s, t, allow_large=True)
    dupes = [p for p, c in Counter(map(tuple, found)).items() if c > 1]
    if dupes:
        errors.append(f"duplicates {dupes}")
    if sorted(found) != expected:
        errors.append(f"got {sorted(found)}, expected {expected}")
    bad = [p for p in found if not is_chordless(g, p)]
    if bad:
        errors.append(f"not chordless: {bad}")
    errors += tree_counter_errors(stats, found, g.n)
    if stats.nongood_scans_max > 2 * g.n:
        errors.append(f"nongood scans {stats.nongood_scans_max} > 2n={2 * g.n}")
    return [f"paths s={s} t={t}: {e}" for e in errors]


def check_cycles(g: Graph, oracle: str = "fast", expected=None) -> list[str]:
    before = g.copy()
    found: list[list[int]] = []
    trace: list = []
    stats = list_chordless_cycles(g, found.append, oracle=oracle, trace=trace)
    errors = []
    if g != before:
        errors.append("graph not restored")
    if expected is None:
        expected = brute_chordless_cycles(g, allow_large=True)
    if len(found) != len(set(map(tuple, found))):
        errors.append("duplicate cycles")
    if sorted(found) != expected:
        errors.append(f"got {sorted(found)}, expected {expected}")
    holes: list[list[int]] = []
    list_chordless_cycles(g, holes.append, min_len=4, oracle=oracle)
    if sorted(holes) != [c for c in expected if len(c) >= 4]:
        errors.append(f"holes {sorted(holes)} disagree with brute force")
    for s, t, run, paths in trace:
        errors += [f"run ({s},{t}): {e}" for e in tree_counter_errors(run, paths, g.n)]
    if stats.branching_excess != stats.solutions - stats.productive_runs:
        errors.append("aggregate branching_excess != solutions - productive_runs")
    return [f"cycles: {e}" for e in errors]


def random_cleanup_case(g: Graph, rng: random.Random):
    """Pick ``(s, t, prefix)`` with prefix a proper prefix of a chordless st-path."""
    verts = list(g.vertices())
    for _ in range(50):
        s, t = rng.sample(verts, 2)
        paths = brute_chordless_st_paths(g, s, t, allow_large=True)
        if paths:
            p = rng.choice(paths)
            return s, t, p[: rng.randrange(1, len(p))]
    return None


def check_cleanup(g: Graph, t: int, prefix: list[int], oracle: str = "fast") -> list[str]:
    """Rebuild the lister's state at ``prefix[-1]`` and compare its cleanup with brute force."""
    work = g.copy()
    for j in range(len(prefix) - 1):
        for w in brute_good_neighbors(g, prefix[: j + 1], t, allow_large=True):
            if w != prefix[j + 1] and work.is_alive(w):
                work.remove_vertex(w)
    u = prefix[-1]
    o = attach(work, oracle)
    cert = o.extract_path(u, t)
    if cert is None:
        return [f"cleanup prefix={prefix} t={t}: u disconnected from t in rebuilt state"]
    state = work.copy()
    entries = cleanup_good_neighbors(work, o, u, t, cert)
    got = {e.v for e in entries}
    want = brute_good_neighbors(g, prefix, t, allow_large=True)
    errors = []
    if got != want:
        errors.append(f"got {sorted(got)}, expected {sorted(want)}")
    if o.connected(u, t):
        errors.append("u still connected to t after cleanup")
    for e in reversed(entries):
        work.restore_vertex(e.removal)
    if work != state:
        errors.append("state not restored")
    return [f"cleanup prefix={prefix} t={t}: {e}" for e in errors]


def verify_graph(g: Graph, oracle: str = "fast", cleanup_cases: int = 3,
                 rng: random.Random | None = None) -> list[str]:
    rng = rng or random.Random(0)
    errors: list[str] = []
    verts = list(g.vertices())
    for s, t in permutations(verts, 2):
        errors += check_paths(g, s, t, oracle)
    errors += check_cycles(g, oracle)
    if len(verts) >= 2:
        for _ in range(cleanup_cases):
            case = random_cleanup_case(g, rng)
            if case is not None:
                _, t, prefix = case
                errors += check_cleanup(g, t, prefix, oracle)
    return errors


def reproducer(g: Graph) -> str:
    return format_edge_list(g)
