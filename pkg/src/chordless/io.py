"""Reading and writing graphs as plain edge lists or DIMACS ``p edge`` files."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, TextIO

from .graph import Graph


class GraphFormatError(ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _is_dimacs(lines: list[str]) -> bool:
    for raw in lines:
        parts = raw.split()
        if not parts or parts[0].startswith("#"):
            continue
        return parts[0] in ("p", "c", "e")
    return False


def parse_edge_list(lines: Iterable[str]) -> Graph:
    """Parse ``u v`` lines (0-based). ``#`` comments and blank lines are skipped."""
    edges = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(lineno, f"expected two vertex ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(lineno, f"non-integer vertex id in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(lineno, "vertex ids must be non-negative")
        if u == v:
            raise GraphFormatError(lineno, f"self-loop on vertex {u}")
        edges.append((u, v))
    return Graph.from_edges(edges)


def parse_dimacs(lines: Iterable[str]) -> Graph:
    """Parse DIMACS ``p edge n m`` / ``e u v`` with 1-based ids (stored 0-based)."""
    n = None
    edges = []
    for lineno, raw in enumerate(lines, 1):
        parts = raw.split()
        if not parts or parts[0] == "c" or parts[0].startswith("#"):
            continue
        try:
            if parts[0] == "p":
                if len(parts) != 4:
                    raise GraphFormatError(lineno, "expected 'p edge <n> <m>'")
                n = int(parts[2])
            elif parts[0] == "e":
                if len(parts) != 3:
                    raise GraphFormatError(lineno, "expected 'e <u> <v>'")
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
                if u < 0 or v < 0 or (n is not None and max(u, v) >= n):
                    raise GraphFormatError(lineno, "vertex id out of range")
                if u == v:
                    raise GraphFormatError(lineno, f"self-loop on vertex {u}")
                edges.append((u, v))
            else:
                raise GraphFormatError(lineno, f"unknown line type {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(lineno, f"non-integer field in {raw.strip()!r}") from None
    return Graph.from_edges(edges, n=n)


def read_graph(source: str | Path | TextIO, fmt: str = "auto") -> Graph:
    if hasattr(source, "read"):
        lines = source.read().splitlines()
    else:
        lines = Path(source).read_text().splitlines()
    if fmt == "auto":
        fmt = "dimacs" if _is_dimacs(lines) else "edgelist"
    if fmt == "dimacs":
        return parse_dimacs(lines)
    if fmt == "edgelist":
        return parse_edge_list(lines)
    raise ValueError(f"unknown graph format {fmt!r}")


def format_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def write_edge_list(g: Graph, out: str | Path | TextIO) -> None:
    text = format_edge_list(g)
    if hasattr(out, "write"):
        out.write(text)
    else:
        Path(out).write_text(text)
