"""Euler-tour trees on implicit treaps.

Each vertex owns one occurrence node and each tree edge ``{u, v}`` owns two
arc nodes ``(u, v)`` and ``(v, u)``. A tree's Euler tour is the in-order
sequence of its treap. Nodes carry two flags, aggregated up the treap, so a
whole tree can be searched for flagged items in time proportional to the
number of hits times the treap height:

* ``tflag`` on the ``(min, max)`` arc of a tree edge (used by the level
  structure to mark edges whose level equals this forest's level);
* ``nflag`` on a vertex node (the vertex has non-tree edges at this level).
"""

from __future__ import annotations

import random


class Node:
    __slots__ = ("left", "right", "parent", "prio", "size", "u", "v",
                 "tflag", "nflag", "tagg", "nagg")

    def __init__(self, u: int, v: int, prio: float) -> None:
        self.left = self.right = self.parent = None
        self.prio = prio
        self.size = 1
        self.u = u
        self.v = v
        self.tflag = self.nflag = self.tagg = self.nagg = False


def _pull(x: Node) -> None:
    l, r = x.left, x.right
    size, t, n = 1, x.tflag, x.nflag
    if l is not None:
        size += l.size
        t = t or l.tagg
        n = n or l.nagg
    if r is not None:
        size += r.size
        t = t or r.tagg
        n = n or r.nagg
    x.size, x.tagg, x.nagg = size, t, n


def _merge(a: Node | None, b: Node | None) -> Node | None:
    if a is None:
        return b
    if b is None:
        return a
    if a.prio > b.prio:
        c = _merge(a.right, b)
        a.right = c
        c.parent = a
        _pull(a)
        return a
    c = _merge(a, b.left)
    b.left = c
    c.parent = b
    _pull(b)
    return b


def _split(t: Node | None, k: int) -> tuple[Node | None, Node | None]:
    """Split off the first ``k`` nodes of ``t``'s sequence."""
    if t is None:
        return None, None
    ls = t.left.size if t.left is not None else 0
    if k <= ls:
        a, b = _split(t.left, k)
        t.left = b
        if b is not None:
            b.parent = t
        if a is not None:
            a.parent = None
        _pull(t)
        return a, t
    a, b = _split(t.right, k - ls - 1)
    t.right = a
    if a is not None:
        a.parent = t
    if b is not None:
        b.parent = None
    _pull(t)
    return t, b


def merge(*parts: Node | None) -> Node | None:
    root = None
    for p in parts:
        root = _merge(root, p)
    if root is not None:
        root.parent = None
    return root


def split(t: Node | None, k: int) -> tuple[Node | None, Node | None]:
    a, b = _split(t, k)
    if a is not None:
        a.parent = None
    if b is not None:
        b.parent = None
    return a, b


def root_of(x: Node) -> Node:
    while x.parent is not None:
        x = x.parent
    return x


def index_of(x: Node) -> int:
    k = x.left.size if x.left is not None else 0
    while x.parent is not None:
        p = x.parent
        if p.right is x:
            k += 1 + (p.left.size if p.left is not None else 0)
        x = p
    return k


def _repull_up(x: Node) -> None:
    while x is not None:
        t, n = x.tagg, x.nagg
        _pull(x)
        if x.tagg == t and x.nagg == n and x.parent is not None:
            # ancestors already agree; size did not change
            return
        x = x.parent


class EulerTourForest:
    """A spanning forest on ``n`` vertices stored as Euler tours."""

    def __init__(self, n: int, rng: random.Random) -> None:
        self._rng = rng
        self.vnode = [Node(u, u, rng.random()) for u in range(n)]
        self.arcs: dict[tuple[int, int], tuple[Node, Node]] = {}

    def root(self, u: int) -> Node:
        return root_of(self.vnode[u])

    def connected(self, u: int, v: int) -> bool:
        return root_of(self.vnode[u]) is root_of(self.vnode[v])

    def tree_size(self, u: int) -> int:
        """Number of vertices in the tree containing ``u``."""
        return (root_of(self.vnode[u]).size + 2) // 3

    def _reroot(self, u: int) -> Node:
        x = self.vnode[u]
        r = root_of(x)
        k = index_of(x)
        if k == 0:
            return r
        a, b = split(r, k)
        return merge(b, a)

    def link(self, u: int, v: int) -> None:
        key = (u, v) if u < v else (v, u)
        tu = self._reroot(u)
        tv = self._reroot(v)
        if tu is tv:
            raise RuntimeError(f"link({u}, {v}) would close a cycle")
        e1 = Node(u, v, self._rng.random())
        e2 = Node(v, u, self._rng.random())
        self.arcs[key] = (e1, e2) if u < v else (e2, e1)
        merge(tu, e1, tv, e2)

    def cut(self, u: int, v: int) -> None:
        key = (u, v) if u < v else (v, u)
        a, b = self.arcs.pop(key)
        r = root_of(a)
        i, j = index_of(a), index_of(b)
        if i > j:
            a, b, i, j = b, a, j, i
        left, rest = split(r, i)
        _, rest = split(rest, 1)
        mid, rest = split(rest, j - i - 1)
        _, right = split(rest, 1)
        merge(left, right)
        # mid is the detached subtree's tour; it is already a root

    def set_tree_flag(self, u: int, v: int, flag: bool) -> None:
        key = (u, v) if u < v else (v, u)
        x = self.arcs[key][0]
        if x.tflag != flag:
            x.tflag = flag
            _repull_up(x)

    def set_vertex_flag(self, u: int, flag: bool) -> None:
        x = self.vnode[u]
        if x.nflag != flag:
            x.nflag = flag
            _repull_up(x)

    def flagged_tree_edges(self, root: Node) -> list[tuple[int, int]]:
        out = []
        stack = [root]
        while stack:
            x = stack.pop()
            if x.tflag:
                out.append((x.u, x.v))
            for c in (x.left, x.right):
                if c is not None and c.tagg:
                    stack.append(c)
        return out

    def flagged_vertices(self, root: Node) -> list[int]:
        out = []
        stack = [root]
        while stack:
            x = stack.pop()
            if x.nflag:
                out.append(x.u)
            for c in (x.left, x.right):
                if c is not None and c.nagg:
                    stack.append(c)
        return out

    def tour(self, u: int) -> list[tuple[int, int]]:
        """In-order tour of ``u``'s tree (debugging aid)."""
        out = []
        stack = []
        x = root_of(self.vnode[u])
        while stack or x is not None:
            while x is not None:
                stack.append(x)
                x = x.left
            x = stack.pop()
            out.append((x.u, x.v))
            x = x.right
        return out
