"""Isomorph-free enumeration of free trees.

Rooted trees are generated by the classic level-sequence successor rule
(each canonical non-increasing level sequence encodes one rooted tree
isomorphism class), then folded down to free trees by keeping the first
representative of each centroid-rooted canonical form.  Counts are pinned to
the published free-tree census in the test suite.
"""

from __future__ import annotations

from collections.abc import Iterator

from .graphs import Graph

MAX_TREE_ORDER = 16


def _rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """All canonical level sequences of rooted trees on n vertices.

    The sequence lists vertex depths in preorder, root depth 0.  Successor
    rule: find the last position p with depth >= 2, its parent position q,
    and tile the suffix with copies of the segment [q..p-1].
    """
    levels = list(range(n))
    while True:
        yield levels
        p = max((i for i in range(n) if levels[i] >= 2), default=-1)
        if p < 0:
            return
        q = next(i for i in range(p - 1, -1, -1) if levels[i] == levels[p] - 1)
        chunk = levels[q:p]
        nxt = levels[:p]
        while len(nxt) < n:
            nxt.extend(chunk[: n - len(nxt)])
        levels = nxt


def _edges_from_levels(levels: list[int]) -> list[tuple[int, int]]:
    """Preorder level sequence -> parent edges."""
    stack: list[int] = []
    edges = []
    for v, depth in enumerate(levels):
        del stack[depth:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return edges


def _centroids(n: int, neighbors: list[list[int]]) -> list[int]:
    """The one or two vertices minimising the largest remaining component."""
    if n == 1:
        return [0]
    order = []
    parent = [-1] * n
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        order.append(u)
        for v in neighbors[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                stack.append(v)
    size = [1] * n
    heaviest = [0] * n
    for u in reversed(order):
        for v in neighbors[u]:
            if v != parent[u]:
                size[u] += size[v]
                heaviest[u] = max(heaviest[u], size[v])
        heaviest[u] = max(heaviest[u], n - size[u])
    best = min(heaviest)
    return [v for v in range(n) if heaviest[v] == best]


def _rooted_code(root: int, block: int, neighbors: list[list[int]]) -> tuple:
    """Canonical nested-tuple code of the subtree at ``root``, not crossing
    ``block``."""
    children = sorted(
        _rooted_code(v, root, neighbors) for v in neighbors[root] if v != block
    )
    return tuple(children)


def _free_code(n: int, neighbors: list[list[int]]) -> tuple:
    cents = _centroids(n, neighbors)
    if len(cents) == 1:
        return ("c", _rooted_code(cents[0], -1, neighbors))
    a, b = cents
    halves = sorted((_rooted_code(a, b, neighbors), _rooted_code(b, a, neighbors)))
    return ("cc", halves[0], halves[1])


def free_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of free trees on n vertices.

    Deterministic order (discovery order of the level-sequence scan).
    Bounded at MAX_TREE_ORDER to keep exhaustive sweeps minutes-scale.
    """
    if not 1 <= n <= MAX_TREE_ORDER:
        raise ValueError(f"tree order must be in 1..{MAX_TREE_ORDER}, got {n}")
    if n == 1:
        yield Graph(1)
        return
    seen: set[tuple] = set()
    for levels in _rooted_level_sequences(n):
        edges = _edges_from_levels(levels)
        neighbors: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        code = _free_code(n, neighbors)
        if code not in seen:
            seen.add(code)
            yield Graph(n, edges)
