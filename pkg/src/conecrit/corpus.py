"""Small graph families for exhaustive checks."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .graph import Digraph, from_arcs, from_undirected

__all__ = ["connected_simple_graphs", "directed_eulerian_examples", "standard_corpus"]


def _connected(k, edges):
    seen = {0}
    stack = [0]
    adj = {v: [] for v in range(k)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == k


@lru_cache(maxsize=None)
def _connected_simple_edge_sets(k: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    pairs = list(itertools.combinations(range(k), 2))
    perms = list(itertools.permutations(range(k)))
    found = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(edges) < k - 1 or not _connected(k, edges):
            continue
        canon = min(
            tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges)) for p in perms
        )
        found.setdefault(canon, tuple(edges))
    return tuple(found[c] for c in sorted(found, key=lambda c: (len(c), c)))


def connected_simple_graphs(max_k: int) -> list[Digraph]:
    """One representative per isomorphism class of connected simple graphs."""
    return [
        from_undirected(k, edges)
        for k in range(1, max_k + 1)
        for edges in _connected_simple_edge_sets(k)
    ]


def directed_eulerian_examples() -> list[Digraph]:
    """Balanced, connected, genuinely directed digraphs on at most 5 vertices."""
    return [
        from_arcs(3, [(0, 1), (1, 2), (2, 0)]),
        from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
        from_arcs(5, [(i, (i + 1) % 5) for i in range(5)]),
        # two directed triangles glued at vertex 0
        from_arcs(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]),
        # regular tournament on 5 vertices
        from_arcs(5, [(i, (i + d) % 5) for i in range(5) for d in (1, 2)]),
        # doubled directed 4-cycle plus an undirected chord
        from_arcs(4, [(0, 1, 2), (1, 2, 2), (2, 3, 2), (3, 0, 2), (0, 2), (2, 0)]),
        # directed triangle with a loop and a double 2-cycle
        from_arcs(3, [(0, 1), (1, 2), (2, 0), (0, 0), (1, 2, 2), (2, 1, 2)]),
    ]


def standard_corpus(max_k: int = 5) -> list[Digraph]:
    return connected_simple_graphs(max_k) + directed_eulerian_examples()
