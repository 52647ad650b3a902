"""Brute-force tree counts, kept independent of any matrix computation."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

from .graph import Digraph, GraphError

__all__ = ["OracleBudget", "OracleBudgetError", "spanning_tree_count", "arborescence_count"]


class OracleBudgetError(ValueError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 8
    max_edges: int = 14
    max_dim: int = 6

    def __post_init__(self):
        if min(self.max_vertices, self.max_edges, self.max_dim) < 1:
            raise ValueError("oracle bounds must be positive")

    def check(self, g: Digraph, n_edges: int) -> None:
        if g.k > self.max_vertices:
            raise OracleBudgetError("%d vertices > budget %d" % (g.k, self.max_vertices))
        if n_edges > self.max_edges:
            raise OracleBudgetError("%d edges > budget %d" % (n_edges, self.max_edges))


DEFAULT_BUDGET = OracleBudget()


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def spanning_tree_count(g: Digraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Count spanning trees of a symmetrized graph by checking every edge subset.

    Parallel edges are handled as weights: a chosen support edge of
    multiplicity ``m`` contributes a factor ``m``.
    """
    if not g.is_symmetric():
        raise GraphError("spanning_tree_count needs an undirected (symmetric) graph")
    edges = [(u, v, m) for (u, v), m in g.arcs.items() if u < v]
    budget.check(g, len(edges))
    k = g.k
    total = 0
    for subset in itertools.combinations(edges, k - 1):
        parent = list(range(k))
        for u, v, _ in subset:
            ru, rv = _find(parent, u), _find(parent, v)
            if ru == rv:
                break
            parent[ru] = rv
        else:
            total += prod(m for _, _, m in subset)
    return total


def arborescence_count(g: Digraph, root: int, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Count spanning arborescences in which every vertex has a path to ``root``.

    Each non-root vertex keeps exactly one outgoing arc and the root none;
    the subset is an arborescence iff following those arcs never cycles.
    """
    if not 0 <= root < g.k:
        raise GraphError("root %d outside [0, %d)" % (root, g.k))
    arcs = [(u, v, m) for (u, v), m in g.arcs.items() if u != v and u != root]
    budget.check(g, len({(min(u, v), max(u, v)) for (u, v) in g.arcs if u != v}))
    k = g.k
    total = 0
    for subset in itertools.combinations(arcs, k - 1):
        nxt = {}
        for u, v, _ in subset:
            if u in nxt:
                break
            nxt[u] = v
        else:
            if _all_reach(nxt, root, k):
                total += prod(m for _, _, m in subset)
    return total


def _all_reach(nxt: dict[int, int], root: int, k: int) -> bool:
    for start in range(k):
        v, steps = start, 0
        while v != root:
            v = nxt[v]
            steps += 1
            if steps > k:
                return False
    return True
