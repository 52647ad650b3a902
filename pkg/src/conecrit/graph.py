"""Directed multigraphs, Laplacians and the iterated cone construction."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .linalg import IntMatrix

__all__ = [
    "Digraph",
    "GraphError",
    "NotEulerianError",
    "from_undirected",
    "from_arcs",
    "is_eulerian_connected",
    "eulerian_defect",
    "require_eulerian_connected",
    "laplacian",
    "reduced_laplacian",
    "cone",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "directed_cycle",
]


class GraphError(ValueError):
    pass


class NotEulerianError(GraphError):
    """Input is unbalanced at some vertex or is disconnected."""


@dataclass(frozen=True)
class Digraph:
    """Finite directed multigraph on vertices ``0..k-1``.

    ``arcs`` maps ``(tail, head)`` to a positive multiplicity and is kept in
    sorted key order so that every derived matrix is reproducible.
    """

    k: int
    arcs: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.k < 1:
            raise GraphError("a graph needs at least one vertex")
        clean = {}
        for (u, v), m in sorted(self.arcs.items()):
            if not (0 <= u < self.k and 0 <= v < self.k):
                raise GraphError("arc (%d, %d) has an index outside [0, %d)" % (u, v, self.k))
            if m < 1:
                raise GraphError("arc (%d, %d) has multiplicity %d < 1" % (u, v, m))
            clean[(u, v)] = int(m)
        object.__setattr__(self, "arcs", _FrozenArcs(clean))

    @property
    def arc_count(self) -> int:
        return sum(self.arcs.values())

    def outdeg(self, v: int) -> int:
        return sum(m for (t, _), m in self.arcs.items() if t == v)

    def indeg(self, v: int) -> int:
        return sum(m for (_, h), m in self.arcs.items() if h == v)

    def is_symmetric(self) -> bool:
        return all(self.arcs.get((v, u), 0) == m for (u, v), m in self.arcs.items())

    def adjacency(self) -> IntMatrix:
        """``A[i][j]`` counts arcs ``i -> j``."""
        a = [[0] * self.k for _ in range(self.k)]
        for (u, v), m in self.arcs.items():
            a[u][v] += m
        return IntMatrix(a, self.k)


class _FrozenArcs(dict):
    def _readonly(self, *args, **kwargs):
        raise TypeError("Digraph arcs are immutable")

    __setitem__ = __delitem__ = clear = pop = popitem = setdefault = update = _readonly

    def __hash__(self):
        return hash(tuple(self.items()))


def from_arcs(k: int, arcs: Iterable[tuple]) -> Digraph:
    """Build a digraph from ``(tail, head)`` or ``(tail, head, mult)`` tuples."""
    acc: dict[tuple[int, int], int] = defaultdict(int)
    for arc in arcs:
        u, v = arc[0], arc[1]
        m = arc[2] if len(arc) > 2 else 1
        if m < 1:
            raise GraphError("arc (%d, %d) has multiplicity %d < 1" % (u, v, m))
        acc[(u, v)] += m
    return Digraph(k, dict(acc))


def from_undirected(k: int, edges: Iterable[tuple]) -> Digraph:
    """Symmetrize ``(u, v[, mult])`` edges; a loop becomes a single arc."""
    if k < 1:
        raise GraphError("a graph needs at least one vertex")
    arcs = []
    for e in edges:
        u, v = e[0], e[1]
        m = e[2] if len(e) > 2 else 1
        for x in (u, v):
            if not 0 <= x < k:
                raise GraphError("edge (%d, %d) has an index outside [0, %d)" % (u, v, k))
        arcs.append((u, v, m))
        if u != v:
            arcs.append((v, u, m))
    return from_arcs(k, arcs)


def _components(g: Digraph) -> list[list[int]]:
    parent = list(range(g.k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.arcs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    comps: dict[int, list[int]] = defaultdict(list)
    for v in range(g.k):
        comps[find(v)].append(v)
    return sorted(comps.values())


def eulerian_defect(g: Digraph) -> str | None:
    """Describe why ``g`` is not Eulerian-connected, or ``None`` if it is."""
    out = [0] * g.k
    inn = [0] * g.k
    for (u, v), m in g.arcs.items():
        out[u] += m
        inn[v] += m
    for v in range(g.k):
        if out[v] != inn[v]:
            return "vertex %d is unbalanced: indegree %d, outdegree %d" % (v, inn[v], out[v])
    comps = _components(g)
    if len(comps) > 1:
        return "graph is disconnected: component %s does not reach vertex %d" % (
            comps[1], comps[0][0])
    return None


def is_eulerian_connected(g: Digraph) -> bool:
    # balanced + weakly connected implies strongly connected
    return eulerian_defect(g) is None


def require_eulerian_connected(g: Digraph) -> None:
    why = eulerian_defect(g)
    if why is not None:
        raise NotEulerianError(why)


def laplacian(g: Digraph) -> IntMatrix:
    """``L = D - A^T`` with ``D`` the outdegrees; loops cancel out."""
    lap = [[0] * g.k for _ in range(g.k)]
    for (u, v), m in g.arcs.items():
        lap[u][u] += m
        lap[v][u] -= m
    return IntMatrix(lap, g.k)


def reduced_laplacian(g: Digraph, sink: int) -> IntMatrix:
    if g.k < 2:
        raise GraphError("reduced Laplacian needs at least two vertices")
    if not 0 <= sink < g.k:
        raise GraphError("sink %d outside [0, %d)" % (sink, g.k))
    return laplacian(g).delete(sink, sink)


def cone(g: Digraph, n: int) -> Digraph:
    """Join ``g`` with ``K_n``; the cone vertices are ``k..k+n-1``."""
    if n < 1:
        raise GraphError("cone needs n >= 1, got %d" % n)
    k = g.k
    arcs = dict(g.arcs)
    for c in range(k, k + n):
        for v in range(c):
            arcs[(c, v)] = arcs.get((c, v), 0) + 1
            arcs[(v, c)] = arcs.get((v, c), 0) + 1
    return Digraph(k + n, arcs)


def complete_graph(k: int) -> Digraph:
    return from_undirected(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def path_graph(k: int) -> Digraph:
    return from_undirected(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Digraph:
    return from_undirected(k, [(i, (i + 1) % k) for i in range(k)])


def directed_cycle(k: int) -> Digraph:
    return from_arcs(k, [(i, (i + 1) % k) for i in range(k)])
