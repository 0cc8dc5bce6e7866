"""Directed graphs with integer weights, shortest paths, and path prefix sums.

Distances are plain Python ints except for the infinity sentinel ``INF``
(``math.inf``), which compares correctly against any int.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    IdOutOfRangeError,
    NegativeCycleError,
    SelfLoopError,
    UnreachableError,
    WeightOutOfRangeError,
)

INF = math.inf

# float64 holds integers exactly up to 2**53; downstream matrix kernels rely
# on it, so reject graphs whose distance values could get anywhere near.
_EXACT_LIMIT = 1 << 53


class Graph:
    """Immutable directed graph, nodes 0..n-1, weights in [-weight_bound, weight_bound].

    Parallel edges collapse to the minimum weight.  Self loops are rejected:
    a negative one is a negative cycle and a nonnegative one never helps a
    shortest path.
    """

    __slots__ = ("n", "weight_bound", "_adj", "_radj", "_lookup", "min_weight",
                 "edge_count")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]],
                 weight_bound: int):
        if n < 1:
            raise IdOutOfRangeError(f"need at least one node, got n={n}")
        if weight_bound < 1:
            raise WeightOutOfRangeError(
                f"weight bound must be positive, got {weight_bound}")
        if 4 * n * weight_bound >= _EXACT_LIMIT:
            raise WeightOutOfRangeError(
                f"n*M too large for exact float64 arithmetic: "
                f"4*{n}*{weight_bound} >= 2**53")
        self.n = n
        self.weight_bound = weight_bound
        lookup: dict[tuple[int, int], int] = {}
        for u, v, w in edges:
            if not (0 <= u < n):
                raise IdOutOfRangeError(f"edge source {u} not in [0, {n})")
            if not (0 <= v < n):
                raise IdOutOfRangeError(f"edge target {v} not in [0, {n})")
            if u == v:
                raise SelfLoopError(f"self loop at node {u}")
            if not (-weight_bound <= w <= weight_bound):
                raise WeightOutOfRangeError(
                    f"weight {w} outside [-{weight_bound}, {weight_bound}]")
            key = (u, v)
            if key not in lookup or w < lookup[key]:
                lookup[key] = w
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        radj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for (u, v), w in lookup.items():
            adj[u].append((v, w))
            radj[v].append((u, w))
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._radj = tuple(tuple(sorted(a)) for a in radj)
        self._lookup = lookup
        self.min_weight = min(lookup.values(), default=0)
        self.edge_count = len(lookup)

    def out_edges(self, u: int) -> tuple[tuple[int, int], ...]:
        return self._adj[u]

    def in_edges(self, v: int) -> tuple[tuple[int, int], ...]:
        return self._radj[v]

    def weight(self, u: int, v: int) -> int:
        """Weight of edge (u, v); KeyError if absent."""
        return self._lookup[(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._lookup

    def edges(self) -> Iterable[tuple[int, int, int]]:
        for u in range(self.n):
            for v, w in self._adj[u]:
                yield u, v, w


@dataclass(frozen=True)
class DistanceVector:
    """Distances and canonical parents from a single source."""

    source: int
    dist: tuple[float, ...]
    parent: tuple[int | None, ...]


@dataclass(frozen=True)
class Path:
    """A concrete s-t path: node sequence plus per-hop weights."""

    nodes: tuple[int, ...]
    total_length: int
    edge_weights: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.nodes) - 1

    def edge(self, i: int) -> tuple[int, int]:
        """The i-th edge (0-based) as a (u, v) pair."""
        return self.nodes[i], self.nodes[i + 1]


def _dijkstra(g: Graph, source: int,
              skip_edge: tuple[int, int] | None) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    done = [False] * g.n
    heap: list[tuple[float, int]] = [(0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in g.out_edges(u):
            if (u, v) == skip_edge:
                continue
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def _bellman_ford(g: Graph, source: int,
                  skip_edge: tuple[int, int] | None) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    edges = [(u, v, w) for u, v, w in g.edges() if (u, v) != skip_edge]
    for _ in range(g.n - 1):
        changed = False
        for u, v, w in edges:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                changed = True
        if not changed:
            break
    for u, v, w in edges:
        if dist[u] + w < dist[v]:
            raise NegativeCycleError(
                f"negative cycle reachable from node {source}")
    return dist


def _canonical_parents(g: Graph, source: int, dist: Sequence[float],
                       skip_edge: tuple[int, int] | None) -> list[int | None]:
    """Deterministic shortest-path tree over the tight edges.

    Grown by always attaching the smallest (node, predecessor) pair next, so
    the result depends only on the distance values, not on how they were
    computed.  Tree edges are tight (dist[u] + w == dist[v]), hence acyclic.
    """
    parent: list[int | None] = [None] * g.n
    in_tree = [False] * g.n
    in_tree[source] = True
    heap: list[tuple[int, int]] = []

    def push_from(u: int) -> None:
        du = dist[u]
        for v, w in g.out_edges(u):
            if (u, v) == skip_edge or in_tree[v]:
                continue
            if du + w == dist[v]:
                heapq.heappush(heap, (v, u))

    push_from(source)
    while heap:
        v, u = heapq.heappop(heap)
        if in_tree[v]:
            continue
        in_tree[v] = True
        parent[v] = u
        push_from(v)
    return parent


def sssp(g: Graph, source: int, *,
         skip_edge: tuple[int, int] | None = None) -> DistanceVector:
    """Single-source shortest paths with a canonical parent tree.

    Dijkstra when all weights are nonnegative, Bellman-Ford otherwise.
    ``skip_edge`` removes exactly one directed edge for the run.
    """
    if not (0 <= source < g.n):
        raise IdOutOfRangeError(f"source {source} not in [0, {g.n})")
    if g.min_weight >= 0:
        dist = _dijkstra(g, source, skip_edge)
    else:
        dist = _bellman_ford(g, source, skip_edge)
    parent = _canonical_parents(g, source, dist, skip_edge)
    return DistanceVector(source=source, dist=tuple(dist),
                          parent=tuple(parent))


def shortest_st_path(g: Graph, s: int, t: int) -> Path:
    """The canonical shortest s-t path (deterministic under ties)."""
    dv = sssp(g, s)
    if dv.dist[t] == INF:
        raise UnreachableError(f"no path from {s} to {t}")
    nodes: list[int] = [t]
    while nodes[-1] != s:
        p = dv.parent[nodes[-1]]
        if p is None:
            raise UnreachableError(
                f"no parent chain from {t} back to {s}")
        nodes.append(p)
    nodes.reverse()
    weights = tuple(g.weight(nodes[i], nodes[i + 1])
                    for i in range(len(nodes) - 1))
    return Path(nodes=tuple(nodes), total_length=int(dv.dist[t]),
                edge_weights=weights)


@dataclass(frozen=True)
class PrefixTable:
    """Prefix sums along a path: O(1) distance between any two path positions.

    Positions are 1-based: position i is the i-th node of the path.
    """

    prefix: tuple[int, ...]  # prefix[i] = length of the first i edges

    def d(self, i: int, j: int) -> int:
        """Path distance from position i to position j (i <= j)."""
        if not 1 <= i <= j <= len(self.prefix):
            raise IdOutOfRangeError(
                f"positions ({i}, {j}) outside 1..{len(self.prefix)}")
        return self.prefix[j - 1] - self.prefix[i - 1]

    def prefix_to(self, j: int) -> int:
        """Distance from the path start to position j."""
        return self.prefix[j - 1]

    def suffix_from(self, j: int) -> int:
        """Distance from position j to the path end."""
        return self.prefix[-1] - self.prefix[j - 1]

    @property
    def total(self) -> int:
        return self.prefix[-1]


def prefix_distances(p: Path) -> PrefixTable:
    prefix = [0]
    for w in p.edge_weights:
        prefix.append(prefix[-1] + w)
    return PrefixTable(prefix=tuple(prefix))
