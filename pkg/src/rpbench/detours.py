"""Shared detour machinery: split graphs, candidates, and the successor sweep.

A detour leaving the shortest path at position j and re-entering at position
k (1-based, j < k) yields one candidate replacement length that covers every
path edge between those positions.  All four algorithms reduce to producing
such candidates; a single sorted sweep then assigns each edge its minimum.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IdOutOfRangeError
from .graph import INF, Graph, Path, PrefixTable


@dataclass(frozen=True)
class SplitGraph:
    """The derived graph G' where each path node v becomes v_in and v_out.

    v_in keeps only incoming edges, v_out only outgoing ones, and the path's
    own edges are deleted, so any v_i_out -> v_j_in walk is a detour: it
    touches no other path node.  in_of / out_of map 1-based path positions to
    node ids in ``base``; off_path holds the ids of the carried-over nodes
    (in ascending order of their original ids, per off_map).
    """

    base: Graph
    in_of: dict[int, int]
    out_of: dict[int, int]
    off_path: tuple[int, ...]
    off_map: dict[int, int]  # original node id -> id in base


def build_split_graph(g: Graph, p: Path) -> SplitGraph:
    on_path = {v: i + 1 for i, v in enumerate(p.nodes)}  # node -> position
    path_edges = {(p.nodes[i], p.nodes[i + 1]) for i in range(p.edge_count)}
    off = tuple(sorted(v for v in range(g.n) if v not in on_path))
    off_map = {v: i for i, v in enumerate(off)}
    k = len(p.nodes)
    base_idx = len(off)
    in_of = {i: base_idx + 2 * (i - 1) for i in range(1, k + 1)}
    out_of = {i: base_idx + 2 * (i - 1) + 1 for i in range(1, k + 1)}

    edges = []
    for u, v, w in g.edges():
        if (u, v) in path_edges:
            continue
        src = out_of[on_path[u]] if u in on_path else off_map[u]
        dst = in_of[on_path[v]] if v in on_path else off_map[v]
        edges.append((src, dst, w))
    base = Graph(len(off) + 2 * k, edges, g.weight_bound)
    return SplitGraph(base=base, in_of=in_of, out_of=out_of,
                      off_path=tuple(off_map[v] for v in off),
                      off_map=off_map)


@dataclass(frozen=True)
class DetourCandidate:
    """One candidate: full replacement length d covering path edges j..k-1."""

    j: int
    k: int
    d: int

    def __post_init__(self):
        if not 1 <= self.j < self.k:
            raise IdOutOfRangeError(
                f"candidate positions must satisfy 1 <= j < k, "
                f"got ({self.j}, {self.k})")
        if not isinstance(self.d, int):
            raise TypeError(f"candidate length must be a finite int, "
                            f"got {self.d!r}")


class CandidateList:
    """Append-only global list L with an O(n^2) size budget assertion."""

    def __init__(self, n: int, budget_factor: int = 32):
        self._items: list[DetourCandidate] = []
        self._budget = budget_factor * n * n

    def append(self, c: DetourCandidate) -> None:
        self._items.append(c)
        assert len(self._items) <= self._budget, (
            f"candidate list exceeded budget {self._budget}")

    def extend(self, cs) -> None:
        for c in cs:
            self.append(c)

    def __iter__(self):
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)


@dataclass(frozen=True)
class ReplacementResult:
    """Per-edge replacement distances; dist[i] is for the 0-based edge i."""

    dist: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.dist)


def candidate_from_detour(j: int, k: int, detour_len: int,
                          pt: PrefixTable) -> DetourCandidate:
    """Candidate for a detour of the given length from position j to k."""
    d = pt.prefix_to(j) + detour_len + pt.suffix_from(k)
    return DetourCandidate(j=j, k=k, d=d)


def sweep_assign(l: CandidateList, path_len: int) -> ReplacementResult:
    """Assign each path edge the minimum d over candidates covering it.

    Candidates are processed in nondecreasing d; each assigns every still
    unassigned edge position in [j, k-1] and deletes it.  The successor
    search is a path-compressed next-pointer array.
    """
    out: list[float] = [INF] * (path_len + 1)  # 1-based edge positions
    nxt = list(range(path_len + 1))  # nxt[p] = next unassigned pos >= p

    def find(p: int) -> int:
        root = p
        while nxt[root] != root:
            root = nxt[root]
        while nxt[p] != root:
            nxt[p], p = root, nxt[p]
        return root

    for c in sorted(l, key=lambda c: (c.d, c.j, c.k)):
        p = find(c.j)
        while p <= c.k - 1:
            out[p] = c.d
            nxt[p] = p + 1
            p = find(p + 1)
    return ReplacementResult(dist=tuple(out[1:path_len]))


def direct_assign(l: CandidateList, path_len: int) -> ReplacementResult:
    """Reference implementation: direct min over covering candidates."""
    out: list[float] = [INF] * (path_len + 1)
    for c in l:
        for p in range(c.j, min(c.k, path_len)):
            if c.d < out[p]:
                out[p] = c.d
    return ReplacementResult(dist=tuple(out[1:path_len]))
