"""The oracle and four replacement-paths algorithms.

All four reduce to collecting detour candidates into a shared list and
resolving it with the successor sweep; they differ in how detour distances
are obtained (full APSP, per-piece restricted graphs, capped distances plus
a sampled hitting set, or recursion on circumventing-paths instances).
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .detours import (
    CandidateList,
    DetourCandidate,
    ReplacementResult,
    SplitGraph,
    build_split_graph,
    candidate_from_detour,
    sweep_assign,
)
from .errors import MismatchError, NegativeCycleError
from .graph import (
    INF,
    Graph,
    Path,
    PrefixTable,
    prefix_distances,
    shortest_st_path,
    sssp,
)
from .minplus import (
    MinPlusMatrix,
    bounded_distance_matrix,
    cap_entries,
    minplus_closure,
    weight_matrix,
)

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class SamplingParams:
    """Knobs for the randomized algorithms.

    Z is the recursive algorithm's bucket/branching count; None means
    max(2, ceil(log2 n)^2) chosen per input graph.
    """

    epsilon: float = 0.5
    C: float = 3.0
    rng_seed: int = 0
    Z: int | None = None

    def __post_init__(self):
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError(f"epsilon must be in (0, 1), got {self.epsilon}")
        if self.C <= 0:
            raise ValueError(f"C must be positive, got {self.C}")
        if self.Z is not None and self.Z < 2:
            raise ValueError(f"Z must be at least 2, got {self.Z}")


def derive_seed(seed: int, *branch: int) -> int:
    """Sub-seed for a named branch; fixed arithmetic so runs are replayable."""
    x = (seed * 0x9E3779B97F4A7C15 + 0x632BE59BD9B4E019) & _MASK64
    for b in branch:
        x = (x ^ ((b + 1) * 0xBF58476D1CE4E5B9)) & _MASK64
        x = ((x ^ (x >> 31)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 29)


def _resolve_z(params: SamplingParams, n: int) -> int:
    if params.Z is not None:
        return params.Z
    return max(2, math.ceil(math.log2(max(n, 2))) ** 2)


def _sample_nodes(pool, size: int, seed: int) -> tuple[int, ...]:
    pool = sorted(pool)
    if size >= len(pool):
        return tuple(pool)
    rng = random.Random(seed)
    return tuple(sorted(rng.sample(pool, size)))


def sample_hitting_set(pool, n: int, params: SamplingParams,
                       N: int) -> tuple[int, ...]:
    """Uniform sample of ceil((C+3) * n^epsilon * ln N) nodes from pool.

    The whole pool is returned when it is smaller than the requested size,
    making the hitting property deterministic in that case.
    """
    if N < n:
        raise ValueError(f"N ({N}) must be at least n ({n})")
    pool = tuple(pool)
    if not pool:
        return ()
    size = math.ceil((params.C + 3) * (n ** params.epsilon) * math.log(N))
    return _sample_nodes(pool, max(size, 1), params.rng_seed)


def _new_list(g: Graph, candidate_sink: CandidateList | None) -> CandidateList:
    return CandidateList(g.n) if candidate_sink is None else candidate_sink


def _walk_parents(parent, s: int, t: int) -> tuple[int, ...]:
    nodes = [t]
    while nodes[-1] != s:
        nodes.append(parent[nodes[-1]])
    nodes.reverse()
    return tuple(nodes)


def oracle_rp(g: Graph, s: int, t: int, *, return_paths: bool = False):
    """Ground truth: delete each path edge in turn and re-solve from scratch."""
    p = shortest_st_path(g, s, t)
    dist: list[float] = []
    paths: list[tuple[int, ...] | None] = []
    for i in range(p.edge_count):
        dv = sssp(g, s, skip_edge=p.edge(i))
        d = dv.dist[t]
        dist.append(INF if d == INF else int(d))
        if return_paths:
            paths.append(_walk_parents(dv.parent, s, t) if d < INF else None)
    result = ReplacementResult(dist=tuple(dist))
    if return_paths:
        return result, tuple(paths)
    return result


def _emit_split_pairs(D: np.ndarray, sg: SplitGraph, pt: PrefixTable,
                      path_len: int, l: CandidateList) -> None:
    """One candidate per path-position pair with a finite out->in distance."""
    for i in range(1, path_len):
        row = D[sg.out_of[i]]
        for j in range(i + 1, path_len + 1):
            v = row[sg.in_of[j]]
            if v < INF:
                l.append(candidate_from_detour(i, j, int(v), pt))


def alg1_apsp_rp(g: Graph, s: int, t: int, *,
                 candidate_sink: CandidateList | None = None
                 ) -> ReplacementResult:
    """Replacement paths via one all-pairs computation on the split graph."""
    p = shortest_st_path(g, s, t)
    k = len(p.nodes)
    l = _new_list(g, candidate_sink)
    if p.edge_count == 0:
        return ReplacementResult(dist=())
    pt = prefix_distances(p)
    sg = build_split_graph(g, p)
    dm = minplus_closure(weight_matrix(sg.base))
    _emit_split_pairs(dm.array, sg, pt, k, l)
    return sweep_assign(l, k)


# --- divide and conquer ----------------------------------------------------

@dataclass(frozen=True)
class RestrictedGraph:
    """The per-piece graph: flank nodes keep single copies riding the path,
    interior piece nodes are split, and the piece's own edges are gone.

    node_of maps flank positions (1..lo and hi..|P|), in_of / out_of map the
    interior positions lo+1..hi-1.
    """

    base: Graph
    node_of: dict[int, int]
    in_of: dict[int, int]
    out_of: dict[int, int]
    off_map: dict[int, int]
    lo: int
    hi: int

    @property
    def s_node(self) -> int:
        return self.node_of[1]

    @property
    def t_node(self) -> int:
        return self.node_of[max(self.node_of)]


def build_restricted_graph(g: Graph, p: Path, lo: int, hi: int
                           ) -> RestrictedGraph:
    k = len(p.nodes)
    if not 1 <= lo < hi <= k:
        raise ValueError(f"piece bounds ({lo}, {hi}) outside 1..{k}")
    on_path = {v: i + 1 for i, v in enumerate(p.nodes)}
    off = sorted(v for v in range(g.n) if v not in on_path)
    off_map = {v: i for i, v in enumerate(off)}
    nxt = len(off)
    node_of: dict[int, int] = {}
    in_of: dict[int, int] = {}
    out_of: dict[int, int] = {}
    for pos in range(1, lo + 1):
        node_of[pos] = nxt
        nxt += 1
    for pos in range(hi, k + 1):
        node_of[pos] = nxt
        nxt += 1
    for pos in range(lo + 1, hi):
        in_of[pos] = nxt
        out_of[pos] = nxt + 1
        nxt += 2

    piece_edges = {(p.nodes[i - 1], p.nodes[i]) for i in range(lo, hi)}
    path_edges = {(p.nodes[i], p.nodes[i + 1]) for i in range(k - 1)}
    edges = []
    for u, v, w in g.edges():
        if (u, v) in piece_edges:
            continue
        if (u, v) in path_edges:
            # flank segment of P, rides between single copies
            edges.append((node_of[on_path[u]], node_of[on_path[v]], w))
            continue
        pu = on_path.get(u)
        pv = on_path.get(v)
        if pu is None:
            src = off_map[u]
        elif pu <= lo:
            src = node_of[pu]  # left flank keeps its outgoing edges
        elif pu >= hi:
            continue  # right flank loses non-path outgoing edges
        else:
            src = out_of[pu]
        if pv is None:
            dst = off_map[v]
        elif pv <= lo:
            continue  # left flank loses non-path incoming edges
        elif pv >= hi:
            dst = node_of[pv]
        else:
            dst = in_of[pv]
        edges.append((src, dst, w))
    base = Graph(nxt, edges, g.weight_bound)
    return RestrictedGraph(base=base, node_of=node_of, in_of=in_of,
                           out_of=out_of, off_map=off_map, lo=lo, hi=hi)


def _piece_bounds(edge_count: int, q: int):
    """q consecutive pieces over edges 0..edge_count-1, shared endpoints."""
    for r in range(q):
        start = (r * edge_count) // q
        end = ((r + 1) * edge_count) // q
        if end > start:
            yield start + 1, end + 1  # positions (lo, hi)


def alg2_dc_rp(g: Graph, s: int, t: int, bucket_size: int, *,
               candidate_sink: CandidateList | None = None
               ) -> ReplacementResult:
    """Divide and conquer: per-piece restricted graphs, four candidate shapes."""
    if bucket_size < 1:
        raise ValueError(f"bucket_size must be at least 1, got {bucket_size}")
    p = shortest_st_path(g, s, t)
    k = len(p.nodes)
    l = _new_list(g, candidate_sink)
    if p.edge_count == 0:
        return ReplacementResult(dist=())
    pt = prefix_distances(p)
    q = max(1, math.ceil(p.edge_count / bucket_size))
    for lo, hi in _piece_bounds(p.edge_count, q):
        rg = build_restricted_graph(g, p, lo, hi)
        interior = range(lo + 1, hi)
        from_s = sssp(rg.base, rg.s_node).dist
        t_id = rg.t_node
        v = from_s[t_id]
        if v < INF:
            # rides both flanks, so already a full s-t replacement length
            l.append(DetourCandidate(lo, hi, int(v)))
        for kp in interior:
            v = from_s[rg.in_of[kp]]
            if v < INF:
                l.append(DetourCandidate(lo, kp, int(v) + pt.suffix_from(kp)))
        for j in interior:
            from_j = sssp(rg.base, rg.out_of[j]).dist
            v = from_j[t_id]
            if v < INF:
                l.append(DetourCandidate(j, hi, pt.prefix_to(j) + int(v)))
            for kp in interior:
                if kp <= j:
                    continue
                v = from_j[rg.in_of[kp]]
                if v < INF:
                    l.append(candidate_from_detour(j, kp, int(v), pt))
    return sweep_assign(l, k)


# --- flank contraction ------------------------------------------------------

@dataclass(frozen=True)
class FlankChain:
    """A flank of the path contracted into a chain of block nodes.

    chain_nodes are chain-local indices, 0 nearest the enclosed piece; the
    anchor of node i is the block boundary its entries ride to (right side)
    or from (left side).  chain_weights[i] joins nodes i and i+1: on the
    right side the edge runs i -> i+1 (toward the path's end), on the left
    side i+1 -> i (from the path's start toward the piece).  entry_weights
    maps (sample row, chain index) to the contracted edge weight: sample ->
    chain on the right side, chain -> sample on the left.
    """

    chain_nodes: tuple[int, ...]
    chain_weights: tuple[int, ...]
    entry_weights: dict[tuple[int, int], int]
    anchors: tuple[int, ...]


def contract_flank(flank_positions, c: int, w: MinPlusMatrix,
                   pt: PrefixTable, side: str) -> FlankChain:
    """Contract a flank into ceil(t/c) chain nodes preserving ride distances.

    w has one row per sampled node and one column per flank position (in
    ascending position order): w[r][f] is the capped distance sample ->
    flank re-entry (right side) or flank exit -> sample (left side).
    """
    if c < 1:
        raise ValueError(f"block size must be at least 1, got {c}")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    fp = tuple(flank_positions)
    t = len(fp)
    if t == 0:
        return FlankChain((), (), {}, ())
    if w.cols != t:
        raise ValueError(f"w has {w.cols} columns for {t} flank positions")
    arr = w.array
    m = math.ceil(t / c)
    anchors: list[int] = []
    entry: dict[tuple[int, int], int] = {}
    if side == "right":
        for i in range(m):
            block = range(i * c, min((i + 1) * c, t))
            anchor = fp[block[-1]]
            anchors.append(anchor)
            for r in range(w.rows):
                best = INF
                for f in block:
                    v = arr[r, f]
                    if v < INF:
                        best = min(best, v + pt.d(fp[f], anchor))
                if best < INF:
                    entry[(r, i)] = int(best)
        chain_w = tuple(pt.d(anchors[i], anchors[i + 1]) for i in range(m - 1))
    else:
        for i in range(m):
            hi_idx = t - i * c
            block = range(max(0, hi_idx - c), hi_idx)
            anchor = fp[block[0]]
            anchors.append(anchor)
            for r in range(w.rows):
                best = INF
                for f in block:
                    v = arr[r, f]
                    if v < INF:
                        best = min(best, pt.d(anchor, fp[f]) + v)
                if best < INF:
                    entry[(r, i)] = int(best)
        chain_w = tuple(pt.d(anchors[i + 1], anchors[i]) for i in range(m - 1))
    return FlankChain(chain_nodes=tuple(range(m)), chain_weights=chain_w,
                      entry_weights=entry, anchors=tuple(anchors))


def _install_chain(W: np.ndarray, base: int, fc: FlankChain,
                   side: str) -> None:
    """Write a contracted chain into the piece matrix at rows/cols base.."""
    for i, wgt in enumerate(fc.chain_weights):
        if side == "right":
            W[base + i, base + i + 1] = wgt
        else:
            W[base + i + 1, base + i] = wgt
    for (r, i), v in fc.entry_weights.items():
        if side == "right":
            W[r, base + i] = v
        else:
            W[base + i, r] = v


# --- sampling algorithm -----------------------------------------------------

def _alg3_piece(sg: SplitGraph, D: np.ndarray, B, pt: PrefixTable,
                lo: int, hi: int, c: int, k: int, l: CandidateList) -> None:
    nb = len(B)
    piece = list(range(lo, hi + 1))
    m = len(piece)
    out_ids = [sg.out_of[j] for j in piece]
    in_ids = [sg.in_of[j] for j in piece]
    left_pos = tuple(range(1, lo))
    right_pos = tuple(range(hi + 1, k + 1))
    left = right = None
    if left_pos:
        w = np.array([[D[sg.out_of[p], b] for p in left_pos] for b in B]
                     ).reshape(nb, len(left_pos))
        left = contract_flank(left_pos, c, MinPlusMatrix(w), pt, "left")
    if right_pos:
        w = np.array([[D[b, sg.in_of[p]] for p in right_pos] for b in B]
                     ).reshape(nb, len(right_pos))
        right = contract_flank(right_pos, c, MinPlusMatrix(w), pt, "right")

    base_out = nb
    base_in = nb + m
    base_l = nb + 2 * m
    n_l = len(left.chain_nodes) if left else 0
    base_r = base_l + n_l
    n_r = len(right.chain_nodes) if right else 0
    size = base_r + n_r
    W = np.full((size, size), INF)
    if nb:
        W[:nb, :nb] = D[np.ix_(B, B)]
        W[base_out:base_in, :nb] = D[np.ix_(out_ids, B)]
        W[:nb, base_in:base_l] = D[np.ix_(B, in_ids)]
    W[base_out:base_in, base_in:base_l] = D[np.ix_(out_ids, in_ids)]
    if left:
        _install_chain(W, base_l, left, "left")
    if right:
        _install_chain(W, base_r, right, "right")
    dm = minplus_closure(MinPlusMatrix(W)).array

    sigma = base_l + n_l - 1 if left else None
    tau = base_r + n_r - 1 if right else None
    for ji, j in enumerate(piece):
        row = dm[base_out + ji]
        for ki, kp in enumerate(piece):
            if kp <= j:
                continue
            v = row[base_in + ki]
            if v < INF:
                l.append(candidate_from_detour(j, kp, int(v), pt))
        if tau is not None and j < hi:
            v = row[tau]  # ride to the path's end is folded into the chain
            if v < INF:
                l.append(DetourCandidate(j, hi, pt.prefix_to(j) + int(v)))
    if sigma is not None:
        row = dm[sigma]  # ride from the path's start is folded in
        for ki, kp in enumerate(piece):
            if kp > lo:
                v = row[base_in + ki]
                if v < INF:
                    l.append(DetourCandidate(lo, kp, int(v) + pt.suffix_from(kp)))
        if tau is not None:
            v = row[tau]
            if v < INF:
                l.append(DetourCandidate(lo, hi, int(v)))


def alg3_sampling_rp(g: Graph, s: int, t: int,
                     params: SamplingParams | None = None, *,
                     candidate_sink: CandidateList | None = None,
                     verify_with_oracle: bool = False) -> ReplacementResult:
    """Sampling algorithm: capped distances for short detours, a sampled
    hitting set plus per-piece contracted instances for long ones."""
    params = params or SamplingParams()
    p = shortest_st_path(g, s, t)
    k = len(p.nodes)
    l = _new_list(g, candidate_sink)
    if p.edge_count == 0:
        return ReplacementResult(dist=())
    pt = prefix_distances(p)
    sg = build_split_graph(g, p)
    threshold = 2 * g.weight_bound * math.ceil(g.n ** (1 - params.epsilon))
    D = bounded_distance_matrix(sg.base, threshold).array
    _emit_split_pairs(D, sg, pt, k, l)
    B = sample_hitting_set(sg.off_path, g.n, params, N=max(g.n, 2))
    if B:
        q = max(1, min(math.ceil(g.n / len(B)), p.edge_count))
        c = max(1, math.ceil(g.n ** (1 - params.epsilon)))
        for lo, hi in _piece_bounds(p.edge_count, q):
            _alg3_piece(sg, D, B, pt, lo, hi, c, k, l)
    result = sweep_assign(l, k)
    if verify_with_oracle:
        _check_against_oracle(g, s, t, result, "sampling", params.rng_seed)
    return result


# --- recursive algorithm ----------------------------------------------------

@dataclass(frozen=True)
class CircumventInstance:
    """One circumventing-paths subproblem.

    tuples[i] = (in-copy, out-copy) node ids in graph for the i-th covered
    path position; positions are the global 1-based path positions (always a
    consecutive run); ds/dt are the path distances from s / to t per tuple.
    """

    graph: Graph
    tuples: tuple[tuple[int, int], ...]
    positions: tuple[int, ...]
    ds: tuple[int, ...]
    dt: tuple[int, ...]
    weight_bound: int
    level: int

    def __post_init__(self):
        T = len(self.tuples)
        assert T == len(self.positions) == len(self.ds) == len(self.dt), \
            "tuple metadata lengths disagree"
        assert all(b == a + 1 for a, b in zip(self.positions,
                                              self.positions[1:])), \
            "covered positions must be consecutive"
        ins = {i for i, _ in self.tuples}
        outs = {o for _, o in self.tuples}
        for u, v, w in self.graph.edges():
            assert u not in ins, "in-copies must have no outgoing edges"
            assert v not in outs, "out-copies must have no incoming edges"
            # lower side is only bounded by the graph's own storage bound:
            # one-sided capping admits genuine distances below -N
            assert w <= self.weight_bound, \
                f"edge weight {w} above instance bound {self.weight_bound}"


def _emit_instance_pairs(D: np.ndarray, inst: CircumventInstance,
                         l: CandidateList) -> None:
    T = len(inst.tuples)
    for a in range(T):
        row = D[inst.tuples[a][1]]
        for b in range(a + 1, T):
            v = row[inst.tuples[b][0]]
            if v < INF:
                l.append(DetourCandidate(inst.positions[a], inst.positions[b],
                                         inst.ds[a] + int(v) + inst.dt[b]))


def recursive_circumvent(inst: CircumventInstance, params: SamplingParams,
                         l: CandidateList, *, root_n: int | None = None,
                         rng_seed: int | None = None) -> None:
    """Emit candidates for the instance: exact closure at base size, else
    capped closure plus sampled-subpath recursion."""
    root_n = inst.graph.n if root_n is None else root_n
    rng_seed = params.rng_seed if rng_seed is None else rng_seed
    Z = _resolve_z(params, root_n)
    T = len(inst.tuples)
    base_limit = Z * max(1, math.ceil(math.log2(max(root_n, 2))))
    if inst.graph.n <= base_limit or T <= 2:
        dm = minplus_closure(weight_matrix(inst.graph))
        _emit_instance_pairs(dm.array, inst, l)
        return
    dcap = cap_entries(minplus_closure(weight_matrix(inst.graph)),
                       inst.weight_bound * Z)
    _emit_instance_pairs(dcap.array, inst, l)
    copies = {x for tup in inst.tuples for x in tup}
    pool = sorted(set(range(inst.graph.n)) - copies)
    size = math.ceil(inst.graph.n * math.ceil(math.log(max(root_n, 2))) / Z)
    B = _sample_nodes(pool, size,
                      derive_seed(rng_seed, inst.level, inst.positions[0]))
    process_subpath(inst, B, params, l, root_n=root_n, rng_seed=rng_seed,
                    dcap=dcap)


def _bf_from(W: np.ndarray, src: int) -> np.ndarray:
    n = W.shape[0]
    dist = np.full(n, INF)
    dist[src] = 0.0
    for _ in range(n + 1):
        nd = np.minimum(dist, (dist[:, None] + W).min(axis=0))
        if np.array_equal(nd, dist):
            return dist
        dist = nd
    raise NegativeCycleError("negative cycle in piece graph")


def _bf_to(W: np.ndarray, dst: int) -> np.ndarray:
    n = W.shape[0]
    dist = np.full(n, INF)
    dist[dst] = 0.0
    for _ in range(n + 1):
        nd = np.minimum(dist, (W + dist[None, :]).min(axis=1))
        if np.array_equal(nd, dist):
            return dist
        dist = nd
    raise NegativeCycleError("negative cycle in piece graph")


def process_subpath(inst: CircumventInstance, B, params: SamplingParams,
                    l: CandidateList, *, root_n: int | None = None,
                    rng_seed: int | None = None,
                    dcap: MinPlusMatrix | None = None,
                    bucket_count: int | None = None) -> None:
    """Bucket the instance's tuples, emit per-bucket circumvention candidates
    through contracted flanks, then recurse on each stripped bucket.

    bucket_count overrides the usual min(Z, T-1) and exists for tests of the
    degenerate single-bucket split.
    """
    root_n = inst.graph.n if root_n is None else root_n
    rng_seed = params.rng_seed if rng_seed is None else rng_seed
    Z = _resolve_z(params, root_n)
    T = len(inst.tuples)
    copies = {x for tup in inst.tuples for x in tup}
    assert not (set(B) & copies), "sample must avoid tuple copies"
    if T < 2:
        return
    if dcap is None:
        dcap = cap_entries(minplus_closure(weight_matrix(inst.graph)),
                           inst.weight_bound * Z)
    D = dcap.array
    q = min(Z, T - 1) if bucket_count is None else max(1, bucket_count)
    c = max(1, Z)
    pt_local = PrefixTable(prefix=tuple(d - inst.ds[0] for d in inst.ds))
    B = tuple(B)
    nb = len(B)
    appended = 0
    children: list[CircumventInstance] = []
    for start1, end1 in _piece_bounds(T - 1, q):
        a, b = start1 - 1, end1 - 1  # 0-based tuple indices, inclusive
        m = b - a + 1
        out_ids = [inst.tuples[x][1] for x in range(a, b + 1)]
        in_ids = [inst.tuples[x][0] for x in range(a, b + 1)]
        left = right = None
        if a > 0:
            left_pos = tuple(range(1, a + 1))  # local positions of tuples 0..a-1
            w = np.array([[D[inst.tuples[x][1], bn] for x in range(a)]
                          for bn in B]).reshape(nb, a)
            left = contract_flank(left_pos, c, MinPlusMatrix(w), pt_local,
                                  "left")
        if b < T - 1:
            right_pos = tuple(range(b + 2, T + 1))
            w = np.array([[D[bn, inst.tuples[x][0]] for x in range(b + 1, T)]
                          for bn in B]).reshape(nb, T - 1 - b)
            right = contract_flank(right_pos, c, MinPlusMatrix(w), pt_local,
                                   "right")
        base_out = nb
        base_in = nb + m
        base_l = nb + 2 * m
        n_l = len(left.chain_nodes) if left else 0
        base_r = base_l + n_l
        n_r = len(right.chain_nodes) if right else 0
        size = base_r + n_r
        W = np.full((size, size), INF)
        if nb:
            W[:nb, :nb] = D[np.ix_(B, B)]
            np.fill_diagonal(W[:nb, :nb], INF)
            W[base_out:base_in, :nb] = D[np.ix_(out_ids, B)]
            W[:nb, base_in:base_l] = D[np.ix_(B, in_ids)]
        W[base_out:base_in, base_in:base_l] = D[np.ix_(out_ids, in_ids)]
        if left:
            _install_chain(W, base_l, left, "left")
        if right:
            _install_chain(W, base_r, right, "right")

        if left:
            sigma, ds_anchor = base_l + n_l - 1, inst.ds[0]
        else:
            sigma, ds_anchor = base_out + 0, inst.ds[a]
        if right:
            tau, dt_anchor = base_r + n_r - 1, inst.dt[T - 1]
        else:
            tau, dt_anchor = base_in + m - 1, inst.dt[b]
        from_sigma = _bf_from(W, sigma)
        to_tau = _bf_to(W, tau)

        v = from_sigma[tau]
        if v < INF:
            l.append(DetourCandidate(inst.positions[a], inst.positions[b],
                                     ds_anchor + int(v) + dt_anchor))
            appended += 1
        for y in range(a + 1, b + 1):
            v = from_sigma[base_in + (y - a)]
            if v < INF:
                l.append(DetourCandidate(inst.positions[a], inst.positions[y],
                                         ds_anchor + int(v) + inst.dt[y]))
                appended += 1
        for x in range(a, b):
            v = to_tau[base_out + (x - a)]
            if v < INF:
                l.append(DetourCandidate(inst.positions[x], inst.positions[b],
                                         inst.ds[x] + int(v) + dt_anchor))
                appended += 1
        children.append(_child_instance(inst, D, B, a, b, Z))
    assert appended <= 16 * T, \
        f"per-call candidate budget exceeded: {appended} > {16 * T}"
    for idx, child in enumerate(children):
        recursive_circumvent(child, params, l, root_n=root_n,
                             rng_seed=derive_seed(rng_seed, inst.level + 1,
                                                  idx))


def _child_instance(inst: CircumventInstance, D: np.ndarray, B,
                    a: int, b: int, Z: int) -> CircumventInstance:
    """Strip flanks: the bucket's tuples plus B under capped-distance edges."""
    m = b - a + 1
    nb = len(B)
    cmap = {bn: i for i, bn in enumerate(B)}
    tuples = []
    for idx, x in enumerate(range(a, b + 1)):
        in_id, out_id = nb + 2 * idx, nb + 2 * idx + 1
        tuples.append((in_id, out_id))
        cmap[inst.tuples[x][0]] = in_id
        cmap[inst.tuples[x][1]] = out_id
    srcs = list(B) + [inst.tuples[x][1] for x in range(a, b + 1)]
    dsts = list(B) + [inst.tuples[x][0] for x in range(a, b + 1)]
    edges = []
    for u in srcs:
        row = D[u]
        for v in dsts:
            if u == v:
                continue
            val = row[v]
            if val < INF:
                edges.append((cmap[u], cmap[v], int(val)))
    bound = inst.weight_bound * Z
    storage = max(bound, max((abs(w) for _, _, w in edges), default=1), 1)
    graph = Graph(nb + 2 * m, edges, storage)
    return CircumventInstance(
        graph=graph, tuples=tuple(tuples),
        positions=inst.positions[a:b + 1], ds=inst.ds[a:b + 1],
        dt=inst.dt[a:b + 1], weight_bound=bound, level=inst.level + 1)


def alg4_recursive_rp(g: Graph, s: int, t: int,
                      params: SamplingParams | None = None, *,
                      candidate_sink: CandidateList | None = None,
                      verify_with_oracle: bool = False) -> ReplacementResult:
    """Recursive circumventing-paths algorithm over the split graph."""
    params = params or SamplingParams()
    p = shortest_st_path(g, s, t)
    k = len(p.nodes)
    l = _new_list(g, candidate_sink)
    if p.edge_count == 0:
        result = ReplacementResult(dist=())
    else:
        pt = prefix_distances(p)
        sg = build_split_graph(g, p)
        inst = CircumventInstance(
            graph=sg.base,
            tuples=tuple((sg.in_of[i], sg.out_of[i]) for i in range(1, k + 1)),
            positions=tuple(range(1, k + 1)),
            ds=tuple(pt.prefix_to(i) for i in range(1, k + 1)),
            dt=tuple(pt.suffix_from(i) for i in range(1, k + 1)),
            weight_bound=g.weight_bound, level=0)
        recursive_circumvent(inst, params, l, root_n=g.n,
                             rng_seed=params.rng_seed)
        result = sweep_assign(l, k)
    if verify_with_oracle:
        _check_against_oracle(g, s, t, result, "recursive", params.rng_seed)
    return result


def _check_against_oracle(g: Graph, s: int, t: int, result: ReplacementResult,
                          algorithm: str, seed: int) -> None:
    expected = oracle_rp(g, s, t)
    if expected.dist != result.dist:
        diff = [f"edge {i}: oracle={e} got={r}"
                for i, (e, r) in enumerate(zip(expected.dist, result.dist))
                if e != r]
        raise MismatchError(
            f"{algorithm} disagrees with oracle (seed {seed}): "
            + "; ".join(diff),
            algorithm=algorithm, seed=seed)
