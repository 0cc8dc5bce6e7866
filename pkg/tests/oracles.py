"""Reference implementations the tests trust.

Deliberately naive (textbook Bellman-Ford, exhaustive DFS over simple
paths), written against raw n/edge-list inputs so nothing here shares code
with the package under test.
"""

INF = float("inf")


def bf_sssp(n, edges, src):
    dist = [INF] * n
    dist[src] = 0
    for _ in range(n - 1):
        changed = False
        for u, v, w in edges:
            if dist[u] < INF and dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                changed = True
        if not changed:
            break
    for u, v, w in edges:
        if dist[u] < INF and dist[u] + w < dist[v]:
            raise ValueError("negative cycle reachable from source")
    return dist


def bf_all_pairs(n, edges):
    return [bf_sssp(n, edges, s) for s in range(n)]


def has_negative_cycle(n, edges):
    dist = [0] * n  # virtual super-source
    for _ in range(n - 1):
        changed = False
        for u, v, w in edges:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                changed = True
        if not changed:
            return False
    return any(dist[u] + w < dist[v] for u, v, w in edges)


def deletion_rp(n, edges, s, t, path_nodes):
    """Replacement distances by deleting each path edge and re-solving."""
    out = []
    for a, b in zip(path_nodes, path_nodes[1:]):
        kept = [e for e in edges if (e[0], e[1]) != (a, b)]
        out.append(bf_sssp(n, kept, s)[t])
    return out


def min_detour(n, edges, path_nodes, j, k):
    """Shortest simple path v_j -> v_k touching no other node of the path
    and using none of the path's own edges.

    Positions j, k are 1-based; exhaustive DFS, so keep n small.  Banning
    path edges only matters for adjacent positions, where the path edge
    itself would otherwise pose as a one-hop detour.
    """
    src, dst = path_nodes[j - 1], path_nodes[k - 1]
    banned = set(path_nodes) - {src, dst}
    path_pairs = set(zip(path_nodes, path_nodes[1:]))
    adj = {}
    for u, v, w in edges:
        if (u, v) in path_pairs:
            continue
        adj.setdefault(u, []).append((v, w))
    best = INF

    def go(u, seen, acc):
        nonlocal best
        if u == dst:
            best = min(best, acc)
            return
        for v, w in adj.get(u, ()):
            if v in banned or v in seen or v == src:
                continue
            seen.add(v)
            go(v, seen, acc + w)
            seen.discard(v)

    go(src, set(), 0)
    return best


def detour_formula_rp(n, edges, path_nodes):
    """Per-edge replacement distances via the single-detour decomposition:
    min over j <= i < k of prefix(j) + detour(j, k) + suffix(k)."""
    wmap = {}
    for u, v, w in edges:
        wmap[(u, v)] = min(w, wmap.get((u, v), INF))
    k = len(path_nodes)
    prefix = [0]
    for a, b in zip(path_nodes, path_nodes[1:]):
        prefix.append(prefix[-1] + wmap[(a, b)])
    total = prefix[-1]
    detour = {}
    for j in range(1, k + 1):
        for kk in range(j + 1, k + 1):
            detour[(j, kk)] = min_detour(n, edges, path_nodes, j, kk)
    out = []
    for e in range(1, k):  # edge between positions e and e+1
        best = INF
        for j in range(1, e + 1):
            for kk in range(e + 1, k + 1):
                d = detour[(j, kk)]
                if d < INF:
                    best = min(best, prefix[j - 1] + d + total - prefix[kk - 1])
        out.append(best)
    return out


def naive_minplus(a, b):
    """Min-plus product on lists of lists (entries may be INF)."""
    rows, inner, cols = len(a), len(b), len(b[0])
    assert all(len(r) == inner for r in a)
    out = [[INF] * cols for _ in range(rows)]
    for i in range(rows):
        for j in range(cols):
            best = INF
            for x in range(inner):
                if a[i][x] < INF and b[x][j] < INF:
                    best = min(best, a[i][x] + b[x][j])
            out[i][j] = best
    return out
