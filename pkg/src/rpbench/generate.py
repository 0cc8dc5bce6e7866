"""Random instance generator with a planted s-t backbone."""
from __future__ import annotations

import random

from .errors import GenerationExhaustedError
from .graph import Graph

_MAX_ATTEMPTS = 50


def _has_negative_cycle(n: int, edges) -> bool:
    # Bellman-Ford from a virtual super-source (all nodes start at 0)
    dist = [0] * n
    for _ in range(n - 1):
        changed = False
        for u, v, w in edges:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                changed = True
        if not changed:
            return False
    return any(dist[u] + w < dist[v] for u, v, w in edges)


def generate_graph(n: int, edge_probability: float, M: int,
                   mode: str = "nonnegative", seed: int = 0
                   ) -> tuple[Graph, int, int]:
    """Random digraph with a planted 0 -> n-1 path through a shuffled node
    order, plus each remaining ordered pair independently with the given
    probability.

    Mixed mode shifts nonnegative base weights by a random per-node
    potential, so every cycle sum stays nonnegative while edges in
    {-floor(M/2)..M} appear (no negative edges when M = 1).  A Bellman-Ford
    rejection loop backs this up; naive uniform draws from {-M..M} would be
    rejected essentially forever beyond a handful of nodes.  Results are a
    pure function of the arguments.
    """
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got {n}")
    if not 0.0 < edge_probability <= 1.0:
        raise ValueError(f"edge probability must be in (0, 1], got "
                         f"{edge_probability}")
    if M < 1:
        raise ValueError(f"weight bound must be at least 1, got {M}")
    if mode not in ("nonnegative", "mixed"):
        raise ValueError(f"mode must be 'nonnegative' or 'mixed', got {mode!r}")
    rng = random.Random(seed)
    for _ in range(_MAX_ATTEMPTS):
        if mode == "mixed":
            half = M // 2
            phi = [rng.randint(0, half) for _ in range(n)]
            draw = lambda u, v: rng.randint(0, M - half) + phi[u] - phi[v]
        else:
            draw = lambda u, v: rng.randint(0, M)
        middle = list(range(1, n - 1))
        rng.shuffle(middle)
        backbone = [0] + middle + [n - 1]
        weights: dict[tuple[int, int], int] = {}
        for a, b in zip(backbone, backbone[1:]):
            weights[(a, b)] = draw(a, b)
        for u in range(n):
            for v in range(n):
                if u == v or (u, v) in weights:
                    continue
                if rng.random() < edge_probability:
                    weights[(u, v)] = draw(u, v)
        edges = [(u, v, w) for (u, v), w in sorted(weights.items())]
        if mode == "mixed" and _has_negative_cycle(n, edges):
            continue
        return Graph(n, edges, M), 0, n - 1
    raise GenerationExhaustedError(
        f"no negative-cycle-free graph found in {_MAX_ATTEMPTS} attempts "
        f"(n={n}, p={edge_probability}, M={M}, seed={seed})")
