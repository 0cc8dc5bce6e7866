"""Session fixtures: the shared random-instance corpus and cached runs.

The corpus sweeps density, weight bound and sign mode over a ladder of sizes;
building it and the reference answers takes about a second, the cached
recursive runs half a minute, so everything heavy is session scoped.
"""

from dataclasses import dataclass

import pytest

from rpbench import (
    CandidateList,
    Graph,
    ReplacementResult,
    SamplingParams,
    alg4_recursive_rp,
    generate_graph,
    oracle_rp,
)

N_VALUES = list(range(5, 61))
PROBS = (0.1, 0.3, 0.7)
BOUNDS = (1, 4, 10)
MODES = ("nonnegative", "mixed")
REPS = 28

RECURSIVE_Z = (2, 4, 8)
RECURSIVE_SEEDS = (0, 1, 2)


@dataclass(frozen=True)
class CorpusInstance:
    idx: int
    n: int
    p: float
    M: int
    mode: str
    seed: int
    g: Graph
    s: int
    t: int


def _build_corpus() -> list[CorpusInstance]:
    out = []
    idx = 0
    for p in PROBS:
        for M in BOUNDS:
            for mode in MODES:
                for _ in range(REPS):
                    n = N_VALUES[(idx * 5) % len(N_VALUES)]
                    seed = 1000 + idx
                    g, s, t = generate_graph(n, p, M, mode, seed=seed)
                    out.append(CorpusInstance(idx, n, p, M, mode, seed,
                                              g, s, t))
                    idx += 1
    return out


@pytest.fixture(scope="session")
def corpus() -> list[CorpusInstance]:
    return _build_corpus()


@pytest.fixture(scope="session")
def corpus_oracle(corpus) -> dict[int, ReplacementResult]:
    return {inst.idx: oracle_rp(inst.g, inst.s, inst.t) for inst in corpus}


@pytest.fixture(scope="session")
def recursive_runs(corpus) -> dict[tuple[int, int, int],
                                   tuple[ReplacementResult, int]]:
    """alg4 over the whole corpus for every (Z, seed) combination, keeping
    the candidate-list size alongside the answer."""
    runs = {}
    for inst in corpus:
        for Z in RECURSIVE_Z:
            for seed in RECURSIVE_SEEDS:
                sink = CandidateList(inst.g.n)
                got = alg4_recursive_rp(
                    inst.g, inst.s, inst.t,
                    SamplingParams(rng_seed=seed, Z=Z), candidate_sink=sink)
                runs[(inst.idx, Z, seed)] = (got, len(sink))
    return runs
