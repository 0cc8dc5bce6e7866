"""Report assembly and JSON rendering for the CLI."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import INF


def replacements_to_json(dist) -> list:
    return ["inf" if d == INF else int(d) for d in dist]


@dataclass
class AlgorithmRun:
    name: str
    replacements: tuple[float, ...]
    candidates: int
    millis: float
    params: dict = field(default_factory=dict)
    witness_paths: tuple | None = None  # oracle only, under --paths

    def to_dict(self) -> dict:
        d = {
            "replacements": replacements_to_json(self.replacements),
            "candidates": self.candidates,
            "millis": self.millis,
            "params": self.params,
        }
        if self.witness_paths is not None:
            d["paths"] = [list(p) if p is not None else None
                          for p in self.witness_paths]
        return d


@dataclass
class Report:
    n: int
    s: int
    t: int
    weight_bound: int
    path_nodes: tuple[int, ...]
    path_length: int
    algorithms: dict[str, AlgorithmRun]
    agree: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "t": self.t,
            "M": self.weight_bound,
            "path": list(self.path_nodes),
            "path_length": self.path_length,
            "algorithms": {name: run.to_dict()
                           for name, run in self.algorithms.items()},
            "agree": self.agree,
        }


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True)
