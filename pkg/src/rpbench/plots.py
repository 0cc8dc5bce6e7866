"""Optional matplotlib figures for bench runs (opt-in via --plot-dir)."""
from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def save_bench_figures(rows, out_dir: str) -> list[str]:
    """Render timing and candidate-count curves per algorithm.

    rows: dicts with keys n, algo, millis, candidates (bench CSV rows).
    Returns the written file paths.
    """
    os.makedirs(out_dir, exist_ok=True)
    by_algo: dict[str, list] = {}
    for row in rows:
        by_algo.setdefault(row["algo"], []).append(row)
    written = []
    for key, ylabel, fname in (("millis", "wall time (ms)", "timings.png"),
                               ("candidates", "candidate list size",
                                "candidates.png")):
        fig, ax = plt.subplots(figsize=(6, 4))
        for algo in sorted(by_algo):
            pts = sorted(by_algo[algo], key=lambda r: r["n"])
            ax.plot([r["n"] for r in pts], [r[key] for r in pts],
                    marker="o", label=algo)
        ax.set_xlabel("n")
        ax.set_ylabel(ylabel)
        ax.legend()
        fig.tight_layout()
        path = os.path.join(out_dir, fname)
        fig.savefig(path)
        plt.close(fig)
        written.append(path)
    return written
