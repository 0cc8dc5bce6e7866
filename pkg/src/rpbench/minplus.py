"""Min-plus (tropical) matrix kernels on exact float64 integers.

Entries are integers or +inf stored as float64.  Graph construction already
guarantees every legitimate value stays far below 2**53, so float64 addition
and minimum are exact here.  There is no -inf anywhere, hence inf + x never
produces NaN.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    EntryOutOfBoundError,
    NegativeCycleError,
)
from .graph import INF, Graph


class MinPlusMatrix:
    """Immutable dense matrix over (min, +).

    ``bound`` (optional) asserts every finite entry has magnitude <= bound.
    """

    __slots__ = ("rows", "cols", "_a")

    def __init__(self, array: np.ndarray, *, bound: int | None = None):
        if array.ndim != 2:
            raise DimensionMismatchError(
                f"expected a 2-d array, got shape {array.shape}")
        a = np.asarray(array, dtype=np.float64)
        if bound is not None:
            finite = a[np.isfinite(a)]
            if finite.size and float(np.max(np.abs(finite))) > bound:
                worst = float(np.max(np.abs(finite)))
                raise EntryOutOfBoundError(
                    f"entry magnitude {worst:g} exceeds bound {bound}")
        a = a.copy()
        a.setflags(write=False)
        self._a = a
        self.rows, self.cols = a.shape

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]],
                  *, bound: int | None = None) -> "MinPlusMatrix":
        return cls(np.array(rows, dtype=np.float64), bound=bound)

    @classmethod
    def identity(cls, n: int) -> "MinPlusMatrix":
        a = np.full((n, n), INF)
        np.fill_diagonal(a, 0.0)
        return cls(a)

    @property
    def array(self) -> np.ndarray:
        return self._a

    def entry(self, i: int, j: int) -> float:
        v = self._a[i, j]
        return INF if math.isinf(v) else int(v)

    def to_rows(self) -> list[list[float]]:
        return [[INF if math.isinf(v) else int(v) for v in row]
                for row in self._a]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MinPlusMatrix):
            return NotImplemented
        return self._a.shape == other._a.shape and bool(
            np.array_equal(self._a, other._a))

    def __hash__(self):  # pragma: no cover - matrices are not dict keys
        return NotImplemented

    def __repr__(self) -> str:
        return f"MinPlusMatrix({self.rows}x{self.cols})"


def minplus_product(a: MinPlusMatrix, b: MinPlusMatrix) -> MinPlusMatrix:
    """C[i,j] = min_k A[i,k] + B[k,j], row-chunked to cap the temp array."""
    if a.cols != b.rows:
        raise DimensionMismatchError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    return MinPlusMatrix(_product_kernel(a.array, b.array))


def _product_kernel(aa: np.ndarray, bb: np.ndarray) -> np.ndarray:
    rows, inner = aa.shape
    cols = bb.shape[1]
    out = np.empty((rows, cols))
    # ~64MB temp budget for the (chunk, inner, cols) broadcast
    chunk = max(1, (1 << 23) // max(1, inner * cols))
    for r0 in range(0, rows, chunk):
        r1 = min(rows, r0 + chunk)
        out[r0:r1] = np.min(aa[r0:r1, :, None] + bb[None, :, :], axis=1)
    return out


def minplus_closure(a: MinPlusMatrix) -> MinPlusMatrix:
    """All-pairs shortest walks: min over path lengths of A^k with A[i,i]<=0.

    Raises NegativeCycleError if any diagonal entry ends up negative.
    Repeated squaring, ceil(log2 n) rounds, with a fixpoint early exit
    (a fixpoint of squaring has no negative diagonal to discover later:
    D*D = D and D[i,i] < 0 would keep decreasing).
    """
    n = a.rows
    if n != a.cols:
        raise DimensionMismatchError(
            f"closure needs a square matrix, got {a.rows}x{a.cols}")
    cur = a.array.copy()
    diag = np.diagonal(cur).copy()
    np.fill_diagonal(cur, np.minimum(diag, 0.0))
    rounds = max(1, math.ceil(math.log2(n))) if n > 1 else 1
    for _ in range(rounds):
        nxt = _product_kernel(cur, cur)
        if np.array_equal(nxt, cur):
            break
        cur = nxt
    if float(np.min(np.diagonal(cur))) < 0:
        raise NegativeCycleError("negative diagonal entry after closure")
    return MinPlusMatrix(cur)


def cap_entries(a: MinPlusMatrix, threshold: int) -> MinPlusMatrix:
    """Replace finite entries strictly above threshold with inf (one-sided)."""
    arr = a.array.copy()
    arr[np.isfinite(arr) & (arr > threshold)] = INF
    return MinPlusMatrix(arr)


def minplus_via_scaling(a: MinPlusMatrix, b: MinPlusMatrix,
                        bound: int) -> MinPlusMatrix:
    """Min-plus product by reduction to ordinary big-int matrix product.

    Encode x -> base**(bound - x) with inf -> 0; the ordinary product's
    largest digit position recovers the minimum sum.  Entries must lie in
    [-bound, bound].  Slow; kept as an independent cross-check.
    """
    if a.cols != b.rows:
        raise DimensionMismatchError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    for m in (a, b):
        finite = m.array[np.isfinite(m.array)]
        if finite.size and float(np.max(np.abs(finite))) > bound:
            raise EntryOutOfBoundError(
                f"entry magnitude exceeds scaling bound {bound}")
    base = max(a.cols, 1) + 1

    def encode(m: MinPlusMatrix) -> list[list[int]]:
        return [[0 if math.isinf(v) else base ** (bound - int(v))
                 for v in row] for row in m.array]

    ea, eb = encode(a), encode(b)
    out = np.full((a.rows, b.cols), INF)
    for i in range(a.rows):
        row = ea[i]
        for j in range(b.cols):
            acc = 0
            for k in range(a.cols):
                acc += row[k] * eb[k][j]
            if acc == 0:
                continue
            # highest digit position e with acc >= base**e gives min sum
            e = 0
            while acc >= base:
                acc //= base
                e += 1
            out[i, j] = 2 * bound - e
    return MinPlusMatrix(out)


def weight_matrix(g: Graph) -> MinPlusMatrix:
    """Adjacency matrix of g over (min, +): inf off-edges, 0 diagonal absent."""
    a = np.full((g.n, g.n), INF)
    for u, v, w in g.edges():
        a[u, v] = w
    return MinPlusMatrix(a)


def bounded_distance_matrix(g: Graph, threshold: int) -> MinPlusMatrix:
    """Exact all-pairs distances, then entries above threshold capped to inf."""
    return cap_entries(minplus_closure(weight_matrix(g)), threshold)
