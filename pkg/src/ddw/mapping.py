"""Cross-dimensional mapping between two time-data chains.

Two series of equal length are compared element by element; unequal lengths
go through dynamic time warping with a squared-difference local cost and
{left, up, diagonal} predecessors over the full cost matrix.  Both branches
therefore accumulate in the same units (sums of squared differences), so the
total distance is continuous across the equal-length boundary.

A mapping carries three pieces of information: the total accumulated cost,
the per-dimension minimum pair distance, and for each index of the first
series the set of indices of the second series it was aligned with.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import InvalidInputError


def as_series(values, name: str = "series") -> np.ndarray:
    """Validate and normalize one time-data chain to a contiguous float array."""
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidInputError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise InvalidInputError(f"{name} is empty")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} contains non-finite values")
    return arr


@dataclass(frozen=True)
class MappingResult:
    """Outcome of mapping series ``a`` onto series ``b``.

    total    -- accumulated squared-difference cost of the alignment
    per_dim  -- for every index i of a, the minimum (a_i - b_j)^2 over the
                indices j that i was aligned with
    dirs     -- for every index i of a, the sorted indices of b on the best
                route (a singleton {i} when the lengths were equal)
    """

    total: float
    per_dim: np.ndarray
    dirs: tuple[np.ndarray, ...]


@njit(cache=True, nogil=True)
def _accumulate(a, b):
    """Full cumulative-cost matrix under squared-difference local cost."""
    la, lb = a.shape[0], b.shape[0]
    acc = np.empty((la, lb))
    d = a[0] - b[0]
    acc[0, 0] = d * d
    for j in range(1, lb):
        d = a[0] - b[j]
        acc[0, j] = acc[0, j - 1] + d * d
    for i in range(1, la):
        d = a[i] - b[0]
        acc[i, 0] = acc[i - 1, 0] + d * d
        for j in range(1, lb):
            d = a[i] - b[j]
            m = acc[i - 1, j - 1]
            if acc[i - 1, j] < m:
                m = acc[i - 1, j]
            if acc[i, j - 1] < m:
                m = acc[i, j - 1]
            acc[i, j] = m + d * d
    return acc


@njit(cache=True, nogil=True)
def _dtw_total(a, b):
    """Cumulative cost at the end cell, two-row rolling variant."""
    la, lb = a.shape[0], b.shape[0]
    prev = np.empty(lb)
    cur = np.empty(lb)
    d = a[0] - b[0]
    prev[0] = d * d
    for j in range(1, lb):
        d = a[0] - b[j]
        prev[j] = prev[j - 1] + d * d
    for i in range(1, la):
        d = a[i] - b[0]
        cur[0] = prev[0] + d * d
        for j in range(1, lb):
            d = a[i] - b[j]
            m = prev[j - 1]
            if prev[j] < m:
                m = prev[j]
            if cur[j - 1] < m:
                m = cur[j - 1]
            cur[j] = m + d * d
        tmp = prev
        prev = cur
        cur = tmp
    return prev[lb - 1]


@njit(cache=True, nogil=True)
def _backtrack(acc):
    """Best route through ``acc`` from (0,0) to the end cell.

    Ties between predecessors prefer diagonal, then up (advance in a),
    then left, which makes extracted routes deterministic.
    """
    la, lb = acc.shape
    path = np.empty((la + lb - 1, 2), dtype=np.int64)
    k = la + lb - 2
    i = la - 1
    j = lb - 1
    path[k, 0] = i
    path[k, 1] = j
    while i > 0 or j > 0:
        if i == 0:
            j -= 1
        elif j == 0:
            i -= 1
        else:
            m = acc[i - 1, j - 1]
            move = 0
            if acc[i - 1, j] < m:
                m = acc[i - 1, j]
                move = 1
            if acc[i, j - 1] < m:
                m = acc[i, j - 1]
                move = 2
            if move == 0:
                i -= 1
                j -= 1
            elif move == 1:
                i -= 1
            else:
                j -= 1
        k -= 1
        path[k, 0] = i
        path[k, 1] = j
    return path[k:].copy()


@njit(cache=True, nogil=True)
def _route_v(a, b, path):
    """Per-dimension minimum pair distance along an extracted route."""
    v = np.full(a.shape[0], np.inf)
    for k in range(path.shape[0]):
        i = path[k, 0]
        j = path[k, 1]
        d = a[i] - b[j]
        c = d * d
        if c < v[i]:
            v[i] = c
    return v


@njit(cache=True, nogil=True)
def _match_nearest(a, b, path):
    """For each index of ``a``, the aligned value of ``b`` with minimum pair distance."""
    out = np.empty(a.shape[0])
    best = np.full(a.shape[0], np.inf)
    for k in range(path.shape[0]):
        i = path[k, 0]
        j = path[k, 1]
        d = a[i] - b[j]
        c = d * d
        if c < best[i]:
            best[i] = c
            out[i] = b[j]
    return out


@njit(cache=True, nogil=True)
def _pair_total_and_v(a, b, v_out):
    """Total plus per-dimension minimum distances, either branch."""
    la, lb = a.shape[0], b.shape[0]
    if la == lb:
        t = 0.0
        for i in range(la):
            d = a[i] - b[i]
            c = d * d
            v_out[i] = c
            t += c
        return t
    acc = _accumulate(a, b)
    path = _backtrack(acc)
    vv = _route_v(a, b, path)
    for i in range(la):
        v_out[i] = vv[i]
    return acc[la - 1, lb - 1]


def map_series(a, b) -> MappingResult:
    """Map series ``a`` onto series ``b``.

    Equal lengths use the elementwise branch (sum of squared differences,
    identity alignment); unequal lengths use DTW with the best route
    extracted by backtracking.
    """
    a = as_series(a, "a")
    b = as_series(b, "b")
    if a.shape[0] == b.shape[0]:
        diff = a - b
        per_dim = diff * diff
        total = 0.0
        for c in per_dim:
            total += c
        dirs = tuple(np.array([i], dtype=np.int64) for i in range(a.shape[0]))
        return MappingResult(float(total), per_dim, dirs)
    acc = _accumulate(a, b)
    path = _backtrack(acc)
    groups: list[list[int]] = [[] for _ in range(a.shape[0])]
    for i, j in path:
        groups[i].append(j)
    dirs = tuple(np.array(g, dtype=np.int64) for g in groups)
    per_dim = _route_v(a, b, path)
    return MappingResult(float(acc[-1, -1]), per_dim, dirs)


def dtw_best_route(a, b) -> list[tuple[int, int]]:
    """Backtracked minimal-cost warping path between two unequal-length series."""
    a = as_series(a, "a")
    b = as_series(b, "b")
    if a.shape[0] == b.shape[0]:
        raise InvalidInputError(
            "equal-length series take the elementwise branch; no warping route exists"
        )
    path = _backtrack(_accumulate(a, b))
    return [(int(i), int(j)) for i, j in path]


def matched_values(frame, other) -> np.ndarray:
    """Values of ``other`` aligned onto ``frame``'s indices, nearest-by-pair-distance.

    Equal lengths give ``other`` back unchanged (identity alignment).
    """
    frame = as_series(frame, "frame")
    other = as_series(other, "other")
    if frame.shape[0] == other.shape[0]:
        return other.copy()
    path = _backtrack(_accumulate(frame, other))
    return _match_nearest(frame, other, path)
