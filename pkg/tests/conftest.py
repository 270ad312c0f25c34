"""Shared fixtures and the independent warping-path oracle.

The oracle enumerates every monotone path through the cost grid explicitly
(no dynamic programming), so it cannot share a defect with the production
kernels.  Path sets depend only on the grid shape and are cached per shape.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np
import pytest

from ddw import Cycle, ReferenceDataset


@lru_cache(maxsize=None)
def enumerate_paths(la: int, lb: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All monotone paths from (0, 0) to (la-1, lb-1) with steps
    (+1, 0), (0, +1), (+1, +1)."""
    paths = []

    def walk(i, j, acc):
        if i == la - 1 and j == lb - 1:
            paths.append(tuple(acc))
            return
        if i + 1 < la and j + 1 < lb:
            acc.append((i + 1, j + 1))
            walk(i + 1, j + 1, acc)
            acc.pop()
        if i + 1 < la:
            acc.append((i + 1, j))
            walk(i + 1, j, acc)
            acc.pop()
        if j + 1 < lb:
            acc.append((i, j + 1))
            walk(i, j + 1, acc)
            acc.pop()

    walk(0, 0, [(0, 0)])
    return tuple(paths)


def oracle_min_cost(a, b) -> float:
    """Independent total-distance oracle.

    Equal lengths take the diagonal path only (the elementwise branch by
    contract); unequal lengths take the minimum over every enumerated
    monotone path.  Costs accumulate left to right along the path, matching
    the order the production recurrence adds them, so equality checks can
    be exact.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if len(a) == len(b):
        total = 0.0
        for i in range(len(a)):
            d = a[i] - b[i]
            total += d * d
        return total
    best = np.inf
    for path in enumerate_paths(len(a), len(b)):
        total = 0.0
        for i, j in path:
            d = a[i] - b[j]
            total += d * d
        if total < best:
            best = total
    return best


def oracle_best_paths(a, b):
    """Every enumerated path achieving the minimum cost."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    scored = []
    for path in enumerate_paths(len(a), len(b)):
        total = 0.0
        for i, j in path:
            d = a[i] - b[j]
            total += d * d
        scored.append((total, path))
    best = min(t for t, _ in scored)
    return [p for t, p in scored if t == best]


def make_dataset(arrays_per_channel: dict[str, list]) -> ReferenceDataset:
    """Dataset from {channel: [cycle0_values, cycle1_values, ...]}."""
    names = list(arrays_per_channel)
    n = len(arrays_per_channel[names[0]])
    cycles = []
    for j in range(n):
        cycles.append(
            Cycle(channels={ch: np.asarray(arrays_per_channel[ch][j], dtype=float) for ch in names})
        )
    return ReferenceDataset.from_cycles(cycles)


@pytest.fixture
def tiny_dataset():
    """Two channels, three cycles with lengths 4, 4, 5."""
    return make_dataset(
        {
            "a": [[0.0, 1.0, 2.0, 1.0], [0.5, 1.5, 2.5, 1.5], [0.0, 1.0, 2.0, 2.0, 1.0]],
            "b": [[5.0, 4.0, 3.0, 4.0], [5.5, 4.5, 3.5, 4.5], [5.0, 4.0, 3.0, 3.0, 4.0]],
        }
    )
