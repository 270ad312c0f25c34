"""Fitness evaluation against a reference dataset or a scalar objective.

Template mode scores an individual as the mean over cycles of the mean over
channels of the mapping total, and caches per-dimension quality values (the
cycle-averaged per-dimension minimum distances) that the optimal-dimension
merge consumes.  Black-box mode simply applies a scalar objective to the
individual's single channel.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from numba import njit

from .dataset import Individual, ReferenceDataset
from .errors import InvalidInputError
from .mapping import _dtw_total, _pair_total_and_v


@dataclass
class FitnessReport:
    """fitness plus the per-channel, per-dimension quality cache.

    ``per_dim_quality`` is None when the quality pass has not run yet
    (bulk evaluation defers it), and an empty dict in black-box mode where
    no per-dimension quality is defined.
    """

    fitness: float
    per_dim_quality: dict[str, np.ndarray] | None = None

    @property
    def has_quality(self) -> bool:
        return self.per_dim_quality is not None and len(self.per_dim_quality) > 0


@njit(cache=True, nogil=True)
def _totals_vs_cycles(s, flat, offsets, out):
    for k in range(offsets.shape[0] - 1):
        b = flat[offsets[k] : offsets[k + 1]]
        if b.shape[0] == s.shape[0]:
            t = 0.0
            for i in range(s.shape[0]):
                d = s[i] - b[i]
                t += d * d
            out[k] = t
        else:
            out[k] = _dtw_total(s, b)


@njit(cache=True, nogil=True)
def _v_mean_vs_cycles(s, flat, offsets):
    n = offsets.shape[0] - 1
    v_sum = np.zeros(s.shape[0])
    v = np.empty(s.shape[0])
    for k in range(n):
        b = flat[offsets[k] : offsets[k + 1]]
        _pair_total_and_v(s, b, v)
        for i in range(s.shape[0]):
            v_sum[i] += v[i]
    return v_sum / n


def _check_channels(x: Individual, dataset: ReferenceDataset) -> None:
    if len(dataset.cycles) == 0:
        raise InvalidInputError("dataset has no cycles")
    if set(x.channels.keys()) != set(dataset.channel_names):
        raise InvalidInputError(
            f"individual channels {sorted(x.channels)} do not match "
            f"dataset channels {sorted(dataset.channel_names)}"
        )


def template_total(x: Individual, dataset: ReferenceDataset) -> float:
    """Mean over cycles of the channel-averaged mapping total."""
    _check_channels(x, dataset)
    n = len(dataset.cycles)
    acc = np.zeros(n)
    for ch in dataset.channel_names:
        flat, offsets = dataset.packed(ch)
        out = np.empty(n)
        _totals_vs_cycles(x.channels[ch], flat, offsets, out)
        acc += out
    return float(np.mean(acc / len(dataset.channel_names)))


def template_fitness(x: Individual, dataset: ReferenceDataset) -> FitnessReport:
    """Full template-mode evaluation: fitness plus per-dimension quality."""
    fitness = template_total(x, dataset)
    quality = {}
    for ch in dataset.channel_names:
        flat, offsets = dataset.packed(ch)
        quality[ch] = _v_mean_vs_cycles(x.channels[ch], flat, offsets)
    return FitnessReport(fitness=fitness, per_dim_quality=quality)


def blackbox_fitness(
    x: Individual, objective: Callable[[np.ndarray], float], dim: int | None = None
) -> FitnessReport:
    """Scalar-objective evaluation of a single-channel individual."""
    if len(x.channels) != 1:
        raise InvalidInputError(
            f"black-box mode needs exactly one channel, got {sorted(x.channels)}"
        )
    values = next(iter(x.channels.values()))
    if dim is not None and values.shape[0] != dim:
        raise InvalidInputError(
            f"objective expects dimensionality {dim}, individual has {values.shape[0]}"
        )
    fit = float(objective(values))
    if not np.isfinite(fit):
        raise InvalidInputError(f"objective returned a non-finite value {fit!r}")
    return FitnessReport(fitness=fit, per_dim_quality={})


def ensure_quality(x: Individual, dataset: ReferenceDataset) -> FitnessReport:
    """Upgrade a totals-only report to a full one; idempotent."""
    if x.report is not None and x.report.per_dim_quality is not None:
        return x.report
    x.report = template_fitness(x, dataset)
    return x.report
