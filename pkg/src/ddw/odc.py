"""Optimal dimension collection: per-dimension merge of the elite stratum.

The merge walks the best individual dimension by dimension, aligns each
dimension with a partner individual, and keeps whichever side has the
smaller cached per-dimension quality (ties keep the base).  Folding the
merge over the whole elite stratum in ascending-fitness order yields the
optimal dimension solution, whose channel lengths always equal the best
individual's.

Black-box mode has no per-dimension quality, so it uses greedy coordinate
probing instead: a coordinate is copied from a partner only when doing so
strictly decreases the objective.
"""
from __future__ import annotations

from typing import Callable

import numpy as np

from .dataset import Individual, ReferenceDataset
from .errors import InvalidInputError, InvalidStateError
from .fitness import FitnessReport, ensure_quality, template_fitness
from .mapping import map_series

# An optimal dimension solution has the same shape as any individual.
OptimalDimensionSolution = Individual


def odc_merge(
    base: Individual,
    other: Individual,
    base_quality: dict[str, np.ndarray],
    other_quality: dict[str, np.ndarray],
    trace: list | None = None,
) -> OptimalDimensionSolution:
    """Per-dimension winner merge of ``other`` into ``base``'s frame.

    For each dimension i of base the aligned candidate of other is the
    member of the mapped index set with minimal cached quality; base's
    value survives when its quality is <= the candidate's.  When ``trace``
    is a list, one (channel, i, kept_base, chosen_quality, rival_quality)
    tuple is appended per dimension for invariant auditing.
    """
    if base_quality is None or other_quality is None:
        raise InvalidStateError("odc_merge needs both per-dimension quality caches")
    merged = {}
    for ch, base_vals in base.channels.items():
        other_vals = other.channels[ch]
        bq = base_quality[ch]
        oq = other_quality[ch]
        result = map_series(base_vals, other_vals)
        out = np.empty(base_vals.shape[0])
        for i, dir_i in enumerate(result.dirs):
            j_star = int(dir_i[np.argmin(oq[dir_i])])
            keep_base = bq[i] <= oq[j_star]
            out[i] = base_vals[i] if keep_base else other_vals[j_star]
            if trace is not None:
                chosen = float(bq[i]) if keep_base else float(oq[j_star])
                rival = float(oq[j_star]) if keep_base else float(bq[i])
                trace.append((ch, i, keep_base, chosen, rival))
        merged[ch] = out
    return Individual(channels=merged, report=None, birth=base.birth)


def odc_collect(
    part_a: list[Individual], dataset: ReferenceDataset
) -> OptimalDimensionSolution:
    """Fold the per-dimension merge over the elite stratum, best first.

    The working solution's quality cache is refreshed by a full
    re-evaluation after every merge, because value changes can shift the
    warping alignments.  The returned solution is fully evaluated.
    """
    if not part_a:
        raise InvalidInputError("part A is empty")
    ensure_quality(part_a[0], dataset)
    d_best = part_a[0].copy()
    for partner in part_a[1:]:
        ensure_quality(partner, dataset)
        merged = odc_merge(
            d_best,
            partner,
            d_best.report.per_dim_quality,
            partner.report.per_dim_quality,
        )
        merged.report = template_fitness(merged, dataset)
        d_best = merged
    return d_best


def odc_probe_blackbox(
    part_a: list[Individual], objective: Callable[[np.ndarray], float]
) -> OptimalDimensionSolution:
    """Greedy coordinate probing across the elite stratum.

    Starting from the best individual, each partner's coordinates are tried
    one index at a time (ascending) and kept only on strict objective
    decrease, so the result is never worse than the best individual.
    """
    if not part_a:
        raise InvalidInputError("part A is empty")
    best = part_a[0]
    ch = next(iter(best.channels.keys()))
    cur = best.channels[ch].copy()
    cur_fit = best.fitness
    for partner in part_a[1:]:
        other_vals = partner.channels[ch]
        for k in range(cur.shape[0]):
            candidate = cur.copy()
            candidate[k] = other_vals[k]
            f = float(objective(candidate))
            if f < cur_fit:
                cur = candidate
                cur_fit = f
    return Individual(
        channels={ch: cur},
        report=FitnessReport(fitness=cur_fit, per_dim_quality={}),
        birth=best.birth,
    )
