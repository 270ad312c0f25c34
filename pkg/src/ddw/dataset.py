"""Reference dataset, population types, and population initialization.

A reference dataset holds N motion cycles.  Within one cycle every channel
has the same length; lengths differ between cycles, which is what makes the
search space a union of fixed-dimension subspaces.  Individuals are built
from the modal-length average reference, perturbed per dimension, then
resized to an independently drawn length per channel.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from .errors import ConfigError, InvalidInputError, InvalidStateError
from .mapping import as_series

if TYPE_CHECKING:
    from .fitness import FitnessReport


@dataclass(frozen=True)
class DimRange:
    """Inclusive range of admissible channel lengths."""

    min: int
    max: int

    def __post_init__(self):
        if not (1 <= self.min <= self.max):
            raise InvalidInputError(f"bad dimension range [{self.min}, {self.max}]")

    def contains(self, n: int) -> bool:
        return self.min <= n <= self.max


@dataclass
class Cycle:
    """One recorded cycle: every channel shares a single length."""

    channels: dict[str, np.ndarray]

    @property
    def length(self) -> int:
        return next(iter(self.channels.values())).shape[0]


@dataclass
class ReferenceDataset:
    cycles: list[Cycle]
    channel_names: tuple[str, ...]
    dim_range: DimRange
    _packs: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def from_cycles(cls, cycles: list[Cycle]) -> "ReferenceDataset":
        if not cycles:
            raise InvalidInputError("dataset has no cycles")
        names = tuple(cycles[0].channels.keys())
        for idx, cyc in enumerate(cycles):
            if tuple(cyc.channels.keys()) != names:
                raise InvalidInputError(f"cycle {idx} channel names differ from cycle 0")
            lengths = {ch: v.shape[0] for ch, v in cyc.channels.items()}
            if len(set(lengths.values())) != 1:
                raise InvalidInputError(f"cycle {idx} has mismatched channel lengths {lengths}")
            for ch, v in cyc.channels.items():
                cyc.channels[ch] = as_series(v, f"cycle {idx} channel {ch}")
        sizes = [c.length for c in cycles]
        return cls(cycles=list(cycles), channel_names=names, dim_range=DimRange(min(sizes), max(sizes)))

    def __len__(self) -> int:
        return len(self.cycles)

    def packed(self, channel: str) -> tuple[np.ndarray, np.ndarray]:
        """Channel series of all cycles, concatenated, with offsets; cached."""
        pack = self._packs.get(channel)
        if pack is None:
            parts = [c.channels[channel] for c in self.cycles]
            flat = np.concatenate(parts)
            offsets = np.zeros(len(parts) + 1, dtype=np.int64)
            offsets[1:] = np.cumsum([p.shape[0] for p in parts])
            pack = (flat, offsets)
            self._packs[channel] = pack
        return pack


@dataclass
class Individual:
    """A candidate template: one series per channel, lengths drawn independently."""

    channels: dict[str, np.ndarray]
    report: "FitnessReport | None" = None
    birth: int = 0

    @property
    def fitness(self) -> float:
        if self.report is None:
            raise InvalidStateError("individual has not been evaluated")
        return self.report.fitness

    @property
    def evaluated(self) -> bool:
        return self.report is not None

    def channel_lengths(self) -> dict[str, int]:
        return {ch: v.shape[0] for ch, v in self.channels.items()}

    def copy(self) -> "Individual":
        return Individual(
            channels={ch: v.copy() for ch, v in self.channels.items()},
            report=self.report,
            birth=self.birth,
        )


@dataclass
class ChannelBounds:
    """Value envelope of one channel.

    global_min/global_max span every sample of the channel across all cycles;
    env_min/env_max are per-dimension extrema over the modal-length cycles
    only (other cycles have no aligned dimension i).
    """

    global_min: float
    global_max: float
    env_min: np.ndarray
    env_max: np.ndarray


def modal_dimension(dataset: ReferenceDataset) -> tuple[int, int]:
    """Most frequent cycle length and its multiplicity; ties take the smallest length."""
    counts = Counter(c.length for c in dataset.cycles)
    best_count = max(counts.values())
    d_count = min(length for length, n in counts.items() if n == best_count)
    return d_count, best_count


def average_reference(dataset: ReferenceDataset, channel: str) -> np.ndarray:
    """Dimension-wise mean over exactly the cycles of modal length."""
    if channel not in dataset.channel_names:
        raise InvalidInputError(f"unknown channel {channel!r}")
    d_count, _ = modal_dimension(dataset)
    rows = [c.channels[channel] for c in dataset.cycles if c.length == d_count]
    return np.mean(np.stack(rows), axis=0)


def channel_bounds(dataset: ReferenceDataset) -> dict[str, ChannelBounds]:
    d_count, _ = modal_dimension(dataset)
    out = {}
    for ch in dataset.channel_names:
        all_vals = np.concatenate([c.channels[ch] for c in dataset.cycles])
        modal = np.stack([c.channels[ch] for c in dataset.cycles if c.length == d_count])
        out[ch] = ChannelBounds(
            global_min=float(all_vals.min()),
            global_max=float(all_vals.max()),
            env_min=modal.min(axis=0),
            env_max=modal.max(axis=0),
        )
    return out


def resize_series(
    s,
    target_len: int,
    mode: str = "random",
    quality=None,
    rng: np.random.Generator | None = None,
    dim_range: DimRange | None = None,
) -> np.ndarray:
    """Resize a series one element at a time.

    Shrinking deletes one element per step: a uniformly chosen index in
    random mode, the maximum-quality index in worst mode (the surviving
    quality sequence is shortened by the same deletion).  Growing inserts
    the midpoint of an adjacent pair: a uniformly chosen pair in random
    mode, the pair next to the maximum-quality index in worst mode; an
    inserted element carries the mean of its neighbours' qualities.
    """
    s = as_series(s)
    if dim_range is not None and not dim_range.contains(target_len):
        raise InvalidInputError(
            f"target length {target_len} outside [{dim_range.min}, {dim_range.max}]"
        )
    if target_len < 1:
        raise InvalidInputError(f"target length must be positive, got {target_len}")
    if mode == "worst":
        if quality is None:
            raise InvalidInputError("worst mode requires a quality sequence")
        q = [float(x) for x in quality]
        if len(q) != s.shape[0]:
            raise InvalidInputError("quality length must equal series length")
    elif mode == "random":
        if rng is None:
            raise InvalidInputError("random mode requires an rng")
        q = None
    else:
        raise InvalidInputError(f"unknown resize mode {mode!r}")

    vals = [float(x) for x in s]
    while len(vals) > target_len:
        if q is not None:
            idx = max(range(len(q)), key=q.__getitem__)
            del q[idx]
        else:
            idx = int(rng.integers(len(vals)))
        del vals[idx]
    while len(vals) < target_len:
        if len(vals) == 1:
            # no adjacent pair exists; duplicate the lone value
            vals.append(vals[0])
            if q is not None:
                q.append(q[0])
            continue
        if q is not None:
            m = max(range(len(q)), key=q.__getitem__)
            pair = m if m < len(vals) - 1 else m - 1
        else:
            pair = int(rng.integers(len(vals) - 1))
        vals.insert(pair + 1, (vals[pair] + vals[pair + 1]) / 2.0)
        if q is not None:
            q.insert(pair + 1, (q[pair] + q[pair + 1]) / 2.0)
    return np.array(vals)


def init_population(
    dataset: ReferenceDataset, m: int, rng: np.random.Generator
) -> list[Individual]:
    """Build M individuals around the modal-length average reference.

    Each channel starts from the average reference, gains an independent
    zero-mean uniform perturbation per dimension spanning half the modal
    envelope, is clamped to the channel's global range, and is then resized
    (random mode) to an independently drawn length in the dataset's range.
    """
    if m < 4:
        raise ConfigError(f"population size must be at least 4, got {m}")
    bounds = channel_bounds(dataset)
    refs = {ch: average_reference(dataset, ch) for ch in dataset.channel_names}
    dr = dataset.dim_range
    population = []
    for k in range(m):
        channels = {}
        for ch in dataset.channel_names:
            b = bounds[ch]
            half = (b.env_max - b.env_min) / 2.0
            vals = refs[ch] + rng.uniform(-1.0, 1.0, refs[ch].shape[0]) * half
            np.clip(vals, b.global_min, b.global_max, out=vals)
            target = int(rng.integers(dr.min, dr.max + 1))
            channels[ch] = resize_series(vals, target, mode="random", rng=rng, dim_range=dr)
        population.append(Individual(channels=channels, birth=k))
    return population
