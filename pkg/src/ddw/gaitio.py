"""Dataset ingestion, synthetic data generation, and result serialization.

Datasets travel as long-format CSV (one sample per row) so variable cycle
lengths never produce ragged rows.  All floating-point text uses full
round-trip precision, which makes synth -> write -> load reproduce the
dataset bit for bit.
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .dataset import Cycle, ReferenceDataset
from .engine import RunRecord
from .errors import ConfigError, DataFormatError, DataValidationError

_HEADER = ["cycle_id", "channel", "sample_index", "value"]

DEFAULT_CHANNELS = ("back", "l_thigh", "r_thigh", "l_shank", "r_shank")


@dataclass
class SynthParams:
    """Knobs for the synthetic cycle generator."""

    n_cycles: int = 80
    channels: tuple[str, ...] = DEFAULT_CHANNELS
    base_length: int = 60
    length_jitter: int = 1
    noise_sd: float = 2.0
    seed: int = 0

    def validate(self) -> None:
        if self.n_cycles < 1:
            raise ConfigError(f"need at least one cycle, got {self.n_cycles}")
        if not self.channels:
            raise ConfigError("need at least one channel")
        if self.length_jitter < 0:
            raise ConfigError(f"length jitter must be nonnegative, got {self.length_jitter}")
        if self.base_length - self.length_jitter < 2:
            raise ConfigError(
                f"base length {self.base_length} minus jitter {self.length_jitter} must be >= 2"
            )
        if self.noise_sd < 0:
            raise ConfigError(f"noise sd must be nonnegative, got {self.noise_sd}")


@dataclass
class _ChannelShape:
    offset: float
    amp1: float
    amp2: float
    phase1: float
    phase2: float

    def sample(self, length: int) -> np.ndarray:
        u = np.arange(length) / length
        return (
            self.offset
            + self.amp1 * np.sin(2.0 * np.pi * u + self.phase1)
            + self.amp2 * np.sin(4.0 * np.pi * u + self.phase2)
        )


def synth_dataset(params: SynthParams) -> tuple[ReferenceDataset, dict[str, np.ndarray]]:
    """Generate cycles around planted smooth periodic templates.

    Each channel gets a two-sinusoid template with its own phase; every
    cycle resamples the templates at a jittered length shared by all
    channels and adds independent Gaussian noise.  The planted templates
    (sampled at the base length) come back alongside the dataset so tests
    can use them as an oracle.
    """
    params.validate()
    rng = np.random.default_rng(params.seed)
    shapes = {}
    for ch in params.channels:
        shapes[ch] = _ChannelShape(
            offset=float(rng.uniform(-10.0, 25.0)),
            amp1=float(rng.uniform(20.0, 35.0)),
            amp2=float(rng.uniform(5.0, 12.0)),
            phase1=float(rng.uniform(0.0, 2.0 * np.pi)),
            phase2=float(rng.uniform(0.0, 2.0 * np.pi)),
        )
    cycles = []
    for _ in range(params.n_cycles):
        length = params.base_length + int(
            rng.integers(-params.length_jitter, params.length_jitter + 1)
        )
        channels = {}
        for ch in params.channels:
            noise = rng.normal(0.0, params.noise_sd, length) if params.noise_sd > 0 else 0.0
            channels[ch] = shapes[ch].sample(length) + noise
        cycles.append(Cycle(channels=channels))
    planted = {ch: shapes[ch].sample(params.base_length) for ch in params.channels}
    return ReferenceDataset.from_cycles(cycles), planted


def write_dataset(dataset: ReferenceDataset, path) -> None:
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_HEADER)
        for cycle_id, cycle in enumerate(dataset.cycles):
            for ch in dataset.channel_names:
                for idx, value in enumerate(cycle.channels[ch]):
                    writer.writerow([cycle_id, ch, idx, repr(float(value))])


def load_dataset(path) -> ReferenceDataset:
    """Read and validate a long-format dataset file."""
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataFormatError(f"{path}: file is empty, expected header {','.join(_HEADER)}")
        if [h.strip() for h in header] != _HEADER:
            raise DataFormatError(
                f"{path}: bad header {','.join(header)!r}, expected {','.join(_HEADER)}"
            )
        # cycle_id -> channel -> {sample_index: value}
        raw: dict[int, dict[str, dict[int, float]]] = {}
        channel_order: list[str] = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 4:
                raise DataFormatError(f"{path}:{lineno}: expected 4 fields, got {len(row)}")
            try:
                cycle_id = int(row[0])
                idx = int(row[2])
                value = float(row[3])
            except ValueError as exc:
                raise DataFormatError(f"{path}:{lineno}: non-numeric field ({exc})")
            ch = row[1]
            if ch not in channel_order:
                channel_order.append(ch)
            samples = raw.setdefault(cycle_id, {}).setdefault(ch, {})
            if idx in samples:
                raise DataValidationError(
                    f"{path}:{lineno}: duplicate sample {idx} in cycle {cycle_id} channel {ch}"
                )
            samples[idx] = value

    if not raw:
        raise DataValidationError(f"{path}: no cycles")

    cycles = []
    for cycle_id in sorted(raw):
        per_channel = raw[cycle_id]
        missing = [ch for ch in channel_order if ch not in per_channel]
        if missing:
            raise DataValidationError(f"{path}: cycle {cycle_id} is missing channels {missing}")
        lengths = {ch: len(samples) for ch, samples in per_channel.items()}
        if len(set(lengths.values())) != 1:
            raise DataValidationError(
                f"{path}: cycle {cycle_id} has mismatched channel lengths {lengths}"
            )
        channels = {}
        for ch in channel_order:
            samples = per_channel[ch]
            n = len(samples)
            if sorted(samples) != list(range(n)):
                raise DataValidationError(
                    f"{path}: cycle {cycle_id} channel {ch} has gaps in its sample indices"
                )
            channels[ch] = np.array([samples[i] for i in range(n)])
        cycles.append(Cycle(channels=channels))
    return ReferenceDataset.from_cycles(cycles)


def write_results(record: RunRecord, path_prefix) -> tuple[Path, Path]:
    """Emit <prefix>.json (structured document) and <prefix>.csv (per-iteration
    fitness table for plotting).  Returns both paths."""
    prefix = Path(path_prefix)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    json_path = prefix.with_suffix(prefix.suffix + ".json")
    csv_path = prefix.with_suffix(prefix.suffix + ".csv")
    json_path.write_text(record.to_json() + "\n")
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["iteration", "best_fitness", "mean_fitness", "std_fitness"])
        for i in range(record.iterations):
            writer.writerow(
                [
                    i + 1,
                    repr(record.best_fitness[i]),
                    repr(record.mean_fitness[i]),
                    repr(record.std_fitness[i]),
                ]
            )
    return json_path, csv_path


def read_results(path) -> dict:
    """Load a structured result document written by write_results."""
    path = Path(path)
    if path.suffix != ".json":
        path = path.with_suffix(path.suffix + ".json")
    return json.loads(path.read_text())
