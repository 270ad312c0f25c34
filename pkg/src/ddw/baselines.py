"""Fixed-dimension baseline optimizers: global-best PSO and grey wolf.

Both operate on flat real vectors, so template problems are adapted by
fixing every channel at the modal length and concatenating the channels.
Run records share the shape of the main engine's so downstream tooling
does not care which algorithm produced them.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .benchmarks import BenchmarkProblem
from .dataset import Individual, average_reference, channel_bounds, modal_dimension
from .engine import BlackboxProblem, RunRecord, TemplateProblem
from .errors import ConfigError, InvalidInputError
from .fitness import FitnessReport, template_total


@dataclass
class BaselineConfig:
    algorithm: str = "pso"  # "pso" | "gwo"
    population_size: int = 50
    iterations: int = 500
    inertia: float = 0.8
    c1: float = 1.49445
    c2: float = 1.49445
    a_initial: float = 2.0  # grey wolf control parameter, decays to 0

    def validate(self) -> None:
        if self.algorithm not in ("pso", "gwo"):
            raise ConfigError(f"unknown baseline algorithm {self.algorithm!r}")
        if self.population_size < 2:
            raise ConfigError(f"population size must be at least 2, got {self.population_size}")
        if self.iterations < 1:
            raise ConfigError(f"iterations must be at least 1, got {self.iterations}")


@dataclass
class _FlatProblem:
    """A fixed-dimension view of any supported problem."""

    dim: int
    lower: np.ndarray
    upper: np.ndarray
    objective: Callable[[np.ndarray], float]
    decode: Callable[[np.ndarray], Individual]
    init: Callable[[np.random.Generator, int], np.ndarray]
    mode: str


def _flatten(problem) -> _FlatProblem:
    if isinstance(problem, BenchmarkProblem):
        problem = BlackboxProblem(
            objective=problem, dim=problem.dim, lower=problem.lower, upper=problem.upper
        )
    if isinstance(problem, BlackboxProblem):
        lo, hi = np.asarray(problem.lower, float), np.asarray(problem.upper, float)
        ch = problem.channel

        def decode(vec):
            return Individual(channels={ch: vec.copy()})

        def init(rng, m):
            return rng.uniform(lo, hi, (m, problem.dim))

        return _FlatProblem(problem.dim, lo, hi, problem.objective, decode, init, "blackbox")

    if isinstance(problem, TemplateProblem):
        dataset = problem.dataset
        d_count, _ = modal_dimension(dataset)
        names = dataset.channel_names
        bounds = channel_bounds(dataset)
        refs = np.concatenate([average_reference(dataset, ch) for ch in names])
        halves = np.concatenate([(bounds[ch].env_max - bounds[ch].env_min) / 2.0 for ch in names])
        lo = np.concatenate([np.full(d_count, bounds[ch].global_min) for ch in names])
        hi = np.concatenate([np.full(d_count, bounds[ch].global_max) for ch in names])
        dim = d_count * len(names)

        def decode(vec):
            channels = {
                ch: vec[i * d_count : (i + 1) * d_count].copy() for i, ch in enumerate(names)
            }
            return Individual(channels=channels)

        def objective(vec):
            return template_total(decode(vec), dataset)

        def init(rng, m):
            # mirrors the main initializer, pinned at the modal length
            pts = refs + rng.uniform(-1.0, 1.0, (m, dim)) * halves
            return np.clip(pts, lo, hi)

        return _FlatProblem(dim, lo, hi, objective, decode, init, "template")

    raise InvalidInputError(f"unsupported problem type {type(problem).__name__}")


def _make_record(algorithm, flat, config, seed):
    return RunRecord(
        algorithm=algorithm,
        mode=flat.mode,
        seed=seed,
        config={
            "algorithm": config.algorithm,
            "population_size": config.population_size,
            "iterations": config.iterations,
            "inertia": config.inertia,
            "c1": config.c1,
            "c2": config.c2,
            "a_initial": config.a_initial,
            "seed": seed,
        },
        iterations=0,
        best_fitness=[],
        mean_fitness=[],
        std_fitness=[],
        odc_classes=[],
    )


def _finish(record, flat, best_vec, best_fit, t_start):
    best = flat.decode(best_vec)
    best.report = FitnessReport(fitness=best_fit, per_dim_quality={})
    record.best = best
    record.wall_time = time.perf_counter() - t_start
    return record


def run_pso(
    problem,
    config: BaselineConfig,
    seed: int,
    init_positions: np.ndarray | None = None,
    init_velocities: np.ndarray | None = None,
) -> RunRecord:
    """Global-best particle swarm: inertia plus cognitive and social pulls."""
    config.validate()
    t_start = time.perf_counter()
    flat = _flatten(problem)
    m = config.population_size
    rng = np.random.default_rng([seed, 10])
    pos = flat.init(rng, m) if init_positions is None else np.array(init_positions, float)
    vel = np.zeros_like(pos) if init_velocities is None else np.array(init_velocities, float)
    span = flat.upper - flat.lower

    fits = np.array([flat.objective(p) for p in pos])
    pbest = pos.copy()
    pbest_fit = fits.copy()
    g = int(np.argmin(pbest_fit))
    gbest = pbest[g].copy()
    gbest_fit = float(pbest_fit[g])

    record = _make_record("pso", flat, config, seed)
    for _ in range(config.iterations):
        r1 = rng.random((m, flat.dim))
        r2 = rng.random((m, flat.dim))
        vel = (
            config.inertia * vel
            + config.c1 * r1 * (pbest - pos)
            + config.c2 * r2 * (gbest - pos)
        )
        np.clip(vel, -span, span, out=vel)
        pos = np.clip(pos + vel, flat.lower, flat.upper)
        fits = np.array([flat.objective(p) for p in pos])
        improved = fits < pbest_fit
        pbest[improved] = pos[improved]
        pbest_fit[improved] = fits[improved]
        g = int(np.argmin(pbest_fit))
        if pbest_fit[g] < gbest_fit:
            gbest_fit = float(pbest_fit[g])
            gbest = pbest[g].copy()
        record.best_fitness.append(gbest_fit)
        record.mean_fitness.append(float(fits.mean()))
        record.std_fitness.append(float(fits.std()))
        record.best_per_iteration.append({"flat": gbest.copy()})
        record.iterations += 1
    return _finish(record, flat, gbest, gbest_fit, t_start)


def run_gwo(problem, config: BaselineConfig, seed: int) -> RunRecord:
    """Grey wolf: encircling driven by the three best wolves, control
    parameter decaying linearly from its initial value to 0."""
    config.validate()
    t_start = time.perf_counter()
    flat = _flatten(problem)
    m = config.population_size
    rng = np.random.default_rng([seed, 11])
    pos = flat.init(rng, m)
    fits = np.array([flat.objective(p) for p in pos])

    order = np.argsort(fits, kind="stable")
    leaders = pos[order[:3]].copy()
    leader_fits = fits[order[:3]].copy()
    while leaders.shape[0] < 3:  # tiny populations still need three anchors
        leaders = np.vstack([leaders, leaders[-1]])
        leader_fits = np.append(leader_fits, leader_fits[-1])

    record = _make_record("gwo", flat, config, seed)
    for t in range(config.iterations):
        a = config.a_initial * (1.0 - t / config.iterations)
        new_pos = np.empty_like(pos)
        for i in range(m):
            x = np.zeros(flat.dim)
            for leader in leaders:
                r1 = rng.random(flat.dim)
                r2 = rng.random(flat.dim)
                aa = 2.0 * a * r1 - a
                cc = 2.0 * r2
                x += leader - aa * np.abs(cc * leader - pos[i])
            new_pos[i] = x / 3.0
        pos = np.clip(new_pos, flat.lower, flat.upper)
        fits = np.array([flat.objective(p) for p in pos])
        for i in range(m):
            f = fits[i]
            if f < leader_fits[0]:
                leaders[2], leader_fits[2] = leaders[1], leader_fits[1]
                leaders[1], leader_fits[1] = leaders[0], leader_fits[0]
                leaders[0], leader_fits[0] = pos[i].copy(), f
            elif f < leader_fits[1]:
                leaders[2], leader_fits[2] = leaders[1], leader_fits[1]
                leaders[1], leader_fits[1] = pos[i].copy(), f
            elif f < leader_fits[2]:
                leaders[2], leader_fits[2] = pos[i].copy(), f
        record.best_fitness.append(float(leader_fits[0]))
        record.mean_fitness.append(float(fits.mean()))
        record.std_fitness.append(float(fits.std()))
        record.best_per_iteration.append({"flat": leaders[0].copy()})
        record.iterations += 1
    return _finish(record, flat, leaders[0], float(leader_fits[0]), t_start)


def run_baseline(config: BaselineConfig, problem, seed: int) -> RunRecord:
    """Dispatch on the configured algorithm id."""
    config.validate()
    if config.algorithm == "pso":
        return run_pso(problem, config, seed)
    return run_gwo(problem, config, seed)
