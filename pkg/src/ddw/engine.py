"""Iteration loop: evaluate, collect optimal dimensions, stratify, generate,
select, instrument.

Every random decision is drawn from a substream keyed by (seed, role,
iteration, individual index), so results are independent of worker count and
scheduling.  The selection pool always contains the incumbent population,
which makes the best-so-far fitness non-increasing by construction.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .dataset import DimRange, Individual, ReferenceDataset, channel_bounds, init_population
from .errors import ConfigError, InvalidInputError
from .fitness import FitnessReport, blackbox_fitness, ensure_quality, template_total
from .odc import odc_collect, odc_probe_blackbox
from .strategies import LevyParams, strategy_a, strategy_b, strategy_c

# rng substream roles
_INIT, _STRAT_A, _STRAT_B, _STRAT_C = 0, 1, 2, 3

# multiplier turning a channel's value range into the heavy-tailed step span
LEVY_STEP_FACTOR = 0.01


@dataclass
class TemplateProblem:
    dataset: ReferenceDataset


@dataclass
class BlackboxProblem:
    objective: Callable[[np.ndarray], float]
    dim: int
    lower: np.ndarray
    upper: np.ndarray
    channel: str = "x"


@dataclass
class EngineConfig:
    population_size: int = 50
    max_iterations: int = 500
    a_frac: float = 0.05
    b_frac: float = 0.45
    c_frac: float = 0.50
    levy_lambda: float = 1.5
    seed: int = 0
    mode: str | None = None  # resolved from the problem when None
    target_fitness: float | None = None
    n_workers: int = 1

    def validate(self) -> None:
        if self.population_size < 4:
            raise ConfigError(f"population size must be at least 4, got {self.population_size}")
        if self.max_iterations < 1:
            raise ConfigError(f"max iterations must be at least 1, got {self.max_iterations}")
        if abs(self.a_frac + self.b_frac + self.c_frac - 1.0) > 1e-9:
            raise ConfigError("partition fractions must sum to 1")
        if min(self.a_frac, self.b_frac, self.c_frac) < 0:
            raise ConfigError("partition fractions must be nonnegative")
        if not (1.0 < self.levy_lambda <= 3.0):
            raise ConfigError(f"levy exponent must lie in (1, 3], got {self.levy_lambda}")
        if self.mode not in (None, "template", "blackbox"):
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.n_workers < 1:
            raise ConfigError(f"n_workers must be at least 1, got {self.n_workers}")

    def to_dict(self) -> dict:
        return {
            "population_size": self.population_size,
            "max_iterations": self.max_iterations,
            "a_frac": self.a_frac,
            "b_frac": self.b_frac,
            "c_frac": self.c_frac,
            "levy_lambda": self.levy_lambda,
            "seed": self.seed,
            "mode": self.mode,
            "target_fitness": self.target_fitness,
            "n_workers": self.n_workers,
        }


@dataclass
class RunRecord:
    """Everything one run produced, deterministic apart from wall_time."""

    algorithm: str
    mode: str
    seed: int
    config: dict
    iterations: int
    best_fitness: list[float]
    mean_fitness: list[float]
    std_fitness: list[float]
    odc_classes: list[str]
    best_per_iteration: list[dict[str, np.ndarray]] = field(repr=False, default_factory=list)
    best: Individual | None = None
    wall_time: float = 0.0

    def to_document(self) -> dict:
        """JSON-ready structured document; floats keep full round-trip precision."""
        return {
            "algorithm": self.algorithm,
            "mode": self.mode,
            "seed": self.seed,
            "config": self.config,
            "iterations": self.iterations,
            "final_best": {
                "fitness": self.best.fitness,
                "channels": {ch: v.tolist() for ch, v in self.best.channels.items()},
            },
            "odc_stats": self.odc_stats(),
            "history": {
                "best_fitness": self.best_fitness,
                "mean_fitness": self.mean_fitness,
                "std_fitness": self.std_fitness,
                "odc_class": self.odc_classes,
            },
            "wall_time": self.wall_time,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_document(), indent=2, sort_keys=False)

    def odc_stats(self) -> dict:
        counts = {"best": 0, "better": 0, "worst": 0}
        for c in self.odc_classes:
            counts[c] += 1
        n = max(len(self.odc_classes), 1)
        return {
            "counts": counts,
            "rates": {k: v / n for k, v in counts.items()},
        }


def partition_sizes(m: int, config: EngineConfig) -> tuple[int, int, int]:
    """Stratum sizes: |A| = max(1, floor(a_frac*M)), |B| = floor(b_frac*M),
    |C| = the remainder."""
    na = max(1, int(np.floor(config.a_frac * m)))
    nb = int(np.floor(config.b_frac * m))
    nc = m - na - nb
    if nc < 0:
        raise ConfigError(f"partition fractions leave no room for part C with M={m}")
    return na, nb, nc


def partition(
    population: list[Individual], config: EngineConfig
) -> tuple[list[Individual], list[Individual], list[Individual]]:
    """Split an ascending-fitness population into the three strata."""
    na, nb, _ = partition_sizes(len(population), config)
    return population[:na], population[na : na + nb], population[na + nb :]


def select_next(
    current: list[Individual],
    newborns_a: list[Individual],
    newborns_bc: list[Individual],
    d_best: Individual,
    config: EngineConfig,
) -> list[Individual]:
    """Next population: the (M - |A|) lowest-fitness members of
    current + B/C newborns + the optimal dimension solution, plus every
    part-A newborn unconditionally.  Ties keep the earlier birth."""
    m = config.population_size
    na, _, _ = partition_sizes(m, config)
    pool = list(current) + list(newborns_bc) + [d_best]
    keep = m - na
    if len(pool) < keep:
        raise InvalidInputError(f"selection pool of {len(pool)} cannot fill {keep} slots")
    pool.sort(key=lambda ind: (ind.fitness, ind.birth))
    return pool[:keep] + list(newborns_a)


def _rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng([seed, *key])


class _Evaluator:
    """Evaluates newborns, optionally fanning out over threads; results are
    joined by index so worker count never changes the outcome."""

    def __init__(self, problem, config: EngineConfig):
        self.problem = problem
        self.config = config

    def evaluate_one(self, ind: Individual) -> FitnessReport:
        if isinstance(self.problem, TemplateProblem):
            return FitnessReport(fitness=template_total(ind, self.problem.dataset))
        return blackbox_fitness(ind, self.problem.objective, self.problem.dim)

    def evaluate(self, individuals: list[Individual]) -> None:
        todo = [ind for ind in individuals if ind.report is None]
        if not todo:
            return
        if self.config.n_workers > 1:
            with ThreadPoolExecutor(max_workers=self.config.n_workers) as pool:
                reports = list(pool.map(self.evaluate_one, todo))
        else:
            reports = [self.evaluate_one(ind) for ind in todo]
        for ind, report in zip(todo, reports):
            ind.report = report


def _classify_odc(d_best: Individual, part_a: list[Individual]) -> str:
    beats = sum(1 for a in part_a if d_best.fitness < a.fitness)
    if beats == len(part_a):
        return "best"
    if beats == 0:
        return "worst"
    return "better"


def _init_blackbox(problem: BlackboxProblem, m: int, rng: np.random.Generator) -> list[Individual]:
    pop = []
    for k in range(m):
        vals = rng.uniform(problem.lower, problem.upper, problem.dim)
        pop.append(Individual(channels={problem.channel: vals}, birth=k))
    return pop


def run(problem, config: EngineConfig, algorithm: str = "ddw") -> RunRecord:
    """Execute the full loop and return the run record.

    One iteration is: sort, stratify, build the optimal dimension solution
    from part A, generate newborns (1 per part-A member, 3 per part-B and
    part-C member), evaluate them, then select the next population.
    """
    config.validate()
    t_start = time.perf_counter()
    mode = "template" if isinstance(problem, TemplateProblem) else "blackbox"
    if config.mode is not None and config.mode != mode:
        raise ConfigError(f"config mode {config.mode!r} does not match problem mode {mode!r}")
    m = config.population_size
    seed = config.seed
    levy = LevyParams(config.levy_lambda)
    evaluator = _Evaluator(problem, config)

    if mode == "template":
        dataset = problem.dataset
        population = init_population(dataset, m, _rng(seed, _INIT))
        cb = channel_bounds(dataset)
        bounds = {ch: (b.global_min, b.global_max) for ch, b in cb.items()}
        # heavy-tailed steps use the conventional 1% of the value range;
        # raw range-scale draws are never survivable and stall the search
        step_span = {
            ch: LEVY_STEP_FACTOR * (b.global_max - b.global_min) for ch, b in cb.items()
        }
        dim_range = dataset.dim_range
    else:
        population = _init_blackbox(problem, m, _rng(seed, _INIT))
        bounds = {problem.channel: (problem.lower, problem.upper)}
        step_span = None
        dim_range = DimRange(problem.dim, problem.dim)

    evaluator.evaluate(population)
    births = m

    record = RunRecord(
        algorithm=algorithm,
        mode=mode,
        seed=seed,
        config={**config.to_dict(), "mode": mode},
        iterations=0,
        best_fitness=[],
        mean_fitness=[],
        std_fitness=[],
        odc_classes=[],
    )

    for t in range(config.max_iterations):
        population.sort(key=lambda ind: (ind.fitness, ind.birth))
        part_a, part_b, part_c = partition(population, config)
        x_best = part_a[0]

        if mode == "template":
            for member in part_a:
                ensure_quality(member, dataset)
            d_best = odc_collect(part_a, dataset)
        else:
            d_best = odc_probe_blackbox(part_a, problem.objective)
        d_best.birth = births
        births += 1
        record.odc_classes.append(_classify_odc(d_best, part_a))

        newborns_a = []
        for k in range(len(part_a)):
            born = strategy_a(
                x_best, t, config.max_iterations, bounds, dim_range,
                _rng(seed, _STRAT_A, t, k), levy, step_span,
            )
            newborns_a.append(born)

        ab_members = part_a + part_b
        newborns_bc = []
        for k, x_b in enumerate(part_b):
            rng = _rng(seed, _STRAT_B, t, k)
            eligible = [ind for ind in ab_members if ind.fitness < x_b.fitness]
            x_better = eligible[int(rng.integers(len(eligible)))] if eligible else x_best
            newborns_bc.extend(strategy_b(x_b, x_better, d_best, bounds, rng))
        for k, x_c in enumerate(part_c):
            rng = _rng(seed, _STRAT_C, t, k)
            newborns_bc.extend(strategy_c(x_c, x_best, d_best, bounds, rng))

        for born in newborns_a + newborns_bc:
            born.birth = births
            births += 1
        evaluator.evaluate(newborns_a + newborns_bc)

        population = select_next(population, newborns_a, newborns_bc, d_best, config)
        assert len(population) == m

        fits = np.array([ind.fitness for ind in population])
        champion = min(population, key=lambda ind: (ind.fitness, ind.birth))
        record.best_fitness.append(float(fits.min()))
        record.mean_fitness.append(float(fits.mean()))
        record.std_fitness.append(float(fits.std()))
        record.best_per_iteration.append({ch: v.copy() for ch, v in champion.channels.items()})
        record.iterations = t + 1

        if config.target_fitness is not None and record.best_fitness[-1] <= config.target_fitness:
            break

    population.sort(key=lambda ind: (ind.fitness, ind.birth))
    record.best = population[0].copy()
    record.wall_time = time.perf_counter() - t_start
    return record
