"""Newborn generation strategies for the three population strata.

Strategy A explores around the best individual with damped heavy-tailed
steps and then mutates the dimension count (worst-dimension resizing).
Strategy B searches three paths around the member itself using Archimedean
spiral coefficients; strategy C races toward the best individual and the
optimal dimension solution using hyperbolic spiral coefficients.  B and C
preserve their frame's channel lengths; A redraws lengths.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import DimRange, Individual, resize_series
from .errors import ConfigError, InvalidInputError
from .mapping import matched_values

# bounds: channel name -> (low, high); scalars in template mode,
# per-coordinate arrays in black-box mode.
Bounds = dict[str, tuple]


@dataclass(frozen=True)
class LevyParams:
    """Tail exponent of the heavy-tailed step distribution, in (1, 3]."""

    lam: float = 1.5

    def __post_init__(self):
        if not (1.0 < self.lam <= 3.0):
            raise ConfigError(f"levy exponent must lie in (1, 3], got {self.lam}")


def _mantegna_sigma(alpha: float) -> float:
    num = math.gamma(1.0 + alpha) * math.sin(math.pi * alpha / 2.0)
    den = math.gamma((1.0 + alpha) / 2.0) * alpha * 2.0 ** ((alpha - 1.0) / 2.0)
    return (num / den) ** (1.0 / alpha)


def _levy_draws(n: int, lam: float, rng: np.random.Generator) -> np.ndarray:
    # The Mantegna construction is only valid for indices up to 2; above
    # that the stable family saturates at the Gaussian, so draws fall back
    # to a standard normal.
    alpha = lam
    if alpha > 2.0:
        return rng.standard_normal(n)
    sigma = _mantegna_sigma(alpha)
    u = rng.normal(0.0, sigma, n)
    v = rng.standard_normal(n)
    with np.errstate(divide="ignore", over="ignore"):
        denom = np.abs(v) ** (1.0 / alpha)
        np.maximum(denom, 1e-300, out=denom)
        draws = u / denom
    # extreme draws must stay finite so downstream damping/clamping is safe
    return np.nan_to_num(draws, nan=0.0, posinf=1e12, neginf=-1e12)


def levy_step(
    params: LevyParams, gen: int, max_gen: int, rng: np.random.Generator
) -> float:
    """One damped heavy-tailed step: a Lévy draw scaled by 1 - (gen/max_gen)^2."""
    if max_gen < 1:
        raise ConfigError(f"max_gen must be at least 1, got {max_gen}")
    if not (0 <= gen <= max_gen):
        raise InvalidInputError(f"gen {gen} outside [0, {max_gen}]")
    damping = 1.0 - (gen / max_gen) ** 2
    if damping == 0.0:
        return 0.0
    return float(_levy_draws(1, params.lam, rng)[0]) * damping


@dataclass(frozen=True)
class SpiralCoefficients:
    """Per-dimension path coefficients, each sequence normalized to max |.| = 1."""

    xcoef: np.ndarray
    ycoef: np.ndarray


def spiral_coefficients(
    length: int, kind: str, rng: np.random.Generator
) -> SpiralCoefficients:
    """Draw spiral samples xr = r*sin(theta), yr = r*cos(theta) (or the sinh/cosh
    pair for the hyperbolic kind) with theta = 10*pi*u1 and r = theta + 1.5*u2,
    then normalize each sequence by its maximum absolute value."""
    if length < 1:
        raise InvalidInputError(f"length must be positive, got {length}")
    theta = 10.0 * np.pi * rng.random(length)
    r = theta + 1.5 * rng.random(length)
    if kind == "archimedean":
        xr = r * np.sin(theta)
        yr = r * np.cos(theta)
    elif kind == "hyperbolic":
        xr = r * np.sinh(theta)
        yr = r * np.cosh(theta)
    else:
        raise InvalidInputError(f"unknown spiral kind {kind!r}")
    mx = np.max(np.abs(xr))
    my = np.max(np.abs(yr))
    xcoef = xr / mx if mx > 0 else xr
    ycoef = yr / my if my > 0 else yr
    return SpiralCoefficients(xcoef=xcoef, ycoef=ycoef)


def strategy_a(
    x_best: Individual,
    gen: int,
    max_gen: int,
    bounds: Bounds,
    dim_range: DimRange,
    rng: np.random.Generator,
    levy: LevyParams = LevyParams(),
    step_span: dict | None = None,
) -> Individual:
    """One newborn that jumps around the best individual.

    Each dimension of each channel moves by an independent damped Lévy step
    scaled by the channel's value span (``step_span``, defaulting to the
    clamping range); values are clamped, then every channel is resized
    (worst mode, driven by the best individual's quality) to an
    independently drawn length.
    """
    if max_gen < 1:
        raise ConfigError(f"max_gen must be at least 1, got {max_gen}")
    damping = 1.0 - (gen / max_gen) ** 2
    quality = None
    if x_best.report is not None and x_best.report.has_quality:
        quality = x_best.report.per_dim_quality
    channels = {}
    for ch, base in x_best.channels.items():
        lo, hi = bounds[ch]
        span = step_span[ch] if step_span is not None else np.asarray(hi) - np.asarray(lo)
        steps = _levy_draws(base.shape[0], levy.lam, rng) * damping
        vals = np.clip(base + span * steps, lo, hi)
        target = int(rng.integers(dim_range.min, dim_range.max + 1))
        q = quality[ch] if quality is not None else np.zeros(base.shape[0])
        channels[ch] = resize_series(vals, target, mode="worst", quality=q, dim_range=dim_range)
    return Individual(channels=channels)


def strategy_b(
    x_b: Individual,
    x_better: Individual,
    d_best: Individual,
    bounds: Bounds,
    rng: np.random.Generator,
) -> tuple[Individual, Individual, Individual]:
    """Three newborns around the member itself, Archimedean spiral paths.

    Working in x_b's frame, the not-worse partner and the optimal dimension
    solution are aligned onto x_b; each newborn draws its own coefficient
    pair per channel and moves along route 1 (toward the partner), route 2
    (toward the optimal dimension solution), or route 3 (their sum).
    """
    if x_better.fitness > x_b.fitness:
        raise InvalidInputError(
            "x_better must not have worse fitness than x_b "
            f"({x_better.fitness} > {x_b.fitness})"
        )
    borns = [{}, {}, {}]
    for ch, base in x_b.channels.items():
        lo, hi = bounds[ch]
        better_diff = matched_values(base, x_better.channels[ch]) - base
        dbest_diff = matched_values(base, d_best.channels[ch]) - base
        # one fresh coefficient pair per newborn
        c1 = spiral_coefficients(base.shape[0], "archimedean", rng)
        c2 = spiral_coefficients(base.shape[0], "archimedean", rng)
        c3 = spiral_coefficients(base.shape[0], "archimedean", rng)
        borns[0][ch] = np.clip(base + c1.xcoef * better_diff, lo, hi)
        borns[1][ch] = np.clip(base + c2.ycoef * dbest_diff, lo, hi)
        borns[2][ch] = np.clip(base + c3.xcoef * better_diff + c3.ycoef * dbest_diff, lo, hi)
    return tuple(Individual(channels=c) for c in borns)


def strategy_c(
    x_c: Individual,
    x_best: Individual,
    d_best: Individual,
    bounds: Bounds,
    rng: np.random.Generator,
) -> tuple[Individual, Individual, Individual]:
    """Three newborns racing toward the best individual and the optimal
    dimension solution, hyperbolic spiral paths.

    The member's values are aligned onto the best individual's frame and
    onto the optimal dimension solution's frame (the two share lengths);
    newborn 1 starts from the best individual, newborn 2 from the optimal
    dimension solution, newborn 3 from the best individual along the summed
    route.
    """
    borns = [{}, {}, {}]
    for ch, best_vals in x_best.channels.items():
        lo, hi = bounds[ch]
        d_vals = d_best.channels[ch]
        diff1 = matched_values(best_vals, x_c.channels[ch]) - best_vals
        diff2 = matched_values(d_vals, x_c.channels[ch]) - d_vals
        # one fresh coefficient pair per newborn
        c1 = spiral_coefficients(best_vals.shape[0], "hyperbolic", rng)
        c2 = spiral_coefficients(best_vals.shape[0], "hyperbolic", rng)
        c3 = spiral_coefficients(best_vals.shape[0], "hyperbolic", rng)
        borns[0][ch] = np.clip(best_vals + c1.xcoef * diff1, lo, hi)
        borns[1][ch] = np.clip(d_vals + c2.ycoef * diff2, lo, hi)
        borns[2][ch] = np.clip(best_vals + c3.xcoef * diff1 + c3.ycoef * diff2, lo, hi)
    return tuple(Individual(channels=c) for c in borns)
