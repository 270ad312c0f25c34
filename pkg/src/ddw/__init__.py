"""Dynamic dimension wrapping: population search over variable-length series.

Candidate solutions are collections of named channels whose lengths are
drawn independently, so the search space is a union of fixed-dimension
subspaces.  Cross-dimensional fitness comes from squared-difference DTW
mappings; the optimal-dimension merge, three stratified update strategies,
and an elitist selection step drive the iteration loop.  A benchmark suite
and two fixed-dimension baselines support comparison runs.
"""

from .baselines import BaselineConfig, run_baseline, run_gwo, run_pso
from .benchmarks import (
    FUNCTION_IDS,
    BenchmarkProblem,
    eval_benchmark,
    get_problem,
    known_optimum,
)
from .dataset import (
    ChannelBounds,
    Cycle,
    DimRange,
    Individual,
    ReferenceDataset,
    average_reference,
    channel_bounds,
    init_population,
    modal_dimension,
    resize_series,
)
from .engine import (
    BlackboxProblem,
    EngineConfig,
    RunRecord,
    TemplateProblem,
    partition,
    partition_sizes,
    run,
    select_next,
)
from .errors import (
    ConfigError,
    DataFormatError,
    DataValidationError,
    DDWError,
    InvalidInputError,
    InvalidStateError,
)
from .fitness import FitnessReport, blackbox_fitness, template_fitness, template_total
from .gaitio import (
    DEFAULT_CHANNELS,
    SynthParams,
    load_dataset,
    read_results,
    synth_dataset,
    write_dataset,
    write_results,
)
from .mapping import MappingResult, as_series, dtw_best_route, map_series, matched_values
from .odc import OptimalDimensionSolution, odc_collect, odc_merge, odc_probe_blackbox
from .strategies import (
    LevyParams,
    SpiralCoefficients,
    levy_step,
    spiral_coefficients,
    strategy_a,
    strategy_b,
    strategy_c,
)

__version__ = "0.1.0"

__all__ = [
    "BaselineConfig",
    "BenchmarkProblem",
    "BlackboxProblem",
    "ChannelBounds",
    "ConfigError",
    "Cycle",
    "DDWError",
    "DEFAULT_CHANNELS",
    "DataFormatError",
    "DataValidationError",
    "DimRange",
    "EngineConfig",
    "FUNCTION_IDS",
    "FitnessReport",
    "Individual",
    "InvalidInputError",
    "InvalidStateError",
    "LevyParams",
    "MappingResult",
    "OptimalDimensionSolution",
    "ReferenceDataset",
    "RunRecord",
    "SpiralCoefficients",
    "SynthParams",
    "TemplateProblem",
    "as_series",
    "average_reference",
    "blackbox_fitness",
    "channel_bounds",
    "dtw_best_route",
    "eval_benchmark",
    "get_problem",
    "init_population",
    "known_optimum",
    "levy_step",
    "load_dataset",
    "map_series",
    "matched_values",
    "modal_dimension",
    "odc_collect",
    "odc_merge",
    "odc_probe_blackbox",
    "partition",
    "partition_sizes",
    "read_results",
    "resize_series",
    "run",
    "run_baseline",
    "run_gwo",
    "run_pso",
    "select_next",
    "spiral_coefficients",
    "strategy_a",
    "strategy_b",
    "strategy_c",
    "synth_dataset",
    "template_fitness",
    "template_total",
    "write_dataset",
    "write_results",
]
