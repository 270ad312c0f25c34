"""Command-line interface.

Subcommands:
  synth      generate a synthetic cycle dataset and write it as CSV
  template   search for a motion template over a dataset file
  bench      run ddw / pso / gwo on one of the 23 benchmark functions
  odc-stats  repeated runs emitting per-iteration best/better/worst rates

Exit codes: 0 success, 2 usage error, 3 data validation error, 4 runtime
error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from .baselines import BaselineConfig, run_baseline
from .benchmarks import FUNCTION_IDS, eval_benchmark, get_problem
from .engine import BlackboxProblem, EngineConfig, TemplateProblem, run
from .errors import ConfigError, DataFormatError, DataValidationError, DDWError, InvalidInputError
from .gaitio import SynthParams, load_dataset, synth_dataset, write_dataset, write_results

USAGE_ERROR, DATA_ERROR, RUNTIME_ERROR = 2, 3, 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ddw", description="Variable-dimension template search and benchmark runner"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate a synthetic cycle dataset")
    p.add_argument("--cycles", type=int, default=80)
    p.add_argument("--base-len", type=int, default=60)
    p.add_argument("--jitter", type=int, default=1)
    p.add_argument("--noise", type=float, default=2.0)
    p.add_argument("--channels", type=str, default=",".join(SynthParams().channels))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=str, required=True)

    p = sub.add_parser("template", help="search for a motion template over a dataset")
    p.add_argument("--data", type=str, required=True)
    p.add_argument("--pop", type=int, default=50)
    p.add_argument("--iters", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=str, required=True)

    p = sub.add_parser("bench", help="run an optimizer on a benchmark function")
    p.add_argument("--fn", type=str, required=True, choices=list(FUNCTION_IDS))
    p.add_argument("--algo", type=str, default="ddw", choices=["ddw", "pso", "gwo"])
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--pop", type=int, default=50)
    p.add_argument("--iters", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=str, required=True)

    p = sub.add_parser("odc-stats", help="per-iteration dimension-collection statistics")
    p.add_argument("--data", type=str, required=True)
    p.add_argument("--pop", type=int, default=50)
    p.add_argument("--iters", type=int, default=500)
    p.add_argument("--repeats", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=str, required=True)
    return parser


def _cmd_synth(args) -> int:
    params = SynthParams(
        n_cycles=args.cycles,
        channels=tuple(c.strip() for c in args.channels.split(",") if c.strip()),
        base_length=args.base_len,
        length_jitter=args.jitter,
        noise_sd=args.noise,
        seed=args.seed,
    )
    dataset, _ = synth_dataset(params)
    write_dataset(dataset, args.out)
    print(f"wrote {len(dataset.cycles)} cycles x {len(dataset.channel_names)} channels to {args.out}")
    return 0


def _cmd_template(args) -> int:
    dataset = load_dataset(args.data)
    config = EngineConfig(population_size=args.pop, max_iterations=args.iters, seed=args.seed)
    record = run(TemplateProblem(dataset), config)
    json_path, csv_path = write_results(record, args.out)
    print(f"final fitness {record.best.fitness:.6g} after {record.iterations} iterations")
    print(f"wrote {json_path} and {csv_path}")
    return 0


def _point_noise_rng(seed: int, x: np.ndarray) -> np.random.Generator:
    # noise keyed by the point itself: reproducible per seed and independent
    # of evaluation order
    digest = np.frombuffer(np.ascontiguousarray(x).tobytes(), dtype=np.uint64)
    return np.random.default_rng([seed, *(int(v) for v in digest)])


def _cmd_bench(args) -> int:
    problem = get_problem(args.fn, args.dim)
    if args.algo == "ddw":
        if args.fn == "F7":
            objective = lambda x: eval_benchmark(
                "F7", x, rng=_point_noise_rng(args.seed, x), dim=problem.dim
            )
        else:
            objective = problem
        bb = BlackboxProblem(
            objective=objective, dim=problem.dim, lower=problem.lower, upper=problem.upper
        )
        config = EngineConfig(population_size=args.pop, max_iterations=args.iters, seed=args.seed)
        record = run(bb, config)
    else:
        config = BaselineConfig(
            algorithm=args.algo, population_size=args.pop, iterations=args.iters
        )
        record = run_baseline(config, problem, args.seed)
    json_path, csv_path = write_results(record, args.out)
    print(
        f"{args.algo} on {args.fn} (dim {problem.dim}): best {record.best_fitness[-1]:.6g}, "
        f"known optimum {problem.optimum:.6g}"
    )
    print(f"wrote {json_path} and {csv_path}")
    return 0


def _cmd_odc_stats(args) -> int:
    dataset = load_dataset(args.data)
    per_iter = np.zeros((args.iters, 3))
    for r in range(args.repeats):
        config = EngineConfig(
            population_size=args.pop, max_iterations=args.iters, seed=args.seed + r
        )
        record = run(TemplateProblem(dataset), config)
        for i, cls in enumerate(record.odc_classes):
            per_iter[i, ("best", "better", "worst").index(cls)] += 1
    rates = per_iter / args.repeats

    prefix = Path(args.out)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    csv_path = prefix.with_suffix(prefix.suffix + ".csv")
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["iteration", "best_rate", "better_rate", "worst_rate"])
        for i in range(args.iters):
            writer.writerow([i + 1, repr(rates[i, 0]), repr(rates[i, 1]), repr(rates[i, 2])])
    summary = {
        "repeats": args.repeats,
        "iterations": args.iters,
        "population_size": args.pop,
        "seed": args.seed,
        "mean_rates": {
            "best": float(rates[:, 0].mean()),
            "better": float(rates[:, 1].mean()),
            "worst": float(rates[:, 2].mean()),
        },
    }
    json_path = prefix.with_suffix(prefix.suffix + ".json")
    json_path.write_text(json.dumps(summary, indent=2) + "\n")
    print(
        "mean rates: best {best:.4f}, better {better:.4f}, worst {worst:.4f}".format(
            **summary["mean_rates"]
        )
    )
    print(f"wrote {json_path} and {csv_path}")
    return 0


_COMMANDS = {
    "synth": _cmd_synth,
    "template": _cmd_template,
    "bench": _cmd_bench,
    "odc-stats": _cmd_odc_stats,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (DataFormatError, DataValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except (ConfigError, InvalidInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (DDWError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return RUNTIME_ERROR


if __name__ == "__main__":
    sys.exit(main())
