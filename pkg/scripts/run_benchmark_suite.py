#!/usr/bin/env python3
"""Run the classical benchmark suite with ddw, pso, and gwo.

Prints per-function best/mean over the requested seeds and the gap to the
catalogued optimum.  Heavier high-dimensional families default to a reduced
dimensionality so the whole table finishes in minutes; raise --dim for the
conventional 30-dimensional setting.
"""
from __future__ import annotations

import argparse

import numpy as np

import ddw


def run_one(fn_id: str, algo: str, dim: int | None, pop: int, iters: int, seed: int) -> float:
    problem = ddw.get_problem(fn_id, dim)
    if algo == "ddw":
        bb = ddw.BlackboxProblem(
            objective=problem, dim=problem.dim, lower=problem.lower, upper=problem.upper
        )
        rec = ddw.run(bb, ddw.EngineConfig(population_size=pop, max_iterations=iters, seed=seed))
    else:
        rec = ddw.run_baseline(
            ddw.BaselineConfig(algorithm=algo, population_size=pop, iterations=iters),
            problem,
            seed,
        )
    return rec.best_fitness[-1]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--functions", type=str, default="F1,F9,F10,F14,F16,F17,F18,F21")
    ap.add_argument("--algos", type=str, default="ddw,pso,gwo")
    ap.add_argument("--dim", type=int, default=10, help="dimensionality for F1-F13")
    ap.add_argument("--pop", type=int, default=50)
    ap.add_argument("--iters", type=int, default=500)
    ap.add_argument("--seeds", type=int, default=3)
    args = ap.parse_args()

    fns = [f.strip() for f in args.functions.split(",") if f.strip()]
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]

    print(f"{'fn':5s} {'optimum':>12s}  " + "  ".join(f"{a:>12s}" for a in algos))
    for fn in fns:
        problem = ddw.get_problem(fn, args.dim if fn in [f"F{i}" for i in range(1, 14)] else None)
        row = []
        for algo in algos:
            vals = [
                run_one(fn, algo, problem.dim, args.pop, args.iters, seed)
                for seed in range(args.seeds)
            ]
            row.append(np.mean(vals))
        cells = "  ".join(f"{v:12.4g}" for v in row)
        print(f"{fn:5s} {problem.optimum:12.4g}  {cells}")


if __name__ == "__main__":
    main()
