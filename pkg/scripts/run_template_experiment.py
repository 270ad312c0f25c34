#!/usr/bin/env python3
"""Motion-template construction experiment.

Generates a synthetic cycle dataset, runs the variable-dimension search and
the two fixed-dimension baselines on it over several seeds, and prints a
comparison table plus the planted-template oracle fitness.  Result documents
land under --out-dir for plotting.
"""
from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np

import ddw


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--pop", type=int, default=50)
    ap.add_argument("--iters", type=int, default=500)
    ap.add_argument("--cycles", type=int, default=80)
    ap.add_argument("--noise", type=float, default=2.0)
    ap.add_argument("--out-dir", type=str, default="results/template")
    args = ap.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    dataset, planted = ddw.synth_dataset(
        ddw.SynthParams(n_cycles=args.cycles, noise_sd=args.noise)
    )
    oracle = ddw.template_total(ddw.Individual(channels=dict(planted)), dataset)
    print(f"planted-template oracle fitness: {oracle:.3f}")

    finals: dict[str, list[float]] = {"ddw": [], "pso": [], "gwo": []}
    for seed in range(args.seeds):
        rec = ddw.run(
            ddw.TemplateProblem(dataset),
            ddw.EngineConfig(population_size=args.pop, max_iterations=args.iters, seed=seed),
        )
        ddw.write_results(rec, out_dir / f"ddw_seed{seed}")
        finals["ddw"].append(rec.best_fitness[-1])

        for algo in ("pso", "gwo"):
            brec = ddw.run_baseline(
                ddw.BaselineConfig(algorithm=algo, population_size=args.pop, iterations=args.iters),
                ddw.TemplateProblem(dataset),
                seed,
            )
            ddw.write_results(brec, out_dir / f"{algo}_seed{seed}")
            finals[algo].append(brec.best_fitness[-1])
        print(
            f"seed {seed}: ddw {finals['ddw'][-1]:.2f}  "
            f"pso {finals['pso'][-1]:.2f}  gwo {finals['gwo'][-1]:.2f}"
        )

    print("\nalgorithm  mean      min       std")
    for algo, vals in finals.items():
        print(f"{algo:9s}  {np.mean(vals):8.3f}  {np.min(vals):8.3f}  {np.std(vals):8.3f}")
    print(f"\noracle ratio (ddw mean / oracle): {np.mean(finals['ddw']) / oracle:.4f}")


if __name__ == "__main__":
    main()
