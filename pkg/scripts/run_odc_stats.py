#!/usr/bin/env python3
"""Optimal-dimension-collection statistics over repeated runs.

Repeats the template search on a synthetic dataset and reports how often the
collected solution beats all, some, or none of the elite stratum, per
iteration and overall (the best/better/worst protocol).
"""
from __future__ import annotations

import argparse
from pathlib import Path

import numpy as np

import ddw


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=10)
    ap.add_argument("--pop", type=int, default=50)
    ap.add_argument("--iters", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=str, default="results/odc_stats.csv")
    args = ap.parse_args()

    dataset, _ = ddw.synth_dataset(ddw.SynthParams())
    per_iter = np.zeros((args.iters, 3))
    for r in range(args.repeats):
        rec = ddw.run(
            ddw.TemplateProblem(dataset),
            ddw.EngineConfig(population_size=args.pop, max_iterations=args.iters, seed=args.seed + r),
        )
        for i, cls in enumerate(rec.odc_classes):
            per_iter[i, ("best", "better", "worst").index(cls)] += 1
        st = rec.odc_stats()["rates"]
        print(f"repeat {r}: best {st['best']:.3f}  better {st['better']:.3f}  worst {st['worst']:.3f}")

    rates = per_iter / args.repeats
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w") as fh:
        fh.write("iteration,best_rate,better_rate,worst_rate\n")
        for i in range(args.iters):
            fh.write(f"{i + 1},{rates[i, 0]!r},{rates[i, 1]!r},{rates[i, 2]!r}\n")
    mean = rates.mean(axis=0)
    print(f"\nglobal mean rates: best {mean[0]:.4f}  better {mean[1]:.4f}  worst {mean[2]:.4f}")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
