#!/usr/bin/env python3
"""Convergence of the log-weighted partial-sum estimator.

For each representation, emit a CSV of (1/X) sum_{Nw <= X} log Nw *
S_cusp(f modified at w) over a log-spaced X grid, averaged over several
independently seeded spectra.  The std column should decay toward 0; the
fund2 column should flatten at the weighted trivial multiplicity.
"""

import argparse
import sys

import numpy as np

from endoscopy_kit import spectrum, trace_formula
from endoscopy_kit.symplectic import rep_label_from_name


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--pool", type=str, default="2:2,4:1")
    ap.add_argument("--prime-bound", type=int, default=10**6)
    ap.add_argument("--spectra", type=int, default=10)
    ap.add_argument("--seed", type=int, default=101)
    ap.add_argument("--reps", type=str, default="std,fund2")
    ap.add_argument("--points", type=int, default=10)
    args = ap.parse_args()

    pool = {int(k): int(v) for k, v in (kv.split(":") for kv in args.pool.split(","))}
    grid = np.unique(
        np.logspace(3, np.log10(args.prime_bound), args.points).astype(int)
    )
    reps = [rep_label_from_name(name) for name in args.reps.split(",")]

    acc = {r.canonical_name(): np.zeros(len(grid)) for r in reps}
    for i in range(args.spectra):
        store = spectrum.generate_spectrum(pool, args.prime_bound, args.seed + i)
        f = trace_formula.TestFunction()
        for r in reps:
            vals = trace_formula.r_limit_partial_sums(f, r, store, args.n, grid)
            acc[r.canonical_name()] += np.array([v for _, v in vals])

    print("X," + ",".join(acc))
    for j, X in enumerate(grid):
        row = ",".join(f"{acc[name][j] / args.spectra:.6f}" for name in acc)
        print(f"{X},{row}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
