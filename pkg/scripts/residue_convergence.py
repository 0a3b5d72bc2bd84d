#!/usr/bin/env python3
"""Cesàro residue estimator vs its integer target.

Classifies one synthetic parameter, then tracks (1/X) sum log Nw *
tr r(c_w) against the trivial-multiplicity target as the cutoff grows.
"""

import argparse
import sys

import numpy as np

from endoscopy_kit import lfunctions, spectrum
from endoscopy_kit.symplectic import rep_label_from_name


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--pool", type=str, default="2:2")
    ap.add_argument("--prime-bound", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=101)
    ap.add_argument("--rep", type=str, default="fund2")
    ap.add_argument("--points", type=int, default=8)
    args = ap.parse_args()

    pool = {int(k): int(v) for k, v in (kv.split(":") for kv in args.pool.split(","))}
    store = spectrum.generate_spectrum(pool, args.prime_bound, args.seed)
    phi = spectrum.enumerate_phi2(store, args.n)[0]
    d, phi_h = spectrum.classify(phi)
    rep = rep_label_from_name(args.rep)

    print(f"# datum {d.parts}, components {phi.key}")
    print("X,cesaro,target,error")
    grid = np.unique(
        np.logspace(3, np.log10(args.prime_bound), args.points).astype(int)
    )
    for X in grid:
        cesaro, target = lfunctions.residue_estimate(rep, phi_h, store, int(X))
        print(f"{X},{cesaro:.6f},{target},{cesaro - target:+.6f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
