#!/usr/bin/env python3
"""Monte-Carlo cross-check of the dimension-data table.

Prints exact values next to integrator estimates for every even partition
at the requested rank.
"""

import argparse
import sys

from endoscopy_kit import dimension
from endoscopy_kit.endoscopy import enumerate_elliptic


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--samples", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    worst = 0.0
    for d in enumerate_elliptic(args.n):
        ests, errs = dimension.mc_dim_data_all(d, args.n, args.samples, args.seed)
        for a in range(1, args.n + 1):
            exact = dimension.dim_data(d, a)
            dev = abs(ests[a - 1] - exact) / max(errs[a - 1], 1e-12)
            worst = max(worst, dev)
            print(
                f"{'+'.join(map(str, d.parts)):>12}  a={a}  exact={exact}  "
                f"mc={ests[a - 1]:+.4f}±{errs[a - 1]:.4f}  ({dev:.2f} sigma)"
            )
    print(f"worst deviation: {worst:.2f} sigma")
    return 0 if worst < 4 else 1


if __name__ == "__main__":
    sys.exit(main())
