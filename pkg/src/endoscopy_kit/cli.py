"""Command-line entry point.

Subcommands: enumerate, dimdata, recover, spectrum, tf, lfun, selftest.
Exit codes: 0 success, 1 a check ran and failed, 2 usage error.

All randomness flows from a single --seed; identical invocations produce
byte-identical reports.  Every report carries the model note: spectra are
synthetic tempered Satake data on the unit circle, and analytic statements
about L-functions are probed through truncated Euler products and
log-weighted partial sums, not analytic continuation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from endoscopy_kit import dimension, lfunctions, spectrum, trace_formula
from endoscopy_kit.endoscopy import EndoDatum, enumerate_elliptic
from endoscopy_kit.satake import SatakePolynomial
from endoscopy_kit.symplectic import rep_label_from_name

SCHEMA = spectrum.SCHEMA
MODEL_NOTE = (
    "synthetic tempered spectrum: Haar unit-circle Satake data; "
    "L-function statements probed via truncated Euler products and "
    "log-weighted partial sums, not analytic continuation"
)

DEFAULT_TOLERANCES = {
    "decomposition_rel": 1e-10,
    "identity_abs": 1e-12,
    "equidistribution_abs": 5e-2,
}


@dataclass
class RunConfig:
    N: int = 2
    seed: int = 1
    prime_bound: int = 1000
    pool: dict[int, int] = field(default_factory=lambda: {2: 2})
    tolerances: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    output: str | None = None
    fmt: str = "json"


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_report(payload: dict, output: str | None) -> None:
    doc = {"schema": SCHEMA, "model": MODEL_NOTE}
    doc.update(payload)
    _emit(json.dumps(doc, indent=2, sort_keys=True, default=str) + "\n", output)


def _parse_pool(text: str) -> dict[int, int]:
    pool: dict[int, int] = {}
    for item in text.split(","):
        deg, _, count = item.partition(":")
        pool[int(deg)] = int(count)
    return pool


def _load_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if getattr(args, "config", None):
        with open(args.config) as fh:
            raw = json.load(fh)
        cfg.N = raw.get("N", cfg.N)
        cfg.seed = raw.get("seed", cfg.seed)
        cfg.prime_bound = raw.get("prime_bound", cfg.prime_bound)
        cfg.pool = {int(k): int(v) for k, v in raw.get("pool", {}).items()} or cfg.pool
        cfg.tolerances.update(raw.get("tolerances", {}))
    for name in ("N", "seed", "prime_bound"):
        flag = getattr(args, name.lower() if name != "N" else "n", None)
        if flag is not None:
            setattr(cfg, name, flag)
    if getattr(args, "pool", None):
        cfg.pool = _parse_pool(args.pool)
    cfg.output = getattr(args, "output", None)
    return cfg


def _store_for(cfg: RunConfig, args: argparse.Namespace) -> spectrum.SpectrumStore:
    path = getattr(args, "spectrum", None)
    if path:
        with open(path) as fh:
            return spectrum.store_from_json(fh.read())
    return spectrum.generate_spectrum(cfg.pool, cfg.prime_bound, cfg.seed)


def random_test_function(
    store: spectrum.SpectrumStore, rng: np.random.Generator, places: int = 2, depth: int = 3
) -> trace_formula.TestFunction:
    """Small random spherical test function: integer trace-power polynomials
    at a few early unramified places."""
    candidates = store.unramified_places[: max(8, places)]
    chosen = rng.choice(len(candidates), size=min(places, len(candidates)), replace=False)
    local = {}
    for pos in sorted(int(i) for i in chosen):
        poly = SatakePolynomial.unit()
        for _ in range(int(rng.integers(1, 3))):
            m = int(rng.integers(1, depth + 1))
            coeff = int(rng.integers(-2, 3))
            poly = poly + SatakePolynomial.variable(m) * Fraction(coeff)
        local[candidates[pos].index] = poly
    return trace_formula.TestFunction(local=local)


def _pick_phi(
    store: spectrum.SpectrumStore, N: int, components: str | None
) -> spectrum.CuspidalParameter:
    census = spectrum.enumerate_phi2(store, N)
    if not census:
        raise SystemExit("spectrum has no parameter of the requested rank")
    if components is None:
        return census[0]
    labels = tuple(sorted(components.split(",")))
    for phi in census:
        if tuple(sorted(phi.key)) == labels:
            return phi
    raise SystemExit(f"no parameter with components {components}")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_enumerate(args: argparse.Namespace) -> int:
    lines = []
    for d in enumerate_elliptic(args.n):
        lines.append(
            json.dumps(
                {"parts": list(d.parts), "k": d.k, "iota": str(d.iota)},
                sort_keys=True,
            )
        )
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_dimdata(args: argparse.Namespace) -> int:
    indices = (
        [int(a) for a in args.a.split(",")] if args.a else list(range(1, args.n + 1))
    )
    rows = [f"# model: {MODEL_NOTE}"]
    header = ["parts", "k"] + [f"a={a}" for a in indices]
    if args.verify_mc:
        header += [f"mc(a={a})" for a in indices]
    rows.append(",".join(header))
    ok = True
    for d in enumerate_elliptic(args.n):
        cells = ["+".join(str(m) for m in d.parts), str(d.k)]
        cells += [str(dimension.dim_data(d, a)) for a in indices]
        if args.verify_mc:
            ests, errs = dimension.mc_dim_data_all(
                d, max(indices), args.samples, args.seed
            )
            for a in indices:
                est, err = ests[a - 1], errs[a - 1]
                cells.append(f"{est:.4f}±{err:.4f}")
                if abs(est - dimension.dim_data(d, a)) > 3 * max(err, 1e-12):
                    ok = False
        rows.append(",".join(cells))
    _emit("\n".join(rows) + "\n", args.output)
    return 0 if ok else 1


def cmd_recover(args: argparse.Namespace) -> int:
    values = {}
    for item in args.values.split(","):
        a, _, v = item.partition("=")
        values[int(a)] = int(v)
    result = dimension.recover_partition(args.n, values)
    if isinstance(result, EndoDatum):
        _json_report({"kind": "recovery", "parts": list(result.parts)}, args.output)
        return 0
    _json_report(
        {
            "kind": "recovery",
            "ambiguous": True,
            "reason": result.reason,
            "matches": [list(d.parts) for d in result.matches],
        },
        args.output,
    )
    return 1


def cmd_spectrum(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    store = spectrum.generate_spectrum(
        cfg.pool, cfg.prime_bound, cfg.seed, ramified=args.ramified
    )
    _emit(spectrum.store_to_json(store) + "\n", args.output)
    return 0


def cmd_tf(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    store = _store_for(cfg, args)
    rng = np.random.default_rng(cfg.seed + 1)
    f = random_test_function(store, rng) if args.random_fn else trace_formula.TestFunction()
    if args.tf_command == "verify-decomp":
        report = trace_formula.verify_decomposition(f, store, cfg.N)
        _json_report({"kind": "decomposition", **report}, cfg.output)
        return 0 if report["passed"] else 1
    rep = rep_label_from_name(args.rep)
    if args.tf_command == "r-limit":
        grid = [int(x) for x in args.x_grid.split(",")]
        values = trace_formula.r_limit_partial_sums(f, rep, store, cfg.N, grid)
        rows = [f"# model: {MODEL_NOTE}", "X,value"]
        rows += [f"{X},{v:.12g}" for X, v in values]
        _emit("\n".join(rows) + "\n", cfg.output)
        return 0
    if args.tf_command == "r-series":
        s = complex(args.s)
        value = trace_formula.r_series(f, rep, store, cfg.N, s, args.nmax)
        _json_report(
            {
                "kind": "r-series",
                "rep": rep.canonical_name(),
                "s": str(s),
                "n_max": args.nmax,
                "value": [value.real, value.imag],
            },
            cfg.output,
        )
        return 0
    raise SystemExit(2)


def cmd_lfun(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    store = _store_for(cfg, args)
    phi = _pick_phi(store, cfg.N, args.components)
    rep = rep_label_from_name(args.rep)
    bound = args.prime_bound or cfg.prime_bound
    if args.lfun_command == "euler":
        value = lfunctions.partial_L(rep, phi, store, bound, complex(args.s))
        _json_report(
            {
                "kind": "euler-product",
                "rep": rep.canonical_name(),
                "components": list(phi.key),
                "s": args.s,
                "prime_bound": bound,
                "value": [value.real, value.imag],
            },
            cfg.output,
        )
        return 0
    if args.lfun_command == "logderiv":
        series = lfunctions.log_deriv_series(rep, phi, store, bound, args.nmax)
        value = series.evaluate(complex(args.s))
        _json_report(
            {
                "kind": "log-derivative",
                "rep": rep.canonical_name(),
                "components": list(phi.key),
                "s": args.s,
                "n_max": args.nmax,
                "terms": len(series.terms),
                "value": [value.real, value.imag],
            },
            cfg.output,
        )
        return 0
    if args.lfun_command == "residue":
        _, phi_h = spectrum.classify(phi)
        norms = store.unramified_norms()
        grid = [int(x) for x in args.x_grid.split(",")] if args.x_grid else [int(norms[-1])]
        rows = [f"# model: {MODEL_NOTE}", "X,cesaro,target"]
        code = 0
        for X in grid:
            cesaro, target = lfunctions.residue_estimate(rep, phi_h, store, X)
            rows.append(f"{X},{cesaro:.8f},{target}")
        cesaro, target = lfunctions.residue_estimate(rep, phi_h, store, grid[-1])
        if abs(cesaro - target) > cfg.tolerances["equidistribution_abs"]:
            code = 1
        _emit("\n".join(rows) + "\n", cfg.output)
        return code
    raise SystemExit(2)


def cmd_selftest(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    checks: list[tuple[str, bool]] = []

    data = enumerate_elliptic(cfg.N)
    checks.append(("iota normalization", all(d.iota * 2 ** (d.k - 1) == 1 for d in data)))
    checks.append(
        (
            "dimension data identities",
            all(
                dimension.dim_data(d, 2) == d.k - 1 if d.N >= 2 else True
                for d in data
            )
            and all(dimension.dim_data(d, 1) == 0 for d in data),
        )
    )
    roundtrip = all(
        dimension.recover_partition(
            cfg.N, {a: dimension.dim_data(d, a) for a in dimension.recovery_indices(cfg.N)}
        )
        == d
        for d in data
    )
    checks.append(("partition recovery round-trip", roundtrip))

    store = spectrum.generate_spectrum(cfg.pool, cfg.prime_bound, cfg.seed)
    checks.append(
        (
            "spectrum serialization round-trip",
            spectrum.store_to_json(spectrum.store_from_json(spectrum.store_to_json(store)))
            == spectrum.store_to_json(store),
        )
    )
    rng = np.random.default_rng(cfg.seed + 1)
    f = random_test_function(store, rng)
    report = trace_formula.verify_decomposition(f, store, cfg.N)
    checks.append(("cuspidal decomposition identity", bool(report["passed"])))

    payload = {
        "kind": "selftest",
        "checks": [{"name": name, "passed": passed} for name, passed in checks],
        "passed": all(p for _, p in checks),
    }
    _json_report(payload, cfg.output)
    return 0 if payload["passed"] else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="endoscopy-kit",
        description="Elliptic endoscopic data, dimension data, synthetic spectra, "
        "and partial L-function limits for odd orthogonal groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, spectrum_source: bool = False) -> None:
        p.add_argument("--n", type=int, default=None, help="rank N")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--prime-bound", dest="prime_bound", type=int, default=None)
        p.add_argument("--pool", type=str, default=None, help="degree:count,...")
        p.add_argument("--config", type=str, default=None, help="JSON config file")
        p.add_argument("--output", type=str, default=None)
        if spectrum_source:
            p.add_argument("--spectrum", type=str, default=None, help="spectrum JSON file")
            p.add_argument(
                "--random-fn",
                action="store_true",
                help="use a seeded random test function instead of the unit",
            )

    p = sub.add_parser("enumerate", help="list the elliptic data of rank N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--output", type=str, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dimdata", help="dimension-data table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=str, default=None, help="comma list of indices")
    p.add_argument("--verify-mc", action="store_true")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--output", type=str, default=None)
    p.set_defaults(func=cmd_dimdata)

    p = sub.add_parser("recover", help="recover a partition from dimension data")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--values", type=str, required=True, help="a=v,a=v,...")
    p.add_argument("--output", type=str, default=None)
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("spectrum", help="generate a synthetic spectrum store")
    common(p)
    p.add_argument("--ramified", type=int, default=0)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("tf", help="trace-formula checks and limits")
    tf_sub = p.add_subparsers(dest="tf_command", required=True)
    q = tf_sub.add_parser("verify-decomp")
    common(q, spectrum_source=True)
    q.set_defaults(func=cmd_tf)
    q = tf_sub.add_parser("r-limit")
    common(q, spectrum_source=True)
    q.add_argument("--rep", type=str, required=True)
    q.add_argument("--x-grid", dest="x_grid", type=str, required=True)
    q.set_defaults(func=cmd_tf)
    q = tf_sub.add_parser("r-series")
    common(q, spectrum_source=True)
    q.add_argument("--rep", type=str, required=True)
    q.add_argument("--s", type=str, default="2")
    q.add_argument("--nmax", type=int, default=8)
    q.set_defaults(func=cmd_tf)

    p = sub.add_parser("lfun", help="partial L-function evaluations")
    lf_sub = p.add_subparsers(dest="lfun_command", required=True)
    for name in ("euler", "logderiv", "residue"):
        q = lf_sub.add_parser(name)
        common(q, spectrum_source=True)
        q.add_argument("--rep", type=str, required=True)
        q.add_argument("--s", type=str, default="2")
        q.add_argument("--nmax", type=int, default=8)
        q.add_argument("--components", type=str, default=None, help="comma list of labels")
        q.add_argument("--x-grid", dest="x_grid", type=str, default=None)
        q.set_defaults(func=cmd_lfun)

    p = sub.add_parser("selftest", help="quick end-to-end identity checks")
    common(p)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
