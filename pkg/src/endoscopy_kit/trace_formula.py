"""Test-function calculus: cuspidal sums, stable transfer, and prime limits.

Test functions are restricted products: the unit spherical element at all
but finitely many places, explicit trace-power polynomials at a finite set
of unramified places, and free value tables at the ramified places.  The
stable transfer to a block datum is the substitution T_m -> sum of block
trace variables; by construction the two evaluation routes (transfer then
evaluate on blocks, or evaluate the original function at the embedded
class) agree identically, which is what makes the weighted regrouping of
the cuspidal sum over elliptic data an exact identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from endoscopy_kit.endoscopy import EndoDatum, enumerate_elliptic
from endoscopy_kit.satake import SatakePolynomial, h_r
from endoscopy_kit.spectrum import (
    CuspidalParameter,
    SpectrumStore,
    StarPrimitiveParameter,
    enumerate_phi2,
    enumerate_star_prim,
)
from endoscopy_kit.symplectic import RepLabel, char_batch

# key for ramified value tables: the sorted component labels of a parameter
ParamKey = tuple[str, ...]


@dataclass(frozen=True)
class TestFunction:
    """A spherical test function on the big group.

    local maps place index -> single-block SatakePolynomial; every other
    unramified place carries the unit.  ramified_values[place][key] is the
    free local value at a ramified place on the parameter with that key
    (default 1.0 when absent).
    """

    ramified: frozenset[int] = frozenset()
    local: Mapping[int, SatakePolynomial] = field(default_factory=dict)
    ramified_values: Mapping[int, Mapping[ParamKey, float]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for idx, poly in self.local.items():
            if idx in self.ramified:
                raise ValueError(f"place {idx} is ramified; no spherical component there")
            if poly.blocks != 1:
                raise ValueError("local polynomials on the big group have one block")

    def local_value(self, idx: int, key: ParamKey) -> float:
        return float(self.ramified_values.get(idx, {}).get(key, 1.0))


@dataclass(frozen=True)
class HTestFunction:
    """The transfer of a test function to the block group of a datum."""

    datum: EndoDatum
    ramified: frozenset[int] = frozenset()
    local: Mapping[int, SatakePolynomial] = field(default_factory=dict)
    ramified_values: Mapping[int, Mapping[ParamKey, float]] = field(default_factory=dict)

    def local_value(self, idx: int, key: ParamKey) -> float:
        return float(self.ramified_values.get(idx, {}).get(key, 1.0))


def eval_fG(f: TestFunction, phi: CuspidalParameter, store: SpectrumStore) -> float:
    """Product over places of local evaluations at the Satake classes of phi."""
    value = 1.0
    for idx, poly in f.local.items():
        row = store.row_of_place(idx)
        value *= poly.evaluate([phi.satake(row)])
    for idx in f.ramified:
        value *= f.local_value(idx, phi.key)
    return value


def eval_fH(
    fh: HTestFunction, phi_h: StarPrimitiveParameter, store: SpectrumStore
) -> float:
    """Evaluation on the block group: substitute the per-block classes."""
    if phi_h.datum != fh.datum:
        raise ValueError("parameter datum does not match the test function's datum")
    value = 1.0
    for idx, poly in fh.local.items():
        row = store.row_of_place(idx)
        value *= poly.evaluate(phi_h.block_classes(row))
    for idx in fh.ramified:
        value *= fh.local_value(idx, phi_h.key)
    return value


def transfer(f: TestFunction, d: EndoDatum) -> HTestFunction:
    """Stable transfer to the datum: T_m -> sum of block trace variables.

    Unit goes to unit; ramified value tables pass through unchanged (the
    transferred local values at ramified places are the values of f on the
    composed parameter, which has the same key).
    """
    k = d.k
    return HTestFunction(
        datum=d,
        ramified=f.ramified,
        local={idx: poly.spread(k) for idx, poly in f.local.items()},
        ramified_values=f.ramified_values,
    )


def modify(f: TestFunction, r: RepLabel, n: int, w: int) -> TestFunction:
    """Multiply the local component at place index w by h_r(r, n)."""
    if w in f.ramified:
        raise ValueError(f"place {w} is ramified; cannot modify there")
    local = dict(f.local)
    base = local.get(w, SatakePolynomial.unit())
    local[w] = base * h_r(r, n)
    return TestFunction(ramified=f.ramified, local=local, ramified_values=f.ramified_values)


def s_cusp(f: TestFunction, store: SpectrumStore, N: int) -> float:
    """Cuspidal sum: sum over parameters of 2^{1-k} times the evaluation."""
    return sum(
        float(phi.weight) * eval_fG(f, phi, store) for phi in enumerate_phi2(store, N)
    )


def star_p(
    fh: HTestFunction, d: EndoDatum, store: SpectrumStore
) -> float:
    """Primitive sum on the datum: unweighted sum over its primitive parameters."""
    return sum(eval_fH(fh, phi_h, store) for phi_h in enumerate_star_prim(store, d))


def verify_decomposition(f: TestFunction, store: SpectrumStore, N: int) -> dict:
    """Compare the cuspidal sum with its weighted regrouping over elliptic data."""
    lhs = s_cusp(f, store, N)
    terms = []
    rhs = 0.0
    for d in enumerate_elliptic(N):
        contribution = float(d.iota) * star_p(transfer(f, d), d, store)
        terms.append({"parts": list(d.parts), "iota": str(d.iota), "value": contribution})
        rhs += contribution
    abs_err = abs(lhs - rhs)
    tol = 1e-10 * (1.0 + abs(lhs))
    return {
        "lhs": lhs,
        "rhs": rhs,
        "terms": terms,
        "abs_err": abs_err,
        "tol": tol,
        "passed": abs_err <= tol,
    }


# ---------------------------------------------------------------------------
# prime-indexed limits
# ---------------------------------------------------------------------------


def _phi_weights(
    f: TestFunction, store: SpectrumStore, N: int
) -> list[tuple[CuspidalParameter, float]]:
    return [
        (phi, float(phi.weight) * eval_fG(f, phi, store))
        for phi in enumerate_phi2(store, N)
    ]


def _embedded_angles(phi: CuspidalParameter) -> np.ndarray:
    """(places, N) angle rows of the embedded Satake classes (unsorted)."""
    return np.hstack([p.angles for p in phi.components])


def r_limit_partial_sums(
    f: TestFunction,
    r: RepLabel,
    store: SpectrumStore,
    N: int,
    X_grid: Sequence[int],
) -> list[tuple[int, float]]:
    """(1/X) * sum over primes Nw <= X of log(Nw) * s_cusp(f modified at w).

    Computed with the sums interchanged: the parameter pool is finite, so
    the prime sum distributes over parameters and vectorizes.
    """
    norms = store.unramified_norms()
    if max(X_grid) > store.primes_up_to:
        raise ValueError("X grid exceeds the generated prime range")
    logs = np.log(norms.astype(float))
    totals = np.zeros(len(norms))
    for phi, wval in _phi_weights(f, store, N):
        if wval == 0.0:
            continue
        traces = char_batch(r, _embedded_angles(phi))
        totals += wval * logs * traces
    cum = np.cumsum(totals)
    out = []
    for X in X_grid:
        pos = int(np.searchsorted(norms, X, side="right"))
        out.append((int(X), float(cum[pos - 1] / X) if pos > 0 else 0.0))
    return out


def r_series_coefficients(
    f: TestFunction,
    r: RepLabel,
    store: SpectrumStore,
    N: int,
    n_max: int,
    prime_bound: int | None = None,
) -> dict[tuple[int, int], float]:
    """Coefficient map (place index, n) -> log Nw * sum_phi weight f^G(phi) tr(r(c^n))."""
    norms = store.unramified_norms()
    bound = prime_bound if prime_bound is not None else store.primes_up_to
    keep = norms <= bound
    places = [w for w, k in zip(store.unramified_places, keep) if k]
    logs = np.log(norms[keep].astype(float))
    acc = np.zeros((len(places), n_max))
    for phi, wval in _phi_weights(f, store, N):
        if wval == 0.0:
            continue
        angles = _embedded_angles(phi)[keep]
        for n in range(1, n_max + 1):
            acc[:, n - 1] += wval * char_batch(r, angles, m=n)
    coeffs: dict[tuple[int, int], float] = {}
    for i, wpl in enumerate(places):
        for n in range(1, n_max + 1):
            coeffs[(wpl.index, n)] = float(logs[i] * acc[i, n - 1])
    return coeffs


def r_series(
    f: TestFunction,
    r: RepLabel,
    store: SpectrumStore,
    N: int,
    s: complex,
    n_max: int,
    prime_bound: int | None = None,
) -> complex:
    """Truncated double Dirichlet sum sum_{w,n} log Nw / Nw^{ns} * s_cusp(modified f)."""
    norms = store.unramified_norms()
    bound = prime_bound if prime_bound is not None else store.primes_up_to
    keep = norms <= bound
    kept = norms[keep].astype(float)
    logs = np.log(kept)
    total = 0.0 + 0.0j
    for phi, wval in _phi_weights(f, store, N):
        if wval == 0.0:
            continue
        angles = _embedded_angles(phi)[keep]
        for n in range(1, n_max + 1):
            traces = char_batch(r, angles, m=n)
            damping = np.exp(-n * complex(s) * logs)  # Nw^{-ns}
            total += wval * complex((logs * traces * damping).sum())
    return total


def r_series_direct(
    f: TestFunction,
    r: RepLabel,
    store: SpectrumStore,
    N: int,
    s: complex,
    n_max: int,
    prime_bound: int,
) -> complex:
    """Definitional evaluation (no interchange): s_cusp of each modified function.

    Slow; used as the oracle for r_series on small stores.
    """
    total = 0.0 + 0.0j
    for w in store.unramified_places:
        if w.norm > prime_bound:
            continue
        for n in range(1, n_max + 1):
            g = modify(f, r, n, w.index)
            total += math.log(w.norm) / (w.norm ** (n * s)) * s_cusp(g, store, N)
    return total


def theta_partial_sums(store: SpectrumStore, X_grid: Sequence[int]) -> list[tuple[int, float]]:
    """(1/X) * sum_{Nw <= X} log Nw, the Chebyshev normalization baseline."""
    norms = store.unramified_norms()
    logs = np.log(norms.astype(float))
    cum = np.cumsum(logs)
    out = []
    for X in X_grid:
        pos = int(np.searchsorted(norms, X, side="right"))
        out.append((int(X), float(cum[pos - 1] / X) if pos > 0 else 0.0))
    return out
