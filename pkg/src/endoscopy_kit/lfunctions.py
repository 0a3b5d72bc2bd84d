"""Partial L-functions from unit-circle Satake data.

Local factors are det(I - r(c) Nw^{-s})^{-1}, built from the eigenvalue
multiset of r(c).  For the a-th fundamental representation the multiset is
Lambda^a minus Lambda^{a-2}, realized as a numerator/denominator pair so
that no floating-point multiset subtraction is needed.  Analytic
continuation is out of reach for truncated Euler products; residues at
s = 1 are probed by the log-weighted partial-sum (Cesaro) estimator
instead, which converges to the trivial-isotypic multiplicity for
Haar-distributed data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from endoscopy_kit.dimension import dim_data, mult_trivial_lambda
from endoscopy_kit.spectrum import (
    CuspidalParameter,
    SpectrumStore,
    StarPrimitiveParameter,
    compose,
)
from endoscopy_kit.symplectic import (
    RepLabel,
    SemisimpleClass,
    char_batch,
    gl_eigenvalues,
    lambda_eigenvalues,
    tensor_class,
)

POLE = complex(math.inf, 0.0)
_POLE_TOL = 1e-15


@dataclass(frozen=True)
class LocalLFactor:
    """Euler factor data at one place: eigenvalues of r(c) and the norm.

    The eigenvalue multiset is stored as numerator/denominator lists: the
    factor at s is prod(1 - mu x) over cancel divided by prod(1 - mu x)
    over eigenvalues, x = norm^{-s}.
    """

    norm: int
    eigenvalues: tuple[complex, ...]
    cancel: tuple[complex, ...] = ()

    def value(self, s: complex) -> complex:
        x = self.norm ** (-complex(s))
        num = 1.0 + 0.0j
        for mu in self.cancel:
            num *= 1.0 - mu * x
        den = 1.0 + 0.0j
        for mu in self.eigenvalues:
            den *= 1.0 - mu * x
        if abs(den) < _POLE_TOL:
            return POLE
        return num / den

    def trace_power(self, n: int) -> float:
        """tr(r(c^n)) = sum mu^n over the (virtual) multiset."""
        t = sum(mu**n for mu in self.eigenvalues) - sum(mu**n for mu in self.cancel)
        return t.real


def rep_eigenvalues(
    r: RepLabel, c: SemisimpleClass
) -> tuple[tuple[complex, ...], tuple[complex, ...]]:
    """(eigenvalues, cancel) pair describing the eigenvalue multiset of r(c)."""
    kind, a = r.normalized()
    eigs = gl_eigenvalues(c)
    if kind == "lambda":
        return tuple(lambda_eigenvalues(eigs, a)), ()
    if not 1 <= a <= c.n:
        raise ValueError(f"fund({a}) undefined on Sp({2 * c.n})")
    return (
        tuple(lambda_eigenvalues(eigs, a)),
        tuple(lambda_eigenvalues(eigs, a - 2)),
    )


def local_factor(r: RepLabel, c: SemisimpleClass, norm: int, s: complex) -> complex:
    """det(I - r(c) norm^{-s})^{-1}; a pole is reported as complex infinity."""
    eigenvalues, cancel = rep_eigenvalues(r, c)
    return LocalLFactor(norm, eigenvalues, cancel).value(s)


def rankin_selberg_factor(
    c1: SemisimpleClass, c2: SemisimpleClass, norm: int, s: complex
) -> complex:
    """Local factor of the pair: det(I - (c1 (x) c2) norm^{-s})^{-1}."""
    eigs = tensor_class(gl_eigenvalues(c1), gl_eigenvalues(c2))
    return LocalLFactor(norm, tuple(eigs)).value(s)


def partial_L(
    r: RepLabel,
    phi: CuspidalParameter,
    store: SpectrumStore,
    prime_bound: int,
    s: complex,
) -> complex:
    """Truncated Euler product over the unramified places with norm <= bound."""
    total = 1.0 + 0.0j
    for row, w in enumerate(store.unramified_places):
        if w.norm > prime_bound:
            break
        factor = local_factor(r, phi.satake(row), w.norm, s)
        if factor == POLE:
            return POLE
        total *= factor
    return total


def verify_lambda2_factorization(
    phi: CuspidalParameter,
    store: SpectrumStore,
    prime_bound: int,
    s: complex,
) -> dict:
    """Per-prime checks of the exterior-square factorizations.

    (1) Lambda^2 of the embedded class = product over blocks of Lambda^2
        factors times pairwise tensor factors (the multiset identity
        Lambda^2(A + B) = Lambda^2 A + Lambda^2 B + A (x) B);
    (2) Lambda^2 factor = fund(2) factor * zeta factor (Lambda^2 std
        splits off one trivial summand).
    """
    lam2 = RepLabel.lam(2)
    fund2 = RepLabel.fund(2)
    triv = RepLabel.trivial()
    max_err_blocks = 0.0
    max_err_split = 0.0
    checked = 0
    for row, w in enumerate(store.unramified_places):
        if w.norm > prime_bound:
            break
        checked += 1
        embedded = phi.satake(row)
        whole = local_factor(lam2, embedded, w.norm, s)
        block_classes = [p.satake(row) for p in phi.components]
        prod = 1.0 + 0.0j
        for c in block_classes:
            prod *= local_factor(lam2, c, w.norm, s)
        for i in range(len(block_classes)):
            for j in range(i + 1, len(block_classes)):
                prod *= rankin_selberg_factor(
                    block_classes[i], block_classes[j], w.norm, s
                )
        max_err_blocks = max(max_err_blocks, abs(whole - prod))
        if embedded.n >= 2:
            split = local_factor(fund2, embedded, w.norm, s) * local_factor(
                triv, embedded, w.norm, s
            )
            max_err_split = max(max_err_split, abs(whole - split))
    return {
        "primes_checked": checked,
        "max_err_block_factorization": max_err_blocks,
        "max_err_split": max_err_split,
        "passed": max_err_blocks <= 1e-12 and max_err_split <= 1e-12,
    }


@dataclass(frozen=True)
class PartialSeries:
    """Truncated Dirichlet series with coefficients log(Nw) tr(r(c_w^n)).

    terms maps (norm, n) to the coefficient; evaluation at s sums
    coefficient / norm^{ns}.
    """

    terms: Mapping[tuple[int, int], float]
    prime_bound: int
    n_max: int

    def evaluate(self, s: complex) -> complex:
        return sum(
            coeff * (norm ** (-n * complex(s)))
            for (norm, n), coeff in self.terms.items()
        )

    def restrict(self, n_lo: int, n_hi: int) -> "PartialSeries":
        kept = {
            (norm, n): c for (norm, n), c in self.terms.items() if n_lo <= n <= n_hi
        }
        return PartialSeries(kept, self.prime_bound, self.n_max)


def log_deriv_series(
    r: RepLabel,
    phi: CuspidalParameter,
    store: SpectrumStore,
    prime_bound: int,
    n_max: int,
) -> PartialSeries:
    """Coefficients of -d/ds log of the truncated partial L-function."""
    terms: dict[tuple[int, int], float] = {}
    for row, w in enumerate(store.unramified_places):
        if w.norm > prime_bound:
            break
        eigenvalues, cancel = rep_eigenvalues(r, phi.satake(row))
        factor = LocalLFactor(w.norm, eigenvalues, cancel)
        logp = math.log(w.norm)
        for n in range(1, n_max + 1):
            terms[(w.norm, n)] = logp * factor.trace_power(n)
    return PartialSeries(terms, prime_bound, n_max)


def fe_split(series: PartialSeries) -> tuple[PartialSeries, PartialSeries]:
    """(n = 1 part, n >= 2 part); the tail converges for Re(s) > 1/2."""
    return series.restrict(1, 1), series.restrict(2, series.n_max)


def residue_target(r: RepLabel, phi_h: StarPrimitiveParameter) -> int:
    """Order of pole at s = 1 predicted for the datum: a trivial multiplicity."""
    kind, a = r.normalized()
    if kind == "lambda":
        return mult_trivial_lambda(phi_h.datum, a)
    return dim_data(phi_h.datum, a)


def residue_estimate(
    r: RepLabel,
    phi_h: StarPrimitiveParameter,
    store: SpectrumStore,
    prime_bound: int,
) -> tuple[float, int]:
    """(Cesaro estimate, integer target) for the residue of the n = 1 series.

    The estimate is (1/X) sum_{Nw <= X} log Nw tr(r(c_w)) at X = prime_bound;
    for Haar-random data it converges to the trivial-isotypic multiplicity.
    """
    norms = store.unramified_norms()
    keep = norms <= prime_bound
    kept = norms[keep].astype(float)
    angles = np.hstack([p.angles for p in compose(phi_h).components])[keep]
    traces = char_batch(r, angles)
    cesaro = float((np.log(kept) * traces).sum() / prime_bound)
    return cesaro, residue_target(r, phi_h)
