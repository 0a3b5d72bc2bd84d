"""Dimension data: trivial-isotypic multiplicities of restricted representations.

For a datum with blocks Sp(m_1) x ... x Sp(m_k) inside Sp(2N),
Lambda^b(std) of a single Sp(2n) block contains the trivial representation
exactly once when b is even, 0 <= b <= 2n (Lambda^b = r_b + r_{b-2} + ...,
and Lambda^b ~ Lambda^{2n-b}).  Hence the trivial multiplicity of
Lambda^a(std) restricted to the block product counts compositions of a
into even parts a_i with 0 <= a_i <= m_i, and the multiplicity for the
a-th fundamental representation is the difference of consecutive counts.

A seeded Monte-Carlo oracle cross-checks the closed form: the Haar average
of a character over the block product equals the trivial multiplicity
(Schur orthogonality).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from endoscopy_kit.endoscopy import EndoDatum, enumerate_elliptic
from endoscopy_kit.haar import sample_elementary


@dataclass(frozen=True)
class DimDataVector:
    """m(r_a) for a = 1..N of one datum."""

    N: int
    values: tuple[int, ...]  # values[a-1] = m(r_a)

    def __getitem__(self, a: int) -> int:
        if not 1 <= a <= self.N:
            raise KeyError(a)
        return self.values[a - 1]


@dataclass(frozen=True)
class AmbiguityReport:
    """Outcome of a partition recovery that did not have a unique match."""

    N: int
    probed: tuple[int, ...]  # the indices a that were compared
    matches: tuple[EndoDatum, ...]

    @property
    def reason(self) -> str:
        return "no match" if not self.matches else "multiple matches"


def mult_trivial_lambda(d: EndoDatum, a: int) -> int:
    """Trivial multiplicity of Lambda^a(std) restricted to the datum's blocks."""
    if a < 0 or a > 2 * d.N:
        raise ValueError(f"exterior power index {a} out of range for Sp({2 * d.N})")
    if a % 2 != 0:
        return 0
    # count compositions of a into even a_i with 0 <= a_i <= m_i
    counts = [0] * (a + 1)
    counts[0] = 1
    for m in d.parts:
        nxt = [0] * (a + 1)
        for total in range(0, a + 1, 2):
            if counts[total] == 0:
                continue
            for ai in range(0, min(m, a - total) + 1, 2):
                nxt[total + ai] += counts[total]
        counts = nxt
    return counts[a]


def dim_data(d: EndoDatum, a: int) -> int:
    """Trivial multiplicity of the a-th fundamental representation, 1 <= a <= N."""
    if not 1 <= a <= d.N:
        raise ValueError(f"index {a} out of range for rank {d.N}")
    low = mult_trivial_lambda(d, a - 2) if a >= 2 else 0
    return mult_trivial_lambda(d, a) - low


def dim_data_vector(d: EndoDatum) -> DimDataVector:
    return DimDataVector(d.N, tuple(dim_data(d, a) for a in range(1, d.N + 1)))


def _sample_block_elementary(
    d: EndoDatum, samples: int, seed: int, amax: int
) -> np.ndarray:
    """(samples, amax+1) elementary-symmetric rows of the embedded class.

    Each block gets an independent child seed; the block generating
    polynomials multiply (truncated at degree amax).
    """
    children = np.random.SeedSequence(seed).spawn(len(d.parts))
    coeffs = np.zeros((samples, amax + 1))
    coeffs[:, 0] = 1.0
    for m, child in zip(d.parts, children):
        rng = np.random.default_rng(child)
        block = sample_elementary(m // 2, samples, rng, amax=min(amax, m))
        nxt = np.zeros_like(coeffs)
        for j in range(block.shape[1]):
            nxt[:, j:] += block[:, j : j + 1] * coeffs[:, : amax + 1 - j]
        coeffs = nxt
    return coeffs


def mc_dim_data_oracle(
    d: EndoDatum, a: int, samples: int, seed: int
) -> tuple[float, float]:
    """(estimate, stderr) for dim_data(d, a) by Haar averaging the character."""
    est, err = mc_dim_data_all(d, a, samples, seed)
    return est[a - 1], err[a - 1]


def mc_dim_data_all(
    d: EndoDatum, amax: int, samples: int, seed: int
) -> tuple[np.ndarray, np.ndarray]:
    """Monte-Carlo estimates for dim_data(d, a), a = 1..amax, sharing samples.

    Returns (estimates, standard errors), each of length amax.
    """
    if samples < 10_000:
        raise ValueError("need at least 10^4 samples")
    if not 1 <= amax <= d.N:
        raise ValueError(f"index {amax} out of range for rank {d.N}")
    e = _sample_block_elementary(d, samples, seed, amax)
    ests = np.empty(amax)
    errs = np.empty(amax)
    for a in range(1, amax + 1):
        vals = e[:, a] - (e[:, a - 2] if a >= 2 else 0.0)
        ests[a - 1] = vals.mean()
        errs[a - 1] = vals.std(ddof=1) / math.sqrt(samples)
    return ests, errs


def recovery_indices(N: int) -> tuple[int, ...]:
    """The probe range a = 2, 4, ..., 2*floor(N/2)."""
    return tuple(range(2, 2 * (N // 2) + 1, 2))


def recover_partition(
    N: int, values: Mapping[int, int]
) -> EndoDatum | AmbiguityReport:
    """Find the datum whose dimension data match `values` on the probe range.

    Brute force over all even partitions of 2N; returns an AmbiguityReport
    (never a guess) when zero or several partitions match.
    """
    probed = recovery_indices(N)
    missing = [a for a in probed if a not in values]
    if missing:
        raise ValueError(f"values missing for indices {missing}")
    matches = [
        d
        for d in enumerate_elliptic(N)
        if all(dim_data(d, a) == values[a] for a in probed)
    ]
    if len(matches) == 1:
        return matches[0]
    return AmbiguityReport(N, probed, tuple(matches))
