"""Rational primes as the places of the synthetic global field."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Place:
    """A finite place: the index-th rational prime, with norm = that prime."""

    index: int  # 1-based
    norm: int
    ramified: bool = False


def primes_up_to(bound: int) -> np.ndarray:
    """All primes <= bound, ascending (simple Eratosthenes sieve)."""
    if bound < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(bound + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, int(bound**0.5) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def build_places(prime_bound: int, ramified: int = 0) -> list[Place]:
    """Places for all primes <= prime_bound; the first `ramified` are marked
    as belonging to the finite ramified set S."""
    ps = primes_up_to(prime_bound)
    return [
        Place(index=i + 1, norm=int(p), ramified=i < ramified)
        for i, p in enumerate(ps)
    ]
