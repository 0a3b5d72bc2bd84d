"""Elliptic endoscopic data of SO(2N+1): even partitions of 2N.

An equivalence class of data is completely determined by the unordered
partition 2N = m_1 + ... + m_k into positive even parts; the group itself
is a product of SO(m_i + 1) factors with dual groups Sp(m_i, C) embedded
block-diagonally in Sp(2N, C).  The weight iota is 2^{-(k-1)}, the inverse
order of the component group of the centralizer of the embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from endoscopy_kit.symplectic import SemisimpleClass


@dataclass(frozen=True)
class EndoDatum:
    """An even partition of 2N, parts sorted descending."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("datum needs at least one part")
        for m in self.parts:
            if m <= 0 or m % 2 != 0:
                raise ValueError(f"parts must be positive even integers, got {m}")
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def N(self) -> int:
        return sum(self.parts) // 2

    @property
    def iota(self) -> Fraction:
        return Fraction(1, 2 ** (self.k - 1))

    def block_ranks(self) -> tuple[int, ...]:
        """Half-sizes m_i / 2 of the blocks."""
        return tuple(m // 2 for m in self.parts)


def iota(d: EndoDatum) -> Fraction:
    """The weight 2^{-(k-1)} of the datum, exact."""
    return d.iota


def _partitions(total: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def enumerate_elliptic(N: int) -> list[EndoDatum]:
    """All even partitions of 2N, canonical descending order, p(N) of them."""
    if N < 1:
        raise ValueError("rank N must be positive")
    return [EndoDatum(tuple(2 * m for m in p)) for p in _partitions(N, N)]


def embed_class(d: EndoDatum, blocks: Sequence[SemisimpleClass]) -> SemisimpleClass:
    """Block-diagonal image in Sp(2N) of one class per factor of the datum.

    Block i must live in Sp(m_i); angle sequences concatenate (the class
    constructor re-sorts to the canonical representative).
    """
    ranks = d.block_ranks()
    if len(blocks) != len(ranks):
        raise ValueError(f"expected {len(ranks)} blocks, got {len(blocks)}")
    for b, r in zip(blocks, ranks):
        if b.n != r:
            raise ValueError(f"block of rank {b.n} does not fit part of rank {r}")
    angles: tuple[float, ...] = ()
    for b in blocks:
        angles = angles + b.angles
    return SemisimpleClass(d.N, angles)
