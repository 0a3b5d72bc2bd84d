"""Weyl-invariant spherical test functions as trace-power polynomials.

A spherical function is represented directly by its Satake transform: a
polynomial in the variables T_m^{(i)} = tr(std(c_i^m)), where i indexes a
block of the group (a single block on the big group, one per factor on a
product).  The unit of the spherical algebra is the constant polynomial 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from endoscopy_kit.symplectic import RepLabel, SemisimpleClass, trace_power

# monomial: sorted tuple of ((block, m), exponent), exponents positive
Monomial = tuple[tuple[tuple[int, int], int], ...]
Number = Fraction | int | float

_UNIT_MONO: Monomial = ()


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    acc: dict[tuple[int, int], int] = dict(m1)
    for var, e in m2:
        acc[var] = acc.get(var, 0) + e
    return tuple(sorted(acc.items()))


@dataclass(frozen=True)
class SatakePolynomial:
    """Sparse polynomial in the trace-power variables of `blocks` blocks."""

    blocks: int = 1
    coeffs: Mapping[Monomial, Number] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {m: c for m, c in self.coeffs.items() if c != 0}
        for mono in clean:
            for (block, m), e in mono:
                if not (0 <= block < self.blocks):
                    raise ValueError(f"variable block {block} out of range")
                if m < 1 or e < 1:
                    raise ValueError("trace depth and exponents must be positive")
        object.__setattr__(self, "coeffs", clean)

    # -- constructors -------------------------------------------------------

    @classmethod
    def unit(cls, blocks: int = 1) -> "SatakePolynomial":
        return cls(blocks, {_UNIT_MONO: Fraction(1)})

    @classmethod
    def zero(cls, blocks: int = 1) -> "SatakePolynomial":
        return cls(blocks, {})

    @classmethod
    def variable(cls, m: int, block: int = 0, blocks: int = 1) -> "SatakePolynomial":
        return cls(blocks, {(((block, m), 1),): Fraction(1)})

    @property
    def is_unit(self) -> bool:
        return self.coeffs == {_UNIT_MONO: Fraction(1)} or self.coeffs == {_UNIT_MONO: 1}

    @property
    def max_depth(self) -> int:
        """Largest trace index appearing (0 for constants)."""
        return max((m for mono in self.coeffs for (_, m), _ in mono), default=0)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "SatakePolynomial") -> "SatakePolynomial":
        if other.blocks != self.blocks:
            raise ValueError("block count mismatch")
        acc = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            acc[mono] = acc.get(mono, 0) + c
        return SatakePolynomial(self.blocks, acc)

    def __sub__(self, other: "SatakePolynomial") -> "SatakePolynomial":
        return self + (other * -1)

    def __mul__(self, other: "SatakePolynomial | Number") -> "SatakePolynomial":
        if isinstance(other, (int, float, Fraction)):
            return SatakePolynomial(
                self.blocks, {m: c * other for m, c in self.coeffs.items()}
            )
        if other.blocks != self.blocks:
            raise ValueError("block count mismatch")
        acc: dict[Monomial, Number] = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                mono = _mono_mul(m1, m2)
                acc[mono] = acc.get(mono, 0) + c1 * c2
        return SatakePolynomial(self.blocks, acc)

    __rmul__ = __mul__

    # -- structural maps ----------------------------------------------------

    def scale_depth(self, n: int) -> "SatakePolynomial":
        """Substitute T_m -> T_{n m} in every block (the class-power map)."""
        acc: dict[Monomial, Number] = {}
        for mono, c in self.coeffs.items():
            new = tuple(sorted((((b, n * m), e) for (b, m), e in mono)))
            acc[new] = acc.get(new, 0) + c
        return SatakePolynomial(self.blocks, acc)

    def relabel_block(self, block: int, blocks: int) -> "SatakePolynomial":
        """Move a single-block polynomial onto block `block` of `blocks` blocks."""
        if self.blocks != 1:
            raise ValueError("relabel_block applies to single-block polynomials")
        acc = {
            tuple(sorted((((block, m), e) for (_, m), e in mono))): c
            for mono, c in self.coeffs.items()
        }
        return SatakePolynomial(blocks, acc)

    def spread(self, blocks: int) -> "SatakePolynomial":
        """Substitute T_m -> sum_i T_m^{(i)} over `blocks` blocks.

        This is the spherical-algebra homomorphism induced by the
        block-diagonal embedding: traces of powers are additive in blocks.
        """
        if self.blocks != 1:
            raise ValueError("spread applies to single-block polynomials")
        result = SatakePolynomial.zero(blocks)
        for mono, c in self.coeffs.items():
            term = SatakePolynomial(blocks, {_UNIT_MONO: c})
            for (_, m), e in mono:
                s = SatakePolynomial.zero(blocks)
                for i in range(blocks):
                    s = s + SatakePolynomial.variable(m, block=i, blocks=blocks)
                for _ in range(e):
                    term = term * s
            result = result + term
        return result

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, classes: Sequence[SemisimpleClass]) -> float:
        """Substitute T_m^{(i)} = tr(std(classes[i]^m))."""
        if len(classes) != self.blocks:
            raise ValueError(f"expected {self.blocks} classes, got {len(classes)}")
        cache: dict[tuple[int, int], float] = {}
        total = 0.0
        for mono, c in self.coeffs.items():
            term = float(c)
            for var, e in mono:
                if var not in cache:
                    block, m = var
                    cache[var] = trace_power(RepLabel.std(), classes[block], m)
                term *= cache[var] ** e
            total += term
        return total


@lru_cache(maxsize=None)
def newton_elementary(a: int) -> SatakePolynomial:
    """e_a of the full eigenvalue multiset, as a polynomial in T_1..T_a.

    Universal symmetric-function identity a e_a = sum_{m=1}^{a} (-1)^{m-1}
    e_{a-m} T_m, so the same polynomial is valid on every Sp(2n) (it
    evaluates to 0 whenever a exceeds the number of eigenvalues).
    """
    if a < 0:
        return SatakePolynomial.zero()
    if a == 0:
        return SatakePolynomial.unit()
    acc = SatakePolynomial.zero()
    for m in range(1, a + 1):
        sign = Fraction((-1) ** (m - 1), a)
        acc = acc + newton_elementary(a - m) * SatakePolynomial.variable(m) * sign
    return acc


def h_r(r: RepLabel, n: int = 1) -> SatakePolynomial:
    """Spherical function whose Satake transform sends c to tr(r(c^n)).

    Built from the Newton expression of elementary symmetric polynomials in
    trace powers, with T_m -> T_{n m} accounting for the power of the class.
    """
    if n < 1:
        raise ValueError("power must be positive")
    kind, a = r.normalized()
    if kind == "lambda":
        poly = newton_elementary(a)
    else:
        poly = newton_elementary(a) - newton_elementary(a - 2)
    return poly.scale_depth(n) if n != 1 else poly


def h_r_on_datum(r: RepLabel, n: int, d_parts: Sequence[int]) -> SatakePolynomial:
    """Block-side spherical function with transform tr(r(embedded class^n)).

    Independent construction (used to cross-check the transfer): the
    generating polynomial of the embedded eigenvalue multiset is the
    product of the block generating polynomials, so e_a of the union is the
    degree-a convolution of per-block Newton polynomials in block-local
    trace variables.
    """
    kind, a = r.normalized()
    blocks = len(d_parts)

    def union_elementary(deg: int) -> SatakePolynomial:
        if deg < 0:
            return SatakePolynomial.zero(blocks)
        # per-degree convolution across blocks
        acc = [SatakePolynomial.zero(blocks) for _ in range(deg + 1)]
        acc[0] = SatakePolynomial.unit(blocks)
        for i, m_i in enumerate(d_parts):
            block_e = [
                newton_elementary(j).relabel_block(i, blocks)
                for j in range(min(deg, m_i) + 1)
            ]
            nxt = [SatakePolynomial.zero(blocks) for _ in range(deg + 1)]
            for tot in range(deg + 1):
                for j in range(min(deg - tot, m_i) + 1):
                    nxt[tot + j] = nxt[tot + j] + acc[tot] * block_e[j]
            acc = nxt
        return acc[deg]

    poly = union_elementary(a)
    if kind == "fund":
        poly = poly - union_elementary(a - 2)
    return poly.scale_depth(n) if n != 1 else poly
