"""Characters of exterior powers and fundamental representations of Sp(2n, C).

Conjugacy classes are restricted to the compact form USp(2n): eigenvalues
come in unit-circle pairs e^{+-i theta}, so every character value is real.
The a-th fundamental representation is the kernel of the contraction
Lambda^a(std) -> Lambda^{a-2}(std), so its character is
e_a(eigenvalues) - e_{a-2}(eigenvalues).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

#: tolerance below which a character value is considered exactly real
REAL_TOL = 1e-12

_TWO_PI = 2.0 * math.pi


def _fold(angle: float) -> float:
    """Reduce an angle to the canonical representative in [0, pi]."""
    a = math.fmod(angle, _TWO_PI)
    if a < 0.0:
        a += _TWO_PI
    if a > math.pi:
        a = _TWO_PI - a
    return a


@dataclass(frozen=True)
class SemisimpleClass:
    """A semisimple conjugacy class in USp(2n), stored as n angles in [0, pi].

    The eigenvalue multiset is {e^{i theta_j}, e^{-i theta_j}}; angles are
    folded into [0, pi] and sorted ascending, one canonical representative
    per Weyl orbit.
    """

    n: int
    angles: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"rank must be positive, got {self.n}")
        if len(self.angles) != self.n:
            raise ValueError(f"expected {self.n} angles, got {len(self.angles)}")
        folded = tuple(sorted(_fold(float(a)) for a in self.angles))
        object.__setattr__(self, "angles", folded)

    @classmethod
    def identity(cls, n: int) -> "SemisimpleClass":
        return cls(n, (0.0,) * n)

    def power(self, m: int) -> "SemisimpleClass":
        """The class of c^m (angles m*theta, folded back to [0, pi])."""
        return SemisimpleClass(self.n, tuple(m * a for a in self.angles))

    def eigenvalues(self) -> list[complex]:
        """The full multiset of 2n unit eigenvalues."""
        eigs: list[complex] = []
        for a in self.angles:
            z = complex(math.cos(a), math.sin(a))
            eigs.append(z)
            eigs.append(z.conjugate())
        return eigs

    def elementary(self) -> np.ndarray:
        """Coefficient vector (e_0, ..., e_{2n}) of prod_j (1 + 2cos(theta_j) t + t^2).

        Conjugate eigenvalue pairs are multiplied as real quadratics, so the
        result carries no complex round-off.
        """
        coeffs = np.zeros(2 * self.n + 1)
        coeffs[0] = 1.0
        deg = 0
        for a in self.angles:
            c = 2.0 * math.cos(a)
            nxt = np.zeros(2 * self.n + 1)
            nxt[: deg + 1] += coeffs[: deg + 1]
            nxt[1 : deg + 2] += c * coeffs[: deg + 1]
            nxt[2 : deg + 3] += coeffs[: deg + 1]
            coeffs = nxt
            deg += 2
        return coeffs


@dataclass(frozen=True)
class RepLabel:
    """Label of a representation evaluable on USp(2n) classes.

    kind is one of "lambda" (a-th exterior power of std), "fund" (a-th
    fundamental representation), "std", "ext_square" (= Lambda^2 std), or
    "trivial" (= Lambda^0 std).
    """

    kind: str
    a: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("lambda", "fund", "std", "ext_square", "trivial"):
            raise ValueError(f"unknown representation kind {self.kind!r}")
        if self.kind == "fund" and self.a < 1:
            raise ValueError("fundamental representation index must be >= 1")
        if self.kind == "lambda" and self.a < 0:
            raise ValueError("exterior power index must be >= 0")

    @classmethod
    def std(cls) -> "RepLabel":
        return cls("std")

    @classmethod
    def fund(cls, a: int) -> "RepLabel":
        return cls("fund", a)

    @classmethod
    def lam(cls, a: int) -> "RepLabel":
        return cls("lambda", a)

    @classmethod
    def trivial(cls) -> "RepLabel":
        return cls("trivial")

    def normalized(self) -> tuple[str, int]:
        """(kind, a) with the aliases std/ext_square/trivial resolved."""
        if self.kind == "std":
            return ("fund", 1)
        if self.kind == "ext_square":
            return ("lambda", 2)
        if self.kind == "trivial":
            return ("lambda", 0)
        return (self.kind, self.a)

    def canonical_name(self) -> str:
        k, a = self.normalized()
        return f"{k}{a}"


def rep_label_from_name(name: str) -> RepLabel:
    """Parse labels like 'std', 'fund2', 'lambda3', 'r2', 'trivial'."""
    name = name.strip().lower()
    if name == "std":
        return RepLabel.std()
    if name == "trivial":
        return RepLabel.trivial()
    if name in ("ext_square", "ext2"):
        return RepLabel("ext_square")
    for prefix, kind in (("lambda", "lambda"), ("fund", "fund"), ("r", "fund")):
        if name.startswith(prefix) and name[len(prefix) :].isdigit():
            return RepLabel(kind, int(name[len(prefix) :]))
    raise ValueError(f"cannot parse representation label {name!r}")


def char_lambda(a: int, c: SemisimpleClass) -> float:
    """Character of Lambda^a(std) at c, i.e. e_a of the 2n eigenvalues.

    Out-of-range a (a < 0 or a > 2n) gives 0; e_0 = 1.
    """
    if a < 0 or a > 2 * c.n:
        return 0.0
    return float(c.elementary()[a])


def char_fund(a: int, c: SemisimpleClass) -> float:
    """Character of the a-th fundamental representation at c, 1 <= a <= n."""
    if not 1 <= a <= c.n:
        raise ValueError(
            f"fundamental representation index {a} out of range for Sp({2 * c.n})"
        )
    e = c.elementary()
    low = float(e[a - 2]) if a >= 2 else 0.0
    return float(e[a]) - low


def char_value(r: RepLabel, c: SemisimpleClass) -> float:
    """Character of r at c."""
    kind, a = r.normalized()
    if kind == "lambda":
        return char_lambda(a, c)
    return char_fund(a, c)


def trace_power(r: RepLabel, c: SemisimpleClass, m: int) -> float:
    """Character of r at the class of c^m."""
    if m < 1:
        raise ValueError("power must be positive")
    return char_value(r, c.power(m))


def dim_rep(r: RepLabel, n: int) -> int:
    """Dimension of r as a representation of Sp(2n)."""
    kind, a = r.normalized()
    if kind == "lambda":
        return math.comb(2 * n, a) if 0 <= a <= 2 * n else 0
    if not 1 <= a <= n:
        raise ValueError(f"fund({a}) undefined on Sp({2 * n})")
    return math.comb(2 * n, a) - (math.comb(2 * n, a - 2) if a >= 2 else 0)


def gl_eigenvalues(c: SemisimpleClass) -> list[complex]:
    """The class viewed in GL(2n): its eigenvalue multiset."""
    return c.eigenvalues()


def tensor_class(
    eigs1: Iterable[complex], eigs2: Iterable[complex]
) -> list[complex]:
    """Eigenvalue multiset of the tensor product: all pairwise products."""
    e2 = list(eigs2)
    return [a * b for a in eigs1 for b in e2]


def lambda_eigenvalues(eigs: Sequence[complex], a: int) -> list[complex]:
    """Eigenvalue multiset of Lambda^a: products over a-element subsets."""
    if a < 0 or a > len(eigs):
        return []
    if a == 0:
        return [1.0 + 0.0j]
    return [math.prod(comb) for comb in itertools.combinations(eigs, a)]


# ---------------------------------------------------------------------------
# vectorized versions used in prime loops and Monte-Carlo averaging
# ---------------------------------------------------------------------------


def elementary_batch(angles: np.ndarray, amax: int | None = None) -> np.ndarray:
    """Row-wise (e_0, ..., e_amax) for a (B, n) array of angles.

    Same generating-polynomial product as SemisimpleClass.elementary, done
    across the batch axis.
    """
    angles = np.atleast_2d(angles)
    n = angles.shape[1]
    deg_full = 2 * n
    amax = deg_full if amax is None else min(amax, deg_full)
    coeffs = np.zeros((angles.shape[0], amax + 1))
    coeffs[:, 0] = 1.0
    for j in range(n):
        c = 2.0 * np.cos(angles[:, j])
        nxt = coeffs.copy()
        nxt[:, 1:] += c[:, None] * coeffs[:, :-1]
        if amax >= 2:
            nxt[:, 2:] += coeffs[:, :-2]
        coeffs = nxt
    return coeffs


def char_batch(r: RepLabel, angles: np.ndarray, m: int = 1) -> np.ndarray:
    """Character of r at the classes of c^m, for a (B, n) batch of classes."""
    angles = np.atleast_2d(angles)
    if m != 1:
        angles = angles * m
    kind, a = r.normalized()
    if kind == "fund" and a == 1:
        return 2.0 * np.cos(angles).sum(axis=1)
    n = angles.shape[1]
    if kind == "lambda" and (a < 0 or a > 2 * n):
        return np.zeros(angles.shape[0])
    if kind == "fund" and not 1 <= a <= n:
        raise ValueError(f"fund({a}) undefined on Sp({2 * n})")
    e = elementary_batch(angles, amax=a)
    val = e[:, a].copy()
    if kind == "fund" and a >= 2:
        val -= e[:, a - 2]
    return val
