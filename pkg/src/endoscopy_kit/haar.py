"""Haar-random conjugacy classes in USp(2n).

Two samplers:

* angle rejection against the sin^2 density for n = 1 (acceptance 1/2);
* for n >= 2, the unitary polar factor of a quaternionic Gaussian matrix.
  The Gaussian law on the quaternionic matrix space is bi-invariant under
  USp(2n) and the polar factor is equivariant, so the factor is exactly
  Haar distributed.  Box rejection against the Weyl density is exact too
  but its acceptance rate collapses like 2^{-n(n-1)} and is unusable past
  n = 2.

Everything is seeded and chunked; results are deterministic for a fixed
numpy Generator state.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 16


def _quaternionic_polar(count: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """(count, 2n, 2n) Haar matrices from USp(2n)."""
    a = rng.standard_normal((count, n, n)) + 1j * rng.standard_normal((count, n, n))
    b = rng.standard_normal((count, n, n)) + 1j * rng.standard_normal((count, n, n))
    m = np.empty((count, 2 * n, 2 * n), dtype=complex)
    m[:, :n, :n] = a
    m[:, :n, n:] = b
    m[:, n:, :n] = -b.conj()
    m[:, n:, n:] = a.conj()
    p = m.conj().transpose(0, 2, 1) @ m
    w, v = np.linalg.eigh(p)
    inv_sqrt = (v * (w[:, None, :] ** -0.5)) @ v.conj().transpose(0, 2, 1)
    return m @ inv_sqrt


def _sin2_angles(count: int, rng: np.random.Generator) -> np.ndarray:
    """Angles in [0, pi] with density (2/pi) sin^2, by rejection."""
    out = np.empty(count)
    filled = 0
    while filled < count:
        need = count - filled
        proposals = rng.uniform(0.0, np.pi, size=max(2 * need + 16, 64))
        accept = rng.uniform(size=proposals.shape) < np.sin(proposals) ** 2
        got = proposals[accept][:need]
        out[filled : filled + got.size] = got
        filled += got.size
    return out


def sample_angles(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """(count, n) eigenvalue-angle rows of Haar-random USp(2n) classes."""
    if n < 1:
        raise ValueError("rank must be positive")
    if n == 1:
        return _sin2_angles(count, rng)[:, None]
    out = np.empty((count, n))
    for lo in range(0, count, _CHUNK):
        hi = min(lo + _CHUNK, count)
        q = _quaternionic_polar(hi - lo, n, rng)
        ev = np.linalg.eigvals(q)
        # eigenvalues come in conjugate pairs; keep one angle per pair
        out[lo:hi] = np.sort(np.abs(np.angle(ev)), axis=1)[:, ::2]
    return out


def sample_elementary(
    n: int, count: int, rng: np.random.Generator, amax: int
) -> np.ndarray:
    """(count, amax+1) rows (e_0, ..., e_amax) of Haar-random USp(2n) classes.

    Avoids eigendecomposition: traces of matrix powers feed the Newton
    recursion  a e_a = sum_{m=1}^{a} (-1)^{m-1} e_{a-m} p_m.
    """
    amax = min(amax, 2 * n)
    if n == 1:
        theta = _sin2_angles(count, rng)
        e = np.ones((count, amax + 1))
        if amax >= 1:
            e[:, 1] = 2.0 * np.cos(theta)
        # e_2 = 1 for a single conjugate pair on the unit circle
        return e
    out = np.empty((count, amax + 1))
    out[:, 0] = 1.0
    for lo in range(0, count, _CHUNK):
        hi = min(lo + _CHUNK, count)
        q = _quaternionic_polar(hi - lo, n, rng)
        power = q
        p = np.empty((hi - lo, amax + 1))
        p[:, 1] = np.einsum("bii->b", power).real
        for m in range(2, amax + 1):
            power = power @ q
            p[:, m] = np.einsum("bii->b", power).real
        for a in range(1, amax + 1):
            acc = np.zeros(hi - lo)
            for m in range(1, a + 1):
                acc += (-1.0) ** (m - 1) * p[:, m] * out[lo:hi, a - m]
            out[lo:hi, a] = acc / a
    return out
