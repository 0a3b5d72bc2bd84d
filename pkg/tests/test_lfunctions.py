"""Partial Euler products, exterior-square factorization, log-derivative
series, and the prime-indexed residue estimator."""

import cmath
import math

import numpy as np
import pytest

from endoscopy_kit import lfunctions, spectrum
from endoscopy_kit.symplectic import RepLabel, SemisimpleClass, char_value, dim_rep


def test_local_factor_trivial_rep_is_zeta_factor():
    c = SemisimpleClass.identity(1)
    got = lfunctions.local_factor(RepLabel.trivial(), c, 7, 2.0)
    assert got == pytest.approx(1 / (1 - 7.0**-2), abs=1e-14)


def test_local_factor_std():
    c = SemisimpleClass(1, (1.0,))
    x = 5.0**-1.5
    want = 1.0
    for z in c.eigenvalues():
        want /= 1 - z * x
    got = lfunctions.local_factor(RepLabel.std(), c, 5, 1.5)
    assert got == pytest.approx(complex(want).real, abs=1e-12)


def test_fund_factor_is_quotient_of_lambdas():
    rng = np.random.default_rng(3)
    c = SemisimpleClass(3, tuple(rng.uniform(0, math.pi, 3)))
    s = 2.0
    f2 = lfunctions.local_factor(RepLabel.fund(2), c, 11, s)
    l2 = lfunctions.local_factor(RepLabel.lam(2), c, 11, s)
    l0 = 1 / (1 - 11.0**-s)
    assert f2 * l0 == pytest.approx(l2, abs=1e-12)


def test_local_trace_powers_match_characters():
    rng = np.random.default_rng(4)
    c = SemisimpleClass(2, tuple(rng.uniform(0, math.pi, 2)))
    for rep in (RepLabel.std(), RepLabel.lam(2), RepLabel.fund(2)):
        eigs, cancel = lfunctions.rep_eigenvalues(rep, c)
        fac = lfunctions.LocalLFactor(7, tuple(eigs), tuple(cancel))
        for n in (1, 2, 3):
            assert fac.trace_power(n) == pytest.approx(
                char_value(rep, c.power(n)), abs=1e-9
            )


def test_lambda2_block_factorization_random_configs():
    # Lambda^2(A + B) = Lambda^2 A + Lambda^2 B + A (x) B as multisets,
    # checked through the local factor values
    rng = np.random.default_rng(8)
    s = 1.7
    for _ in range(200):
        na, nb = int(rng.integers(1, 3)), int(rng.integers(1, 3))
        a = SemisimpleClass(na, tuple(rng.uniform(0, math.pi, na)))
        b = SemisimpleClass(nb, tuple(rng.uniform(0, math.pi, nb)))
        joint = SemisimpleClass(na + nb, tuple(sorted(a.angles + b.angles)))
        norm = int(rng.choice([2, 3, 5, 13]))
        lhs = lfunctions.local_factor(RepLabel.lam(2), joint, norm, s)
        rhs = (
            lfunctions.local_factor(RepLabel.lam(2), a, norm, s)
            * lfunctions.local_factor(RepLabel.lam(2), b, norm, s)
            * lfunctions.rankin_selberg_factor(a, b, norm, s)
        )
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_partial_L_multiplicative_over_blocks(small_store):
    # L(s, phi, std) = product of the factor L-functions of the components
    phi = next(p for p in spectrum.enumerate_phi2(small_store, 3) if p.k == 2)
    s = 2.2
    whole = lfunctions.partial_L(RepLabel.std(), phi, small_store, 600, s)
    parts = 1.0
    for comp in phi.components:
        single = spectrum.CuspidalParameter((comp,))
        parts *= lfunctions.partial_L(RepLabel.std(), single, small_store, 600, s)
    assert whole == pytest.approx(parts, rel=1e-12)


def test_verify_lambda2_factorization(small_store):
    phi = next(p for p in spectrum.enumerate_phi2(small_store, 2) if p.k == 2)
    out = lfunctions.verify_lambda2_factorization(phi, small_store, 800, 2.0)
    assert out["passed"]
    assert out["max_err_block_factorization"] < 1e-12
    assert out["max_err_split"] < 1e-12


def test_log_deriv_matches_finite_differences(small_store):
    phi = spectrum.enumerate_phi2(small_store, 2)[0]
    for rep in (RepLabel.std(), RepLabel.fund(2)):
        series = lfunctions.log_deriv_series(rep, phi, small_store, 300, 40)
        for s in (1.5, 2.0, 3.0):
            h = 1e-5
            lo = cmath.log(lfunctions.partial_L(rep, phi, small_store, 300, complex(s - h)))
            hi = cmath.log(lfunctions.partial_L(rep, phi, small_store, 300, complex(s + h)))
            fd = -(hi - lo) / (2 * h)
            assert abs(series.evaluate(complex(s)) - fd) < 1e-6


def test_coefficients_bounded_by_dimension(small_store):
    phi = spectrum.enumerate_phi2(small_store, 2)[0]
    rep = RepLabel.fund(2)
    series = lfunctions.log_deriv_series(rep, phi, small_store, 500, 6)
    dim = dim_rep(rep, phi.N)
    for (norm, n), coeff in series.terms.items():
        assert abs(coeff) <= math.log(norm) * dim + 1e-9


def test_fe_split_partitions_terms(small_store):
    phi = spectrum.enumerate_phi2(small_store, 2)[0]
    series = lfunctions.log_deriv_series(RepLabel.std(), phi, small_store, 400, 8)
    f_part, e_part = lfunctions.fe_split(series)
    assert all(n == 1 for (_, n) in f_part.terms)
    assert all(n >= 2 for (_, n) in e_part.terms)
    s = complex(2.0)
    assert f_part.evaluate(s) + e_part.evaluate(s) == pytest.approx(
        series.evaluate(s), abs=1e-12
    )


def test_e_part_stabilizes_under_cutoff_doubling(small_store):
    # the n >= 2 tail converges absolutely at s = 2; doubling the prime
    # cutoff moves it by less than the tail bound
    phi = spectrum.enumerate_phi2(small_store, 2)[0]
    vals = []
    for bound in (250, 500, 1000, 2000):
        series = lfunctions.log_deriv_series(RepLabel.std(), phi, small_store, bound, 10)
        _, e_part = lfunctions.fe_split(series)
        vals.append(e_part.evaluate(complex(2.0)).real)
    assert abs(vals[-1] - vals[-2]) < abs(vals[1] - vals[0]) + 1e-12
    assert abs(vals[-1] - vals[-2]) < 1e-3


def test_residue_target_values(small_store):
    from endoscopy_kit import dimension

    phi = next(p for p in spectrum.enumerate_phi2(small_store, 2) if p.k == 2)
    d, phi_h = spectrum.classify(phi)
    assert d.parts == (2, 2)
    assert lfunctions.residue_target(RepLabel.fund(2), phi_h) == dimension.dim_data(d, 2)
    assert lfunctions.residue_target(RepLabel.lam(2), phi_h) == dimension.mult_trivial_lambda(d, 2)


def test_residue_estimate_converges():
    store = spectrum.generate_spectrum({2: 2}, 200_000, seed=101)
    phi = spectrum.enumerate_phi2(store, 2)[0]
    _, phi_h = spectrum.classify(phi)
    cesaro, target = lfunctions.residue_estimate(RepLabel.fund(2), phi_h, store, 200_000)
    assert target == 1  # k - 1 for the two-block datum
    assert abs(cesaro - target) < 0.05


def test_partial_series_restrict(small_store):
    phi = spectrum.enumerate_phi2(small_store, 2)[0]
    series = lfunctions.log_deriv_series(RepLabel.std(), phi, small_store, 400, 8)
    head = series.restrict(1, 1)
    tail = series.restrict(2, 8)
    s = complex(2.5)
    assert head.evaluate(s) + tail.evaluate(s) == pytest.approx(
        series.evaluate(s), abs=1e-12
    )
