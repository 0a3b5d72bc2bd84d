"""Decomposition identity, transfer, and the log-weighted limits."""

import pytest

from endoscopy_kit import spectrum, trace_formula
from endoscopy_kit.cli import random_test_function
from endoscopy_kit.endoscopy import EndoDatum, enumerate_elliptic
from endoscopy_kit.satake import SatakePolynomial
from endoscopy_kit.symplectic import RepLabel


def test_unit_function_counts_weights(small_store):
    # f = unit: each parameter contributes its weight 2^{1-k}
    total = trace_formula.s_cusp(trace_formula.TestFunction(), small_store, 2)
    assert total == pytest.approx(2 * 1.0 + 3 * 0.5)


def test_transfer_dual_route(small_store, rng):
    # f^H(phi_H) computed via polynomial substitution equals f^G on the
    # composed parameter: trace powers are additive over blocks
    f = random_test_function(small_store, rng)
    for d in enumerate_elliptic(2):
        fh = trace_formula.transfer(f, d)
        for phi_h in spectrum.enumerate_star_prim(small_store, d):
            lhs = trace_formula.eval_fH(fh, phi_h, small_store)
            rhs = trace_formula.eval_fG(f, spectrum.compose(phi_h), small_store)
            assert lhs == pytest.approx(rhs, abs=1e-12 * (1 + abs(rhs)))


def test_transfer_preserves_unit(small_store):
    f = trace_formula.TestFunction()
    for d in enumerate_elliptic(3):
        fh = trace_formula.transfer(f, d)
        for phi_h in spectrum.enumerate_star_prim(small_store, d):
            assert trace_formula.eval_fH(fh, phi_h, small_store) == 1.0


def test_decomposition_identity(small_store, rng):
    for _ in range(10):
        f = random_test_function(small_store, rng)
        report = trace_formula.verify_decomposition(f, small_store, 2)
        assert report["passed"], report
        assert report["abs_err"] <= report["tol"]
        assert {tuple(t["parts"]) for t in report["terms"]} == {(4,), (2, 2)}


def test_decomposition_term_weights(small_store):
    # with the unit function each term is iota(d) * #starPrim(d)
    report = trace_formula.verify_decomposition(
        trace_formula.TestFunction(), small_store, 3
    )
    by_parts = {tuple(t["parts"]): t["value"] for t in report["terms"]}
    for d in enumerate_elliptic(3):
        n_prim = len(spectrum.enumerate_star_prim(small_store, d))
        assert by_parts[d.parts] == pytest.approx(float(d.iota) * n_prim)


def test_modify_multiplies_h_r(small_store):
    f = trace_formula.TestFunction()
    w = small_store.unramified_places[3].index
    g = trace_formula.modify(f, RepLabel.fund(2), 2, w)
    phi = spectrum.enumerate_phi2(small_store, 2)[0]
    row = small_store.row_of_place(w)
    c = phi.satake(row)
    from endoscopy_kit.symplectic import char_value

    assert trace_formula.eval_fG(g, phi, small_store) == pytest.approx(
        char_value(RepLabel.fund(2), c.power(2)), abs=1e-10
    )


def test_modify_refuses_ramified_places():
    store = spectrum.generate_spectrum({2: 1}, 300, seed=4, ramified=1)
    bad = store.places[0].index
    f = trace_formula.TestFunction(ramified=frozenset({bad}))
    with pytest.raises(ValueError):
        trace_formula.modify(f, RepLabel.std(), 1, bad)


def test_r_series_matches_direct_route(small_store, rng):
    f = random_test_function(small_store, rng)
    for rep in (RepLabel.std(), RepLabel.fund(2)):
        for s in (1.5, 2.0):
            fast = trace_formula.r_series(f, rep, small_store, 2, complex(s), 5, 200)
            slow = trace_formula.r_series_direct(
                f, rep, small_store, 2, complex(s), 5, 200
            )
            assert fast == pytest.approx(slow, abs=1e-12 * (1 + abs(slow)))


def test_r_series_coefficients_are_termwise_exact(small_store, rng):
    # each coefficient equals log Nw * sum_phi weight * f^G(phi) * tr r(c^n)
    from endoscopy_kit.symplectic import char_value
    import math

    f = random_test_function(small_store, rng)
    rep = RepLabel.fund(2)
    coeffs = trace_formula.r_series_coefficients(f, rep, small_store, 2, 3, 100)
    phis = spectrum.enumerate_phi2(small_store, 2)
    norm_of = {pl.index: pl.norm for pl in small_store.places}
    for (idx, n), got in coeffs.items():
        row = small_store.row_of_place(idx)
        norm = norm_of[idx]
        want = math.log(norm) * sum(
            float(phi.weight)
            * trace_formula.eval_fG(f, phi, small_store)
            * char_value(rep, phi.satake(row).power(n))
            for phi in phis
        )
        assert got == pytest.approx(want, abs=1e-12 * (1 + abs(want)))


def test_r_limit_grid_validation(small_store):
    f = trace_formula.TestFunction()
    with pytest.raises(ValueError):
        trace_formula.r_limit_partial_sums(f, RepLabel.std(), small_store, 2, [10**7])


def test_theta_partial_sums_normalization(small_store):
    (X, v), = trace_formula.theta_partial_sums(small_store, [2000])
    assert 0.8 < v < 1.2  # Chebyshev: (1/X) sum log p -> 1


def test_diagonal_witness_for_two_blocks():
    # For a pure tensor f^H = g (x) g on the datum (2,2), the product of the
    # two factor sums counts ordered pairs with repeats, while the primitive
    # sum is over unordered distinct pairs: product = 2*starP + diagonal.
    store = spectrum.generate_spectrum({2: 3}, 500, seed=42)
    d = EndoDatum((2, 2))
    g = SatakePolynomial.unit() + SatakePolynomial.variable(1)
    idx = store.unramified_places[0].index
    fh = trace_formula.HTestFunction(
        datum=d,
        local={idx: g.relabel_block(0, 2) * g.relabel_block(1, 2)},
    )
    pool = store.params_of_degree(2)
    row = store.row_of_place(idx)

    def g_at(p):
        return g.evaluate([p.satake(row)])

    single = sum(g_at(p) for p in pool)
    product = single * single
    star = trace_formula.star_p(fh, d, store)
    diagonal = sum(g_at(p) ** 2 for p in pool)
    assert product == pytest.approx(2 * star + diagonal, abs=1e-10)
