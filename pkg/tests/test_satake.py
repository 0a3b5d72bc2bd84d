"""Polynomial calculus in the unramified Hecke variables T_m^{(i)}."""

import math
from fractions import Fraction

import numpy as np
import pytest

from endoscopy_kit.satake import SatakePolynomial, h_r, h_r_on_datum, newton_elementary
from endoscopy_kit.symplectic import RepLabel, SemisimpleClass, char_value, trace_power


def random_class(n, rng):
    return SemisimpleClass(n, tuple(rng.uniform(0, math.pi, n)))


def test_ring_axioms():
    x = SatakePolynomial.variable(1)
    y = SatakePolynomial.variable(2)
    one = SatakePolynomial.unit()
    assert x * one == x
    assert x + SatakePolynomial.zero() == x
    assert (x + y) * (x - y) == x * x - y * y
    assert x * Fraction(1, 2) + x * Fraction(1, 2) == x


def test_evaluation_is_trace_of_powers():
    rng = np.random.default_rng(2)
    c = random_class(3, rng)
    for m in (1, 2, 4):
        v = SatakePolynomial.variable(m).evaluate([c])
        assert v == pytest.approx(trace_power(RepLabel.std(), c, m), abs=1e-10)


def test_newton_elementary_is_universal():
    # one polynomial per a, correct on every rank
    rng = np.random.default_rng(6)
    for a in range(0, 7):
        poly = newton_elementary(a)
        for n in (1, 2, 3):
            c = random_class(n, rng)
            want = c.elementary()[a] if a <= 2 * n else 0.0
            assert poly.evaluate([c]) == pytest.approx(want, abs=1e-9)


def test_h_r_realizes_class_powers():
    rng = np.random.default_rng(9)
    for rep in (RepLabel.std(), RepLabel.fund(2), RepLabel.lam(2), RepLabel.lam(3)):
        for n in (1, 2, 3):
            c = random_class(3, rng)
            assert h_r(rep, n).evaluate([c]) == pytest.approx(
                char_value(rep, c.power(n)), abs=1e-9
            )


def test_scale_depth_composes():
    p = h_r(RepLabel.fund(2), 1)
    assert p.scale_depth(2).scale_depth(3) == p.scale_depth(6)
    assert h_r(RepLabel.fund(2), 6) == p.scale_depth(6)


def test_spread_is_block_additive():
    rng = np.random.default_rng(12)
    b1, b2 = random_class(2, rng), random_class(1, rng)
    x = SatakePolynomial.variable(2)
    spread = x.spread(2)
    assert spread.evaluate([b1, b2]) == pytest.approx(
        x.evaluate([b1]) + x.evaluate([b2]), abs=1e-10
    )
    # homomorphism: spread of a product is the product of spreads
    p, q = h_r(RepLabel.std(), 1), h_r(RepLabel.fund(2), 2)
    lhs = (p * q).spread(2).evaluate([b1, b2])
    rhs = (p.spread(2) * q.spread(2)).evaluate([b1, b2])
    assert lhs == pytest.approx(rhs, abs=1e-9)


def test_h_r_on_datum_matches_spread_and_embedding():
    from endoscopy_kit.endoscopy import EndoDatum, embed_class

    rng = np.random.default_rng(15)
    d = EndoDatum((4, 2, 2))
    blocks = [random_class(m // 2, rng) for m in d.parts]
    emb = embed_class(d, blocks)
    for rep in (RepLabel.std(), RepLabel.fund(2), RepLabel.lam(2)):
        for n in (1, 2):
            direct = h_r_on_datum(rep, n, d.parts).evaluate(blocks)
            via_spread = h_r(rep, n).spread(d.k).evaluate(blocks)
            truth = char_value(rep, emb.power(n))
            assert direct == pytest.approx(truth, abs=1e-9)
            assert via_spread == pytest.approx(truth, abs=1e-9)


def test_block_count_mismatch_errors():
    x = SatakePolynomial.variable(1, block=0, blocks=2)
    rng = np.random.default_rng(1)
    with pytest.raises(ValueError):
        x.evaluate([random_class(1, rng)])
    with pytest.raises(ValueError):
        x.spread(3)
