"""Character values on USp(2n) against brute-force eigenvalue oracles."""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from endoscopy_kit.symplectic import (
    RepLabel,
    SemisimpleClass,
    char_batch,
    char_fund,
    char_lambda,
    char_value,
    dim_rep,
    elementary_batch,
    gl_eigenvalues,
    lambda_eigenvalues,
    rep_label_from_name,
    trace_power,
)

angle_lists = st.integers(1, 4).flatmap(
    lambda n: st.lists(
        st.floats(0.0, math.pi, allow_nan=False), min_size=n, max_size=n
    )
)


def brute_elementary(c: SemisimpleClass, a: int) -> float:
    eigs = c.eigenvalues()
    if a == 0:
        return 1.0
    total = sum(np.prod(combo) for combo in itertools.combinations(eigs, a))
    return complex(total).real


@given(angle_lists, st.integers(0, 8))
@settings(max_examples=60, deadline=None)
def test_char_lambda_matches_eigenvalue_oracle(angles, a):
    c = SemisimpleClass(len(angles), tuple(angles))
    if a > 2 * c.n:
        assert char_lambda(a, c) == 0.0
    else:
        assert char_lambda(a, c) == pytest.approx(brute_elementary(c, a), abs=1e-9)


@given(angle_lists)
@settings(max_examples=60, deadline=None)
def test_chars_are_real_and_self_dual(angles):
    # eigenvalues come in conjugate pairs, so e_a = e_{2n-a} and all chars real
    c = SemisimpleClass(len(angles), tuple(angles))
    n = c.n
    for a in range(0, 2 * n + 1):
        assert char_lambda(a, c) == pytest.approx(char_lambda(2 * n - a, c), abs=1e-9)


def test_fund2_newton_identity():
    # e_2 = (p_1^2 - p_2)/2, so char(fund2) = (t1^2 - t2)/2 - 1 with
    # t_m the trace of the m-th power of the standard representation
    rng = np.random.default_rng(7)
    for n in (2, 3, 4):
        for _ in range(20):
            c = SemisimpleClass(n, tuple(rng.uniform(0, math.pi, n)))
            t1 = trace_power(RepLabel.std(), c, 1)
            t2 = trace_power(RepLabel.std(), c, 2)
            expected = (t1 * t1 - t2) / 2 - 1
            assert char_fund(2, c) == pytest.approx(expected, abs=1e-9)


def test_dimension_at_identity():
    for n in (1, 2, 3, 4, 5):
        cid = SemisimpleClass.identity(n)
        assert char_lambda(2, cid) == pytest.approx(math.comb(2 * n, 2))
        if n >= 2:
            assert char_fund(2, cid) == pytest.approx(2 * n * n - n - 1)
            assert dim_rep(RepLabel.fund(2), n) == 2 * n * n - n - 1


def test_lambda_eigenvalues_consistent_with_char():
    rng = np.random.default_rng(3)
    c = SemisimpleClass(3, tuple(rng.uniform(0, math.pi, 3)))
    eigs = gl_eigenvalues(c)
    for a in (1, 2, 3):
        total = sum(lambda_eigenvalues(eigs, a))
        assert complex(total).real == pytest.approx(char_lambda(a, c), abs=1e-9)
        assert abs(complex(total).imag) < 1e-9


def test_power_class_matches_eigenvalue_powers():
    rng = np.random.default_rng(5)
    c = SemisimpleClass(2, tuple(rng.uniform(0, math.pi, 2)))
    for m in (1, 2, 3, 5):
        lhs = sorted(z.real for z in c.power(m).eigenvalues())
        rhs = sorted((z**m).real for z in c.eigenvalues())
        assert lhs == pytest.approx(rhs, abs=1e-9)


def test_out_of_range_conventions():
    c = SemisimpleClass(2, (0.4, 2.2))
    assert char_lambda(-1, c) == 0.0
    assert char_lambda(0, c) == 1.0
    assert char_lambda(5, c) == 0.0
    with pytest.raises(ValueError):
        char_fund(3, c)  # fund(a) needs 1 <= a <= n


def test_rep_label_parsing():
    assert rep_label_from_name("std") == RepLabel.std()
    assert rep_label_from_name("fund2") == RepLabel.fund(2)
    assert rep_label_from_name("r2") == RepLabel.fund(2)
    assert rep_label_from_name("lambda3") == RepLabel.lam(3)
    with pytest.raises(ValueError):
        rep_label_from_name("bogus")


def test_batched_chars_match_scalar_path():
    rng = np.random.default_rng(11)
    angles = rng.uniform(0, math.pi, size=(40, 3))
    e = elementary_batch(angles)
    for r in (RepLabel.std(), RepLabel.fund(2), RepLabel.lam(3)):
        batch = char_batch(r, angles)
        for i in range(angles.shape[0]):
            c = SemisimpleClass(3, tuple(angles[i]))
            assert batch[i] == pytest.approx(char_value(r, c), abs=1e-9)
    # elementary_batch row 0 column a against the scalar method
    c0 = SemisimpleClass(3, tuple(angles[0]))
    assert e[0, : 2 * 3 + 1] == pytest.approx(c0.elementary(), abs=1e-9)


def test_char_batch_powers():
    rng = np.random.default_rng(13)
    angles = rng.uniform(0, math.pi, size=(10, 2))
    out = char_batch(RepLabel.fund(2), angles, m=3)
    for i in range(10):
        c = SemisimpleClass(2, tuple(angles[i]))
        assert out[i] == pytest.approx(char_fund(2, c.power(3)), abs=1e-9)
