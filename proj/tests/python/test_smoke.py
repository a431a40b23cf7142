from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import multizeta as mz


def test_bernoulli():
    assert mz.bernoulli(12) == Fraction(-691, 2730)
    assert mz.bernoulli(1) == Fraction(-1, 2)


def test_desing():
    assert mz.desing_value([0, 2], [1, 1]) == Fraction(1, 18)
    assert (((0,), (0,), 1) in [(tuple(l), tuple(m), a) for l, m, a in mz.desing_coeffs(1)])


def test_L_routes():
    assert mz.L_closed([1], [1], 2, 5) == 1
    assert mz.L_genfun([1, 2], [1, 5], 2, 5) == mz.L_closed([1, 2], [1, 5], 2, 5)
    half = mz.L_riemann(5, 2, [-1, 0], [1, 0], [1, 5], 3, 3)
    assert half["precision"] == 3 and (2 * half["residue"]) % 125 == 1


def test_errors_raise():
    with pytest.raises(mz.MultizetaError):
        mz.L_closed([1], [1], 5, 5)
    with pytest.raises(ValueError):
        mz.mzf([0.5])


def test_polylog():
    assert mz.tmpl_gM(5, [1, 2], 2, [1, 0], None, 2)["residue"] == 0
    assert mz.L_ell_residual([1, 2], 2, 5, 2, 2)["residue"] == 0


def test_numeric():
    value, err, ok = mz.mzf([4.0], tol=1e-10)
    assert ok and abs(value - 1.0823232337111382) < 1e-9
    _, _, residual = mz.thex_residual([4.0, 4.0], [1.0, 1.0], 1e-7)
    assert residual < 1e-6


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(0, 4))
def test_functional_relation_vanishes(n1, n2):
    if (n1 + n2) % 2 == 0:
        return
    assert mz.functional_relation_residual([n1, n2], [n1, n2], [1, 5], 2, 5) == 0


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 6), st.integers(2, 6))
def test_root_sum_identity(n, c):
    assert mz.root_sum_twisted(n, c) == (1 - Fraction(c) ** (n + 1)) * mz.bernoulli(n + 1) / (n + 1)
