import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgauss.qnum import (
    arik_coon_eigenvalue,
    arik_coon_eigenvalues_by_recursion,
    classical_binomial,
    hermite,
    macfarlane_eigenvalue,
    macfarlane_eigenvalues_by_recursion,
    qbinomial,
    qbinomial_triangle,
    qpochhammer,
)


# (1-q)(1-q^2)... at q = 1/2 is exactly representable in binary, so these
# are equality checks, not tolerance checks.
POCHHAMMER_HALF = [1.0, 0.5, 0.375, 0.328125, 0.3076171875, 0.298004150390625]


@pytest.mark.parametrize("n, expected", list(enumerate(POCHHAMMER_HALF)))
def test_qpochhammer_dyadic_values(n, expected):
    assert qpochhammer(0.5, n) == expected


def test_qpochhammer_empty_product():
    assert qpochhammer(0.123, 0) == 1.0


@pytest.mark.parametrize("bad_q", [0.0, 1.0, -0.2, 1.5])
def test_qpochhammer_rejects_bad_q(bad_q):
    with pytest.raises(ValueError):
        qpochhammer(bad_q, 3)


def test_qpochhammer_negative_n():
    with pytest.raises(ValueError):
        qpochhammer(0.5, -1)


def test_qbinomial_known_values():
    # 1 + q + 2q^2 + q^3 + q^4 at q = 1/2
    assert qbinomial(0.5, 4, 2) == pytest.approx(2.1875, abs=1e-15)
    assert qbinomial(0.5, 2, 1) == pytest.approx(1.5, abs=1e-15)
    assert qbinomial(0.5, 5, 0) == 1.0


def test_qbinomial_out_of_range_is_zero():
    assert qbinomial(0.5, 3, 4) == 0.0
    assert qbinomial(0.5, 3, -1) == 0.0


@pytest.mark.parametrize("q", [0.1, 0.5, 0.9])
def test_triangle_matches_closed_form(q):
    rows = qbinomial_triangle(q, 12)
    for n, row in enumerate(rows):
        for k, val in enumerate(row):
            closed = qbinomial(q, n, k)
            assert val == pytest.approx(closed, rel=1e-13)


def test_triangle_row_shapes():
    rows = qbinomial_triangle(0.3, 5)
    assert [len(r) for r in rows] == [1, 2, 3, 4, 5, 6]


@given(st.integers(min_value=0, max_value=30), st.sampled_from([0.1, 0.5, 0.9]))
def test_qbinomial_symmetry(n, q):
    for k in range(n + 1):
        lhs = qbinomial(q, n, k)
        rhs = qbinomial(q, n, n - k)
        assert lhs == pytest.approx(rhs, rel=1e-13)


def test_classical_limit():
    q = 1.0 - 1e-6
    for n in range(11):
        for k in range(n + 1):
            assert qbinomial(q, n, k) == pytest.approx(
                classical_binomial(n, k), rel=1e-4)


def test_qbinomial_mp_backend_agrees():
    a = qbinomial(0.5, 8, 3)
    b = qbinomial(0.5, 8, 3, digits=40)
    assert isinstance(b, mpmath.mpf)
    assert float(b) == pytest.approx(a, rel=1e-15)


def test_arik_coon_eigenvalues():
    assert arik_coon_eigenvalue(0.5, 0) == 0.0
    assert arik_coon_eigenvalue(0.77, 1) == pytest.approx(1.0, abs=1e-15)
    assert arik_coon_eigenvalue(0.5, 2) == pytest.approx(1.5, abs=1e-15)
    assert arik_coon_eigenvalue(0.5, 3) == pytest.approx(1.75, abs=1e-15)


def test_macfarlane_eigenvalues():
    assert macfarlane_eigenvalue(0.5, 0) == 0.0
    assert macfarlane_eigenvalue(0.5, 1) == pytest.approx(-2.0, abs=1e-14)
    assert macfarlane_eigenvalue(0.5, 2) == pytest.approx(-6.0, abs=1e-14)
    assert macfarlane_eigenvalue(0.5, 3) == pytest.approx(-14.0, abs=1e-13)


@pytest.mark.parametrize("q", [0.2, 0.5, 0.9])
def test_recursions_match_closed_forms(q):
    arik = arik_coon_eigenvalues_by_recursion(q, 15)
    mac = macfarlane_eigenvalues_by_recursion(q, 15)
    for n in range(15):
        assert arik[n] == pytest.approx(arik_coon_eigenvalue(q, n), rel=1e-14)
        assert mac[n] == pytest.approx(macfarlane_eigenvalue(q, n), rel=1e-13)


@pytest.mark.parametrize("q", [0.2, 0.5, 0.9])
def test_eigenvalue_monotonicity_and_relation(q):
    arik = [arik_coon_eigenvalue(q, n) for n in range(20)]
    mac = [macfarlane_eigenvalue(q, n) for n in range(20)]
    assert all(b > a for a, b in zip(arik, arik[1:]))
    assert all(b < a for a, b in zip(mac, mac[1:]))
    # the two spectra differ by the factor -q^{-n}
    for n in range(20):
        assert mac[n] == pytest.approx(-(q ** -n) * arik[n], rel=1e-12)


def test_hermite_low_orders():
    assert hermite(0, 1.7) == 1.0
    assert hermite(1, 0.5) == 1.0
    assert hermite(3, 1.0) == -4.0


def test_hermite_against_numpy():
    s = np.linspace(-2.5, 2.5, 11)
    for n in range(9):
        coeffs = [0.0] * n + [1.0]
        ref = np.polynomial.hermite.hermval(s, coeffs)
        np.testing.assert_allclose(hermite(n, s), ref, rtol=1e-12, atol=1e-12)


@settings(max_examples=25)
@given(st.floats(min_value=-3, max_value=3), st.integers(min_value=1, max_value=10))
def test_hermite_parity(s, n):
    # H_n(-s) = (-1)^n H_n(s)
    left = hermite(n, -s)
    right = (-1.0) ** n * hermite(n, s)
    assert left == pytest.approx(right, rel=1e-10, abs=1e-10)
