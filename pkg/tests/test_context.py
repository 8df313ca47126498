import math
from fractions import Fraction

import mpmath
import pytest

from qgauss import QContext
from qgauss.context import as_lattice_shift


def test_q_and_c_are_linked():
    ctx = QContext(c=1.0)
    assert float(ctx.q) == pytest.approx(math.exp(-1.0), rel=1e-16)
    ctx2 = QContext(q=0.5)
    assert float(ctx2.c) == pytest.approx(math.sqrt(math.log(2.0)), rel=1e-16)


def test_exactly_one_parameter():
    with pytest.raises(ValueError):
        QContext()
    with pytest.raises(ValueError):
        QContext(c=1.0, q=0.5)
    with pytest.raises(ValueError):
        QContext(q=1.5)
    with pytest.raises(ValueError):
        QContext(c=-2.0)


def test_immutability():
    ctx = QContext(q=0.5)
    with pytest.raises(AttributeError):
        ctx.q = 0.6


def test_qpow_exact_exponent():
    ctx = QContext(q=0.5)
    assert ctx.qpow(Fraction(1, 2)) == pytest.approx(math.sqrt(0.5), rel=1e-16)
    assert ctx.qpow(Fraction(-3, 1)) == pytest.approx(8.0, rel=1e-15)
    # equal exponents give identical values even when assembled differently
    assert ctx.qpow(Fraction(2, 4)) == ctx.qpow(Fraction(1, 2))


def test_mp_backend_types():
    ctx = QContext(q=0.5, digits=30)
    assert ctx.is_mp
    assert isinstance(ctx.q, mpmath.mpf)
    val = ctx.qpow(Fraction(1, 3))
    assert isinstance(val, mpmath.mpf)
    assert float(val) == pytest.approx(0.5 ** (1.0 / 3.0), rel=1e-15)


def test_with_digits_round_trip():
    ctx = QContext(q=0.5)
    hi = ctx.with_digits(25)
    assert hi.digits == 25
    assert float(hi.c) == pytest.approx(float(ctx.c), rel=1e-16)
    assert hi.with_digits(None) == ctx


def test_make_keeps_real_real():
    ctx = QContext(q=0.5)
    assert isinstance(ctx.make(2), float)
    assert isinstance(ctx.make(1 + 1j), complex)
    hi = ctx.with_digits(20)
    assert isinstance(hi.make(2), mpmath.mpf)
    assert isinstance(hi.make(1j), mpmath.mpc)


def test_lattice_shift_validation():
    assert as_lattice_shift(Fraction(3, 2)) == 3
    assert as_lattice_shift(-2) == -4
    assert as_lattice_shift(0.5) == 1
    with pytest.raises(ValueError):
        as_lattice_shift(0.4)
