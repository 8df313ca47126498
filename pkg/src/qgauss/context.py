"""Deformation context: width parameter c and the derived base q = exp(-c**2).

Every quantity in this package is built from powers of a single base
q in (0, 1). The context pins down that base, remembers whether the
computation runs in ordinary doubles or in a configurable-precision
mpmath backend, and centralizes the exact-exponent power q**r that the
lattice algebra relies on.
"""

from __future__ import annotations

import math
from contextlib import nullcontext
from fractions import Fraction

import mpmath

# Working digits added on top of what the caller asked for, so the
# requested accuracy survives intermediate rounding.
GUARD_DIGITS = 10


class QContext:
    """Immutable pair (c, q) with q = exp(-c**2), plus the precision mode.

    Exactly one of ``c`` and ``q`` must be given; the other is derived.
    ``digits`` selects the mpmath backend with that many decimal digits;
    ``None`` means ordinary binary doubles.
    """

    __slots__ = ("c", "q", "ln_q", "digits")

    def __init__(self, c=None, q=None, digits: int | None = None):
        if (c is None) == (q is None):
            raise ValueError("supply exactly one of c and q")
        if digits is not None and digits < 1:
            raise ValueError("digits must be a positive integer")
        object.__setattr__(self, "digits", digits)
        with self.prec():
            if c is not None:
                if not c > 0:
                    raise ValueError(f"c must be positive, got {c}")
                if digits is None:
                    cval = float(c)
                    lnq = -cval * cval
                    qval = math.exp(lnq)
                else:
                    cval = mpmath.mpf(c)
                    lnq = -cval * cval
                    qval = mpmath.exp(lnq)
            else:
                if not 0 < q < 1:
                    raise ValueError(f"q must lie in (0, 1), got {q}")
                if digits is None:
                    qval = float(q)
                    lnq = math.log(qval)
                    cval = math.sqrt(-lnq)
                else:
                    qval = mpmath.mpf(q)
                    lnq = mpmath.log(qval)
                    cval = mpmath.sqrt(-lnq)
        object.__setattr__(self, "c", cval)
        object.__setattr__(self, "q", qval)
        object.__setattr__(self, "ln_q", lnq)

    def __setattr__(self, name, value):
        raise AttributeError("QContext is immutable")

    def __repr__(self):
        extra = f", digits={self.digits}" if self.digits is not None else ""
        return f"QContext(c={float(self.c)!r}, q={float(self.q)!r}{extra})"

    def __eq__(self, other):
        if not isinstance(other, QContext):
            return NotImplemented
        return (self.digits == other.digits
                and float(self.c) == float(other.c)
                and (self.digits is None or self.c == other.c))

    def __hash__(self):
        return hash((float(self.c), self.digits))

    # -- backend dispatch -------------------------------------------------

    @property
    def is_mp(self) -> bool:
        return self.digits is not None

    def prec(self):
        """Context manager installing this context's working precision."""
        if self.digits is None:
            return nullcontext()
        return mpmath.workdps(self.digits + GUARD_DIGITS)

    def qpow(self, r):
        """q**r for an exact rational exponent r.

        The exponent is kept as an integer or Fraction right up to this
        single exponentiation, so equal exponents always produce equal
        values and symbolic cancellations survive in coefficient space.
        """
        if self.digits is None:
            return math.exp(float(r) * self.ln_q)
        with self.prec():
            if isinstance(r, Fraction):
                rr = mpmath.mpf(r.numerator) / r.denominator
            else:
                rr = mpmath.mpf(r)
            return mpmath.exp(rr * self.ln_q)

    def sqrt(self, x):
        if self.digits is None:
            return math.sqrt(x)
        with self.prec():
            return mpmath.sqrt(x)

    def exp(self, x):
        if self.digits is None:
            return math.exp(x)
        with self.prec():
            return mpmath.exp(x)

    def pi(self):
        if self.digits is None:
            return math.pi
        with self.prec():
            return +mpmath.pi

    def make(self, x):
        """Coerce a Python number into this context's scalar type."""
        if self.digits is None:
            return complex(x) if (isinstance(x, complex) or im(x) != 0) else float(x)
        with self.prec():
            if isinstance(x, complex) or im(x) != 0:
                return mpmath.mpc(x)
            return mpmath.mpf(x)

    def with_digits(self, digits: int | None) -> "QContext":
        """Same deformation parameter, different precision backend."""
        return QContext(c=float(self.c), digits=digits)


# -- small generic helpers (work for float, complex, mpf and mpc) ---------

def conj(z):
    return z.conjugate()


def re(z):
    return z.real


def im(z):
    return z.imag


def magnitude(z) -> float:
    """abs(z) as an ordinary float, whatever the backend type of z."""
    return float(abs(z))


def as_lattice_shift(s) -> int:
    """Validate a half-integer shift and return twice its value as an int.

    Accepts ints, Fractions and floats that are exactly a multiple of 1/2.
    """
    f = Fraction(s)
    twice = f * 2
    if twice.denominator != 1:
        raise ValueError(f"shift {s} is not a half-integer; lattice closure would break")
    return int(twice)
