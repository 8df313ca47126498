"""Scalar q-arithmetic: q-Pochhammer symbols, q-binomial coefficients and
the eigenvalue sequences of the two oscillator realizations.

All functions are pure. Each accepts an optional ``digits`` argument that
switches the computation to the mpmath backend with that many decimal
digits; the default is ordinary doubles.
"""

from __future__ import annotations

import math

import mpmath

from .context import GUARD_DIGITS


def _check_q(q):
    if not 0 < q < 1:
        raise ValueError(f"q must lie in (0, 1), got {q}")


def _workprec(digits):
    if digits is None:
        from contextlib import nullcontext
        return nullcontext()
    return mpmath.workdps(digits + GUARD_DIGITS)


def _as_base(q, digits):
    return float(q) if digits is None else mpmath.mpf(q)


def qpochhammer(q, n: int, digits: int | None = None):
    """The finite product (q, q)_n = (1-q)(1-q^2)...(1-q^n).

    Returns 1 for n = 0. Strictly positive for q in (0, 1).
    """
    _check_q(q)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    with _workprec(digits):
        qq = _as_base(q, digits)
        out = qq / qq  # one, in the backend type
        power = out
        for _ in range(n):
            power = power * qq
            out = out * (1 - power)
        return out


def qbinomial(q, n: int, k: int, digits: int | None = None):
    """Gaussian binomial coefficient (q,q)_n / ((q,q)_k (q,q)_{n-k}).

    Out-of-range k (k < 0 or k > n) returns 0, matching the boundary
    conventions of the additive recursion; see ``qbinomial_triangle`` for
    the recursion itself.
    """
    _check_q(q)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0.0 if digits is None else mpmath.mpf(0)
    with _workprec(digits):
        num = qpochhammer(q, n, digits)
        den = qpochhammer(q, k, digits) * qpochhammer(q, n - k, digits)
        return num / den


def qbinomial_triangle(q, nmax: int, digits: int | None = None):
    """All rows D_k^n for n = 0..nmax via D_k^{n+1} = q^k D_k^n + D_{k-1}^n.

    Returns a list of lists, row n having n+1 entries. Every term in the
    recursion is positive, so the triangle is forward stable; it is the
    independent construction the closed form is checked against.
    """
    _check_q(q)
    if nmax < 0:
        raise ValueError(f"nmax must be nonnegative, got {nmax}")
    with _workprec(digits):
        qq = _as_base(q, digits)
        one = qq / qq
        rows = [[one]]
        qpowers = [one]
        for n in range(nmax):
            prev = rows[-1]
            qpowers.append(qpowers[-1] * qq)
            nxt = []
            for k in range(n + 2):
                left = qpowers[k] * prev[k] if k <= n else 0
                up = prev[k - 1] if k >= 1 else 0
                nxt.append(left + up)
            rows.append(nxt)
        return rows


def arik_coon_eigenvalue(q, n: int, digits: int | None = None):
    """Number-operator eigenvalue (1 - q^n)/(1 - q); zero at n = 0."""
    _check_q(q)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    with _workprec(digits):
        qq = _as_base(q, digits)
        return (1 - qq ** n) / (1 - qq)


def arik_coon_eigenvalues_by_recursion(q, count: int, digits: int | None = None):
    """First ``count`` eigenvalues from lambda_{n+1} = q lambda_n + 1."""
    _check_q(q)
    with _workprec(digits):
        qq = _as_base(q, digits)
        lam = qq * 0
        out = [lam]
        for _ in range(count - 1):
            lam = qq * lam + 1
            out.append(lam)
        return out


def macfarlane_eigenvalue(q, n: int, digits: int | None = None):
    """Number-operator eigenvalue -q^{-n} (1 - q^n)/(1 - q).

    Nonpositive for every n, strictly decreasing in n.
    """
    _check_q(q)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    with _workprec(digits):
        qq = _as_base(q, digits)
        return -(qq ** (-n)) * (1 - qq ** n) / (1 - qq)


def macfarlane_eigenvalues_by_recursion(q, count: int, digits: int | None = None):
    """First ``count`` eigenvalues from q lambda_{n+1} = lambda_n - 1."""
    _check_q(q)
    with _workprec(digits):
        qq = _as_base(q, digits)
        lam = qq * 0
        out = [lam]
        for _ in range(count - 1):
            lam = (lam - 1) / qq
            out.append(lam)
        return out


def hermite(n: int, s):
    """Physicists' Hermite polynomial H_n(s).

    Three-term recurrence H_{n+1} = 2 s H_n - 2 n H_{n-1}. Works on
    scalars and on numpy arrays alike.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    h_prev = s * 0 + 1.0
    if n == 0:
        return h_prev
    h = 2.0 * s
    for m in range(1, n):
        h, h_prev = 2.0 * s * h - 2.0 * m * h_prev, h
    return h


def classical_binomial(n: int, k: int) -> float:
    """Ordinary binomial coefficient, the q -> 1 limit of qbinomial."""
    if k < 0 or k > n:
        return 0.0
    return float(math.comb(n, k))
