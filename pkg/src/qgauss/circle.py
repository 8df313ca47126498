"""Unit-circle counterparts: the polynomial family H_n(z) with q-binomial
coefficients, a truncated third Jacobi theta function with an explicit
tail bound, the Poisson-summation identity behind it, and the two circle
orthogonality relations (the classical one and the degree-indexed one the
second oscillator produces).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .context import QContext
from .qnum import qbinomial, qpochhammer
from .chain import inner, overlap_scale
from .dg import build_phi, dg_norm
from .report import GramReport


@dataclass(frozen=True)
class RSPolynomial:
    """H_n(z) = sum_k C^n_k z^k."""

    n: int
    q: float
    coeffs: list

    def __call__(self, z):
        total = 0 * z
        for c in reversed(self.coeffs):
            total = total * z + c
        return total


@dataclass(frozen=True)
class ThetaEvaluator:
    """Symmetric truncation of theta_3(theta; q) = sum q^{n^2/2} e^{i n theta}
    at |n| <= truncation, with the geometric tail bound
    2 q^{N^2/2} / (1 - q^{N/2}) <= tol recorded."""

    q: float
    truncation: int
    tol: float

    def __call__(self, theta):
        thetas = np.asarray(theta, dtype=float)
        total = np.ones(thetas.shape, dtype=float)
        for n in range(1, self.truncation + 1):
            total = total + 2.0 * self.q ** (n * n / 2.0) * np.cos(n * thetas)
        return total if total.shape else total.item()


def rs_polynomial(n: int, q: float) -> RSPolynomial:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return RSPolynomial(n=n, q=q, coeffs=[float(qbinomial(q, n, k))
                                          for k in range(n + 1)])


def rs_eval(n: int, q: float, z):
    """Horner evaluation of H_n at z (scalar or array)."""
    return rs_polynomial(n, q)(z)


def theta_truncation(q: float, tol: float) -> int:
    """Smallest N with 2 q^{N^2/2} / (1 - q^{N/2}) <= tol; the tail beyond
    N is dominated by the geometric series with ratio q^{N/2}."""
    if not 0.0 < q < 1.0:
        raise ValueError("q must lie in (0, 1)")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    N = 1
    while 2.0 * q ** (N * N / 2.0) / (1.0 - q ** (N / 2.0)) > tol:
        N += 1
    return N


def make_theta_evaluator(q: float, tol: float = 1e-14) -> ThetaEvaluator:
    return ThetaEvaluator(q=q, truncation=theta_truncation(q, tol), tol=tol)


def theta3(theta, q: float, tol: float = 1e-14):
    """theta_3(theta; q), real and positive on the real line for q in (0, 1)."""
    return make_theta_evaluator(q, tol)(theta)


def poisson_check(c: float, theta_grid=None) -> float:
    """Max absolute gap between the wrapped-Gaussian sum
    sum_k e^{-2 (pi/c)^2 (theta+k)^2} and its resummation
    sqrt(c^2 / 2 pi) theta_3(2 pi theta; q), with q = e^{-c^2}.

    Both sides are truncated to tails below 1e-14 and compared on the
    grid (default 17 equispaced points spanning one period).
    """
    if theta_grid is None:
        theta_grid = np.linspace(0.0, 1.0, 17)
    thetas = np.asarray(theta_grid, dtype=float)
    rate = 2.0 * (math.pi / c) ** 2
    # e^{-rate (K - max|theta|)^2} <= 1e-16 once K - 1 >= sqrt(37 / rate)
    K = int(math.ceil(1.0 + np.abs(thetas).max() + math.sqrt(37.0 / rate)))
    left = np.zeros(thetas.shape, dtype=float)
    for k in range(-K, K + 1):
        left += np.exp(-rate * (thetas + k) ** 2)
    q = math.exp(-c * c)
    right = math.sqrt(c * c / (2.0 * math.pi)) * theta3(2.0 * math.pi * thetas,
                                                        q, tol=1e-15)
    return float(np.abs(left - right).max())


def _check_points(quad_points: int):
    if quad_points < 64 or quad_points & (quad_points - 1):
        raise ValueError("quad_points must be a power of two, at least 64")


def _gram_truncation(q: float, nmax: int) -> int:
    """Theta truncation for the circle Grams. The product of two
    polynomial factors carries harmonics up to 2 nmax, and the trapezoid
    integral pairs each one against the matching theta harmonic, so every
    term up to there is load-bearing; past it the tail bound takes over."""
    return max(theta_truncation(q, 1e-16), 2 * nmax + 1)


def circle_mac_amplification(q: float, nmax: int) -> float:
    """Worst-case roundoff amplification of the degree-indexed circle
    Gram: max over entries of |integrand|_max / sqrt(|T_nn T_mm|).

    The factor H_n(-q^{-(n-1/2)} e^{i2pi theta}) reaches
    sum_k C^n_k q^{-(n-1/2)k} in magnitude, while the integral collapses
    to the much smaller q^{-n(n-1)/2}(q,q)_n, so the trapezoid sum
    cancels by this ratio and loses the matching number of digits."""
    theta0 = 1.0 + 2.0 * sum(q ** (m * m / 2.0)
                             for m in range(1, theta_truncation(q, 1e-16) + 1))
    bound = [sum(float(qbinomial(q, n, k)) * q ** (-(n - 0.5) * k)
                 for k in range(n + 1)) for n in range(nmax + 1)]
    target = [q ** (-n * (n - 1) / 2.0) * float(qpochhammer(q, n))
              for n in range(nmax + 1)]
    return max(bound[n] * bound[m] * theta0 / math.sqrt(target[n] * target[m])
               for n in range(nmax + 1) for m in range(nmax + 1))


def circle_mac_auto_digits(q: float, nmax: int) -> int | None:
    """Working precision for circle_gram_mac when the context leaves it
    unspecified: enough digits that the roundoff floor sits below 1e-12
    absolute and 1e-9 relative. None when double precision already does."""
    theta0 = 1.0 + 2.0 * sum(q ** (m * m / 2.0)
                             for m in range(1, theta_truncation(q, 1e-16) + 1))
    bound = [sum(float(qbinomial(q, n, k)) * q ** (-(n - 0.5) * k)
                 for k in range(n + 1)) for n in range(nmax + 1)]
    peak = max(bound) ** 2 * theta0
    digits = math.ceil(math.log10(
        max(peak * 1e13, circle_mac_amplification(q, nmax) * 1e9))) + 1
    return None if digits <= 15 else digits


def _horner(coeffs, z):
    total = 0 * z
    for c in reversed(coeffs):
        total = total * z + c
    return total


def _circle_gram_mac_mp(ctx: QContext, nmax: int, quad_points: int,
                        conjugate_first: bool, digits: int):
    """High-precision trapezoid for the degree-indexed Gram. Returns
    (matrix, target) with backend-native high-precision entries so the
    report's deviations resolve below double rounding."""
    work = ctx.with_digits(digits)
    with work.prec():
        q = work.q
        trunc = _gram_truncation(float(ctx.q), nmax)
        qh = [work.qpow(Fraction(m * m, 2)) for m in range(trunc + 1)]
        points = quad_points
        weight = []
        for j in range(points):
            acc = mpmath.mpf(1)
            for m in range(1, trunc + 1):
                acc += 2 * qh[m] * mpmath.cospi(mpmath.mpf(2 * m * j) / points)
            weight.append(acc)
        zs = [mpmath.expjpi(mpmath.mpf(2 * j) / points)
              for j in range(points)]
        coeffs = [[qbinomial(q, n, k) for k in range(n + 1)]
                  for n in range(nmax + 1)]
        args = [-work.qpow(Fraction(1 - 2 * n, 2)) for n in range(nmax + 1)]
        first = [[_horner(coeffs[n],
                          args[n] * (z.conjugate() if conjugate_first else z))
                  for z in zs] for n in range(nmax + 1)]
        second = [[_horner(coeffs[m], args[m] * z) for z in zs]
                  for m in range(nmax + 1)]
        matrix = []
        for n in range(nmax + 1):
            row = []
            for m in range(nmax + 1):
                acc = mpmath.mpc(0)
                for j in range(points):
                    acc += first[n][j] * second[m][j] * weight[j]
                row.append(mpmath.re(acc) / points)
            matrix.append(row)
        target = [[work.qpow(Fraction(-n * (n - 1), 2))
                   * qpochhammer(q, n) * (-1) ** n if n == m
                   else mpmath.mpf(0) for m in range(nmax + 1)]
                  for n in range(nmax + 1)]
    return matrix, target


def circle_gram_dg(ctx: QContext, nmax: int, quad_points: int = 512) -> GramReport:
    """G_{nm} = int_0^1 H_n(-q^{-1/2} e^{-i2pi theta})
    H_m(-q^{-1/2} e^{+i2pi theta}) theta_3(2 pi theta; q) dtheta, reported
    against diag(q^{-n} (q, q)_n).

    The integrand is a trigonometric polynomial times the truncated theta
    series, so the equispaced rule is exact once quad_points clears the
    top harmonic; 512 is far past that knee for the tested degrees.
    """
    _check_points(quad_points)
    q = float(ctx.q)
    thetas = np.arange(quad_points) / quad_points
    z_plus = np.exp(2j * np.pi * thetas)
    z_minus = np.conj(z_plus)
    weight = ThetaEvaluator(q=q, truncation=_gram_truncation(q, nmax),
                            tol=1e-16)(2.0 * np.pi * thetas)
    arg = -(q ** -0.5)
    first = [rs_eval(n, q, arg * z_minus) for n in range(nmax + 1)]
    second = [rs_eval(m, q, arg * z_plus) for m in range(nmax + 1)]
    matrix = [[float(np.mean(first[n] * second[m] * weight).real)
               for m in range(nmax + 1)] for n in range(nmax + 1)]
    target = [[float(q ** -n * qpochhammer(q, n)) if n == m else 0.0
               for m in range(nmax + 1)] for n in range(nmax + 1)]
    return GramReport(labels=list(range(nmax + 1)), matrix=matrix, target=target,
                      precision_digits=None,
                      notes={"family": "circle-dg", "points": quad_points})


def circle_gram_mac(ctx: QContext, nmax: int, quad_points: int = 512,
                    conjugate_first: bool = False) -> GramReport:
    """The degree-indexed circle relation: G_{nm} =
    int_0^1 H_n(-q^{-(n-1/2)} e^{+i2pi theta})
    H_m(-q^{-(m-1/2)} e^{+i2pi theta}) theta_3(2 pi theta; q) dtheta,
    against diag(q^{-n(n-1)/2} (q, q)_n (-1)^n).

    Both factors carry e^{+i2pi theta}, matching the relation as written;
    conjugate_first=True flips the first factor's phase (the convention
    the classical relation uses) for side-by-side comparison. That
    variant is not diagonal, and the report keeps the stated target so
    the difference is visible rather than hidden.

    The trapezoid sum cancels by the circle_mac_amplification factor (the
    polynomial arguments grow like q^{-(n-1/2)} while the integral stays
    modest), so when the context does not fix a precision the working
    digits come from circle_mac_auto_digits; double is kept only while it
    can actually deliver the entries.
    """
    _check_points(quad_points)
    q = float(ctx.q)
    digits = ctx.digits if ctx.digits is not None \
        else circle_mac_auto_digits(q, nmax)
    if digits is not None:
        matrix, target = _circle_gram_mac_mp(ctx, nmax, quad_points,
                                             conjugate_first, digits)
    else:
        thetas = np.arange(quad_points) / quad_points
        z_plus = np.exp(2j * np.pi * thetas)
        z_first = np.conj(z_plus) if conjugate_first else z_plus
        weight = ThetaEvaluator(q=q, truncation=_gram_truncation(q, nmax),
                                tol=1e-16)(2.0 * np.pi * thetas)
        first = [rs_eval(n, q, -(q ** -(n - 0.5)) * z_first)
                 for n in range(nmax + 1)]
        second = [rs_eval(m, q, -(q ** -(m - 0.5)) * z_plus)
                  for m in range(nmax + 1)]
        matrix = [[float(np.mean(first[n] * second[m] * weight).real)
                   for m in range(nmax + 1)] for n in range(nmax + 1)]
        target = [[float(q ** (-n * (n - 1) / 2.0) * qpochhammer(q, n)
                         * (-1) ** n) if n == m else 0.0
                   for m in range(nmax + 1)] for n in range(nmax + 1)]
    notes = {"family": "circle-mac", "points": quad_points,
             "conjugate_first": conjugate_first,
             "working_digits": digits,
             "amplification": circle_mac_amplification(q, nmax)}
    return GramReport(labels=list(range(nmax + 1)), matrix=matrix, target=target,
                      precision_digits=digits, notes=notes)


def parseval_bridge(ctx: QContext, nmax: int, quad_points: int = 512) -> GramReport:
    """Two routes to the same Gram: the analytic real-line overlaps of
    phi_n, and the circle integrals carried back across the Fourier /
    Poisson bookkeeping.

    The transform of Phi_n is sqrt(pi/c^2) e^{-(pi/c)^2 theta^2} times the
    circle polynomial H_n(-q^{-1/2} e^{i2pi theta}); folding the line onto
    [0, 1] wraps the Gaussian into sqrt(c^2/2pi) theta_3, so
    int Phi_n Phi_m dx = sqrt(pi/2c^2) * (circle Gram entry). Dividing by
    the norms gives the phi Gram, which the report compares entrywise.
    """
    circle = circle_gram_dg(ctx, nmax, quad_points)
    norms = [float(dg_norm(ctx, n)) for n in range(nmax + 1)]
    scale = float(overlap_scale(ctx))
    matrix = [[scale * circle.matrix[n][m] / (norms[n] * norms[m])
               for m in range(nmax + 1)] for n in range(nmax + 1)]
    phis = [build_phi(ctx, n) for n in range(nmax + 1)]
    target = [[float(inner(phis[n], phis[m]).real) for m in range(nmax + 1)]
              for n in range(nmax + 1)]
    return GramReport(labels=list(range(nmax + 1)), matrix=matrix, target=target,
                      precision_digits=None,
                      notes={"family": "parseval-bridge",
                             "points": quad_points})


def theta_tail_probe(q: float, tol: float, thetas=None) -> float:
    """Largest observed change in theta3 when the truncation is pushed 5
    terms past the bound-selected N; should sit below tol."""
    if thetas is None:
        thetas = np.linspace(0.0, 2.0 * np.pi, 9)
    N = theta_truncation(q, tol)
    base = ThetaEvaluator(q=q, truncation=N, tol=tol)(thetas)
    more = ThetaEvaluator(q=q, truncation=N + 5, tol=tol)(thetas)
    return float(np.abs(np.asarray(base) - np.asarray(more)).max())
