"""The orthogonal Gaussian-combination polynomials Phi_n / phi_n.

Phi_n is the alternating q-binomial combination of unit Gaussians at the
integers 0..n; phi_n is its normalization. Both are built two independent
ways (closed-form coefficients, repeated raising from the ground state)
and the module also carries the harmonic-oscillator small-c limit study
and the lognormal-weight polynomial bridge.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .context import QContext, magnitude
from .qnum import arik_coon_eigenvalue, hermite, qbinomial, qpochhammer
from .chain import (GaussianChain, alpha, apply_ladder, arik_lower, arik_raise,
                    coeff_distance, evaluate, inner, mul_qlinear, overlap_scale,
                    scale, shift)
from .report import GramReport


@dataclass(frozen=True)
class DGCoefficients:
    """Coefficient table of one polynomial: raw[k] multiplies q^{(x-k)^2}
    in Phi_n, normalized[k] = raw[k] / ||Phi_n|| does so in phi_n."""

    n: int
    ctx: QContext
    raw: list
    normalized: list


@dataclass(frozen=True)
class SWPolynomial:
    """P_n(u; s) = sum_k C^n_k (-1)^k q^{(k+s)^2 - k/2} u^k, the polynomial
    part of Phi_n(x - s) after the substitution u = q^{-2x}."""

    n: int
    s: Fraction
    ctx: QContext
    coeffs: list

    def __call__(self, u):
        total = 0 * u
        for c in reversed(self.coeffs):
            total = total * u + c
        return total


def dg_norm(ctx: QContext, n: int):
    """||Phi_n|| = (pi/2c^2)^{1/4} q^{-n/2} sqrt((q, q)_n)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    with ctx.prec():
        return (ctx.sqrt(overlap_scale(ctx)) * ctx.qpow(Fraction(-n, 2))
                * ctx.sqrt(qpochhammer(ctx.q, n, ctx.digits)))


def dg_coefficients(ctx: QContext, n: int) -> DGCoefficients:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    with ctx.prec():
        pochn = qpochhammer(ctx.q, n, ctx.digits)
        a = alpha(ctx)
        raw = []
        normalized = []
        for k in range(n + 1):
            binom = qbinomial(ctx.q, n, k, ctx.digits)
            sign = -1 if k % 2 else 1
            raw.append(sign * binom * ctx.qpow(Fraction(-k, 2)))
            normalized.append(sign * a * binom * ctx.qpow(Fraction(n - k, 2))
                              / ctx.sqrt(pochn))
    return DGCoefficients(n=n, ctx=ctx, raw=raw, normalized=normalized)


def build_Phi(ctx: QContext, n: int) -> GaussianChain:
    """Unnormalized Phi_n as a chain on integer centers 0..n."""
    table = dg_coefficients(ctx, n)
    return GaussianChain(ctx, {2 * k: table.raw[k] for k in range(n + 1)})


def build_phi(ctx: QContext, n: int) -> GaussianChain:
    """Normalized phi_n; inner(phi_n, phi_n) = 1 analytically."""
    table = dg_coefficients(ctx, n)
    return GaussianChain(ctx, {2 * k: table.normalized[k] for k in range(n + 1)})


def build_An_by_raising(ctx: QContext, n: int) -> GaussianChain:
    """phi_n built the second way: n raising steps from the ground state,
    then one overall scale sqrt((1-q)^n / (q, q)_n).

    Agreement with build_phi is the statement that the raising recursion's
    coefficient triangle coincides with the q-binomial triangle.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    with ctx.prec():
        chain = GaussianChain(ctx, {0: alpha(ctx)})
        op = arik_raise(ctx)
        for _ in range(n):
            chain = apply_ladder(op, chain)
        q = ctx.q
        factor = ctx.sqrt((1 - q) ** n / qpochhammer(ctx.q, n, ctx.digits))
        return scale(chain, factor)


def ladder_check(ctx: QContext, n: int) -> dict:
    """Coefficient-space residuals of the two ladder relations at level n:
    lowering onto sqrt(lam_n) phi_{n-1} and raising onto
    sqrt(lam_{n+1}) phi_{n+1}."""
    if n < 1:
        raise ValueError("ladder check needs n >= 1")
    with ctx.prec():
        phi_prev = build_phi(ctx, n - 1)
        phi_n = build_phi(ctx, n)
        phi_next = build_phi(ctx, n + 1)
        lowered = apply_ladder(arik_lower(ctx), phi_n)
        raised = apply_ladder(arik_raise(ctx), phi_n)
        lam_n = arik_coon_eigenvalue(ctx.q, n, ctx.digits)
        lam_next = arik_coon_eigenvalue(ctx.q, n + 1, ctx.digits)
        low_res = coeff_distance(lowered, scale(phi_prev, ctx.sqrt(lam_n)))
        raise_res = coeff_distance(raised, scale(phi_next, ctx.sqrt(lam_next)))
    return {"n": n, "lower_residual": low_res, "raise_residual": raise_res}


def gram_phi(ctx: QContext, nmax: int) -> GramReport:
    """Gram matrix of phi_0..phi_nmax under the standard inner product,
    reported against the identity."""
    chains = [build_phi(ctx, n) for n in range(nmax + 1)]
    matrix = []
    with ctx.prec():
        for f in chains:
            matrix.append([float((inner(f, g)).real) for g in chains])
    target = [[1.0 if i == j else 0.0 for j in range(nmax + 1)]
              for i in range(nmax + 1)]
    return GramReport(labels=list(range(nmax + 1)), matrix=matrix, target=target,
                      precision_digits=ctx.digits, notes={"family": "dg"})


def daughter_sum_rule(ctx: QContext, n: int, m: int):
    """Sum of the normalized daughter coefficients of phi_n phi_m.

    The product expands as alpha^2 sum_k d_k q^{2(x-k/2)^2} and the d_k
    sum to delta_{nm}: integrating against any half-period weight picks up
    one common factor, which is why the whole orthogonality survives
    arbitrary periodic weights. Returns sum_k d_k.
    """
    from .chain import product_daughters
    with ctx.prec():
        fn = build_phi(ctx, n).conjugate()
        fm = build_phi(ctx, m)
        total = product_daughters(fn, fm).coefficient_sum()
        return total / (alpha(ctx) ** 2)


# -- harmonic-oscillator limit ----------------------------------------------

def hermite_zeros(n: int) -> np.ndarray:
    if n == 0:
        return np.array([])
    return np.polynomial.hermite.hermroots([0.0] * n + [1.0])


def _limit_grid(n: int, grid, margin: float = 0.2) -> np.ndarray:
    """Positive sample points, deduplicated and kept clear of the Hermite
    zeros by the stated margin (the ratio blows up at a zero)."""
    pts = np.unique(np.abs(np.asarray(grid, dtype=float)))
    pts = pts[(pts > 1e-9) & (pts <= 4.0)]
    zeros = hermite_zeros(n)
    if zeros.size:
        dist = np.min(np.abs(pts[:, None] - zeros[None, :]), axis=1)
        pts = pts[dist >= margin]
    if pts.size < 3:
        raise ValueError("grid leaves fewer than 3 usable points away from "
                         "the Hermite zeros")
    return pts


def limit_ratio_curve(n: int, c: float, pts: np.ndarray) -> np.ndarray:
    """Even part of the scaled-polynomial / Hermite-target ratio,
    rho(s) = (r_c(s) + r_c(-s)) / 2 with
    r_c(s) = Phi_n(s / (sqrt(2) c)) / ((-c/sqrt(2))^n e^{-s^2/2} H_n(s)),
    evaluated on the positive points pts."""
    ctx = QContext(c=c)
    chain = build_Phi(ctx, n)
    scale_factor = (-c / math.sqrt(2.0)) ** n
    xs = pts / (math.sqrt(2.0) * c)
    target_plus = np.exp(-pts ** 2 / 2.0) * hermite(n, pts)
    target_minus = np.exp(-pts ** 2 / 2.0) * hermite(n, -pts)
    r_plus = evaluate(chain, xs) / scale_factor / target_plus
    r_minus = evaluate(chain, -xs) / scale_factor / target_minus
    return np.real(r_plus + r_minus) / 2.0


def harmonic_limit_scan(n: int, c_list, grid=None) -> list:
    """Measure how fast Phi_n approaches the oscillator eigenfunction.

    For each width c the scaled polynomial Phi_n(s / (sqrt(2) c)) divided
    by (-c/sqrt(2))^n is compared with e^{-s^2/2} H_n(s) through the ratio
    r_c(s). The leading finite-c correction to the ratio is odd in s, so
    the even part rho(s) = (r_c(s) + r_c(-s)) / 2 converges one order
    faster; dev(c) is the spread (max - min) / |median| of rho over the
    grid. Returns one row per c with the deviation and the median ratio
    (the limit's normalization constant, reported but not asserted).
    """
    if grid is None:
        grid = np.arange(0.3, 3.31, 0.15)
    pts = _limit_grid(n, grid)
    rows = []
    for c in c_list:
        rho = limit_ratio_curve(n, c, pts)
        med = statistics.median(rho.tolist())
        dev = float((rho.max() - rho.min()) / abs(med))
        rows.append({"c": float(c), "dev": dev, "ratio": float(med),
                     "points": int(pts.size)})
    return rows


# -- the lognormal-weight polynomial bridge ---------------------------------

def stieltjes_wigert(ctx: QContext, n: int, s) -> SWPolynomial:
    """Coefficients of P_n(u; s); u^k carries C^n_k (-1)^k q^{(k+s)^2 - k/2}."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    s = Fraction(s)
    coeffs = []
    with ctx.prec():
        for k in range(n + 1):
            sign = -1 if k % 2 else 1
            exponent = (k + s) ** 2 - Fraction(k, 2)
            coeffs.append(sign * qbinomial(ctx.q, n, k, ctx.digits)
                          * ctx.qpow(exponent))
    return SWPolynomial(n=n, s=s, ctx=ctx, coeffs=coeffs)


def sw_u_of_x(ctx: QContext, x):
    """The substitution u = q^{-2x}."""
    return np.exp(-2.0 * float(ctx.ln_q) * np.asarray(x, dtype=float))


def sw_u_form(poly: SWPolynomial, x):
    """q^{x^2} u^s P_n(u; s) at u = q^{-2x}; equals Phi_n(x - s) pointwise."""
    ctx = poly.ctx
    xs = np.asarray(x, dtype=float)
    lnq = float(ctx.ln_q)
    u = np.exp(-2.0 * lnq * xs)
    pref = np.exp(lnq * (xs * xs - 2.0 * float(poly.s) * xs))
    vals = pref * poly(u)
    return vals if vals.shape else vals.item()


def sw_weight(ctx: QContext, s, x):
    """W(u(x)) = e^{-(ln u)^2 / (-2 ln q)} u^{2s-1} = q^{2x^2} q^{-2x(2s-1)}."""
    xs = np.asarray(x, dtype=float)
    lnq = float(ctx.ln_q)
    vals = np.exp(lnq * (2.0 * xs * xs - 2.0 * (2.0 * float(s) - 1.0) * xs))
    return vals if vals.shape else vals.item()


def sw_bridge_residual(ctx: QContext, n: int, s, xs=None,
                       rel_floor: float = 0.01) -> float:
    """Largest relative pointwise gap between the u-form and Phi_n(x - s)
    over xs, skipping points where Phi_n(x - s) is below rel_floor times
    its largest sampled magnitude (the ratio is meaningless at a zero)."""
    if xs is None:
        xs = np.linspace(-2.0, n + 2.0, 81)
    xs = np.asarray(xs, dtype=float)
    poly = stieltjes_wigert(ctx, n, s)
    chain = shift(build_Phi(ctx, n), -Fraction(s))
    reference = np.real(evaluate(chain, xs))
    u_side = np.asarray(sw_u_form(poly, xs), dtype=float)
    keep = np.abs(reference) >= rel_floor * np.abs(reference).max()
    return float(np.max(np.abs(u_side[keep] - reference[keep])
                        / np.abs(reference[keep])))


def sw_orthogonality(ctx: QContext, n: int, m: int, s, form: str = "du",
                     method: str = "analytic"):
    """The weighted polynomial overlap, in either written form.

    The "dx" form integrates W(u(x)) P_n P_m against plain dx, which is
    what the change-of-variables relation literally displays; it carries a
    leftover factor q^{2x} relative to the Phi overlap and does not vanish
    off the diagonal. The "du" form inserts du = -2 ln(q) u dx, cancels
    that factor exactly, and reduces to 2 c^2 times the Phi_n, Phi_m
    overlap, hence vanishes for n != m. Both are exposed; orthogonality
    claims are checked against the du form.

    method "analytic" evaluates the chain overlap in closed form,
    "quadrature" integrates W P_n P_m (times the Jacobian for du)
    numerically as an independent check.
    """
    if form not in ("du", "dx"):
        raise ValueError(f"unknown form {form!r}")
    s = Fraction(s)
    if method == "analytic":
        with ctx.prec():
            fn = shift(build_Phi(ctx, n), -s)
            fm = shift(build_Phi(ctx, m), -s)
            if form == "du":
                return 2 * ctx.c * ctx.c * inner(fn, fm)
            return inner(fn, mul_qlinear(fm, 2, 0))
    if method != "quadrature":
        raise ValueError(f"unknown method {method!r}")
    from .quad import integrate_real_line
    pn = stieltjes_wigert(ctx, n, s)
    pm = stieltjes_wigert(ctx, m, s)
    c2 = 2.0 * float(ctx.c) ** 2

    def integrand(x):
        u = sw_u_of_x(ctx, x)
        base = sw_weight(ctx, s, x) * pn(u) * pm(u)
        if form == "du":
            return base * u * c2
        return base

    return integrate_real_line(integrand, ctx, tol=1e-12)


def sw_orthogonality_residual(ctx: QContext, nmax: int, s,
                              method: str = "analytic") -> float:
    """max over n != m <= nmax of |I_nm| / sqrt(I_nn I_mm) in the du form."""
    diag = [abs(sw_orthogonality(ctx, n, n, s, "du", method))
            for n in range(nmax + 1)]
    worst = 0.0
    for n in range(nmax + 1):
        for m in range(n + 1, nmax + 1):
            off = abs(sw_orthogonality(ctx, n, m, s, "du", method))
            worst = max(worst, float(off / math.sqrt(diag[n] * diag[m])))
    return worst
