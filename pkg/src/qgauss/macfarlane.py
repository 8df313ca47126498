"""Eigenfunctions B_n of the second oscillator (commutation relation
b'b - q b b' = 1 with b' the conjugate of b under the parity-twisted
pairing).

The family lives on the same integer-center Gaussians as the first
oscillator but with rapidly growing coefficients and an indefinite
normalization (B_n, B_n) = (-1)^n, so the Gram workflow carries an
explicit precision budget.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .context import QContext, magnitude
from .qnum import hermite, macfarlane_eigenvalue, qbinomial, qpochhammer
from .chain import (GaussianChain, alpha, apply_ladder, evaluate, inner,
                    mac_lower, mac_raise, relative_coeff_distance, scale)
from .dg import _limit_grid
from .report import GramReport


@dataclass(frozen=True)
class MacCoefficients:
    """zeta is the overall scale, E the per-center coefficients of
    B_n = zeta_n sum_k E_k q^{(y-k)^2}; recursion_gap records how far the
    two-term recursion construction of E strays from the closed form."""

    n: int
    ctx: QContext
    zeta: object
    E: list
    recursion_gap: float


def mac_zeta(ctx: QContext, n: int, alpha_w=None):
    """zeta_n = alpha_w q^{n(n-1)/4} / sqrt((q, q)_n); alpha_w defaults to
    the unweighted ground-state constant."""
    with ctx.prec():
        if alpha_w is None:
            alpha_w = alpha(ctx)
        return (alpha_w * ctx.qpow(Fraction(n * (n - 1), 4))
                / ctx.sqrt(qpochhammer(ctx.q, n, ctx.digits)))


def _mac_E_closed(ctx: QContext, n: int) -> list:
    out = []
    with ctx.prec():
        for k in range(n + 1):
            sign = -1 if k % 2 else 1
            out.append(sign * qbinomial(ctx.q, n, k, ctx.digits)
                       * ctx.qpow(Fraction(-2 * n * k + k, 2)))
    return out


def _mac_E_recursion(ctx: QContext, n: int) -> list:
    """Build E row by row from E^n_k = -E^{n-1}_{k-1} (1-q^n)/(1-q^k)
    q^{-n-k+3/2}, anchored at E^n_0 = 1."""
    with ctx.prec():
        q = ctx.q
        row = [q / q]  # backend-typed 1
        for m in range(1, n + 1):
            nxt = [q / q]
            for k in range(1, m + 1):
                factor = (1 - q ** m) / (1 - q ** k)
                nxt.append(-row[k - 1] * factor
                           * ctx.qpow(Fraction(-2 * m - 2 * k + 3, 2)))
            row = nxt
    return row


def mac_coeffs(ctx: QContext, n: int) -> MacCoefficients:
    """Closed-form coefficients, cross-checked against the independent
    recursion construction (relative gap stored, expected < 1e-12)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    closed = _mac_E_closed(ctx, n)
    recursed = _mac_E_recursion(ctx, n)
    with ctx.prec():
        gap = 0.0
        for a, b in zip(closed, recursed):
            gap = max(gap, magnitude(a - b) / magnitude(a))
        zeta = mac_zeta(ctx, n)
    return MacCoefficients(n=n, ctx=ctx, zeta=zeta, E=closed, recursion_gap=gap)


def build_Bn(ctx: QContext, n: int) -> GaussianChain:
    table = mac_coeffs(ctx, n)
    with ctx.prec():
        return GaussianChain(ctx, {2 * k: table.zeta * table.E[k]
                                   for k in range(n + 1)})


def build_Bn_by_raising(ctx: QContext, n: int) -> GaussianChain:
    """B_n built by n signed raising steps,
    B_{m+1} = -(b' B_m) / sqrt(-lam_{m+1}), from B_0 = alpha g_0."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    with ctx.prec():
        chain = GaussianChain(ctx, {0: alpha(ctx)})
        op = mac_raise(ctx)
        for m in range(n):
            lam = macfarlane_eigenvalue(ctx.q, m + 1, ctx.digits)
            chain = scale(apply_ladder(op, chain), -1 / ctx.sqrt(-lam))
        return chain


def mac_ladder_check(ctx: QContext, n: int) -> dict:
    """Residuals of b B_n = sqrt(-lam_n) B_{n-1} and
    b' B_n = -sqrt(-lam_{n+1}) B_{n+1}, relative to the largest target
    coefficient (absolute residuals are meaningless at these magnitudes)."""
    if n < 1:
        raise ValueError("ladder check needs n >= 1")
    with ctx.prec():
        b_prev = build_Bn(ctx, n - 1)
        b_n = build_Bn(ctx, n)
        b_next = build_Bn(ctx, n + 1)
        lam_n = macfarlane_eigenvalue(ctx.q, n, ctx.digits)
        lam_next = macfarlane_eigenvalue(ctx.q, n + 1, ctx.digits)
        lowered = apply_ladder(mac_lower(ctx), b_n)
        raised = apply_ladder(mac_raise(ctx), b_n)
        low_res = relative_coeff_distance(lowered, scale(b_prev, ctx.sqrt(-lam_n)))
        raise_res = relative_coeff_distance(raised,
                                            scale(b_next, -ctx.sqrt(-lam_next)))
    return {"n": n, "lower_residual": low_res, "raise_residual": raise_res}


def number_operator_check(ctx: QContext, n: int) -> float:
    """Relative coefficient residual of b'b B_n = lam_n B_n."""
    with ctx.prec():
        b_n = build_Bn(ctx, n)
        lam = macfarlane_eigenvalue(ctx.q, n, ctx.digits)
        applied = apply_ladder(mac_raise(ctx), apply_ladder(mac_lower(ctx), b_n))
        return relative_coeff_distance(applied, scale(b_n, lam))


def coefficient_dynamic_range_digits(q: float, nmax: int) -> float:
    """Decimal digits spanned by the B_n coefficient table up to nmax,
    log10 of q^{-3 n(n-1)/4}. The crude worst-case budget."""
    return 0.75 * nmax * (nmax - 1) * math.log10(1.0 / float(q))


def gram_term_budget(q: float, nmax: int) -> float:
    """Largest sum of absolute term magnitudes appearing in any Gram
    entry, the quantity that actually bounds roundoff in the twisted
    overlaps. Each (n, m) entry is a double sum whose (j, k) term has
    magnitude C_j C_k q^{e} with a bounded exponent, so the budget stays
    modest even when the raw coefficients span many decades."""
    q = float(q)
    worst = 0.0
    for n in range(nmax + 1):
        for m in range(n, nmax + 1):
            znm = (0.25 * (n * (n - 1) + m * (m - 1))
                   * math.log10(1.0 / q))
            total = 0.0
            for j in range(n + 1):
                cj = float(qbinomial(q, n, j))
                for k in range(m + 1):
                    ck = float(qbinomial(q, m, k))
                    e = ((j + k) ** 2 / 2.0 - (n - 0.5) * j - (m - 0.5) * k)
                    total += cj * ck * 10.0 ** (-e * math.log10(1.0 / q) - znm)
            # restore the zeta scales and the sqrt(pochhammer) denominators
            pn = float(qpochhammer(q, n))
            pm = float(qpochhammer(q, m))
            worst = max(worst, total / math.sqrt(pn * pm))
    return worst


def mac_auto_digits(q: float, nmax: int, tol: float) -> int | None:
    """Pick a working precision for the indefinite Gram at tolerance tol
    from the dynamic-range budget: enough digits that (coefficient span)
    times unit roundoff sits under tol. Returns None when double
    precision already suffices."""
    span = coefficient_dynamic_range_digits(q, nmax)
    needed = span + math.log10(1.0 / tol) + 2.0
    if needed <= 15.0:
        return None
    return int(math.ceil(needed))


def _twisted_entry_exact(q: float, n: int, m: int) -> float:
    """(B_n, B_m) evaluated with exact rational bookkeeping.

    Every term of the twisted double sum is +-C_j^n C_k^m q^{e} with e a
    quarter-integer, and the double q is itself an exact rational, so the
    terms can be grouped by the fractional part of e and each group summed
    in Fraction arithmetic. All of the catastrophic cancellation happens
    inside those exact group sums (off-diagonal groups collapse to the
    rational zero, the diagonal to +-(q, q)_n), leaving a handful of
    correctly rounded products at the end.
    """
    q_rat = Fraction(q)
    poch = [Fraction(1)]
    for k in range(1, max(n, m) + 1):
        poch.append(poch[-1] * (1 - q_rat ** k))

    def binom(nn: int, j: int) -> Fraction:
        return poch[nn] / (poch[j] * poch[nn - j])

    base = Fraction(n * (n - 1) + m * (m - 1), 4)
    groups: dict = {}
    for j in range(n + 1):
        for k in range(m + 1):
            e = (Fraction((j + k) ** 2, 2) - (n - Fraction(1, 2)) * j
                 - (m - Fraction(1, 2)) * k + base)
            whole = math.floor(e)
            term = (-1) ** (j + k) * binom(n, j) * binom(m, k) * q_rat ** whole
            frac = e - whole
            groups[frac] = groups.get(frac, Fraction(0)) + term
    lnq = math.log(q)
    total = sum(float(s) * math.exp(lnq * float(frac))
                for frac, s in groups.items())
    return total / math.sqrt(float(poch[n]) * float(poch[m]))


def indefinite_gram(ctx: QContext, nmax: int) -> GramReport:
    """Parity-twisted Gram of B_0..B_nmax against diag((-1)^n).

    In the double backend the entries come from the exact-rational group
    sums of _twisted_entry_exact, so the cancellation budget never touches
    the result. A context with explicit digits instead measures the naive
    term-by-term sum at that precision (that is the point of asking for a
    specific precision: the deviation exposes the budget), and entries are
    kept in the backend's own type so the deviation can be recomputed
    below double resolution. Notes carry the alternating-sign check and
    both precision budget figures.
    """
    if ctx.digits is None:
        q = float(ctx.q)
        matrix = [[_twisted_entry_exact(q, n, m) for m in range(nmax + 1)]
                  for n in range(nmax + 1)]
    else:
        chains = [build_Bn(ctx, n) for n in range(nmax + 1)]
        matrix = []
        with ctx.prec():
            for f in chains:
                matrix.append([inner(f, g, kind="parity_twisted").real
                               for g in chains])
    target = [[(-1) ** i if i == j else 0 for j in range(nmax + 1)]
              for i in range(nmax + 1)]
    signs_ok = all((matrix[i][i] > 0) == (i % 2 == 0) for i in range(nmax + 1))
    notes = {
        "family": "mac",
        "sign_alternation_ok": signs_ok,
        "coefficient_dynamic_range_digits":
            round(coefficient_dynamic_range_digits(float(ctx.q), nmax), 2),
        "gram_term_budget": float(gram_term_budget(float(ctx.q), nmax)),
    }
    return GramReport(labels=list(range(nmax + 1)), matrix=matrix, target=target,
                      precision_digits=ctx.digits, notes=notes)


def mac_limit_ratio_curve(n: int, c: float, pts: np.ndarray) -> np.ndarray:
    """Even part of the ratio B_n(s / (sqrt(2) c)) / (zeta_n (-c/sqrt(2))^n)
    over e^{-s^2/2} H_n(s), on the positive points pts. The zeta_n scale is
    divided out by building the chain from the bare E coefficients."""
    ctx = QContext(c=c)
    table = mac_coeffs(ctx, n)
    chain = GaussianChain(ctx, {2 * k: table.E[k] for k in range(n + 1)})
    scale_factor = (-c / math.sqrt(2.0)) ** n
    xs = pts / (math.sqrt(2.0) * c)
    target_plus = np.exp(-pts ** 2 / 2.0) * hermite(n, pts)
    target_minus = np.exp(-pts ** 2 / 2.0) * hermite(n, -pts)
    r_plus = evaluate(chain, xs) / scale_factor / target_plus
    r_minus = evaluate(chain, -xs) / scale_factor / target_minus
    return np.real(r_plus + r_minus) / 2.0


def mac_harmonic_limit(n: int, c_list, grid=None) -> list:
    """Small-c limit study for B_n, same even-part ratio protocol as the
    first family. Each row also reports the eigenvalue drift |lam_n + n|
    and the indefinite-norm sign."""
    if grid is None:
        grid = np.arange(0.3, 3.31, 0.15)
    pts = _limit_grid(n, grid)
    rows = []
    for c in c_list:
        rho = mac_limit_ratio_curve(n, c, pts)
        med = statistics.median(rho.tolist())
        ctx = QContext(c=c)
        lam = macfarlane_eigenvalue(ctx.q, n)
        norm_sign = inner(build_Bn(ctx, n), build_Bn(ctx, n),
                          kind="parity_twisted").real
        rows.append({
            "c": float(c),
            "dev": float((rho.max() - rho.min()) / abs(med)),
            "ratio": float(med),
            "lambda_n": float(lam),
            "lambda_gap": float(abs(lam + n)),
            "sign_ok": bool((norm_sign > 0) == (n % 2 == 0)),
            "points": int(pts.size),
        })
    return rows
