"""Half-period weight functions and the weighted orthogonality machinery.

A weight is a finite Fourier series on harmonics of e^{i 4 pi x}, so it
repeats every 1/2 and slides through every lattice shift the ladder
operators perform. Multiplying the eigenfunction family by any such w
preserves orthonormality; this module carries that demonstration and the
doubly indexed orthogonal family built from an orthonormalized set of
weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .context import QContext, conj, im, magnitude, re
from .chain import (GaussianChain, LadderOperator, alpha, apply_ladder,
                    evaluate, overlap_scale, product_daughters, scale)
from .dg import build_phi
from .report import GramReport


@dataclass(frozen=True)
class PeriodicWeight:
    """w(x) = sum_m modes[m] e^{i 4 pi m x}, period 1/2."""

    modes: dict

    def __post_init__(self):
        cleaned = {int(m): complex(v) for m, v in sorted(self.modes.items())
                   if v != 0}
        if not cleaned:
            raise ValueError("weight must have at least one nonzero mode")
        object.__setattr__(self, "modes", cleaned)

    def evaluate(self, x):
        xs = np.asarray(x, dtype=float)
        total = np.zeros(xs.shape, dtype=complex)
        for m, coeff in self.modes.items():
            total = total + coeff * np.exp(4j * np.pi * m * xs)
        return total if total.shape else total.item()

    def conjugated(self) -> "PeriodicWeight":
        return PeriodicWeight({-m: v.conjugate() for m, v in self.modes.items()})


@dataclass(frozen=True)
class WeightedChain:
    """The product function w(x) * chain(x)."""

    weight: PeriodicWeight
    chain: GaussianChain

    def evaluate(self, x):
        return self.weight.evaluate(x) * evaluate(self.chain, x)


def constant_weight(value=1.0) -> PeriodicWeight:
    return PeriodicWeight({0: value})


def cosine_weight(amplitude: float = 0.3) -> PeriodicWeight:
    """w(x) = 1 + amplitude * cos(4 pi x)."""
    half = amplitude / 2.0
    return PeriodicWeight({-1: half, 0: 1.0, 1: half})


def random_weight(rng: np.random.Generator, nmodes: int = 3,
                  mode_span: int = 2) -> PeriodicWeight:
    """A weight with nmodes distinct harmonics in [-mode_span, mode_span]
    and complex Gaussian coefficients; the constant mode is always present
    so the weight cannot be orthogonal to the ground state by accident."""
    choices = list(range(-mode_span, mode_span + 1))
    picks = rng.choice(len(choices), size=nmodes, replace=False)
    modes = {}
    for idx in picks:
        modes[choices[idx]] = complex(rng.standard_normal(),
                                      rng.standard_normal())
    modes[0] = modes.get(0, 0) + 1.0
    return PeriodicWeight(modes)


def mode_overlap(ctx: QContext, delta: int):
    """The Gaussian Fourier coefficient
    integral e^{i 4 pi delta x} q^{2 x^2} dx
        = sqrt(pi/2c^2) e^{-(4 pi delta)^2 / (8 c^2)},
    real for every harmonic separation delta. Centering the Gaussian at
    any half-integer k/2 multiplies this by e^{i 2 pi delta k} = 1, which
    is the entire shift-invariance mechanism."""
    with ctx.prec():
        c2 = ctx.c * ctx.c
        return overlap_scale(ctx) * ctx.exp(-2 * ctx.pi() ** 2 * delta * delta / c2)


def weight_gram_integral(wa: PeriodicWeight, wb: PeriodicWeight, ctx: QContext):
    """integral conj(wa(x)) wb(x) q^{2 x^2} dx via the mode-overlap kernel."""
    with ctx.prec():
        total = 0
        for m, a in wa.modes.items():
            for mp_, b in wb.modes.items():
                total = total + conj(a) * b * mode_overlap(ctx, mp_ - m)
        return total


def alpha_w(weight: PeriodicWeight, ctx: QContext):
    """(integral |w|^2 q^{2x^2} dx)^{-1/2}; the norm integral is real and
    positive for any nonzero weight."""
    with ctx.prec():
        norm_sq = weight_gram_integral(weight, weight, ctx)
        if magnitude(im(norm_sq)) > 1e-14 * magnitude(norm_sq) or re(norm_sq) <= 0:
            raise ValueError("weight norm integral must be real positive")
        return 1 / ctx.sqrt(re(norm_sq))


def build_An(ctx: QContext, weight: PeriodicWeight, n: int) -> WeightedChain:
    """A_n = (alpha_w / alpha) w phi_n, the weighted eigenfunction."""
    with ctx.prec():
        factor = alpha_w(weight, ctx) / alpha(ctx)
        return WeightedChain(weight, scale(build_phi(ctx, n), factor))


def mixed_weighted_inner(ctx: QContext, wa: PeriodicWeight, f: GaussianChain,
                         wb: PeriodicWeight, g: GaussianChain):
    """integral conj(wa f) wb g dx.

    The product conj(f) g expands in daughters q^{2(x-k/2)^2}, and the
    weighted integral of each daughter is independent of k (the harmonics
    e^{i 4 pi delta x} pick up only unit phases under half-integer
    shifts), so the whole integral is one weight factor times the daughter
    coefficient sum.
    """
    with ctx.prec():
        daughters = product_daughters(f.conjugate(), g)
        return weight_gram_integral(wa, wb, ctx) * daughters.coefficient_sum()


def weighted_inner(f: WeightedChain, g: WeightedChain):
    """Inner product of two functions carrying the same weight."""
    if f.weight.modes != g.weight.modes:
        raise ValueError("weighted inner product needs matching weights")
    ctx = f.chain.ctx
    return mixed_weighted_inner(ctx, f.weight, f.chain, f.weight, g.chain)


def apply_ladder_weighted(op: LadderOperator, f: WeightedChain) -> WeightedChain:
    """Ladder action on w * chain: the operators move everything by
    half-integer steps and w has period 1/2, so the weight passes through
    untouched and the operator acts on the chain alone."""
    return WeightedChain(f.weight, apply_ladder(op, f.chain))


def an_gram(ctx: QContext, weight: PeriodicWeight, nmax: int) -> GramReport:
    """Gram of A_0..A_nmax under the weighted inner product; the identity
    target is the degeneracy statement (same orthonormality as w = 1)."""
    family = [build_An(ctx, weight, n) for n in range(nmax + 1)]
    matrix = []
    with ctx.prec():
        for f in family:
            matrix.append([re(weighted_inner(f, g)) for g in family])
    target = [[1.0 if i == j else 0.0 for j in range(nmax + 1)]
              for i in range(nmax + 1)]
    return GramReport(labels=list(range(nmax + 1)), matrix=matrix, target=target,
                      precision_digits=ctx.digits,
                      notes={"family": "weighted", "modes": len(weight.modes)})


# -- the orthonormal weight family and the doubly indexed Gram ---------------

def weight_mode_kernel(ctx: QContext, count: int) -> np.ndarray:
    """Gram matrix of the raw Fourier modes e^{i 4 pi m x}, m = 0..count-1,
    under the q^{2x^2} kernel. Symmetric positive definite; entries decay
    like a Gaussian in the harmonic separation."""
    K = np.empty((count, count), dtype=float)
    for i in range(count):
        for j in range(count):
            K[i, j] = float(mode_overlap(ctx, j - i))
    return K


def orthonormal_weight_family(ctx: QContext, count: int) -> list:
    """First count weights of the Gram-Schmidt orthonormalization of the
    Fourier modes under the q^{2x^2} kernel, so that
    integral conj(w_n) w_m q^{2x^2} dx = delta_{nm}.

    Modified Gram-Schmidt with one reorthogonalization pass. The kernel is
    numerically singular once its condition number approaches 1/eps, which
    happens for large c (slow harmonic decay); that case raises rather
    than returning junk.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    K = weight_mode_kernel(ctx, count)
    cond = float(np.linalg.cond(K))
    if cond > 1e13:
        raise RuntimeError(
            f"mode kernel condition number {cond:.2e} too large for a "
            "double-precision orthonormalization; reduce count or c")
    basis = []
    for j in range(count):
        v = np.zeros(count, dtype=float)
        v[j] = 1.0
        for _ in range(2):
            for u in basis:
                v = v - (u @ K @ v) * u
        v = v / math.sqrt(v @ K @ v)
        basis.append(v)
    family = []
    for v in basis:
        family.append(PeriodicWeight({m: v[m] for m in range(count)
                                      if v[m] != 0.0}))
    return family


def weight_family_condition(ctx: QContext, count: int) -> float:
    return float(np.linalg.cond(weight_mode_kernel(ctx, count)))


def gamma_family_gram(ctx: QContext, nweights: int, nmax: int) -> GramReport:
    """Gram of the doubly indexed family Gamma_{nm} = (1/alpha) w_n phi_m
    over n < nweights, m <= nmax, against the identity.

    The w_n are the orthonormalized weights (their individual alpha_w is 1
    by construction, collapsing the usual alpha_w/alpha prefactor to
    1/alpha); every entry is computed through the mixed weighted inner
    product, not assumed from the factorized structure.
    """
    weights_list = orthonormal_weight_family(ctx, nweights)
    phis = [build_phi(ctx, m) for m in range(nmax + 1)]
    labels = [(n, m) for n in range(nweights) for m in range(nmax + 1)]
    with ctx.prec():
        inv_alpha = 1 / alpha(ctx)
        chains = [scale(phis[m], inv_alpha) for _, m in labels]
        matrix = []
        for (n1, _), f in zip(labels, chains):
            row = []
            for (n2, _), g in zip(labels, chains):
                val = mixed_weighted_inner(ctx, weights_list[n1], f,
                                           weights_list[n2], g)
                row.append(re(val))
            matrix.append(row)
    target = [[1.0 if i == j else 0.0 for j in range(len(labels))]
              for i in range(len(labels))]
    return GramReport(labels=labels, matrix=matrix, target=target,
                      precision_digits=ctx.digits,
                      notes={"family": "gamma", "nweights": nweights,
                             "nmax": nmax,
                             "kernel_condition":
                                 weight_family_condition(ctx, nweights)})
