"""Finite linear combinations of Gaussians q^{(x-mu)^2} on the half-integer
lattice, closed under both ladder algebras.

Centers are stored as exact integers t = 2*mu (twice-centers), never as
floats. The two primitive moves, translation by a half-integer and
multiplication by q^{a x + b} with integer a, map the lattice to itself,
and their exponent bookkeeping is done in exact rational arithmetic with a
single exponentiation at the end. Only the coefficients are inexact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .context import QContext, as_lattice_shift, conj, im, magnitude

LADDER_KINDS = ("arik_lower", "arik_raise", "mac_lower", "mac_raise")


def _normalized(coeffs: dict) -> dict:
    """Drop exact zeros and order keys for deterministic iteration."""
    return {t: a for t, a in sorted(coeffs.items()) if a != 0}


@dataclass(frozen=True)
class GaussianChain:
    """f(x) = sum_mu a_mu q^{(x-mu)^2} with mu = t/2 over integer keys t."""

    ctx: QContext
    coeffs: dict

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalized(self.coeffs))

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def max_abs_coeff(self) -> float:
        return max((magnitude(a) for a in self.coeffs.values()), default=0.0)

    def conjugate(self) -> "GaussianChain":
        return GaussianChain(self.ctx, {t: conj(a) for t, a in self.coeffs.items()})

    def reflect(self) -> "GaussianChain":
        """f(-x): centers negated, coefficients unchanged."""
        return GaussianChain(self.ctx, {-t: a for t, a in self.coeffs.items()})


@dataclass(frozen=True)
class DaughterChain:
    """sum_t b_t q^{2(x-t/2)^2}: the squared-exponent family produced by
    pointwise products of two chains."""

    ctx: QContext
    coeffs: dict

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalized(self.coeffs))

    def coefficient_sum(self):
        with self.ctx.prec():
            return sum(self.coeffs.values())


@dataclass(frozen=True)
class LadderOperator:
    """One of the four exact ladder operators, tagged by kind."""

    kind: str
    ctx: QContext

    def __post_init__(self):
        if self.kind not in LADDER_KINDS:
            raise ValueError(f"unknown ladder kind {self.kind!r}")


@dataclass(frozen=True)
class TrigGaussian:
    """prefactor * e^{-(pi/c)^2 theta^2} * sum_t gamma_t e^{i 2 pi (t/2) theta}.

    Exact Fourier transform of a GaussianChain; harmonic indices are stored
    doubled (key t for harmonic t/2) so half-integer centers stay integers.
    """

    ctx: QContext
    prefactor: object
    trig_coeffs: dict

    def __post_init__(self):
        object.__setattr__(self, "trig_coeffs", _normalized(self.trig_coeffs))

    def evaluate(self, theta):
        thetas = np.asarray(theta, dtype=float)
        envelope = np.exp(-((np.pi / float(self.ctx.c)) ** 2) * thetas ** 2)
        total = np.zeros(thetas.shape, dtype=complex)
        for t, g in self.trig_coeffs.items():
            total = total + complex(g) * np.exp(1j * np.pi * t * thetas)
        out = float(self.prefactor) * envelope * total
        return out if out.shape else out.item()


# -- construction and elementary algebra ----------------------------------

def make_gaussian(ctx: QContext, t: int) -> GaussianChain:
    """Single Gaussian of unit coefficient centered at t/2."""
    if t != int(t):
        raise ValueError(f"twice-center must be an integer, got {t}")
    return GaussianChain(ctx, {int(t): ctx.make(1)})


def zero_chain(ctx: QContext) -> GaussianChain:
    return GaussianChain(ctx, {})


def add(f: GaussianChain, g: GaussianChain) -> GaussianChain:
    _require_same_ctx(f, g)
    coeffs = dict(f.coeffs)
    for t, a in g.coeffs.items():
        coeffs[t] = coeffs.get(t, 0) + a
    return GaussianChain(f.ctx, coeffs)


def scale(f: GaussianChain, s) -> GaussianChain:
    return GaussianChain(f.ctx, {t: a * s for t, a in f.coeffs.items()})


def subtract(f: GaussianChain, g: GaussianChain) -> GaussianChain:
    return add(f, scale(g, -1))


def shift(f: GaussianChain, s) -> GaussianChain:
    """T^s f(x) = f(x + s): every center mu moves to mu - s.

    s must be a half-integer (multiple of 1/2); anything else is rejected
    because it would leave the lattice.
    """
    twice = as_lattice_shift(s)
    return GaussianChain(f.ctx, {t - twice: a for t, a in f.coeffs.items()})


def mul_qlinear(f: GaussianChain, a: int, b) -> GaussianChain:
    """Multiply by q^{a x + b} using the exact completion of squares

        q^{a x + b} q^{(x-mu)^2} = q^{a mu - a^2/4 + b} q^{(x-(mu-a/2))^2}.

    a must be an integer so image centers stay on the half-integer lattice;
    b may be any rational. The exponent is accumulated as a Fraction and
    exponentiated once.
    """
    if a != int(a):
        raise ValueError(f"linear coefficient must be an integer, got {a}")
    a = int(a)
    b = Fraction(b)
    ctx = f.ctx
    out: dict = {}
    with ctx.prec():
        for t, coeff in f.coeffs.items():
            exponent = Fraction(a * t, 2) - Fraction(a * a, 4) + b
            key = t - a
            term = coeff * ctx.qpow(exponent)
            out[key] = out.get(key, 0) + term
    return GaussianChain(ctx, out)


def prune(f: GaussianChain, rel_threshold: float) -> GaussianChain:
    """Drop coefficients below rel_threshold times the largest magnitude."""
    if rel_threshold <= 0:
        return f
    top = f.max_abs_coeff()
    cut = rel_threshold * top
    return GaussianChain(f.ctx, {t: a for t, a in f.coeffs.items() if magnitude(a) > cut})


# -- ladder operators ------------------------------------------------------

def arik_lower(ctx: QContext) -> LadderOperator:
    return LadderOperator("arik_lower", ctx)


def arik_raise(ctx: QContext) -> LadderOperator:
    return LadderOperator("arik_raise", ctx)


def mac_lower(ctx: QContext) -> LadderOperator:
    return LadderOperator("mac_lower", ctx)


def mac_raise(ctx: QContext) -> LadderOperator:
    return LadderOperator("mac_raise", ctx)


def apply_ladder(op: LadderOperator, f: GaussianChain,
                 prune_threshold: float = 0.0) -> GaussianChain:
    """Apply one ladder operator as an exact composition of shifts and
    q-linear multipliers, then the scalar prefactor.

    Terms landing on the same center are combined before any pruning, so
    symbolic cancellations (lowering a ground state, commutator identities)
    produce exact zeros. The default threshold prunes nothing beyond them.
    """
    ctx = op.ctx
    if f.ctx != ctx:
        raise ValueError("operator and chain carry different contexts")
    half = Fraction(1, 2)
    quarter = Fraction(1, 4)
    with ctx.prec():
        q = ctx.q
        if op.kind == "arik_lower":
            inner_part = subtract(mul_qlinear(f, 1, quarter), shift(f, half))
            result = shift(inner_part, half)
            pref = 1 / ctx.sqrt(1 - q)
        elif op.kind == "arik_raise":
            moved = shift(f, -half)
            result = subtract(mul_qlinear(moved, 1, quarter), shift(moved, -half))
            pref = 1 / ctx.sqrt(1 - q)
        elif op.kind == "mac_lower":
            result = subtract(mul_qlinear(f, 2, half),
                              mul_qlinear(shift(f, half), 1, quarter))
            pref = 1 / ctx.sqrt(q * (1 - q))
        else:  # mac_raise
            result = subtract(mul_qlinear(f, -2, half),
                              shift(mul_qlinear(f, -1, quarter), half))
            pref = 1 / ctx.sqrt(q * (1 - q))
        return prune(scale(result, pref), prune_threshold)


# -- inner products, products, transforms ----------------------------------

def overlap_scale(ctx: QContext):
    """The basic two-Gaussian overlap integral of coincident centers,
    integral of q^{2 x^2} dx = sqrt(pi / (2 c^2))."""
    with ctx.prec():
        return ctx.sqrt(ctx.pi() / (2 * ctx.c * ctx.c))


def alpha(ctx: QContext):
    """Ground-state normalization (2 c^2 / pi)^{1/4}, the inverse square
    root of the q^{2x^2} integral."""
    with ctx.prec():
        return 1 / ctx.sqrt(overlap_scale(ctx))


def inner(f: GaussianChain, g: GaussianChain, kind: str = "standard"):
    """Analytic inner product of two chains.

    "standard" is integral of conj(f(x)) g(x) dx; "parity_twisted" is
    integral of conj(f(-x)) g(x) dx, the indefinite product under which
    the mac operators are mutually conjugate. Both reduce to the exact
    two-Gaussian overlap

        integral q^{(x-mu)^2} q^{(x-nu)^2} dx = sqrt(pi/2c^2) q^{(mu-nu)^2/2}.
    """
    _require_same_ctx(f, g)
    if kind not in ("standard", "parity_twisted"):
        raise ValueError(f"unknown inner product kind {kind!r}")
    ctx = f.ctx
    sign = 1 if kind == "standard" else -1
    with ctx.prec():
        total = 0
        for t, a in f.coeffs.items():
            ca = conj(a)
            for s, b in g.coeffs.items():
                # (mu - nu)^2 / 2 = (t - s)^2 / 8 on twice-centers; the
                # parity twist reflects f, flipping t to -t.
                d = sign * t - s
                total = total + ca * b * ctx.qpow(Fraction(d * d, 8))
        return overlap_scale(ctx) * total


def product_daughters(f: GaussianChain, g: GaussianChain) -> DaughterChain:
    """Expand the pointwise product f(x) g(x) in the daughter family,

        q^{(x-mu)^2} q^{(x-nu)^2} = q^{(mu-nu)^2/2} q^{2(x-(mu+nu)/2)^2}.

    All centers of f and g must share one parity class (twice-center sums
    even), otherwise the daughters would leave the half-integer lattice.
    No conjugation is applied; integrating the result therefore equals
    inner(conj(f), g, standard).
    """
    _require_same_ctx(f, g)
    ctx = f.ctx
    out: dict = {}
    with ctx.prec():
        for t, a in f.coeffs.items():
            for s, b in g.coeffs.items():
                if (t + s) % 2:
                    raise ValueError(
                        "product centers leave the half-integer lattice; "
                        "chains must live on one parity class")
                key = (t + s) // 2
                d = t - s
                out[key] = out.get(key, 0) + a * b * ctx.qpow(Fraction(d * d, 8))
    return DaughterChain(ctx, out)


def integrate_daughters(d: DaughterChain):
    """Integral over the real line: each daughter contributes
    sqrt(pi/2c^2) times its coefficient."""
    with d.ctx.prec():
        return overlap_scale(d.ctx) * d.coefficient_sum()


def fourier(f: GaussianChain) -> TrigGaussian:
    """Exact Fourier transform under F(theta) = integral e^{i 2 pi theta x} f(x) dx.

    Each Gaussian maps to sqrt(pi/c^2) e^{-(pi/c)^2 theta^2} e^{i 2 pi mu theta},
    so the chain's coefficients reappear as trig coefficients on the same
    doubled index.
    """
    ctx = f.ctx
    with ctx.prec():
        pref = ctx.sqrt(ctx.pi() / (ctx.c * ctx.c))
    return TrigGaussian(ctx, pref, dict(f.coeffs))


def trig_inner(F: TrigGaussian, G: TrigGaussian):
    """Analytic integral of conj(F(theta)) G(theta) over the line.

    With both prefactors sqrt(pi/c^2) this reproduces the standard chain
    inner product exactly (a Parseval identity).
    """
    if F.ctx != G.ctx:
        raise ValueError("trig factors carry different contexts")
    ctx = F.ctx
    with ctx.prec():
        c = ctx.c
        gauss = ctx.sqrt(c * c / (2 * ctx.pi()))
        total = 0
        for t, a in F.trig_coeffs.items():
            ca = conj(a)
            for s, b in G.trig_coeffs.items():
                d = t - s
                total = total + ca * b * ctx.qpow(Fraction(d * d, 8))
        return F.prefactor * G.prefactor * gauss * total


def evaluate(f: GaussianChain, x):
    """Pointwise value sum_mu a_mu q^{(x-mu)^2}.

    In the double backend scalars and numpy arrays are both evaluated
    vectorized; far-away terms underflow to zero harmlessly (the exponent
    is negative real). In a high-precision backend x is treated as one
    scalar point.
    """
    ctx = f.ctx
    if ctx.digits is None:
        xs = np.asarray(x, dtype=float)
        lnq = float(ctx.ln_q)
        total = np.zeros(xs.shape, dtype=complex)
        for t, a in f.coeffs.items():
            total = total + complex(a) * np.exp(lnq * (xs - t / 2.0) ** 2)
        if np.all(total.imag == 0.0):
            total = total.real
        return total if total.shape else total.item()
    with ctx.prec():
        total = 0
        for t, a in f.coeffs.items():
            d = x - ctx.make(t) / 2
            total = total + a * ctx.exp(ctx.ln_q * d * d)
        return total


def coeff_distance(f: GaussianChain, g: GaussianChain) -> float:
    """max |f_t - g_t| over the union of centers, as a plain float."""
    keys = set(f.coeffs) | set(g.coeffs)
    with f.ctx.prec():
        return max((magnitude(f.coeffs.get(t, 0) - g.coeffs.get(t, 0)) for t in keys),
                   default=0.0)


def relative_coeff_distance(f: GaussianChain, g: GaussianChain) -> float:
    """coeff_distance normalized by the largest reference coefficient of g
    (falls back to f when g is the zero chain)."""
    ref = g.max_abs_coeff() or f.max_abs_coeff()
    if ref == 0.0:
        return 0.0
    return coeff_distance(f, g) / ref


# -- serialization ----------------------------------------------------------

def chain_to_dict(f: GaussianChain) -> dict:
    """JSON-ready form {c, entries: [[t, re, im], ...]}."""
    entries = [[t, float(a.real), float(a.imag)] for t, a in f.coeffs.items()]
    return {"c": float(f.ctx.c), "entries": entries}


def chain_from_dict(data: dict, digits: int | None = None) -> GaussianChain:
    ctx = QContext(c=data["c"], digits=digits)
    coeffs = {}
    for t, re_part, im_part in data["entries"]:
        coeffs[int(t)] = ctx.make(complex(re_part, im_part))
    return GaussianChain(ctx, coeffs)


def _require_same_ctx(f: GaussianChain, g: GaussianChain):
    if f.ctx != g.ctx:
        raise ValueError("chains carry different contexts")
