"""Odd Jacobi theta kernel and the delta building block.

The central special function is the odd theta

    theta(v) = 2 * sum_{n>=0} (-1)^n * q0^{(n+1/2)^2} * sin((2n+1)*pi*v),

with q0 = e(tau/2), q = q0^2 = e(tau).  Since (n+1/2)^2 = 1/4 + T_n*2/2 with
the triangular numbers T_n = n(n+1)/2, the series is evaluated as

    theta(v) = 2 * e(tau/8) * sum_{n>=0} (-1)^n * q^{T_n} * sin((2n+1)*pi*v),

which needs only *integer* powers of q plus the fixed eighth-root prefactor
e(tau/8) — no fractional powers of a complex number, hence no branch
ambiguity.  An independent product-form evaluation (Jacobi triple product)

    theta(v) = 2 * e(tau/8) * sin(pi*v)
               * prod_{l>=1} (1 - q^l) (1 - q^l*A) (1 - q^l/A),   A = e(v),

is kept alongside as a cross-check route.

theta is odd, 1-periodic up to sign, and satisfies
theta(v + tau) = -q^{-1/2} e(-v) theta(v); its zeros are exactly the lattice
Z + tau*Z.  All of this is exercised by the property tests.

From theta we build

    delta(a, b) = theta'(0) * theta(a+b) / (2*pi*i * theta(a) * theta(b)),

the meromorphic block every identity in the catalog is assembled from.  Both
arguments are *additive* (see `numeric`).  delta has first-order poles where
a or b hits the lattice; proximity below ``pole_eps`` (in the flat metric on
C/(Z + tau*Z)) raises :class:`PoleProximityError` instead of silently losing
precision.  Normalization anchor: x * delta(x-additive, anything) -> 1/(2*pi*i)
... concretely  lim_{x->0} x * delta_mult(e^x, H) = 1  when delta is viewed
multiplicatively, i.e. lim_{a->0} (2*pi*i*a) * delta(a, b) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import mpmath
from mpmath import mp

from .numeric import (
    DEFAULT_DIGITS,
    ModularParam,
    Numeric,
    PrecisionConfig,
    e_of,
    to_mpc,
    truncation_order,
)

__all__ = [
    "PoleProximityError",
    "ThetaContext",
    "make_context",
    "theta",
    "theta_product",
    "theta_prime",
    "theta_prime_zero",
    "delta",
    "phi",
    "psi",
    "lattice_reduce",
    "lattice_distance",
]


class PoleProximityError(ValueError):
    """An additive argument came within ``pole_eps`` of the lattice Z + tau*Z.

    Raised instead of returning a huge, precision-starved value.  Carries the
    offending argument, its flat-metric distance to the lattice, and the
    threshold, so retry loops can log something useful.
    """

    def __init__(self, label: str, value, distance, eps) -> None:
        self.label = label
        self.value = value
        self.distance = distance
        self.eps = eps
        super().__init__(
            f"{label} = {value} lies within {mpmath.nstr(mpmath.mpf(distance), 6)} "
            f"of the period lattice (threshold {eps})"
        )


@dataclass(frozen=True)
class ThetaContext:
    """Bundle of modular parameter + precision, with cached q-powers.

    Instances are immutable and safe to share; every public function scopes
    its arithmetic with ``ctx.workdps()`` so the caller's mpmath precision is
    untouched.
    """

    precision: PrecisionConfig
    modular: ModularParam
    series_terms: int
    pole_eps: float = 1e-4

    def workdps(self):
        return mp.workdps(self.precision.working_digits)

    @cached_property
    def tau(self) -> mpmath.mpc:
        with self.workdps():
            return to_mpc(self.modular.tau)

    @cached_property
    def q(self) -> mpmath.mpc:
        with self.workdps():
            return e_of(self.tau)

    @cached_property
    def q_eighth(self) -> mpmath.mpc:
        """e(tau/8) = q^{1/8} on the canonical branch."""
        with self.workdps():
            return e_of(self.tau / 8)

    @cached_property
    def dtheta0(self) -> mpmath.mpc:
        """theta'(0), cached — it appears in every delta evaluation."""
        return theta_prime(self, 0)


def make_context(
    tau: Numeric,
    digits: int | None = None,
    tail_tolerance: float | None = None,
    pole_eps: float = 1e-4,
) -> ThetaContext:
    """Build a ThetaContext; series length comes from truncation_order.

    ``digits`` defaults to PrecisionConfig's default (30).
    """
    precision = PrecisionConfig(
        working_digits=DEFAULT_DIGITS if digits is None else digits,
        tail_tolerance=tail_tolerance,
    )
    with mp.workdps(precision.working_digits):
        modular = ModularParam(to_mpc(tau))
        terms = truncation_order(modular.q_abs, precision.tail)
    return ThetaContext(
        precision=precision, modular=modular, series_terms=terms, pole_eps=pole_eps
    )


def theta(ctx: ThetaContext, v: Numeric) -> mpmath.mpc:
    """Odd theta at additive argument v, by the sine series."""
    with ctx.workdps():
        v = to_mpc(v)
        q = ctx.q
        acc = mp.mpc(0)
        qpow = mp.mpc(1)  # q^{T_n}
        qstep = q  # q^{n+1}
        sign = 1
        for n in range(ctx.series_terms):
            acc += sign * qpow * mp.sinpi((2 * n + 1) * v)
            sign = -sign
            qpow *= qstep
            qstep *= q
        return 2 * ctx.q_eighth * acc


def theta_product(ctx: ThetaContext, v: Numeric) -> mpmath.mpc:
    """Odd theta via the triple-product representation (cross-check route)."""
    with ctx.workdps():
        v = to_mpc(v)
        q = ctx.q
        a_plus = e_of(v)
        a_minus = e_of(-v)
        prod = mp.mpc(1)
        qpow = q
        for _ in range(ctx.series_terms):
            prod *= (1 - qpow) * (1 - qpow * a_plus) * (1 - qpow * a_minus)
            qpow *= q
        return 2 * ctx.q_eighth * mp.sinpi(v) * prod


def theta_prime(ctx: ThetaContext, v: Numeric) -> mpmath.mpc:
    """d/dv of theta at additive argument v (termwise-differentiated series)."""
    with ctx.workdps():
        v = to_mpc(v)
        q = ctx.q
        acc = mp.mpc(0)
        qpow = mp.mpc(1)
        qstep = q
        sign = 1
        for n in range(ctx.series_terms):
            acc += sign * qpow * (2 * n + 1) * mp.cospi((2 * n + 1) * v)
            sign = -sign
            qpow *= qstep
            qstep *= q
        return 2 * mp.pi * ctx.q_eighth * acc


def theta_prime_zero(ctx: ThetaContext) -> mpmath.mpc:
    """theta'(0) = 2*pi*q^{1/8} * sum (-1)^n (2n+1) q^{T_n}."""
    return ctx.dtheta0


def lattice_reduce(ctx: ThetaContext, a: Numeric) -> Tuple[mpmath.mpc, int, int]:
    """Write a = a_red + m + k*tau with a_red = af + bf*tau, af, bf in [-1/2, 1/2].

    Returns (a_red, m, k).  The decomposition solves the real 2x2 system
    a = alpha + beta*tau over (alpha, beta) and rounds both to the nearest
    integer, i.e. reduction in the flat metric of C/(Z + tau*Z).
    """
    with ctx.workdps():
        a = to_mpc(a)
        tau = ctx.tau
        beta = mpmath.im(a) / mpmath.im(tau)
        alpha = mpmath.re(a) - beta * mpmath.re(tau)
        m = int(mpmath.nint(alpha))
        k = int(mpmath.nint(beta))
        a_red = (alpha - m) + (beta - k) * tau
        return a_red, m, k


def lattice_distance(ctx: ThetaContext, a: Numeric) -> mpmath.mpf:
    """Flat-metric distance from a to the nearest point of Z + tau*Z."""
    a_red, _, _ = lattice_reduce(ctx, a)
    with ctx.workdps():
        return abs(a_red)


def _guard_pole(ctx: ThetaContext, label: str, a) -> None:
    dist = lattice_distance(ctx, a)
    if dist < ctx.pole_eps:
        raise PoleProximityError(label, a, dist, ctx.pole_eps)


def delta(ctx: ThetaContext, a: Numeric, b: Numeric) -> mpmath.mpc:
    """delta(a, b) = theta'(0) theta(a+b) / (2 pi i theta(a) theta(b)).

    Additive in both slots.  Poles (lattice hits in a or b) are guarded by
    ctx.pole_eps; a + b on the lattice is a legitimate zero, not a pole.
    """
    with ctx.workdps():
        a = to_mpc(a)
        b = to_mpc(b)
        _guard_pole(ctx, "delta argument a", a)
        _guard_pole(ctx, "delta argument b", b)
        num = ctx.dtheta0 * theta(ctx, a + b)
        den = 2j * mp.pi * theta(ctx, a) * theta(ctx, b)
        return num / den


def phi(ctx: ThetaContext, lam: Numeric, t_arg: Numeric, h_arg: Numeric) -> mpmath.mpc:
    """phi(lam) = delta(lam + t, h) * delta(-lam + t, h).

    h_arg is the additive argument of the equivariant weight (h = e(h_arg);
    for the standard scalar action h_arg = -z).  phi is even in lam and fully
    elliptic: invariant under lam -> lam + 1 and lam -> lam + tau, because the
    two quasi-period factors e(-h_arg) of the deltas cancel.
    """
    with ctx.workdps():
        lam = to_mpc(lam)
        t_arg = to_mpc(t_arg)
        h_arg = to_mpc(h_arg)
        return delta(ctx, lam + t_arg, h_arg) * delta(ctx, -lam + t_arg, h_arg)


def psi(
    ctx: ThetaContext,
    lam: Numeric,
    t1_arg: Numeric,
    t2_arg: Numeric,
    h_arg: Numeric,
) -> mpmath.mpc:
    """psi(lam) = delta(lam + t1, h) * delta(-lam + t2, h) — two-weight phi.

    Shares phi's full ellipticity in lam (the h-factors cancel pairwise), but
    is not even unless t1 == t2.
    """
    with ctx.workdps():
        lam = to_mpc(lam)
        return delta(ctx, lam + to_mpc(t1_arg), h_arg) * delta(
            ctx, -lam + to_mpc(t2_arg), h_arg
        )
