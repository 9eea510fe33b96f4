"""Evaluation of localized and orbifold equivariant elliptic classes.

Conventions (see `numeric` and `theta`):

* A torus point supplies additive arguments ``t_args`` for the torus
  characters and the equivariant parameter ``z``; the canonical weight is
  H = e(-z), so "H to the power s" contributes the additive argument -s*z.

* Localized (resolution side):

      prefactor * sum_points  prod_k  delta(<w_k, t>, (1 - a_k) * (-z))

* Orbifold side, canonical form over commuting pairs (g, h):

      (1/|G|) * sum_pairs  mult * H^{h_shift}
          * prod_k  delta(lambda_k - nu_k*tau + <w_k, t>, (1 - a_k)(-z))
                    * H^{(a_k - 1) nu_k}

* Symplectic shortcut: when the coordinates pair up as (k, k + dim/2) with
  inverse eigenvalue exponents (a W + W* structure), the same sum can be
  rewritten over half the coordinates with paired delta factors and a weight
  H^{nu_k (a_k - a_{k+n})} — an independent code path used as a cross-check.

Also here: the q -> 0 (Hirzebruch/chi_y-genus) limit forms of the A_{n-1}
identity, their trigonometric specialization, and the pointwise q -> 0 limit
of a single delta ratio.  The limit forms are plain rational functions and
work verbatim on `fractions.Fraction` inputs for exact-arithmetic checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

import mpmath
from mpmath import mp

from .models import D4Family, OrbifoldModel, ResolutionModel
from .numeric import Numeric, as_mp, e_of, to_mpc
from .theta import PoleProximityError, ThetaContext, delta, theta

__all__ = [
    "TorusPoint",
    "localized_class",
    "orbifold_class",
    "orbifold_class_symplectic",
    "d4_resolution_side",
    "hirzebruch_star",
    "hirzebruch_star_roots",
    "hirzebruch_star_closed",
    "trig_limit_lhs",
    "trig_limit_rhs",
    "RATIONAL_COS_ORDERS",
    "q_limit_delta",
]


@dataclass(frozen=True)
class TorusPoint:
    """Additive torus coordinates and the equivariant parameter z."""

    t_args: Tuple[mpmath.mpc, ...]
    z: mpmath.mpc

    def __post_init__(self) -> None:
        object.__setattr__(self, "t_args", tuple(to_mpc(t) for t in self.t_args))
        object.__setattr__(self, "z", to_mpc(self.z))

    @property
    def rank(self) -> int:
        return len(self.t_args)

    @property
    def h_arg(self) -> mpmath.mpc:
        """Additive argument of the canonical weight H = e(-z)."""
        return -self.z


def _pair_args(weights, t_args):
    return sum((w * t for (w, t) in zip(weights, t_args)), mpmath.mpc(0))


def _check_rank(model_rank: int, point: TorusPoint) -> None:
    if point.rank != model_rank:
        raise ValueError(
            f"model expects rank {model_rank}, torus point has {point.rank} coordinates"
        )


def localized_class(ctx: ThetaContext, model: ResolutionModel, point: TorusPoint) -> mpmath.mpc:
    """Localized elliptic class of the resolution model at a torus point."""
    _check_rank(model.rank, point)
    with ctx.workdps():
        z = point.z
        total = mpmath.mpc(0)
        for idx, fp in enumerate(model.fixed_points):
            term = mpmath.mpc(1)
            for k, (w, a) in enumerate(zip(fp.weights, fp.exponents)):
                try:
                    term *= delta(ctx, _pair_args(w, point.t_args), as_mp(1 - a) * (-z))
                except PoleProximityError as exc:
                    raise PoleProximityError(
                        f"fixed point {idx}, direction {k}: {exc.label}",
                        exc.value,
                        exc.distance,
                        exc.eps,
                    ) from exc
            total += term
        return as_mp(model.prefactor) * total


def _h_power(s, z) -> mpmath.mpc:
    """H^s = e(-s*z) for rational s."""
    return e_of(-as_mp(s) * z)


def orbifold_class(ctx: ThetaContext, model: OrbifoldModel, point: TorusPoint) -> mpmath.mpc:
    """Orbifold elliptic class: the canonical commuting-pair sum."""
    _check_rank(model.rank, point)
    with ctx.workdps():
        tau = ctx.tau
        z = point.z
        total = mpmath.mpc(0)
        for idx, pair in enumerate(model.pairs):
            term = mpmath.mpc(pair.multiplicity)
            if pair.h_shift:
                term *= _h_power(pair.h_shift, z)
            for k in range(len(pair.weights)):
                lam, nu = pair.lambda_[k], pair.nu[k]
                a = pair.exponents[k]
                arg = as_mp(lam) - as_mp(nu) * tau + _pair_args(pair.weights[k], point.t_args)
                try:
                    term *= delta(ctx, arg, as_mp(1 - a) * (-z))
                except PoleProximityError as exc:
                    raise PoleProximityError(
                        f"pair {idx}, coordinate {k}: {exc.label}",
                        exc.value,
                        exc.distance,
                        exc.eps,
                    ) from exc
                if nu:
                    term *= _h_power((a - 1) * nu, z)
            total += term
        return total / model.group_order


def orbifold_class_symplectic(
    ctx: ThetaContext, model: OrbifoldModel, point: TorusPoint
) -> mpmath.mpc:
    """Orbifold class via the paired W + W* form.

    Requires even dim and, in every pair row, coordinate k + dim/2 to carry
    the inverse eigenvalue exponents of coordinate k (for both g and h).
    Mathematically equal to :func:`orbifold_class`; the code path is
    deliberately different (half the delta factors are index-shifted).
    """
    _check_rank(model.rank, point)
    if model.dim % 2:
        raise ValueError(f"symplectic evaluation needs even dim, got {model.dim}")
    half = model.dim // 2

    def inv(x: Fraction) -> Fraction:
        y = 1 - x
        return y - (y.numerator // y.denominator)

    with ctx.workdps():
        tau = ctx.tau
        z = point.z
        total = mpmath.mpc(0)
        for idx, pair in enumerate(model.pairs):
            for k in range(half):
                if pair.lambda_[k + half] != inv(pair.lambda_[k]) or pair.nu[k + half] != inv(
                    pair.nu[k]
                ):
                    raise ValueError(
                        f"pairs[{idx}]: coordinates {k} and {k + half} do not carry "
                        f"inverse eigenvalue exponents; not a symplectic pairing"
                    )
            term = mpmath.mpc(pair.multiplicity)
            if pair.h_shift:
                term *= _h_power(pair.h_shift, z)
            for k in range(half):
                lam, nu = pair.lambda_[k], pair.nu[k]
                a_k = pair.exponents[k]
                a_dual = pair.exponents[k + half]
                core = as_mp(lam) - as_mp(nu) * tau
                term *= delta(
                    ctx,
                    core + _pair_args(pair.weights[k], point.t_args),
                    as_mp(1 - a_k) * (-z),
                )
                term *= delta(
                    ctx,
                    -core + _pair_args(pair.weights[k + half], point.t_args),
                    as_mp(1 - a_dual) * (-z),
                )
                if nu:
                    term *= _h_power(nu * (a_k - a_dual), z)
            total += term
        return total / model.group_order


def d4_resolution_side(ctx: ThetaContext, family: D4Family, point: TorusPoint) -> mpmath.mpc:
    """Resolution side of the D4 correspondence: the isolated-fixed-point core
    plus the exceptional-P^1 integral term."""
    return localized_class(ctx, family.core, point) + orbifold_class(
        ctx, family.exceptional_term, point
    )


# ---------------------------------------------------------------------------
# q -> 0 limit forms (chi_y-genus shapes).  Multiplicative variables here:
# these are rational functions of T1, T2, y with the elliptic parameter gone.
# They accept Fractions and return Fractions when given exact input.


def hirzebruch_star(n: int, t1, t2, y):
    """q->0 limit of the resolution side of the A_{n-1} identity."""
    total = 0
    for k in range(1, n + 1):
        r1 = t2 ** (k - 1) / t1 ** (n - k + 1)
        r2 = t1 ** (n - k) / t2 ** k
        total += ((1 - y * r1) / (1 - r1)) * ((1 - y * r2) / (1 - r2))
    return total / y


def hirzebruch_star_roots(n: int, t1, t2, y, exact: bool = False):
    """q->0 limit of the orbifold double sum: roots-of-unity average plus the
    constant n - 1.  With exact=True the n-th roots of unity must be rational,
    i.e. n in {1, 2}."""
    if exact:
        if n not in (1, 2):
            raise ValueError(
                f"exact rational evaluation needs rational roots of unity (n in {{1, 2}}), got n={n}"
            )
        roots = [Fraction(1), Fraction(-1)][:n]
    else:
        roots = [e_of(mpmath.mpf(k) / n) for k in range(n)]
    total = 0
    for w in roots:
        r1 = w / t1
        r2 = 1 / (w * t2)
        total += ((1 - y * r1) / (1 - r1)) * ((1 - y * r2) / (1 - r2))
    return total / (n * y) + (n - 1)


def hirzebruch_star_closed(n: int, t1, t2, y):
    """Closed q->0 form; equals both other limit shapes."""
    r = 1 / (t1 * t2)
    value = (1 - y) * (1 - y * r) * (1 - r ** n) / ((1 - r) * (1 - t1 ** -n) * (1 - t2 ** -n))
    return value / y + n


RATIONAL_COS_ORDERS = {
    1: (Fraction(1),),
    2: (Fraction(1), Fraction(-1)),
    3: (Fraction(1), Fraction(-1, 2), Fraction(-1, 2)),
    4: (Fraction(1), Fraction(0), Fraction(-1), Fraction(0)),
    6: (
        Fraction(1),
        Fraction(1, 2),
        Fraction(-1, 2),
        Fraction(-1),
        Fraction(-1, 2),
        Fraction(1, 2),
    ),
}


def trig_limit_lhs(n: int, t, y, exact: bool = False):
    """Trigonometric average (1/n) sum_k (1 - 2cos(2 pi k/n) y T + y^2 T^2) /
    (1 - 2cos(2 pi k/n) T + T^2).  exact=True uses the rational cosine table
    (n in 1, 2, 3, 4, 6)."""
    if exact:
        if n not in RATIONAL_COS_ORDERS:
            raise ValueError(
                f"cos(2 pi k/{n}) is not rational for all k; exact mode supports n in "
                f"{sorted(RATIONAL_COS_ORDERS)}"
            )
        cosines = RATIONAL_COS_ORDERS[n]
    else:
        cosines = [mp.cospi(mpmath.mpf(2 * k) / n) for k in range(n)]
    total = 0
    for c in cosines:
        total += (1 - 2 * c * y * t + y**2 * t**2) / (1 - 2 * c * t + t**2)
    return total / n


def trig_limit_rhs(n: int, t, y):
    """Product form equal to :func:`trig_limit_lhs`; rational in t, y."""
    return (1 - y) * (1 - y * t**2) * (1 - t ** (2 * n)) / ((1 - t**2) * (1 - t**n) ** 2) + y


def q_limit_delta(ctx: ThetaContext, upsilon: Numeric, z: Numeric, nu) -> Tuple[mpmath.mpc, mpmath.mpc]:
    """Pointwise q -> 0 limit diagnostic for a single theta ratio.

    Returns (measured, predicted) where
        measured  = theta(upsilon + nu*tau - z) / theta(upsilon + nu*tau)
    at the context's tau, and `predicted` is the piecewise q -> 0 limit:
        H^{1/2}                                    for -1 < nu < 0,
        H^{1/2} (1 - H^{-1} T^{-1}) / (1 - T^{-1}) for nu = 0   (T = e(upsilon)),
        H^{-1/2}                                   for 0 < nu < 1,
    with H = e(-z).  The caller chooses Im(tau) large enough for the
    comparison tolerance sought.
    """
    nu_f = Fraction(nu) if not isinstance(nu, Fraction) else nu
    if not (-1 < nu_f < 1):
        raise ValueError(f"nu must lie in (-1, 1), got {nu_f}")
    with ctx.workdps():
        upsilon = to_mpc(upsilon)
        z = to_mpc(z)
        shift = as_mp(nu_f) * ctx.tau
        measured = theta(ctx, upsilon + shift - z) / theta(ctx, upsilon + shift)
        if nu_f < 0:
            predicted = e_of(-z / 2)
        elif nu_f > 0:
            predicted = e_of(z / 2)
        else:
            t_inv = e_of(-upsilon)
            predicted = e_of(-z / 2) * (1 - e_of(z) * t_inv) / (1 - t_inv)
        return measured, predicted
