"""Truncated Laurent series arithmetic and series expansions of delta.

The identities in this package sometimes need the *finite part* of a sum of
delta's whose individual terms blow up — e.g. the elliptic genus of P^1 is the
constant term of delta(e^x, H) + delta(e^{-x}, H) as x -> 0, where each
summand has a simple pole.  This module provides:

  * :class:`TruncatedSeries` — window-tracked Laurent series with complex
    multiprecision coefficients.  Every operation tracks how many leading
    coefficients of the result are actually known, so truncation error can
    never silently contaminate a requested coefficient: asking for one
    outside the window raises.
  * :func:`delta_series` — the expansion of delta(a0 + d*x, b) in x, which is
    Taylor for a0 off the lattice and Laurent (simple pole, lead -1) when a0
    sits exactly on a lattice point.
  * :func:`ell_genus_p1` / :func:`ell_genus_p1_closed` — the two independent
    routes to the P^1 genus.
  * :func:`cy_residue_coeff_route` / :func:`cy_residue_contour_route` — the
    two routes to the Calabi-Yau residue quantity
    Res_{u=1} delta(t/u, H) delta(u, H)^n du/u.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import mpmath
from mpmath import mp

from .numeric import Numeric, e_of, to_mpc
from .theta import (
    PoleProximityError,
    ThetaContext,
    lattice_distance,
    lattice_reduce,
    theta,
    theta_prime,
)

__all__ = [
    "TruncatedSeries",
    "delta_series",
    "ell_genus_p1",
    "ell_genus_p1_closed",
    "cy_residue_coeff_route",
    "cy_residue_contour_route",
]

_Scalar = (int, float, complex, mpmath.mpf, mpmath.mpc)


@dataclass(frozen=True)
class TruncatedSeries:
    """A Laurent series x^lead * (c0 + c1 x + ...) known through finitely
    many coefficients.

    ``coeffs[j]`` is the coefficient of ``x**(lead + j)``.  Coefficients
    *below* ``lead`` are exactly zero; coefficients at ``lead + len(coeffs)``
    and beyond are unknown.  Arithmetic narrows the known window exactly as
    the algebra demands (sums intersect windows, products add leads and keep
    the shorter tail, composition keeps the inner series' window).
    """

    lead: int
    coeffs: Tuple[mpmath.mpc, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("TruncatedSeries needs at least one known coefficient")
        object.__setattr__(self, "coeffs", tuple(mpmath.mpc(c) for c in self.coeffs))

    # -- construction helpers -------------------------------------------------

    @classmethod
    def constant(cls, value: Numeric, count: int) -> "TruncatedSeries":
        """An exactly-known constant, padded with ``count`` zero coefficients
        so it does not needlessly narrow windows in products."""
        c = [to_mpc(value)] + [mpmath.mpc(0)] * (count - 1)
        return cls(0, tuple(c))

    @property
    def count(self) -> int:
        return len(self.coeffs)

    @property
    def top(self) -> int:
        """First unknown power of x."""
        return self.lead + len(self.coeffs)

    # -- coefficient access ---------------------------------------------------

    def coefficient(self, k: int) -> mpmath.mpc:
        """Coefficient of x**k; exactly 0 below the lead, IndexError past the
        known window."""
        if k < self.lead:
            return mpmath.mpc(0)
        if k >= self.top:
            raise IndexError(
                f"coefficient of x^{k} lies beyond the known window "
                f"[{self.lead}, {self.top})"
            )
        return self.coeffs[k - self.lead]

    def constant_term(self) -> mpmath.mpc:
        return self.coefficient(0)

    def residue(self) -> mpmath.mpc:
        """Coefficient of 1/x."""
        return self.coefficient(-1)

    # -- ring operations ------------------------------------------------------

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.lead, tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "TruncatedSeries":
        if isinstance(other, _Scalar):
            other = TruncatedSeries.constant(other, self.count)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        lead = min(self.lead, other.lead)
        top = min(self.top, other.top)
        if top <= lead:
            raise ValueError("sum has an empty known window")
        out = []
        for k in range(lead, top):
            a = self.coeffs[k - self.lead] if self.lead <= k < self.top else mpmath.mpc(0)
            b = other.coeffs[k - other.lead] if other.lead <= k < other.top else mpmath.mpc(0)
            out.append(a + b)
        return TruncatedSeries(lead, tuple(out))

    __radd__ = __add__

    def __sub__(self, other) -> "TruncatedSeries":
        if isinstance(other, _Scalar):
            other = TruncatedSeries.constant(other, self.count)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, _Scalar):
            return TruncatedSeries(
                self.lead, tuple(c * to_mpc(other) for c in self.coeffs)
            )
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.count, other.count)
        out = [mpmath.mpc(0)] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: n - i]):
                out[i + j] += a * b
        return TruncatedSeries(self.lead + other.lead, tuple(out))

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncatedSeries":
        """1/self.  Requires a nonzero coefficient at the lead."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError(
                "reciprocal of a series whose leading coefficient is zero "
                "(normalize the lead first)"
            )
        n = self.count
        inv = [mpmath.mpc(0)] * n
        inv[0] = 1 / c0
        for k in range(1, n):
            acc = mpmath.mpc(0)
            for j in range(1, k + 1):
                acc += self.coeffs[j] * inv[k - j]
            inv[k] = -acc / c0
        return TruncatedSeries(-self.lead, tuple(inv))

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, _Scalar):
            return self * (1 / to_mpc(other))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * other.reciprocal()

    def __pow__(self, n: int) -> "TruncatedSeries":
        if not isinstance(n, int):
            raise TypeError("series powers must be integers")
        if n < 0:
            return self.reciprocal() ** (-n)
        result = TruncatedSeries.constant(1, self.count)
        base = self
        k = n
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by x**k (relabel the window)."""
        return TruncatedSeries(self.lead + k, self.coeffs)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(x = inner(v)).  Requires inner.lead >= 1 so every coefficient
        of the result is a finite sum.  Laurent outer series are handled via
        self = x^lead * T(x)  ->  inner^lead * T(inner)."""
        if inner.lead < 1:
            raise ValueError(
                f"composition needs an inner series with lead >= 1, got {inner.lead}"
            )
        taylor = TruncatedSeries(0, self.coeffs)
        acc = TruncatedSeries.constant(taylor.coeffs[-1], inner.count)
        for c in reversed(taylor.coeffs[:-1]):
            acc = acc * inner + c
        if self.lead:
            acc = acc * (inner ** self.lead)
        return acc

    def __repr__(self) -> str:  # compact, for debugging and failure messages
        parts = [
            f"{mpmath.nstr(c, 8)}*x^{self.lead + j}"
            for j, c in enumerate(self.coeffs[:4])
        ]
        more = "" if self.count <= 4 else f" + ... ({self.count} coeffs)"
        return f"TruncatedSeries({' + '.join(parts)}{more})"


# ---------------------------------------------------------------------------
# theta and delta as series


def _theta_affine_taylor(
    ctx: ThetaContext, w0, d, count: int
) -> list:
    """Taylor coefficients (length ``count``) of v -> theta(w0 + d*v).

    Differentiating the sine series termwise m times turns
    sin((2n+1)*pi*(w0 + d v)) into ((2n+1)*pi*d)^m * trig_m((2n+1)*pi*w0)
    with the four-cycle trig = (sin, cos, -sin, -cos); the m-th coefficient
    collects these with 1/m!.
    """
    with ctx.workdps():
        w0 = to_mpc(w0)
        d = to_mpc(d)
        q = ctx.q
        coeffs = [mpmath.mpc(0)] * count
        pref = 2 * ctx.q_eighth
        qpow = mpmath.mpc(1)
        qstep = q
        sign = 1
        for n in range(ctx.series_terms):
            odd = 2 * n + 1
            s = mp.sinpi(odd * w0)
            c = mp.cospi(odd * w0)
            cycle = (s, c, -s, -c)
            weight = sign * pref * qpow
            base = odd * mp.pi * d
            bp = mpmath.mpc(1)  # base^m / m!
            for m in range(count):
                coeffs[m] += weight * bp * cycle[m % 4]
                bp = bp * base / (m + 1)
            sign = -sign
            qpow *= qstep
            qstep *= q
        return coeffs


def delta_series(
    ctx: ThetaContext,
    a0: Numeric,
    direction: Numeric,
    b_arg: Numeric,
    order: int,
) -> TruncatedSeries:
    """Expansion of x -> delta(a0 + direction*x, b_arg) with ``order`` known
    coefficients.

    Off the lattice this is a Taylor series (lead 0).  When a0 sits *exactly*
    on a lattice point m + k*tau the result is Laurent with lead -1 (delta has
    a simple pole there), including the quasi-periodicity factor e(-k*b) the
    lattice shift produces.  a0 within pole_eps of the lattice but not
    numerically on it is rejected — the expansion point must be either
    cleanly regular or exactly singular.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    with ctx.workdps():
        a0 = to_mpc(a0)
        d = to_mpc(direction)
        b = to_mpc(b_arg)
        if d == 0:
            raise ValueError("direction must be nonzero")
        # b must stay off the lattice — it is a genuine pole of delta.
        bdist = lattice_distance(ctx, b)
        if bdist < ctx.pole_eps:
            raise PoleProximityError("delta_series argument b", b, bdist, ctx.pole_eps)

        a_red, mm, kk = lattice_reduce(ctx, a0)
        exact_tol = mpmath.mpf(10) ** (-(ctx.precision.working_digits - 8))
        scalar = ctx.dtheta0 / (2j * mp.pi * theta(ctx, b))

        if abs(a_red) < exact_tol:
            # expansion around the exact lattice point m + k*tau
            lattice_factor = e_of(-kk * b)
            num = _theta_affine_taylor(ctx, b, d, order + 1)
            den = _theta_affine_taylor(ctx, 0, d, order + 1)
            # theta(d*x) is odd around 0: constant coefficient vanishes
            den_series = TruncatedSeries(1, tuple(den[1:]))
            num_series = TruncatedSeries(0, tuple(num))
            out = num_series * den_series.reciprocal()
            return out * (scalar * lattice_factor)

        dist = abs(a_red)
        if dist < ctx.pole_eps:
            raise PoleProximityError(
                "delta_series expansion point a0", a0, dist, ctx.pole_eps
            )

        num = _theta_affine_taylor(ctx, a0 + b, d, order)
        den = _theta_affine_taylor(ctx, a0, d, order)
        out = TruncatedSeries(0, tuple(num)) * TruncatedSeries(0, tuple(den)).reciprocal()
        return out * scalar


# ---------------------------------------------------------------------------
# elliptic genus of P^1 — series route and closed form


def ell_genus_p1(ctx: ThetaContext, h_arg: Numeric) -> mpmath.mpc:
    """Equivariant-limit elliptic genus of P^1 by the series route: the
    constant term of delta(e^x, H) + delta(e^{-x}, H) as x -> 0, where
    H = e(h_arg).  The two simple poles at x = 0 cancel; what is left at
    x^0 is the genus."""
    with ctx.workdps():
        d = 1 / (2j * mp.pi)  # additive argument of e^x is x/(2*pi*i)
        plus = delta_series(ctx, 0, d, h_arg, order=3)
        minus = delta_series(ctx, 0, -d, h_arg, order=3)
        return (plus + minus).constant_term()


def ell_genus_p1_closed(ctx: ThetaContext, h_arg: Numeric) -> mpmath.mpc:
    """Closed form of the same genus: (1/(pi*i)) * theta'(h_arg)/theta(h_arg)
    — equivalently 2*H*theta'(H)/theta(H) in multiplicative notation."""
    with ctx.workdps():
        return theta_prime(ctx, h_arg) / (1j * mp.pi * theta(ctx, h_arg))


# ---------------------------------------------------------------------------
# Calabi-Yau residue quantity, two independent routes


def cy_residue_coeff_route(
    ctx: ThetaContext, n: int, t_arg: Numeric, h_arg: Numeric
) -> mpmath.mpc:
    """Coefficient of x^{n-1} in x^n * delta(t*e^{-x}, H) * delta(e^x, H)^n.

    The x-expansion route: multiply the Laurent expansions at x = 0 and read
    off one coefficient.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    with ctx.workdps():
        order = n + 2
        d = 1 / (2j * mp.pi)
        a_series = delta_series(ctx, t_arg, -d, h_arg, order)
        b_series = delta_series(ctx, 0, d, h_arg, order) ** n
        full = (a_series * b_series).shift(n)
        return full.coefficient(n - 1)


def cy_hypersurface_chain(
    ctx: ThetaContext, n: int, z: Numeric
) -> tuple[mpmath.mpc, mpmath.mpc]:
    """Both ends of the push-forward chain for the degree-n hypersurface
    quantity, at the fiber specialization t = H^{-1/n} (additive t-arg z/n).

    Returns ``(lhs, rhs)`` where

      lhs = Res_{x=0} delta((t/e^x)^n, H) * delta(e^x, H)^n   at t = H^{-1/n},
      rhs = (theta'(0) / (2 pi i theta(-z)))^2
              * Res_{x=0} delta(e^{nx}, H)^{-1} * delta(e^x, H)^n.

    The two residues are connected by the oddness of theta; their equality
    exercises the reciprocal/Laurent series path against the direct one.
    For n = 3 both sides vanish (the genus of a degree-3 curve in P^2 is 0),
    so compare with an absolute tolerance there.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    h_arg = -to_mpc(z)
    with ctx.workdps():
        order = n + 4
        # first slot at t = H^{-1/n}: additive argument n*(z/n) = z
        a_series = delta_series(ctx, -h_arg, -n, h_arg, order)
        b_pow = delta_series(ctx, 0, 1, h_arg, order) ** n
        lhs = (a_series * b_pow).residue()

        c_inv = delta_series(ctx, 0, n, h_arg, order).reciprocal()
        scale = (theta_prime(ctx, 0) / (2j * mp.pi * theta(ctx, h_arg))) ** 2
        rhs = scale * (c_inv * b_pow).residue()
        return lhs, rhs


def cy_residue_contour_route(
    ctx: ThetaContext, n: int, t_arg: Numeric, h_arg: Numeric
) -> mpmath.mpc:
    """Res_{u=1} delta(t/u, H) * delta(u, H)^n / u, computed in the
    u-coordinate: substitute u = 1 + v, expand the additive argument
    log(1+v)/(2*pi*i) as a series in v, and take the v^{-1} coefficient.

    Mathematically equal to :func:`cy_residue_coeff_route` but via a genuinely
    different code path (affine substitution + composition vs. pure affine).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    with ctx.workdps():
        order = n + 2
        twopii = 2j * mp.pi
        # alpha(v) = log(1+v)/(2*pi*i) = (v - v^2/2 + v^3/3 - ...)/(2*pi*i)
        alpha = TruncatedSeries(
            1,
            tuple(
                mpmath.mpc((-1) ** (j) ) / ((j + 1) * twopii) for j in range(order)
            ),
        )
        d_t = delta_series(ctx, t_arg, -1, h_arg, order).compose(alpha)
        d_0 = delta_series(ctx, 0, 1, h_arg, order).compose(alpha)
        inv_u = TruncatedSeries(
            0, tuple(mpmath.mpc((-1) ** j) for j in range(order))
        )  # 1/(1+v)
        integrand = d_t * (d_0 ** n) * inv_u
        return integrand.residue()
