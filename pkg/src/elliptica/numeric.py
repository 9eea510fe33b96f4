"""Precision scaffolding and the additive-argument convention.

Every torus coordinate in this package is carried *additively*: a value ``a``
stands for the multiplicative coordinate ``A = e(a) = exp(2*pi*i*a)``.  The
package never takes a logarithm of a multiplicative value, and fractional
powers of ``q = e(tau)`` are formed by scaling the additive argument (e.g.
``q**(1/8) -> e_of(tau/8)``), so branch choices are exact by construction.

Precision is scoped, not global: functions receive a configuration object and
wrap their arithmetic in ``mp.workdps`` so that library calls never leak a
precision change into the caller's mpmath context.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath
from mpmath import mp

Numeric = Union[int, float, complex, Fraction, mpmath.mpf, mpmath.mpc]

DEFAULT_DIGITS = 30
MIN_DIGITS = 15


def as_mp(x: Numeric) -> Union[mpmath.mpf, mpmath.mpc]:
    """Convert to an mpmath number at the *current* working precision.

    Fractions are converted with a single rounding (numerator divided by
    denominator in multiprecision), never through float.
    """
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpmathify(x)


def to_mpc(x: Numeric) -> mpmath.mpc:
    """Like :func:`as_mp` but always complex-typed."""
    return mpmath.mpc(as_mp(x))


def e_of(x: Numeric) -> mpmath.mpc:
    """The exponential convention ``e(x) = exp(2*pi*i*x)``.

    This is the only exponentiation route in the package; uses ``expjpi``
    so that rational and half-integer arguments come out to full precision.
    """
    return mp.expjpi(2 * as_mp(x))


@dataclass(frozen=True)
class PrecisionConfig:
    """Working precision (decimal digits) and series tail budget.

    ``tail_tolerance`` bounds the magnitude of the first dropped term in any
    q-series or q-product; ``None`` selects ``10**-(working_digits + 5)`` so
    truncation error stays below arithmetic rounding noise.
    """

    working_digits: int = DEFAULT_DIGITS
    tail_tolerance: Union[float, None] = None

    def __post_init__(self) -> None:
        if self.working_digits < MIN_DIGITS:
            raise ValueError(
                f"working_digits must be >= {MIN_DIGITS}, got {self.working_digits}"
            )
        if self.tail_tolerance is not None and not (0.0 < self.tail_tolerance < 1.0):
            raise ValueError("tail_tolerance must lie strictly between 0 and 1")

    @property
    def tail(self) -> float:
        if self.tail_tolerance is not None:
            return self.tail_tolerance
        return 10.0 ** -(self.working_digits + 5)


@dataclass(frozen=True)
class ModularParam:
    """The modular parameter tau with Im(tau) > 0 (q = e(tau), |q| < 1)."""

    tau: mpmath.mpc

    def __post_init__(self) -> None:
        object.__setattr__(self, "tau", to_mpc(self.tau))
        if not mpmath.im(self.tau) > 0:
            raise ValueError(f"Im(tau) must be positive, got tau = {self.tau}")

    @property
    def q_abs(self) -> mpmath.mpf:
        """|q| = exp(-2*pi*Im(tau))."""
        return mp.exp(-2 * mp.pi * mpmath.im(self.tau))


def truncation_order(q_abs: Numeric, tol: Numeric) -> int:
    """Number of terms/factors after which a q-series tail drops below tol.

    Returns the smallest N >= 1 with ``q_abs**N <= tol`` — valid for both the
    theta sine series (whose terms decay at least this fast) and q-products.
    Monotone: shrinking tol or growing q_abs never decreases the order.
    """
    q_abs = float(q_abs)
    tol = float(tol)
    if not 0.0 < q_abs < 1.0:
        raise ValueError(f"q_abs must lie in (0, 1), got {q_abs}")
    if not 0.0 < tol < 1.0:
        raise ValueError(f"tol must lie in (0, 1), got {tol}")
    return max(1, math.ceil(math.log(tol) / math.log(q_abs)))
