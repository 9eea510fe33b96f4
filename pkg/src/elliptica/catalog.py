"""The identity catalog: every verifiable equality shipped with the package.

Each entry is an :class:`IdentityDescriptor` — a pair of evaluator closures
(``lhs``, ``rhs``) over named complex variables, plus enough metadata for the
verification engine to draw samples:

  * ``variables`` declares the sample slots in a fixed order, each with a
    role: ``modular`` (the lattice parameter tau), ``torus`` (equivariant
    arguments), or ``dynamical`` (divisor / Kaehler-type arguments such as z
    or the mu's).
  * all non-modular variables are *additive* arguments; a multiplicative
    variable T corresponds to the additive t through T = e(t) = exp(2 pi i t).
    Entries describing q -> 0 rational-function limits declare no modular
    variable and exponentiate internally.
  * ``delta_degree`` records how many delta factors each product term carries
    (the homogeneity degree under the 2 pi i rescaling that relates the two
    common normalizations of delta; 0 for pure-theta or rational entries).
  * ``exact_mode`` marks rational-function identities that are additionally
    decidable in exact arithmetic; their ``exact_check`` evaluates both sides
    with :class:`fractions.Fraction` at five fixed rational points.

Pole handling: evaluators raise :class:`PoleProximityError` when a drawn
point puts any delta argument (or other critical quantity) within the
context's ``pole_eps`` of the period lattice — the verification engine
treats that as "resample", so both sides always see points where the
identity is numerically well-conditioned.

The raw A-type fixed-point sums are exposed as :func:`an_resolution_sum` and
:func:`an_orbifold_sum` because several entries and tests build on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Optional, Tuple

import mpmath
from mpmath import mp

from .numeric import e_of
from .theta import (
    PoleProximityError,
    ThetaContext,
    delta,
    lattice_distance,
    phi,
    psi,
    theta,
)
from .series import (
    cy_residue_coeff_route,
    cy_residue_contour_route,
    ell_genus_p1,
    ell_genus_p1_closed,
)
from .models import (
    preset_d4,
    preset_diagonal_orbifold,
    preset_diagonal_resolution,
    preset_tetrahedral,
)
from .evaluator import (
    TorusPoint,
    d4_resolution_side,
    hirzebruch_star,
    hirzebruch_star_closed,
    hirzebruch_star_roots,
    localized_class,
    orbifold_class,
    trig_limit_lhs,
    trig_limit_rhs,
)

Evaluator = Callable[[Optional[ThetaContext], Mapping[str, mpmath.mpc]], mpmath.mpc]
ExactPoint = Tuple[str, Fraction, Fraction]


@dataclass(frozen=True)
class Variable:
    """A named sample slot with its sampling role."""

    name: str
    role: str  # "modular" | "torus" | "dynamical"

    def __post_init__(self) -> None:
        if self.role not in ("modular", "torus", "dynamical"):
            raise ValueError(f"unknown variable role {self.role!r}")


@dataclass(frozen=True)
class IdentityDescriptor:
    identity_id: str
    description: str
    variables: Tuple[Variable, ...]
    lhs: Evaluator
    rhs: Evaluator
    delta_degree: int
    pole_note: str = "all delta arguments kept off the period lattice"
    exact_mode: bool = False
    exact_check: Optional[Callable[[], Tuple[ExactPoint, ...]]] = None

    @property
    def needs_modular(self) -> bool:
        return any(v.role == "modular" for v in self.variables)

    def variable_names(self) -> Tuple[str, ...]:
        return tuple(v.name for v in self.variables)


def _vars(*specs: str) -> Tuple[Variable, ...]:
    """Shorthand: "tau:modular", "t1:torus", ..."""
    out = []
    for s in specs:
        name, _, role = s.partition(":")
        out.append(Variable(name, role))
    return tuple(out)


def _guard(ctx: ThetaContext, label: str, value) -> None:
    dist = lattice_distance(ctx, value)
    if dist < ctx.pole_eps:
        raise PoleProximityError(label, value, dist, ctx.pole_eps)


# ---------------------------------------------------------------------------
# raw A-type sums (free mu variables)


def an_resolution_sum(ctx: ThetaContext, n: int, t1, t2, m1, m2) -> mpmath.mpc:
    """Fixed-point sum over the chain of n points of the minimal resolution:

        sum_{k=1}^{n} delta((n-k+1) t1 - (k-1) t2,  k m1 + (n-k) m2)
                     * delta(k t2 - (n-k) t1,  (k-1) m1 + (n-k+1) m2)

    with all four arguments free and additive.
    """
    total = mp.mpc(0)
    for k in range(1, n + 1):
        total += delta(ctx, (n - k + 1) * t1 - (k - 1) * t2, k * m1 + (n - k) * m2) * delta(
            ctx, k * t2 - (n - k) * t1, (k - 1) * m1 + (n - k + 1) * m2
        )
    return total


def an_orbifold_sum(ctx: ThetaContext, n: int, t1, t2, m1, m2) -> mpmath.mpc:
    """Group-side double sum matching :func:`an_resolution_sum`:

        (1/n) sum_{k,l=0}^{n-1} e(l (m2 - m1))
              * delta(t1 + (k - l tau)/n,  n m1)
              * delta(t2 + (l tau - k)/n,  n m2).
    """
    tau = ctx.tau
    total = mp.mpc(0)
    for k in range(n):
        for l in range(n):
            total += (
                e_of(l * (m2 - m1))
                * delta(ctx, t1 + (k - l * tau) / n, n * m1)
                * delta(ctx, t2 + (l * tau - k) / n, n * m2)
            )
    return total / n


# ---------------------------------------------------------------------------
# closures for the individual entries


def _theta_qp_lhs(ctx, v):
    _guard(ctx, "v", v["v"])
    return theta(ctx, v["v"] + 1 + ctx.tau)


def _theta_qp_rhs(ctx, v):
    _guard(ctx, "v", v["v"])
    return e_of(-v["v"] - ctx.tau / 2) * theta(ctx, v["v"])


def _delta_qp_lhs(ctx, v):
    return delta(ctx, v["a"] + ctx.tau, v["b"])


def _delta_qp_rhs(ctx, v):
    return e_of(-v["b"]) * delta(ctx, v["a"], v["b"])


def _fay_lhs(n: int) -> Evaluator:
    def ev(ctx, v):
        out = mp.mpc(1)
        for i in range(1, n + 1):
            out *= delta(ctx, v[f"t{i}"], v[f"m{i}"])
        return out

    return ev


def _fay_rhs(n: int) -> Evaluator:
    def ev(ctx, v):
        ts = [v[f"t{i}"] for i in range(1, n + 1)]
        ms = [v[f"m{i}"] for i in range(1, n + 1)]
        msum = sum(ms)
        total = mp.mpc(0)
        for i in range(n):
            term = delta(ctx, ts[i], msum)
            for j in range(n):
                if j != i:
                    term *= delta(ctx, ts[j] - ts[i], ms[j])
            total += term
        return total

    return ev


def _fay_sym_term(ctx, xs, xis, i) -> mpmath.mpc:
    # xis[j-1] at j=0 wraps to xis[-1] == xis[n], exactly the cyclic convention
    term = mp.mpc(1)
    for j in range(len(xs)):
        if j == i:
            continue
        term *= delta(ctx, xs[j] - xs[i], xis[j] - xis[j - 1])
    return term


def _fay_sym_lhs(n: int) -> Evaluator:
    def ev(ctx, v):
        xs = [v[f"x{i}"] for i in range(n + 1)]
        xis = [v[f"xi{i}"] for i in range(n + 1)]
        return sum((_fay_sym_term(ctx, xs, xis, i) for i in range(n)), mp.mpc(0))

    return ev


def _fay_sym_rhs(n: int) -> Evaluator:
    def ev(ctx, v):
        xs = [v[f"x{i}"] for i in range(n + 1)]
        xis = [v[f"xi{i}"] for i in range(n + 1)]
        return -_fay_sym_term(ctx, xs, xis, n)

    return ev


def _trisecant_guard(ctx, v) -> None:
    a, b, c, d = v["a"], v["b"], v["c"], v["d"]
    for label, val in (
        ("a+c", a + c), ("a-c", a - c), ("b+d", b + d), ("b-d", b - d),
        ("a+b", a + b), ("a-b", a - b), ("c+d", c + d), ("c-d", c - d),
        ("a+d", a + d), ("a-d", a - d), ("b+c", b + c), ("b-c", b - c),
    ):
        _guard(ctx, f"theta argument {label}", val)


def _trisecant_lhs(ctx, v):
    _trisecant_guard(ctx, v)
    a, b, c, d = v["a"], v["b"], v["c"], v["d"]
    return theta(ctx, a + c) * theta(ctx, a - c) * theta(ctx, b + d) * theta(ctx, b - d)


def _trisecant_rhs(ctx, v):
    _trisecant_guard(ctx, v)
    a, b, c, d = v["a"], v["b"], v["c"], v["d"]
    return theta(ctx, a + b) * theta(ctx, a - b) * theta(ctx, c + d) * theta(
        ctx, c - d
    ) + theta(ctx, a + d) * theta(ctx, a - d) * theta(ctx, b + c) * theta(ctx, b - c)


def _braid(first: bool) -> Evaluator:
    def ev(ctx, v):
        t1, t2, t3 = v["t1"], v["t2"], v["t3"]
        m1, m2, m3 = v["m1"], v["m2"], v["m3"]
        h = -v["z"]
        if first:
            return delta(ctx, t2 - t1, m3 - m2) * delta(ctx, t3 - t2, m3 - m1) * delta(
                ctx, t2 - t1, m2 - m1
            ) + delta(ctx, t1 - t2, h) * delta(ctx, t3 - t1, m3 - m1) * delta(ctx, t2 - t1, h)
        return delta(ctx, t3 - t2, m2 - m1) * delta(ctx, t2 - t1, m3 - m1) * delta(
            ctx, t3 - t2, m3 - m2
        ) + delta(ctx, t2 - t3, h) * delta(ctx, t3 - t1, m3 - m1) * delta(ctx, t3 - t2, h)

    return ev


def _an_mckay_lhs(n: int) -> Evaluator:
    def ev(ctx, v):
        return an_resolution_sum(ctx, n, v["t1"], v["t2"], v["m1"], v["m2"])

    return ev


def _an_mckay_rhs(n: int) -> Evaluator:
    def ev(ctx, v):
        return an_orbifold_sum(ctx, n, v["t1"], v["t2"], v["m1"], v["m2"])

    return ev


_SIMPLIFIED_N = 3


def _an_simplified_lhs(ctx, v):
    n = _SIMPLIFIED_N
    return n * delta(ctx, n * v["x"], v["b"]) * delta(ctx, -n * v["x"], v["b"])


def _an_simplified_rhs(ctx, v):
    n = _SIMPLIFIED_N
    tau = ctx.tau
    total = mp.mpc(0)
    for k in range(n):
        for l in range(n):
            total += delta(ctx, (k - l * tau) / n + v["x"], v["b"]) * delta(
                ctx, (l * tau - k) / n - v["x"], v["b"]
            )
    return total / n


_SELFDUAL_N = 3


def _an_selfdual_lhs(ctx, v):
    return an_resolution_sum(ctx, _SELFDUAL_N, v["m1"], -v["m2"], v["t1"], -v["t2"])


def _an_selfdual_rhs(ctx, v):
    return -an_resolution_sum(ctx, _SELFDUAL_N, v["t1"], v["t2"], v["m1"], v["m2"])


def _an_selfdual_cor_lhs(ctx, v):
    n = _SELFDUAL_N
    return n * an_orbifold_sum(ctx, n, v["t1"], v["t2"], v["m1"], v["m2"])


def _an_selfdual_cor_rhs(ctx, v):
    n = _SELFDUAL_N
    tau = ctx.tau
    t1, t2, m1, m2 = v["t1"], v["t2"], v["m1"], v["m2"]
    total = mp.mpc(0)
    for k in range(n):
        for l in range(n):
            total += (
                e_of(-l * (t1 + t2))
                * delta(ctx, (k - l * tau) / n + m1, n * t1)
                * delta(ctx, (l * tau - k) / n - m2, -n * t2)
            )
    return -total


@lru_cache(maxsize=1)
def _d4_family():
    return preset_d4()


def _d4_point(v) -> TorusPoint:
    return TorusPoint((v["t"],), v["z"])


def _d4_mckay_lhs(ctx, v):
    fam = _d4_family()
    return d4_resolution_side(ctx, fam, _d4_point(v))


def _d4_mckay_rhs(ctx, v):
    fam = _d4_family()
    return orbifold_class(ctx, fam.orbifold, _d4_point(v))


def _d4_remarkable_lhs(ctx, v):
    h = -v["z"]
    return delta(ctx, -2 * v["t"], h) * delta(ctx, 4 * v["t"], h)


def _d4_remarkable_rhs(ctx, v):
    h = -v["z"]
    tau = ctx.tau
    total = mp.mpc(0)
    for k in range(4):
        for l in range(4):
            sign = -1 if ((k + 1) * (l + 1)) % 2 else 1
            total += sign * phi(ctx, mp.mpf(k) / 4 - l * tau / 4, v["t"], h)
    return total / 8


def _phi_period_lhs(ctx, v):
    return phi(ctx, v["lam"], v["t"], -v["z"])


def _phi_period_rhs(ctx, v):
    return phi(ctx, 1 + ctx.tau - v["lam"], v["t"], -v["z"])


def _psi_swap_lhs(ctx, v):
    return psi(ctx, v["lam"], v["t1"], v["t2"], -v["z"])


def _psi_swap_rhs(ctx, v):
    return psi(ctx, v["lam"], -v["t2"], -v["t1"], v["z"])


# the three 4-factor summands of the resolution-side expression F(t1, t2)
# for the W (+) W* quotient; rows are (w1, w2) exponents of (t1, t2)
_LS_F_WEIGHTS = (
    ((1, -1), (3, -1), (0, 2), (-2, 2)),
    ((2, 0), (4, -2), (-1, 1), (-3, 3)),
    ((3, -3), (2, -2), (-1, 3), (-2, 4)),
)


def ls_f_expression(ctx: ThetaContext, t1, t2, z) -> mpmath.mpc:
    """The three-summand expression F(t1, t2) whose t1 <-> t2 symmetry encodes
    the equality of the two crepant resolutions of the W (+) W* quotient."""
    h = -z
    total = mp.mpc(0)
    for point in _LS_F_WEIGHTS:
        term = mp.mpc(1)
        for w1, w2 in point:
            term *= delta(ctx, w1 * t1 + w2 * t2, h)
        total += term
    return total


def _ls_fsym_lhs(ctx, v):
    return ls_f_expression(ctx, v["t1"], v["t2"], v["z"])


def _ls_fsym_rhs(ctx, v):
    return ls_f_expression(ctx, v["t2"], v["t1"], v["z"])


@lru_cache(maxsize=1)
def _ls_models():
    return preset_tetrahedral()


def _ls_point(v) -> TorusPoint:
    return TorusPoint((v["t1"], v["t2"]), v["z"])


def _ls_mckay_lhs(ctx, v):
    res, _ = _ls_models()
    return localized_class(ctx, res, _ls_point(v))


def _ls_mckay_rhs(ctx, v):
    _, orb = _ls_models()
    return orbifold_class(ctx, orb, _ls_point(v))


def _ls_wwstar_lhs(ctx, v):
    _, orb = _ls_models()
    return orbifold_class(ctx, orb, _ls_point(v))


def _ls_wwstar_rhs(ctx, v):
    _, orb = _ls_models()
    flipped = TorusPoint((-v["t2"], -v["t1"]), -v["z"])
    return orbifold_class(ctx, orb, flipped)


@lru_cache(maxsize=None)
def _diag_models(m: int, n: int):
    return preset_diagonal_resolution(m, n), preset_diagonal_orbifold(m, n)


def _diag_point(m: int, v) -> TorusPoint:
    return TorusPoint(tuple(v[f"t{i}"] for i in range(1, m + 1)), v["z"])


def _diag_lhs(m: int, n: int) -> Evaluator:
    def ev(ctx, v):
        res, _ = _diag_models(m, n)
        return localized_class(ctx, res, _diag_point(m, v))

    return ev


def _diag_rhs(m: int, n: int) -> Evaluator:
    def ev(ctx, v):
        _, orb = _diag_models(m, n)
        return orbifold_class(ctx, orb, _diag_point(m, v))

    return ev


def _ell_p1_lhs(ctx, v):
    _guard(ctx, "z (H-slot)", v["z"])
    return ell_genus_p1(ctx, -v["z"])


def _ell_p1_rhs(ctx, v):
    _guard(ctx, "z (H-slot)", v["z"])
    return ell_genus_p1_closed(ctx, -v["z"])


def _cy_lhs(n: int) -> Evaluator:
    def ev(ctx, v):
        _guard(ctx, "z (H-slot)", v["z"])
        return cy_residue_coeff_route(ctx, n, v["t"], -v["z"])

    return ev


def _cy_rhs(n: int) -> Evaluator:
    def ev(ctx, v):
        _guard(ctx, "z (H-slot)", v["z"])
        return cy_residue_contour_route(ctx, n, v["t"], -v["z"])

    return ev


# ---------------------------------------------------------------------------
# q -> 0 limit entries: rational functions of multiplicative variables.
# Samples arrive additive; exponentiate here.  No modular variable.

_DENOM_EPS = 1e-6


def _guard_denominators(label: str, denoms) -> None:
    for d in denoms:
        a = abs(d)
        if a < _DENOM_EPS:
            raise PoleProximityError(label, d, a, _DENOM_EPS)


def _hirz_values(v):
    t1 = e_of(v["t1"])
    t2 = e_of(v["t2"])
    y = e_of(v["z"])
    return t1, t2, y


def _hirz_guard(n: int, t1, t2, y) -> None:
    denoms = []
    for k in range(1, n + 1):
        denoms.append(1 - t2 ** (k - 1) / t1 ** (n - k + 1))
        denoms.append(1 - t1 ** (n - k) / t2**k)
    r = 1 / (t1 * t2)
    denoms += [1 - r, 1 - t1 ** (-n), 1 - t2 ** (-n)]
    for k in range(n):
        w = e_of(mpmath.mpf(k) / n)
        denoms += [1 - w / t1, 1 - 1 / (w * t2)]
    _guard_denominators("limit-form denominator", denoms)


_HIRZ_N = 2


def _hirz_star_lhs(ctx, v):
    t1, t2, y = _hirz_values(v)
    _hirz_guard(_HIRZ_N, t1, t2, y)
    return hirzebruch_star(_HIRZ_N, t1, t2, y)


def _hirz_closed_rhs(ctx, v):
    t1, t2, y = _hirz_values(v)
    _hirz_guard(_HIRZ_N, t1, t2, y)
    return hirzebruch_star_closed(_HIRZ_N, t1, t2, y)


def _hirz_roots_lhs(ctx, v):
    t1, t2, y = _hirz_values(v)
    _hirz_guard(_HIRZ_N, t1, t2, y)
    return hirzebruch_star_roots(_HIRZ_N, t1, t2, y)


_HIRZ_EXACT_POINTS = (
    (Fraction(2), Fraction(3), Fraction(5)),
    (Fraction(1, 2), Fraction(3), Fraction(2)),
    (Fraction(5, 3), Fraction(7, 2), Fraction(1, 5)),
    (Fraction(-2), Fraction(3, 2), Fraction(4)),
    (Fraction(7), Fraction(1, 3), Fraction(3, 4)),
)


def _hirz_exact_check() -> Tuple[ExactPoint, ...]:
    out = []
    for t1, t2, y in _HIRZ_EXACT_POINTS:
        out.append(
            (
                f"t1={t1}, t2={t2}, y={y}",
                hirzebruch_star(_HIRZ_N, t1, t2, y),
                hirzebruch_star_closed(_HIRZ_N, t1, t2, y),
            )
        )
    return tuple(out)


def _hirz_roots_exact_check() -> Tuple[ExactPoint, ...]:
    out = []
    for t1, t2, y in _HIRZ_EXACT_POINTS:
        out.append(
            (
                f"t1={t1}, t2={t2}, y={y}",
                hirzebruch_star_roots(_HIRZ_N, t1, t2, y, exact=True),
                hirzebruch_star_closed(_HIRZ_N, t1, t2, y),
            )
        )
    return tuple(out)


_TRIG_N = 3


def _trig_guard(n: int, t, y) -> None:
    denoms = [1 - t**2, (1 - t**n) ** 2]
    for k in range(n):
        c = mp.cospi(mpmath.mpf(2 * k) / n)
        denoms.append(1 - 2 * c * t + t**2)
    _guard_denominators("trigonometric-form denominator", denoms)


def _trig_lhs(ctx, v):
    t = e_of(v["t"])
    y = e_of(v["z"])
    _trig_guard(_TRIG_N, t, y)
    return trig_limit_lhs(_TRIG_N, t, y)


def _trig_rhs(ctx, v):
    t = e_of(v["t"])
    y = e_of(v["z"])
    _trig_guard(_TRIG_N, t, y)
    return trig_limit_rhs(_TRIG_N, t, y)


_TRIG_EXACT_POINTS = (
    (Fraction(1, 2), Fraction(2)),
    (Fraction(1, 3), Fraction(1, 5)),
    (Fraction(2), Fraction(3)),
    (Fraction(3, 2), Fraction(-1)),
    (Fraction(-1, 2), Fraction(7, 3)),
)


def _trig_exact_check() -> Tuple[ExactPoint, ...]:
    out = []
    for t, y in _TRIG_EXACT_POINTS:
        out.append(
            (
                f"T={t}, y={y}",
                trig_limit_lhs(_TRIG_N, t, y, exact=True),
                trig_limit_rhs(_TRIG_N, t, y),
            )
        )
    return tuple(out)


_TRIG_Y0_N = 2


def _trig_y0_lhs(ctx, v):
    t = e_of(v["t"])
    _trig_guard(_TRIG_Y0_N, t, 0)
    return trig_limit_lhs(_TRIG_Y0_N, t, mp.mpf(0))


def _trig_y0_rhs(ctx, v):
    t = e_of(v["t"])
    _trig_guard(_TRIG_Y0_N, t, 0)
    return trig_limit_rhs(_TRIG_Y0_N, t, mp.mpf(0))


_TRIG_Y0_EXACT_POINTS = (
    Fraction(1, 2),  # both sides 20/9 here
    Fraction(1, 3),
    Fraction(2, 5),
    Fraction(3, 2),
    Fraction(5, 7),
)


def _trig_y0_exact_check() -> Tuple[ExactPoint, ...]:
    out = []
    for t in _TRIG_Y0_EXACT_POINTS:
        out.append(
            (
                f"T={t}",
                trig_limit_lhs(_TRIG_Y0_N, t, Fraction(0), exact=True),
                trig_limit_rhs(_TRIG_Y0_N, t, Fraction(0)),
            )
        )
    return tuple(out)


# ---------------------------------------------------------------------------
# assembly


def _entry(
    identity_id: str,
    description: str,
    variables: Tuple[Variable, ...],
    lhs: Evaluator,
    rhs: Evaluator,
    delta_degree: int,
    **kw,
) -> IdentityDescriptor:
    return IdentityDescriptor(
        identity_id=identity_id,
        description=description,
        variables=variables,
        lhs=lhs,
        rhs=rhs,
        delta_degree=delta_degree,
        **kw,
    )


@lru_cache(maxsize=1)
def catalog() -> Tuple[IdentityDescriptor, ...]:
    """All built-in identities, in a stable order."""
    entries = []

    entries.append(
        _entry(
            "theta.quasiperiod",
            "theta(v + 1 + tau) = e(-v - tau/2) theta(v): the combined "
            "lattice quasi-periodicity of the odd theta function.",
            _vars("tau:modular", "v:torus"),
            _theta_qp_lhs,
            _theta_qp_rhs,
            0,
        )
    )
    entries.append(
        _entry(
            "delta.quasiperiod",
            "delta(a + tau, b) = e(-b) delta(a, b): tau-shift in the first "
            "slot multiplies by e(-b).",
            _vars("tau:modular", "a:torus", "b:dynamical"),
            _delta_qp_lhs,
            _delta_qp_rhs,
            1,
        )
    )

    for n in range(2, 6):
        torus = [f"t{i}:torus" for i in range(1, n + 1)]
        dyn = [f"m{i}:dynamical" for i in range(1, n + 1)]
        entries.append(
            _entry(
                f"fay.n{n}",
                f"Fay-type blowup relation with {n} slots: the delta product "
                "equals the sum of exceptional-point contributions.",
                _vars("tau:modular", *torus, *dyn),
                _fay_lhs(n),
                _fay_rhs(n),
                n,
            )
        )
    for n in range(2, 6):
        xs = [f"x{i}:torus" for i in range(n + 1)]
        xis = [f"xi{i}:dynamical" for i in range(n + 1)]
        entries.append(
            _entry(
                f"fay.symmetric.n{n}",
                f"Cyclically symmetric rewriting of the {n}-slot Fay relation: "
                "the full (n+1)-term sum vanishes (stated as: first n terms = "
                "minus the last).",
                _vars("tau:modular", *xs, *xis),
                _fay_sym_lhs(n),
                _fay_sym_rhs(n),
                n,
            )
        )
    entries.append(
        _entry(
            "trisecant.additive",
            "Three-term trisecant identity for products of four theta values "
            "in additive arguments a, b, c, d.",
            _vars("tau:modular", "a:torus", "b:torus", "c:torus", "d:torus"),
            _trisecant_lhs,
            _trisecant_rhs,
            0,
            pole_note="all twelve composite theta arguments kept off the lattice",
        )
    )
    entries.append(
        _entry(
            "braid.sl3",
            "Equality of the two triple-product-plus-correction expressions "
            "attached to the two reduced words of the longest sl3 braid.",
            _vars(
                "tau:modular",
                "t1:torus", "t2:torus", "t3:torus",
                "m1:dynamical", "m2:dynamical", "m3:dynamical", "z:dynamical",
            ),
            _braid(True),
            _braid(False),
            3,
        )
    )
    for n in range(1, 7):
        entries.append(
            _entry(
                f"an.mckay.n{n}",
                f"Chain-of-{n}-points resolution sum equals the (1/{n})-weighted "
                "double sum over the cyclic group, with all four arguments free."
                + (" Structurally exact at n=1: both sides are the same term." if n == 1 else ""),
                _vars("tau:modular", "t1:torus", "t2:torus", "m1:dynamical", "m2:dynamical"),
                _an_mckay_lhs(n),
                _an_mckay_rhs(n),
                2,
            )
        )
    entries.append(
        _entry(
            "an.simplified",
            "One-variable specialization of the cyclic-quotient identity "
            "(pinned at order 3): n d(nx, b) d(-nx, b) = (1/n) double sum.",
            _vars("tau:modular", "x:torus", "b:dynamical"),
            _an_simplified_lhs,
            _an_simplified_rhs,
            2,
        )
    )
    entries.append(
        _entry(
            "an.selfdual",
            "Antisymmetry of the chain sum under swapping equivariant and "
            "dynamical variables with two sign flips (pinned at order 3).",
            _vars("tau:modular", "t1:torus", "t2:torus", "m1:dynamical", "m2:dynamical"),
            _an_selfdual_lhs,
            _an_selfdual_rhs,
            2,
        )
    )
    entries.append(
        _entry(
            "an.selfdual.corollary",
            "Self-duality transported to the double-sum side: the group-side "
            "sum with e(l(m2-m1)) weights equals minus its dual with "
            "e(-l(t1+t2)) weights (pinned at order 3).",
            _vars("tau:modular", "t1:torus", "t2:torus", "m1:dynamical", "m2:dynamical"),
            _an_selfdual_cor_lhs,
            _an_selfdual_cor_rhs,
            2,
        )
    )
    entries.append(
        _entry(
            "d4.mckay",
            "Binary-dihedral(8) quotient of the plane: resolution side "
            "(isolated points plus the fixed-line integral, containing the "
            "term 3 d(-2t,-z) d(4t,-z)) equals the 10-row orbifold sum.",
            _vars("tau:modular", "t:torus", "z:dynamical"),
            _d4_mckay_lhs,
            _d4_mckay_rhs,
            2,
        )
    )
    entries.append(
        _entry(
            "d4.remarkable",
            "d(-2t,-z) d(4t,-z) = (1/8) sum_{k,l=0..3} (-1)^((k+1)(l+1)) "
            "Phi(k/4 - l tau/4): a 16-term signed quarter-period average.",
            _vars("tau:modular", "t:torus", "z:dynamical"),
            _d4_remarkable_lhs,
            _d4_remarkable_rhs,
            2,
        )
    )
    entries.append(
        _entry(
            "phi.period",
            "Phi(lam) = Phi(1 + tau - lam): the paired-factor function is "
            "symmetric about the half-period (used to fold the signed sums).",
            _vars("tau:modular", "lam:torus", "t:torus", "z:dynamical"),
            _phi_period_lhs,
            _phi_period_rhs,
            2,
        )
    )
    entries.append(
        _entry(
            "psi.swap",
            "Psi(lam)(t1, t2, z) = Psi(lam)(-t2, -t1, -z): oddness of delta "
            "in both slots, the engine of the W (+) W* symmetry.",
            _vars("tau:modular", "lam:torus", "t1:torus", "t2:torus", "z:dynamical"),
            _psi_swap_lhs,
            _psi_swap_rhs,
            2,
        )
    )
    entries.append(
        _entry(
            "lehnsorger.fsym",
            "F(t1, t2) = F(t2, t1) for the three-summand expression relating "
            "the two crepant resolutions of the W (+) W* quotient.",
            _vars("tau:modular", "t1:torus", "t2:torus", "z:dynamical"),
            _ls_fsym_lhs,
            _ls_fsym_rhs,
            4,
        )
    )
    entries.append(
        _entry(
            "lehnsorger.mckay",
            "Binary-tetrahedral W (+) W* quotient: 7-point resolution sum "
            "equals the 42-row orbifold sum over the 24-element group.",
            _vars("tau:modular", "t1:torus", "t2:torus", "z:dynamical"),
            _ls_mckay_lhs,
            _ls_mckay_rhs,
            4,
        )
    )
    entries.append(
        _entry(
            "lehnsorger.wwstar.symmetry",
            "Orbifold value at (t1, t2, z) equals the value at (-t2, -t1, -z) "
            "for the W (+) W* model (inversion of all multiplicative slots).",
            _vars("tau:modular", "t1:torus", "t2:torus", "z:dynamical"),
            _ls_wwstar_lhs,
            _ls_wwstar_rhs,
            4,
        )
    )
    for m in range(1, 4):
        for n in range(2, 4):
            torus = [f"t{i}:torus" for i in range(1, m + 1)]
            entries.append(
                _entry(
                    f"diag.mckay.m{m}.n{n}",
                    f"Scalar Z_{n} quotient of C^{m}: blowup localization sum "
                    f"(slots d(n t_i, {m}/{n} * (-z))) equals the (1/{n})-"
                    "weighted orbifold double sum.",
                    _vars("tau:modular", *torus, "z:dynamical"),
                    _diag_lhs(m, n),
                    _diag_rhs(m, n),
                    m,
                )
            )
    entries.append(
        _entry(
            "limit.hirzebruch",
            "q -> 0 limit, chain form vs. closed rational form (order 2): "
            "rational functions of multiplicative t1, t2, y = e(z).",
            _vars("t1:torus", "t2:torus", "z:dynamical"),
            _hirz_star_lhs,
            _hirz_closed_rhs,
            0,
            pole_note="all rational-form denominators bounded away from zero",
            exact_mode=True,
            exact_check=_hirz_exact_check,
        )
    )
    entries.append(
        _entry(
            "limit.hirzebruch.roots",
            "q -> 0 limit, roots-of-unity average vs. closed rational form "
            "(order 2, where the roots are rational).",
            _vars("t1:torus", "t2:torus", "z:dynamical"),
            _hirz_roots_lhs,
            _hirz_closed_rhs,
            0,
            pole_note="all rational-form denominators bounded away from zero",
            exact_mode=True,
            exact_check=_hirz_roots_exact_check,
        )
    )
    entries.append(
        _entry(
            "limit.trig",
            "Trigonometric q -> 0 identity at order 3 with general y: cosine "
            "average equals the product form.",
            _vars("t:torus", "z:dynamical"),
            _trig_lhs,
            _trig_rhs,
            0,
            pole_note="all rational-form denominators bounded away from zero",
            exact_mode=True,
            exact_check=_trig_exact_check,
        )
    )
    entries.append(
        _entry(
            "limit.trig.y0",
            "y = 0 specialization of the trigonometric identity at order 2; "
            "at T = 1/2 both sides equal 20/9 exactly.",
            _vars("t:torus"),
            _trig_y0_lhs,
            _trig_y0_rhs,
            0,
            pole_note="all rational-form denominators bounded away from zero",
            exact_mode=True,
            exact_check=_trig_y0_exact_check,
        )
    )
    entries.append(
        _entry(
            "ell.p1",
            "Projective-line genus: constant term of d(e^x, H) + d(e^{-x}, H) "
            "equals theta'(h)/(pi i theta(h)), h = -z.",
            _vars("tau:modular", "z:dynamical"),
            _ell_p1_lhs,
            _ell_p1_rhs,
            1,
        )
    )
    for n in range(2, 6):
        entries.append(
            _entry(
                f"cy.residue.n{n}",
                f"Degree-{n} hypersurface residue: coefficient-extraction "
                "route equals the contour (u = 1 + v substitution) route.",
                _vars("tau:modular", "t:torus", "z:dynamical"),
                _cy_lhs(n),
                _cy_rhs(n),
                n + 1,
            )
        )

    ids = [e.identity_id for e in entries]
    assert len(ids) == len(set(ids)), "duplicate identity ids"
    return tuple(entries)


def catalog_ids() -> Tuple[str, ...]:
    return tuple(e.identity_id for e in catalog())


def get(identity_id: str) -> IdentityDescriptor:
    """Look up one identity; raises KeyError with the known ids on a miss."""
    for entry in catalog():
        if entry.identity_id == identity_id:
            return entry
    raise KeyError(
        f"unknown identity {identity_id!r}; known ids: {', '.join(catalog_ids())}"
    )


def tampered_an_mckay_n3() -> IdentityDescriptor:
    """A deliberately broken copy of an.mckay.n3 (one delta argument shifted
    by 1e-3).  Not listed in the catalog; used to prove the harness can fail."""

    def bad_lhs(ctx, v):
        n = 3
        t1, t2, m1, m2 = v["t1"], v["t2"], v["m1"], v["m2"]
        total = mp.mpc(0)
        for k in range(1, n + 1):
            first = (n - k + 1) * t1 - (k - 1) * t2
            if k == 1:
                first = first + mp.mpf("0.001")
            total += delta(ctx, first, k * m1 + (n - k) * m2) * delta(
                ctx, k * t2 - (n - k) * t1, (k - 1) * m1 + (n - k + 1) * m2
            )
        return total

    base = get("an.mckay.n3")
    return IdentityDescriptor(
        identity_id="an.mckay.n3.tampered",
        description="an.mckay.n3 with one delta argument shifted by 1e-3; must fail.",
        variables=base.variables,
        lhs=bad_lhs,
        rhs=base.rhs,
        delta_degree=base.delta_degree,
    )
