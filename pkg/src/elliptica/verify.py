"""Randomized verification of catalog identities, with reproducible reports.

Sampling is fully deterministic given a 64-bit seed:

  * the per-sample generator seed for sample ``index`` is
    ``splitmix64(seed + (index + 1) * GOLDEN)`` — a fixed stream-splitting
    rule, so a parallel run hands each worker exactly the generator a serial
    run would have used, and reports agree byte-for-byte (minus timing);
  * each sample draws tau with Re uniform in [-1/2, 1/2] and Im uniform in
    the configured range (default [0.8, 2.0]), then each declared non-modular
    variable with Re uniform in [-1/2, 1/2] and Im uniform in
    [-Im(tau)/4, Im(tau)/4];
  * if either side raises :class:`PoleProximityError` (or hits a vanishing
    rational-form denominator) the point is discarded and the *same* stream
    simply continues drawing, up to 100 attempts, after which a
    :class:`PersistentPoleError` names the violated constraint.

Reports carry every number as a decimal string at the working precision, and
complex values as ``[re, im]`` string pairs, so two runs can be diffed
textually.  ``elapsed_ms`` is the only field that varies between identical
runs.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

import mpmath
from mpmath import mp

from .numeric import DEFAULT_DIGITS, PrecisionConfig
from .theta import PoleProximityError, ThetaContext, make_context
from .models import OrbifoldModel, ResolutionModel
from .evaluator import TorusPoint, localized_class, orbifold_class
from .catalog import IdentityDescriptor, Variable, get

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MAX_RETRIES = 100

DEFAULT_SEED = 20259


class PersistentPoleError(ValueError):
    """No pole-free sample found within the retry budget."""

    def __init__(self, identity_id: str, index: int, constraint: str, last: Exception):
        self.identity_id = identity_id
        self.index = index
        self.constraint = constraint
        self.last = last
        super().__init__(
            f"identity {identity_id!r}, sample {index}: no valid point in "
            f"{_MAX_RETRIES} retries (constraint: {constraint}); last: {last}"
        )


def sample_seed(seed: int, index: int) -> int:
    """splitmix64 output for stream position ``index`` of master ``seed``."""
    x = (seed + (index + 1) * _GOLDEN) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


@dataclass(frozen=True)
class SampleConfig:
    """How a verification sweep draws and judges its samples."""

    samples: int = 32
    seed: int = DEFAULT_SEED
    tolerance: float = 1e-9
    precision: PrecisionConfig = field(default_factory=PrecisionConfig)
    tau_im_range: Tuple[float, float] = (0.8, 2.0)

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        lo, hi = self.tau_im_range
        if not (0 < lo <= hi):
            raise ValueError(f"bad tau_im_range {self.tau_im_range}")


@dataclass(frozen=True)
class VerificationReport:
    identity_id: str
    samples: int
    seed: int
    digits: int
    tolerance: float
    max_abs_err: str
    max_rel_err: str
    truncation_orders: Tuple[int, ...]
    failures: Tuple[dict, ...]
    elapsed_ms: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "identity": self.identity_id,
            "samples": self.samples,
            "seed": self.seed,
            "digits": self.digits,
            "tolerance": self.tolerance,
            "max_abs_err": self.max_abs_err,
            "max_rel_err": self.max_rel_err,
            "truncation_orders": list(self.truncation_orders),
            "failures": [dict(f) for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _num_str(x, digits: int) -> str:
    return mpmath.nstr(x, digits)


def _complex_pair(x, digits: int) -> list:
    xc = mpmath.mpc(x)
    return [_num_str(xc.real, digits), _num_str(xc.imag, digits)]


def _sample_record(
    entry: IdentityDescriptor,
    index: int,
    seed: int,
    digits: int,
    tail_tolerance: Optional[float],
    tau_im_range: Tuple[float, float],
) -> dict:
    """Draw one pole-free sample and evaluate both sides.

    Pure function of its arguments — the serial and parallel paths both call
    exactly this, which is what makes their reports identical.
    """
    rng = random.Random(sample_seed(seed, index))
    last_err: Optional[Exception] = None
    with mp.workdps(digits):
        for attempt in range(_MAX_RETRIES):
            tau_re = rng.uniform(-0.5, 0.5)
            tau_im = rng.uniform(*tau_im_range)
            vals = {}
            for var in entry.variables:
                if var.role == "modular":
                    continue
                re = rng.uniform(-0.5, 0.5)
                im = rng.uniform(-tau_im / 4, tau_im / 4)
                vals[var.name] = mp.mpc(re, im)
            ctx: Optional[ThetaContext] = None
            if entry.needs_modular:
                ctx = make_context(
                    mp.mpc(tau_re, tau_im),
                    digits=digits,
                    tail_tolerance=tail_tolerance,
                )
            try:
                lhs = entry.lhs(ctx, vals)
                rhs = entry.rhs(ctx, vals)
            except (PoleProximityError, ZeroDivisionError) as exc:
                last_err = exc
                continue
            abs_err = abs(mpmath.mpc(lhs) - mpmath.mpc(rhs))
            rel_err = abs_err / max(abs(lhs), abs(rhs), mp.mpf("1e-300"))
            point = {}
            if entry.needs_modular:
                point["tau"] = _complex_pair(ctx.tau, digits)
            for name, value in vals.items():
                point[name] = _complex_pair(value, digits)
            return {
                "index": index,
                "retries": attempt,
                "point": point,
                "lhs": _complex_pair(lhs, digits),
                "rhs": _complex_pair(rhs, digits),
                "abs_err": _num_str(abs_err, digits),
                "rel_err": _num_str(rel_err, digits),
                "truncation_order": ctx.series_terms if ctx is not None else 0,
                "_abs": abs_err,
                "_rel": rel_err,
            }
    raise PersistentPoleError(entry.identity_id, index, entry.pole_note, last_err)


def _worker(args: tuple) -> dict:
    """Parallel entry point: re-resolve the identity by id in the worker."""
    identity_id, index, seed, digits, tail_tolerance, tau_im_range = args
    entry = get(identity_id)
    record = _sample_record(entry, index, seed, digits, tail_tolerance, tau_im_range)
    # mpf values do not need to cross the process boundary
    record.pop("_abs"), record.pop("_rel")
    return record


def _exact_failures(entry: IdentityDescriptor) -> list:
    """Exact-arithmetic spot checks for rational-function identities."""
    failures = []
    if entry.exact_mode and entry.exact_check is not None:
        for label, lhs, rhs in entry.exact_check():
            if lhs != rhs:
                diff = abs(Fraction(lhs) - Fraction(rhs))
                scale = max(abs(Fraction(lhs)), abs(Fraction(rhs)), Fraction(1))
                failures.append(
                    {
                        "kind": "exact",
                        "point": label,
                        "lhs": str(lhs),
                        "rhs": str(rhs),
                        "rel_err": str(float(diff / scale)),
                    }
                )
    return failures


def verify(
    identity: Union[str, IdentityDescriptor],
    cfg: Optional[SampleConfig] = None,
    jobs: int = 1,
) -> VerificationReport:
    """Run the randomized sweep (plus exact spot checks) for one identity.

    ``jobs > 1`` fans samples out to worker processes; only identities that
    live in the catalog can run parallel (workers re-resolve them by id).
    The report is identical either way, apart from ``elapsed_ms``.
    """
    if isinstance(identity, str):
        entry = get(identity)
    else:
        entry = identity
    cfg = cfg if cfg is not None else SampleConfig()
    digits = cfg.precision.working_digits
    tail = cfg.precision.tail_tolerance
    started = time.perf_counter()

    records: list
    if jobs > 1:
        # a descriptor not in the catalog cannot be re-resolved by a worker
        try:
            resolvable = get(entry.identity_id) is entry
        except KeyError:
            resolvable = False
        if not resolvable:
            raise ValueError(
                f"identity {entry.identity_id!r} is not a catalog entry; "
                "parallel verification only supports catalog entries"
            )
        args = [
            (entry.identity_id, i, cfg.seed, digits, tail, cfg.tau_im_range)
            for i in range(cfg.samples)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_worker, args))
    else:
        records = []
        for i in range(cfg.samples):
            rec = _sample_record(
                entry, i, cfg.seed, digits, tail, cfg.tau_im_range
            )
            rec.pop("_abs"), rec.pop("_rel")
            records.append(rec)

    with mp.workdps(digits):
        tol = mp.mpf(cfg.tolerance)
        max_abs = mp.mpf(0)
        max_rel = mp.mpf(0)
        failures = []
        for rec in records:
            abs_err = mp.mpf(rec["abs_err"])
            rel_err = mp.mpf(rec["rel_err"])
            max_abs = max(max_abs, abs_err)
            max_rel = max(max_rel, rel_err)
            if rel_err >= tol:
                failures.append(
                    {
                        "kind": "sample",
                        "point": rec["point"],
                        "lhs": rec["lhs"],
                        "rhs": rec["rhs"],
                        "rel_err": rec["rel_err"],
                    }
                )
        failures.extend(_exact_failures(entry))
        orders = tuple(
            sorted({rec["truncation_order"] for rec in records if rec["truncation_order"]})
        )
        max_abs_str = _num_str(max_abs, digits)
        max_rel_str = _num_str(max_rel, digits)
        passed = bool(max_rel < tol) and not failures

    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return VerificationReport(
        identity_id=entry.identity_id,
        samples=cfg.samples,
        seed=cfg.seed,
        digits=digits,
        tolerance=cfg.tolerance,
        max_abs_err=max_abs_str,
        max_rel_err=max_rel_str,
        truncation_orders=orders,
        failures=tuple(failures),
        elapsed_ms=elapsed_ms,
        passed=passed,
    )


def _mckay_descriptor(
    lhs_model: ResolutionModel | OrbifoldModel,
    rhs_model: ResolutionModel | OrbifoldModel,
) -> IdentityDescriptor:
    """Ad-hoc descriptor comparing two user-supplied models pointwise."""
    if lhs_model.rank != rhs_model.rank:
        raise ValueError(
            f"rank mismatch: lhs rank {lhs_model.rank}, rhs rank {rhs_model.rank}"
        )
    if lhs_model.dim != rhs_model.dim:
        raise ValueError(
            f"dimension mismatch: lhs dim {lhs_model.dim}, rhs dim {rhs_model.dim}"
        )
    rank = lhs_model.rank

    def _side(model):
        def ev(ctx, v):
            pt = TorusPoint(tuple(v[f"t{i}"] for i in range(1, rank + 1)), v["z"])
            if isinstance(model, ResolutionModel):
                return localized_class(ctx, model, pt)
            return orbifold_class(ctx, model, pt)

        return ev

    names = [Variable("tau", "modular")]
    names += [Variable(f"t{i}", "torus") for i in range(1, rank + 1)]
    names.append(Variable("z", "dynamical"))
    return IdentityDescriptor(
        identity_id="custom.mckay",
        description="user-supplied model pair, localized/orbifold values compared",
        variables=tuple(names),
        lhs=_side(lhs_model),
        rhs=_side(rhs_model),
        delta_degree=lhs_model.dim,
    )


def verify_custom(
    lhs_model: ResolutionModel | OrbifoldModel,
    rhs_model: ResolutionModel | OrbifoldModel,
    cfg: Optional[SampleConfig] = None,
) -> VerificationReport:
    """Compare two models (resolution or orbifold) at random sample points.

    Serial only: the ad-hoc descriptor closes over in-memory models, which a
    worker process could not re-resolve.
    """
    return verify(_mckay_descriptor(lhs_model, rhs_model), cfg, jobs=1)
