"""Command-line front end.

Subcommands
-----------
``elliptica catalog list``
    Print every built-in identity id with a one-line description.
``elliptica verify <id>... [--samples N] [--tol E] [--digits D] [--seed S]
[--jobs J] [--json PATH]``
    Randomized verification; one PASS/FAIL line per id; exit 0 iff all pass.
``elliptica eval theta|delta|phi|psi --tau RE+IMi --args ...``
    Evaluate one kernel function at explicit additive arguments.
``elliptica class resolution|orbifold --model FILE --tau ... --t ... --z ...``
    Evaluate a model file (JSON) at a torus point.
``elliptica verify-custom --lhs-model FILE --rhs-model FILE [...]``
    Randomized equality check for a user-supplied pair of model files.

All numeric inputs are decimal strings, complex numbers as ``a+bi`` (examples:
``0.25``, ``1.5-0.3i``, ``2e-3i``); they are parsed directly at the working
precision, never through binary floats.  ``ELLIPTICA_DIGITS`` overrides the
default working precision when ``--digits`` is absent.

Exit codes: 0 success / all verifications pass; 1 verification failure;
2 bad input (unknown id, malformed number or model file, pole-struck point,
sampling that cannot avoid poles).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

import mpmath
from mpmath import mp

from .numeric import DEFAULT_DIGITS, PrecisionConfig
from .theta import PoleProximityError, delta, make_context, phi, psi, theta
from .models import ModelFormatError, OrbifoldModel, ResolutionModel, load_model
from .evaluator import TorusPoint, localized_class, orbifold_class
from .catalog import catalog, get
from .verify import (
    DEFAULT_SEED,
    PersistentPoleError,
    SampleConfig,
    verify,
    verify_custom,
)

_ENV_DIGITS = "ELLIPTICA_DIGITS"


def parse_complex(text: str) -> mpmath.mpc:
    """Parse ``a+bi`` (or ``a``, or ``bi``) at the current working precision."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty number")
    try:
        if s[-1] in "iI":
            body = s[:-1]
            # split off the imaginary term: the last +/- not part of an exponent
            split = None
            for k in range(len(body) - 1, 0, -1):
                if body[k] in "+-" and body[k - 1] not in "eE":
                    split = k
                    break
            if split is None:
                re_part, im_part = "0", body
            else:
                re_part, im_part = body[:split], body[split:]
            if im_part in ("", "+"):
                im_part = "1"
            elif im_part == "-":
                im_part = "-1"
            return mp.mpc(mp.mpf(re_part), mp.mpf(im_part))
        return mp.mpc(mp.mpf(s), 0)
    except ValueError as exc:
        raise ValueError(f"cannot parse complex number {text!r}: {exc}") from None


def format_complex(value, digits: int) -> str:
    v = mpmath.mpc(value)
    re = mpmath.nstr(v.real, digits)
    im = mpmath.nstr(abs(v.imag), digits)
    sign = "+" if v.imag >= 0 else "-"
    return f"{re} {sign} {im}i"


def _resolve_digits(arg: Optional[int]) -> int:
    if arg is not None:
        return arg
    env = os.environ.get(_ENV_DIGITS)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{_ENV_DIGITS} must be an integer, got {env!r}")
    return DEFAULT_DIGITS


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elliptica",
        description="evaluate equivariant elliptic classes and verify their identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cat = sub.add_parser("catalog", help="inspect the identity catalog")
    cat_sub = p_cat.add_subparsers(dest="catalog_command", required=True)
    cat_sub.add_parser("list", help="list identity ids with descriptions")

    p_verify = sub.add_parser("verify", help="verify catalog identities")
    p_verify.add_argument("ids", nargs="+", metavar="id")
    p_verify.add_argument("--samples", type=int, default=32)
    p_verify.add_argument("--tol", type=float, default=1e-9)
    p_verify.add_argument("--digits", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--json", dest="json_path", default=None, metavar="PATH")

    p_eval = sub.add_parser("eval", help="evaluate a kernel function")
    p_eval.add_argument("function", choices=["theta", "delta", "phi", "psi"])
    p_eval.add_argument("--tau", required=True)
    p_eval.add_argument(
        "--args",
        nargs="+",
        required=True,
        help="additive arguments: theta V | delta A B | phi LAM T H | psi LAM T1 T2 H; "
        "a token may hold several comma-separated values, and a value with a "
        "leading minus must be attached (--args=-0.2,0.3)",
    )
    p_eval.add_argument("--digits", type=int, default=None)

    p_class = sub.add_parser("class", help="evaluate a model at a torus point")
    p_class.add_argument("kind", choices=["resolution", "orbifold"])
    p_class.add_argument("--model", required=True, metavar="FILE")
    p_class.add_argument("--tau", required=True)
    p_class.add_argument(
        "--t",
        nargs="+",
        required=True,
        metavar="T",
        help="torus arguments, one per model rank; comma-separated values are "
        "split, and a value with a leading minus must be attached (--t=-0.17,0.2)",
    )
    p_class.add_argument("--z", required=True)
    p_class.add_argument("--digits", type=int, default=None)

    p_custom = sub.add_parser(
        "verify-custom", help="compare two model files at random points"
    )
    p_custom.add_argument("--lhs-model", required=True, metavar="FILE")
    p_custom.add_argument("--rhs-model", required=True, metavar="FILE")
    p_custom.add_argument("--samples", type=int, default=32)
    p_custom.add_argument("--tol", type=float, default=1e-9)
    p_custom.add_argument("--digits", type=int, default=None)
    p_custom.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_custom.add_argument("--json", dest="json_path", default=None, metavar="PATH")

    return parser


def _flatten_values(tokens: Sequence[str]) -> list:
    out = []
    for token in tokens:
        out.extend(piece for piece in token.split(",") if piece)
    return out


def _report_line(report) -> str:
    status = "PASS" if report.passed else "FAIL"
    return (
        f"{status} {report.identity_id}  max_rel_err={report.max_rel_err}  "
        f"samples={report.samples}  ({report.elapsed_ms:.0f} ms)"
    )


def _cmd_catalog_list() -> int:
    for entry in catalog():
        print(f"{entry.identity_id:30s} {entry.description}")
    return 0


def _cmd_verify(ns) -> int:
    digits = _resolve_digits(ns.digits)
    cfg = SampleConfig(
        samples=ns.samples,
        seed=ns.seed,
        tolerance=ns.tol,
        precision=PrecisionConfig(working_digits=digits),
    )
    reports = []
    for identity_id in ns.ids:
        report = verify(identity_id, cfg, jobs=ns.jobs)
        reports.append(report)
        print(_report_line(report))
    if ns.json_path:
        with open(ns.json_path, "w") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=2)
            fh.write("\n")
    return 0 if all(r.passed for r in reports) else 1


_EVAL_ARITY = {"theta": 1, "delta": 2, "phi": 3, "psi": 4}


def _cmd_eval(ns) -> int:
    digits = _resolve_digits(ns.digits)
    arity = _EVAL_ARITY[ns.function]
    raw = _flatten_values(ns.args)
    if len(raw) != arity:
        raise ValueError(f"{ns.function} takes {arity} argument(s), got {len(raw)}")
    with mp.workdps(digits):
        tau = parse_complex(ns.tau)
        args = [parse_complex(a) for a in raw]
        ctx = make_context(tau, digits=digits)
        fn = {"theta": theta, "delta": delta, "phi": phi, "psi": psi}[ns.function]
        value = fn(ctx, *args)
        print(format_complex(value, digits))
    return 0


def _cmd_class(ns) -> int:
    digits = _resolve_digits(ns.digits)
    model = load_model(ns.model)
    wanted = ResolutionModel if ns.kind == "resolution" else OrbifoldModel
    if not isinstance(model, wanted):
        raise ValueError(
            f"model file {ns.model!r} holds a "
            f"{'resolution' if isinstance(model, ResolutionModel) else 'orbifold'} "
            f"model, but the requested class kind is {ns.kind!r}"
        )
    with mp.workdps(digits):
        tau = parse_complex(ns.tau)
        ts = tuple(parse_complex(t) for t in _flatten_values(ns.t))
        z = parse_complex(ns.z)
        ctx = make_context(tau, digits=digits)
        point = TorusPoint(ts, z)
        if ns.kind == "resolution":
            value = localized_class(ctx, model, point)
        else:
            value = orbifold_class(ctx, model, point)
        print(format_complex(value, digits))
    return 0


def _cmd_verify_custom(ns) -> int:
    digits = _resolve_digits(ns.digits)
    lhs = load_model(ns.lhs_model)
    rhs = load_model(ns.rhs_model)
    cfg = SampleConfig(
        samples=ns.samples,
        seed=ns.seed,
        tolerance=ns.tol,
        precision=PrecisionConfig(working_digits=digits),
    )
    report = verify_custom(lhs, rhs, cfg)
    print(_report_line(report))
    if ns.json_path:
        with open(ns.json_path, "w") as fh:
            json.dump([report.to_dict()], fh, indent=2)
            fh.write("\n")
    return 0 if report.passed else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.command == "catalog":
            return _cmd_catalog_list()
        if ns.command == "verify":
            return _cmd_verify(ns)
        if ns.command == "eval":
            return _cmd_eval(ns)
        if ns.command == "class":
            return _cmd_class(ns)
        if ns.command == "verify-custom":
            return _cmd_verify_custom(ns)
    except (
        ValueError,
        KeyError,
        ModelFormatError,
        PoleProximityError,
        PersistentPoleError,
        OSError,
    ) as exc:
        message = exc.args[0] if exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
