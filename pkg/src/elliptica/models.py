"""Input data for equivariant elliptic classes: fixed-point and orbifold models.

Two model kinds mirror the two sides of a McKay-type correspondence:

* :class:`ResolutionModel` — torus-fixed-point data of a resolution: per
  fixed point, the ``dim`` tangent weights (integer vectors of length
  ``rank``) and the klt exponents a_k < 1 of the corresponding divisor
  directions.  The localized class is a sum over these points.

* :class:`OrbifoldModel` — data of commuting pairs (g, h) in a finite group
  acting linearly: per pair (or per orbit of pairs, via ``multiplicity``),
  the eigenvalue exponents lambda, nu in [0,1) of g and h on each coordinate
  line, the torus weights of those lines, klt exponents, and an optional
  extra h-power ``h_shift``.

Group data is exact: all eigenvalue exponents and klt exponents are
`fractions.Fraction` (floats are rejected loudly — 0.3333 is not 1/3).
Models serialize to a small JSON format with rationals as strings ("2/3"),
and the loader reports errors with full field paths.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, Sequence, Tuple, Union

__all__ = [
    "ModelFormatError",
    "FixedPointDatum",
    "ResolutionModel",
    "OrbifoldPairDatum",
    "OrbifoldModel",
    "D4Family",
    "load_model",
    "dump_model",
    "save_model",
    "preset_an_resolution",
    "preset_an_orbifold",
    "preset_blowup",
    "preset_diagonal_resolution",
    "preset_diagonal_orbifold",
    "preset_d4",
    "preset_tetrahedral",
]

Weight = Tuple[int, ...]


class ModelFormatError(ValueError):
    """A model file/dict failed validation; message carries the field path."""


def _as_fraction(value: Any, where: str) -> Fraction:
    """Exact rational coercion.  Accepts int, Fraction, and 'p/q' strings;
    floats are rejected (they silently misrepresent thirds and the like)."""
    if isinstance(value, bool):
        raise ModelFormatError(f"{where}: expected a rational, got a bool")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ModelFormatError(f"{where}: not a rational string: {value!r}") from exc
    if isinstance(value, float):
        raise ModelFormatError(
            f"{where}: floats are not accepted for exact group data, got {value!r}; "
            f"write it as a string like '1/3'"
        )
    raise ModelFormatError(f"{where}: cannot interpret {type(value).__name__} as a rational")


def _check_weight_rows(
    weights: Sequence[Sequence[int]], dim: int, rank: int, where: str
) -> Tuple[Weight, ...]:
    if len(weights) != dim:
        raise ModelFormatError(
            f"{where}: expected {dim} weight vectors (one per tangent direction), "
            f"got {len(weights)}"
        )
    rows = []
    for i, row in enumerate(weights):
        if len(row) != rank:
            raise ModelFormatError(
                f"{where}[{i}]: weight vector must have rank {rank} entries, got {len(row)}"
            )
        out = []
        for j, w in enumerate(row):
            if isinstance(w, bool) or not isinstance(w, int):
                raise ModelFormatError(f"{where}[{i}][{j}]: weights must be integers, got {w!r}")
            out.append(w)
        if all(w == 0 for w in out):
            raise ModelFormatError(
                f"{where}[{i}]: zero weight vector — the fixed locus would not be "
                f"isolated and the class has a non-removable pole"
            )
        rows.append(tuple(out))
    return tuple(rows)


def _check_exponents(exponents: Sequence[Any], dim: int, where: str) -> Tuple[Fraction, ...]:
    if len(exponents) != dim:
        raise ModelFormatError(f"{where}: expected {dim} exponents, got {len(exponents)}")
    out = []
    for i, a in enumerate(exponents):
        frac = a if isinstance(a, Fraction) else _as_fraction(a, f"{where}[{i}]")
        if frac >= 1:
            raise ModelFormatError(
                f"{where}[{i}]: klt exponent must satisfy a < 1, got {frac}"
            )
        out.append(frac)
    return tuple(out)


@dataclass(frozen=True)
class FixedPointDatum:
    """Tangent data of one torus-fixed point: weights and klt exponents."""

    weights: Tuple[Weight, ...]
    exponents: Tuple[Fraction, ...]


@dataclass(frozen=True)
class ResolutionModel:
    rank: int
    dim: int
    fixed_points: Tuple[FixedPointDatum, ...]
    prefactor: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ModelFormatError(f"rank: must be >= 1, got {self.rank}")
        if self.dim < 1:
            raise ModelFormatError(f"dim: must be >= 1, got {self.dim}")
        if not self.fixed_points:
            raise ModelFormatError("fixed_points: at least one fixed point is required")
        if self.prefactor == 0:
            raise ModelFormatError("prefactor: must be nonzero")
        pts = []
        for p, fp in enumerate(self.fixed_points):
            where = f"fixed_points[{p}]"
            pts.append(
                FixedPointDatum(
                    weights=_check_weight_rows(fp.weights, self.dim, self.rank, f"{where}.weights"),
                    exponents=_check_exponents(fp.exponents, self.dim, f"{where}.exponents"),
                )
            )
        object.__setattr__(self, "fixed_points", tuple(pts))
        object.__setattr__(self, "prefactor", Fraction(self.prefactor))


def _check_unit_interval(vals: Sequence[Any], dim: int, group_order: int, where: str) -> Tuple[Fraction, ...]:
    if len(vals) != dim:
        raise ModelFormatError(f"{where}: expected {dim} entries, got {len(vals)}")
    out = []
    for i, v in enumerate(vals):
        frac = v if isinstance(v, Fraction) else _as_fraction(v, f"{where}[{i}]")
        if not (0 <= frac < 1):
            raise ModelFormatError(f"{where}[{i}]: must lie in [0, 1), got {frac}")
        if group_order % frac.denominator != 0:
            raise ModelFormatError(
                f"{where}[{i}]: eigenvalue exponent {frac} has denominator "
                f"{frac.denominator}, which does not divide the group order {group_order}"
            )
        out.append(frac)
    return tuple(out)


@dataclass(frozen=True)
class OrbifoldPairDatum:
    """One commuting pair (or conjugation-orbit of pairs, see multiplicity).

    lambda_/nu are the eigenvalue exponents of g resp. h on each coordinate
    line (g acts by e(lambda_k) on line k); weights are the torus weights of
    those lines; h_shift adds a global factor H^{h_shift} to the pair's term.
    """

    lambda_: Tuple[Fraction, ...]
    nu: Tuple[Fraction, ...]
    weights: Tuple[Weight, ...]
    exponents: Tuple[Fraction, ...]
    multiplicity: int = 1
    h_shift: Fraction = Fraction(0)


@dataclass(frozen=True)
class OrbifoldModel:
    rank: int
    dim: int
    group_order: int
    pairs: Tuple[OrbifoldPairDatum, ...]

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ModelFormatError(f"rank: must be >= 1, got {self.rank}")
        if self.dim < 1:
            raise ModelFormatError(f"dim: must be >= 1, got {self.dim}")
        if self.group_order < 1:
            raise ModelFormatError(f"group_order: must be >= 1, got {self.group_order}")
        if not self.pairs:
            raise ModelFormatError("pairs: at least one commuting pair is required")
        rows = []
        for p, pair in enumerate(self.pairs):
            where = f"pairs[{p}]"
            if not isinstance(pair.multiplicity, int) or pair.multiplicity < 1:
                raise ModelFormatError(
                    f"{where}.multiplicity: must be a positive integer, got {pair.multiplicity!r}"
                )
            rows.append(
                OrbifoldPairDatum(
                    lambda_=_check_unit_interval(pair.lambda_, self.dim, self.group_order, f"{where}.lambda"),
                    nu=_check_unit_interval(pair.nu, self.dim, self.group_order, f"{where}.nu"),
                    weights=_check_weight_rows(pair.weights, self.dim, self.rank, f"{where}.weights"),
                    exponents=_check_exponents(pair.exponents, self.dim, f"{where}.exponents"),
                    multiplicity=pair.multiplicity,
                    h_shift=pair.h_shift if isinstance(pair.h_shift, Fraction) else _as_fraction(pair.h_shift, f"{where}.h_shift"),
                )
            )
        object.__setattr__(self, "pairs", tuple(rows))

    @property
    def total_multiplicity(self) -> int:
        return sum(p.multiplicity for p in self.pairs)


# ---------------------------------------------------------------------------
# JSON serialization


def dump_model(model: Union[ResolutionModel, OrbifoldModel]) -> dict:
    if isinstance(model, ResolutionModel):
        return {
            "kind": "resolution",
            "rank": model.rank,
            "dim": model.dim,
            "prefactor_rational": str(model.prefactor),
            "fixed_points": [
                {
                    "weights": [list(w) for w in fp.weights],
                    "exponents": [str(a) for a in fp.exponents],
                }
                for fp in model.fixed_points
            ],
        }
    if isinstance(model, OrbifoldModel):
        return {
            "kind": "orbifold",
            "rank": model.rank,
            "dim": model.dim,
            "group_order": model.group_order,
            "pairs": [
                {
                    "lambda": [str(x) for x in p.lambda_],
                    "nu": [str(x) for x in p.nu],
                    "weights": [list(w) for w in p.weights],
                    "exponents": [str(a) for a in p.exponents],
                    "multiplicity": p.multiplicity,
                    "h_shift_rational": str(p.h_shift),
                }
                for p in model.pairs
            ],
        }
    raise TypeError(f"not a model: {type(model).__name__}")


def save_model(model: Union[ResolutionModel, OrbifoldModel], path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(dump_model(model), indent=2) + "\n")


def _require(mapping: Mapping, key: str, where: str):
    if key not in mapping:
        raise ModelFormatError(f"{where}: missing required field {key!r}")
    return mapping[key]


def _as_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ModelFormatError(f"{where}: expected an integer, got {value!r}")
    return value


def load_model(source: Union[str, Path, Mapping]) -> Union[ResolutionModel, OrbifoldModel]:
    """Load a model from a JSON file path or an already-parsed dict.

    Raises :class:`ModelFormatError` with a field path on any malformed input.
    """
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ModelFormatError(f"{source}: not valid JSON: {exc}") from exc
    else:
        data = source
    if not isinstance(data, Mapping):
        raise ModelFormatError("model root: expected a JSON object")

    kind = _require(data, "kind", "model root")
    if kind == "resolution":
        rank = _as_int(_require(data, "rank", "model root"), "rank")
        dim = _as_int(_require(data, "dim", "model root"), "dim")
        prefactor = _as_fraction(data.get("prefactor_rational", 1), "prefactor_rational")
        raw_points = _require(data, "fixed_points", "model root")
        if not isinstance(raw_points, Sequence) or isinstance(raw_points, (str, bytes)):
            raise ModelFormatError("fixed_points: expected a list")
        points = []
        for p, fp in enumerate(raw_points):
            where = f"fixed_points[{p}]"
            if not isinstance(fp, Mapping):
                raise ModelFormatError(f"{where}: expected an object")
            weights = _require(fp, "weights", where)
            exponents = _require(fp, "exponents", where)
            points.append(FixedPointDatum(weights=tuple(tuple(w) for w in weights), exponents=tuple(exponents)))
        return ResolutionModel(rank=rank, dim=dim, fixed_points=tuple(points), prefactor=prefactor)

    if kind == "orbifold":
        dim = _as_int(_require(data, "dim", "model root"), "dim")
        group_order = _as_int(_require(data, "group_order", "model root"), "group_order")
        raw_pairs = _require(data, "pairs", "model root")
        if not isinstance(raw_pairs, Sequence) or isinstance(raw_pairs, (str, bytes)):
            raise ModelFormatError("pairs: expected a list")
        if not raw_pairs:
            raise ModelFormatError("pairs: at least one commuting pair is required")
        pairs = []
        rank = data.get("rank")
        for p, pr in enumerate(raw_pairs):
            where = f"pairs[{p}]"
            if not isinstance(pr, Mapping):
                raise ModelFormatError(f"{where}: expected an object")
            weights = _require(pr, "weights", where)
            if rank is None:
                if not weights or not weights[0]:
                    raise ModelFormatError(f"{where}.weights: cannot infer rank from empty weights")
                rank = len(weights[0])
            pairs.append(
                OrbifoldPairDatum(
                    lambda_=tuple(_require(pr, "lambda", where)),
                    nu=tuple(_require(pr, "nu", where)),
                    weights=tuple(tuple(w) for w in weights),
                    exponents=tuple(_require(pr, "exponents", where)),
                    multiplicity=pr.get("multiplicity", 1),
                    h_shift=pr.get("h_shift_rational", 0),
                )
            )
        return OrbifoldModel(rank=_as_int(rank, "rank"), dim=dim, group_order=group_order, pairs=tuple(pairs))

    raise ModelFormatError(f"kind: expected 'resolution' or 'orbifold', got {kind!r}")


# ---------------------------------------------------------------------------
# Presets: the worked families


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def preset_an_resolution(n: int, a1=Fraction(0), a2=Fraction(0)) -> ResolutionModel:
    """Minimal resolution of the cyclic A_{n-1} surface singularity C^2/Z_n
    (action diag(e(1/n), e(-1/n))), with klt boundary exponents a1, a2 on the
    two coordinate axes downstairs.

    Fixed point k carries tangent weights (n-k+1, -(k-1)) and (-(n-k), k) in
    the (t1, t2) torus, and the pulled-back exponents interpolate a1, a2
    linearly across the chain of exceptional curves.
    """
    if n < 1:
        raise ModelFormatError(f"n: must be >= 1, got {n}")
    a1, a2 = _frac(a1), _frac(a2)
    points = []
    for k in range(1, n + 1):
        w1 = (n - k + 1, -(k - 1))
        w2 = (-(n - k), k)
        e1 = Fraction(a1 * k + a2 * (n - k), n)
        e2 = Fraction(a1 * (k - 1) + a2 * (n - k + 1), n)
        points.append(FixedPointDatum(weights=(w1, w2), exponents=(e1, e2)))
    return ResolutionModel(rank=2, dim=2, fixed_points=tuple(points))


def preset_an_orbifold(n: int, a1=Fraction(0), a2=Fraction(0)) -> OrbifoldModel:
    """Orbifold side of the A_{n-1} correspondence: all n^2 commuting pairs
    (g^k, g^l) of Z_n with eigenvalue exponents (k/n, (n-k)/n mod 1) etc."""
    if n < 1:
        raise ModelFormatError(f"n: must be >= 1, got {n}")
    a1, a2 = _frac(a1), _frac(a2)
    pairs = []
    for k in range(n):
        for l in range(n):
            lam = (Fraction(k, n), Fraction((n - k) % n, n))
            nu = (Fraction(l, n), Fraction((n - l) % n, n))
            pairs.append(
                OrbifoldPairDatum(
                    lambda_=lam, nu=nu, weights=((1, 0), (0, 1)), exponents=(a1, a2)
                )
            )
    return OrbifoldModel(rank=2, dim=2, group_order=n, pairs=tuple(pairs))


def preset_blowup(n: int, exponents=None) -> ResolutionModel:
    """Blowup of C^n at the origin, full torus (C*)^n, klt exponents a_j on
    the coordinate hyperplanes.  Chart i has the exceptional direction first
    (weight e_i, exponent sum(a) - (n-1)) and then the strict-transform
    directions e_j - e_i with exponents a_j."""
    if n < 1:
        raise ModelFormatError(f"n: must be >= 1, got {n}")
    a = tuple(_frac(x) for x in (exponents if exponents is not None else [0] * n))
    if len(a) != n:
        raise ModelFormatError(f"exponents: expected {n} entries, got {len(a)}")
    a_exc = sum(a) - (n - 1)
    points = []
    for i in range(n):
        weights = [tuple(1 if j == i else 0 for j in range(n))]
        exps = [Fraction(a_exc)]
        for j in range(n):
            if j == i:
                continue
            weights.append(tuple((1 if c == j else 0) - (1 if c == i else 0) for c in range(n)))
            exps.append(a[j])
        points.append(FixedPointDatum(weights=tuple(weights), exponents=tuple(exps)))
    return ResolutionModel(rank=n, dim=n, fixed_points=tuple(points))


def preset_diagonal_resolution(m: int, n: int) -> ResolutionModel:
    """Blowup resolution data for the diagonal quotient C^m / Z_n (scalar
    action by e(1/n)): m charts; chart i has the exceptional direction n*e_i
    with exponent 1 - m/n and tangent directions e_j - e_i with exponent 0."""
    if m < 1 or n < 1:
        raise ModelFormatError(f"(m, n): must be >= 1, got ({m}, {n})")
    points = []
    for i in range(m):
        weights = [tuple(n if j == i else 0 for j in range(m))]
        exps = [Fraction(1) - Fraction(m, n)]
        for j in range(m):
            if j == i:
                continue
            weights.append(tuple((1 if c == j else 0) - (1 if c == i else 0) for c in range(m)))
            exps.append(Fraction(0))
        points.append(FixedPointDatum(weights=tuple(weights), exponents=tuple(exps)))
    return ResolutionModel(rank=m, dim=m, fixed_points=tuple(points))


def preset_diagonal_orbifold(m: int, n: int) -> OrbifoldModel:
    """Orbifold side of the diagonal quotient C^m / Z_n: pairs (g^k, g^l)
    act with all eigenvalue exponents k/n resp. l/n."""
    if m < 1 or n < 1:
        raise ModelFormatError(f"(m, n): must be >= 1, got ({m}, {n})")
    pairs = []
    for k in range(n):
        for l in range(n):
            pairs.append(
                OrbifoldPairDatum(
                    lambda_=tuple(Fraction(k, n) for _ in range(m)),
                    nu=tuple(Fraction(l, n) for _ in range(m)),
                    weights=tuple(
                        tuple(1 if c == i else 0 for c in range(m)) for i in range(m)
                    ),
                    exponents=tuple(Fraction(0) for _ in range(m)),
                )
            )
    return OrbifoldModel(rank=m, dim=m, group_order=n, pairs=tuple(pairs))


@dataclass(frozen=True)
class D4Family:
    """The three pieces of the D4 (= C^2/Q8, quaternion group) correspondence.

    The resolution side is not a bare fixed-point sum: it is `core` (the
    single (C*)-fixed point with weights (-2), (4), counted 3 times) plus
    `exceptional_term`, an integral over a pointwise-fixed exceptional P^1
    that evaluates exactly like an order-2 orbifold model.  The orbifold side
    is the full Q8 commuting-pair sum.
    """

    core: ResolutionModel
    exceptional_term: OrbifoldModel
    orbifold: OrbifoldModel


def preset_d4() -> D4Family:
    F = Fraction
    core = ResolutionModel(
        rank=1,
        dim=2,
        fixed_points=(FixedPointDatum(weights=((-2,), (4,)), exponents=(F(0), F(0))),),
        prefactor=F(3),
    )
    exceptional = OrbifoldModel(
        rank=1,
        dim=2,
        group_order=2,
        pairs=tuple(
            OrbifoldPairDatum(
                lambda_=(F(k, 2), F(k, 2)),
                nu=(F(l, 2), F(l, 2)),
                weights=((1,), (1,)),
                exponents=(F(0), F(0)),
            )
            for k in range(2)
            for l in range(2)
        ),
    )
    # The 40 commuting pairs of Q8, grouped by simultaneous eigenvalue data;
    # multiplicities count conjugation orbits (checked against a brute force
    # over the 2x2 quaternion matrices in the tests).
    rows = [
        ((F(0), F(0)), (F(0), F(0)), 1),
        ((F(1, 2), F(1, 2)), (F(0), F(0)), 1),
        ((F(1, 4), F(3, 4)), (F(0), F(0)), 6),
        ((F(0), F(0)), (F(1, 2), F(1, 2)), 1),
        ((F(1, 2), F(1, 2)), (F(1, 2), F(1, 2)), 1),
        ((F(1, 4), F(3, 4)), (F(1, 2), F(1, 2)), 6),
        ((F(0), F(0)), (F(1, 4), F(3, 4)), 6),
        ((F(1, 2), F(1, 2)), (F(1, 4), F(3, 4)), 6),
        ((F(1, 4), F(3, 4)), (F(1, 4), F(3, 4)), 6),
        ((F(3, 4), F(1, 4)), (F(1, 4), F(3, 4)), 6),
    ]
    orbifold = OrbifoldModel(
        rank=1,
        dim=2,
        group_order=8,
        pairs=tuple(
            OrbifoldPairDatum(
                lambda_=lam, nu=nu, weights=((1,), (1,)), exponents=(F(0), F(0)), multiplicity=mult
            )
            for (lam, nu, mult) in rows
        ),
    )
    return D4Family(core=core, exceptional_term=exceptional, orbifold=orbifold)


def _mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def preset_tetrahedral() -> Tuple[ResolutionModel, OrbifoldModel]:
    """The binary tetrahedral group (order 24) acting on V = W + W*, torus
    (C*)^2 scaling W and W* separately.

    Resolution side: the 7 torus-fixed points of the symplectic resolution,
    weights in the (t1, t2) torus, all exponents 0.  Orbifold side: the 168
    commuting pairs grouped into 42 conjugation-orbit rows; eigenvalue data
    on W is extended to V by inverse eigenvalues on W*.
    """
    F = Fraction
    fixed_weights = [
        # two points of the first boundary component
        [(1, -5), (1, -3), (0, 4), (0, 6)],
        [(2, -4), (1, -1), (0, 2), (-1, 5)],
        # the same component with the two torus factors exchanged
        [(-5, 1), (-3, 1), (4, 0), (6, 0)],
        [(-4, 2), (-1, 1), (2, 0), (5, -1)],
        # the symmetric component
        [(1, -1), (3, -1), (0, 2), (-2, 2)],
        [(2, 0), (4, -2), (-1, 1), (-3, 3)],
        [(3, -3), (2, -2), (-1, 3), (-2, 4)],
    ]
    resolution = ResolutionModel(
        rank=2,
        dim=4,
        fixed_points=tuple(
            FixedPointDatum(weights=tuple(ws), exponents=(F(0),) * 4)
            for ws in fixed_weights
        ),
    )

    gen = (F(1, 6), F(1, 2))  # eigenvalue exponents of the order-6 generator on W

    def times(j: int, v) -> Tuple[Fraction, Fraction]:
        return (_mod1(j * v[0]), _mod1(j * v[1]))

    # conjugacy classes of h: (class size, nu on W, [(lambda on W, count)])
    id_lams = [
        ((F(0), F(0)), 1),
        ((F(1, 2), F(1, 2)), 1),
        (times(1, gen), 4),
        (times(2, gen), 4),
        (times(4, gen), 4),
        (times(5, gen), 4),
        ((F(1, 4), F(3, 4)), 6),
    ]
    classes = [
        (1, (F(0), F(0)), id_lams),
        (1, (F(1, 2), F(1, 2)), id_lams),
    ]
    for i in (1, 2, 4, 5):
        classes.append((4, times(i, gen), [(times(j, gen), 1) for j in range(6)]))
    classes.append(
        (
            6,
            (F(1, 4), F(3, 4)),
            [
                ((F(0), F(0)), 1),
                ((F(1, 4), F(3, 4)), 1),
                ((F(1, 2), F(1, 2)), 1),
                ((F(3, 4), F(1, 4)), 1),
            ],
        )
    )

    def inv(x: Fraction) -> Fraction:
        return _mod1(1 - x)

    pairs = []
    for (csize, nu2, lam_list) in classes:
        nu4 = (nu2[0], nu2[1], inv(nu2[0]), inv(nu2[1]))
        for (lam2, count) in lam_list:
            lam4 = (lam2[0], lam2[1], inv(lam2[0]), inv(lam2[1]))
            pairs.append(
                OrbifoldPairDatum(
                    lambda_=lam4,
                    nu=nu4,
                    weights=((1, 0), (1, 0), (0, 1), (0, 1)),
                    exponents=(F(0),) * 4,
                    multiplicity=csize * count,
                )
            )
    orbifold = OrbifoldModel(rank=2, dim=4, group_order=24, pairs=tuple(pairs))
    return resolution, orbifold
