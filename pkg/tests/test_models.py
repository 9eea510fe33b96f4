"""Model validation, JSON round-trips, and the preset families.

The heaviest check here rebuilds the quaternion-group commuting-pair table
from scratch (2x2 matrices, simultaneous eigenbases) and compares it with the
hand-entered rows of the order-8 preset.
"""

import cmath
import json
from collections import Counter
from fractions import Fraction
from itertools import product

import pytest

from elliptica import (
    FixedPointDatum,
    ModelFormatError,
    OrbifoldModel,
    OrbifoldPairDatum,
    ResolutionModel,
    dump_model,
    load_model,
    preset_an_orbifold,
    preset_an_resolution,
    preset_blowup,
    preset_d4,
    preset_diagonal_orbifold,
    preset_diagonal_resolution,
    preset_tetrahedral,
    save_model,
)

F = Fraction


# --- validation -----------------------------------------------------------


def test_float_exponent_rejected():
    with pytest.raises(ModelFormatError) as info:
        ResolutionModel(
            rank=1,
            dim=1,
            fixed_points=(FixedPointDatum(weights=((1,),), exponents=(0.3333,)),),
        )
    msg = str(info.value)
    assert "write it as a string like '1/3'" in msg
    assert "fixed_points[0].exponents[0]" in msg


def test_bool_is_not_a_rational():
    with pytest.raises(ModelFormatError):
        ResolutionModel(
            rank=1,
            dim=1,
            fixed_points=(FixedPointDatum(weights=((1,),), exponents=(True,)),),
        )


def test_zero_weight_vector_rejected():
    with pytest.raises(ModelFormatError) as info:
        ResolutionModel(
            rank=2,
            dim=1,
            fixed_points=(FixedPointDatum(weights=((0, 0),), exponents=(F(0),)),),
        )
    assert "zero weight vector" in str(info.value)


def test_klt_exponent_bound():
    with pytest.raises(ModelFormatError) as info:
        ResolutionModel(
            rank=1,
            dim=1,
            fixed_points=(FixedPointDatum(weights=((1,),), exponents=(F(3, 2),)),),
        )
    assert "a < 1" in str(info.value)


def test_weight_row_shape_errors():
    with pytest.raises(ModelFormatError) as info:
        ResolutionModel(
            rank=2,
            dim=2,
            fixed_points=(FixedPointDatum(weights=((1, 0),), exponents=(F(0), F(0))),),
        )
    assert "expected 2 weight vectors" in str(info.value)
    with pytest.raises(ModelFormatError) as info:
        ResolutionModel(
            rank=2,
            dim=1,
            fixed_points=(FixedPointDatum(weights=((1,),), exponents=(F(0),)),),
        )
    assert "rank 2 entries" in str(info.value)


def test_eigenvalue_exponent_constraints():
    def make(lam):
        return OrbifoldModel(
            rank=1,
            dim=1,
            group_order=3,
            pairs=(
                OrbifoldPairDatum(
                    lambda_=(lam,), nu=(F(0),), weights=((1,),), exponents=(F(0),)
                ),
            ),
        )

    with pytest.raises(ModelFormatError) as info:
        make(F(1, 2))  # denominator 2 does not divide group order 3
    assert "does not divide the group order" in str(info.value)
    with pytest.raises(ModelFormatError) as info:
        make(F(4, 3))  # outside [0, 1)
    assert "[0, 1)" in str(info.value)


def test_multiplicity_must_be_positive_int():
    with pytest.raises(ModelFormatError) as info:
        OrbifoldModel(
            rank=1,
            dim=1,
            group_order=2,
            pairs=(
                OrbifoldPairDatum(
                    lambda_=(F(0),),
                    nu=(F(0),),
                    weights=((1,),),
                    exponents=(F(0),),
                    multiplicity=0,
                ),
            ),
        )
    assert "pairs[0].multiplicity" in str(info.value)


def test_prefactor_nonzero():
    with pytest.raises(ModelFormatError):
        ResolutionModel(
            rank=1,
            dim=1,
            fixed_points=(FixedPointDatum(weights=((1,),), exponents=(F(0),)),),
            prefactor=F(0),
        )


def test_load_model_field_paths(tmp_path):
    with pytest.raises(ModelFormatError) as info:
        load_model({"rank": 1})
    assert "missing required field 'kind'" in str(info.value)

    with pytest.raises(ModelFormatError) as info:
        load_model({"kind": "sphere"})
    assert "expected 'resolution' or 'orbifold'" in str(info.value)

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ModelFormatError) as info:
        load_model(bad)
    assert "not valid JSON" in str(info.value)

    with pytest.raises(ModelFormatError) as info:
        load_model(
            {
                "kind": "resolution",
                "rank": 1,
                "dim": 1,
                "fixed_points": [{"weights": [[1]], "exponents": ["1/0"]}],
            }
        )
    assert "not a rational string" in str(info.value)


# --- round-trips ------------------------------------------------------------

ROUNDTRIP_MODELS = [
    preset_an_resolution(1),
    preset_an_resolution(3),
    preset_an_resolution(4, F(1, 3), F(-2, 5)),
    preset_an_orbifold(2),
    preset_an_orbifold(3, F(1, 7), F(0)),
    preset_blowup(3),
    preset_blowup(2, (F(1, 2), F(-1, 3))),
    preset_diagonal_resolution(2, 3),
    preset_diagonal_orbifold(3, 2),
    preset_d4().core,
    preset_d4().exceptional_term,
    preset_d4().orbifold,
    preset_tetrahedral()[0],
    preset_tetrahedral()[1],
]


@pytest.mark.parametrize("model", ROUNDTRIP_MODELS, ids=lambda m: type(m).__name__ + str(id(m) % 97))
def test_json_roundtrip(model, tmp_path):
    path = tmp_path / "m.json"
    save_model(model, path)
    loaded = load_model(path)
    assert loaded == model
    # and through a plain dict (already-parsed JSON)
    assert load_model(json.loads(json.dumps(dump_model(model)))) == model


def test_shipped_a2_files_match_presets():
    from importlib import resources

    data = resources.files("elliptica") / "data"
    res = load_model(json.loads((data / "a2_resolution.json").read_text()))
    orb = load_model(json.loads((data / "a2_orbifold.json").read_text()))
    assert res == preset_an_resolution(3)
    assert orb == preset_an_orbifold(3)


# --- preset structure ---------------------------------------------------------


def test_an_resolution_chain_weights():
    m = preset_an_resolution(4)
    assert len(m.fixed_points) == 4
    # adjacent charts share an axis: w2 of point k is -(w1) of point k+1
    for k in range(3):
        w2 = m.fixed_points[k].weights[1]
        w1_next = m.fixed_points[k + 1].weights[0]
        assert w2 == tuple(-x for x in w1_next)


def test_an_orbifold_pair_count():
    m = preset_an_orbifold(5)
    assert len(m.pairs) == 25
    assert m.group_order == 5
    assert m.total_multiplicity == 25


def test_an_exponent_interpolation():
    a1, a2 = F(1, 3), F(-1, 2)
    m = preset_an_resolution(3, a1, a2)
    # chart 1 second direction sits on the strict transform of axis 2
    assert m.fixed_points[0].exponents[1] == a2
    # chart n first direction sits on the strict transform of axis 1
    assert m.fixed_points[2].exponents[0] == a1


def test_blowup_charts():
    a = (F(1, 3), F(1, 5), F(0))
    m = preset_blowup(3, a)
    assert len(m.fixed_points) == 3
    for i, fp in enumerate(m.fixed_points):
        assert fp.weights[0] == tuple(1 if j == i else 0 for j in range(3))
        assert fp.exponents[0] == sum(a) - 2


def test_diagonal_presets_shape():
    r = preset_diagonal_resolution(3, 2)
    assert r.fixed_points[1].weights[0] == (0, 2, 0)
    assert r.fixed_points[0].exponents[0] == 1 - F(3, 2)
    o = preset_diagonal_orbifold(2, 3)
    assert len(o.pairs) == 9
    assert o.pairs[4].lambda_ == (F(1, 3), F(1, 3))


def test_d4_multiplicities():
    fam = preset_d4()
    assert fam.orbifold.total_multiplicity == 40
    assert len(fam.orbifold.pairs) == 10
    assert fam.core.prefactor == 3


def test_tetrahedral_counts():
    res, orb = preset_tetrahedral()
    assert len(res.fixed_points) == 7
    assert len(orb.pairs) == 42
    assert orb.total_multiplicity == 168  # = 24 * 7 commuting pairs
    assert orb.group_order == 24


# --- quaternion group brute force ----------------------------------------------


def _mat_mul(A, B):
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


def _mat_neg(A):
    return tuple(tuple(-x for x in row) for row in A)


def _close(x, y, eps=1e-9):
    return abs(x - y) < eps


def _eigenvectors(A):
    """Eigenvectors of a non-scalar unitary 2x2 (distinct eigenvalues)."""
    tr = A[0][0] + A[1][1]
    det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
    disc = cmath.sqrt(tr * tr - 4 * det)
    vecs = []
    for lam in ((tr + disc) / 2, (tr - disc) / 2):
        # null vector of A - lam, from whichever row is nonzero
        a, b = A[0][0] - lam, A[0][1]
        c, d = A[1][0], A[1][1] - lam
        vecs.append((b, -a) if abs(a) + abs(b) > 1e-9 else (d, -c))
    return vecs


def _apply(A, v):
    return (A[0][0] * v[0] + A[0][1] * v[1], A[1][0] * v[0] + A[1][1] * v[1])


def _exponent_on_vector(A, v):
    """A v = e(x) v for a group element; recover x on the k/8 grid."""
    w = _apply(A, v)
    ref = max(range(2), key=lambda i: abs(v[i]))
    ratio = w[ref] / v[ref]
    assert _close(_apply(A, v)[1 - ref], ratio * v[1 - ref], 1e-7)
    ang = cmath.phase(ratio) / (2 * cmath.pi) % 1.0
    k = round(ang * 8) % 8
    assert _close(cmath.exp(2j * cmath.pi * k / 8), ratio)
    return F(k, 8)


def test_d4_table_against_quaternion_brute_force():
    """Rebuild the 40 commuting pairs of the order-8 quaternion group with
    their simultaneous eigenvalue exponents and compare against the preset
    rows (up to simultaneous relabeling of the two coordinate lines)."""
    E = ((1 + 0j, 0j), (0j, 1 + 0j))
    I = ((1j, 0j), (0j, -1j))
    J = ((0j, 1 + 0j), (-1 + 0j, 0j))
    K = _mat_mul(I, J)
    group = [E, _mat_neg(E), I, _mat_neg(I), J, _mat_neg(J), K, _mat_neg(K)]
    assert len({g for g in group}) == 8

    def is_scalar(A):
        return abs(A[0][1]) < 1e-12 and abs(A[1][0]) < 1e-12 and _close(A[0][0], A[1][1])

    rows = Counter()
    for g, h in product(group, repeat=2):
        # entries are Gaussian integers, so float arithmetic here is exact
        if _mat_mul(g, h) != _mat_mul(h, g):
            continue
        # simultaneous eigenbasis: diagonalize whichever member is non-scalar
        if not is_scalar(g):
            vecs = _eigenvectors(g)
        elif not is_scalar(h):
            vecs = _eigenvectors(h)
        else:
            vecs = [(1 + 0j, 0j), (0j, 1 + 0j)]
        lam = tuple(_exponent_on_vector(g, v) for v in vecs)
        nu = tuple(_exponent_on_vector(h, v) for v in vecs)
        # canonicalize under simultaneous swap of the two lines
        swapped = (lam[::-1], nu[::-1])
        rows[min((lam, nu), swapped)] += 1

    assert sum(rows.values()) == 40

    preset_rows = Counter()
    for pair in preset_d4().orbifold.pairs:
        lam, nu = tuple(pair.lambda_), tuple(pair.nu)
        swapped = (lam[::-1], nu[::-1])
        preset_rows[min((lam, nu), swapped)] += pair.multiplicity

    assert rows == preset_rows
