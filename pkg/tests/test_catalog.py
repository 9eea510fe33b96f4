"""Structural checks on the identity catalog plus a one-sample smoke sweep."""

import time
from fractions import Fraction

import mpmath
import pytest

from elliptica import SampleConfig, catalog, catalog_ids, get, verify
from elliptica.catalog import Variable, tampered_an_mckay_n3

# ids the library commits to providing, grouped the way they are documented
REQUIRED_IDS = [
    "theta.quasiperiod",
    "delta.quasiperiod",
    "fay.n2",
    "fay.n3",
    "fay.n4",
    "fay.n5",
    "fay.symmetric.n2",
    "fay.symmetric.n3",
    "fay.symmetric.n4",
    "fay.symmetric.n5",
    "trisecant.additive",
    "braid.sl3",
    "an.mckay.n1",
    "an.mckay.n2",
    "an.mckay.n3",
    "an.mckay.n4",
    "an.mckay.n5",
    "an.mckay.n6",
    "an.simplified",
    "an.selfdual",
    "d4.mckay",
    "d4.remarkable",
    "lehnsorger.fsym",
    "lehnsorger.mckay",
    "lehnsorger.wwstar.symmetry",
    "diag.mckay.m1.n2",
    "diag.mckay.m1.n3",
    "diag.mckay.m2.n2",
    "diag.mckay.m2.n3",
    "diag.mckay.m3.n2",
    "diag.mckay.m3.n3",
    "limit.hirzebruch",
    "limit.trig",
    "limit.trig.y0",
    "ell.p1",
    "cy.residue.n2",
    "cy.residue.n3",
    "cy.residue.n4",
    "cy.residue.n5",
]

EXTRA_IDS = [
    "an.selfdual.corollary",
    "phi.period",
    "psi.swap",
    "limit.hirzebruch.roots",
]


def test_catalog_contents():
    ids = catalog_ids()
    assert len(ids) == len(set(ids)) == 43
    assert set(REQUIRED_IDS) <= set(ids)
    assert set(EXTRA_IDS) <= set(ids)
    assert set(ids) == set(REQUIRED_IDS) | set(EXTRA_IDS)
    # presentation order: building blocks first, then the applications
    assert ids[0] == "theta.quasiperiod"
    assert ids.index("fay.n2") < ids.index("an.mckay.n1") < ids.index("cy.residue.n2")


def test_descriptor_shape():
    table = catalog()
    assert tuple(d.identity_id for d in table) == catalog_ids()
    for desc in table:
        identity_id = desc.identity_id
        assert desc.description
        assert callable(desc.lhs) and callable(desc.rhs)
        assert desc.delta_degree >= 0
        names = desc.variable_names()
        assert len(names) == len(set(names))
        for var in desc.variables:
            assert var.role in {"modular", "torus", "dynamical"}
        if desc.needs_modular:
            assert desc.variables[0].name == "tau"
            assert desc.variables[0].role == "modular"
        else:
            assert "tau" not in names
        # exact evaluation is available exactly for the q -> 0 limit entries
        assert desc.exact_mode == identity_id.startswith("limit.")
        assert (desc.exact_check is not None) == desc.exact_mode


def test_exact_checks_pass_with_fractions():
    for identity_id in ("limit.hirzebruch", "limit.hirzebruch.roots", "limit.trig", "limit.trig.y0"):
        desc = get(identity_id)
        points = desc.exact_check()
        assert len(points) == 5
        for label, lhs, rhs in points:
            assert isinstance(label, str) and "=" in label
            assert isinstance(lhs, Fraction) and isinstance(rhs, Fraction)
            assert lhs == rhs


def test_get_unknown_id():
    with pytest.raises(KeyError) as info:
        get("fay.n99")
    msg = str(info.value)
    assert "fay.n99" in msg
    assert "fay.n2" in msg  # the error lists the known ids


def test_variable_role_validated():
    with pytest.raises(ValueError):
        Variable("x", "temporal")


def test_smoke_verify_every_entry():
    """One random sample per identity: every equality should hold to 1e-9.

    This is the cheap analogue of the full verification sweep; it mainly
    guards against wiring mistakes (wrong arity, wrong variable order).
    """
    t0 = time.perf_counter()
    cfg = SampleConfig(samples=1, seed=91, tolerance=1e-9)
    for identity_id in catalog_ids():
        report = verify(get(identity_id), cfg)
        assert report.passed, f"{identity_id}: {report.to_json()}"
        assert report.samples == 1
        assert mpmath.mpf(report.max_rel_err) < 1e-9
    elapsed = time.perf_counter() - t0
    assert elapsed < 120, f"smoke sweep too slow: {elapsed:.1f}s"


def test_tampered_descriptor_fails():
    bad = tampered_an_mckay_n3()
    assert bad.identity_id == "an.mckay.n3.tampered"
    assert bad.identity_id not in catalog_ids()
    report = verify(bad, SampleConfig(samples=4, seed=7, tolerance=1e-9))
    assert not report.passed
    assert report.failures
    assert mpmath.mpf(report.max_rel_err) > 1e-9
