from __future__ import annotations

import pytest

from bicrossprod.bicross import bicrossproduct
from bicrossprod.bicross_integrals import (
    action_is_trivial,
    bicross_modular_data,
    check_delta_sharp,
    check_gamma,
    check_integrals_sharp,
    check_sigma,
    check_y_properties,
    coaction_is_trivial,
    cointegral_homs,
    compute_y,
    full_report,
    gamma_counit_branch,
    gamma_non_scalar_witness,
    mirror_formula_checks,
    modular_report_json,
    star_checks,
)
from bicrossprod.exactlin import ONE, zeta
from bicrossprod.gallery import EXTRA, GALLERY, build
from bicrossprod.hopf_core import find_integrals
from oracle import Dense, normalized, proportional, to_sympy_map, to_sympy_vec

FAST = [n for n in sorted(GALLERY) + sorted(EXTRA) if n != "heisenberg-p3"]


def _data(name):
    p = build(name)
    mA, mB = find_integrals(p.A), find_integrals(p.B)
    return p, mA, mB, bicross_modular_data(p, mA, mB)


@pytest.mark.parametrize("name", FAST)
def test_full_report_passes(name):
    rep, bmd, info = full_report(build(name))
    assert rep.ok, rep.summary()


def test_group_pair_values():
    p, mA, mB, bmd = _data("group-s3")
    h = bicrossproduct(p)
    one_B = {j: ONE for j in range(p.B.dim)}
    assert bmd.y.data == one_B
    assert bmd.delta.data == h.one()
    assert bmd.sigma.is_identity() and bmd.sigma_prime.is_identity()
    assert bmd.tau == 1
    rho, eta = cointegral_homs(p, mB)
    assert rho == eta
    assert [rho[i] for i in range(p.A.dim)] == p.A.counit


def test_mirror_sweedler_values():
    p, mA, mB, bmd = _data("mirror-sweedler")
    h = bicrossproduct(p)
    # y is the modular element g of A, and delta# = g # g^-2 = g # 1
    assert bmd.y == mA.delta
    assert p.B.label_of(bmd.y.data) == "g"
    assert h.label_of(bmd.delta.data) == "g#1"
    assert bmd.tau == 1 and mA.tau == -1


def test_mirror_taft3_values():
    p, mA, mB, bmd = _data("mirror-taft3")
    h = bicrossproduct(p)
    assert h.label_of(bmd.delta.data) == "g#g"
    assert mA.tau == zeta(3) ** 2
    assert bmd.tau == 1


def test_y_not_one_in_finite_dimension():
    p, mA, mB, bmd = _data("trivial-action-aut")
    assert action_is_trivial(p) and not coaction_is_trivial(p)
    assert p.B.label_of(bmd.y.data) == "1⊗d0 + (-1)*1⊗d1"
    assert bmd.y.data != p.B.one()
    assert check_y_properties(p, bmd.y, mA).ok


@pytest.mark.parametrize("name", ["group-s3", "group-z6", "mirror-sweedler", "mirror-z4", "mirror-s3", "trivial-action-aut", "heisenberg-p2"])
def test_formulas_against_dense_oracle(name):
    p, mA, mB, bmd = _data(name)
    h = bicrossproduct(p)
    D = Dense(h)
    n = h.dim
    (r,) = D.right_integrals()
    (l,) = D.left_integrals()
    assert to_sympy_vec(bmd.psi, n) == normalized(r)
    phi = to_sympy_vec(bmd.phi, n)
    assert proportional(phi, list(l))
    assert D.modular_element(phi) == to_sympy_vec(bmd.delta, n)
    assert D.scaling_constant(normalized(r)) == bmd.tau
    assert D.modular_automorphism(phi) == to_sympy_map(bmd.sigma)
    assert D.modular_automorphism(normalized(r)) == to_sympy_map(bmd.sigma_prime)


@pytest.mark.parametrize("name", ["mirror-sweedler", "mirror-taft3", "trivial-action-aut"])
def test_individual_checks(name):
    p, mA, mB, bmd = _data(name)
    assert check_integrals_sharp(p, bmd.psi, bmd.phi, mA, mB).ok
    assert check_delta_sharp(p, bmd, mA, mB).ok
    assert check_gamma(p, bmd.gamma, mB).ok
    assert check_sigma(p, bmd, mB).ok


def test_gamma_branch_sweedler():
    p, mA, mB, bmd = _data("mirror-sweedler")
    assert gamma_counit_branch(p, bmd.gamma, mA).ok


def test_gamma_branch_taft3_has_non_scalar_witness():
    p, mA, mB, bmd = _data("mirror-taft3")
    assert not gamma_counit_branch(p, bmd.gamma, mA).ok
    w = gamma_non_scalar_witness(p, bmd.gamma)
    assert w["a"] == "x"
    assert w["gamma(a)"].endswith("g^2x")


@pytest.mark.parametrize("name", ["mirror-z2", "mirror-z4", "mirror-sweedler", "mirror-taft3", "mirror-s3"])
def test_mirror_formulas(name):
    p, mA, mB, bmd = _data(name)
    assert mirror_formula_checks(p, bmd, mA, mB).ok


@pytest.mark.parametrize("name", ["group-s3", "mirror-z4", "mirror-sweedler"])
def test_star_checks(name):
    p, mA, mB, bmd = _data(name)
    rep = star_checks(p, bmd, mA, mB)
    assert rep.ok, rep.summary()


def test_positive_integral_is_reported_for_group_pair():
    p, mA, mB, bmd = _data("group-s3")
    rep = star_checks(p, bmd, mA, mB)
    assert any("positiv" in c.name and c.status == "pass" for c in rep.checks)


def test_tampered_y_is_rejected():
    p, mA, mB, bmd = _data("mirror-sweedler")
    y = compute_y(p, mA)
    assert not check_y_properties(p, y * 2, mA).ok


def test_modular_report_json_schema():
    p = build("mirror-sweedler")
    rep, bmd, info = full_report(p)
    doc = modular_report_json(p, rep, bmd, info)
    assert doc["schema"] == "modular_report.v1"
    assert doc["values"]["delta#_label"] == "g#1"
    assert doc["ok"] is True
    for key in ("y", "psi#", "phi#", "tau#", "gamma", "sigma#", "sigma'#"):
        assert key in doc["values"]
