from __future__ import annotations

import json

import pytest

from bicrossprod.bicross import bicrossproduct, pair_from_json, pair_to_json, verify_matched
from bicrossprod.duality import (
    PairingData,
    adjoint_checks,
    dual_bicross_pairing,
    dual_hopf,
    dual_of_group_pair_check,
    dual_pair_checks,
    dual_y_characters,
    dualize_pair,
    double_dual_check,
    eta_pairing_check,
    find_taft_iso,
    mirror_dual_check,
    pairing_from_json,
    star_duality,
    verify_dual_bicrossproduct,
)
from bicrossprod.exactlin import ONE
from bicrossprod.gallery import build, sweedler_algebra, taft_algebra
from bicrossprod.hopf_core import is_iso, same_structure, verify_hopf
from bicrossprod.mult_group import cyclic, function_algebra, group_algebra, symmetric


@pytest.mark.parametrize("h", [group_algebra(symmetric(3)), sweedler_algebra(), taft_algebra(3)], ids=lambda h: h.name)
def test_dual_is_hopf_and_paired(h):
    d = dual_hopf(h)
    assert verify_hopf(d).ok
    assert PairingData.canonical(h, d).check().ok
    assert double_dual_check(h).ok


def test_dual_of_group_algebra_is_function_algebra():
    G = symmetric(3)
    d = dual_hopf(group_algebra(G))
    assert same_structure(d, function_algebra(G))
    assert d.labels == function_algebra(G).labels


def test_sweedler_is_self_dual():
    f = find_taft_iso(dual_hopf(sweedler_algebra()), 2, -ONE)
    assert f is not None
    assert is_iso(sweedler_algebra(), dual_hopf(sweedler_algebra()), f).ok


def test_non_hopf_pairing_is_caught():
    A = sweedler_algebra()
    d = dual_hopf(A)
    # pairing b_i with e^(sigma i) for a permutation that is not a Hopf map
    bad = PairingData(A, d, [{1: ONE}, {0: ONE}, {2: ONE}, {3: ONE}])
    assert not bad.check().ok


@pytest.mark.parametrize("name", ["group-s3", "mirror-sweedler", "mirror-z4", "trivial-action-aut", "mirror-taft3"])
def test_dual_pair(name):
    p = build(name)
    dp = dualize_pair(p)
    assert dual_pair_checks(p, dp).ok
    assert verify_matched(dp).ok
    rep = adjoint_checks(p, dp)
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("name", ["group-s3", "mirror-sweedler", "mirror-z4", "trivial-action-aut"])
def test_bicrossproduct_duality(name):
    rep = verify_dual_bicrossproduct(build(name))
    assert rep.ok, rep.summary()
    assert "dual(AB) -> CD: multiplicative" in rep


@pytest.mark.parametrize("name", ["group-s3", "mirror-sweedler", "mirror-z4"])
def test_cointegral_characters_from_dual(name):
    p = build(name)
    assert dual_y_characters(p, dualize_pair(p)).ok


def test_group_pair_dual_formulas():
    p = build("group-s3")
    assert dual_of_group_pair_check(p, dualize_pair(p)).ok


@pytest.mark.parametrize("name", ["mirror-z2", "mirror-z4", "mirror-sweedler", "mirror-taft3"])
def test_mirror_duality(name):
    p = build(name)
    dp = dualize_pair(p)
    assert mirror_dual_check(p, dp).ok
    rep = eta_pairing_check(p, dp)
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("name", ["group-s3", "mirror-z4", "mirror-sweedler"])
def test_star_duality(name):
    rep = star_duality(build(name))
    assert rep.ok, rep.summary()


def test_pairing_json_round_trip():
    p = build("mirror-sweedler")
    dp = dualize_pair(p)
    P = dual_bicross_pairing(p, dp)
    doc = json.loads(json.dumps(P.to_json()))
    assert doc["schema"] == "pairing.v1" and doc["rows"] == 16
    back = pairing_from_json(doc, P.left, P.right)
    assert back.matrix == P.matrix


def test_dual_pair_json_round_trip():
    dp = dualize_pair(build("mirror-sweedler"))
    doc = pair_to_json(dp)
    assert doc["type"] == "second"
    back = pair_from_json(json.loads(json.dumps(doc)))
    assert same_structure(bicrossproduct(back), bicrossproduct(dp))


def test_perturbed_dual_action_is_caught():
    p = build("mirror-sweedler")
    dp = dualize_pair(p)
    orig = dp.act_basis

    def act(j, k):
        v = dict(orig(j, k))
        if (j, k) == (1, 1):
            v[0] = v.get(0, 0) + ONE
        return v

    dp.act_basis = act
    rep = dual_pair_checks(p, dp)
    assert not rep.ok
    assert rep.failures()[0].witness is not None


def test_cyclic_group_dual_round_trip():
    h = group_algebra(cyclic(5))
    assert same_structure(dual_hopf(dual_hopf(h)), h)
