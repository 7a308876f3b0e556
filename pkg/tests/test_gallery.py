from __future__ import annotations

import pytest

from bicrossprod.bicross import verify_matched
from bicrossprod.exactlin import ONE, LinMap, zeta
from bicrossprod.gallery import (
    GALLERY,
    InvalidFactorization,
    NonPrimitiveRoot,
    FactorizationSpec,
    antipode_power_is_identity,
    automorphic_actions_check,
    broken_antipode_sweedler,
    build,
    comodule_bialgebra_check,
    fixed_point_check,
    gallery_names,
    is_hopf_automorphism,
    module_bialgebra_check,
    nilpotent_matched_pair,
    nontrivial_witnesses,
    relative_invariance,
    s3_factorization,
    s_sharp_mirror_check,
    sweedler_adjoint_trivial_coaction,
    sweedler_algebra,
    sweedler_sign_automorphism,
    taft_algebra,
    theta_checks,
    z6_factorization,
)
from bicrossprod.hopf_core import verify_hopf
from bicrossprod.mult_group import cyclic, symmetric


def test_core_gallery_has_six_pairs():
    assert sorted(GALLERY) == [
        "group-s3",
        "group-z6",
        "heisenberg-p3",
        "mirror-sweedler",
        "mirror-taft3",
        "trivial-action-aut",
    ]
    assert set(GALLERY) <= set(gallery_names())


def test_unknown_name():
    with pytest.raises(KeyError):
        build("no-such-pair")


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_taft_algebras(n):
    T = taft_algebra(n)
    assert T.dim == n * n
    assert verify_hopf(T).ok


def test_taft_rejects_non_primitive_root():
    with pytest.raises(NonPrimitiveRoot):
        taft_algebra(4, zeta(4) ** 2)


def test_antipode_orders():
    # S^2(x) = q^-1 x, so S^4 = ι exactly when q^2 = 1
    assert antipode_power_is_identity(sweedler_algebra(), 4)
    assert not antipode_power_is_identity(sweedler_algebra(), 2)
    assert not antipode_power_is_identity(taft_algebra(3), 4)
    assert antipode_power_is_identity(taft_algebra(3), 6)


@pytest.mark.parametrize("f", [s3_factorization(), z6_factorization(), nilpotent_matched_pair(2), nilpotent_matched_pair(3)], ids=lambda f: f.name)
def test_factorizations(f):
    assert f.check().ok


def test_factorization_must_cover_group():
    G = symmetric(3)
    with pytest.raises(InvalidFactorization):
        FactorizationSpec.from_subgroups(G, [G.identity, (1, 2, 0), (2, 0, 1)], [G.identity])
    with pytest.raises(InvalidFactorization):
        FactorizationSpec.from_subgroups(cyclic(4), [0, 2], [0, 2])


def test_nilpotent_pair_needs_small_prime():
    with pytest.raises(ValueError):
        nilpotent_matched_pair(4)


def test_heisenberg_actions_are_by_automorphisms():
    f = nilpotent_matched_pair(3)
    assert automorphic_actions_check(f.info()).ok


def test_heisenberg_witnesses():
    w = nontrivial_witnesses(build("heisenberg-p3"))
    assert w["action"] == {"b": "d(1,0,0)", "a": "(1,0,0)"}
    assert w["coaction"] == {"a": "(0,0,1)"}


@pytest.mark.parametrize("name", ["heisenberg-p2", "group-s3", "trivial-action-aut"])
def test_bialgebra_structures(name):
    p = build(name)
    assert module_bialgebra_check(p).ok
    assert comodule_bialgebra_check(p).ok
    assert fixed_point_check(p).ok


def test_mirror_sweedler_is_not_a_comodule_bialgebra():
    p = build("mirror-sweedler")
    assert not comodule_bialgebra_check(p).ok
    assert not fixed_point_check(p).ok


def test_adjoint_action_with_trivial_coaction_fails():
    rep = sweedler_adjoint_trivial_coaction()
    assert rep["module bi-algebra"].witness == {"b": "x", "a": "x"}
    assert rep["R = R^op"].status == "fail"


def test_sign_automorphism():
    A = sweedler_algebra()
    m = sweedler_sign_automorphism(A)
    assert is_hopf_automorphism(A, m)
    nu = relative_invariance(A, cyclic(2), lambda k: m if k else LinMap.identity(A.dim))
    assert nu[0] == 1
    assert nu[1] == -1


@pytest.mark.parametrize("name", ["mirror-z2", "mirror-z4", "mirror-sweedler", "mirror-taft3"])
def test_theta(name):
    p = build(name)
    assert theta_checks(p).ok
    assert s_sharp_mirror_check(p).ok


def test_broken_antipode_is_still_an_algebra():
    h = broken_antipode_sweedler()
    rep = verify_hopf(h)
    assert rep["associativity"].status == "pass"
    assert rep["antipode"].status == "fail"


def test_mirror_z2_theta_is_the_flip_formula():
    # for a group algebra theta(g ⊗ h) = g ⊗ g^-1 h
    from bicrossprod.gallery import theta_iso

    p = build("mirror-z2")
    th = theta_iso(p)
    assert th.column(0) == {0: ONE}
    assert th.column(2 + 1) == {2: ONE}
    assert verify_matched(p).ok
