from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicrossprod.bicross import (
    MatchedPair,
    bicrossproduct,
    check_group_pair,
    check_twists,
    pair_from_json,
    pair_to_json,
    twist_R,
    twist_Rop,
    verify_matched,
)
from bicrossprod.exactlin import ONE, LinMap
from bicrossprod.gallery import (
    EXTRA,
    GALLERY,
    broken_coassociativity_pair,
    broken_cross_relation_pair,
    build,
    mirror_pair,
)
from bicrossprod.hopf_core import same_structure

FAST = [n for n in sorted(GALLERY) + sorted(EXTRA) if n != "heisenberg-p3"]


@pytest.mark.parametrize("name", FAST)
def test_gallery_pairs_verify(name):
    rep = verify_matched(build(name))
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("name", ["group-s3", "group-z6", "heisenberg-p2"])
def test_group_pair_axioms(name):
    assert check_group_pair(build(name).group).ok


def test_s3_bicrossproduct_has_dimension_six():
    # C[H] # F(K) with |H| = 2, |K| = 3, not 12
    h = bicrossproduct(build("group-s3"))
    assert h.dim == 6
    assert h.labels[:3] == ["012#d012", "012#d120", "012#d201"]


def test_bicrossproduct_is_cached():
    p = build("mirror-sweedler")
    assert bicrossproduct(p) is bicrossproduct(p)


def test_twists_for_mirror_pair():
    p = build("mirror-sweedler")
    assert check_twists(p).ok
    # the adjoint action is nontrivial, so R is not the flip b ⊗ a -> a ⊗ b
    n = p.A.dim
    flip = LinMap(n * n, n * n, {j * n + i: {i * n + j: ONE} for i in range(n) for j in range(n)})
    assert twist_R(p) != flip
    assert twist_Rop(p) != flip


def test_broken_cross_relation_witness():
    rep = verify_matched(broken_cross_relation_pair())
    assert rep["cross relation"].status == "fail"
    assert rep["cross relation"].witness == {"a": "x", "b": "x"}


def test_broken_coassociativity_witness():
    rep = verify_matched(broken_coassociativity_pair())
    c = rep["coaction: coaction coassociative"]
    assert c.status == "fail" and c.witness is not None


def test_trivial_action_makes_factors_commute():
    p = build("trivial-action-aut")
    h = bicrossproduct(p)
    nB = p.B.dim
    for i in range(p.A.dim):
        a = {i * nB: ONE}
        for j in range(nB):
            b = {j: ONE}
            assert h.mul(a, b) == h.mul(b, a)


@pytest.mark.parametrize("name", ["group-s3", "mirror-sweedler", "mirror-taft3", "trivial-action-aut"])
def test_pair_json_round_trip(name):
    p = build(name)
    doc = pair_to_json(p)
    back = pair_from_json(json.loads(json.dumps(doc)))
    assert pair_to_json(back) == doc
    assert same_structure(bicrossproduct(p), bicrossproduct(back))


def test_pair_json_rejects_other_schema():
    with pytest.raises(ValueError):
        pair_from_json({"schema": "hopf.v1"})


# ---------------------------------------------------------------------------
# properties of the smash product on random elements

MIRROR = build("mirror-sweedler")
H16 = bicrossproduct(MIRROR)


@st.composite
def elements(draw, dim):
    coeffs = draw(st.lists(st.integers(-2, 2), min_size=dim, max_size=dim))
    return {i: ONE * c for i, c in enumerate(coeffs) if c}


@given(elements(16), elements(16))
@settings(max_examples=30, deadline=None)
def test_smash_coproduct_is_multiplicative(x, y):
    assert H16.comul(H16.mul(x, y)) == H16.tmul(H16.comul(x), H16.comul(y))


@given(elements(16), elements(16), elements(16))
@settings(max_examples=20, deadline=None)
def test_smash_product_is_associative(x, y, z):
    assert H16.mul(H16.mul(x, y), z) == H16.mul(x, H16.mul(y, z))


@given(elements(4), elements(4))
@settings(max_examples=30, deadline=None)
def test_commutation_rule(a, b):
    # b a = sum a_(1) (b ⊲ a_(2)) inside AB
    A = MIRROR.A
    emb_a, emb_b = H16.emb_A, H16.emb_B
    lhs = H16.mul(emb_b(b), emb_a(a))
    rhs: dict = {}
    for (u, v), s in A.comul(a).items():
        term = H16.mul(emb_a({u: ONE}), emb_b(MIRROR.act(b, {v: ONE})))
        for k, t in term.items():
            rhs[k] = rhs.get(k, 0) + s * t
    assert lhs == {k: v for k, v in rhs.items() if v}


def test_mirror_of_cocommutative_algebra():
    from bicrossprod.mult_group import cyclic, group_algebra

    p = mirror_pair(group_algebra(cyclic(3)))
    assert isinstance(p, MatchedPair)
    assert verify_matched(p).ok
