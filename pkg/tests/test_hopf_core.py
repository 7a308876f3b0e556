from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicrossprod.exactlin import ONE, ZERO, LinMap, zeta
from bicrossprod.gallery import broken_antipode_sweedler, sweedler_algebra, taft_algebra
from bicrossprod.hopf_core import (
    StarMissing,
    check_modular,
    check_positivity,
    coopposite,
    find_integrals,
    hopf_from_json,
    hopf_to_json,
    is_iso,
    opposite,
    same_structure,
    tensor_hopf,
    verify_hopf,
)
from bicrossprod.mult_group import cyclic, function_algebra, group_algebra, symmetric
from oracle import Dense, normalized, proportional, to_sympy_map, to_sympy_vec


def _algebras():
    return [
        group_algebra(cyclic(4)),
        group_algebra(symmetric(3)),
        function_algebra(symmetric(3)),
        sweedler_algebra(),
        taft_algebra(3),
        tensor_hopf(sweedler_algebra(), group_algebra(cyclic(2))),
    ]


@pytest.mark.parametrize("h", _algebras(), ids=lambda h: h.name)
def test_axioms_hold(h):
    rep = verify_hopf(h, products="exhaustive")
    assert rep.ok, rep.summary()


def test_sweedler_structure():
    A = sweedler_algebra()
    assert A.labels == ["1", "x", "g", "gx"]
    x, g = {1: ONE}, {2: ONE}
    assert A.mul(x, x) == {}
    assert A.mul(g, x) == {3: ONE}
    assert A.mul(x, g) == {3: -ONE}
    assert A.comul(x) == {(1, 0): ONE, (2, 1): ONE}
    assert A.S(x) == {3: -ONE}


def test_sweedler_modular_data():
    # psi(x) = 1, phi(gx) = 1, delta = g, S^2(x) = -x so tau = -1
    md = find_integrals(sweedler_algebra())
    assert md.psi.data == {1: ONE}
    assert md.phi.data == {3: ONE}
    assert md.delta.data == {2: ONE}
    assert md.tau == -1
    assert md.sigma.column(1) == {1: -ONE} and md.sigma.column(3) == {3: ONE}
    assert md.h_left.data == {1: ONE, 3: ONE}


def test_taft3_scaling_constant():
    md = find_integrals(taft_algebra(3))
    assert md.tau == zeta(3) ** 2
    assert md.delta.data == {3: ONE}
    assert check_modular(taft_algebra(3), md).ok


@pytest.mark.parametrize("h", _algebras()[:4] + [_algebras()[5]], ids=lambda h: h.name)
def test_modular_data_against_dense_oracle(h):
    D = Dense(h)
    md = find_integrals(h)
    n = h.dim
    (r,) = D.right_integrals()
    (l,) = D.left_integrals()
    assert to_sympy_vec(md.psi, n) == normalized(r)
    phi = to_sympy_vec(md.phi, n)
    assert proportional(phi, list(l))
    assert D.modular_element(phi) == to_sympy_vec(md.delta, n)
    assert D.modular_automorphism(phi) == to_sympy_map(md.sigma)
    assert D.modular_automorphism(to_sympy_vec(md.psi, n)) == to_sympy_map(md.sigma_prime)
    assert D.scaling_constant(normalized(r)) == md.tau
    assert check_modular(h, md).ok


def test_broken_antipode_has_witness():
    rep = verify_hopf(broken_antipode_sweedler())
    assert not rep.ok
    bad = rep["antipode"]
    assert bad.status == "fail" and bad.witness == {"x": "x"}


def test_generator_mode_agrees_with_exhaustive():
    h = taft_algebra(3)
    assert verify_hopf(h, products="generators").ok
    assert verify_hopf(h, products="sample", samples=20, seed=7).ok


def test_positivity():
    assert check_positivity(group_algebra(cyclic(4)), find_integrals(group_algebra(cyclic(4))).psi).ok
    assert check_positivity(function_algebra(symmetric(3)), find_integrals(function_algebra(symmetric(3))).psi).ok
    # Sweedler's integral is not positive for x* = x, g* = g
    assert not check_positivity(sweedler_algebra(), find_integrals(sweedler_algebra()).psi).ok


def test_positivity_needs_star():
    A = sweedler_algebra()
    h = tensor_hopf(A, A)
    h._star_fn = None
    with pytest.raises(StarMissing):
        check_positivity(h, find_integrals(A).psi)


def test_constructions():
    A = sweedler_algebra()
    assert verify_hopf(opposite(A)).ok
    assert verify_hopf(coopposite(A)).ok
    T = tensor_hopf(A, group_algebra(cyclic(3)))
    assert T.dim == 12
    assert is_iso(A, A, LinMap.identity(4)).ok


def test_is_iso_detects_non_homomorphism():
    A = sweedler_algebra()
    # x <-> gx is an algebra automorphism but not a coalgebra map
    swap = LinMap(4, 4, {0: {0: ONE}, 1: {3: ONE}, 2: {2: ONE}, 3: {1: ONE}})
    rep = is_iso(A, A, swap)
    assert rep["multiplicative"].status == "pass"
    assert rep["comultiplicative"].status == "fail"


@pytest.mark.parametrize("h", _algebras(), ids=lambda h: h.name)
def test_json_round_trip(h):
    back = hopf_from_json(hopf_to_json(h))
    assert same_structure(h, back)
    assert hopf_to_json(back) == hopf_to_json(h)


def test_json_rejects_other_schema():
    with pytest.raises(ValueError):
        hopf_from_json({"schema": "pair.v1"})


@st.composite
def elements(draw, dim):
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=dim, max_size=dim))
    return {i: ONE * c for i, c in enumerate(coeffs) if c}


TAFT = taft_algebra(3)


@given(elements(9), elements(9))
@settings(max_examples=40, deadline=None)
def test_comultiplication_is_multiplicative(x, y):
    assert TAFT.comul(TAFT.mul(x, y)) == TAFT.tmul(TAFT.comul(x), TAFT.comul(y))


@given(elements(9), elements(9))
@settings(max_examples=40, deadline=None)
def test_antipode_is_anti_multiplicative(x, y):
    assert TAFT.S(TAFT.mul(x, y)) == TAFT.mul(TAFT.S(y), TAFT.S(x))


@given(elements(9))
@settings(max_examples=40, deadline=None)
def test_integral_invariance(x):
    md = find_integrals(TAFT, cointegrals=False)
    out: dict = {}
    for (a, b), s in TAFT.comul(x).items():
        v = md.psi[a]
        if v:
            out[b] = out.get(b, ZERO) + s * v
    out = {k: v for k, v in out.items() if v}
    want = TAFT.apply(md.psi, x)
    assert out == ({0: want} if want else {})


def test_sampling_is_seeded():
    h = taft_algebra(3)
    a = verify_hopf(h, products="sample", samples=10, seed=1).to_json()
    b = verify_hopf(h, products="sample", samples=10, seed=1).to_json()
    assert a == b
