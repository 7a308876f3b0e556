from __future__ import annotations

import random

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from bicrossprod.bicross import bicrossproduct
from bicrossprod.exactlin import ONE
from bicrossprod.gallery import (
    dihedral_action_pair,
    dihedral_coaction_pair,
    group_matched_pair,
    lazy_group_pair,
    nilpotent_matched_pair,
    s3_factorization,
)
from bicrossprod.mult_group import (
    Coact,
    Cop,
    El,
    InvalidGroup,
    LazyFunctionAlgebra,
    LazyGroupAlgebra,
    One,
    Prod,
    Slice,
    Tn,
    UncoveredEvaluation,
    check_group,
    covered_eval,
    covering_independent,
    cyclic,
    direct_product,
    from_table,
    group_from_json,
    group_to_json,
    heisenberg_p,
    integer_lattice,
    integers,
    lazy_invariance_checks,
    slice_multiplier,
    symmetric,
    verify_lazy_pair,
)


@pytest.mark.parametrize(
    "G", [cyclic(5), symmetric(3), heisenberg_p(3), heisenberg_p(3, "K"), direct_product(cyclic(2), cyclic(3)), integers(), integer_lattice(2)], ids=repr
)
def test_groups_satisfy_axioms(G):
    assert check_group(G, samples=50).ok


def test_finite_orders():
    assert symmetric(3).order == 6
    assert heisenberg_p(3).order == 27
    assert not integers().finite


def test_from_table_rejects_non_group():
    with pytest.raises(InvalidGroup):
        from_table([[0, 1], [1, 1]])
    with pytest.raises(InvalidGroup):
        from_table([[0, 1, 2], [1, 0, 2], [2, 2, 0]])


@pytest.mark.parametrize("G", [cyclic(4), symmetric(3), heisenberg_p(2), integers()], ids=repr)
def test_group_json_round_trip(G):
    back = group_from_json(group_to_json(G))
    rng = random.Random(3)
    for _ in range(20):
        a, b = G.sample(rng), G.sample(rng)
        assert back.mul(a, b) == G.mul(a, b)
        assert back.inv(a) == G.inv(a)


# ---------------------------------------------------------------------------
# one-leg algebras on Z

Z = integers()
CZ = LazyGroupAlgebra(Z)
FZ = LazyFunctionAlgebra(Z)

finite_fns = st.dictionaries(st.integers(-6, 6), st.integers(-4, 4).filter(bool).map(mpq), min_size=1, max_size=4)


def test_function_coproduct_needs_cover():
    with pytest.raises(UncoveredEvaluation):
        FZ.comul({0: ONE})
    with pytest.raises(UncoveredEvaluation):
        covered_eval(Cop(FZ, {0: ONE}))


def test_covered_coproduct_on_F_of_Z():
    # Delta(delta_2)(1 ⊗ delta_5) = delta_{-3} ⊗ delta_5
    assert covered_eval(Prod((Cop(FZ, {2: ONE}), Tn(One(FZ), El(FZ, {5: ONE}))))) == {(-3, 5): ONE}
    assert covered_eval(Prod((Tn(El(FZ, {5: ONE}), One(FZ)), Cop(FZ, {2: ONE})))) == {(5, -3): ONE}


@given(finite_fns, finite_fns, finite_fns)
@settings(max_examples=50, deadline=None)
def test_covering_independence_on_F_of_Z(f, z, w):
    a = covered_eval(Prod((Cop(FZ, f), Tn(One(FZ), El(FZ, FZ.mul(z, w))))))
    b = covered_eval(Prod((Cop(FZ, f), Tn(One(FZ), El(FZ, z)), Tn(One(FZ), El(FZ, w)))))
    assert a == b


@given(finite_fns, finite_fns)
@settings(max_examples=50, deadline=None)
def test_invariance_of_sum_integral(f, z):
    # (psi ⊗ ι)(Delta(f)(1 ⊗ z)) = psi(f) z
    lhs = covered_eval(Slice(FZ.psi, 0, Prod((Cop(FZ, f), Tn(One(FZ), El(FZ, z))))))
    want = {k: FZ.psi(f) * v for k, v in z.items() if FZ.psi(f) * v}
    assert lhs == want


def test_lazy_invariance_on_one_leg_algebras():
    assert lazy_invariance_checks(FZ, samples=100).ok
    assert lazy_invariance_checks(CZ, samples=100).ok


def test_slice_multiplier_is_covering_independent():
    m = slice_multiplier(FZ.psi, 0, Cop(FZ, {1: ONE, 2: 3 * ONE}))
    rng = random.Random(11)
    xs = [FZ.random(rng) for _ in range(6)]
    assert covering_independent(m, xs, xs).ok


# ---------------------------------------------------------------------------
# group-type pairs with an infinite factor


@pytest.mark.parametrize("make", [dihedral_action_pair, dihedral_coaction_pair])
def test_infinite_dihedral_pairs(make):
    rep = verify_lazy_pair(lazy_group_pair(make()), samples=100)
    assert rep.ok, rep.summary()


def test_lazy_verification_is_deterministic():
    lp = lazy_group_pair(dihedral_action_pair())
    assert verify_lazy_pair(lp, samples=30, seed=5).to_json() == verify_lazy_pair(lp, samples=30, seed=5).to_json()


def test_covered_coaction():
    lp = lazy_group_pair(dihedral_coaction_pair())
    # Gamma(h)(delta_k ⊗ 1) = delta_k ⊗ (h ⊲ k) with h ⊲ k = -h for k = 1
    val = covered_eval(Prod((Coact(lp, {3: ONE}), Tn(El(lp.B, {1: ONE}), One(lp.A)))))
    assert val == {(1, -3): ONE}


def test_broken_right_action_is_caught():
    f = dihedral_coaction_pair()
    bad = lazy_group_pair(f)
    bad.ract = lambda h, k: h + k
    rep = verify_lazy_pair(bad, samples=40)
    assert not rep.ok
    assert all(c.witness is not None for c in rep.failures())


@pytest.mark.parametrize("f", [s3_factorization(), nilpotent_matched_pair(2)], ids=["s3", "heis2"])
def test_lazy_pair_agrees_with_finite_bicrossproduct(f):
    lp = lazy_group_pair(f)
    p = group_matched_pair(f)
    h = bicrossproduct(p)
    H, K = f.H, f.K
    nB = K.order

    def key(i):
        a, b = divmod(i, nB)
        return (H.elements[a], K.elements[b])

    def idx(k):
        return H.index(k[0]) * nB + K.index(k[1])

    for i in range(h.dim):
        x = {key(i): ONE}
        assert {idx(k): v for k, v in lp.S(x).items()} == h.S({i: ONE})
        assert lp.psi(x) == h.apply({j: ONE for j in range(h.dim) if key(j)[0] == H.identity}, {i: ONE})
        assert {(idx(a), idx(b)): v for (a, b), v in lp.comul(x).items()} == h.comul_basis(i)
        for j in range(h.dim):
            got = {idx(k): v for k, v in lp.mul(x, {key(j): ONE}).items()}
            assert got == h.mul_basis(i, j)
