"""Acceptance suite: ten timed end-to-end criteria.

Each test prints one PASS/FAIL line (also collected into the terminal summary).
Timings cover construction of the inputs as well as the checks themselves.
"""

from __future__ import annotations

import time

from conftest import ACCEPTANCE_LINES

from bicrossprod.bicross import bicrossproduct, check_group_pair, verify_matched
from bicrossprod.bicross_integrals import (
    bicross_modular_data,
    check_y_properties,
    compute_y,
    gamma_counit_branch,
    gamma_non_scalar_witness,
    mirror_formula_checks,
    oracle_checks,
)
from bicrossprod.duality import (
    dual_bicross_pairing,
    dual_hopf,
    dual_y_characters,
    dualize_pair,
    eta_pairing_check,
    verify_dual_bicrossproduct,
)
from bicrossprod.exactlin import ONE, LinMap
from bicrossprod.gallery import (
    GALLERY,
    LAZY,
    automorphic_actions_check,
    broken_antipode_sweedler,
    broken_coassociativity_pair,
    broken_cross_relation_pair,
    build,
    comodule_bialgebra_check,
    module_bialgebra_check,
    nontrivial_witnesses,
    theta_checks,
)
from bicrossprod.hopf_core import find_integrals, is_iso, verify_hopf
from bicrossprod.mult_group import (
    Cop,
    LazyFunctionAlgebra,
    LazyGroupAlgebra,
    covering_independent,
    integers,
    lazy_invariance_checks,
    slice_multiplier,
    verify_lazy_pair,
)
from bicrossprod.report import Report


class Criterion:
    """Times a block of checks and records a single verdict line."""

    def __init__(self, number: int, title: str, limit: float):
        self.number, self.title, self.limit = number, title, limit
        self.failures: list[str] = []

    def require(self, cond, what: str):
        if not cond:
            self.failures.append(what)

    def report(self, rep: Report, what: str):
        if not rep.ok:
            self.failures.append(f"{what}: {rep.failures()[0].name} witness={rep.failures()[0].witness}")

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        if exc is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        if elapsed >= self.limit:
            self.failures.append(f"took {elapsed:.2f}s, limit {self.limit:g}s")
        status = "PASS" if not self.failures else "FAIL"
        line = f"{status} criterion {self.number:2d} ({elapsed:6.2f}s < {self.limit:g}s) {self.title}"
        if self.failures:
            line += " | " + "; ".join(self.failures)
        print(line)
        ACCEPTANCE_LINES.append(line)
        assert not self.failures, line
        return True


def test_criterion_01_group_pair_on_s3():
    with Criterion(1, "S3 group pair: y = 1, delta# = 1, sigma# = sigma'# = id, tau# = 1", 1.0) as c:
        p = build("group-s3")
        c.report(verify_matched(p), "verify_matched")
        h = bicrossproduct(p)
        bmd = bicross_modular_data(p)
        c.require(bmd.y.data == p.B.one(), "y != 1")
        c.require(bmd.delta.data == h.one(), "delta# != 1")
        c.require(bmd.sigma == LinMap.identity(h.dim), "sigma# != id")
        c.require(bmd.sigma_prime == LinMap.identity(h.dim), "sigma'# != id")
        c.require(bmd.tau == 1, f"tau# = {bmd.tau}")


def test_criterion_02_mirror_sweedler_modular_element():
    with Criterion(2, "mirror Sweedler: y = delta_A, delta# = delta_A # delta_A^-2 = solved modular element", 1.0) as c:
        p = build("mirror-sweedler")
        A = p.A
        h = bicrossproduct(p)
        mA = find_integrals(A)
        bmd = bicross_modular_data(p, mA)
        c.require(bmd.y == mA.delta, "y != delta_A")
        dA, dAi = mA.delta.data, mA.delta_inv.data
        closed = h.mul(h.emb_A(dA), h.emb_B(A.mul(dAi, dAi)))
        c.require(bmd.delta.data == closed, "delta# != delta_A # delta_A^-2")
        solved = find_integrals(h, cointegrals=False)
        c.require(bmd.delta == solved.delta, f"solved modular element is {h.label_of(solved.delta.data)}")
        c.require(h.label_of(bmd.delta.data) == "g#1", f"delta# = {h.label_of(bmd.delta.data)}")


def test_criterion_03_formulas_against_solved_data():
    with Criterion(3, "formulas vs solved psi#, phi#, delta#, tau#, sigma#, sigma'# on all 6 gallery pairs", 60.0) as c:
        for name in sorted(GALLERY):
            p = build(name)
            c.report(oracle_checks(p, bicross_modular_data(p)), name)


def test_criterion_04_distinguished_element_properties():
    with Criterion(4, "properties of y and delta_A, exhaustive on all finite gallery pairs", 10.0) as c:
        for name in sorted(GALLERY):
            p = build(name)
            mA = find_integrals(p.A)
            c.report(check_y_properties(p, compute_y(p, mA), mA), name)


def test_criterion_05_duality():
    with Criterion(5, "AB and CD are dual: Hopf pairing, explicit iso dual(AB) -> CD, rho = eta = <., y_dual>", 30.0) as c:
        for name in ("group-s3", "mirror-sweedler"):
            p = build(name)
            dp = dualize_pair(p)
            c.report(verify_dual_bicrossproduct(p, dp), name)
            P = dual_bicross_pairing(p, dp)
            # the explicit isomorphism: e^(a b) -> c_a d_b, i.e. the pairing matrix read as a map
            c.report(is_iso(dual_hopf(P.left), P.right, P.as_linmap()), f"{name} explicit iso")
        p = build("mirror-sweedler")
        c.report(dual_y_characters(p, dualize_pair(p)), "mirror-sweedler characters")


def test_criterion_06_mirror_transport():
    with Criterion(6, "theta, eta Hopf isos; phi#∘theta, theta(delta_A ⊗ delta_B) = delta#, pairing on C[Z4] and Sweedler", 10.0) as c:
        for name in ("mirror-z4", "mirror-sweedler"):
            p = build(name)
            c.report(theta_checks(p), name)
            c.report(eta_pairing_check(p, dualize_pair(p)), name)


def test_criterion_07_heisenberg_pair():
    with Criterion(7, "Heisenberg pair over Z3: exhaustive group axioms, bi-algebra identities, nontrivial witnesses", 60.0) as c:
        p = build("heisenberg-p3")
        c.require(len(p.group.H.elements) == 27 and len(p.group.K.elements) == 27, "factors are not of order 27")
        c.report(check_group_pair(p.group), "group axioms")
        c.report(verify_matched(p), "verify_matched")
        c.report(automorphic_actions_check(p.group), "actions by automorphisms")
        c.report(module_bialgebra_check(p), "module bi-algebra")
        c.report(comodule_bialgebra_check(p), "comodule bi-algebra")
        w = nontrivial_witnesses(p)
        c.require(w["action"] is not None, "action is trivial")
        c.require(w["coaction"] is not None, "coaction is trivial")


def test_criterion_08_gamma_branches():
    with Criterion(8, "gamma(a) = eps(sigma_A^-1(a)) 1 on Sweedler; non-scalar witness on Taft(3)", 10.0) as c:
        p = build("mirror-sweedler")
        mA = find_integrals(p.A)
        bmd = bicross_modular_data(p, mA)
        c.report(gamma_counit_branch(p, bmd.gamma, mA), "sweedler")
        c.report(mirror_formula_checks(p, bmd, mA, find_integrals(p.B)), "sweedler mirror formulas")
        p = build("mirror-taft3")
        mA = find_integrals(p.A)
        bmd = bicross_modular_data(p, mA)
        c.require(not gamma_counit_branch(p, bmd.gamma, mA).ok, "Taft(3) gamma unexpectedly scalar")
        w = gamma_non_scalar_witness(p, bmd.gamma)
        c.require(w is not None, "no non-scalar witness on Taft(3)")


def test_criterion_09_multiplier_layer():
    with Criterion(9, "F(Z)/C[Z] pairs: covering independence and invariance on 100 seeded samples, deterministic", 10.0) as c:
        Z = integers()
        FZ, CZ = LazyFunctionAlgebra(Z), LazyGroupAlgebra(Z)
        for alg, name in ((FZ, "F(Z)"), (CZ, "C[Z]")):
            c.report(lazy_invariance_checks(alg, samples=100), name)
        m = slice_multiplier(FZ.psi, 0, Cop(FZ, {1: ONE, 2: 3 * ONE}))
        import random

        rng = random.Random(0xB1C8)
        xs = [FZ.random(rng) for _ in range(10)]
        c.report(covering_independent(m, xs, xs), "slice multiplier")
        for name in sorted(LAZY):
            lp = LAZY[name]()
            first = verify_lazy_pair(lp, samples=100, seed=0xB1C8)
            c.report(first, name)
            again = verify_lazy_pair(LAZY[name](), samples=100, seed=0xB1C8)
            c.require(first.to_json() == again.to_json(), f"{name} not deterministic")


def test_criterion_10_negative_controls():
    with Criterion(10, "injected defects caught with witnesses", 5.0) as c:
        rep = verify_hopf(broken_antipode_sweedler())
        bad = [f for f in rep.failures() if f.name == "antipode"]
        c.require(bad and bad[0].witness is not None, "broken antipode not caught")
        rep = verify_matched(broken_cross_relation_pair())
        bad = [f for f in rep.failures() if f.name == "cross relation"]
        c.require(bad and bad[0].witness is not None, "broken cross relation not caught")
        rep = verify_matched(broken_coassociativity_pair())
        bad = [f for f in rep.failures() if "coassociative" in f.name]
        c.require(bad and bad[0].witness is not None, "broken coassociativity not caught")
