"""Integrals and modular data of a bicrossproduct, assembled from the factors.

Everything here is computed from the data of A, B and the matched pair:

* the distinguished element y of B with (ι⊗phi_A)Gamma(a) = phi_A(a) y,
* psi#(ab) = psi_A(a) psi_B(b) and phi#(ab) = phi_A(a) phi_B(yb),
* delta# = delta_B y^-1 delta_A and tau# = tau_A tau_B,
* gamma: A -> B with psi_B(b ⊲ a) = psi_B(b gamma(a)),
* sigma'#(a) = sum sigma'_A(a_(1)) gamma(S^-1(a_(2))), sigma'#(b) = sigma'_B(b)
  and sigma#(x) = delta#^-1 sigma'#(x) delta#,
* the characters rho, eta with h ⊲ a = rho(a) h and k ⊲ a = eta(a) k for
  cointegrals h, k of B.

:func:`oracle_checks` compares each of these with the same object solved from
scratch on the smash product by :func:`hopf_core.find_integrals`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bicross import MatchedPair, bicrossproduct
from .exactlin import ONE, ZERO, FinVec, LinMap, axpy, conj, scaled, solve_many
from .hopf_core import (
    DegenerateForm,
    HopfData,
    ModularData,
    check_positivity,
    compose_functional,
    find_integrals,
    gram,
    outer,
    proportionality,
)
from .report import Report


class InconsistentY(ValueError):
    pass


class NotProportional(ValueError):
    pass


def _acc(d, k, v):
    nv = d.get(k, ZERO) + v
    if nv:
        d[k] = nv
    else:
        d.pop(k, None)


@dataclass
class BicrossModularData:
    y: FinVec
    y_inv: FinVec
    psi: FinVec
    phi: FinVec
    delta: FinVec
    delta_inv: FinVec
    tau: object
    gamma: LinMap
    sigma: LinMap
    sigma_prime: LinMap
    rho: FinVec | None = None
    eta: FinVec | None = None


# ---------------------------------------------------------------------------
# the distinguished element y


def _slice_coaction(pair, f: FinVec, i: int) -> dict:
    """(ι⊗f)Gamma(a_i) for first-type pairs, (f⊗ι)Gamma(d_i) for second-type ones."""
    out: dict = {}
    if pair.kind == "first":
        for (j, k), s in pair.coact_basis(i).items():
            w = f.data.get(k)
            if w:
                _acc(out, j, s * w)
    else:
        for (d, c), s in pair.coact_basis(i).items():
            w = f.data.get(d)
            if w:
                _acc(out, c, s * w)
    return out


def _factors(pair):
    return (pair.A, pair.B) if pair.kind == "first" else (pair.D, pair.C)


def compute_y(pair, mod: ModularData) -> FinVec:
    """The element y; ``mod`` is the modular data of the coacted algebra.

    For a first-type pair this is A and y lies in B.  For a second-type pair
    (C, D) it is D, and y in C satisfies (phi_D⊗ι)Gamma(d) = phi_D(d) y.
    The quotient is taken at one basis element and checked at all others.
    """
    src, tgt = _factors(pair)
    y = None
    for i in range(src.dim):
        p = mod.phi.data.get(i)
        v = _slice_coaction(pair, mod.phi, i)
        if p:
            q = scaled(ONE / p, v)
            if y is None:
                y = q
            elif q != y:
                raise InconsistentY(f"quotients at {src.labels[i]} disagree")
        elif v:
            raise InconsistentY(f"(ι⊗phi)Gamma({src.labels[i]}) is nonzero although phi vanishes there")
    if y is None:
        raise InconsistentY("phi vanishes identically")
    return FinVec(tgt.dim, y)


def check_y_properties(pair: MatchedPair, y: FinVec, modA: ModularData) -> Report:
    """Identities satisfied by y, on basis elements of A and B."""
    rep = Report()
    A, B = pair.A, pair.B
    yd = y.data

    def slice_fail(f):
        for i in range(A.dim):
            if _slice_coaction(pair, f, i) != scaled(f.data.get(i, ZERO), yd):
                yield {"a": A.labels[i]}

    rep.first_failure("y from the left integral", slice_fail(modA.phi))
    rep.first_failure("y from the right integral", slice_fail(modA.psi))
    y_inv = B.S(yd)
    rep.add("y invertible", B.mul(yd, y_inv) == B.one() and B.mul(y_inv, yd) == B.one())
    rep.add("y group-like", B.comul(yd) == outer(yd, yd) and B.eps(yd) == 1)
    dA, dA_inv = modA.delta.data, modA.delta_inv.data
    h = bicrossproduct(pair)
    eA, eB = h.emb_A, h.emb_B

    def conj_fail():
        for j in range(B.dim):
            b = {j: ONE}
            lhs = B.mul(B.mul(y_inv, b), yd)
            if lhs != pair.act(b, dA):
                yield {"b": B.labels[j], "side": "b ⊲ delta_A"}
            elif eB(lhs) != h.mul(h.mul(eA(dA_inv), eB(b)), eA(dA)):
                yield {"b": B.labels[j], "side": "delta_A^-1 b delta_A"}

    rep.first_failure("y^-1 b y = b ⊲ delta_A = delta_A^-1 b delta_A", conj_fail())
    rep.add("y commutes with delta_A", h.mul(eB(yd), eA(dA)) == h.mul(eA(dA), eB(yd)))
    d = eA(dA)
    rep.add("Delta#(delta_A) = delta_A ⊗ delta_A", h.comul(d) == outer(d, d))
    if action_is_trivial(pair):
        central = all(B.mul(yd, {j: ONE}) == B.mul({j: ONE}, yd) for j in range(B.dim))
        rep.add("y central (trivial action)", central)
    else:
        rep.skip("y central (trivial action)", "action is not trivial")
    if B.has_star:
        rep.add("y self-adjoint", B.star(yd) == yd)
    else:
        rep.skip("y self-adjoint", "no *-structure")
    return rep


def action_is_trivial(pair: MatchedPair) -> bool:
    A, B = pair.A, pair.B
    return all(pair.act_basis(j, i) == scaled(A.counit[i], {j: ONE}) for j in range(B.dim) for i in range(A.dim))


def coaction_is_trivial(pair: MatchedPair) -> bool:
    A, B = pair.A, pair.B
    return all(pair.coact_basis(i) == {(z, i): s for z, s in B.unit.items()} for i in range(A.dim))


def legacy_condition(pair: MatchedPair, y: FinVec, modA: ModularData) -> bool:
    """Whether y b = b ⊲ delta_A for all b (only possible when y = 1)."""
    B = pair.B
    return all(B.mul(y.data, {j: ONE}) == pair.act({j: ONE}, modA.delta.data) for j in range(B.dim))


# ---------------------------------------------------------------------------
# integrals, modular element, scaling constant


def integrals_sharp(pair: MatchedPair, modA: ModularData, modB: ModularData, y: FinVec) -> tuple[FinVec, FinVec]:
    """psi#(ab) = psi_A(a) psi_B(b) and phi#(ab) = phi_A(a) phi_B(yb)."""
    A, B = pair.A, pair.B
    nB = B.dim
    phiB_y = [B.apply(modB.phi, B.mul(y.data, {j: ONE})) for j in range(nB)]
    psi, phi = {}, {}
    for i in range(A.dim):
        for j in range(nB):
            v = modA.psi[i] * modB.psi[j]
            if v:
                psi[i * nB + j] = v
            w = modA.phi[i] * phiB_y[j]
            if w:
                phi[i * nB + j] = w
    n = A.dim * nB
    return FinVec(n, psi), FinVec(n, phi)


def check_integrals_sharp(pair: MatchedPair, psi: FinVec, phi: FinVec, modA: ModularData, modB: ModularData) -> Report:
    rep = Report()
    h = bicrossproduct(pair)
    A, B = pair.A, pair.B
    from .hopf_core import leg_apply

    def inv_fail(f, leg):
        for x in range(h.dim):
            if leg_apply(h.comul_basis(x), f, leg) != scaled(f.data.get(x, ZERO), h.one()):
                yield {"x": h.labels[x]}

    rep.first_failure("psi# right invariant", inv_fail(psi, 0))
    rep.first_failure("phi# left invariant", inv_fail(phi, 1))
    rep.add("phi# = psi#∘S#", phi == compose_functional(psi, h.antipode))
    eA, eB = h.emb_A, h.emb_B

    def bab_fail():
        for j in range(B.dim):
            for i in range(A.dim):
                left = h.mul(eB({j: ONE}), eA({i: ONE}))
                if h.apply(psi, left) != modA.psi[i] * B.apply(modB.psi, {j: ONE}):
                    yield {"b": B.labels[j], "a": A.labels[i], "b'": "1"}
                for k in _b_samples(B):
                    if h.apply(psi, h.mul(left, eB({k: ONE}))) != modA.psi[i] * B.apply(modB.psi, B.mul_basis(j, k)):
                        yield {"b": B.labels[j], "a": A.labels[i], "b'": B.labels[k]}

    rep.first_failure("psi#(b a b') = psi_A(a) psi_B(bb')", bab_fail())
    return rep


def _b_samples(B: HopfData, limit: int = 24):
    if B.dim <= limit:
        return range(B.dim)
    step = B.dim // limit + 1
    return range(0, B.dim, step)


def delta_sharp(pair: MatchedPair, modA: ModularData, modB: ModularData, y: FinVec) -> FinVec:
    """delta# = delta_B y^-1 delta_A, computed in AB."""
    h = bicrossproduct(pair)
    B = pair.B
    y_inv = B.S(y.data)
    d = h.mul(h.emb_B(B.mul(modB.delta.data, y_inv)), h.emb_A(modA.delta.data))
    return FinVec(h.dim, d)


def check_delta_sharp(pair: MatchedPair, bmd: BicrossModularData, modA: ModularData, modB: ModularData) -> Report:
    rep = Report()
    h = bicrossproduct(pair)
    from .hopf_core import leg_apply

    d, di = bmd.delta.data, bmd.delta_inv.data
    rep.add("delta# group-like", h.comul(d) == outer(d, d) and h.eps(d) == 1 and h.mul(d, di) == h.one())

    def fail(f, leg, target):
        for x in range(h.dim):
            if leg_apply(h.comul_basis(x), f, leg) != scaled(f.data.get(x, ZERO), target):
                yield {"x": h.labels[x]}

    rep.first_failure("(ι⊗psi#)Delta#(x) = psi#(x) delta#^-1", fail(bmd.psi, 1, di))
    rep.first_failure("(phi#⊗ι)Delta#(x) = phi#(x) delta#", fail(bmd.phi, 0, d))
    B = pair.B
    eA, eB = h.emb_A, h.emb_B
    yi = B.S(bmd.y.data)
    lhs = h.mul(eB(B.mul(modB.delta.data, yi)), eA(modA.delta.data))
    rhs = h.mul(eA(modA.delta.data), eB(B.mul(yi, modB.delta.data)))
    rep.add("delta_B y^-1 delta_A = delta_A y^-1 delta_B", lhs == rhs)
    return rep


def tau_sharp(pair: MatchedPair, psi: FinVec):
    """The scalar with psi#∘S#^2 = tau# psi#."""
    h = bicrossproduct(pair)
    S = h.antipode
    t = proportionality(compose_functional(psi, S @ S), psi)
    if t is None:
        raise NotProportional("psi#∘S#^2 is not a multiple of psi#")
    return t


# ---------------------------------------------------------------------------
# gamma and the modular automorphisms


def gamma_map(pair: MatchedPair, modB: ModularData) -> LinMap:
    """gamma(a) in B with psi_B(b ⊲ a) = psi_B(b gamma(a)) for all b."""
    A, B = pair.A, pair.B
    G = gram(B, modB.psi)
    rhs = []
    for i in range(A.dim):
        r = {}
        for j in range(B.dim):
            v = B.apply(modB.psi, pair.act_basis(j, i))
            if v:
                r[j] = v
        rhs.append(r)
    res = solve_many(LinMap.from_rows(B.dim, G), rhs)
    if res is None or res[1]:
        raise DegenerateForm("the form (b, b') -> psi_B(bb') is degenerate")
    return LinMap(A.dim, B.dim, {i: v for i, v in enumerate(res[0])})


def check_gamma(pair: MatchedPair, gamma: LinMap, modB: ModularData) -> Report:
    rep = Report()
    A, B = pair.A, pair.B

    def fails():
        for i in range(A.dim):
            g = gamma.column(i)
            for j in range(B.dim):
                if B.apply(modB.psi, pair.act_basis(j, i)) != B.apply(modB.psi, B.mul({j: ONE}, g)):
                    yield {"a": A.labels[i], "b": B.labels[j]}

    rep.first_failure("psi_B(b ⊲ a) = psi_B(b gamma(a))", fails())
    trivial = all(gamma.column(i) == scaled(A.counit[i], B.one()) for i in range(A.dim))
    if action_is_trivial(pair):
        rep.add("gamma = eps_A(.)1 (trivial action)", trivial)
    else:
        rep.skip("gamma = eps_A(.)1 (trivial action)", "action is not trivial")
    invariant = all(
        B.apply(modB.psi, pair.act_basis(j, i)) == A.counit[i] * modB.psi[j] for i in range(A.dim) for j in range(B.dim)
    )
    if invariant:
        rep.add("gamma = eps_A(.)1 (invariant psi_B)", trivial)
    else:
        rep.skip("gamma = eps_A(.)1 (invariant psi_B)", "psi_B is not invariant")
    return rep


def sigma_prime_on_A(pair: MatchedPair, modA: ModularData, gamma: LinMap, i: int) -> dict:
    """sigma'#(a) = sum sigma'_A(a_(1)) gamma(S^-1(a_(2))) as an element of AB."""
    A = pair.A
    h = bicrossproduct(pair)
    out: dict = {}
    for (u, v), s in A.comul_basis(i).items():
        left = h.emb_A(modA.sigma_prime.column(u))
        right = h.emb_B(gamma.apply_dict(A.S_inv({v: ONE})))
        axpy(out, s, h.mul(left, right))
    return out


def sigma_sharp(pair: MatchedPair, modA: ModularData, modB: ModularData, gamma: LinMap, delta: FinVec, delta_inv: FinVec):
    """(sigma#, sigma'#) on AB from the factor data."""
    h = bicrossproduct(pair)
    A, B = pair.A, pair.B
    nB = B.dim
    on_A = [sigma_prime_on_A(pair, modA, gamma, i) for i in range(A.dim)]
    on_B = [h.emb_B(modB.sigma_prime.column(j)) for j in range(nB)]
    sp, s = {}, {}
    for i in range(A.dim):
        for j in range(nB):
            x = h.mul(on_A[i], on_B[j])
            sp[i * nB + j] = x
            s[i * nB + j] = h.mul(h.mul(delta_inv.data, x), delta.data)
    return LinMap(h.dim, h.dim, s), LinMap(h.dim, h.dim, sp)


def check_sigma(pair: MatchedPair, bmd: BicrossModularData, modB: ModularData, exhaustive_limit: int = 256) -> Report:
    rep = Report()
    h = bicrossproduct(pair)
    n = h.dim
    nB = pair.B.dim
    xs = range(n) if n <= exhaustive_limit else range(0, n, max(1, n // 64))
    for name, f, m in (("sigma#", bmd.phi, bmd.sigma), ("sigma'#", bmd.psi, bmd.sigma_prime)):

        def fails():
            for x in xs:
                mx = m.column(x)
                for yv in xs:
                    if h.apply(f, h.mul_basis(x, yv)) != h.apply(f, h.mul({yv: ONE}, mx)):
                        yield {"x": h.labels[x], "y": h.labels[yv]}

        rep.first_failure(f"{name}: f(xy) = f(y {name}(x))", fails())

    def on_B_fail():
        for j in range(nB):
            b = h.emb_B({j: ONE})
            if bmd.sigma.apply_dict(b) != h.emb_B(modB.sigma.column(j)):
                yield {"b": pair.B.labels[j], "map": "sigma#"}
            if bmd.sigma_prime.apply_dict(b) != h.emb_B(modB.sigma_prime.column(j)):
                yield {"b": pair.B.labels[j], "map": "sigma'#"}

    rep.first_failure("sigma# = sigma_B and sigma'# = sigma'_B on B", on_B_fail())
    d = bmd.delta.data
    rep.add("sigma'#(delta#) = delta# / tau#", bmd.sigma_prime.apply_dict(d) == scaled(ONE / bmd.tau, d))
    return rep


def sigma_prime_preserves_A(pair: MatchedPair, bmd: BicrossModularData) -> bool:
    """Does sigma'# map the copy of A inside AB into itself?"""
    h = bicrossproduct(pair)
    nB = pair.B.dim
    one_B = pair.B.one()
    for i in range(pair.A.dim):
        img = bmd.sigma_prime.apply_dict(h.emb_A({i: ONE}))
        per_a: dict = {}
        for p, s in img.items():
            a, b = divmod(p, nB)
            per_a.setdefault(a, {})[b] = s
        for a, bv in per_a.items():
            c = bv.get(min(one_B), ZERO) / one_B[min(one_B)]
            if bv != scaled(c, one_B):
                return False
    return True


# ---------------------------------------------------------------------------
# cointegral characters


def cointegral_homs(pair: MatchedPair, modB: ModularData) -> tuple[FinVec, FinVec]:
    """rho, eta with h ⊲ a = rho(a) h and k ⊲ a = eta(a) k."""
    if modB.h_left is None:
        modB = find_integrals(pair.B)
    A = pair.A
    out = []
    for c in (modB.h_left, modB.k_right):
        vals = {}
        for i in range(A.dim):
            img = FinVec(pair.B.dim, pair.act(c.data, {i: ONE}))
            t = proportionality(img, c)
            if t is None:
                raise NotProportional(f"cointegral ⊲ {A.labels[i]} is not a multiple of the cointegral")
            if t:
                vals[i] = t
        out.append(FinVec(A.dim, vals))
    return out[0], out[1]


def check_cointegral_homs(pair: MatchedPair, rho: FinVec, eta: FinVec) -> Report:
    rep = Report()
    A = pair.A
    for name, f in (("rho", rho), ("eta", eta)):
        mult = all(
            A.apply(f, A.mul_basis(i, k)) == f[i] * f[k] for i in range(A.dim) for k in range(A.dim)
        ) and A.apply(f, A.one()) == 1
        rep.add(f"{name} multiplicative", mult)
    rep.add("rho = eta", rho == eta)
    return rep


# ---------------------------------------------------------------------------
# *-structures


def _star_tensor(X: HopfData, Y: HopfData, T: dict) -> dict:
    out: dict = {}
    for (i, j), s in T.items():
        for u, x in X.star_basis(i).items():
            for v, y in Y.star_basis(j).items():
                _acc(out, (u, v), conj(s) * x * y)
    return out


def _positive_scale(h: HopfData, psi: FinVec):
    """A rational multiple of psi with psi(b* b) >= 0 at the first nonzero diagonal entry, or None."""
    for i in range(h.dim):
        v = h.apply(psi, h.mul(h.star_basis(i), {i: ONE}))
        if v:
            if not isinstance(v, type(ZERO)):
                return None
            return psi if v > 0 else psi * (-ONE)
    return None


def star_checks(pair: MatchedPair, bmd: BicrossModularData, modA: ModularData, modB: ModularData) -> Report:
    """Compatibility of the matched pair with the involutions and its consequences."""
    rep = Report()
    A, B = pair.A, pair.B
    if not (A.has_star and B.has_star):
        rep.skip("star compatibility", "A or B has no *-structure")
        return rep

    def act_fail():
        for j in range(B.dim):
            for i in range(A.dim):
                lhs = B.star(pair.act_basis(j, i))
                rhs = pair.act(B.star_basis(j), A.star(A.S({i: ONE})))
                if lhs != rhs:
                    yield {"b": B.labels[j], "a": A.labels[i]}

    rep.first_failure("(b ⊲ a)* = b* ⊲ S(a)*", act_fail())

    def coact_fail():
        for i in range(A.dim):
            lhs = pair.coact(A.star(A.S({i: ONE})))
            inner: dict = {}
            for (j, k), s in pair.coact_basis(i).items():
                for u, t in A.S({k: ONE}).items():
                    _acc(inner, (j, u), s * t)
            if lhs != _star_tensor(B, A, inner):
                yield {"a": A.labels[i]}

    rep.first_failure("Gamma(S(a)*) = ((ι⊗S)Gamma(a))*", coact_fail())
    rep.add("y self-adjoint", B.star(bmd.y.data) == bmd.y.data)
    h = bicrossproduct(pair)
    rep.add("delta# self-adjoint", h.star(bmd.delta.data) == bmd.delta.data)
    if bmd.rho is not None:
        ok = all(conj(A.apply(bmd.rho, A.star(A.S({i: ONE})))) == bmd.eta[i] for i in range(A.dim))
        rep.add("rho* = eta", ok)
    pA, pB = _positive_scale(A, modA.psi), _positive_scale(B, modB.psi)
    if pA is None or pB is None or not check_positivity(A, pA) or not check_positivity(B, pB):
        rep.skip("psi# positive", "psi_A or psi_B is not positive")
    else:
        res = check_positivity(h, bmd.psi * (pA[pA.first_nonzero()] / modA.psi[pA.first_nonzero()]) * (pB[pB.first_nonzero()] / modB.psi[pB.first_nonzero()]))
        rep.add("psi# positive", res.ok, {"min_eigenvalue": res.min_eigenvalue})
    return rep


# ---------------------------------------------------------------------------
# assembly and oracle comparison


def bicross_modular_data(pair: MatchedPair, modA: ModularData | None = None, modB: ModularData | None = None) -> BicrossModularData:
    """All modular data of the bicrossproduct from the factor formulas (no solving on AB)."""
    A, B = pair.A, pair.B
    modA = modA or find_integrals(A)
    modB = modB or find_integrals(B)
    y = compute_y(pair, modA)
    y_inv = FinVec(B.dim, B.S(y.data))
    psi, phi = integrals_sharp(pair, modA, modB, y)
    delta = delta_sharp(pair, modA, modB, y)
    h = bicrossproduct(pair)
    delta_inv = FinVec(h.dim, h.S(delta.data))
    tau = tau_sharp(pair, psi)
    gamma = gamma_map(pair, modB)
    sigma, sigma_prime = sigma_sharp(pair, modA, modB, gamma, delta, delta_inv)
    rho = eta = None
    if modB.h_left is not None:
        rho, eta = cointegral_homs(pair, modB)
    return BicrossModularData(y, y_inv, psi, phi, delta, delta_inv, tau, gamma, sigma, sigma_prime, rho, eta)


def oracle_checks(pair: MatchedPair, bmd: BicrossModularData, oracle: ModularData | None = None) -> Report:
    """Compare the assembled data with the modular data solved directly on AB."""
    rep = Report()
    h = bicrossproduct(pair)
    oracle = oracle or find_integrals(h, cointegrals=False)
    c = proportionality(bmd.psi, oracle.psi)
    rep.add("psi# matches the solved right integral", c is not None and c != 0)
    c2 = proportionality(bmd.phi, oracle.phi)
    rep.add("phi# matches the solved left integral", c2 is not None and c2 == c)
    rep.add("delta# matches the solved modular element", bmd.delta == oracle.delta, {"solved": h.label_of(oracle.delta.data)})
    rep.add("tau# matches the solved scaling constant", bmd.tau == oracle.tau, {"solved": str(oracle.tau)})
    rep.add("sigma# matches the solved modular automorphism", bmd.sigma == oracle.sigma)
    rep.add("sigma'# matches the solved modular automorphism", bmd.sigma_prime == oracle.sigma_prime)
    return rep


def tau_product_check(bmd: BicrossModularData, modA: ModularData, modB: ModularData) -> Report:
    rep = Report()
    rep.add("tau# = tau_A tau_B", bmd.tau == modA.tau * modB.tau, {"tau#": str(bmd.tau)})
    return rep


def gamma_counit_branch(pair: MatchedPair, gamma: LinMap, modA: ModularData) -> Report:
    """Compare gamma(a) with eps_A(sigma_A^-1(a)) 1; a witness is given when they differ."""
    rep = Report()
    A, B = pair.A, pair.B
    sig_inv = modA.sigma.inverse()
    one = B.one()
    bad = None
    for i in range(A.dim):
        target = scaled(A.eps(sig_inv.column(i)), one)
        if gamma.column(i) != target:
            bad = {"a": A.labels[i], "gamma(a)": B.label_of(gamma.column(i)), "eps(sigma^-1(a))": str(A.eps(sig_inv.column(i)))}
            break
    rep.add("gamma(a) = eps_A(sigma_A^-1(a)) 1", bad is None, bad)
    return rep


def gamma_non_scalar_witness(pair: MatchedPair, gamma: LinMap) -> dict | None:
    """A basis element a with gamma(a) outside the scalars, if one exists."""
    B = pair.B
    one = B.one()
    k = min(one)
    for i in range(pair.A.dim):
        g = gamma.column(i)
        if g != scaled(g.get(k, ZERO) / one[k], one):
            return {"a": pair.A.labels[i], "gamma(a)": B.label_of(g)}
    return None


def mirror_formula_checks(pair: MatchedPair, bmd: BicrossModularData, modA: ModularData, modB: ModularData) -> Report:
    """The closed forms for a mirror pair (B = A^cop with adjoint action and coaction)."""
    rep = Report()
    A = pair.A
    h = bicrossproduct(pair)
    nB = pair.B.dim
    dA, dAi = modA.delta.data, modA.delta_inv.data
    rep.add("y = delta_A", bmd.y.data == dA)
    psi_form = FinVec(h.dim, {i * nB + j: modA.psi[i] * modA.phi[j] for i in range(A.dim) for j in range(nB) if modA.psi[i] * modA.phi[j]})
    c = proportionality(bmd.psi, psi_form)
    rep.add("psi#(a#b) ∝ psi_A(a) phi_A(b)", c is not None and c != 0)
    phi_form = FinVec(
        h.dim,
        {
            i * nB + j: modA.phi[i] * A.apply(modA.psi, A.mul(dA, {j: ONE}))
            for i in range(A.dim)
            for j in range(nB)
            if modA.phi[i] * A.apply(modA.psi, A.mul(dA, {j: ONE}))
        },
    )
    c2 = proportionality(bmd.phi, phi_form)
    rep.add("phi#(a#b) ∝ phi_A(a) psi_A(delta_A b)", c2 is not None and c2 != 0)
    d_form = h.mul(h.emb_A(dA), h.emb_B(A.mul(dAi, dAi)))
    rep.add("delta# = delta_A # delta_A^-2", bmd.delta.data == d_form)

    def gamma_fail():
        for i in range(A.dim):
            g: dict = {}
            for (u, v), s in A.comul_basis(i).items():
                axpy(g, s, A.mul({v: ONE}, modA.sigma.apply_dict(A.S({u: ONE}))))
            if bmd.gamma.column(i) != g:
                yield {"a": A.labels[i]}

    rep.first_failure("gamma(a) = sum a_(2) sigma_A(S(a_(1)))", gamma_fail())

    def sp_fail():
        for i in range(A.dim):
            for j in range(nB):
                out: dict = {}
                for (a1, w), s in A.comul_basis(i).items():
                    for (a2, a3), t in A.comul_basis(w).items():
                        right = A.mul(A.mul(A.S_inv({a2: ONE}), modA.sigma.column(a3)), modB.sigma_prime.column(j))
                        axpy(out, s * t, h.mul(h.emb_A(modA.sigma_prime.column(a1)), h.emb_B(right)))
                if bmd.sigma_prime.column(i * nB + j) != out:
                    yield {"a": A.labels[i], "b": pair.B.labels[j]}

    rep.first_failure("sigma'#(a#b) = sum sigma'_A(a_(1)) # S^-1(a_(2)) sigma_A(a_(3)) sigma'_B(b)", sp_fail())
    return rep


def full_report(pair: MatchedPair, oracle: bool = True) -> tuple[Report, BicrossModularData, dict]:
    """Every check of this module on one verified finite pair.

    Returns the report, the assembled data and informational values.
    """
    A, B = pair.A, pair.B
    modA = find_integrals(A)
    modB = find_integrals(B)
    bmd = bicross_modular_data(pair, modA, modB)
    rep = Report()
    rep.extend(check_y_properties(pair, bmd.y, modA), "y: ")
    rep.extend(check_integrals_sharp(pair, bmd.psi, bmd.phi, modA, modB), "integrals: ")
    rep.extend(check_delta_sharp(pair, bmd, modA, modB), "modular element: ")
    rep.extend(tau_product_check(bmd, modA, modB), "scaling constant: ")
    rep.extend(check_gamma(pair, bmd.gamma, modB), "gamma: ")
    rep.extend(check_sigma(pair, bmd, modB), "modular automorphisms: ")
    if bmd.rho is not None:
        rep.extend(check_cointegral_homs(pair, bmd.rho, bmd.eta), "cointegrals: ")
    rep.extend(star_checks(pair, bmd, modA, modB), "star: ")
    if oracle:
        rep.extend(oracle_checks(pair, bmd), "oracle: ")
    info = {
        "legacy condition yb = b ⊲ delta_A": legacy_condition(pair, bmd.y, modA),
        "sigma'# preserves A": sigma_prime_preserves_A(pair, bmd),
        "action trivial": action_is_trivial(pair),
        "coaction trivial": coaction_is_trivial(pair),
    }
    return rep, bmd, info


# ---------------------------------------------------------------------------
# JSON


def _vec(v) -> list:
    from .exactlin import scalar_to_json

    data = v.data if isinstance(v, FinVec) else v
    return [[k, scalar_to_json(s)] for k, s in sorted(data.items())]


def _map(m: LinMap) -> list:
    return [_vec(m.column(j)) for j in range(m.dom)]


def modular_report_json(pair: MatchedPair, rep: Report, bmd: BicrossModularData, info: dict) -> dict:
    from .exactlin import scalar_to_json

    h = bicrossproduct(pair)
    values = {
        "y": _vec(bmd.y),
        "y_label": pair.B.label_of(bmd.y.data),
        "psi#": _vec(bmd.psi),
        "phi#": _vec(bmd.phi),
        "delta#": _vec(bmd.delta),
        "delta#_label": h.label_of(bmd.delta.data),
        "tau#": scalar_to_json(bmd.tau),
        "gamma": _map(bmd.gamma),
        "sigma#": _map(bmd.sigma),
        "sigma'#": _map(bmd.sigma_prime),
    }
    if bmd.rho is not None:
        values["rho"] = _vec(bmd.rho)
        values["eta"] = _vec(bmd.eta)
    return {
        "schema": "modular_report.v1",
        "pair": pair.name,
        "dim": h.dim,
        "ok": rep.ok,
        "checks": rep.to_json(),
        "values": values,
        "info": info,
    }
