"""Ready-made Hopf algebras and matched pairs.

* Taft algebras (Sweedler's algebra is the case n = 2), the smallest Hopf
  algebras with nontrivial modular element and S^4 != id for n >= 3.
* Matched pairs of groups ``G = KH`` giving ``C[H] # F(K)``, including the
  Heisenberg groups over Z_p with the nilpotent-ring actions.
* The mirror construction on any finite-dimensional Hopf algebra, with the
  isomorphisms ``theta`` and ``eta`` to the tensor product.
* Pairs with trivial action built from a group acting by Hopf automorphisms,
  and checks for the trivial coaction and fixed point properties.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bicross import (
    GroupPairInfo,
    MatchedPair,
    bicrossproduct,
    twist_R,
    twist_Rop,
    verify_matched,
)
from .exactlin import ONE, ZERO, LinMap, _Echelon, axpy, nullspace_rows, scaled, zeta
from .hopf_core import (
    HopfData,
    coopposite,
    find_integrals,
    is_iso,
    outer,
    proportionality,
    tensor_hopf,
)
from .mult_group import (
    GroupSpec,
    LazyGroupPair,
    cyclic,
    function_algebra,
    group_algebra,
    heisenberg_p,
    integers,
    symmetric,
)
from .report import Report


class NonPrimitiveRoot(ValueError):
    pass


class InvalidFactorization(ValueError):
    pass


def _acc(d, k, v):
    nv = d.get(k, ZERO) + v
    if nv:
        d[k] = nv
    else:
        d.pop(k, None)


# ---------------------------------------------------------------------------
# Taft algebras


def taft_algebra(n: int, q=None) -> HopfData:
    """Taft(n, q): basis g^i x^j (index i*n + j), g^n = 1, x^n = 0, xg = q gx.

    Delta(g) = g⊗g, Delta(x) = x⊗1 + g⊗x, S(g) = g^-1, S(x) = -g^-1 x.
    The *-structure g* = g, x* = x is always defined.
    """
    q = zeta(n) if q is None else q
    if q ** n != 1 or any(q ** k == 1 for k in range(1, n)):
        raise NonPrimitiveRoot(f"{q} is not a primitive {n}-th root of unity")
    dim = n * n

    def idx(i, j):
        return (i % n) * n + j

    mult = {}
    for i, j, k, l in itertools.product(range(n), repeat=4):
        if j + l < n:
            mult[(idx(i, j), idx(k, l))] = {idx(i + k, j + l): q ** (j * k)}
    labels = []
    for i in range(n):
        for j in range(n):
            parts = [("g" if i == 1 else f"g^{i}") if i else "", ("x" if j == 1 else f"x^{j}") if j else ""]
            labels.append("".join(parts) or "1")
    g, x = {idx(1, 0): ONE}, {idx(0, 1): ONE}
    alg = HopfData(labels, mult, {0: ONE}, [{} for _ in range(dim)], [ZERO] * dim, lambda i: {})

    def power(v, k, mul, one):
        r = one
        for _ in range(k):
            r = mul(r, v)
        return r

    one2 = {(0, 0): ONE}
    dg = {(idx(1, 0), idx(1, 0)): ONE}
    dx = {(idx(0, 1), 0): ONE, (idx(1, 0), idx(0, 1)): ONE}
    ginv = {idx(n - 1, 0): ONE}
    sx = alg.mul(ginv, scaled(-ONE, x))
    comult, anti, star, counit = [], [], [], []
    for i in range(n):
        for j in range(n):
            comult.append(alg.tmul(power(dg, i, alg.tmul, one2), power(dx, j, alg.tmul, one2)))
            anti.append(alg.mul(power(sx, j, alg.mul, {0: ONE}), power(ginv, i, alg.mul, {0: ONE})))
            star.append(alg.mul(power(x, j, alg.mul, {0: ONE}), power(g, i, alg.mul, {0: ONE})))
            counit.append(ONE if j == 0 else ZERO)
    name = "Sweedler" if n == 2 else f"Taft({n})"
    return HopfData(labels, mult, {0: ONE}, comult, counit, anti, star=star, generators=[g, x], name=name)


def sweedler_algebra() -> HopfData:
    return taft_algebra(2, -ONE)


def antipode_power_is_identity(h: HopfData, k: int) -> bool:
    m = LinMap.identity(h.dim)
    for _ in range(k):
        m = h.antipode @ m
    return m.is_identity()


# ---------------------------------------------------------------------------
# matched pairs of groups


@dataclass
class FactorizationSpec:
    """A matched pair of groups: ``hk = (h ⊳ k)(h ⊲ k)`` in an ambient group.

    ``lact(h, k) = h ⊳ k`` is in K and ``ract(h, k) = h ⊲ k`` is in H.
    """

    H: GroupSpec
    K: GroupSpec
    lact: object
    ract: object
    G: GroupSpec | None = None
    name: str = ""

    @classmethod
    def from_subgroups(cls, G: GroupSpec, K_elems, H_elems, name=""):
        K_elems, H_elems = list(K_elems), list(H_elems)
        decomp = {}
        for k in K_elems:
            for h in H_elems:
                g = G.mul(k, h)
                if g in decomp:
                    raise InvalidFactorization("K ∩ H is not trivial")
                decomp[g] = (k, h)
        if len(decomp) != G.order:
            raise InvalidFactorization("G is not KH")
        K = _subgroup(G, K_elems, "K")
        H = _subgroup(G, H_elems, "H")
        lt, rt = {}, {}
        for h in H_elems:
            for k in K_elems:
                k2, h2 = decomp[G.mul(h, k)]
                lt[(h, k)], rt[(h, k)] = k2, h2
        return cls(H, K, lambda h, k: lt[(h, k)], lambda h, k: rt[(h, k)], G, name)

    def info(self) -> GroupPairInfo:
        return GroupPairInfo(self.H, self.K, self.lact, self.ract)

    def check(self) -> Report:
        from .bicross import check_group_pair

        rep = check_group_pair(self.info())
        if self.G is not None:
            G = self.G

            def fails():
                for h in self.H.elements:
                    for k in self.K.elements:
                        if G.mul(h, k) != G.mul(self.lact(h, k), self.ract(h, k)):
                            yield {"h": self.H.label(h), "k": self.K.label(k)}

            rep.first_failure("hk = (h⊳k)(h⊲k)", fails())
        return rep


def _subgroup(G: GroupSpec, elems, tag):
    s = set(elems)
    for a in elems:
        for b in elems:
            if G.mul(a, b) not in s:
                raise InvalidFactorization(f"{tag} is not a subgroup")
    return GroupSpec(f"{tag}<{G.name}", G.mul, G.inv, G.identity, elems, fmt=G.label, ref={"order": len(elems), "table": [[elems.index(G.mul(a, b)) for b in elems] for a in elems]})


def s3_factorization() -> FactorizationSpec:
    """S3 = A3 · <(0 1)>; the action of H on K is inversion, the other one trivial."""
    G = symmetric(3)
    e = G.identity
    r = (1, 2, 0)
    K = [e, r, G.mul(r, r)]
    H = [e, (1, 0, 2)]
    return FactorizationSpec.from_subgroups(G, K, H, "S3")


def z6_factorization() -> FactorizationSpec:
    """Z6 = Z3 × Z2 inside Z6; both actions trivial."""
    return FactorizationSpec.from_subgroups(cyclic(6), [0, 2, 4], [0, 3], "Z6")


def nilpotent_matched_pair(p: int) -> FactorizationSpec:
    """Unitriangular groups over Z_p with the nilpotent-ring actions.

    H holds (q, r, s) for the matrix [[1, s, r], [0, 1, q], [0, 0, 1]] and K
    holds (s, q, r) for [[1, 0, 0], [s, 1, 0], [r, q, 1]].  Then
    ``(q,r,s) ⊳ (s',q',r') = (s', q', r' - q s')`` and
    ``(q,r,s) ⊲ (s',q',r') = (q, r - q' s, s)``.
    """
    if p < 2 or p > 13 or any(p % d == 0 for d in range(2, p)):
        raise ValueError("p must be a prime at most 13")
    H = heisenberg_p(p, "H")
    K = heisenberg_p(p, "K")

    def lact(h, k):
        return (k[0], k[1], (k[2] - h[0] * k[0]) % p)

    def ract(h, k):
        return (h[0], (h[1] - k[1] * h[2]) % p, h[2])

    return FactorizationSpec(H, K, lact, ract, None, f"Heisenberg-p{p}")


def group_matched_pair(f: FactorizationSpec, name: str = "") -> MatchedPair:
    """A = C[H], B = F(K), delta_k ⊲ h = delta_{h^-1 ⊳ k}, Gamma(h) = sum_k delta_k ⊗ (h ⊲ k)."""
    H, K = f.H, f.K
    A = group_algebra(H)
    B = function_algebra(K)
    Hs, Ks = H.elements, K.elements

    def action(j, i):
        return {K.index(f.lact(H.inv(Hs[i]), Ks[j])): ONE}

    def coaction(i):
        return {(K.index(k), H.index(f.ract(Hs[i], k))): ONE for k in Ks}

    return MatchedPair(A, B, action, coaction, name=name or f.name, group=f.info())


def automorphic_actions_check(info) -> Report:
    """h ⊳ (kk') = (h ⊳ k)(h ⊳ k') and (hh') ⊲ k = (h ⊲ k)(h' ⊲ k), exhaustively.

    These are the group-level forms of "B is a module bi-algebra" and "A is a
    comodule bi-algebra" for A = C[H], B = F(K).
    """
    H, K = info.H, info.K
    rep = Report()

    def left():
        for h in H.elements:
            for k in K.elements:
                hk = info.lact(h, k)
                for k2 in K.elements:
                    if info.lact(h, K.mul(k, k2)) != K.mul(hk, info.lact(h, k2)):
                        yield {"h": H.label(h), "k": K.label(k), "k'": K.label(k2)}

    def right():
        for k in K.elements:
            for h in H.elements:
                hk = info.ract(h, k)
                for h2 in H.elements:
                    if info.ract(H.mul(h, h2), k) != H.mul(hk, info.ract(h2, k)):
                        yield {"h": H.label(h), "h'": H.label(h2), "k": K.label(k)}

    rep.first_failure("h⊳(kk') = (h⊳k)(h⊳k')", left())
    rep.first_failure("(hh')⊲k = (h⊲k)(h'⊲k)", right())
    return rep


def lazy_group_pair(f: FactorizationSpec, name: str = "") -> LazyGroupPair:
    return LazyGroupPair(f.H, f.K, f.lact, f.ract, name=name or f.name)


def dihedral_action_pair() -> FactorizationSpec:
    """D_inf = Z ⋊ Z2 with K = Z normal: h ⊳ k = (-1)^h k, h ⊲ k = h.

    The action on F(Z) is nontrivial and the coaction is trivial.
    """
    return FactorizationSpec(cyclic(2), integers(), lambda h, k: -k if h else k, lambda h, k: h, None, "Dinf-action")


def dihedral_coaction_pair() -> FactorizationSpec:
    """D_inf = Z2 ⋉ Z with H = Z normal: h ⊳ k = k, h ⊲ k = (-1)^k h.

    The action on F(Z2) is trivial and the coaction is nontrivial.
    """
    return FactorizationSpec(integers(), cyclic(2), lambda h, k: k, lambda h, k: -h if k else h, None, "Dinf-coaction")


# ---------------------------------------------------------------------------
# mirror construction


def mirror_pair(A: HopfData, name: str = "") -> MatchedPair:
    """B = A^cop, b ⊲ a = sum S(a_(1)) b a_(2), Gamma(a) = sum S(a_(1)) a_(3) ⊗ a_(2)."""
    B = coopposite(A)
    B.name = f"{A.name}^cop"

    def action(j, i):
        out: dict = {}
        for (u, v), s in A.comul_basis(i).items():
            axpy(out, s, A.mul(A.mul(A.S({u: ONE}), {j: ONE}), {v: ONE}))
        return out

    def coaction(i):
        out: dict = {}
        for (u, w), s in A.comul_basis(i).items():
            for (v1, v2), t in A.comul_basis(w).items():
                # a_(1) = u, a_(2) = v1, a_(3) = v2
                for k, c in A.mul(A.S({u: ONE}), {v2: ONE}).items():
                    _acc(out, (k, v1), s * t * c)
        return out

    mp = MatchedPair(A, B, action, coaction, name=name or f"mirror-{A.name}")
    mp.mirror = True
    return mp


def theta_iso(pair: MatchedPair) -> LinMap:
    """theta(a ⊗ b) = sum a_(1) # S(a_(2)) b from A ⊗ B to AB (same index layout)."""
    A, B = pair.A, pair.B
    nB = B.dim

    def col(p):
        i, j = divmod(p, nB)
        out: dict = {}
        for (u, v), s in A.comul_basis(i).items():
            for w, t in B.mul(A.S({v: ONE}), {j: ONE}).items():
                _acc(out, u * nB + w, s * t)
        return out

    n = A.dim * nB
    return LinMap.from_function(n, n, col)


def eta_iso(dpair) -> LinMap:
    """eta(c ⊗ d) = sum c d_(1) # d_(2) from C ⊗ D to CD.

    D is the dual of A^cop, so it shares its basis with C and d_(1) is
    multiplied in C.
    """
    C, D = dpair.C, dpair.D
    nD = D.dim

    def col(p):
        c, d = divmod(p, nD)
        out: dict = {}
        for (u, v), s in D.comul_basis(d).items():
            for w, t in C.mul_basis(c, u).items():
                _acc(out, w * nD + v, s * t)
        return out

    n = C.dim * nD
    return LinMap.from_function(n, n, col)


def theta_checks(pair: MatchedPair) -> Report:
    """theta is a Hopf isomorphism and transports the integral and modular element."""
    rep = Report()
    A, B = pair.A, pair.B
    h = bicrossproduct(pair)
    T = tensor_hopf(A, B)
    th = theta_iso(pair)
    rep.extend(is_iso(T, h, th), "theta: ")
    mA, mB = find_integrals(A, cointegrals=False), find_integrals(B, cointegrals=False)
    from .bicross_integrals import compute_y, delta_sharp, integrals_sharp

    y = compute_y(pair, mA)
    psi_s, phi_s = integrals_sharp(pair, mA, mB, y)
    nB = B.dim
    ok = all(h.apply(phi_s, th.column(i * nB + j)) == mA.phi[i] * mB.phi[j] for i in range(A.dim) for j in range(nB))
    rep.add("phi#∘theta = phi_A ⊗ phi_B", ok)
    ds = delta_sharp(pair, mA, mB, y)
    dd = outer(mA.delta.data, mB.delta.data)
    img = th.apply_dict({i * nB + j: s for (i, j), s in dd.items()})
    rep.add("theta(delta_A ⊗ delta_B) = delta#", img == ds.data, {"theta": h.label_of(img), "delta#": h.label_of(ds.data)})
    return rep


def s_sharp_mirror_check(pair: MatchedPair) -> Report:
    """S#(a#b) = sum S(a_(2)) # S^2(a_(1)) S^-1(b) S^-1(a_(3)) and S#∘theta = theta∘(S ⊗ S^-1)."""
    rep = Report()
    A = pair.A
    h = bicrossproduct(pair)
    nB = pair.B.dim
    S, Sinv = A.S, A.S_inv

    def formula(i, j):
        out: dict = {}
        for (a1, w), s in A.comul_basis(i).items():
            for (a2, a3), t in A.comul_basis(w).items():
                right = A.mul(A.mul(S(S({a1: ONE})), Sinv({j: ONE})), Sinv({a3: ONE}))
                for u, x in S({a2: ONE}).items():
                    for v, y in right.items():
                        _acc(out, u * nB + v, s * t * x * y)
        return out

    def fails():
        for i in range(A.dim):
            for j in range(nB):
                if h.S({i * nB + j: ONE}) != formula(i, j):
                    yield {"a": A.labels[i], "b": pair.B.labels[j]}

    rep.first_failure("S# mirror formula", fails())
    th = theta_iso(pair)

    def fails_theta():
        for i in range(A.dim):
            for j in range(nB):
                lhs = h.S(th.column(i * nB + j))
                # S^-1 here is S_A^-1, which is the antipode of B = A^cop
                arg = {u * nB + v: x * y for u, x in S({i: ONE}).items() for v, y in Sinv({j: ONE}).items()}
                if lhs != th.apply_dict(arg):
                    yield {"a": A.labels[i], "b": pair.B.labels[j]}

    rep.first_failure("S#∘theta = theta∘(S ⊗ S^-1)", fails_theta())
    return rep


# ---------------------------------------------------------------------------
# trivial action: groups acting by Hopf automorphisms


def is_hopf_automorphism(A: HopfData, m: LinMap) -> bool:
    return is_iso(A, A, m).ok


def trivial_action_pair(b0: HopfData, b1: HopfData, gamma1, A: HopfData, name: str = "") -> MatchedPair:
    """B = B0 ⊗ B1, Gamma(a) = 1 ⊗ Gamma1(a), trivial action of A on B.

    ``gamma1(i)`` gives Gamma1(a_i) as a dict keyed by (B1 index, A index).
    """
    B = tensor_hopf(b0, b1)
    n1 = b1.dim

    def action(j, i):
        e = A.counit[i]
        return {j: e} if e else {}

    def coaction(i):
        out: dict = {}
        for (u, k), s in gamma1(i).items():
            for z, t in b0.unit.items():
                _acc(out, (z * n1 + u, k), s * t)
        return out

    return MatchedPair(A, B, action, coaction, name=name or f"trivial-action-{A.name}")


def automorphism_coaction(A: HopfData, G: GroupSpec, alpha):
    """Gamma(a)(delta_p ⊗ 1) = delta_p ⊗ alpha_{p^-1}(a) for an action alpha: p -> LinMap."""

    def gamma1(i):
        out: dict = {}
        for pi, p in enumerate(G.elements):
            for k, s in alpha(G.inv(p)).column(i).items():
                out[(pi, k)] = s
        return out

    return gamma1


def sweedler_sign_automorphism(A: HopfData | None = None) -> LinMap:
    """The Hopf automorphism g -> g, x -> -x of Sweedler's algebra."""
    A = A or sweedler_algebra()
    return LinMap(A.dim, A.dim, {i: {i: ONE if i % 2 == 0 else -ONE} for i in range(A.dim)})


def relative_invariance(A: HopfData, G: GroupSpec, alpha) -> dict:
    """nu(p) with phi∘alpha_p = nu(p) phi, checked also for psi."""
    md = find_integrals(A, cointegrals=False)
    from .hopf_core import compose_functional

    nu = {}
    for p in G.elements:
        a = alpha(p)
        c = proportionality(compose_functional(md.phi, a), md.phi)
        c2 = proportionality(compose_functional(md.psi, a), md.psi)
        if c is None or c != c2:
            raise ValueError("integrals are not relatively invariant")
        nu[p] = c
    return nu


def sweedler_z2_pair() -> MatchedPair:
    """A = Sweedler, B = Sweedler ⊗ F(Z2), Z2 acting on A by x -> -x."""
    A = sweedler_algebra()
    G = cyclic(2)
    sign = sweedler_sign_automorphism(A)
    alpha = {0: LinMap.identity(A.dim), 1: sign}
    pair = trivial_action_pair(sweedler_algebra(), function_algebra(G), automorphism_coaction(A, G, alpha.__getitem__), A, name="trivial-action-aut")
    pair.automorphism = (G, alpha)
    return pair


def trivial_coaction_check(A: HopfData, B: HopfData, action, coaction=None) -> Report:
    """With trivial coaction, B must be a module bi-algebra and R = R^op; the pair is then verified."""
    rep = Report()
    triv = [{(z, i): s for z, s in B.unit.items()} for i in range(A.dim)]
    if coaction is not None:
        given = [coaction(i) for i in range(A.dim)]
        rep.add("coaction is trivial", given == triv)
    pair = MatchedPair(A, B, action, triv, name="trivial-coaction")
    rep.extend(module_bialgebra_check(pair))
    R, Rop = twist_R(pair), twist_Rop(pair)
    wit = None
    if R != Rop:
        q = next(q for q in range(R.dom) if R.column(q) != Rop.column(q))
        j, i = divmod(q, A.dim)
        wit = {"b": B.labels[j], "a": A.labels[i]}
    rep.add("R = R^op", R == Rop, wit)
    if rep.ok:
        rep.add("pair verified", verify_matched(pair).ok)
    return rep


def module_bialgebra_check(pair: MatchedPair) -> Report:
    """Delta_B(b ⊲ a) = sum (b_(1) ⊲ a_(1)) ⊗ (b_(2) ⊲ a_(2)) on all basis elements."""
    rep = Report()
    A, B = pair.A, pair.B

    def fails():
        for j in range(B.dim):
            for i in range(A.dim):
                lhs = B.comul(pair.act_basis(j, i))
                rhs: dict = {}
                for (b1, b2), s in B.comul_basis(j).items():
                    for (a1, a2), t in A.comul_basis(i).items():
                        for k, c in outer(pair.act_basis(b1, a1), pair.act_basis(b2, a2)).items():
                            _acc(rhs, k, s * t * c)
                if lhs != rhs:
                    yield {"b": B.labels[j], "a": A.labels[i]}

    rep.first_failure("module bi-algebra", fails())
    return rep


def comodule_bialgebra_check(pair: MatchedPair) -> Report:
    """Gamma(aa') = Gamma(a) Gamma(a') on basis pairs."""
    rep = Report()
    A, B = pair.A, pair.B

    def prod(X, Y):
        out: dict = {}
        for (b, a), s in X.items():
            for (b2, a2), t in Y.items():
                p = B.mul_basis(b, b2)
                if not p:
                    continue
                for u, x in p.items():
                    for v, y in A.mul_basis(a, a2).items():
                        _acc(out, (u, v), s * t * x * y)
        return out

    def fails():
        for i in range(A.dim):
            for k in range(A.dim):
                if pair.coact(A.mul_basis(i, k)) != prod(pair.coact_basis(i), pair.coact_basis(k)):
                    yield {"a": A.labels[i], "a'": A.labels[k]}

    rep.first_failure("comodule bi-algebra", fails())
    return rep


def nontrivial_witnesses(pair: MatchedPair) -> dict:
    """A basis pair with b ⊲ a != eps(a) b and a basis a with Gamma(a) != 1 ⊗ a (or None)."""
    A, B = pair.A, pair.B
    act = None
    for j in range(B.dim):
        for i in range(A.dim):
            if pair.act_basis(j, i) != scaled(A.counit[i], {j: ONE}):
                act = {"b": B.labels[j], "a": A.labels[i]}
                break
        if act:
            break
    coact = None
    for i in range(A.dim):
        if pair.coact_basis(i) != {(z, i): s for z, s in B.unit.items()}:
            coact = {"a": A.labels[i]}
            break
    return {"action": act, "coaction": coact}


def fixed_point_check(pair: MatchedPair) -> Report:
    """The left leg of Gamma(A) lies in the fixed point algebra of the action."""
    rep = Report()
    A, B = pair.A, pair.B
    rep.extend(comodule_bialgebra_check(pair))
    ech = _Echelon(B.dim)
    for i in range(A.dim):
        legs: dict = {}
        for (j, k), s in pair.coact_basis(i).items():
            legs.setdefault(k, {})[j] = s
        for v in legs.values():
            ech.add(v)
    left_leg = list(ech.rows.values())

    def fixed(m):
        return all(pair.act(m, {i: ONE}) == scaled(A.counit[i], m) for i in range(A.dim))

    bad = next((m for m in left_leg if not fixed(m)), None)
    rep.add("left leg of Gamma(A) is fixed", bad is None, None if bad is None else {"m": B.label_of(bad)})
    rows = []
    for i in range(A.dim):
        eqs: dict = {}
        for j in range(B.dim):
            for r, v in pair.act_basis(j, i).items():
                _acc(eqs.setdefault(r, {}), j, v)
            if A.counit[i]:
                _acc(eqs.setdefault(j, {}), j, -A.counit[i])
        rows.extend(eqs.values())
    fixed_basis = nullspace_rows(rows, B.dim)
    closed = all(fixed(B.mul(u, v)) for u in fixed_basis for v in fixed_basis)
    rep.add("fixed points form a subalgebra", closed, {"dim": len(fixed_basis)})
    return rep


# ---------------------------------------------------------------------------
# registry


def _group_s3():
    return group_matched_pair(s3_factorization(), "group-s3")


def _group_z6():
    return group_matched_pair(z6_factorization(), "group-z6")


def _heis(p):
    return lambda: group_matched_pair(nilpotent_matched_pair(p), f"heisenberg-p{p}")


def _mirror(make, name):
    return lambda: mirror_pair(make(), name)


def _z4_algebra():
    return group_algebra(cyclic(4))


def _z2_algebra():
    return group_algebra(cyclic(2))


GALLERY = {
    "group-s3": _group_s3,
    "group-z6": _group_z6,
    "heisenberg-p3": _heis(3),
    "mirror-sweedler": _mirror(sweedler_algebra, "mirror-sweedler"),
    "mirror-taft3": _mirror(lambda: taft_algebra(3), "mirror-taft3"),
    "trivial-action-aut": sweedler_z2_pair,
}

EXTRA = {
    "heisenberg-p2": _heis(2),
    "mirror-z2": _mirror(_z2_algebra, "mirror-z2"),
    "mirror-z4": _mirror(_z4_algebra, "mirror-z4"),
    "mirror-s3": _mirror(lambda: group_algebra(symmetric(3)), "mirror-s3"),
    "mirror-taft4": _mirror(lambda: taft_algebra(4), "mirror-taft4"),
}

LAZY = {
    "dinf-action": lambda: lazy_group_pair(dihedral_action_pair()),
    "dinf-coaction": lambda: lazy_group_pair(dihedral_coaction_pair()),
}


def gallery_names() -> list[str]:
    return sorted(GALLERY) + sorted(EXTRA)


def build(name: str) -> MatchedPair:
    if name in GALLERY:
        return GALLERY[name]()
    if name in EXTRA:
        return EXTRA[name]()
    raise KeyError(f"unknown gallery pair {name!r}; known: {', '.join(gallery_names())}")


# ---------------------------------------------------------------------------
# negative controls


def broken_antipode_sweedler() -> HopfData:
    """Sweedler's algebra with the antipode replaced by the identity."""
    A = sweedler_algebra()
    A._S = LinMap.identity(A.dim)
    A._S_inv = None
    return A


def broken_cross_relation_pair() -> MatchedPair:
    """The mirror pair on Sweedler with its coaction replaced by the trivial one."""
    p = mirror_pair(sweedler_algebra(), "broken-cross")
    A, B = p.A, p.B
    triv = [{(z, i): s for z, s in B.unit.items()} for i in range(A.dim)]
    return MatchedPair(A, B, lambda j, i: p.act_basis(j, i), triv, name="broken-cross")


def broken_coassociativity_pair() -> MatchedPair:
    """The S3 group pair with Gamma(h)(delta_k ⊗ 1) = delta_k ⊗ pi_k(h) for a
    permutation family pi_k that is not a right action of K on H."""
    f = s3_factorization()
    p = group_matched_pair(f, "broken-coassoc")
    H, K = f.H, f.K
    Hs, Ks = H.elements, K.elements
    # the transposition (0 1) is sent to itself except at one nonidentity k
    bad_k = Ks[1]

    def coaction(i):
        out = {}
        for k in Ks:
            h = Hs[i]
            if k == bad_k:
                h = Hs[1 - i]
            out[(K.index(k), H.index(h))] = ONE
        return out

    return MatchedPair(p.A, p.B, lambda j, i: p.act_basis(j, i), coaction, name="broken-coassoc")


def sweedler_adjoint_trivial_coaction() -> Report:
    """Sweedler acting on its coopposite by the adjoint action, with trivial coaction."""
    A = sweedler_algebra()
    mp = mirror_pair(A)
    return trivial_coaction_check(A, mp.B, lambda j, i: mp.act_basis(j, i))
