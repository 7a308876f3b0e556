"""Finite-dimensional duality for Hopf algebras and matched pairs.

The dual of a Hopf algebra is built on the dual basis, so the canonical
pairing is the identity matrix.  A first-type pair (A, B) dualizes to a
second-type pair (C, D) = (A^, B^) with

    <a, d ⊳ c> = <Gamma(a), d ⊗ c>        and     <b ⊗ a, Gamma(d)> = <b ⊲ a, d>,

and the bicrossproduct CD is then dual to AB under <ab, cd> = <a, c><b, d>.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bicross import (
    MatchedPair,
    SecondTypePair,
    bicrossproduct,
    cotwist_T,
    cotwist_T2,
    cotwist_Top,
    cotwist_Top2,
    twist_R,
    twist_R2,
    twist_Rop,
    twist_Rop2,
)
from .bicross_integrals import cointegral_homs, compute_y
from .exactlin import ONE, ZERO, LinMap, conj, scalar_to_json, zeta
from .hopf_core import HopfData, find_integrals, is_iso, same_structure, tensor_hopf
from .report import Report


def _acc(d, k, v):
    nv = d.get(k, ZERO) + v
    if nv:
        d[k] = nv
    else:
        d.pop(k, None)


# ---------------------------------------------------------------------------
# duals of Hopf algebras


def dual_hopf(h: HopfData, name: str = "") -> HopfData:
    """The dual Hopf algebra on the dual basis e^i (labels ``d<label>``).

    Product is the transpose of Delta, Delta the transpose of the product,
    S the transpose of S.  If h has an involution, c* is defined by
    <a, c*> = conj(<S(a)*, c>).
    """
    n = h.dim
    mult: dict = {}
    for k in range(n):
        for (i, j), s in h.comul_basis(k).items():
            mult.setdefault((i, j), {})[k] = s
    comult = [dict() for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, s in h.mul_basis(i, j).items():
                comult[k][(i, j)] = s
    unit = {k: v for k, v in enumerate(h.counit) if v}
    counit = [h.unit.get(k, ZERO) for k in range(n)]
    anti = h.antipode.transpose()
    star = None
    if h.has_star:
        cols = [dict() for _ in range(n)]
        for i in range(n):
            for k, s in h.star(h.S({i: ONE})).items():
                cols[k][i] = conj(s)
        star = cols
    labels = [f"d{l}" if len(l) == 1 or l.isalnum() else f"d({l})" for l in h.labels]
    d = HopfData(labels, mult, unit, comult, counit, anti, star=star, name=name or f"{h.name}^")
    return d


@dataclass
class PairingData:
    """A bilinear form <x, c> between two Hopf algebras; ``matrix[i]`` = {j: <x_i, c_j>}."""

    left: HopfData
    right: HopfData
    matrix: list

    @classmethod
    def canonical(cls, h: HopfData, dual: HopfData) -> "PairingData":
        return cls(h, dual, [{i: ONE} for i in range(h.dim)])

    def pair(self, x: dict, c: dict):
        s = ZERO
        for i, a in x.items():
            row = self.matrix[i]
            for j, b in c.items():
                v = row.get(j)
                if v:
                    s = s + a * b * v
        return s

    def pair2(self, X: dict, Y: dict):
        """<x ⊗ y, c ⊗ d> = <x, c><y, d> extended linearly."""
        s = ZERO
        for (i, j), a in X.items():
            ri, rj = self.matrix[i], self.matrix[j]
            for (k, l), b in Y.items():
                u = ri.get(k)
                if u:
                    v = rj.get(l)
                    if v:
                        s = s + a * b * u * v
        return s

    def as_linmap(self) -> LinMap:
        return LinMap.from_rows(self.right.dim, self.matrix)

    def check(self) -> Report:
        rep = Report()
        X, Y = self.left, self.right
        M = self.as_linmap()
        rep.add("pairing nondegenerate", X.dim == Y.dim and M.rank() == X.dim, {"rank": M.rank()})

        def prod_fail():
            for i in range(X.dim):
                for j in range(X.dim):
                    xy = X.mul_basis(i, j)
                    for k in range(Y.dim):
                        if self.pair(xy, {k: ONE}) != self.pair2({(i, j): ONE}, Y.comul_basis(k)):
                            yield {"x": X.labels[i], "y": X.labels[j], "c": Y.labels[k]}

        def coprod_fail():
            for k in range(Y.dim):
                for l in range(Y.dim):
                    cd = Y.mul_basis(k, l)
                    for i in range(X.dim):
                        if self.pair({i: ONE}, cd) != self.pair2(X.comul_basis(i), {(k, l): ONE}):
                            yield {"x": X.labels[i], "c": Y.labels[k], "d": Y.labels[l]}

        def anti_fail():
            for i in range(X.dim):
                for k in range(Y.dim):
                    if self.pair(X.S({i: ONE}), {k: ONE}) != self.pair({i: ONE}, Y.S({k: ONE})):
                        yield {"x": X.labels[i], "c": Y.labels[k]}

        rep.first_failure("<xy, c> = <x ⊗ y, Delta(c)>", prod_fail())
        rep.first_failure("<x, cd> = <Delta(x), c ⊗ d>", coprod_fail())
        rep.first_failure("<S(x), c> = <x, S(c)>", anti_fail())
        units = all(self.pair(X.one(), {k: ONE}) == Y.counit[k] for k in range(Y.dim)) and all(
            self.pair({i: ONE}, Y.one()) == X.counit[i] for i in range(X.dim)
        )
        rep.add("<1, c> = eps(c) and <x, 1> = eps(x)", units)
        return rep

    def to_json(self) -> dict:
        n, m = self.left.dim, self.right.dim
        dense = [[scalar_to_json(self.matrix[i].get(j, ZERO)) for j in range(m)] for i in range(n)]
        return {"schema": "pairing.v1", "left": self.left.name, "right": self.right.name, "rows": n, "cols": m, "matrix": dense}


def pairing_from_json(d: dict, left: HopfData, right: HopfData) -> PairingData:
    from .exactlin import scalar_from_json

    if d.get("schema") != "pairing.v1":
        raise ValueError("not a pairing.v1 document")
    rows = []
    for r in d["matrix"]:
        row = {}
        for j, v in enumerate(r):
            s = scalar_from_json(v)
            if s:
                row[j] = s
        rows.append(row)
    return PairingData(left, right, rows)


def double_dual_check(h: HopfData) -> Report:
    """The evaluation map h -> h^^ is the identity on indices and a Hopf isomorphism."""
    rep = Report()
    dd = dual_hopf(dual_hopf(h))
    rep.add("double dual has the same structure constants", same_structure(h, dd))
    return rep


def find_taft_iso(h: HopfData, n: int, q=None) -> LinMap | None:
    """A Hopf isomorphism Taft(n, q) -> h, searching group-likes with root-of-unity coordinates.

    Only meant for small dimension (n = 2 has 3^4 candidates).
    """
    from .exactlin import nullspace_rows
    from .gallery import taft_algebra

    q = zeta(n) if q is None else q
    T = taft_algebra(n, q)
    if h.dim != T.dim:
        return None
    roots = [ZERO] + [zeta(n) ** k for k in range(n)] if n > 2 else [ZERO, ONE, -ONE]
    one = h.one()
    candidates = []
    for coords in itertools.product(roots, repeat=h.dim):
        c = {i: v for i, v in enumerate(coords) if v}
        if not c or c == one:
            continue
        if h.eps(c) == 1 and h.comul(c) == {(i, j): a * b for i, a in c.items() for j, b in c.items()}:
            candidates.append(c)
    for G in candidates:
        # (G, 1)-skew primitives: Delta(X) = X ⊗ 1 + G ⊗ X, a linear condition on X
        rows = []
        for key in set(itertools.product(range(h.dim), repeat=2)):
            row: dict = {}
            for i in range(h.dim):
                v = h.comul_basis(i).get(key, ZERO)
                v = v - one.get(key[1], ZERO) * (ONE if key[0] == i else ZERO)
                v = v - G.get(key[0], ZERO) * (ONE if key[1] == i else ZERO)
                if v:
                    row[i] = v
            if row:
                rows.append(row)
        # X in span(1 - G) gives a singular map and is rejected by the rank test
        for X in nullspace_rows(rows, h.dim):
            cols = {}
            for i in range(n):
                for j in range(n):
                    v = dict(one)
                    for _ in range(i):
                        v = h.mul(v, G)
                    for _ in range(j):
                        v = h.mul(v, X)
                    cols[i * n + j] = v
            f = LinMap(T.dim, h.dim, cols)
            if f.rank() == h.dim and is_iso(T, h, f).ok:
                return f
    return None


# ---------------------------------------------------------------------------
# dual matched pairs


def dualize_pair(pair: MatchedPair, name: str = "") -> SecondTypePair:
    """The second-type pair (A^, B^) with the transposed action and coaction."""
    A, B = pair.A, pair.B
    C, D = dual_hopf(A), dual_hopf(B)
    act: dict = {}
    for i in range(A.dim):
        for (j, k), s in pair.coact_basis(i).items():
            act.setdefault((j, k), {})[i] = s
    coact: dict = {}
    for j in range(B.dim):
        for i in range(A.dim):
            for l, s in pair.act_basis(j, i).items():
                coact.setdefault(l, {})[(j, i)] = s
    dp = SecondTypePair(
        C,
        D,
        lambda d, c: dict(act.get((d, c), {})),
        lambda d: dict(coact.get(d, {})),
        name=name or f"dual-{pair.name}",
    )
    dp.primal = pair
    return dp


def dual_pair_checks(pair: MatchedPair, dp: SecondTypePair) -> Report:
    """<a, d ⊳ c> = <Gamma(a), d ⊗ c> and <b ⊗ a, Gamma(d)> = <b ⊲ a, d> on all basis elements."""
    rep = Report()
    A, B = pair.A, pair.B

    def act_fail():
        for i in range(A.dim):
            G = pair.coact_basis(i)
            for j in range(B.dim):
                for k in range(A.dim):
                    if dp.act_basis(j, k).get(i, ZERO) != G.get((j, k), ZERO):
                        yield {"a": A.labels[i], "d": dp.D.labels[j], "c": dp.C.labels[k]}

    def coact_fail():
        for l in range(B.dim):
            G = dp.coact_basis(l)
            for j in range(B.dim):
                for i in range(A.dim):
                    if G.get((j, i), ZERO) != pair.act_basis(j, i).get(l, ZERO):
                        yield {"b": B.labels[j], "a": A.labels[i], "d": dp.D.labels[l]}

    rep.first_failure("<a, d ⊳ c> = <Gamma(a), d ⊗ c>", act_fail())
    rep.first_failure("<b ⊗ a, Gamma(d)> = <b ⊲ a, d>", coact_fail())
    return rep


def adjoint_T(pair: MatchedPair) -> LinMap:
    """T on C ⊗ D defined by <b ⊗ a, T(c ⊗ d)> = <R(b ⊗ a), c ⊗ d>: the transpose of R."""
    return twist_R(pair).transpose()


def adjoint_Rop(pair: MatchedPair) -> LinMap:
    """R^op on D ⊗ C defined by <a ⊗ b, R^op(d ⊗ c)> = <T^op(a ⊗ b), d ⊗ c>."""
    return cotwist_Top(pair).transpose()


def adjoint_checks(pair: MatchedPair, dp: SecondTypePair) -> Report:
    """Adjoints of the primal twists agree with the dual-side formulas, and T is obtained both ways."""
    rep = Report()
    Rop, T = twist_Rop(pair), cotwist_T(pair)
    R2, Rop2, T2, Top2 = twist_R2(dp), twist_Rop2(dp), cotwist_T2(dp), cotwist_Top2(dp)
    aT, aRop = adjoint_T(pair), adjoint_Rop(pair)
    rep.add("adjoint of R = T on C ⊗ D", aT == T2)
    rep.add("adjoint of T^op = R^op on D ⊗ C", aRop == Rop2)
    rep.add("adjoint of R^op = T^op on C ⊗ D", Rop.transpose() == Top2)
    rep.add("adjoint of T = R on D ⊗ C", T.transpose() == R2)
    for name, m in (("T", aT), ("R^op", aRop)):
        rep.add(f"adjoint {name} bijective", m.rank() == m.dom)
    # second route: T = T^op∘R^op∘R^-1 on the dual side
    try:
        routed = Top2 @ Rop2 @ R2.inverse()
        rep.add("T by transposition = T via T^op∘R^op∘R^-1", routed == aT)
    except Exception as e:  # singular R
        rep.add("T by transposition = T via T^op∘R^op∘R^-1", False, {"error": str(e)})
    rep.add("T∘R = T^op∘R^op on the dual side", T2 @ R2 == Top2 @ Rop2)
    return rep


def dual_bicross_pairing(pair: MatchedPair, dp: SecondTypePair) -> PairingData:
    """<ab, cd> = <a, c><b, d> between AB and CD (identity on indices i*nB + j)."""
    AB, CD = bicrossproduct(pair), bicrossproduct(dp)
    return PairingData(AB, CD, [{p: ONE} for p in range(AB.dim)])


def verify_dual_bicrossproduct(pair: MatchedPair, dp: SecondTypePair | None = None) -> Report:
    """CD is the dual Hopf algebra of AB under the tensor product pairing.

    Checks that the pairing is a nondegenerate Hopf pairing, that the explicit
    map dual_hopf(AB) -> CD (e^(ab) -> c_a d_b) is a Hopf isomorphism, and that
    every functional psi_A(. a') psi_B(. b') on AB equals
    psi#(. sigma'#(sigma'_B^-1(b') sigma'_A^-1(a'))).
    """
    from .bicross import verify_matched
    from .bicross_integrals import bicross_modular_data

    dp = dp or dualize_pair(pair)
    rep = Report()
    rep.extend(dual_pair_checks(pair, dp), "dual pair: ")
    rep.extend(verify_matched(dp), "dual pair: ")
    rep.extend(adjoint_checks(pair, dp), "adjoints: ")
    P = dual_bicross_pairing(pair, dp)
    rep.extend(P.check(), "pairing: ")
    AB, CD = P.left, P.right
    iso = LinMap.identity(AB.dim)
    rep.extend(is_iso(dual_hopf(AB), CD, iso), "dual(AB) -> CD: ")
    A, B = pair.A, pair.B
    modA, modB = find_integrals(A, cointegrals=False), find_integrals(B, cointegrals=False)
    bmd = bicross_modular_data(pair, modA, modB)
    nB = B.dim
    sAi, sBi = modA.sigma_prime.inverse(), modB.sigma_prime.inverse()

    def decomp_fail():
        for i2 in range(A.dim):
            for j2 in range(nB):
                z = AB.mul(AB.emb_B(sBi.column(j2)), AB.emb_A(sAi.column(i2)))
                w = bmd.sigma_prime.apply_dict(z)
                for i in range(A.dim):
                    for j in range(nB):
                        lhs = A.apply(modA.psi, A.mul_basis(i, i2)) * B.apply(modB.psi, B.mul_basis(j, j2))
                        if lhs != AB.apply(bmd.psi, AB.mul({i * nB + j: ONE}, w)):
                            yield {"a'": A.labels[i2], "b'": B.labels[j2], "a": A.labels[i], "b": B.labels[j]}

    rep.first_failure("product functionals are psi#-shifts", decomp_fail())
    return rep


def dual_y_characters(pair: MatchedPair, dp: SecondTypePair) -> Report:
    """rho = eta, and both equal a -> <a, y> where y is the distinguished element of the dual pair."""
    rep = Report()
    modB = find_integrals(pair.B)
    rho, eta = cointegral_homs(pair, modB)
    modD = find_integrals(dp.D, cointegrals=False)
    y = compute_y(dp, modD)
    rep.add("rho = eta", rho == eta)
    via_y = [y[i] for i in range(pair.A.dim)]
    rep.add("eta(a) = <a, y_dual>", [eta[i] for i in range(pair.A.dim)] == via_y, {"y_dual": dp.C.label_of(y.data)})
    return rep


def star_duality(pair: MatchedPair, dp: SecondTypePair | None = None) -> Report:
    """Star compatibility transfers to the dual pair, and the involution of CD is the dual one of AB."""
    rep = Report()
    dp = dp or dualize_pair(pair)
    C, D = dp.C, dp.D
    if not (C.has_star and D.has_star):
        rep.skip("dual star compatibility", "no *-structure")
        return rep

    def act_fail():
        for j in range(D.dim):
            for k in range(C.dim):
                lhs = C.star(dp.act_basis(j, k))
                rhs = dp.act(D.star(D.S({j: ONE})), C.star_basis(k))
                if lhs != rhs:
                    yield {"d": D.labels[j], "c": C.labels[k]}

    def coact_fail():
        for j in range(D.dim):
            lhs = dp.coact(D.star(D.S({j: ONE})))
            inner: dict = {}
            for (d, c), s in dp.coact_basis(j).items():
                for u, t in D.S({d: ONE}).items():
                    _acc(inner, (u, c), s * t)
            star_inner: dict = {}
            for (d, c), s in inner.items():
                for u, x in D.star_basis(d).items():
                    for v, y in C.star_basis(c).items():
                        _acc(star_inner, (u, v), conj(s) * x * y)
            if lhs != star_inner:
                yield {"d": D.labels[j]}

    rep.first_failure("(d ⊳ c)* = S(d)* ⊳ c*", act_fail())
    rep.first_failure("Gamma(S(d)*) = ((S ⊗ ι)Gamma(d))*", coact_fail())
    AB, CD = bicrossproduct(pair), bicrossproduct(dp)
    dAB = dual_hopf(AB)
    rep.add("involution of CD is the dual involution of AB", all(CD.star_basis(p) == dAB.star_basis(p) for p in range(CD.dim)))
    return rep


def dual_of_group_pair_check(pair: MatchedPair, dp: SecondTypePair) -> Report:
    """For C[H] # F(K): k ⊳ f = f(. ⊲ k) and Gamma(k)(1 ⊗ delta_h) = (h ⊳ k) ⊗ delta_h.

    Here C = F(H) (dual basis delta_h) and D = C[K] (dual basis of F(K) is K).
    """
    rep = Report()
    info = pair.group
    if info is None:
        rep.skip("group pair dual formulas", "not a group pair")
        return rep
    H, K = info.H, info.K

    def act_fail():
        for kk in K.elements:
            for h in H.elements:
                # k ⊳ delta_h is the function h' -> [h' ⊲ k = h]
                target = {H.index(h2): ONE for h2 in H.elements if info.ract(h2, kk) == h}
                if dp.act_basis(K.index(kk), H.index(h)) != target:
                    yield {"k": K.label(kk), "h": H.label(h)}

    def coact_fail():
        for kk in K.elements:
            G = dp.coact_basis(K.index(kk))
            for h in H.elements:
                part = {d: s for (d, c), s in G.items() if c == H.index(h)}
                if part != {K.index(info.lact(h, kk)): ONE}:
                    yield {"k": K.label(kk), "h": H.label(h)}

    rep.first_failure("k ⊳ f = f(. ⊲ k)", act_fail())
    rep.first_failure("Gamma(k)(1 ⊗ delta_h) = (h ⊳ k) ⊗ delta_h", coact_fail())
    return rep


def mirror_dual_check(pair: MatchedPair, dp: SecondTypePair) -> Report:
    """For a mirror pair: Gamma(d) = sum d_(2) ⊗ S(d_(1)) d_(3) and d ⊳ c = sum S(d_(1)) c d_(2).

    D = (A^cop)^ is identified with C^op, so the products on the C leg are taken in C.
    """
    rep = Report()
    C, D = dp.C, dp.D

    def act_fail():
        for j in range(D.dim):
            for k in range(C.dim):
                out: dict = {}
                for (u, v), s in D.comul_basis(j).items():
                    for w, t in C.mul(C.mul(C.S({u: ONE}), {k: ONE}), {v: ONE}).items():
                        _acc(out, w, s * t)
                if dp.act_basis(j, k) != out:
                    yield {"d": D.labels[j], "c": C.labels[k]}

    def coact_fail():
        for j in range(D.dim):
            out: dict = {}
            for (u, w), s in D.comul_basis(j).items():
                for (v1, v2), t in D.comul_basis(w).items():
                    for x, r in C.mul(C.S({u: ONE}), {v2: ONE}).items():
                        _acc(out, (v1, x), s * t * r)
            if dp.coact_basis(j) != out:
                yield {"d": D.labels[j]}

    rep.first_failure("d ⊳ c = sum S(d_(1)) c d_(2)", act_fail())
    rep.first_failure("Gamma(d) = sum d_(2) ⊗ S(d_(1)) d_(3)", coact_fail())
    return rep


def eta_pairing_check(pair: MatchedPair, dp: SecondTypePair) -> Report:
    """eta is a Hopf isomorphism C ⊗ D -> CD and <theta(a ⊗ b), eta(c ⊗ d)> = <a, c><b, d>
    on all basis quadruples (mirror pairs)."""
    from .gallery import eta_iso, theta_iso

    rep = Report()
    th, et = theta_iso(pair), eta_iso(dp)
    rep.extend(is_iso(tensor_hopf(dp.C, dp.D), bicrossproduct(dp), et), "eta: ")
    n = th.dom
    P = dual_bicross_pairing(pair, dp)

    def fails():
        for p in range(n):
            tp = th.column(p)
            for q in range(n):
                if P.pair(tp, et.column(q)) != (ONE if p == q else ZERO):
                    yield {"a⊗b": p, "c⊗d": q}

    rep.first_failure("<theta(a ⊗ b), eta(c ⊗ d)> = <a, c><b, d>", fails())
    return rep
