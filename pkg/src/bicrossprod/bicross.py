"""Matched pairs and their bicrossproducts.

A pair of the first type consists of Hopf algebras A and B, a right action
``b ⊲ a`` of A on B and a left coaction ``Gamma: A -> B ⊗ A``.  The smash
product AB lives on A ⊗ B (basis index ``i * dim B + j`` for ``a_i b_j``)
with the commutation rule ``b a = sum a_(1) (b ⊲ a_(2))`` and the coproduct
``Delta#(ab) = sum (a_(1) ⊗ 1) Gamma(a_(2)) Delta_B(b)``.

A pair of the second type has a left action ``d ⊳ c`` of D on C and a right
coaction ``Gamma: D -> D ⊗ C``; the algebra CD has ``d c = sum (d_(1) ⊳ c)
d_(2)`` and ``Delta#(cd) = sum (c_(1) ⊗ c_(2)) Gamma(d_(1)) (1 ⊗ d_(2))``.

Verification is operational: the action and coaction axioms, the twist map
identities and the full Hopf axioms of the constructed algebra are checked.
For pairs coming from a matched pair of groups the group-level axioms are
checked exhaustively as well.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .exactlin import ONE, ZERO, LinMap, SingularMap, axpy, scaled, solve_many
from .hopf_core import (
    HopfData,
    algebra_generators,
    hopf_from_json,
    hopf_to_json,
    outer,
    resolve_mode,
    verify_hopf,
)
from .report import Report


class SingularTwist(ValueError):
    pass


def _acc(d, k, v):
    nv = d.get(k, ZERO) + v
    if nv:
        d[k] = nv
    else:
        d.pop(k, None)


@dataclass
class GroupPairInfo:
    """Group-level data behind C[H] # F(K): ``hk = (h ⊳ k)(h ⊲ k)``."""

    H: object
    K: object
    lact: object  # (h, k) -> h ⊳ k in K
    ract: object  # (h, k) -> h ⊲ k in H


class MatchedPair:
    """A pair of the first type (A acts on B from the right, B coacts on A).

    ``action(j, i)`` returns ``b_j ⊲ a_i`` as a dict over B; ``coaction(i)``
    returns ``Gamma(a_i)`` as a dict keyed by ``(j, i')`` for ``b_j ⊗ a_i'``.
    Both may also be given as tables (dict / list).
    """

    kind = "first"

    def __init__(self, A: HopfData, B: HopfData, action, coaction, name="", group: GroupPairInfo | None = None):
        self.A, self.B = A, B
        self.name = name
        self.group = group
        if callable(action):
            self._act_fn, self._act = action, {}
        else:
            self._act_fn, self._act = None, dict(action)
        if callable(coaction):
            self._coact = [None] * A.dim
            self._coact_fn = coaction
        else:
            self._coact = [dict(c) for c in coaction]
            self._coact_fn = None
        self._bicross = None
        self.status = None  # Report once verified

    def act_basis(self, j, i) -> dict:
        r = self._act.get((j, i))
        if r is None:
            if self._act_fn is None:
                return {}
            r = self._act[(j, i)] = self._act_fn(j, i)
        return r

    def act(self, b: dict, a: dict) -> dict:
        out: dict = {}
        for j, s in b.items():
            for i, t in a.items():
                axpy(out, s * t, self.act_basis(j, i))
        return out

    def coact_basis(self, i) -> dict:
        r = self._coact[i]
        if r is None:
            r = self._coact[i] = self._coact_fn(i)
        return r

    def coact(self, a: dict) -> dict:
        out: dict = {}
        for i, s in a.items():
            axpy(out, s, self.coact_basis(i))
        return out

    @property
    def verified(self) -> bool:
        return self.status is not None and self.status.ok

    def __repr__(self):
        return f"MatchedPair({self.name or 'unnamed'}: {self.A.name}, {self.B.name})"


class SecondTypePair:
    """A pair of the second type: left action of D on C, right coaction of C on D.

    ``action(d, c)`` returns ``d ⊳ c`` as a dict over C; ``coaction(d)``
    returns ``Gamma(d)`` as a dict keyed by ``(d', c')``.
    """

    kind = "second"

    def __init__(self, C: HopfData, D: HopfData, action, coaction, name=""):
        self.C, self.D = C, D
        self.name = name
        self._act_fn = action if callable(action) else None
        self._act = {} if callable(action) else dict(action)
        self._coact_fn = coaction if callable(coaction) else None
        self._coact = [None] * D.dim if callable(coaction) else [dict(c) for c in coaction]
        self._bicross = None
        self.status = None
        self.group = None

    def act_basis(self, d, c) -> dict:
        r = self._act.get((d, c))
        if r is None:
            if self._act_fn is None:
                return {}
            r = self._act[(d, c)] = self._act_fn(d, c)
        return r

    def act(self, d: dict, c: dict) -> dict:
        out: dict = {}
        for u, s in d.items():
            for v, t in c.items():
                axpy(out, s * t, self.act_basis(u, v))
        return out

    def coact_basis(self, d) -> dict:
        r = self._coact[d]
        if r is None:
            r = self._coact[d] = self._coact_fn(d)
        return r

    def coact(self, d: dict) -> dict:
        out: dict = {}
        for u, s in d.items():
            axpy(out, s, self.coact_basis(u))
        return out

    @property
    def verified(self) -> bool:
        return self.status is not None and self.status.ok

    def __repr__(self):
        return f"SecondTypePair({self.name or 'unnamed'}: {self.C.name}, {self.D.name})"


# ---------------------------------------------------------------------------
# twist and cotwist maps


def _map_on_basis(dom, cod, f) -> LinMap:
    return LinMap.from_function(dom, cod, f)


def twist_R(pair: MatchedPair) -> LinMap:
    """R(b ⊗ a) = sum a_(1) ⊗ (b ⊲ a_(2)), from B⊗A to A⊗B."""
    A, B = pair.A, pair.B
    nA, nB = A.dim, B.dim

    def col(q):
        j, i = divmod(q, nA)
        out: dict = {}
        for (u, v), s in A.comul_basis(i).items():
            for w, t in pair.act_basis(j, v).items():
                _acc(out, u * nB + w, s * t)
        return out

    return _map_on_basis(nA * nB, nA * nB, col)


def twist_Rop(pair: MatchedPair) -> LinMap:
    """R^op(b ⊗ a) = sum a_(2) ⊗ (b ⊲ a_(1))."""
    A, B = pair.A, pair.B
    nA, nB = A.dim, B.dim

    def col(q):
        j, i = divmod(q, nA)
        out: dict = {}
        for (u, v), s in A.comul_basis(i).items():
            for w, t in pair.act_basis(j, u).items():
                _acc(out, v * nB + w, s * t)
        return out

    return _map_on_basis(nA * nB, nA * nB, col)


def cotwist_T(pair: MatchedPair) -> LinMap:
    """T(a ⊗ b) = Gamma(a)(b ⊗ 1), from A⊗B to B⊗A."""
    A, B = pair.A, pair.B
    nA, nB = A.dim, B.dim

    def col(p):
        i, j = divmod(p, nB)
        out: dict = {}
        for (s_, t_), c in pair.coact_basis(i).items():
            for w, x in B.mul_basis(s_, j).items():
                _acc(out, w * nA + t_, c * x)
        return out

    return _map_on_basis(nA * nB, nA * nB, col)


def cotwist_Top(pair: MatchedPair) -> LinMap:
    """T^op(a ⊗ b) = (b ⊗ 1) Gamma(a)."""
    A, B = pair.A, pair.B
    nA, nB = A.dim, B.dim

    def col(p):
        i, j = divmod(p, nB)
        out: dict = {}
        for (s_, t_), c in pair.coact_basis(i).items():
            for w, x in B.mul_basis(j, s_).items():
                _acc(out, w * nA + t_, c * x)
        return out

    return _map_on_basis(nA * nB, nA * nB, col)


def twist_R2(pair: SecondTypePair) -> LinMap:
    """R(d ⊗ c) = sum (d_(1) ⊳ c) ⊗ d_(2), from D⊗C to C⊗D."""
    C, D = pair.C, pair.D
    nC, nD = C.dim, D.dim

    def col(q):
        d, c = divmod(q, nC)
        out: dict = {}
        for (u, v), s in D.comul_basis(d).items():
            for w, t in pair.act_basis(u, c).items():
                _acc(out, w * nD + v, s * t)
        return out

    return _map_on_basis(nC * nD, nC * nD, col)


def twist_Rop2(pair: SecondTypePair) -> LinMap:
    """R^op(d ⊗ c) = sum (d_(2) ⊳ c) ⊗ d_(1)."""
    C, D = pair.C, pair.D
    nC, nD = C.dim, D.dim

    def col(q):
        d, c = divmod(q, nC)
        out: dict = {}
        for (u, v), s in D.comul_basis(d).items():
            for w, t in pair.act_basis(v, c).items():
                _acc(out, w * nD + u, s * t)
        return out

    return _map_on_basis(nC * nD, nC * nD, col)


def cotwist_T2(pair: SecondTypePair) -> LinMap:
    """T(c ⊗ d) = (1 ⊗ c) Gamma(d), from C⊗D to D⊗C."""
    C, D = pair.C, pair.D
    nC, nD = C.dim, D.dim

    def col(p):
        c, d = divmod(p, nD)
        out: dict = {}
        for (u, v), s in pair.coact_basis(d).items():
            for w, t in C.mul_basis(c, v).items():
                _acc(out, u * nC + w, s * t)
        return out

    return _map_on_basis(nC * nD, nC * nD, col)


def cotwist_Top2(pair: SecondTypePair) -> LinMap:
    """T^op(c ⊗ d) = Gamma(d)(1 ⊗ c)."""
    C, D = pair.C, pair.D
    nC, nD = C.dim, D.dim

    def col(p):
        c, d = divmod(p, nD)
        out: dict = {}
        for (u, v), s in pair.coact_basis(d).items():
            for w, t in C.mul_basis(v, c).items():
                _acc(out, u * nC + w, s * t)
        return out

    return _map_on_basis(nC * nD, nC * nD, col)


def twists(pair):
    """(R, R^op, T, T^op) for either kind of pair."""
    if pair.kind == "first":
        return twist_R(pair), twist_Rop(pair), cotwist_T(pair), cotwist_Top(pair)
    return twist_R2(pair), twist_Rop2(pair), cotwist_T2(pair), cotwist_Top2(pair)


# ---------------------------------------------------------------------------
# the bicrossproduct


def _first_type(pair: MatchedPair) -> HopfData:
    A, B = pair.A, pair.B
    nA, nB = A.dim, B.dim

    def mult(p, q):
        i, j = divmod(p, nB)
        k, l = divmod(q, nB)
        out: dict = {}
        bl = {l: ONE}
        for (u, v), s in A.comul_basis(k).items():
            left = A.mul_basis(i, u)
            if not left:
                continue
            right = B.mul(pair.act_basis(j, v), bl)
            for x, c in left.items():
                for y, d in right.items():
                    _acc(out, x * nB + y, s * c * d)
        return out

    def comult(p):
        i, j = divmod(p, nB)
        out: dict = {}
        DB = B.comul_basis(j)
        for (a1, a2), s in A.comul_basis(i).items():
            for (bs, at), t in pair.coact_basis(a2).items():
                for (b1, b2), r in DB.items():
                    for w, c in B.mul_basis(bs, b1).items():
                        _acc(out, (a1 * nB + w, at * nB + b2), s * t * r * c)
        return out

    one_A, one_B = A.unit, B.unit
    unit = {i * nB + j: s * t for i, s in one_A.items() for j, t in one_B.items()}
    counit = [A.counit[i] * B.counit[j] for i in range(nA) for j in range(nB)]
    gens = [{i * nB + j: s * t for i, s in g.items() for j, t in one_B.items()} for g in algebra_generators(A)]
    gens += [{i * nB + j: s * t for i, s in one_A.items() for j, t in g.items()} for g in algebra_generators(B)]
    labels = [f"{a}#{b}" for a in A.labels for b in B.labels]
    h = HopfData(labels, mult, unit, comult, counit, lambda p: {}, generators=gens, name=pair.name + "#" if pair.name else f"{A.name}#{B.name}")

    def emb_B(b):
        return {i * nB + j: s * t for i, s in one_A.items() for j, t in b.items()}

    def emb_A(a):
        return {i * nB + j: s * t for i, s in a.items() for j, t in one_B.items()}

    def anti(p):
        # S#(ab) = sum S_B(a_(-1) b) S_A(a_(0))
        i, j = divmod(p, nB)
        out: dict = {}
        for (bs, at), c in pair.coact_basis(i).items():
            left = emb_B(B.S(B.mul_basis(bs, j)))
            right = emb_A(A.S({at: ONE}))
            axpy(out, c, h.mul(left, right))
        return out

    h._S_fn = anti
    h._S = None
    if A.has_star and B.has_star:
        # (ab)* = b* a*
        def star(p):
            i, j = divmod(p, nB)
            return h.mul(emb_B(B.star_basis(j)), emb_A(A.star_basis(i)))

        h._star_fn = star
    h.emb_A, h.emb_B = emb_A, emb_B
    return h


def _second_type(pair: SecondTypePair) -> HopfData:
    C, D = pair.C, pair.D
    nC, nD = C.dim, D.dim

    def mult(p, q):
        c, d = divmod(p, nD)
        c2, d2 = divmod(q, nD)
        out: dict = {}
        dd = {d2: ONE}
        for (u, v), s in D.comul_basis(d).items():
            left = C.mul({c: ONE}, pair.act_basis(u, c2))
            if not left:
                continue
            right = D.mul({v: ONE}, dd)
            for x, a in left.items():
                for y, b in right.items():
                    _acc(out, x * nD + y, s * a * b)
        return out

    def comult(p):
        c, d = divmod(p, nD)
        out: dict = {}
        DD = D.comul_basis(d)
        for (c1, c2), s in C.comul_basis(c).items():
            for (d1, d2), t in DD.items():
                for (dp, cp), r in pair.coact_basis(d1).items():
                    for w, x in C.mul_basis(c2, cp).items():
                        _acc(out, (c1 * nD + dp, w * nD + d2), s * t * r * x)
        return out

    unit = {i * nD + j: s * t for i, s in C.unit.items() for j, t in D.unit.items()}
    counit = [C.counit[i] * D.counit[j] for i in range(nC) for j in range(nD)]
    gens = [{i * nD + j: s * t for i, s in g.items() for j, t in D.unit.items()} for g in algebra_generators(C)]
    gens += [{i * nD + j: s * t for i, s in C.unit.items() for j, t in g.items()} for g in algebra_generators(D)]
    labels = [f"{c}#{d}" for c in C.labels for d in D.labels]
    h = HopfData(labels, mult, unit, comult, counit, lambda p: {}, generators=gens, name=pair.name + "#" if pair.name else f"{C.name}#{D.name}")

    def emb_C(c):
        return {i * nD + j: s * t for i, s in c.items() for j, t in D.unit.items()}

    def emb_D(d):
        return {i * nD + j: s * t for i, s in C.unit.items() for j, t in d.items()}

    def anti(p):
        # S#(cd) = sum S_D(d_(0)) S_C(c d_(1))
        c, d = divmod(p, nD)
        out: dict = {}
        for (dp, cp), s in pair.coact_basis(d).items():
            left = emb_D(D.S({dp: ONE}))
            right = emb_C(C.S(C.mul_basis(c, cp)))
            axpy(out, s, h.mul(left, right))
        return out

    h._S_fn = anti
    h._S = None
    if not _antipode_ok(h):
        h._S = solve_antipode(h)
    if C.has_star and D.has_star:

        def star(p):
            c, d = divmod(p, nD)
            return h.mul(emb_D(D.star_basis(d)), emb_C(C.star_basis(c)))

        h._star_fn = star
    h.emb_C, h.emb_D = emb_C, emb_D
    return h


def _antipode_ok(h: HopfData) -> bool:
    one = h.one()
    for i in range(h.dim):
        target = scaled(h.counit[i], one)
        left: dict = {}
        for (a, b), s in h.comul_basis(i).items():
            axpy(left, s, h.mul(h.S({a: ONE}), {b: ONE}))
        if left != target:
            return False
    return True


def solve_antipode(h: HopfData) -> LinMap:
    """The convolution inverse of the identity, by one exact linear solve.

    Unknowns are the matrix entries S[r][u]; the equations are
    sum S(x_(1)) x_(2) = eps(x) 1 for every basis x.
    """
    n = h.dim
    rows = []
    rhs = []
    for x in range(n):
        eqs: dict = {}
        for (u, v), s in h.comul_basis(x).items():
            for r in range(n):
                for w, c in h.mul_basis(r, v).items():
                    row = eqs.setdefault(w, {})
                    _acc(row, r * n + u, s * c)
        for w in set(eqs) | set(h.unit):
            rows.append(eqs.get(w, {}))
            rhs.append(h.counit[x] * h.unit.get(w, ZERO))
    m = LinMap.from_rows(n * n, rows)
    res = solve_many(m, [{k: v for k, v in enumerate(rhs) if v}])
    if res is None:
        raise SingularMap("no antipode exists")
    sol = res[0][0]
    cols: dict = {}
    for key, v in sol.items():
        r, u = divmod(key, n)
        cols.setdefault(u, {})[r] = v
    return LinMap(n, n, cols)


def bicrossproduct(pair) -> HopfData:
    """The Hopf algebra (AB, Delta#) (or (CD, Delta#)), built once and cached."""
    if pair._bicross is None:
        pair._bicross = _first_type(pair) if pair.kind == "first" else _second_type(pair)
    return pair._bicross


def smash_product(pair):
    """The smash product algebra: (multiplication on basis pairs, unit)."""
    h = bicrossproduct(pair)
    return h.mul_basis, h.unit


def smash_coproduct(pair):
    """(Delta#, eps#, S#) of the bicrossproduct."""
    h = bicrossproduct(pair)
    return h.comul_basis, h.counit, h.antipode


# ---------------------------------------------------------------------------
# verification


def _a_elems(h: HopfData, mode):
    if mode == "exhaustive":
        return [(h.labels[i], {i: ONE}) for i in range(h.dim)]
    return [(h.label_of(g), g) for g in algebra_generators(h)]


def _sampled(items, mode, rng, samples):
    items = list(items)
    if mode == "sample" and len(items) > samples:
        return rng.sample(items, samples)
    return items


def check_action(pair: MatchedPair, mode="exhaustive", rng=None, samples=100) -> Report:
    """Right A-module algebra axioms for the action of A on B."""
    rep = Report()
    A, B = pair.A, pair.B
    LA, LB = A.labels, B.labels
    rng = rng or random.Random(0)
    oneA, oneB = A.one(), B.one()

    def unital():
        for j in range(B.dim):
            if pair.act({j: ONE}, oneA) != {j: ONE}:
                yield {"b": LB[j]}

    rep.first_failure("action unital", unital())

    gensA = _a_elems(A, mode)
    gensB = _a_elems(B, mode)

    def module():
        pairs = _sampled(itertools.product(range(B.dim), range(A.dim), range(len(gensA))), mode, rng, samples)
        for j, i, g in pairs:
            la, a2 = gensA[g]
            lhs = pair.act(pair.act_basis(j, i), a2)
            rhs = pair.act({j: ONE}, A.mul({i: ONE}, a2))
            if lhs != rhs:
                yield {"b": LB[j], "a": LA[i], "a'": la}

    rep.first_failure("action is a module", module(), detail=mode)

    def module_algebra():
        items = _sampled(itertools.product(range(B.dim), range(len(gensB)), range(A.dim)), mode, rng, samples)
        for j, g, i in items:
            lb, b2 = gensB[g]
            lhs = pair.act(B.mul({j: ONE}, b2), {i: ONE})
            rhs: dict = {}
            for (u, v), s in A.comul_basis(i).items():
                axpy(rhs, s, B.mul(pair.act_basis(j, u), pair.act(b2, {v: ONE})))
            if lhs != rhs:
                yield {"b": LB[j], "b'": lb, "a": LA[i]}

    rep.first_failure("module algebra", module_algebra(), detail=mode)

    def unit_fixed():
        for i in range(A.dim):
            if pair.act(oneB, {i: ONE}) != scaled(A.counit[i], oneB):
                yield {"a": LA[i]}

    rep.first_failure("unit of B is invariant", unit_fixed())

    def counit_compat():
        for j in range(B.dim):
            for i in range(A.dim):
                if B.eps(pair.act_basis(j, i)) != B.counit[j] * A.counit[i]:
                    yield {"b": LB[j], "a": LA[i]}

    rep.first_failure("counit compatible with action", counit_compat())
    return rep


def check_coaction(pair: MatchedPair) -> Report:
    """Left B-comodule coalgebra axioms for the coaction on A (all basis elements)."""
    rep = Report()
    A, B = pair.A, pair.B
    LA = A.labels
    nA = A.dim
    epsB = {j: e for j, e in enumerate(B.counit) if e}
    epsA = {i: e for i, e in enumerate(A.counit) if e}

    def counit():
        for i in range(nA):
            G = pair.coact_basis(i)
            out: dict = {}
            for (j, k), s in G.items():
                e = epsB.get(j)
                if e:
                    _acc(out, k, s * e)
            if out != {i: ONE}:
                yield {"a": LA[i]}

    rep.first_failure("coaction counital", counit())

    def coassoc():
        for i in range(nA):
            G = pair.coact_basis(i)
            lhs: dict = {}
            rhs: dict = {}
            for (j, k), s in G.items():
                for (u, v), t in B.comul_basis(j).items():
                    _acc(lhs, (u, v, k), s * t)
                for (u, v), t in pair.coact_basis(k).items():
                    _acc(rhs, (j, u, v), s * t)
            if lhs != rhs:
                yield {"a": LA[i]}

    rep.first_failure("coaction coassociative", coassoc())

    def comodule_coalgebra():
        for i in range(nA):
            lhs: dict = {}
            for (j, k), s in pair.coact_basis(i).items():
                for (u, v), t in A.comul_basis(k).items():
                    _acc(lhs, (j, u, v), s * t)
            rhs: dict = {}
            for (a1, a2), s in A.comul_basis(i).items():
                for (b1, u), t in pair.coact_basis(a1).items():
                    for (b2, v), r in pair.coact_basis(a2).items():
                        for w, c in B.mul_basis(b1, b2).items():
                            _acc(rhs, (w, u, v), s * t * r * c)
            if lhs != rhs:
                yield {"a": LA[i]}

    rep.first_failure("comodule coalgebra", comodule_coalgebra())

    def counit_leg():
        for i in range(nA):
            out: dict = {}
            for (j, k), s in pair.coact_basis(i).items():
                e = epsA.get(k)
                if e:
                    _acc(out, j, s * e)
            if out != scaled(A.counit[i], B.unit):
                yield {"a": LA[i]}

    rep.first_failure("coaction respects counit of A", counit_leg())
    return rep


def check_cross_relation(pair: MatchedPair) -> Report:
    """sum (b ⊲ a_(1) ⊗ 1) Gamma(a_(2)) = sum Gamma(a_(1)) (b ⊲ a_(2) ⊗ 1)."""
    rep = Report()
    A, B = pair.A, pair.B

    def fails():
        for i in range(A.dim):
            D = A.comul_basis(i)
            for j in range(B.dim):
                lhs: dict = {}
                rhs: dict = {}
                for (u, v), s in D.items():
                    ba = pair.act_basis(j, u)
                    for (bs, at), t in pair.coact_basis(v).items():
                        for w, c in B.mul(ba, {bs: ONE}).items():
                            _acc(lhs, (w, at), s * t * c)
                    ba = pair.act_basis(j, v)
                    for (bs, at), t in pair.coact_basis(u).items():
                        for w, c in B.mul({bs: ONE}, ba).items():
                            _acc(rhs, (w, at), s * t * c)
                if lhs != rhs:
                    yield {"a": A.labels[i], "b": B.labels[j]}

    rep.first_failure("cross relation", fails())
    return rep


def check_action2(pair: SecondTypePair, mode="exhaustive", rng=None, samples=100) -> Report:
    """Left D-module algebra axioms for the action of D on C."""
    rep = Report()
    C, D = pair.C, pair.D
    LC, LD = C.labels, D.labels
    rng = rng or random.Random(0)
    oneC, oneD = C.one(), D.one()

    def unital():
        for c in range(C.dim):
            if pair.act(oneD, {c: ONE}) != {c: ONE}:
                yield {"c": LC[c]}

    rep.first_failure("action unital", unital())
    gensD = _a_elems(D, mode)
    gensC = _a_elems(C, mode)

    def module():
        items = _sampled(itertools.product(range(len(gensD)), range(D.dim), range(C.dim)), mode, rng, samples)
        for g, d, c in items:
            lg, d1 = gensD[g]
            lhs = pair.act(d1, pair.act_basis(d, c))
            rhs = pair.act(D.mul(d1, {d: ONE}), {c: ONE})
            if lhs != rhs:
                yield {"d": lg, "d'": LD[d], "c": LC[c]}

    rep.first_failure("action is a module", module(), detail=mode)

    def module_algebra():
        items = _sampled(itertools.product(range(D.dim), range(C.dim), range(len(gensC))), mode, rng, samples)
        for d, c, g in items:
            lg, c2 = gensC[g]
            lhs = pair.act({d: ONE}, C.mul({c: ONE}, c2))
            rhs: dict = {}
            for (u, v), s in D.comul_basis(d).items():
                axpy(rhs, s, C.mul(pair.act_basis(u, c), pair.act({v: ONE}, c2)))
            if lhs != rhs:
                yield {"d": LD[d], "c": LC[c], "c'": lg}

    rep.first_failure("module algebra", module_algebra(), detail=mode)

    def unit_fixed():
        for d in range(D.dim):
            if pair.act({d: ONE}, oneC) != scaled(D.counit[d], oneC):
                yield {"d": LD[d]}

    rep.first_failure("unit of C is invariant", unit_fixed())

    def counit_compat():
        for d in range(D.dim):
            for c in range(C.dim):
                if C.eps(pair.act_basis(d, c)) != D.counit[d] * C.counit[c]:
                    yield {"d": LD[d], "c": LC[c]}

    rep.first_failure("counit compatible with action", counit_compat())
    return rep


def check_coaction2(pair: SecondTypePair) -> Report:
    """Right C-comodule coalgebra axioms for the coaction on D."""
    rep = Report()
    C, D = pair.C, pair.D
    LD = D.labels
    epsC = {c: e for c, e in enumerate(C.counit) if e}
    epsD = {d: e for d, e in enumerate(D.counit) if e}

    def counit():
        for d in range(D.dim):
            out: dict = {}
            for (u, c), s in pair.coact_basis(d).items():
                e = epsC.get(c)
                if e:
                    _acc(out, u, s * e)
            if out != {d: ONE}:
                yield {"d": LD[d]}

    rep.first_failure("coaction counital", counit())

    def coassoc():
        for d in range(D.dim):
            lhs: dict = {}
            rhs: dict = {}
            for (u, c), s in pair.coact_basis(d).items():
                for (x, y), t in pair.coact_basis(u).items():
                    _acc(lhs, (x, y, c), s * t)
                for (x, y), t in C.comul_basis(c).items():
                    _acc(rhs, (u, x, y), s * t)
            if lhs != rhs:
                yield {"d": LD[d]}

    rep.first_failure("coaction coassociative", coassoc())

    def comodule_coalgebra():
        for d in range(D.dim):
            lhs: dict = {}
            for (u, c), s in pair.coact_basis(d).items():
                for (x, y), t in D.comul_basis(u).items():
                    _acc(lhs, (x, y, c), s * t)
            rhs: dict = {}
            for (d1, d2), s in D.comul_basis(d).items():
                for (x, c1), t in pair.coact_basis(d1).items():
                    for (y, c2), r in pair.coact_basis(d2).items():
                        for w, k in C.mul_basis(c1, c2).items():
                            _acc(rhs, (x, y, w), s * t * r * k)
            if lhs != rhs:
                yield {"d": LD[d]}

    rep.first_failure("comodule coalgebra", comodule_coalgebra())

    def counit_leg():
        for d in range(D.dim):
            out: dict = {}
            for (u, c), s in pair.coact_basis(d).items():
                e = epsD.get(u)
                if e:
                    _acc(out, c, s * e)
            if out != scaled(D.counit[d], C.unit):
                yield {"d": LD[d]}

    rep.first_failure("coaction respects counit of D", counit_leg())
    return rep


def check_twists(pair) -> Report:
    """R, R^op, T, T^op bijective and P = T∘R = T^op∘R^op."""
    rep = Report()
    R, Rop, T, Top = twists(pair)
    for name, m in (("R", R), ("R^op", Rop), ("T", T), ("T^op", Top)):
        r = m.rank()
        rep.add(f"{name} bijective", r == m.dom, {"rank": r, "dim": m.dom})
    P1 = T @ R
    P2 = Top @ Rop
    wit = None
    if P1 != P2:
        j = next(j for j in range(P1.dom) if P1.column(j) != P2.column(j))
        wit = {"basis_index": j}
    rep.add("T∘R = T^op∘R^op", P1 == P2, wit)
    return rep


def check_group_pair(info: GroupPairInfo) -> Report:
    """Matched pair of groups axioms, exhaustively over H × K (× H or K)."""
    rep = Report()
    H, K = info.H, info.K
    la, ra = info.lact, info.ract
    eH, eK = H.identity, K.identity
    Hs, Ks = H.elements, K.elements

    def left_action():
        for k in Ks:
            if la(eH, k) != k:
                yield {"h": H.label(eH), "k": K.label(k)}
        for h, h2, k in itertools.product(Hs, Hs, Ks):
            if la(H.mul(h, h2), k) != la(h, la(h2, k)):
                yield {"h": H.label(h), "h'": H.label(h2), "k": K.label(k)}

    def right_action():
        for h in Hs:
            if ra(h, eK) != h:
                yield {"h": H.label(h), "k": K.label(eK)}
        for h, k, k2 in itertools.product(Hs, Ks, Ks):
            if ra(h, K.mul(k, k2)) != ra(ra(h, k), k2):
                yield {"h": H.label(h), "k": K.label(k), "k'": K.label(k2)}

    def compat_left():
        for h in Hs:
            if la(h, eK) != eK:
                yield {"h": H.label(h)}
        for h, k, k2 in itertools.product(Hs, Ks, Ks):
            if la(h, K.mul(k, k2)) != K.mul(la(h, k), la(ra(h, k), k2)):
                yield {"h": H.label(h), "k": K.label(k), "k'": K.label(k2)}

    def compat_right():
        for k in Ks:
            if ra(eH, k) != eH:
                yield {"k": K.label(k)}
        for h, h2, k in itertools.product(Hs, Hs, Ks):
            if ra(H.mul(h, h2), k) != H.mul(ra(h, la(h2, k)), ra(h2, k)):
                yield {"h": H.label(h), "h'": H.label(h2), "k": K.label(k)}

    rep.first_failure("group: left action of H on K", left_action())
    rep.first_failure("group: right action of K on H", right_action())
    rep.first_failure("group: h⊳(kk') = (h⊳k)((h⊲k)⊳k')", compat_left())
    rep.first_failure("group: (hh')⊲k = (h⊲(h'⊳k))(h'⊲k)", compat_right())
    return rep


def verify_matched(pair, products: str = "auto", samples: int = 100, seed: int = 0xB1C8) -> Report:
    """Full operational verification; stores the report on the pair and returns it.

    ``products`` is passed to the Hopf axiom check of the bicrossproduct.  In
    ``auto`` mode algebras above 256 dimensions use seeded sampling for the
    triple-product identities; all other checks stay exhaustive.
    """
    rep = Report()
    rng = random.Random(seed)
    if pair.kind == "first":
        nA, nB = pair.A.dim, pair.B.dim
        dim = nA * nB
        mode = resolve_mode(pair.A if nA > nB else pair.B, "auto") if products == "auto" else products
        if pair.group is not None:
            rep.extend(check_group_pair(pair.group))
        rep.extend(check_action(pair, mode, rng, samples), "action: ")
        rep.extend(check_coaction(pair), "coaction: ")
        rep.extend(check_cross_relation(pair))
    else:
        dim = pair.C.dim * pair.D.dim
        mode = "exhaustive" if products == "auto" else products
        rep.extend(check_action2(pair, mode, rng, samples), "action: ")
        rep.extend(check_coaction2(pair), "coaction: ")
    rep.extend(check_twists(pair))
    h = bicrossproduct(pair)
    hmode = products
    if products == "auto":
        hmode = "exhaustive" if dim <= 16 else ("generators" if dim <= 256 else "sample")
    rep.extend(verify_hopf(h, hmode, samples, seed), "bicrossproduct: ")
    rep.extend(check_smash_extras(pair, h, hmode, rng, samples))
    pair.status = rep
    return rep


def check_smash_extras(pair, h: HopfData, mode, rng, samples) -> Report:
    """Embeddings, eps#∘S# = eps# and anti-multiplicativity of S#."""
    rep = Report()
    n = h.dim
    if pair.kind == "first":
        A, B = pair.A, pair.B
        emb_A, emb_B = h.emb_A, h.emb_B
    else:
        A, B = pair.C, pair.D
        emb_A, emb_B = h.emb_C, h.emb_D
    nB = B.dim

    def embeds():
        for i in range(A.dim):
            for k in range(A.dim):
                if h.mul(emb_A({i: ONE}), emb_A({k: ONE})) != emb_A(A.mul_basis(i, k)):
                    yield {"x": A.labels[i], "y": A.labels[k], "factor": "first"}
        for j in range(nB):
            for l in range(nB):
                if h.mul(emb_B({j: ONE}), emb_B({l: ONE})) != emb_B(B.mul_basis(j, l)):
                    yield {"x": B.labels[j], "y": B.labels[l], "factor": "second"}
        for i in range(A.dim):
            for j in range(nB):
                if h.mul(emb_A({i: ONE}), emb_B({j: ONE})) != {i * nB + j: ONE}:
                    yield {"x": A.labels[i], "y": B.labels[j], "factor": "normal form"}

    rep.first_failure("factors embed as subalgebras", embeds())

    def coprod_on_B():
        for j in range(nB):
            lhs = h.comul(emb_B({j: ONE}))
            rhs: dict = {}
            if pair.kind == "first":
                for (u, v), s in B.comul_basis(j).items():
                    for k, t in outer(emb_B({u: ONE}), emb_B({v: ONE})).items():
                        _acc(rhs, k, s * t)
            else:
                # Delta#(d) = Gamma(d_(1)) (1 ⊗ d_(2))
                for (d1, d2), s in B.comul_basis(j).items():
                    for (dp, cp), t in pair.coact_basis(d1).items():
                        for k, r in outer(emb_B({dp: ONE}), h.mul(emb_A({cp: ONE}), emb_B({d2: ONE}))).items():
                            _acc(rhs, k, s * t * r)
            if lhs != rhs:
                yield {"x": B.labels[j]}

    rep.first_failure("coproduct on the second factor", coprod_on_B())

    rep.add("eps#∘S# = eps#", all(h.eps(h.S({p: ONE})) == h.counit[p] for p in range(n)))

    def anti_mult():
        if mode == "exhaustive":
            items = itertools.product(range(n), range(n))
        else:
            gens = algebra_generators(h)
            items = [(rng.randrange(n), None) for _ in range(samples)] if mode == "sample" else [(p, None) for p in range(n)]
            items = [(p, g) for p, _ in items for g in range(len(gens))]
        for p, q in items:
            x = {p: ONE}
            y = {q: ONE} if mode == "exhaustive" else algebra_generators(h)[q]
            if h.S(h.mul(x, y)) != h.mul(h.S(y), h.S(x)):
                yield {"x": h.labels[p], "y": h.label_of(y)}

    rep.first_failure("S# anti-multiplicative", anti_mult(), detail=mode)
    return rep


# ---------------------------------------------------------------------------
# JSON


def _vec(v):
    from .hopf_core import _vec_json

    return _vec_json(v)


def pair_to_json(pair) -> dict:
    from .exactlin import scalar_to_json

    if pair.kind == "first":
        X, Y = pair.A, pair.B
    else:
        X, Y = pair.C, pair.D
    action = []
    if pair.kind == "first":
        for j in range(Y.dim):
            for i in range(X.dim):
                v = pair.act_basis(j, i)
                if v:
                    action.append([j, i, _vec(v)])
        coaction = [[i, [[a, b, scalar_to_json(s)] for (a, b), s in sorted(pair.coact_basis(i).items())]] for i in range(X.dim)]
    else:
        for d in range(Y.dim):
            for c in range(X.dim):
                v = pair.act_basis(d, c)
                if v:
                    action.append([d, c, _vec(v)])
        coaction = [[d, [[a, b, scalar_to_json(s)] for (a, b), s in sorted(pair.coact_basis(d).items())]] for d in range(Y.dim)]
    out = {
        "schema": "pair.v1",
        "type": pair.kind,
        "name": pair.name,
        "A" if pair.kind == "first" else "C": hopf_to_json(X),
        "B" if pair.kind == "first" else "D": hopf_to_json(Y),
        "action": action,
        "coaction": coaction,
    }
    if pair.group is not None:
        from .mult_group import group_to_json

        g = pair.group
        out["groups"] = {
            "H": group_to_json(g.H),
            "K": group_to_json(g.K),
            "lact": [[H_i, K_i, g.K.index(g.lact(h, k))] for H_i, h in enumerate(g.H.elements) for K_i, k in enumerate(g.K.elements)],
            "ract": [[H_i, K_i, g.H.index(g.ract(h, k))] for H_i, h in enumerate(g.H.elements) for K_i, k in enumerate(g.K.elements)],
        }
    return out


def pair_from_json(d: dict):
    from .exactlin import scalar_from_json
    from .hopf_core import _vec_from

    if d.get("schema") != "pair.v1":
        raise ValueError("not a pair.v1 document")
    kind = d.get("type", "first")
    X = hopf_from_json(d["A" if kind == "first" else "C"])
    Y = hopf_from_json(d["B" if kind == "first" else "D"])
    action = {(int(a), int(b)): _vec_from(v) for a, b, v in d["action"]}
    n = X.dim if kind == "first" else Y.dim
    coaction = [dict() for _ in range(n)]
    for i, terms in d["coaction"]:
        coaction[int(i)] = {(int(a), int(b)): scalar_from_json(s) for a, b, s in terms}
    if kind == "first":
        group = None
        if "groups" in d:
            from .mult_group import group_from_json

            g = d["groups"]
            H, K = group_from_json(g["H"]), group_from_json(g["K"])
            lt = {(H.elements[a], K.elements[b]): K.elements[c] for a, b, c in g["lact"]}
            rt = {(H.elements[a], K.elements[b]): H.elements[c] for a, b, c in g["ract"]}
            group = GroupPairInfo(H, K, lambda h, k: lt[(h, k)], lambda h, k: rt[(h, k)])
        return MatchedPair(X, Y, action, coaction, name=d.get("name", ""), group=group)
    return SecondTypePair(X, Y, action, coaction, name=d.get("name", ""))
