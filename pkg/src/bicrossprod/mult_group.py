"""Group algebras and function algebras of discrete groups.

For a finite group both ``C[G]`` and ``F(G)`` are returned as
:class:`~bicrossprod.hopf_core.HopfData`.  For an infinite group the
algebras are lazy: elements are finite-support dicts ``{group element:
scalar}`` and a coproduct that does not land in the algebraic tensor product
is only available multiplied by a covering element.  The small expression
language at the end of the module evaluates such covered expressions.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .exactlin import ONE, ZERO, conj, scaled
from .hopf_core import HopfData
from .report import Report


class UncoveredEvaluation(ValueError):
    """A multiplier-valued expression was requested without enough covering."""


class InvalidGroup(ValueError):
    pass


# ---------------------------------------------------------------------------
# groups


class GroupSpec:
    """A group given by procedures; ``elements`` is set iff the group is finite.

    Elements are hashable Python values (ints or tuples).
    """

    def __init__(self, name, mul, inv, identity, elements=None, sampler=None, fmt=None, ref=None):
        self.name = name
        self.mul = mul
        self.inv = inv
        self.identity = identity
        self.elements = None if elements is None else list(elements)
        self._sampler = sampler
        self._fmt = fmt or str
        self.ref = ref  # JSON description
        self._index = None if elements is None else {g: i for i, g in enumerate(self.elements)}

    @property
    def finite(self) -> bool:
        return self.elements is not None

    @property
    def order(self):
        return len(self.elements) if self.finite else None

    def index(self, g) -> int:
        return self._index[g]

    def label(self, g) -> str:
        return self._fmt(g)

    def sample(self, rng: random.Random):
        if self.finite:
            return self.elements[rng.randrange(len(self.elements))]
        return self._sampler(rng)

    def power(self, g, k: int):
        r = self.identity
        base = g if k >= 0 else self.inv(g)
        for _ in range(abs(k)):
            r = self.mul(r, base)
        return r

    def __repr__(self):
        return f"GroupSpec({self.name})"


def check_group(G: GroupSpec, samples: int = 100, seed: int = 0xB1C8) -> Report:
    """Group axioms: exhaustive for finite groups, sampled otherwise."""
    rep = Report()
    e = G.identity
    if G.finite:
        els = G.elements
        triples = itertools.product(els, els, els)
        singles = els
    else:
        rng = random.Random(seed)
        triples = [(G.sample(rng), G.sample(rng), G.sample(rng)) for _ in range(samples)]
        singles = [t[0] for t in triples]

    def assoc():
        for a, b, c in triples:
            if G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)):
                yield {"a": G.label(a), "b": G.label(b), "c": G.label(c)}

    def unit_inv():
        for a in singles:
            if G.mul(a, e) != a or G.mul(e, a) != a or G.mul(a, G.inv(a)) != e:
                yield {"a": G.label(a)}

    rep.first_failure("associativity", assoc())
    rep.first_failure("identity and inverses", unit_inv())
    if G.finite:
        s = set(G.elements)
        rep.add("closure", all(G.mul(a, b) in s for a in G.elements for b in G.elements))
    return rep


def cyclic(n: int) -> GroupSpec:
    return GroupSpec(f"Z{n}", lambda a, b: (a + b) % n, lambda a: (-a) % n, 0, range(n), ref={"builtin": "cyclic", "params": {"n": n}})


def integers() -> GroupSpec:
    return GroupSpec("Z", lambda a, b: a + b, lambda a: -a, 0, sampler=lambda r: r.randint(-20, 20), ref={"builtin": "Z"})


def integer_lattice(n: int) -> GroupSpec:
    return GroupSpec(
        f"Z^{n}",
        lambda a, b: tuple(x + y for x, y in zip(a, b)),
        lambda a: tuple(-x for x in a),
        (0,) * n,
        sampler=lambda r: tuple(r.randint(-10, 10) for _ in range(n)),
        ref={"builtin": "Z^n", "params": {"n": n}},
    )


def symmetric(n: int) -> GroupSpec:
    """S_n on tuples; (p*q)(i) = p(q(i))."""
    els = sorted(itertools.permutations(range(n)))

    def mul(p, q):
        return tuple(p[i] for i in q)

    def inv(p):
        out = [0] * n
        for i, x in enumerate(p):
            out[x] = i
        return tuple(out)

    return GroupSpec(f"S{n}", mul, inv, tuple(range(n)), els, fmt=lambda p: "".join(map(str, p)), ref={"builtin": "S_n", "params": {"n": n}})


def heisenberg_p(p: int, form: str = "H") -> GroupSpec:
    """Unitriangular 3x3 matrices over Z_p as triples.

    ``form="H"``: (q, r, s) with (q1,r1,s1)(q2,r2,s2) = (q1+q2, r1+r2+s1 q2, s1+s2).
    ``form="K"``: (s, q, r) with (s1,q1,r1)(s2,q2,r2) = (s1+s2, q1+q2, r1+r2+q1 s2).
    """
    els = list(itertools.product(range(p), repeat=3))
    if form == "H":

        def mul(a, b):
            return ((a[0] + b[0]) % p, (a[1] + b[1] + a[2] * b[0]) % p, (a[2] + b[2]) % p)

    elif form == "K":

        def mul(a, b):
            return ((a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2] + a[1] * b[0]) % p)

    else:
        raise ValueError("form must be 'H' or 'K'")
    e = (0, 0, 0)
    table = {}

    def inv(a):
        r = table.get(a)
        if r is None:
            r = next(b for b in els if mul(a, b) == e)
            table[a] = r
        return r

    return GroupSpec(
        f"Heis{form}({p})",
        mul,
        inv,
        e,
        els,
        fmt=lambda a: "(" + ",".join(map(str, a)) + ")",
        ref={"builtin": "heisenberg_p", "params": {"p": p, "form": form}},
    )


def from_table(table) -> GroupSpec:
    """The group on 0..n-1 with multiplication table ``table``; raises InvalidGroup otherwise."""
    n = len(table)
    if n == 0 or any(len(r) != n or any(not (isinstance(v, int) and 0 <= v < n) for v in r) for r in table):
        raise InvalidGroup("table must be n x n with entries in 0..n-1")
    e = next((i for i in range(n) if all(table[i][j] == j and table[j][i] == j for j in range(n))), None)
    if e is None:
        raise InvalidGroup("table has no identity")
    invs = {}
    for a in range(n):
        b = next((b for b in range(n) if table[a][b] == e and table[b][a] == e), None)
        if b is None:
            raise InvalidGroup(f"element {a} has no inverse")
        invs[a] = b
    spec = GroupSpec(f"G{n}", lambda a, b: table[a][b], lambda a: invs[a], e, range(n), ref={"order": n, "table": [list(r) for r in table]})
    if not check_group(spec).ok:
        raise InvalidGroup("table is not associative")
    return spec


def direct_product(G1: GroupSpec, G2: GroupSpec) -> GroupSpec:
    els = None
    if G1.finite and G2.finite:
        els = [(a, b) for a in G1.elements for b in G2.elements]
    return GroupSpec(
        f"{G1.name}x{G2.name}",
        lambda x, y: (G1.mul(x[0], y[0]), G2.mul(x[1], y[1])),
        lambda x: (G1.inv(x[0]), G2.inv(x[1])),
        (G1.identity, G2.identity),
        els,
        sampler=lambda r: (G1.sample(r), G2.sample(r)),
        fmt=lambda x: f"({G1.label(x[0])},{G2.label(x[1])})",
        ref={"builtin": "product", "params": {"factors": [group_to_json(G1), group_to_json(G2)]}},
    )


def group_to_json(G: GroupSpec) -> dict:
    return {"schema": "group.v1", **G.ref}


def group_from_json(d: dict) -> GroupSpec:
    if d.get("schema", "group.v1") != "group.v1":
        raise ValueError("not a group.v1 document")
    if "table" in d:
        t = d["table"]
        if len(t) != d.get("order", len(t)):
            raise ValueError("order does not match table")
        return from_table(t)
    b = d.get("builtin")
    p = d.get("params", {})
    if b == "Z":
        return integers()
    if b == "Z^n":
        return integer_lattice(int(p["n"]))
    if b == "cyclic":
        return cyclic(int(p["n"]))
    if b == "S_n":
        return symmetric(int(p["n"]))
    if b == "heisenberg_p":
        return heisenberg_p(int(p["p"]), p.get("form", "H"))
    if b == "product":
        f1, f2 = p["factors"]
        return direct_product(group_from_json(f1), group_from_json(f2))
    raise ValueError(f"unknown group description {d!r}")


# ---------------------------------------------------------------------------
# finite algebras


def group_algebra(G: GroupSpec):
    """C[G]: Delta(g) = g⊗g, S(g) = g^-1, eps(g) = 1, g* = g^-1."""
    if not G.finite:
        return LazyGroupAlgebra(G)
    els = G.elements
    idx = G.index
    mult = {(i, j): {idx(G.mul(a, b)): ONE} for i, a in enumerate(els) for j, b in enumerate(els)}
    inv = [{idx(G.inv(a)): ONE} for a in els]
    return HopfData(
        [G.label(a) for a in els],
        mult,
        {idx(G.identity): ONE},
        [{(i, i): ONE} for i in range(len(els))],
        [ONE] * len(els),
        inv,
        star=inv,
        name=f"C[{G.name}]",
    )


def function_algebra(G: GroupSpec):
    """F(G) with basis delta_g: pointwise product, Delta(f)(p, q) = f(pq)."""
    if not G.finite:
        return LazyFunctionAlgebra(G)
    els = G.elements
    n = len(els)
    idx = G.index
    comult = [dict() for _ in range(n)]
    for a in els:
        for b in els:
            comult[idx(G.mul(a, b))][(idx(a), idx(b))] = ONE
    e = idx(G.identity)
    return HopfData(
        [f"d{G.label(a)}" for a in els],
        {(i, i): {i: ONE} for i in range(n)},
        {i: ONE for i in range(n)},
        comult,
        [ONE if i == e else ZERO for i in range(n)],
        [{idx(G.inv(a)): ONE} for a in els],
        star=[{i: ONE} for i in range(n)],
        generators=[{i: ONE} for i in range(n)],
        name=f"F({G.name})",
    )


# ---------------------------------------------------------------------------
# lazy algebras


def random_element(G: GroupSpec, rng: random.Random, terms: int = 3) -> dict:
    """A random finite-support element with small integer coefficients."""
    out: dict = {}
    for _ in range(rng.randint(1, terms)):
        g = G.sample(rng)
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        nv = out.get(g, ZERO) + c
        if nv:
            out[g] = nv
        else:
            out.pop(g, None)
    return out or {G.identity: ONE}


class LazyAlgebra:
    """Common interface of the lazy one-leg algebras."""

    name = ""
    finite_comul = True

    def comul_times(self, x: dict, y: dict, side: str, leg: int) -> dict:
        """Delta(x) multiplied by y placed on ``leg`` (1 on the other leg)."""
        D = self.comul(x)
        out: dict = {}
        for (a, b), s in D.items():
            if leg == 0:
                p = self.mul({a: s}, y) if side == "right" else self.mul(y, {a: s})
                for u, t in p.items():
                    _acc(out, (u, b), t)
            else:
                p = self.mul({b: s}, y) if side == "right" else self.mul(y, {b: s})
                for u, t in p.items():
                    _acc(out, (a, u), t)
        return out

    def random(self, rng, terms=3):
        raise NotImplementedError


def _acc(d, k, v):
    nv = d.get(k, ZERO) + v
    if nv:
        d[k] = nv
    else:
        d.pop(k, None)


class LazyGroupAlgebra(LazyAlgebra):
    """C[G] for an infinite G; unital, coproduct lands in the tensor product."""

    def __init__(self, G: GroupSpec):
        self.G = G
        self.name = f"C[{G.name}]"

    def mul(self, x, y):
        out: dict = {}
        for g, a in x.items():
            for h, b in y.items():
                _acc(out, self.G.mul(g, h), a * b)
        return out

    def unit(self):
        return {self.G.identity: ONE}

    def comul(self, x):
        return {(g, g): a for g, a in x.items()}

    def eps(self, x):
        s = ZERO
        for a in x.values():
            s = s + a
        return s

    def S(self, x):
        return {self.G.inv(g): a for g, a in x.items()}

    def star(self, x):
        return {self.G.inv(g): conj(a) for g, a in x.items()}

    def phi(self, x):
        return x.get(self.G.identity, ZERO)

    psi = phi

    def random(self, rng, terms=3):
        return random_element(self.G, rng, terms)


class LazyFunctionAlgebra(LazyAlgebra):
    """F(G) on dicts; for infinite G there is no unit and Delta(f) needs a covering."""

    def __init__(self, G: GroupSpec):
        self.G = G
        self.name = f"F({G.name})"
        self.finite_comul = G.finite

    def mul(self, x, y):
        out = {}
        for g, a in x.items():
            b = y.get(g)
            if b:
                out[g] = a * b
        return out

    def unit(self):
        return {g: ONE for g in self.G.elements} if self.G.finite else None

    def comul(self, x):
        if not self.G.finite:
            raise UncoveredEvaluation(f"Delta(f) on {self.name} has infinite support; multiply by a covering element")
        G, out = self.G, {}
        for g, a in x.items():
            for p in G.elements:
                out[(p, G.mul(G.inv(p), g))] = a
        return out

    def comul_times(self, x, y, side, leg):
        G = self.G
        out: dict = {}
        for g, a in x.items():
            for k, b in y.items():
                if leg == 1:
                    _acc(out, (G.mul(g, G.inv(k)), k), a * b)
                else:
                    _acc(out, (k, G.mul(G.inv(k), g)), a * b)
        return out

    def eps(self, x):
        return x.get(self.G.identity, ZERO)

    def S(self, x):
        return {self.G.inv(g): a for g, a in x.items()}

    def star(self, x):
        return {g: conj(a) for g, a in x.items()}

    def psi(self, x):
        s = ZERO
        for a in x.values():
            s = s + a
        return s

    phi = psi

    def random(self, rng, terms=3):
        return random_element(self.G, rng, terms)


@dataclass
class LazyMultiplier:
    """A multiplier m given by x -> m x and x -> x m on finite elements."""

    alg: object
    left: object  # callable x -> m·x
    right: object  # callable x -> x·m

    def compatible(self, x: dict, y: dict) -> bool:
        """(x m) y = x (m y)."""
        return self.alg.mul(self.right(x), y) == self.alg.mul(x, self.left(y))

    def agrees_with(self, elt: dict, x: dict) -> bool:
        return self.left(x) == self.alg.mul(elt, x) and self.right(x) == self.alg.mul(x, elt)


def unit_multiplier(alg) -> LazyMultiplier:
    return LazyMultiplier(alg, lambda x: dict(x), lambda x: dict(x))


# ---------------------------------------------------------------------------
# group pairs


class LazyGroupPair(LazyAlgebra):
    """The bicrossproduct C[H] # F(K) of a matched pair of (possibly infinite) groups.

    ``lact(h, k) = h ⊳ k`` and ``ract(h, k) = h ⊲ k`` come from the
    factorization ``hk = (h ⊳ k)(h ⊲ k)``.  Elements are dicts keyed by
    ``(h, k)`` standing for ``h delta_k``.  All four one-sided coverings of
    the coproduct are computed in closed form.
    """

    def __init__(self, H: GroupSpec, K: GroupSpec, lact, ract, name=""):
        self.H, self.K = H, K
        self.lact, self.ract = lact, ract
        self.name = name or f"C[{H.name}]#F({K.name})"
        self.finite_comul = K.finite
        self.A = LazyGroupAlgebra(H)
        self.B = LazyFunctionAlgebra(K)

    # action of A on B and coaction, on basis elements
    def act(self, k, h):
        """delta_k ⊲ h = delta_{h^-1 ⊳ k}."""
        return self.lact(self.H.inv(h), k)

    def coact_cover(self, h, k):
        """Gamma(h)(delta_k ⊗ 1) = delta_k ⊗ (h ⊲ k)."""
        return {(k, self.ract(h, k)): ONE}

    def mul(self, x, y):
        H, out = self.H, {}
        for (h, k), a in x.items():
            for (h2, k2), b in y.items():
                if k2 == self.lact(H.inv(h2), k):
                    _acc(out, (H.mul(h, h2), k2), a * b)
        return out

    def unit(self):
        if not self.K.finite:
            return None
        return {(self.H.identity, k): ONE for k in self.K.elements}

    def comul(self, x):
        if not self.K.finite:
            raise UncoveredEvaluation("Delta# on an infinite function leg needs a covering")
        K, out = self.K, {}
        for (h, k), a in x.items():
            for k1 in K.elements:
                k2 = K.mul(K.inv(k1), k)
                _acc(out, ((h, k1), (self.ract(h, k1), k2)), a)
        return out

    def comul_times(self, x, y, side, leg):
        H, K = self.H, self.K
        out: dict = {}
        for (h, k), a in x.items():
            for (h2, k2p), b in y.items():
                if leg == 1 and side == "right":
                    # second leg (h⊲k1) delta_{k2} · h2 delta_{k2p}
                    k2 = self.lact(h2, k2p)
                    k1 = K.mul(k, K.inv(k2))
                    term = ((h, k1), (H.mul(self.ract(h, k1), h2), k2p))
                elif leg == 1:
                    # h2 delta_{k2p} · (h⊲k1) delta_{k2}; solve (h⊲k1)⊳k2 = k2p
                    k1 = self.lact(H.inv(h), K.mul(self.lact(h, k), K.inv(k2p)))
                    k2 = K.mul(K.inv(k1), k)
                    term = ((h, k1), (H.mul(h2, self.ract(h, k1)), k2))
                elif side == "right":
                    # h delta_{k1} · h2 delta_{k2p}
                    k1 = self.lact(h2, k2p)
                    k2 = K.mul(K.inv(k1), k)
                    term = ((H.mul(h, h2), k2p), (self.ract(h, k1), k2))
                else:
                    # h2 delta_{k2p} · h delta_{k1}
                    k1 = self.lact(H.inv(h), k2p)
                    k2 = K.mul(K.inv(k1), k)
                    term = ((H.mul(h2, h), k1), (self.ract(h, k1), k2))
                _acc(out, term, a * b)
        return out

    def eps(self, x):
        s = ZERO
        for (h, k), a in x.items():
            if k == self.K.identity:
                s = s + a
        return s

    def psi(self, x):
        """psi#(h delta_k) = [h = e] (product of the two right integrals)."""
        s = ZERO
        for (h, k), a in x.items():
            if h == self.H.identity:
                s = s + a
        return s

    def phi(self, x):
        """phi# = psi#∘S#."""
        return self.psi(self.S(x))

    def S(self, x):
        """S#(h delta_k) = (h⊲k)^-1 delta_{(h⊳k)^-1}."""
        H, K, out = self.H, self.K, {}
        for (h, k), a in x.items():
            _acc(out, (H.inv(self.ract(h, k)), K.inv(self.lact(h, k))), a)
        return out

    def random(self, rng, terms=3):
        out: dict = {}
        for _ in range(rng.randint(1, terms)):
            _acc(out, (self.H.sample(rng), self.K.sample(rng)), mpq_choice(rng))
        return out or {(self.H.identity, self.K.identity): ONE}

    def label(self, key):
        h, k = key
        return f"{self.H.label(h)}d{self.K.label(k)}"


def mpq_choice(rng):
    return ONE * rng.choice([-3, -2, -1, 1, 2, 3])


# ---------------------------------------------------------------------------
# covered expressions


@dataclass(frozen=True)
class El:
    """A genuine element of a one-leg algebra."""

    alg: object
    value: dict = field(hash=False)


@dataclass(frozen=True)
class One:
    """The unit of a one-leg algebra (a multiplier when the algebra is non-unital)."""

    alg: object


@dataclass(frozen=True)
class Tn:
    left: object  # El | One
    right: object


@dataclass(frozen=True)
class Cop:
    """Delta(x) as a multiplier of the tensor square."""

    alg: object
    value: dict = field(hash=False)


@dataclass(frozen=True)
class Coact:
    """Gamma(h) in M(B ⊗ A) for a group pair; value is a C[H] element."""

    pair: object
    value: dict = field(hash=False)


@dataclass(frozen=True)
class Prod:
    factors: tuple


@dataclass(frozen=True)
class Slice:
    """Apply ``functional`` to leg ``leg`` of a two-leg expression."""

    functional: object
    leg: int
    expr: object


@dataclass
class _Fin2:
    algs: tuple
    data: dict


def _fin2_mul(X: _Fin2, Y: _Fin2) -> _Fin2:
    A0, A1 = X.algs
    out: dict = {}
    for (a, b), s in X.data.items():
        for (c, d), t in Y.data.items():
            p = A0.mul({a: ONE}, {c: ONE})
            if not p:
                continue
            q = A1.mul({b: ONE}, {d: ONE})
            for u, x in p.items():
                for v, y in q.items():
                    _acc(out, (u, v), s * t * x * y)
    return _Fin2(X.algs, out)


def _legwise(T: _Fin2, x0, x1, side: str) -> _Fin2:
    """T·(x0⊗x1) (side='right') or (x0⊗x1)·T; a leg given as None is the unit."""
    A0, A1 = T.algs
    out: dict = {}
    for (a, b), s in T.data.items():
        if x0 is None:
            p = {a: ONE}
        else:
            p = A0.mul({a: ONE}, x0) if side == "right" else A0.mul(x0, {a: ONE})
        if not p:
            continue
        if x1 is None:
            q = {b: ONE}
        else:
            q = A1.mul({b: ONE}, x1) if side == "right" else A1.mul(x1, {b: ONE})
        for u, x in p.items():
            for v, y in q.items():
                _acc(out, (u, v), s * x * y)
    return _Fin2(T.algs, out)


def _tn_legs(t: Tn):
    return (t.left.value if isinstance(t.left, El) else None, t.right.value if isinstance(t.right, El) else None)


def _times(T: _Fin2, f, side: str) -> _Fin2:
    """T·f or f·T for a finite tensor or a Tn covering f."""
    if isinstance(f, _Fin2):
        return _fin2_mul(T, f) if side == "right" else _fin2_mul(f, T)
    x0, x1 = _tn_legs(f)
    return _legwise(T, x0, x1, side)


def _as_fin2(t: Tn):
    """x⊗y as a finite tensor, or None when a unit leg is only a multiplier."""
    vals = []
    for leg in (t.left, t.right):
        if isinstance(leg, El):
            vals.append(leg.value)
        else:
            u = leg.alg.unit()
            if u is None:
                return None
            vals.append(u)
    return _Fin2((t.left.alg, t.right.alg), {(a, b): x * y for a, x in vals[0].items() for b, y in vals[1].items()})


def _cover_terms(c):
    """Split a covering into terms (x0, x1); None stands for the unit."""
    if isinstance(c, _Fin2):
        return [({a: s}, {b: ONE}) for (a, b), s in c.data.items()]
    return [_tn_legs(c)]


def _mult_cover(M, cover, side: str) -> _Fin2:
    """M·cover (side='right') or cover·M (side='left') for a multiplier M."""
    if isinstance(M, Cop):
        alg = M.alg
        algs = (alg, alg)
        if alg.finite_comul:
            return _times(_Fin2(algs, alg.comul(M.value)), cover, side)
        out: dict = {}
        for x0, x1 in _cover_terms(cover):
            if x1 is not None:
                part = _Fin2(algs, alg.comul_times(M.value, x1, side, 1))
                if x0 is not None:
                    part = _legwise(part, x0, None, side)
            elif x0 is not None:
                part = _Fin2(algs, alg.comul_times(M.value, x0, side, 0))
            else:
                raise UncoveredEvaluation("no covering element")
            for k, v in part.data.items():
                _acc(out, k, v)
        return _Fin2(algs, out)
    if isinstance(M, Coact):
        pair = M.pair
        algs = (pair.B, pair.A)
        out = {}
        for x0, x1 in _cover_terms(cover):
            if x0 is None:
                if not pair.K.finite:
                    raise UncoveredEvaluation("Gamma(a) covered only on the C[H] leg over an infinite K")
                x0 = {k: ONE for k in pair.K.elements}
            # Gamma(h) = sum_k delta_k ⊗ (h⊲k); B is commutative so the side only matters on A
            for h, a in M.value.items():
                for k, b in x0.items():
                    hk = pair.ract(h, k)
                    if x1 is None:
                        _acc(out, (k, hk), a * b)
                    else:
                        p = pair.A.mul({hk: ONE}, x1) if side == "right" else pair.A.mul(x1, {hk: ONE})
                        for u, t in p.items():
                            _acc(out, (k, u), a * b * t)
        return _Fin2(algs, out)
    raise TypeError(f"not a multiplier: {M!r}")


def _is_mult(f):
    return isinstance(f, (Cop, Coact))


def _eval2(expr) -> _Fin2:
    """Evaluate a two-leg expression to a finite tensor."""
    if isinstance(expr, _Fin2):
        return expr
    if isinstance(expr, Tn):
        r = _as_fin2(expr)
        if r is None:
            raise UncoveredEvaluation("1 ⊗ x is not a finite tensor in a non-unital algebra")
        return r
    if isinstance(expr, Cop) and expr.alg.finite_comul:
        return _Fin2((expr.alg, expr.alg), expr.alg.comul(expr.value))
    if _is_mult(expr):
        raise UncoveredEvaluation(f"bare multiplier {type(expr).__name__} is not covered")
    if isinstance(expr, Prod):
        return _eval_prod(list(expr.factors))
    raise TypeError(f"cannot evaluate {expr!r} as a two-leg tensor")


def _finite_now(f):
    return isinstance(f, _Fin2) or (isinstance(f, Tn) and _as_fin2(f) is not None) or (isinstance(f, Cop) and f.alg.finite_comul)


def _eval_prod(fs: list) -> _Fin2:
    fs = [f if (_is_mult(f) or isinstance(f, Tn)) else _eval2(f) for f in fs]
    core = next((i for i, f in enumerate(fs) if _finite_now(f)), None)
    if core is None:
        for i in range(len(fs) - 1):
            a, b = fs[i], fs[i + 1]
            if _is_mult(a) and isinstance(b, Tn):
                fs[i : i + 2] = [_mult_cover(a, b, "right")]
                core = i
                break
            if isinstance(a, Tn) and _is_mult(b):
                fs[i : i + 2] = [_mult_cover(b, a, "left")]
                core = i
                break
        if core is None:
            raise UncoveredEvaluation("product has no covering factor")
    val = _eval2(fs[core])
    for f in fs[core + 1 :]:
        val = _mult_cover(f, val, "left") if _is_mult(f) else _times(val, f, "right")
    for f in reversed(fs[:core]):
        val = _mult_cover(f, val, "right") if _is_mult(f) else _times(val, f, "left")
    return val


def covered_eval(expr):
    """Evaluate a covered expression to a finite-support value.

    Two-leg results are dicts keyed by pairs; sliced results are one-leg dicts.
    """
    if isinstance(expr, Slice):
        T = _eval2(expr.expr)
        out: dict = {}
        for (a, b), s in T.data.items():
            if expr.leg == 0:
                v = expr.functional({a: ONE})
                k = b
            else:
                v = expr.functional({b: ONE})
                k = a
            if v:
                _acc(out, k, s * v)
        return out
    if isinstance(expr, Prod) and any(isinstance(f, Slice) for f in expr.factors):
        return _eval_slice_prod(expr)
    if isinstance(expr, El):
        return dict(expr.value)
    return _eval2(expr).data


def _eval_slice_prod(expr: Prod):
    """x·(ι⊗ω)(M)·z = (ι⊗ω)((x⊗1)M(z⊗1)) for one-leg products with one slice."""
    fs = list(expr.factors)
    idx = [i for i, f in enumerate(fs) if isinstance(f, Slice)]
    if len(idx) != 1:
        raise UncoveredEvaluation("only one sliced multiplier per product is supported")
    i = idx[0]
    sl = fs[i]
    keep = 1 - sl.leg
    algs = _leg_algs(sl.expr)
    other = algs[sl.leg]

    def lift(f):
        if keep == 0:
            return Tn(El(f.alg, f.value), One(other))
        return Tn(One(other), El(f.alg, f.value))

    left = [lift(f) for f in fs[:i]]
    right = [lift(f) for f in fs[i + 1 :]]
    if not left and not right:
        raise UncoveredEvaluation("sliced multiplier is not covered")
    inner = Prod(tuple(left) + (sl.expr,) + tuple(right))
    return covered_eval(Slice(sl.functional, sl.leg, inner))


def _leg_algs(e):
    if isinstance(e, Cop):
        return (e.alg, e.alg)
    if isinstance(e, Coact):
        return (e.pair.B, e.pair.A)
    if isinstance(e, Prod):
        for f in e.factors:
            try:
                return _leg_algs(f)
            except TypeError:
                continue
    if isinstance(e, Tn):
        return (e.left.alg, e.right.alg)
    raise TypeError(f"cannot determine legs of {e!r}")


def slice_multiplier(functional, leg: int, M) -> LazyMultiplier:
    """The one-leg multiplier (ι⊗ω)(M) (or (ω⊗ι)(M)) as a LazyMultiplier."""
    alg = _leg_algs(M)[1 - leg]
    s = Slice(functional, leg, M)
    return LazyMultiplier(
        alg,
        lambda x: covered_eval(Prod((s, El(alg, x)))),
        lambda x: covered_eval(Prod((El(alg, x), s))),
    )


def covering_independent(m: LazyMultiplier, xs, ys) -> Report:
    """(x m) y = x (m y) and (m x) y = m (x y) over the supplied coverings."""
    rep = Report()
    alg = m.alg

    def fails():
        for x in xs:
            for y in ys:
                if alg.mul(m.right(x), y) != alg.mul(x, m.left(y)):
                    yield {"x": _fmtd(x), "y": _fmtd(y), "law": "(xm)y = x(my)"}
                if alg.mul(m.left(x), y) != m.left(alg.mul(x, y)):
                    yield {"x": _fmtd(x), "y": _fmtd(y), "law": "(mx)y = m(xy)"}
                if alg.mul(x, m.right(y)) != m.right(alg.mul(x, y)):
                    yield {"x": _fmtd(x), "y": _fmtd(y), "law": "x(ym) = (xy)m"}

    rep.first_failure("covering independence", fails())
    return rep


def _fmtd(x: dict) -> str:
    return repr(sorted((repr(k), str(v)) for k, v in x.items()))


# ---------------------------------------------------------------------------
# sampled checks on lazy algebras


def lazy_invariance_checks(alg, samples: int = 100, seed: int = 0xB1C8) -> Report:
    """Invariance of psi and phi and covering independence of Delta, on random elements."""
    rep = Report()
    rng = random.Random(seed)
    data = [(alg.random(rng), alg.random(rng), alg.random(rng)) for _ in range(samples)]

    def right_inv():
        for x, z, _ in data:
            lhs = covered_eval(Slice(alg.psi, 0, Prod((Cop(alg, x), _cov1(alg, z)))))
            if lhs != scaled(alg.psi(x), z):
                yield {"x": _fmtd(x), "cover": _fmtd(z)}

    def left_inv():
        for x, z, _ in data:
            lhs = covered_eval(Slice(alg.phi, 1, Prod((_cov0(alg, z), Cop(alg, x)))))
            if lhs != scaled(alg.phi(x), z):
                yield {"x": _fmtd(x), "cover": _fmtd(z)}

    def cover_indep():
        for x, z, w in data:
            a = _eval2(Prod((Cop(alg, x), _cov1(alg, z))))
            b = covered_eval(Prod((Cop(alg, x), _cov1(alg, alg.mul(z, w)))))
            if _legwise(a, None, w, "right").data != b:
                yield {"x": _fmtd(x), "covers": [_fmtd(z), _fmtd(w)]}
            c = _eval2(Prod((_cov0(alg, z), Cop(alg, x))))
            d = covered_eval(Prod((_cov0(alg, alg.mul(w, z)), Cop(alg, x))))
            if _legwise(c, w, None, "left").data != d:
                yield {"x": _fmtd(x), "covers": [_fmtd(w), _fmtd(z)], "side": "left"}

    rep.first_failure("right invariance of psi (covered)", right_inv())
    rep.first_failure("left invariance of phi (covered)", left_inv())
    rep.first_failure("covering independence of the coproduct", cover_indep())
    return rep


def _cov1(alg, z):
    return Tn(One(alg), El(alg, z))


def _cov0(alg, z):
    return Tn(El(alg, z), One(alg))


def check_group_pair_sampled(H: GroupSpec, K: GroupSpec, lact, ract, samples: int = 100, seed: int = 0xB1C8) -> Report:
    """The matched pair axioms of groups on random elements."""
    rep = Report()
    rng = random.Random(seed)
    data = [(H.sample(rng), H.sample(rng), K.sample(rng), K.sample(rng)) for _ in range(samples)]
    eH, eK = H.identity, K.identity

    def fails(law):
        for h, h2, k, k2 in data:
            if law(h, h2, k, k2):
                yield {"h": H.label(h), "h'": H.label(h2), "k": K.label(k), "k'": K.label(k2)}

    rep.first_failure("group: ⊳ is a left action", fails(lambda h, h2, k, k2: lact(H.mul(h, h2), k) != lact(h, lact(h2, k)) or lact(eH, k) != k))
    rep.first_failure("group: ⊲ is a right action", fails(lambda h, h2, k, k2: ract(h, K.mul(k, k2)) != ract(ract(h, k), k2) or ract(h, eK) != h))
    rep.first_failure(
        "group: h⊳(kk') = (h⊳k)((h⊲k)⊳k')",
        fails(lambda h, h2, k, k2: lact(h, K.mul(k, k2)) != K.mul(lact(h, k), lact(ract(h, k), k2))),
    )
    rep.first_failure(
        "group: (hh')⊲k = (h⊲(h'⊳k))(h'⊲k)",
        fails(lambda h, h2, k, k2: ract(H.mul(h, h2), k) != H.mul(ract(h, lact(h2, k)), ract(h2, k))),
    )
    rep.first_failure("group: h⊳e = e and e⊲k = e", fails(lambda h, h2, k, k2: lact(h, eK) != eK or ract(eH, k) != eH))
    return rep


def verify_lazy_pair(lp: LazyGroupPair, samples: int = 100, seed: int = 0xB1C8) -> Report:
    """Sampled verification of a group-pair bicrossproduct through covered evaluation."""
    rep = Report()
    rep.extend(check_group(lp.H, samples, seed), "H: ")
    rep.extend(check_group(lp.K, samples, seed), "K: ")
    rep.extend(check_group_pair_sampled(lp.H, lp.K, lp.lact, lp.ract, samples, seed))
    rng = random.Random(seed)
    data = [(lp.random(rng), lp.random(rng), lp.random(rng)) for _ in range(samples)]

    def assoc():
        for x, y, z in data:
            if lp.mul(lp.mul(x, y), z) != lp.mul(x, lp.mul(y, z)):
                yield {"x": _fmtd(x), "y": _fmtd(y), "z": _fmtd(z)}

    def comul_mult():
        for x, y, z in data:
            lhs = covered_eval(Prod((Cop(lp, x), Cop(lp, y), _cov1(lp, z))))
            rhs = covered_eval(Prod((Cop(lp, lp.mul(x, y)), _cov1(lp, z))))
            if lhs != rhs:
                yield {"x": _fmtd(x), "y": _fmtd(y), "cover": _fmtd(z)}

    def counit():
        for x, _, z in data:
            right = covered_eval(Slice(lp.eps, 0, Prod((Cop(lp, x), _cov1(lp, z)))))
            left = covered_eval(Slice(lp.eps, 1, Prod((_cov0(lp, z), Cop(lp, x)))))
            if right != lp.mul(x, z) or left != lp.mul(z, x):
                yield {"x": _fmtd(x), "cover": _fmtd(z)}

    def antipode():
        for x, _, z in data:
            T = covered_eval(Prod((Cop(lp, x), _cov1(lp, z))))
            out: dict = {}
            for (a, b), s in T.items():
                for k, v in lp.mul(lp.S({a: ONE}), {b: ONE}).items():
                    _acc(out, k, s * v)
            T2 = covered_eval(Prod((_cov0(lp, z), Cop(lp, x))))
            out2: dict = {}
            for (a, b), s in T2.items():
                for k, v in lp.mul({a: ONE}, lp.S({b: ONE})).items():
                    _acc(out2, k, s * v)
            e = scaled(lp.eps(x), z)
            if out != e or out2 != e:
                yield {"x": _fmtd(x), "cover": _fmtd(z)}

    rep.first_failure("associativity", assoc())
    rep.first_failure("Delta# multiplicative (covered)", comul_mult())
    rep.first_failure("counit (covered)", counit())
    rep.first_failure("antipode (covered)", antipode())
    rep.extend(lazy_invariance_checks(lp, samples, seed))
    return rep
