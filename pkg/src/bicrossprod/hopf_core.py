"""Finite-dimensional Hopf (*-)algebras given by structure constants.

A :class:`HopfData` stores multiplication, unit, comultiplication, counit,
antipode and optionally an antilinear involution on a fixed basis.  Elements
are sparse dicts ``{basis index: scalar}``; elements of a tensor square are
dicts keyed by index pairs.  Integrals, cointegrals, the modular element, the
modular automorphisms and the scaling constant are found by exact linear
solving.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .exactlin import (
    ONE,
    ZERO,
    FinVec,
    LinMap,
    SingularMap,
    _Echelon,
    axpy,
    conj,
    nullspace_rows,
    scalar_from_json,
    scalar_to_json,
    scaled,
    solve_many,
    to_complex,
)
from .report import Report


class IntegralError(ValueError):
    """Raised when the invariance system has no or several independent solutions."""


class DegenerateForm(ValueError):
    pass


class StarMissing(ValueError):
    pass


_CACHE_LIMIT = 300  # cache all basis products up to this dimension


class HopfData:
    """A Hopf algebra on the basis ``labels``.

    ``mult`` maps ``(i, j)`` to the sparse product ``b_i b_j`` (missing pairs
    are zero) or is a callable doing the same.  ``comult`` is a list (or
    callable) giving ``Delta(b_i)`` as ``{(j, k): c}``.  ``antipode`` and
    ``star`` give the images of basis vectors; ``star`` is extended
    antilinearly.  ``generators`` optionally lists elements generating the
    algebra, which lets verification check products against generators only.
    """

    def __init__(self, labels, mult, unit, comult, counit, antipode, star=None, generators=None, name=""):
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.name = name
        self.unit = dict(unit)
        if callable(mult):
            self._mult_fn = mult
            self._mult = {}
        else:
            self._mult_fn = None
            self._mult = {k: v for k, v in mult.items() if v}
        self._comult_fn = comult if callable(comult) else None
        self._comult = [None] * self.dim if callable(comult) else [dict(c) for c in comult]
        if isinstance(counit, dict):
            counit = [counit.get(i, ZERO) for i in range(self.dim)]
        self.counit = list(counit)
        if isinstance(antipode, LinMap):
            self._S = antipode
            self._S_fn = None
        else:
            self._S = None
            self._S_fn = antipode if callable(antipode) else (lambda i, _s=antipode: _s[i])
        self._S_inv = None
        if star is None:
            self._star_fn = None
        else:
            self._star_fn = star if callable(star) else (lambda i, _s=star: _s[i])
        self._star_cache = {}
        self.generators = None if generators is None else [dict(g) for g in generators]
        self._cache = {}

    # -- structure access ----------------------------------------------------
    @property
    def has_star(self) -> bool:
        return self._star_fn is not None

    def mul_basis(self, i, j) -> dict:
        if self._mult_fn is None:
            return self._mult.get((i, j), {})
        r = self._mult.get((i, j))
        if r is None:
            r = self._mult_fn(i, j)
            if self.dim <= _CACHE_LIMIT:
                self._mult[(i, j)] = r
        return r

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                p = self.mul_basis(i, j)
                if p:
                    axpy(out, a * b, p)
        return out

    def comul_basis(self, i) -> dict:
        r = self._comult[i]
        if r is None:
            r = self._comult[i] = self._comult_fn(i)
        return r

    def comul(self, x: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            axpy(out, a, self.comul_basis(i))
        return out

    def eps(self, x: dict):
        s = ZERO
        for i, a in x.items():
            e = self.counit[i]
            if e:
                s = s + a * e
        return s

    @property
    def antipode(self) -> LinMap:
        if self._S is None:
            self._S = LinMap.from_function(self.dim, self.dim, self._S_fn)
        return self._S

    def S(self, x: dict) -> dict:
        return self.antipode.apply_dict(x)

    @property
    def antipode_inverse(self) -> LinMap:
        if self._S_inv is None:
            self._S_inv = self.antipode.inverse()
        return self._S_inv

    def S_inv(self, x: dict) -> dict:
        return self.antipode_inverse.apply_dict(x)

    def star_basis(self, i) -> dict:
        r = self._star_cache.get(i)
        if r is None:
            r = self._star_cache[i] = self._star_fn(i)
        return r

    def star(self, x: dict) -> dict:
        if self._star_fn is None:
            raise StarMissing("algebra has no *-structure")
        out: dict = {}
        for i, a in x.items():
            axpy(out, conj(a), self.star_basis(i))
        return out

    def one(self) -> dict:
        return dict(self.unit)

    def basis_vec(self, i) -> dict:
        return {i: ONE}

    # -- tensors -----------------------------------------------------------
    def tmul(self, X: dict, Y: dict) -> dict:
        """Product in the tensor square."""
        out: dict = {}
        for (a, b), s in X.items():
            for (c, d), t in Y.items():
                p = self.mul_basis(a, c)
                if not p:
                    continue
                q = self.mul_basis(b, d)
                if not q:
                    continue
                st = s * t
                for u, x in p.items():
                    for v, y in q.items():
                        key = (u, v)
                        nv = out.get(key, ZERO) + st * x * y
                        if nv:
                            out[key] = nv
                        else:
                            out.pop(key, None)
        return out

    def label_of(self, x: dict) -> str:
        if not x:
            return "0"
        parts = []
        for i, a in sorted(x.items()):
            parts.append(self.labels[i] if a == 1 else f"({_fmt(a)})*{self.labels[i]}")
        return " + ".join(parts)

    def apply(self, f, x: dict):
        """Evaluate the functional ``f`` (FinVec or dict) at ``x``."""
        f = f.data if isinstance(f, FinVec) else f
        s = ZERO
        for i, a in x.items():
            v = f.get(i)
            if v:
                s = s + v * a
        return s

    def __repr__(self):
        return f"HopfData({self.name or 'unnamed'}, dim={self.dim})"


def _fmt(a):
    from .exactlin import format_scalar

    return format_scalar(a)


def leg_apply(T: dict, f, leg: int) -> dict:
    """Apply the functional ``f`` to one leg of a two-leg tensor."""
    f = f.data if isinstance(f, FinVec) else f
    out: dict = {}
    for (a, b), s in T.items():
        if leg == 0:
            v = f.get(a)
            if v:
                k = b
            else:
                continue
        else:
            v = f.get(b)
            if v:
                k = a
            else:
                continue
        nv = out.get(k, ZERO) + s * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def flip(T: dict) -> dict:
    return {(b, a): s for (a, b), s in T.items()}


def outer(x: dict, y: dict) -> dict:
    return {(i, j): a * b for i, a in x.items() for j, b in y.items()}


def map_legs(T: dict, f=None, g=None) -> dict:
    """(f ⊗ g)(T) for linear maps given as callables dict->dict (None = identity)."""
    out: dict = {}
    for (a, b), s in T.items():
        left = f({a: ONE}) if f else {a: ONE}
        right = g({b: ONE}) if g else {b: ONE}
        for u, x in left.items():
            for v, y in right.items():
                k = (u, v)
                nv = out.get(k, ZERO) + s * x * y
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
    return out


def comul_left(h: HopfData, T: dict) -> dict:
    """(Delta ⊗ id)(T) as a dict keyed by triples."""
    out: dict = {}
    for (a, b), s in T.items():
        for (u, v), t in h.comul_basis(a).items():
            k = (u, v, b)
            nv = out.get(k, ZERO) + s * t
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return out


def comul_right(h: HopfData, T: dict) -> dict:
    out: dict = {}
    for (a, b), s in T.items():
        for (u, v), t in h.comul_basis(b).items():
            k = (a, u, v)
            nv = out.get(k, ZERO) + s * t
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return out


def double_comul(h: HopfData, i: int) -> dict:
    """(Delta ⊗ id) Delta (b_i) keyed by triples."""
    return comul_left(h, h.comul_basis(i))


# ---------------------------------------------------------------------------
# generators


def subalgebra_span(h: HopfData, gens) -> _Echelon:
    """Echelon basis of the unital subalgebra generated by ``gens``."""
    ech = _Echelon(h.dim)
    queue = []

    def push(v):
        if v and ech.add(v) is not None:
            queue.append(v)

    push(h.one())
    while queue:
        v = queue.pop()
        for g in gens:
            push(h.mul(v, g))
    return ech


def algebra_generators(h: HopfData) -> list[dict]:
    """A small generating set (greedy over the basis), cached on ``h``."""
    if h.generators is not None:
        return h.generators
    gens: list[dict] = []
    ech = subalgebra_span(h, gens)
    for i in range(h.dim):
        if len(ech.rows) == h.dim:
            break
        if ech.reduce({i: ONE}):
            gens.append({i: ONE})
            ech = subalgebra_span(h, gens)
    h.generators = gens
    return gens


# ---------------------------------------------------------------------------
# verification


def _product_triples(h: HopfData, mode: str, rng, samples):
    """Triples (x, y, z) of elements used for associativity-type checks."""
    n = h.dim
    if mode == "exhaustive":
        zs = [(f"{h.labels[k]}", {k: ONE}) for k in range(n)]
    else:
        zs = [(h.label_of(g), g) for g in algebra_generators(h)]
    if mode == "sample":
        for _ in range(samples):
            i, j = rng.randrange(n), rng.randrange(n)
            lz, z = zs[rng.randrange(len(zs))]
            yield i, j, lz, z
        return
    for i in range(n):
        for j in range(n):
            for lz, z in zs:
                yield i, j, lz, z


def resolve_mode(h: HopfData, products: str) -> str:
    if products == "auto":
        return "exhaustive" if h.dim <= 16 else "generators"
    if products not in ("exhaustive", "generators", "sample"):
        raise ValueError(f"unknown product mode {products!r}")
    return products


def verify_hopf(h: HopfData, products: str = "auto", samples: int = 100, seed: int = 0xB1C8) -> Report:
    """Check every Hopf algebra axiom; failures carry a witness.

    ``products`` selects how identities involving three elements are checked:
    ``exhaustive`` uses all basis triples, ``generators`` uses basis pairs
    against a generating set (which is itself checked to generate), and
    ``sample`` draws seeded random basis triples.
    """
    rep = Report()
    n = h.dim
    L = h.labels
    mode = resolve_mode(h, products)
    rng = random.Random(seed)
    one = h.one()

    def unit_fail():
        for i in range(n):
            b = {i: ONE}
            if h.mul(one, b) != b or h.mul(b, one) != b:
                yield {"x": L[i]}

    rep.first_failure("unit", unit_fail())

    if mode == "generators":
        gens = algebra_generators(h)
        span = subalgebra_span(h, gens)
        rep.add("generators span", len(span.rows) == n, {"span_dim": len(span.rows), "dim": n})

    def assoc_fail():
        for i, j, lz, z in _product_triples(h, mode, rng, samples):
            xy = h.mul_basis(i, j)
            left = h.mul(xy, z)
            right = h.mul({i: ONE}, h.mul({j: ONE}, z))
            if left != right:
                yield {"x": L[i], "y": L[j], "z": lz}

    rep.first_failure("associativity", assoc_fail(), detail=mode)

    def coassoc_fail():
        for i in range(n):
            D = h.comul_basis(i)
            if comul_left(h, D) != comul_right(h, D):
                yield {"x": L[i]}

    rep.first_failure("coassociativity", coassoc_fail())

    eps = {i: e for i, e in enumerate(h.counit) if e}

    def counit_fail():
        for i in range(n):
            D = h.comul_basis(i)
            if leg_apply(D, eps, 0) != {i: ONE} or leg_apply(D, eps, 1) != {i: ONE}:
                yield {"x": L[i]}

    rep.first_failure("counit", counit_fail())

    def comul_mult_fail():
        if h.comul(one) != outer(one, one):
            yield {"x": "1"}
        for i, j, lz, z in _pairs_with(h, mode, rng, samples):
            lhs = h.comul(h.mul({i: ONE}, z))
            rhs = h.tmul(h.comul_basis(i), h.comul(z))
            if lhs != rhs:
                yield {"x": L[i], "y": lz}

    rep.first_failure("comultiplication multiplicative", comul_mult_fail(), detail=mode)

    def counit_mult_fail():
        if h.eps(one) != 1:
            yield {"x": "1"}
        for i, j, lz, z in _pairs_with(h, mode, rng, samples):
            if h.eps(h.mul({i: ONE}, z)) != h.counit[i] * h.eps(z):
                yield {"x": L[i], "y": lz}

    rep.first_failure("counit multiplicative", counit_mult_fail(), detail=mode)

    def antipode_fail():
        for i in range(n):
            D = h.comul_basis(i)
            target = scaled(h.counit[i], one)
            left: dict = {}
            right: dict = {}
            for (a, b), s in D.items():
                axpy(left, s, h.mul(h.S({a: ONE}), {b: ONE}))
                axpy(right, s, h.mul({a: ONE}, h.S({b: ONE})))
            if left != target or right != target:
                yield {"x": L[i]}

    rep.first_failure("antipode", antipode_fail())

    try:
        h.antipode_inverse
        rep.add("antipode bijective", True)
    except SingularMap:
        rep.add("antipode bijective", False, {"rank": h.antipode.rank(), "dim": n})

    if h.has_star:
        _star_checks(h, rep, mode, rng, samples)
    return rep


def _pairs_with(h, mode, rng, samples):
    """Pairs (basis x, element z) for multiplicativity checks."""
    n = h.dim
    if mode == "exhaustive":
        zs = [(h.labels[k], {k: ONE}) for k in range(n)]
    else:
        zs = [(h.label_of(g), g) for g in algebra_generators(h)]
    if mode == "sample":
        for _ in range(samples):
            lz, z = zs[rng.randrange(len(zs))]
            yield rng.randrange(n), None, lz, z
        return
    for i in range(n):
        for lz, z in zs:
            yield i, None, lz, z


def _star_checks(h: HopfData, rep: Report, mode, rng, samples):
    n = h.dim
    L = h.labels

    def invol_fail():
        for i in range(n):
            if h.star(h.star({i: ONE})) != {i: ONE}:
                yield {"x": L[i]}

    rep.first_failure("star involutive", invol_fail())

    def anti_fail():
        for i, _, lz, z in _pairs_with(h, mode, rng, samples):
            x = {i: ONE}
            if h.star(h.mul(x, z)) != h.mul(h.star(z), h.star(x)):
                yield {"x": L[i], "y": lz}

    rep.first_failure("star antimultiplicative", anti_fail(), detail=mode)

    def comul_fail():
        for i in range(n):
            D = h.comul(h.star({i: ONE}))
            E: dict = {}
            for (a, b), s in h.comul_basis(i).items():
                axpy(E, conj(s), outer(h.star({a: ONE}), h.star({b: ONE})))
            if D != E:
                yield {"x": L[i]}

    rep.first_failure("star comultiplicative", comul_fail())

    def antipode_fail():
        for i in range(n):
            if h.S(h.star(h.S(h.star({i: ONE})))) != {i: ONE}:
                yield {"x": L[i]}

    rep.first_failure("star antipode", antipode_fail())


# ---------------------------------------------------------------------------
# integrals and modular data


@dataclass
class ModularData:
    psi: FinVec
    phi: FinVec
    delta: FinVec
    delta_inv: FinVec
    sigma: LinMap
    sigma_prime: LinMap
    tau: object
    h_left: FinVec | None = None
    k_right: FinVec | None = None


def _normalize(v: dict, dim: int) -> FinVec:
    first = min(v)
    inv = ONE / v[first]
    return FinVec(dim, scaled(inv, v))


def right_integral(h: HopfData) -> FinVec:
    """The right integral psi, normalized so its first nonzero coordinate is 1."""
    rows = []
    for a in range(h.dim):
        eqs: dict = {}
        for (u, v), c in h.comul_basis(a).items():
            row = eqs.setdefault(v, {})
            nv = row.get(u, ZERO) + c
            if nv:
                row[u] = nv
            else:
                row.pop(u, None)
        for v, c in h.unit.items():
            row = eqs.setdefault(v, {})
            nv = row.get(a, ZERO) - c
            if nv:
                row[a] = nv
            else:
                row.pop(a, None)
        rows.extend(eqs.values())
    ker = nullspace_rows(rows, h.dim)
    if len(ker) != 1:
        raise IntegralError(f"right-invariance solution space has dimension {len(ker)}")
    return _normalize(ker[0], h.dim)


def compose_functional(f: FinVec, m: LinMap) -> FinVec:
    """The functional f∘m."""
    out = {}
    for j, col in m.cols.items():
        s = ZERO
        for i, v in col.items():
            w = f.data.get(i)
            if w:
                s = s + w * v
        if s:
            out[j] = s
    return FinVec(m.dom, out)


def gram(h: HopfData, f) -> list[dict]:
    """Rows G[i] = {j: f(b_i b_j)} of the form (x, y) -> f(xy)."""
    f = f.data if isinstance(f, FinVec) else f
    rows = []
    for i in range(h.dim):
        row = {}
        for j in range(h.dim):
            s = ZERO
            for k, v in h.mul_basis(i, j).items():
                w = f.get(k)
                if w:
                    s = s + w * v
            if s:
                row[j] = s
        rows.append(row)
    return rows


def modular_automorphism(h: HopfData, f, G: list | None = None) -> LinMap:
    """The map X with f(ab) = f(b X(a)) for all a, b."""
    n = h.dim
    G = gram(h, f) if G is None else G
    res = solve_many(LinMap.from_rows(n, G), G)
    if res is None or res[1]:
        raise DegenerateForm("the form (a, b) -> f(ab) is degenerate")
    return LinMap(n, n, {i: v for i, v in enumerate(res[0])})


def modular_element(h: HopfData, phi: FinVec) -> FinVec:
    a = phi.first_nonzero()
    if a is None:
        raise IntegralError("zero left integral")
    v = leg_apply(h.comul_basis(a), phi, 0)
    return FinVec(h.dim, scaled(ONE / phi[a], v))


def proportionality(f: FinVec, g: FinVec):
    """The scalar c with f = c g, or None if there is none."""
    k = g.first_nonzero()
    if k is None:
        return ZERO if f.is_zero() else None
    c = f[k] / g[k]
    return c if f == g * c else None


def find_cointegrals(h: HopfData) -> tuple[FinVec, FinVec]:
    """Left cointegral h (bh = eps(b)h) and right cointegral k (kb = eps(b)k)."""
    gens = algebra_generators(h)
    out = []
    for side in ("left", "right"):
        rows = []
        for g in gens:
            e = h.eps(g)
            eqs: dict = {}
            for j in range(h.dim):
                prod = h.mul(g, {j: ONE}) if side == "left" else h.mul({j: ONE}, g)
                for r, v in prod.items():
                    eqs.setdefault(r, {})[j] = v
                if e:
                    row = eqs.setdefault(j, {})
                    nv = row.get(j, ZERO) - e
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
            rows.extend(eqs.values())
        ker = nullspace_rows(rows, h.dim)
        if len(ker) != 1:
            raise IntegralError(f"{side} cointegral space has dimension {len(ker)}")
        out.append(_normalize(ker[0], h.dim))
    return out[0], out[1]


def find_integrals(h: HopfData, cointegrals: bool = True) -> ModularData:
    """All modular data of ``h`` by exact solving; psi normalized, phi = psi∘S."""
    n = h.dim
    psi = right_integral(h)
    S = h.antipode
    phi = compose_functional(psi, S)
    delta = modular_element(h, phi)
    delta_inv = FinVec(n, h.S(delta.data))
    sigma = modular_automorphism(h, phi)
    sigma_prime = modular_automorphism(h, psi)
    psi_s2 = compose_functional(psi, S @ S)
    tau = proportionality(psi_s2, psi)
    if tau is None:
        raise IntegralError("psi∘S² is not proportional to psi")
    hl = kr = None
    if cointegrals:
        hl, kr = find_cointegrals(h)
    return ModularData(psi, phi, delta, delta_inv, sigma, sigma_prime, tau, hl, kr)


def check_modular(h: HopfData, md: ModularData) -> Report:
    """Verify every defining identity of the modular data on all basis elements."""
    rep = Report()
    n = h.dim
    L = h.labels
    one = h.one()

    def inv_fail(f, leg, target_for):
        for a in range(n):
            if leg_apply(h.comul_basis(a), f, leg) != target_for(a):
                yield {"x": L[a]}

    rep.first_failure("right invariance", inv_fail(md.psi, 0, lambda a: scaled(md.psi[a], one)))
    rep.first_failure("left invariance", inv_fail(md.phi, 1, lambda a: scaled(md.phi[a], one)))
    rep.add("phi = psi∘S", md.phi == compose_functional(md.psi, h.antipode))
    rep.first_failure("modular element (left integral)", inv_fail(md.phi, 0, lambda a: scaled(md.phi[a], md.delta.data)))
    rep.first_failure("modular element (right integral)", inv_fail(md.psi, 1, lambda a: scaled(md.psi[a], md.delta_inv.data)))
    d = md.delta.data
    rep.add(
        "modular element group-like",
        h.comul(d) == outer(d, d) and h.eps(d) == 1 and h.S(d) == md.delta_inv.data and h.mul(d, md.delta_inv.data) == one,
    )
    for name, f, m in (("sigma", md.phi, md.sigma), ("sigma'", md.psi, md.sigma_prime)):
        G = gram(h, f)

        def fails(G=G, m=m, f=f):
            for a in range(n):
                sa = m.column(a)
                for b in range(n):
                    rhs = h.apply(f, h.mul({b: ONE}, sa))
                    if G[a].get(b, ZERO) != rhs:
                        yield {"a": L[a], "b": L[b]}

        rep.first_failure(f"modular automorphism {name}", fails())
    S2 = h.antipode @ h.antipode
    rep.add("psi∘S^2 = tau psi", compose_functional(md.psi, S2) == md.psi * md.tau, {"tau": str(md.tau)})
    rep.add("sigma'(delta) = delta / tau", md.sigma_prime.apply_dict(d) == scaled(ONE / md.tau, d))
    if md.h_left is not None:
        hl, kr = md.h_left.data, md.k_right.data

        def co_fail():
            for b in range(n):
                e = h.counit[b]
                if h.mul({b: ONE}, hl) != scaled(e, hl):
                    yield {"b": L[b], "side": "left"}
                if h.mul(kr, {b: ONE}) != scaled(e, kr):
                    yield {"b": L[b], "side": "right"}

        rep.first_failure("cointegrals", co_fail())
        rep.add("S(h) proportional to k", proportionality(FinVec(n, h.S(hl)), md.k_right) is not None)
    if h.has_star:
        psi_star = FinVec(n, {i: conj(h.apply(md.psi, h.star({i: ONE}))) for i in range(n)})
        rep.add("psi∘* proportional to conj∘psi", proportionality(psi_star, md.psi) is not None)
    return rep


# ---------------------------------------------------------------------------
# positivity


@dataclass
class PositivityResult:
    ok: bool
    hermitian: bool
    min_eigenvalue: float

    def __bool__(self):
        return self.ok


def check_positivity(h: HopfData, psi, tol: float = 1e-9) -> PositivityResult:
    """Is x -> psi(x* x) positive?  Gram matrix G_ij = psi(b_i* b_j) must be PSD.

    Hermitian symmetry is checked exactly; the eigenvalue test is the single
    floating point check in the library (tolerance ``tol``).
    """
    if not h.has_star:
        raise StarMissing("positivity needs a *-structure")
    n = h.dim
    psi = psi.data if isinstance(psi, FinVec) else psi
    G = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        si = h.star({i: ONE})
        for j in range(n):
            G[i][j] = h.apply(psi, h.mul(si, {j: ONE}))
    herm = all(G[i][j] == conj(G[j][i]) for i in range(n) for j in range(i, n))
    M = np.array([[to_complex(x) for x in row] for row in G], dtype=complex)
    if not herm:
        return PositivityResult(False, False, float("nan"))
    lam = float(np.linalg.eigvalsh(M).min()) if n else 0.0
    return PositivityResult(lam >= -tol, True, lam)


# ---------------------------------------------------------------------------
# constructions


def opposite(h: HopfData) -> HopfData:
    S_inv = h.antipode_inverse
    return HopfData(
        h.labels,
        lambda i, j: h.mul_basis(j, i),
        h.unit,
        [h.comul_basis(i) for i in range(h.dim)],
        h.counit,
        S_inv,
        star=(h.star_basis if h.has_star else None),
        generators=h.generators,
        name=f"{h.name}^op",
    )


def coopposite(h: HopfData) -> HopfData:
    S_inv = h.antipode_inverse
    mult = h._mult if h._mult_fn is None else h.mul_basis
    return HopfData(
        h.labels,
        mult,
        h.unit,
        [flip(h.comul_basis(i)) for i in range(h.dim)],
        h.counit,
        S_inv,
        star=(h.star_basis if h.has_star else None),
        generators=h.generators,
        name=f"{h.name}^cop",
    )


def tensor_hopf(h1: HopfData, h2: HopfData) -> HopfData:
    n2 = h2.dim

    def idx(i, j):
        return i * n2 + j

    def mult(p, q):
        i, j = divmod(p, n2)
        k, l = divmod(q, n2)
        a = h1.mul_basis(i, k)
        b = h2.mul_basis(j, l)
        return {idx(u, v): x * y for u, x in a.items() for v, y in b.items()}

    def comult(p):
        i, j = divmod(p, n2)
        out = {}
        for (a, b), s in h1.comul_basis(i).items():
            for (c, d), t in h2.comul_basis(j).items():
                k = (idx(a, c), idx(b, d))
                out[k] = out.get(k, ZERO) + s * t
        return {k: v for k, v in out.items() if v}

    def anti(p):
        i, j = divmod(p, n2)
        return {idx(u, v): x * y for u, x in h1.S({i: ONE}).items() for v, y in h2.S({j: ONE}).items()}

    def tensor_star(p):
        i, j = divmod(p, n2)
        return {idx(u, v): x * y for u, x in h1.star_basis(i).items() for v, y in h2.star_basis(j).items()}

    star = tensor_star if h1.has_star and h2.has_star else None

    unit = {idx(u, v): x * y for u, x in h1.unit.items() for v, y in h2.unit.items()}
    counit = [h1.counit[i] * h2.counit[j] for i in range(h1.dim) for j in range(n2)]
    gens = []
    for g in algebra_generators(h1):
        gens.append({idx(u, v): x * y for u, x in g.items() for v, y in h2.unit.items()})
    for g in algebra_generators(h2):
        gens.append({idx(u, v): x * y for u, x in h1.unit.items() for v, y in g.items()})
    labels = [f"{a}⊗{b}" for a in h1.labels for b in h2.labels]
    return HopfData(labels, mult, unit, comult, counit, anti, star=star, generators=gens, name=f"{h1.name}⊗{h2.name}")


def same_structure(h1: HopfData, h2: HopfData) -> bool:
    """Identical structure constants on identical index sets."""
    n = h1.dim
    if n != h2.dim or h1.unit != h2.unit or h1.counit != h2.counit:
        return False
    for i in range(n):
        if h1.comul_basis(i) != h2.comul_basis(i) or h1.S({i: ONE}) != h2.S({i: ONE}):
            return False
        for j in range(n):
            if h1.mul_basis(i, j) != h2.mul_basis(i, j):
                return False
    return True


def is_iso(h1: HopfData, h2: HopfData, f: LinMap) -> Report:
    """Check that f: h1 -> h2 is a Hopf algebra isomorphism."""
    rep = Report()
    n = h1.dim
    L = h1.labels
    rep.add("bijective", f.dom == n and f.cod == h2.dim and f.rank() == n)
    rep.add("unit", f.apply_dict(h1.unit) == h2.unit)

    def mult_fail():
        for i in range(n):
            fi = f.column(i)
            for j in range(n):
                if f.apply_dict(h1.mul_basis(i, j)) != h2.mul(fi, f.column(j)):
                    yield {"x": L[i], "y": L[j]}

    rep.first_failure("multiplicative", mult_fail())

    def comul_fail():
        for i in range(n):
            lhs = h2.comul(f.column(i))
            rhs = map_legs(h1.comul_basis(i), f.apply_dict, f.apply_dict)
            if lhs != rhs:
                yield {"x": L[i]}

    rep.first_failure("comultiplicative", comul_fail())
    rep.add("counit", all(h2.eps(f.column(i)) == h1.counit[i] for i in range(n)))
    rep.add("antipode", all(h2.S(f.column(i)) == f.apply_dict(h1.S({i: ONE})) for i in range(n)))
    return rep


# ---------------------------------------------------------------------------
# JSON


def _vec_json(v: dict) -> list:
    return [[k, scalar_to_json(v[k])] for k in sorted(v)]


def _vec_from(lst) -> dict:
    return {int(k): scalar_from_json(s) for k, s in lst}


def hopf_to_json(h: HopfData) -> dict:
    n = h.dim
    mult = []
    for i in range(n):
        for j in range(n):
            p = h.mul_basis(i, j)
            if p:
                mult.append([i, j, _vec_json(p)])
    comult = []
    for i in range(n):
        D = h.comul_basis(i)
        comult.append([i, [[a, b, scalar_to_json(D[(a, b)])] for (a, b) in sorted(D)]])
    out = {
        "schema": "hopf.v1",
        "name": h.name,
        "basis": list(h.labels),
        "mult": mult,
        "unit": _vec_json(h.unit),
        "comult": comult,
        "counit": [[i, scalar_to_json(e)] for i, e in enumerate(h.counit) if e],
        "antipode": [[i, _vec_json(h.S({i: ONE}))] for i in range(n)],
    }
    if h.generators is not None:
        out["generators"] = [_vec_json(g) for g in h.generators]
    if h.has_star:
        out["star"] = [[i, _vec_json(h.star_basis(i))] for i in range(n)]
    return out


def hopf_from_json(d: dict) -> HopfData:
    if d.get("schema") != "hopf.v1":
        raise ValueError("not a hopf.v1 document")
    labels = d["basis"]
    n = len(labels)
    mult = {(int(i), int(j)): _vec_from(v) for i, j, v in d["mult"]}
    comult = [dict() for _ in range(n)]
    for i, terms in d["comult"]:
        comult[int(i)] = {(int(a), int(b)): scalar_from_json(s) for a, b, s in terms}
    counit = [ZERO] * n
    for i, s in d["counit"]:
        counit[int(i)] = scalar_from_json(s)
    anti = [dict() for _ in range(n)]
    for i, v in d["antipode"]:
        anti[int(i)] = _vec_from(v)
    star = None
    if "star" in d:
        star = [dict() for _ in range(n)]
        for i, v in d["star"]:
            star[int(i)] = _vec_from(v)
    for key in mult:
        if not (0 <= key[0] < n and 0 <= key[1] < n):
            raise ValueError("mult index out of range")
    gens = None
    if "generators" in d:
        gens = [_vec_from(g) for g in d["generators"]]
    return HopfData(labels, mult, _vec_from(d["unit"]), comult, counit, anti, star=star, generators=gens, name=d.get("name", ""))
