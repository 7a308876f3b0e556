"""Exact scalars (rationals and cyclotomic fields) and sparse linear algebra.

Rational scalars are ``gmpy2.mpq`` values.  Elements of Q(zeta_n) that are not
rational are :class:`Cyc` instances holding a coefficient vector over Q reduced
modulo the n-th cyclotomic polynomial.  Every arithmetic result that happens to
be rational is returned as an ``mpq``, so the representation is canonical.

Vectors are :class:`FinVec` (sparse, no stored zeros) and matrices are
:class:`LinMap` (sparse, column oriented).  Tensor products use the row-major
index convention ``(i, j) -> i * dim2 + j``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

ZERO = mpq(0)
ONE = mpq(1)


class DimensionMismatch(ValueError):
    pass


class SingularMap(ValueError):
    pass


# ---------------------------------------------------------------------------
# cyclotomic fields


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients (constant term first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, cyclotomic_poly(d))
    return tuple(num)


def _poly_divexact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]  # den is monic
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    assert not any(num[: len(den) - 1])
    return out


@lru_cache(maxsize=None)
def _field(n: int):
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    # powers[k] = zeta^k reduced, for 0 <= k < max(n, 2*deg - 1)
    top = max(n, 2 * deg - 1)
    powers = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(top):
        powers.append(tuple(cur))
        lead = cur[-1]
        cur = [0] + cur[:-1]
        if lead:
            for i in range(deg):
                cur[i] -= lead * phi[i]
    return deg, tuple(powers)


def field_degree(n: int) -> int:
    return _field(n)[0]


def _reduce(n, conv):
    deg, powers = _field(n)
    out = list(conv[:deg]) + [ZERO] * max(0, deg - len(conv))
    for k in range(deg, len(conv)):
        c = conv[k]
        if c:
            for i, p in enumerate(powers[k]):
                if p:
                    out[i] += c * p
    return out


def _make(n, coeffs):
    for c in coeffs[1:]:
        if c:
            return Cyc(n, tuple(coeffs))
    return mpq(coeffs[0]) if coeffs else ZERO


class Cyc:
    """A non-rational element of Q(zeta_n); build these with :func:`zeta`."""

    __slots__ = ("n", "c")

    def __init__(self, n, c):
        self.n = n
        self.c = c

    # -- coercion helpers
    def _lift(self, m):
        if m == self.n:
            return list(self.c)
        deg, powers = _field(m)
        out = [ZERO] * deg
        step = m // self.n
        for i, a in enumerate(self.c):
            if a:
                for j, p in enumerate(powers[(i * step) % m]):
                    if p:
                        out[j] += a * p
        return out

    def _pair(self, other):
        if isinstance(other, Cyc):
            if other.n == self.n:
                return self.n, list(self.c), list(other.c)
            m = self.n * other.n // math.gcd(self.n, other.n)
            return m, self._lift(m), other._lift(m)
        deg = field_degree(self.n)
        return self.n, list(self.c), [mpq(other)] + [ZERO] * (deg - 1)

    # -- arithmetic
    def __add__(self, other):
        if not isinstance(other, Cyc):
            if not other:
                return self
            c = list(self.c)
            c[0] += other
            return Cyc(self.n, tuple(c))
        n, a, b = self._pair(other)
        return _make(n, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, tuple(-x for x in self.c))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Cyc):
            if not other:
                return ZERO
            return Cyc(self.n, tuple(x * other for x in self.c))
        n, a, b = self._pair(other)
        conv = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return _make(n, _reduce(n, conv))

    __rmul__ = __mul__

    def inverse(self):
        # solve (self * z) = 1 in the power basis
        deg = field_degree(self.n)
        cols = []
        for j in range(deg):
            e = [ZERO] * deg
            e[j] = ONE
            prod = self * _make(self.n, e) if j else self
            cols.append(_coeffs(prod, self.n))
        rows = [{j: cols[j][i] for j in range(deg) if cols[j][i]} for i in range(deg)]
        rows[0][deg] = ONE
        sol = _Echelon(deg)
        for r in rows:
            sol.add(r)
        return _make(self.n, [sol.rows[j].get(deg, ZERO) for j in range(deg)])

    def __truediv__(self, other):
        if isinstance(other, Cyc):
            return self * other.inverse()
        return Cyc(self.n, tuple(x / other for x in self.c))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Cyc):
            if other.n == self.n:
                return self.c == other.c
            n, a, b = self._pair(other)
            return a == b
        try:
            mpq(other)
        except (TypeError, ValueError):
            return NotImplemented
        return False

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __bool__(self):
        return True

    def __hash__(self):
        # equal elements may be stored over different conductors, so hash the
        # complex value rounded well above floating point noise
        z = self.to_complex()
        return hash((round(z.real, 9), round(z.imag, 9)))

    def conj(self):
        deg, powers = _field(self.n)
        out = [ZERO] * deg
        for i, a in enumerate(self.c):
            if a:
                for j, p in enumerate(powers[(-i) % self.n]):
                    if p:
                        out[j] += a * p
        return _make(self.n, out)

    def to_complex(self) -> complex:
        w = cmath.exp(2j * cmath.pi / self.n)
        return sum(float(a) * w**i for i, a in enumerate(self.c))

    def __repr__(self):
        terms = []
        for i, a in enumerate(self.c):
            if a:
                terms.append(f"{a}" if i == 0 else f"{a}*z{self.n}^{i}")
        return "(" + " + ".join(terms) + ")"


def _coeffs(x, n):
    deg = field_degree(n)
    if isinstance(x, Cyc):
        return x._lift(n)
    return [mpq(x)] + [ZERO] * (deg - 1)


def zeta(n: int, k: int = 1):
    """The power zeta_n^k as a scalar."""
    k %= n
    if n <= 2:
        return ONE if k == 0 else mpq(-1)
    deg, powers = _field(n)
    return _make(n, [mpq(p) for p in powers[k]])


def conj(x):
    return x.conj() if isinstance(x, Cyc) else x


def to_complex(x) -> complex:
    return x.to_complex() if isinstance(x, Cyc) else complex(float(x))


def conductor(x) -> int:
    return x.n if isinstance(x, Cyc) else 1


def is_rational(x) -> bool:
    return not isinstance(x, Cyc)


def scalar(x):
    """Coerce ints, strings like '3/4' and mpq values to a scalar."""
    if isinstance(x, Cyc):
        return x
    return mpq(x)


def field_tag(n: int) -> str:
    return "Q" if n <= 1 else f"Q(zeta_{n})"


def parse_field(tag: str) -> int:
    if tag == "Q":
        return 1
    if tag.startswith("Q(zeta_") and tag.endswith(")"):
        n = int(tag[7:-1])
        if n >= 1:
            return n
    raise ValueError(f"unknown field tag {tag!r}")


def scalar_to_json(x) -> dict:
    n = conductor(x)
    coeffs = _coeffs(x, n) if n > 1 else [mpq(x)]
    return {
        "field": field_tag(n),
        "coeffs": [[str(c.numerator), str(c.denominator)] for c in coeffs],
    }


def scalar_from_json(d: dict):
    n = parse_field(d["field"])
    coeffs = [mpq(int(a), int(b)) for a, b in d["coeffs"]]
    if len(coeffs) != (field_degree(n) if n > 1 else 1):
        raise ValueError("coefficient vector has the wrong length")
    return _make(n, coeffs) if n > 1 else coeffs[0]


def format_scalar(x) -> str:
    if isinstance(x, Cyc):
        return repr(x)
    return str(mpq(x))


# ---------------------------------------------------------------------------
# sparse dictionaries


def axpy(dst: dict, a, src: dict) -> dict:
    """dst += a * src, dropping zeros; returns dst."""
    for k, v in src.items():
        nv = dst.get(k, ZERO) + a * v
        if nv:
            dst[k] = nv
        else:
            dst.pop(k, None)
    return dst


def scaled(a, src: dict) -> dict:
    if not a:
        return {}
    return {k: a * v for k, v in src.items()}


def clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


# ---------------------------------------------------------------------------
# vectors and maps


class FinVec:
    """Sparse vector in a space of dimension ``dim``."""

    __slots__ = ("dim", "data")

    def __init__(self, dim: int, data: dict | None = None):
        self.dim = dim
        self.data = {}
        if data:
            for k, v in data.items():
                if not 0 <= k < dim:
                    raise IndexError(f"index {k} outside dimension {dim}")
                if v:
                    self.data[k] = v

    @classmethod
    def basis(cls, dim, i):
        return cls(dim, {i: ONE})

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    @classmethod
    def from_list(cls, values):
        return cls(len(values), {i: scalar(v) for i, v in enumerate(values)})

    def __getitem__(self, i):
        return self.data.get(i, ZERO)

    def items(self):
        return self.data.items()

    def support(self):
        return sorted(self.data)

    def to_list(self):
        return [self[i] for i in range(self.dim)]

    def __len__(self):
        return self.dim

    def _check(self, other):
        if self.dim != other.dim:
            raise DimensionMismatch(f"{self.dim} != {other.dim}")

    def __add__(self, other):
        self._check(other)
        return FinVec(self.dim, axpy(dict(self.data), ONE, other.data))

    def __sub__(self, other):
        self._check(other)
        return FinVec(self.dim, axpy(dict(self.data), -ONE, other.data))

    def __neg__(self):
        return FinVec(self.dim, scaled(-ONE, self.data))

    def __mul__(self, a):
        return FinVec(self.dim, scaled(a, self.data))

    __rmul__ = __mul__

    def __truediv__(self, a):
        return self * (ONE / a)

    def dot(self, other) -> object:
        """Bilinear pairing sum_i v_i w_i."""
        self._check(other)
        small, big = (self, other) if len(self.data) <= len(other.data) else (other, self)
        s = ZERO
        for k, v in small.data.items():
            w = big.data.get(k)
            if w is not None:
                s = s + v * w
        return s

    def __eq__(self, other):
        if not isinstance(other, FinVec):
            return NotImplemented
        return self.dim == other.dim and self.data == other.data

    def __hash__(self):
        return hash((self.dim, frozenset(self.data)))

    def is_zero(self):
        return not self.data

    def first_nonzero(self):
        return min(self.data) if self.data else None

    def __repr__(self):
        body = ", ".join(f"{k}: {format_scalar(v)}" for k, v in sorted(self.data.items()))
        return f"FinVec({self.dim}, {{{body}}})"


class LinMap:
    """Sparse matrix stored by columns: ``cols[j]`` is the image of basis vector j."""

    __slots__ = ("dom", "cod", "cols")

    def __init__(self, dom: int, cod: int, cols: dict | None = None):
        self.dom = dom
        self.cod = cod
        self.cols = {}
        if cols:
            for j, col in cols.items():
                col = col.data if isinstance(col, FinVec) else col
                col = clean(col)
                if col:
                    self.cols[j] = col

    @classmethod
    def identity(cls, n):
        return cls(n, n, {i: {i: ONE} for i in range(n)})

    @classmethod
    def zero(cls, dom, cod):
        return cls(dom, cod)

    @classmethod
    def from_function(cls, dom, cod, f):
        """Build the map whose column j is ``f(j)`` (a dict or FinVec)."""
        return cls(dom, cod, {j: f(j) for j in range(dom)})

    @classmethod
    def from_rows(cls, dom, rows):
        cols: dict = {}
        for i, row in enumerate(rows):
            for j, v in row.items():
                if v:
                    cols.setdefault(j, {})[i] = v
        return cls(dom, len(rows), cols)

    @classmethod
    def from_dense(cls, rows):
        rows = [[scalar(x) for x in r] for r in rows]
        dom = len(rows[0]) if rows else 0
        return cls.from_rows(dom, [{j: x for j, x in enumerate(r) if x} for r in rows])

    def column(self, j) -> dict:
        return self.cols.get(j, {})

    def rows(self) -> list[dict]:
        out = [dict() for _ in range(self.cod)]
        for j, col in self.cols.items():
            for i, v in col.items():
                out[i][j] = v
        return out

    def entry(self, i, j):
        return self.cols.get(j, {}).get(i, ZERO)

    def apply_dict(self, v: dict) -> dict:
        out: dict = {}
        for j, a in v.items():
            col = self.cols.get(j)
            if col:
                axpy(out, a, col)
        return out

    def apply(self, v):
        if isinstance(v, FinVec):
            if v.dim != self.dom:
                raise DimensionMismatch(f"map domain {self.dom} != vector dim {v.dim}")
            return FinVec(self.cod, self.apply_dict(v.data))
        return self.apply_dict(v)

    __call__ = apply

    def __matmul__(self, other: "LinMap") -> "LinMap":
        if other.cod != self.dom:
            raise DimensionMismatch(f"cannot compose {self.dom}<-{self.cod} after {other.dom}->{other.cod}")
        return LinMap(other.dom, self.cod, {j: self.apply_dict(c) for j, c in other.cols.items()})

    def __add__(self, other):
        self._check(other)
        cols = {j: dict(c) for j, c in self.cols.items()}
        for j, c in other.cols.items():
            axpy(cols.setdefault(j, {}), ONE, c)
        return LinMap(self.dom, self.cod, cols)

    def __sub__(self, other):
        return self + other * mpq(-1)

    def __mul__(self, a):
        return LinMap(self.dom, self.cod, {j: scaled(a, c) for j, c in self.cols.items()})

    __rmul__ = __mul__

    def _check(self, other):
        if (self.dom, self.cod) != (other.dom, other.cod):
            raise DimensionMismatch("shape mismatch")

    def transpose(self) -> "LinMap":
        cols: dict = {}
        for j, col in self.cols.items():
            for i, v in col.items():
                cols.setdefault(i, {})[j] = v
        return LinMap(self.cod, self.dom, cols)

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.dom, self.cod) == (other.dom, other.cod) and self.cols == other.cols

    def __hash__(self):
        return hash((self.dom, self.cod, len(self.cols)))

    def is_identity(self):
        return self.dom == self.cod and self == LinMap.identity(self.dom)

    def nnz(self):
        return sum(len(c) for c in self.cols.values())

    def rank(self) -> int:
        ech = _Echelon(self.dom)
        for r in self.rows():
            if r:
                ech.add(r)
        return len(ech.rows)

    def inverse(self) -> "LinMap":
        if self.dom != self.cod:
            raise SingularMap("non-square map")
        n = self.dom
        sol = solve_many(self, [{i: ONE} for i in range(n)])
        if sol is None or sol[1]:
            raise SingularMap("map is not invertible")
        return LinMap(n, n, {i: v for i, v in enumerate(sol[0])})

    def to_dense(self) -> list[list]:
        rows = self.rows()
        return [[r.get(j, ZERO) for j in range(self.dom)] for r in rows]

    def __repr__(self):
        return f"LinMap({self.dom}->{self.cod}, nnz={self.nnz()})"


# ---------------------------------------------------------------------------
# tensors


def tensor_index(i: int, j: int, dim2: int) -> int:
    return i * dim2 + j


def tensor(x, y):
    """Kronecker product of two FinVecs or two LinMaps (row-major indices)."""
    if isinstance(x, FinVec) and isinstance(y, FinVec):
        d2 = y.dim
        data = {}
        for i, a in x.data.items():
            for j, b in y.data.items():
                data[i * d2 + j] = a * b
        return FinVec(x.dim * d2, data)
    if isinstance(x, LinMap) and isinstance(y, LinMap):
        cols = {}
        for j1, c1 in x.cols.items():
            for j2, c2 in y.cols.items():
                col = {}
                for i1, a in c1.items():
                    for i2, b in c2.items():
                        col[i1 * y.cod + i2] = a * b
                cols[j1 * y.dom + j2] = col
        return LinMap(x.dom * y.dom, x.cod * y.cod, cols)
    raise TypeError("tensor expects two FinVecs or two LinMaps")


# ---------------------------------------------------------------------------
# elimination


class _Echelon:
    """Incremental Gauss-Jordan elimination on sparse rows.

    Only columns below ``limit`` may become pivots; further columns carry
    right-hand sides.  ``rows`` maps pivot column -> row with pivot entry 1,
    kept fully reduced against all other pivot columns.
    """

    def __init__(self, limit: int):
        self.limit = limit
        self.rows: dict[int, dict] = {}
        self.occ: dict[int, set] = {}
        self.inconsistent: dict | None = None

    def _sub(self, owner, row, a, src):
        occ = self.occ
        for k, v in src.items():
            nv = row.get(k, ZERO) - a * v
            if nv:
                if k not in row and owner is not None:
                    occ.setdefault(k, set()).add(owner)
                row[k] = nv
            else:
                if k in row:
                    del row[k]
                    if owner is not None:
                        occ[k].discard(owner)

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        for c in [c for c in row if c in self.rows]:
            a = row.get(c)
            if a:
                self._sub(None, row, a, self.rows[c])
        return row

    def add(self, row: dict) -> int | None:
        """Insert a row; returns the new pivot column or None if dependent."""
        row = self.reduce(row)
        if not row:
            return None
        cand = [c for c in row if c < self.limit]
        if not cand:
            if self.inconsistent is None:
                self.inconsistent = row
            return None
        p = min(cand)
        inv = ONE / row[p]
        if inv != 1:
            row = {k: v * inv for k, v in row.items()}
        for q in list(self.occ.get(p, ())):
            other = self.rows[q]
            self._sub(q, other, other[p], row)
        self.occ.pop(p, None)
        self.rows[p] = row
        for k in row:
            if k != p:
                self.occ.setdefault(k, set()).add(p)
        return p

    def free_columns(self):
        return [j for j in range(self.limit) if j not in self.rows]

    def kernel(self) -> list[dict]:
        out = []
        for f in self.free_columns():
            v = {f: ONE}
            for p in self.occ.get(f, ()):
                v[p] = -self.rows[p][f]
            out.append(v)
        return out


@dataclass
class AffineSolution:
    """Solution set ``particular + span(kernel)`` of a linear system."""

    particular: FinVec
    kernel: list

    @property
    def unique(self) -> bool:
        return not self.kernel

    def contains(self, v: FinVec) -> bool:
        diff = v - self.particular
        if diff.is_zero():
            return True
        ech = _Echelon(v.dim)
        for k in self.kernel:
            ech.add(k.data)
        return not ech.reduce(diff.data)


def nullspace(m: LinMap) -> list[FinVec]:
    """Exact basis of the kernel of ``m``."""
    ech = _Echelon(m.dom)
    for r in m.rows():
        if r:
            ech.add(r)
    return [FinVec(m.dom, v) for v in ech.kernel()]


def nullspace_rows(rows, ncols: int) -> list[dict]:
    """Kernel of the system whose equations are the given sparse rows."""
    ech = _Echelon(ncols)
    for r in rows:
        if r:
            ech.add(r)
    return ech.kernel()


def solve_linear(m: LinMap, rhs: FinVec) -> AffineSolution | None:
    """All solutions of ``m x = rhs``; returns None when there are none."""
    if rhs.dim != m.cod:
        raise DimensionMismatch(f"rhs has dimension {rhs.dim}, map codomain is {m.cod}")
    res = solve_many(m, [rhs.data])
    if res is None:
        return None
    parts, kernel = res
    return AffineSolution(FinVec(m.dom, parts[0]), [FinVec(m.dom, k) for k in kernel])


def solve_many(m: LinMap, rhs_list: list[dict]):
    """Solve ``m x = r`` for several right-hand sides at once.

    Returns ``(particular solutions, kernel basis)`` or None if any system is
    inconsistent.
    """
    n = m.dom
    rows = m.rows()
    for t, rhs in enumerate(rhs_list):
        for i, v in rhs.items():
            if not 0 <= i < m.cod:
                raise DimensionMismatch(f"rhs index {i} outside {m.cod}")
            if v:
                rows[i][n + t] = v
    ech = _Echelon(n)
    for r in rows:
        if r:
            ech.add(r)
    if ech.inconsistent is not None:
        return None
    parts = []
    for t in range(len(rhs_list)):
        col = n + t
        sol = {}
        for p, row in ech.rows.items():
            v = row.get(col)
            if v:
                sol[p] = v
        parts.append(sol)
    return parts, ech.kernel()
