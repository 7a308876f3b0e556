"""Dense sympy oracle over Q, independent of the package's sparse linear algebra.

Only the structure constants of a HopfData are read; every integral,
modular element and automorphism is re-solved here from its defining
identity with sympy matrices.
"""

from __future__ import annotations

import sympy as sp


def _q(x):
    # gmpy2.mpq -> sympy.Rational; cyclotomic scalars are out of scope here
    return sp.Rational(int(x.numerator), int(x.denominator))


class Dense:
    def __init__(self, h):
        n = self.n = h.dim
        self.mult = [[[sp.Integer(0)] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for k, s in h.mul_basis(i, j).items():
                    self.mult[i][j][k] = _q(s)
        self.comult = [{(a, b): _q(s) for (a, b), s in h.comul_basis(k).items()} for k in range(n)]
        self.unit = [sp.Integer(0)] * n
        for k, s in h.unit.items():
            self.unit[k] = _q(s)
        self.counit = [_q(e) for e in h.counit]
        self.S = sp.zeros(n, n)
        for j in range(n):
            for i, s in h.S({j: 1}).items():
                self.S[i, j] = _q(s)

    def right_integrals(self):
        """Basis of {psi : (psi ⊗ ι)Delta(a) = psi(a)1 for all a}."""
        n = self.n
        rows = []
        for k in range(n):
            for j in range(n):
                row = [sp.Integer(0)] * n
                for (a, b), s in self.comult[k].items():
                    if b == j:
                        row[a] += s
                row[k] -= self.unit[j]
                rows.append(row)
        return sp.Matrix(rows).nullspace()

    def left_integrals(self):
        n = self.n
        rows = []
        for k in range(n):
            for i in range(n):
                row = [sp.Integer(0)] * n
                for (a, b), s in self.comult[k].items():
                    if a == i:
                        row[b] += s
                row[k] -= self.unit[i]
                rows.append(row)
        return sp.Matrix(rows).nullspace()

    def modular_element(self, phi):
        """delta with (phi ⊗ ι)Delta(a) = phi(a) delta."""
        n = self.n
        k = next(i for i in range(n) if phi[i] != 0)
        d = [sp.Integer(0)] * n
        for (a, b), s in self.comult[k].items():
            d[b] += s * phi[a]
        return [x / phi[k] for x in d]

    def modular_automorphism(self, f):
        """The matrix of sigma with f(ab) = f(b sigma(a))."""
        n = self.n
        G = sp.Matrix(n, n, lambda b, m: sum(self.mult[b][m][k] * f[k] for k in range(n)))
        Ginv = G.inv()
        cols = []
        for a in range(n):
            rhs = sp.Matrix([sum(self.mult[a][b][k] * f[k] for k in range(n)) for b in range(n)])
            cols.append(Ginv * rhs)
        return sp.Matrix.hstack(*cols)

    def scaling_constant(self, psi):
        v = (sp.Matrix([psi]) * self.S * self.S)
        k = next(i for i in range(self.n) if psi[i] != 0)
        tau = v[k] / psi[k]
        assert list(v) == [tau * p for p in psi]
        return tau


def normalized(v):
    v = list(v)
    k = next(i for i, x in enumerate(v) if x != 0)
    return [x / v[k] for x in v]


def to_sympy_vec(fv, n):
    return [_q(fv[i]) for i in range(n)]


def to_sympy_map(m):
    M = sp.zeros(m.cod, m.dom)
    for j in range(m.dom):
        for i, s in m.column(j).items():
            M[i, j] = _q(s)
    return M


def proportional(u, v):
    k = next((i for i, x in enumerate(v) if x != 0), None)
    if k is None:
        return all(x == 0 for x in u)
    c = u[k] / v[k]
    return c != 0 and all(a == c * b for a, b in zip(u, v))
