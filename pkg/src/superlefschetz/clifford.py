"""The split quadratic space W = V + V*, its spinor module S = exterior algebra
of V*, the commutator isomorphism ad between degree-2 Clifford elements and
so(W, Q), and the flat Hodge star.

Conventions (all indices start at 0):

* a vector of W is a length-2m sequence [X_0..X_{m-1}, xi_0..xi_{m-1}]
  against the basis (f_0..f_{m-1}, f^0..f^{m-1});
* a spinor is a dict from a subset bitmask I to its coefficient on
  f^I = f^{i_1} ^ ... ^ f^{i_r} (increasing indices);
* the e-basis is e_j = f^j + f_j (Q = 1) and e_{j+m} = f^j - f_j (Q = -1).
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np
from gmpy2 import mpq

from .linalg import EchelonBasis, axpy, clean, zeros


def popcount(x):
    return bin(x).count("1")


def _below(mask, j):
    return popcount(mask & ((1 << j) - 1))


def subset(*indices):
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def masks_of_degree(m, r):
    return [I for I in range(1 << m) if popcount(I) == r]


class SpinorOp:
    """Sparse endomorphism of the 2^m-dimensional spinor space.

    ``cols[c][r]`` is the coefficient of f^r in the image of f^c.  Entries
    may be rationals or Gaussian rationals.
    """

    __slots__ = ("m", "cols")

    def __init__(self, m, cols=None):
        self.m = m
        self.cols = {}
        if cols:
            for c, col in cols.items():
                col = clean(col)
                if col:
                    self.cols[c] = col

    @classmethod
    def identity(cls, m, scalar=mpq(1)):
        return cls(m, {I: {I: scalar} for I in range(1 << m)})

    @classmethod
    def from_dense(cls, mat):
        n = mat.shape[0]
        m = n.bit_length() - 1
        return cls(m, {c: {r: mat[r, c] for r in range(n) if mat[r, c]} for c in range(n)})

    def to_dense(self):
        out = zeros(1 << self.m)
        for c, col in self.cols.items():
            for r, v in col.items():
                out[r, c] = v
        return out

    def _same(self, other):
        if not isinstance(other, SpinorOp) or other.m != self.m:
            raise TypeError("spinor operators of different rank")

    def __add__(self, other):
        self._same(other)
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            axpy(cols.setdefault(c, {}), 1, col)
        return SpinorOp(self.m, cols)

    def __sub__(self, other):
        self._same(other)
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            axpy(cols.setdefault(c, {}), -1, col)
        return SpinorOp(self.m, cols)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, a):
        if not a:
            return SpinorOp(self.m)
        return SpinorOp(self.m, {c: {r: a * v for r, v in col.items()} for c, col in self.cols.items()})

    def __mul__(self, a):
        if isinstance(a, SpinorOp):
            return self @ a
        return self.scaled(a)

    def __rmul__(self, a):
        return self.scaled(a)

    def __matmul__(self, other):
        self._same(other)
        out = {}
        for c, col in other.cols.items():
            acc = {}
            for k, b in col.items():
                mid = self.cols.get(k)
                if mid:
                    axpy(acc, b, mid)
            if acc:
                out[c] = acc
        op = SpinorOp(self.m)
        op.cols = out
        return op

    def apply(self, spinor):
        out = {}
        for c, a in spinor.items():
            col = self.cols.get(c)
            if col and a:
                axpy(out, a, col)
        return out

    def conj_transpose(self):
        out = {}
        for c, col in self.cols.items():
            for r, v in col.items():
                out.setdefault(r, {})[c] = v.conj() if hasattr(v, "conj") else v
        return SpinorOp(self.m, out)

    def transpose(self):
        out = {}
        for c, col in self.cols.items():
            for r, v in col.items():
                out.setdefault(r, {})[c] = v
        return SpinorOp(self.m, out)

    @property
    def parity(self):
        """'even', 'odd', 'mixed', or None for the zero operator."""
        seen = set()
        for c, col in self.cols.items():
            for r in col:
                seen.add(popcount(r ^ c) & 1)
                if len(seen) == 2:
                    return "mixed"
        if not seen:
            return None
        return "odd" if seen.pop() else "even"

    def is_zero(self):
        return not self.cols

    def __bool__(self):
        return bool(self.cols)

    def __eq__(self, other):
        return isinstance(other, SpinorOp) and other.m == self.m and other.cols == self.cols

    def __hash__(self):
        return hash((self.m, tuple(sorted((c, tuple(sorted(col.items()))) for c, col in self.cols.items()))))

    def nnz(self):
        return sum(len(col) for col in self.cols.values())

    def restricted(self, degree):
        """Block of the operator mapping degree-r spinors, as {(row, col): v}."""
        return {
            (r, c): v
            for c, col in self.cols.items()
            if popcount(c) == degree
            for r, v in col.items()
        }

    def __repr__(self):
        return f"SpinorOp(m={self.m}, nnz={self.nnz()})"


def commutator(a, b):
    return a @ b - b @ a


def anticommutator(a, b):
    return a @ b + b @ a


# the quadratic space -------------------------------------------------------


def w_vector(X, xi):
    return np.array([mpq(x) for x in list(X) + list(xi)], dtype=object)


def f_vec(j, m):
    """Tangent basis vector f_j."""
    w = zeros(2 * m, 1)[:, 0]
    w[j] = mpq(1)
    return w


def f_covec(j, m):
    """Cotangent basis vector f^j."""
    w = zeros(2 * m, 1)[:, 0]
    w[m + j] = mpq(1)
    return w


def e_vec(j, m):
    """The e-basis: f^j + f_j for j < m, f^{j-m} - f_{j-m} for j >= m."""
    if j < m:
        return f_covec(j, m) + f_vec(j, m)
    return f_covec(j - m, m) - f_vec(j - m, m)


def quad_gram(m):
    """Gram matrix of Q in (f_j, f^j) coordinates."""
    g = zeros(2 * m)
    half = mpq(1, 2)
    for j in range(m):
        g[j, m + j] = half
        g[m + j, j] = half
    return g


def quad_q(w, w2):
    m = len(w) // 2
    return sum((w2[m + j] * w[j] + w[m + j] * w2[j] for j in range(m)), mpq(0)) / 2


def is_q_antisymmetric(x):
    g = quad_gram(x.shape[0] // 2)
    return not any(v for v in (x.T.dot(g) + g.dot(x)).reshape(-1))


def spin_act(w, phi):
    """Clifford action (X + xi).phi = xi ^ phi - i_X phi."""
    return clifford_op(w).apply(phi)


@lru_cache(maxsize=None)
def _wedge(j, m):
    cols = {}
    for I in range(1 << m):
        if not I >> j & 1:
            cols[I] = {I | 1 << j: mpq(-1 if _below(I, j) & 1 else 1)}
    return SpinorOp(m, cols)


@lru_cache(maxsize=None)
def _contract(j, m):
    # E_{f_j} = minus the interior product with f_j
    cols = {}
    for I in range(1 << m):
        if I >> j & 1:
            cols[I] = {I & ~(1 << j): mpq(1 if _below(I, j) & 1 else -1)}
    return SpinorOp(m, cols)


def wedge_op(j, m):
    """f^j ^ (.)"""
    return _wedge(j, m)


def interior_op(j, m):
    """Interior product with the coordinate vector f_j."""
    return -_contract(j, m)


def clifford_op(w):
    m = len(w) // 2
    cols = {}
    for j in range(m):
        for a, basic in ((w[j], _contract(j, m)), (w[m + j], _wedge(j, m))):
            if a:
                for c, col in basic.cols.items():
                    axpy(cols.setdefault(c, {}), a, col)
    return SpinorOp(m, cols)


def clifford_basis_op(k, m):
    """E of the k-th (f_j, f^j) basis vector."""
    return _contract(k, m) if k < m else _wedge(k - m, m)


# ad and its inverse --------------------------------------------------------


class NotSpinDegreeTwo(ValueError):
    pass


def ad_of(c):
    """Matrix of w -> c E_w - E_w c on W, for c of Clifford degree 2."""
    m = c.m
    x = zeros(2 * m)
    for k in range(2 * m):
        ew = clifford_basis_op(k, m)
        d = c @ ew - ew @ c
        col0 = d.cols.get(0, {})
        img = [mpq(0)] * (2 * m)
        for j in range(m):
            img[m + j] = col0.get(1 << j, mpq(0))
            img[j] = -d.cols.get(1 << j, {}).get(0, mpq(0))
        if clifford_op(img) != d:
            raise NotSpinDegreeTwo("not in spin degree 2")
        for i, v in enumerate(img):
            x[i, k] = v
    return x


@lru_cache(maxsize=None)
def degree_two_monomials(m):
    """Pairs (i, j) and operators E_{e_i} E_{e_j}, i < j over the e-basis."""
    es = [clifford_op(e_vec(i, m)) for i in range(2 * m)]
    return tuple(((i, j), es[i] @ es[j]) for i in range(2 * m) for j in range(i + 1, 2 * m))


@lru_cache(maxsize=None)
def _ad_solver(m):
    basis = EchelonBasis(track=True)
    for _, mono in degree_two_monomials(m):
        x = ad_of(mono)
        basis.add({(r, c): v for (r, c), v in np.ndenumerate(x) if v})
    assert basis.rank == m * (2 * m - 1)
    return basis


def ad_inverse(x):
    """The degree-2 Clifford element c with ad(c) = x."""
    m = x.shape[0] // 2
    target = {(r, c): v for (r, c), v in np.ndenumerate(x) if v}
    if not target:
        return SpinorOp(m)
    coeffs = _ad_solver(m).solve(target)
    if coeffs is None:
        raise ValueError("Q-antisymmetry violated")
    monos = degree_two_monomials(m)
    cols = {}
    for k, a in coeffs.items():
        for c, col in monos[k][1].cols.items():
            axpy(cols.setdefault(c, {}), a, col)
    return SpinorOp(m, cols)


def psi4(A):
    """Diagonal embedding of an antisymmetric m x m matrix into so(W, Q)."""
    A = np.asarray(A, dtype=object)
    if any(v for v in (A + A.T).reshape(-1)):
        raise ValueError("matrix is not antisymmetric")
    m = A.shape[0]
    x = zeros(2 * m)
    x[:m, :m] = A
    x[m:, m:] = A
    return x


# volume element and Hodge star ---------------------------------------------


def nu_op(m):
    """Clifford product E_{e_0} ... E_{e_{m-1}}."""
    op = SpinorOp.identity(m)
    for j in range(m):
        op = op @ clifford_op(e_vec(j, m))
    return op


def complement_sign(I, m):
    """Sign of the shuffle (I, I^c)."""
    comp = ((1 << m) - 1) & ~I
    # pairs i in I, j in I^c with i > j
    inversions = sum(popcount(I >> (j + 1)) for j in range(m) if comp >> j & 1)
    return -1 if inversions & 1 else 1


def hodge_star(phi, m):
    full = (1 << m) - 1
    return {full & ~I: complement_sign(I, m) * a for I, a in phi.items() if a}


def hodge_star_op(m):
    full = (1 << m) - 1
    return SpinorOp(m, {I: {full & ~I: mpq(complement_sign(I, m))} for I in range(1 << m)})


def nu_sign(m, r):
    return -1 if (m * r + r * (r - 1) // 2) & 1 else 1
