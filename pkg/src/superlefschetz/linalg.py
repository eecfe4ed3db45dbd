"""Exact sparse linear algebra over the rationals.

Vectors are dicts mapping a hashable index to a nonzero scalar.  Small dense
matrices are numpy object arrays whose entries are ints or mpq.
"""
from __future__ import annotations

import numpy as np
from gmpy2 import mpq


def clean(v):
    return {k: x for k, x in v.items() if x}


def axpy(y, a, x):
    """y += a*x in place (sparse)."""
    for k, xv in x.items():
        nv = y.get(k, 0) + a * xv
        if nv:
            y[k] = nv
        else:
            y.pop(k, None)
    return y


def scale(v, a):
    return {k: a * x for k, x in v.items()} if a else {}


class EchelonBasis:
    """Incremental row echelon basis of a span of sparse vectors.

    Each stored vector has coefficient 1 at its pivot and zero at all
    earlier pivots.  With ``track=True`` every stored vector remembers its
    expression in the original inputs, so :meth:`reduce` can express a
    vector of the span in terms of those inputs.
    """

    def __init__(self, track=False):
        self.track = track
        self.rows = []  # (pivot, vector, combo)
        self.pivots = {}
        self.count = 0

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, v, combo=None):
        """Return (remainder, coeffs) with v = remainder + sum coeffs[i]*input_i."""
        r = dict(v)
        coeffs = {} if combo is None else dict(combo)
        for piv, vec, c in self.rows:
            a = r.get(piv)
            if a:
                axpy(r, -a, vec)
                if self.track:
                    axpy(coeffs, a, c)
        return r, coeffs

    def add(self, v):
        """Insert v; return True if it enlarged the span."""
        idx = self.count
        self.count += 1
        combo = {idx: mpq(1)} if self.track else None
        r, c = self.reduce(clean(v))
        if not r:
            return False
        if self.track:
            # remainder = v - sum coeffs*inputs
            c = axpy({idx: mpq(1)}, -1, c)
        piv = min(r, key=_order_key)
        a = r[piv]
        inv = 1 / mpq(a)
        vec = {k: x * inv for k, x in r.items()}
        self.rows.append((piv, vec, scale(c, inv) if self.track else None))
        self.pivots[piv] = len(self.rows) - 1
        return True

    def contains(self, v):
        return not self.reduce(v)[0]

    def solve(self, v):
        """Coefficients over the inputs expressing v, or None if v is outside the span."""
        if not self.track:
            raise ValueError("solve needs a tracking basis")
        r, c = self.reduce(v)
        return None if r else c

    def vectors(self):
        return [vec for _, vec, _ in self.rows]

    def reduced_basis(self):
        """Fully reduced row echelon basis, sorted by pivot; canonical for the span."""
        rows = sorted(((p, dict(v)) for p, v, _ in self.rows), key=lambda t: _order_key(t[0]))
        for i in range(len(rows) - 1, -1, -1):
            p, v = rows[i]
            for j in range(i):
                a = rows[j][1].get(p)
                if a:
                    axpy(rows[j][1], -a, v)
        return [v for _, v in rows]


def _order_key(k):
    return k if isinstance(k, tuple) else (k,)


def rank(vectors):
    b = EchelonBasis()
    for v in vectors:
        b.add(v)
    return b.rank


def nullspace(columns):
    """Basis of {a : sum a_k columns[k] = 0} as sparse dicts over column indices."""
    b = EchelonBasis(track=True)
    out = []
    for k, col in enumerate(columns):
        r, c = b.reduce(clean(col))
        if r:
            b.add(col)
        else:
            b.count += 1
            out.append(axpy({k: mpq(1)}, -1, c))
    return out


def span_basis(vectors):
    b = EchelonBasis()
    for v in vectors:
        b.add(v)
    return b.reduced_basis()


# dense helpers ------------------------------------------------------------


def zeros(r, c=None):
    return np.full((r, r if c is None else c), mpq(0), dtype=object)


def eye(n):
    m = zeros(n)
    for i in range(n):
        m[i, i] = mpq(1)
    return m


def qarray(rows):
    a = np.array(rows, dtype=object)
    flat = a.reshape(-1)
    for i, x in enumerate(flat):
        flat[i] = mpq(x)
    return a


def to_sparse(mat):
    return {idx: x for idx, x in np.ndenumerate(mat) if x}


def from_sparse(v, shape):
    m = zeros(*shape)
    for idx, x in v.items():
        m[idx] = x
    return m


def is_zero(mat):
    return not any(x for x in mat.reshape(-1))


def mat_eq(a, b):
    return a.shape == b.shape and is_zero(a - b)


def bracket(a, b):
    return a.dot(b) - b.dot(a)


def mat_rank(mat):
    return rank(dict(((j,), x) for j, x in enumerate(row) if x) for row in mat)


def combine(coeffs, mats):
    """Linear combination sum coeffs[k]*mats[k] for sparse coeffs."""
    out = zeros(*mats[0].shape)
    for k, a in coeffs.items():
        out = out + a * mats[k]
    return out


def transpose(mat):
    return mat.T.copy()


def solve_in_span(mats, target):
    """Coefficients c with sum c_k mats[k] = target, or None."""
    b = EchelonBasis(track=True)
    for m in mats:
        b.add(to_sparse(m))
    return b.solve(to_sparse(target))
