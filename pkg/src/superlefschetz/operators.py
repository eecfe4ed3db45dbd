"""Polynomial-coefficient differential operators on forms over flat R^m.

A :class:`DiffOp` is a finite sum of terms y^alpha A d^beta, with A a
:class:`SpinorOp` acting on the form part; it is stored as a dict keyed by
(beta, alpha).  Because the representation is canonical, operator identities
are checked by coefficient comparison.
"""
from __future__ import annotations

from itertools import product
from math import comb

import numpy as np
from gmpy2 import mpq

from .clifford import (
    SpinorOp,
    ad_inverse,
    clifford_op,
    interior_op,
    popcount,
    wedge_op,
)
from .linalg import axpy, is_zero, zeros


def unit_index(m, j, power=1):
    e = [0] * m
    e[j] = power
    return tuple(e)


def _add_idx(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub_idx(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _falling(g, mu):
    """Coefficient c with d^mu y^g = c y^(g - mu), or 0."""
    c = 1
    for gi, mi in zip(g, mu):
        if mi > gi:
            return 0
        for t in range(mi):
            c *= gi - t
    return c


def _sub_indices(beta):
    return product(*(range(b + 1) for b in beta))


class Polynomial:
    """Multivariate polynomial with exact coefficients, keyed by exponent."""

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def constant(cls, m, c):
        return cls(m, {(0,) * m: c})

    @classmethod
    def variable(cls, m, j):
        return cls(m, {unit_index(m, j): mpq(1)})

    def __add__(self, other):
        other = self._lift(other)
        return Polynomial(self.m, axpy(dict(self.terms), 1, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        return Polynomial(self.m, axpy(dict(self.terms), -1, other.terms))

    def __neg__(self):
        return Polynomial(self.m, {k: -v for k, v in self.terms.items()})

    def _lift(self, other):
        return other if isinstance(other, Polynomial) else Polynomial.constant(self.m, other)

    def __mul__(self, other):
        other = self._lift(other)
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k = _add_idx(a, b)
                v = out.get(k, 0) + x * y
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return Polynomial(self.m, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Polynomial.constant(self.m, mpq(1))
        for _ in range(n):
            out = out * self
        return out

    def derivative(self, j):
        out = {}
        for a, x in self.terms.items():
            if a[j]:
                out[_sub_idx(a, unit_index(self.m, j))] = x * a[j]
        return Polynomial(self.m, out)

    def __call__(self, point):
        total = mpq(0)
        for a, x in self.terms.items():
            t = x
            for p, e in zip(point, a):
                t = t * p ** e
            total = total + t
        return total

    def degree(self):
        return max((sum(a) for a in self.terms), default=-1)

    def __eq__(self, other):
        other = self._lift(other)
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Polynomial({self.terms})"


class PolyForm:
    """Differential form sum c * y^alpha dy^I, keyed by (I, alpha)."""

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def monomial(cls, m, I, alpha=None, c=mpq(1)):
        return cls(m, {(I, alpha or (0,) * m): c})

    def __add__(self, other):
        return PolyForm(self.m, axpy(dict(self.terms), 1, other.terms))

    def __sub__(self, other):
        return PolyForm(self.m, axpy(dict(self.terms), -1, other.terms))

    def scaled(self, a):
        return PolyForm(self.m, {k: a * v for k, v in self.terms.items()})

    def coefficient(self, I):
        return Polynomial(self.m, {a: v for (J, a), v in self.terms.items() if J == I})

    def degrees(self):
        return sorted({popcount(I) for I, _ in self.terms})

    def __eq__(self, other):
        return isinstance(other, PolyForm) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"PolyForm({self.terms})"


class DiffOp:
    """Sum of y^alpha A d^beta with spinor-operator coefficients A."""

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        self.m = m
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def zero(cls, m):
        return cls(m)

    @classmethod
    def multiplication(cls, op, alpha=None):
        m = op.m
        return cls(m, {((0,) * m, alpha or (0,) * m): op})

    @classmethod
    def identity(cls, m):
        return cls.multiplication(SpinorOp.identity(m))

    @classmethod
    def partial(cls, m, j, power=1):
        return cls(m, {(unit_index(m, j, power), (0,) * m): SpinorOp.identity(m)})

    def _combine(self, other, sign):
        out = dict(self.terms)
        for k, v in other.terms.items():
            if k in out:
                s = out[k] + v if sign > 0 else out[k] - v
                if s:
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = v if sign > 0 else -v
        return DiffOp(self.m, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, a):
        if not a:
            return DiffOp(self.m)
        return DiffOp(self.m, {k: v.scaled(a) for k, v in self.terms.items()})

    def __mul__(self, a):
        if isinstance(a, DiffOp):
            return self @ a
        return self.scaled(a)

    __rmul__ = scaled

    def __matmul__(self, other):
        """Composition by the Leibniz rule."""
        if other.m != self.m:
            raise TypeError("operators on different dimensions")
        out = {}
        for (beta, alpha), A in self.terms.items():
            for (delta, gamma), B in other.terms.items():
                AB = None
                for mu in _sub_indices(beta):
                    c = _falling(gamma, mu)
                    if not c:
                        continue
                    for b, mi in zip(beta, mu):
                        c *= comb(b, mi)
                    if AB is None:
                        AB = A @ B
                        if not AB:
                            break
                    key = (_add_idx(_sub_idx(beta, mu), delta), _add_idx(alpha, _sub_idx(gamma, mu)))
                    term = AB.scaled(c)
                    if key in out:
                        out[key] = out[key] + term
                    else:
                        out[key] = term
        return DiffOp(self.m, out)

    def order(self):
        return max((sum(b) for b, _ in self.terms), default=-1)

    @property
    def parity(self):
        kinds = {v.parity for v in self.terms.values()} - {None}
        if not kinds:
            return None
        if len(kinds) > 1 or "mixed" in kinds:
            return "mixed"
        return kinds.pop()

    def apply(self, form):
        """Apply to a PolyForm."""
        out = {}
        for (beta, alpha), A in self.terms.items():
            for (I, gamma), c in form.terms.items():
                f = _falling(gamma, beta)
                if not f:
                    continue
                col = A.cols.get(I)
                if not col:
                    continue
                mono = _add_idx(alpha, _sub_idx(gamma, beta))
                for r, v in col.items():
                    key = (r, mono)
                    nv = out.get(key, 0) + f * c * v
                    if nv:
                        out[key] = nv
                    else:
                        out.pop(key, None)
        return PolyForm(self.m, out)

    def symbol(self, k):
        return SymbolElement(self.m, k, {(b, a): v for (b, a), v in self.terms.items() if sum(b) == k})

    def truncated(self, k):
        """Terms of derivative order exactly k, as a DiffOp."""
        return DiffOp(self.m, {(b, a): v for (b, a), v in self.terms.items() if sum(b) == k})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, DiffOp) and self.m == other.m and self.terms == other.terms

    def __repr__(self):
        return f"DiffOp(m={self.m}, order={self.order()}, terms={len(self.terms)})"


class SymbolElement:
    """Homogeneous degree-k symbol sum xi^beta y^alpha A, keyed by (beta, alpha)."""

    __slots__ = ("m", "degree", "terms")

    def __init__(self, m, degree, terms=None):
        self.m = m
        self.degree = degree
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return SymbolElement(self.m, self.degree, out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, a):
        return SymbolElement(self.m, self.degree, {k: v.scaled(a) for k, v in self.terms.items()})

    def __matmul__(self, other):
        out = {}
        for (b1, a1), A in self.terms.items():
            for (b2, a2), B in other.terms.items():
                key = (_add_idx(b1, b2), _add_idx(a1, a2))
                AB = A @ B
                out[key] = out[key] + AB if key in out else AB
        return SymbolElement(self.m, self.degree + other.degree, out)

    @property
    def parity(self):
        kinds = {v.parity for v in self.terms.values()} - {None}
        if not kinds:
            return None
        return kinds.pop() if len(kinds) == 1 else "mixed"

    def at(self, point, xi):
        """Evaluate at a point y and covector xi, giving a SpinorOp."""
        out = SpinorOp(self.m)
        for (b, a), A in self.terms.items():
            c = mpq(1)
            for t in range(self.m):
                c = c * mpq(xi[t]) ** b[t] * mpq(point[t]) ** a[t]
            if c:
                out = out + A.scaled(c)
        return out

    def __eq__(self, other):
        return self.degree == other.degree and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)


def _super_sign(a, b):
    pa, pb = a.parity, b.parity
    if pa is None or pb is None:
        return None
    if "mixed" in (pa, pb):
        raise ValueError("super bracket needs homogeneous operands")
    return 1 if pa == pb == "odd" else -1


def super_commutator(a, b):
    """ab - ba, or ab + ba when both operands are odd."""
    s = _super_sign(a, b)
    if s is None:
        return type(a).zero(a.m) if isinstance(a, DiffOp) else a.scaled(0)
    return a @ b + b @ a if s > 0 else a @ b - b @ a


def symbol_super_commutator(a, b):
    s = _super_sign(a, b)
    if s is None:
        return SymbolElement(a.m, a.degree + b.degree)
    return (a @ b) + (b @ a) if s > 0 else (a @ b) - (b @ a)


def compose(a, b):
    return a @ b


# polynomial matrix sections ------------------------------------------------
# A section is a dict alpha -> numpy matrix; constants may be passed as plain
# matrices.


def as_section(x, m):
    if isinstance(x, dict):
        return {a: v for a, v in x.items() if not is_zero(v)}
    return {(0,) * m: x} if not is_zero(x) else {}


def section_mul(x, y):
    out = {}
    for a, X in x.items():
        for b, Y in y.items():
            k = _add_idx(a, b)
            out[k] = out[k] + X.dot(Y) if k in out else X.dot(Y)
    return {k: v for k, v in out.items() if not is_zero(v)}


def section_scale(x, poly):
    """Multiply a section by a scalar Polynomial."""
    out = {}
    for a, X in x.items():
        for b, c in poly.terms.items():
            k = _add_idx(a, b)
            out[k] = out[k] + c * X if k in out else c * X
    return {k: v for k, v in out.items() if not is_zero(v)}


def section_derivative(x, j):
    out = {}
    for a, X in x.items():
        if a[j]:
            out[_sub_idx(a, unit_index(len(a), j))] = a[j] * X
    return out


def section_bracket(x, y):
    out = section_mul(x, y)
    for k, v in section_mul(y, x).items():
        out[k] = out[k] - v if k in out else -v
    return {k: v for k, v in out.items() if not is_zero(v)}


# the operators -------------------------------------------------------------


def d_op(m):
    """Exterior derivative sum dy^j ^ d_j."""
    return DiffOp(m, {(unit_index(m, j), (0,) * m): wedge_op(j, m) for j in range(m)})


def d_star_op(m):
    """Formal adjoint -sum i_{d_j} d_j of d for the flat metric."""
    return DiffOp(m, {(unit_index(m, j), (0,) * m): -interior_op(j, m) for j in range(m)})


def coordinate_laplacian(m):
    """-sum d_j^2."""
    ident = SpinorOp.identity(m)
    return DiffOp(m, {(unit_index(m, j, 2), (0,) * m): -ident for j in range(m)})


def laplacian(m):
    """The anticommutator {d*, d}."""
    return super_commutator(d_star_op(m), d_op(m))


def rho_op(x, m=None):
    """Order-0 operator y -> ad^{-1}(x(y)) for a polynomial so(W,Q) section."""
    if not isinstance(x, dict):
        m = x.shape[0] // 2
    sec = as_section(x, m)
    return DiffOp(m, {((0,) * m, a): ad_inverse(X) for a, X in sec.items()})


def d_op_u(u, m=None):
    """sum_j E_{u(dy^j)}(y) d_j for a polynomial Hom(V*, W) section u."""
    if not isinstance(u, dict):
        m = u.shape[1]
    sec = as_section(u, m)
    terms = {}
    for a, U in sec.items():
        for j in range(m):
            op = clifford_op(U[:, j])
            if op:
                terms[(unit_index(m, j), a)] = op
    return DiffOp(m, terms)


def d_u_of_x(u, x, m):
    """The order-0 operator sum_j E_{u(dy^j)} (d_j ad^{-1} x)."""
    usec = as_section(u, m)
    xsec = as_section(x, m)
    out = DiffOp(m)
    for j in range(m):
        dx = section_derivative(xsec, j)
        if not dx:
            continue
        rho_dx = rho_op(dx, m)
        for a, U in usec.items():
            col = clifford_op(U[:, j])
            if col:
                out = out + DiffOp.multiplication(col, a) @ rho_dx
    return out


def psi_scalar(f, m):
    """-(1/m) f Delta for a Polynomial f."""
    return polynomial_times(f, laplacian(m)).scaled(mpq(-1, m))


def polynomial_times(f, op):
    """Left multiplication of an operator by a scalar Polynomial."""
    out = DiffOp(op.m)
    for a, c in f.terms.items():
        out = out + DiffOp(op.m, {(b, _add_idx(al, a)): v.scaled(c) for (b, al), v in op.terms.items()})
    return out


def rho_d_commutator_sides(x, u, m):
    """Both sides of [rho_x, D_u] = D_{x.u} - D_u x for polynomial sections."""
    lhs = super_commutator(rho_op(x, m), d_op_u(u, m))
    xu = section_mul(as_section(x, m), as_section(u, m))
    rhs = d_op_u(xu, m) - d_u_of_x(u, x, m)
    return lhs, rhs


def rho_d_commutator_holds(x, u, m):
    lhs, rhs = rho_d_commutator_sides(x, u, m)
    return lhs == rhs


def monomial_forms(m, max_degree):
    """All y^alpha dy^I with |alpha| <= max_degree."""
    for total in range(max_degree + 1):
        for alpha in product(range(total + 1), repeat=m):
            if sum(alpha) == total:
                for I in range(1 << m):
                    yield PolyForm.monomial(m, I, alpha)


def agree_on_monomials(a, b, max_degree):
    """Secondary oracle: a and b act identically on all low-degree monomial forms."""
    return all(a.apply(f) == b.apply(f) for f in monomial_forms(a.m, max_degree))


def dense_hom(u):
    return np.asarray(u, dtype=object)


def hom_zero(m):
    return zeros(2 * m, m)
