"""Operator Lie algebras on K^2, the superalgebras su_K(1,1)_sup and
L = so(W,Q) + Hom(V*,W) + R, and the embedding iota between them.

A K2 operator is a real (2d x 2d) matrix on K^2, d = dim K, where the real
coordinate s*d + k is component k of slot s.  An element of K^{1,1} is
stored as a length-2d real vector in the same coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from gmpy2 import mpq

from .clifford import quad_q
from .linalg import (
    EchelonBasis,
    axpy,
    bracket,
    combine,
    is_zero,
    mat_eq,
    nullspace,
    qarray,
    span_basis,
    to_sparse,
    zeros,
)
from .normed import DIMS, NormedElement


# operators phi_A ---------------------------------------------------------


def k11_vector(u1, u2):
    return np.array(list(u1.coords) + list(u2.coords), dtype=object)


def k11_pair(vec, algebra):
    d = DIMS[algebra]
    return NormedElement(algebra, vec[:d]), NormedElement(algebra, vec[d:])


def k11_basis(algebra):
    d = DIMS[algebra]
    out = []
    for i in range(2 * d):
        v = zeros(2 * d, 1)[:, 0]
        v[i] = mpq(1)
        out.append(v)
    return out


def epsilon(slot, algebra, unit=0):
    """e_unit placed in slot 1 or 2 of K^{1,1}."""
    d = DIMS[algebra]
    v = zeros(2 * d, 1)[:, 0]
    v[(slot - 1) * d + unit] = mpq(1)
    return v


def conj_transpose(A):
    return [[A[j][i].conj() for j in range(2)] for i in range(2)]


def phi_matrix(A):
    """Real matrix of u -> u A* on K^2 for a 2x2 matrix A of NormedElements."""
    algebra = A[0][0].algebra
    d = DIMS[algebra]
    out = zeros(2 * d)
    for s in range(2):
        for k in range(d):
            e = NormedElement.unit(algebra, k)
            for j in range(2):
                img = e * A[j][s].conj()
                for l, v in enumerate(img.coords):
                    out[j * d + l, s * d + k] = v
    return out


def matrix_of_operator(x, algebra):
    """Recover A with x = phi_A; None if x is not of this form."""
    d = DIMS[algebra]
    A = [[None, None], [None, None]]
    for s in range(2):
        col = x[:, s * d]  # image of e_0 in slot s = (conj A_0s, conj A_1s)
        for j in range(2):
            A[j][s] = NormedElement(algebra, col[j * d:(j + 1) * d]).conj()
    return A if mat_eq(phi_matrix(A), x) else None


def k2_matrix(entries, algebra):
    """2x2 matrix of NormedElements from nested coordinate lists or ints."""
    def lift(e):
        if isinstance(e, NormedElement):
            return e
        if isinstance(e, (list, tuple)):
            return NormedElement(algebra, e)
        return NormedElement.one(algebra) * mpq(e)
    return [[lift(e) for e in row] for row in entries]


def qcheck_gram(algebra):
    """Gram matrix of qcheck(u,v) = Re(1/2 (u1 v2~ + u2 v1~))."""
    d = DIMS[algebra]
    g = zeros(2 * d)
    for k in range(d):
        g[k, d + k] = mpq(1, 2)
        g[d + k, k] = mpq(1, 2)
    return g


def qcheck(u, v):
    d = len(u) // 2
    return sum((u[k] * v[d + k] + u[d + k] * v[k] for k in range(d)), mpq(0)) / 2


def is_qcheck_antisymmetric(x):
    g = qcheck_gram({2: "R", 4: "C", 8: "H", 16: "O"}[x.shape[0]])
    return is_zero(x.T.dot(g) + g.dot(x))


# Lie closure -------------------------------------------------------------


def lie_closure(generators):
    """Canonical basis of the Lie algebra generated by square matrices."""
    generators = list(generators)
    if not generators:
        return []
    shape = generators[0].shape
    ech = EchelonBasis()
    elems = []
    for g in generators:
        if ech.add(to_sparse(g)):
            elems.append(g)
    i = 0
    while i < len(elems):
        for j in range(i):
            c = bracket(elems[i], elems[j])
            if ech.add(to_sparse(c)):
                elems.append(c)
        i += 1
    return [_dense(v, shape) for v in ech.reduced_basis()]


def _dense(v, shape):
    out = zeros(*shape)
    for idx, x in v.items():
        out[idx] = x
    return out


def in_span(mats, x):
    ech = EchelonBasis()
    for m in mats:
        ech.add(to_sparse(m))
    return ech.contains(to_sparse(x))


def span_dim(mats):
    ech = EchelonBasis()
    for m in mats:
        ech.add(to_sparse(m))
    return ech.rank


def antisymmetric_part(basis, gram):
    """Basis of {x in span(basis) : x^T G + G x = 0}."""
    cols = [to_sparse(b.T.dot(gram) + gram.dot(b)) for b in basis]
    kernel = nullspace(cols)
    shape = basis[0].shape
    mats = [combine(c, basis) for c in kernel]
    return [_dense(v, shape) for v in span_basis([to_sparse(m) for m in mats])]


def trace_free_generators(algebra):
    zero = NormedElement.zero(algebra)
    out = []
    for e in NormedElement.basis(algebra):
        out.append(phi_matrix([[e, zero], [zero, -e]]))
        out.append(phi_matrix([[zero, e], [zero, zero]]))
        out.append(phi_matrix([[zero, zero], [e, zero]]))
    return out


@lru_cache(maxsize=None)
def _sl_basis(algebra):
    return tuple(lie_closure(trace_free_generators(algebra)))


def sl_basis(algebra):
    return [b.copy() for b in _sl_basis(algebra)]


@lru_cache(maxsize=None)
def _su_basis(algebra):
    return tuple(antisymmetric_part(list(_sl_basis(algebra)), qcheck_gram(algebra)))


def su_basis(algebra):
    return [b.copy() for b in _su_basis(algebra)]


def uc11_basis():
    i = NormedElement.unit("C", 1)
    zero = NormedElement.zero("C")
    return su_basis("C") + [phi_matrix([[i, zero], [zero, i]])]


def named_generators(algebra):
    """The named su_K(1,1) generators for K = R, C, H, as K2 operators."""
    e = lambda k: NormedElement.unit(algebra, k)
    z = NormedElement.zero(algebra)
    one = e(0)
    out = {"h": phi_matrix([[one, z], [z, -one]])}
    if algebra == "C":
        out["L"] = phi_matrix([[z, z], [-e(1), z]])
        out["Lambda"] = phi_matrix([[z, e(1)], [z, z]])
        out["H"] = phi_matrix([[-one, z], [z, one]])
    elif algebra == "H":
        for s in (1, 2, 3):
            out[f"L{s}"] = phi_matrix([[z, z], [-e(s), z]])
            out[f"Lambda{s}"] = phi_matrix([[z, e(s)], [z, z]])
            out[f"K{s}"] = phi_matrix([[e(s), z], [z, e(s)]])
        out["H"] = phi_matrix([[-one, z], [z, one]])
    return out


QUATERNION_GENERATOR_NAMES = (
    "L1", "L2", "L3", "Lambda1", "Lambda2", "Lambda3", "K1", "K2", "K3", "H",
)


# su_K(1,1)_sup -----------------------------------------------------------


@dataclass(frozen=True)
class SuperElement:
    even: np.ndarray
    odd: np.ndarray
    scalar: object = mpq(0)

    def __add__(self, other):
        return SuperElement(self.even + other.even, self.odd + other.odd, self.scalar + other.scalar)

    def scaled(self, a):
        return SuperElement(a * self.even, a * self.odd, a * self.scalar)

    def __eq__(self, other):
        return (
            mat_eq(self.even, other.even)
            and is_zero(self.odd - other.odd)
            and self.scalar == other.scalar
        )

    def is_zero(self):
        return is_zero(self.even) and is_zero(self.odd) and not self.scalar


def super_zero(algebra):
    d = DIMS[algebra]
    return SuperElement(zeros(2 * d), zeros(2 * d, 1)[:, 0], mpq(0))


def super_bracket(p, q):
    """[x+u+a, y+v+b] = [x,y] + (x v - y u) - 2 qcheck(u,v)."""
    return SuperElement(
        bracket(p.even, q.even),
        p.even.dot(q.odd) - q.even.dot(p.odd),
        -2 * qcheck(p.odd, q.odd),
    )


def super_basis(algebra, even_basis=None):
    """Homogeneous basis of su_K(1,1)_sup (or with a supplied even part)."""
    even_basis = su_basis(algebra) if even_basis is None else even_basis
    z = super_zero(algebra)
    out = [SuperElement(x, z.odd, mpq(0)) for x in even_basis]
    out += [SuperElement(z.even, u, mpq(0)) for u in k11_basis(algebra)]
    out.append(SuperElement(z.even, z.odd, mpq(1)))
    return out


def parity_of(p):
    if is_zero(p.odd):
        return 0
    if is_zero(p.even) and not p.scalar:
        return 1
    return None


# L and the embedding iota ---------------------------------------------------


def check_shape(algebra, n):
    if algebra == "O" and n != 1:
        raise ValueError("octonionic models are only defined for n = 1")


def _slot_index(algebra, n, s, k, a):
    m = n * DIMS[algebra]
    return s * m + a + n * k


def iota_so(x, algebra, n):
    """Slotwise action of a K2 operator on W = K^n (x) K^{1,1}."""
    check_shape(algebra, n)
    d = DIMS[algebra]
    m = n * d
    out = zeros(2 * m)
    for a in range(n):
        idx = [_slot_index(algebra, n, s, k, a) for s in range(2) for k in range(d)]
        for r in range(2 * d):
            for c in range(2 * d):
                if x[r, c]:
                    out[idx[r], idx[c]] = x[r, c]
    return out


def iota_hom(u, algebra, n):
    """The map V* -> W, xi -> (xi u1, xi u2) slotwise."""
    check_shape(algebra, n)
    d = DIMS[algebra]
    m = n * d
    u1, u2 = k11_pair(u, algebra)
    out = zeros(2 * m, m)
    for a in range(n):
        for k in range(d):
            e = NormedElement.unit(algebra, k)
            col = a + n * k
            for s, us in enumerate((u1, u2)):
                for l, v in enumerate((e * us).coords):
                    if v:
                        out[_slot_index(algebra, n, s, l, a), col] = v
    return out


def iota_scalar(a, m):
    return m * a


@dataclass(frozen=True)
class LElement:
    so: np.ndarray
    hom: np.ndarray
    scalar: object = mpq(0)

    def __add__(self, other):
        return LElement(self.so + other.so, self.hom + other.hom, self.scalar + other.scalar)

    def scaled(self, a):
        return LElement(a * self.so, a * self.hom, a * self.scalar)

    def __eq__(self, other):
        return mat_eq(self.so, other.so) and mat_eq(self.hom, other.hom) and self.scalar == other.scalar

    @property
    def m(self):
        return self.hom.shape[1]


def l_zero(m):
    return LElement(zeros(2 * m), zeros(2 * m, m), mpq(0))


def qhat(h, h2):
    """Qhat(h, h') = sum_j Q(h(f^j), h'(f^j)) for the identity metric."""
    return sum((quad_q(h[:, j], h2[:, j]) for j in range(h.shape[1])), mpq(0))


def l_super_bracket(p, q):
    return LElement(
        bracket(p.so, q.so),
        p.so.dot(q.hom) - q.so.dot(p.hom),
        -2 * qhat(p.hom, q.hom),
    )


def iota(p, algebra, n):
    m = n * DIMS[algebra]
    return LElement(iota_so(p.even, algebra, n), iota_hom(p.odd, algebra, n), iota_scalar(p.scalar, m))


def l_flat(p):
    v = {("so",) + k: x for k, x in to_sparse(p.so).items()}
    v.update({("hom",) + k: x for k, x in to_sparse(p.hom).items()})
    if p.scalar:
        v[("scalar",)] = p.scalar
    return v


def iota_hom_table(algebra, n):
    """Every basis pair (a, b) with iota([a,b]) compared to [iota a, iota b]."""
    basis = super_basis(algebra)
    results = []
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            if j < i:
                continue
            lhs = iota(super_bracket(a, b), algebra, n)
            rhs = l_super_bracket(iota(a, algebra, n), iota(b, algebra, n))
            results.append(((i, j), lhs == rhs))
    return results


def iota_injective(algebra, n):
    basis = super_basis(algebra)
    ech = EchelonBasis()
    for b in basis:
        ech.add(l_flat(iota(b, algebra, n)))
    return ech.rank == len(basis)


def qhat_normalization(algebra, n):
    """The constant c with Qhat(iota u, iota v) = c qcheck(u, v), or None."""
    consts = set()
    us = k11_basis(algebra)
    for u in us:
        for v in us:
            lhs = qhat(iota_hom(u, algebra, n), iota_hom(v, algebra, n))
            rhs = qcheck(u, v)
            if rhs:
                consts.add(lhs / rhs)
            elif lhs:
                return None
    return consts.pop() if len(consts) == 1 else None


# octonionic checks -----------------------------------------------------------


def octonion_products():
    xs = [iota_so(x, "O", 1) for x in su_basis("O")]
    us = [iota_hom(u, "O", 1) for u in k11_basis("O")]
    return [x.dot(h) for x in xs for h in us]


def octonion_span_check():
    return span_dim(octonion_products())


def octonion_graded_closure():
    """Closure of iota(su_O) + iota(su_O).iota(O^{1,1}) + R under the L bracket."""
    even = [iota_so(x, "O", 1) for x in su_basis("O")]
    odd_ech = EchelonBasis()
    odd = []
    for p in octonion_products():
        if odd_ech.add(to_sparse(p)):
            odd.append(p)
    even_ech = EchelonBasis()
    for x in even:
        even_ech.add(to_sparse(x))
    for i, x in enumerate(even):
        for y in even[:i]:
            if not even_ech.contains(to_sparse(bracket(x, y))):
                return False
    for x in even:
        for h in odd:
            if not odd_ech.contains(to_sparse(x.dot(h))):
                return False
    # odd-odd brackets are the scalars -2 Qhat by construction
    return True


# tau_* ---------------------------------------------------------------------


def _hermitian(alpha, beta, x):
    a = NormedElement.one("H")
    return [[a * (alpha + beta), x], [x.conj(), a * (alpha - beta)]]


def _hermitian_coords(X):
    p, r = X[0][0].re(), X[1][1].re()
    return [(p + r) / 2, (p - r) / 2] + list(X[0][1].coords)


def _mat_mul(A, B):
    return [[A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2)] for i in range(2)]


def _mat_add(A, B):
    return [[A[i][j] + B[i][j] for j in range(2)] for i in range(2)]


def tau_star_matrix(A):
    """6x6 matrix of X -> A X + X A* on hermitian quaternion matrices."""
    out = zeros(6)
    for c in range(6):
        coords = [mpq(0)] * 6
        coords[c] = mpq(1)
        X = _hermitian(coords[0], coords[1], NormedElement("H", coords[2:]))
        Y = _mat_add(_mat_mul(A, X), _mat_mul(X, conj_transpose(A)))
        for r, v in enumerate(_hermitian_coords(Y)):
            out[r, c] = v
    return out


def tau_star(x):
    """tau_* of a K2 operator of the form phi_A on H^2."""
    A = matrix_of_operator(x, "H")
    if A is None:
        raise ValueError("operator is not of the form phi_A")
    return tau_star_matrix(A)


def _E(i, j):
    out = zeros(6)
    out[i - 1, j - 1] = mpq(1)
    return out


def stated_tau_images():
    """The closed-form images of the named su_H(1,1) generators (1-based E_ij)."""
    out = {}
    for s in (1, 2, 3):
        t = 3 + s
        out[f"L{s}"] = _E(1, t) + _E(t, 1) - _E(2, t) + _E(t, 2)
        out[f"Lambda{s}"] = _E(1, t) + _E(t, 1) + _E(2, t) - _E(t, 2)
    out["K1"] = 2 * (_E(6, 5) - _E(5, 6))
    out["K2"] = 2 * (_E(4, 6) - _E(6, 4))
    out["K3"] = 2 * (_E(5, 4) - _E(4, 5))
    out["H"] = 2 * (_E(1, 2) + _E(2, 1))
    return out


def tau_star_named(tag):
    gens = named_generators("H")
    if tag not in QUATERNION_GENERATOR_NAMES:
        raise ValueError(f"unknown generator {tag!r}")
    return tau_star(gens[tag])


def tau_homomorphism_table():
    """((i, j), ok) over the 45 unordered pairs of the named su_H(1,1) basis."""
    gens = named_generators("H")
    names = QUATERNION_GENERATOR_NAMES
    out = []
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            a, b = gens[names[i]], gens[names[j]]
            out.append(((names[i], names[j]), mat_eq(tau_star(bracket(a, b)), bracket(tau_star(a), tau_star(b)))))
    return out


# twisted equivariance (K = H, n = 1) -------------------------------------------


def _real_matrix(fn, algebra):
    d = DIMS[algebra]
    out = zeros(d)
    for k in range(d):
        for r, v in enumerate(fn(NormedElement.unit(algebra, k)).coords):
            out[r, k] = v
    return out


def twist_equivariance(p, q):
    """Checks for phi(x) = p x q~ with twist theta(a) = q a q~ on H."""
    if p.norm_sq() != 1 or q.norm_sq() != 1:
        raise ValueError("twist parameters must be unit quaternions")
    phi = lambda x: p * x * q.conj()
    theta = lambda a: q * a * q.conj()
    units = NormedElement.basis("H")
    ok_twist = all(phi(x * a) == phi(x) * theta(a) for x in units for a in units)

    theta_mat = _real_matrix(theta, "H")
    big_theta = zeros(8)
    big_theta[:4, :4] = theta_mat
    big_theta[4:, 4:] = theta_mat
    g = qcheck_gram("H")
    ok_form = mat_eq(big_theta.T.dot(g).dot(big_theta), g)

    phi_v = _real_matrix(phi, "H")
    phi_w = zeros(8)
    phi_w[:4, :4] = phi_v
    phi_w[4:, 4:] = phi_v  # phi is orthogonal, so its dual action on V* is phi again
    phi_w_inv = phi_w.T.copy()
    phi_v_inv = phi_v.T.copy()
    assert mat_eq(phi_w.dot(phi_w_inv), np.identity(8, dtype=object) * mpq(1))

    even = [iota_so(x, "H", 1) for x in su_basis("H")]
    ok_even = all(in_span(even, phi_w.dot(x).dot(phi_w_inv)) for x in even)
    ok_odd = True
    for u in k11_basis("H"):
        moved = phi_w.dot(iota_hom(u, "H", 1)).dot(phi_v_inv)
        if not mat_eq(moved, iota_hom(big_theta.dot(u), "H", 1)):
            ok_odd = False
    return {
        "twisted-linearity": ok_twist,
        "preserves-qcheck": ok_form,
        "even-part-stable": ok_even,
        "odd-part-equivariant": ok_odd,
    }
