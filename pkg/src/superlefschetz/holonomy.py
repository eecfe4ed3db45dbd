"""Kaehler, hyperkaehler and semi-flat structures on flat space.

Complex structures on V = K^n are right multiplications by unit imaginary
elements, in the real coordinates r = a + n*k (slot a, component k).  For
K = C this is J(d_a) = d_{n+a} with Kaehler form sum dy^a ^ dy^{n+a}.
"""
from __future__ import annotations

from itertools import product
from math import comb

import numpy as np
from gmpy2 import mpq

from .clifford import (
    SpinorOp,
    interior_op,
    is_q_antisymmetric,
    masks_of_degree,
    popcount,
    psi4,
    quad_gram,
    wedge_op,
)
from .linalg import (
    EchelonBasis,
    bracket,
    combine,
    eye,
    is_zero,
    mat_eq,
    mat_rank,
    nullspace,
    span_basis,
    to_sparse,
    zeros,
)
from .lie import (
    iota_hom,
    iota_so,
    k11_basis,
    epsilon,
    lie_closure,
    named_generators,
    QUATERNION_GENERATOR_NAMES,
    antisymmetric_part,
    su_basis,
    _dense,
)
from .normed import DIMS, GaussianRational, NormedElement
from .operators import (
    DiffOp,
    PolyForm,
    d_op,
    d_op_u,
    d_star_op,
    laplacian,
    rho_op,
    super_commutator,
    unit_index,
)


def right_multiplication(unit, algebra, n):
    """Real matrix of x -> x e_unit on K^n."""
    d = DIMS[algebra]
    m = n * d
    J = zeros(m)
    e = NormedElement.unit(algebra, unit)
    for a in range(n):
        for k in range(d):
            img = NormedElement.unit(algebra, k) * e
            for l, v in enumerate(img.coords):
                if v:
                    J[a + n * l, a + n * k] = v
    return J


def kahler_form(J):
    """omega(X, Y) = g(JX, Y) as a dict {(i, j): c} over i < j."""
    m = J.shape[0]
    return {(i, j): J[j, i] for i in range(m) for j in range(i + 1, m) if J[j, i]}


def form_wedge_op(two_form, m):
    """Multiplication by a constant 2-form."""
    out = SpinorOp(m)
    for (i, j), c in two_form.items():
        out = out + (wedge_op(i, m) @ wedge_op(j, m)).scaled(c)
    return out


def two_form_as_polyform(two_form, m):
    return PolyForm(m, {((1 << i) | (1 << j), (0,) * m): c for (i, j), c in two_form.items()})


class ComplexStructure:
    def __init__(self, J):
        m = J.shape[0]
        if not mat_eq(J.dot(J), -eye(m)) or not mat_eq(J.T.dot(J), eye(m)):
            raise ValueError("J must be orthogonal with J^2 = -1")
        self.J = J
        self.omega = kahler_form(J)

    @classmethod
    def standard(cls, n):
        return cls(right_multiplication(1, "C", n))

    @property
    def m(self):
        return self.J.shape[0]


class HyperkahlerTriple:
    """J_s = right multiplication by e_s on H^n."""

    def __init__(self, n):
        self.n = n
        self.structures = [ComplexStructure(right_multiplication(s, "H", n)) for s in (1, 2, 3)]

    @property
    def Js(self):
        return [c.J for c in self.structures]

    def relations(self):
        """Unit relations in H, and the operator relation they induce.

        Right multiplication reverses products, so the operators satisfy
        J1 J2 = -J3 and J1 J2 J3 = +1 while the units satisfy e1 e2 = e3.
        """
        e = NormedElement.basis("H")
        J1, J2, J3 = self.Js
        m = J1.shape[0]
        return {
            "units": e[1] * e[1] == e[2] * e[2] == e[3] * e[3] == -e[0]
            and (e[1] * e[2]) * e[3] == -e[0],
            "squares": all(mat_eq(J.dot(J), -eye(m)) for J in self.Js),
            "operators-reversed": mat_eq(J1.dot(J2), -J3) and mat_eq(J1.dot(J2).dot(J3), eye(m)),
        }


# Kaehler -------------------------------------------------------------------


def degree_eigen_check(op, m, value):
    """op acts on degree-p forms as value(p) * Id for every p."""
    for I in range(1 << m):
        col = op.cols.get(I, {})
        want = value(popcount(I))
        if want and col != {I: want}:
            return False
        if not want and col:
            return False
    return True


def _rho(x, algebra, n):
    """The constant spinor operator of rho for iota(x)."""
    m = n * DIMS[algebra]
    return rho_op(iota_so(x, algebra, n)).terms.get(((0,) * m, (0,) * m), SpinorOp(m))


def lefschetz_generators(n):
    """rho_L, rho_Lambda, rho_H, rho_h for K = C and the checks relating them."""
    m = 2 * n
    gens = named_generators("C")
    rho = {k: _rho(v, "C", n) for k, v in gens.items()}
    cs = ComplexStructure.standard(n)
    omega_op = form_wedge_op(cs.omega, m)
    L, Lam, H = gens["L"], gens["Lambda"], gens["H"]
    checks = [
        ("rhoL-is-omega-wedge", rho["L"] == omega_op),
        ("rhoL-of-one-is-omega", rho["L"].apply({0: mpq(1)}) == _two_form_spinor(cs.omega)),
        ("rhoLambda-is-adjoint", rho["Lambda"] == rho["L"].transpose()),
        ("rhoH-is-bracket", rho["H"] == rho["L"] @ rho["Lambda"] - rho["Lambda"] @ rho["L"]),
        ("rhoh-degree-eigenvalue", degree_eigen_check(rho["h"], m, lambda p: mpq(m, 2) - p)),
        ("matrix-HL", mat_eq(bracket(H, L), 2 * L)),
        ("matrix-HLambda", mat_eq(bracket(H, Lam), -2 * Lam)),
        ("matrix-LLambda", mat_eq(bracket(L, Lam), H)),
    ]
    for a, b in (("H", "L"), ("H", "Lambda"), ("L", "Lambda")):
        lhs = rho[a] @ rho[b] - rho[b] @ rho[a]
        rhs = _rho(bracket(gens[a], gens[b]), "C", n)
        checks.append((f"rho-bracket-{a}-{b}", lhs == rhs))
    return rho, checks


def _two_form_spinor(two_form):
    return {(1 << i) | (1 << j): c for (i, j), c in two_form.items()}


# Dolbeault -----------------------------------------------------------------


def _gaussian_covector_wedge(coeffs, m):
    out = SpinorOp(m)
    for k, c in coeffs.items():
        out = out + wedge_op(k, m).scaled(c)
    return out


def type_projection(J, j, holomorphic):
    """(dy^j)^{1,0} = 1/2 (dy^j - i dy^j o J); the (0,1) part uses +i."""
    m = J.shape[0]
    sign = -1 if holomorphic else 1
    coeffs = {j: GaussianRational(mpq(1, 2))}
    for k in range(m):
        if J[j, k]:
            coeffs[k] = coeffs.get(k, GaussianRational()) + GaussianRational(0, sign * J[j, k] / 2)
    return {k: c for k, c in coeffs.items() if c}


def dolbeault_operators(J):
    """(del, delbar, del*, delbar*) for the complex structure J."""
    m = J.shape[0]
    zero = (0,) * m
    ops = []
    for holomorphic in (True, False):
        ops.append(
            DiffOp(m, {(unit_index(m, j), zero): _gaussian_covector_wedge(type_projection(J, j, holomorphic), m) for j in range(m)})
        )
    adjoints = [DiffOp(m, {k: -v.conj_transpose() for k, v in op.terms.items()}) for op in ops]
    return ops[0], ops[1], adjoints[0], adjoints[1]


def _op_witness(lhs, rhs):
    from .theorems import describe_op
    if lhs == rhs:
        return None
    return {"lhs": describe_op(lhs), "rhs": describe_op(rhs), "difference": describe_op(lhs - rhs)}


def dolbeault_check(J, unit_eps1, unit_eps2, algebra, n):
    """Identities between D_u and the Dolbeault operators of J."""
    m = J.shape[0]
    i = GaussianRational(0, 1)
    dl, dbar, dl_s, dbar_s = dolbeault_operators(J)
    D_e1 = d_op_u(iota_hom(epsilon(1, algebra), algebra, n))
    D_e2 = d_op_u(iota_hom(epsilon(2, algebra), algebra, n))
    D_j1 = d_op_u(iota_hom(unit_eps1, algebra, n))
    D_j2 = d_op_u(iota_hom(unit_eps2, algebra, n))
    lap = laplacian(m)
    return [
        ("d-is-del-plus-delbar", D_e2 == dl + dbar),
        ("dstar-is-sum-of-adjoints", D_e1 == dl_s + dbar_s),
        ("rotated-eps2", D_j2 == (dbar - dl).scaled(i)),
        ("rotated-eps1.stated", D_j1 == (dbar_s - dl_s).scaled(i),
         _op_witness(D_j1, (dbar_s - dl_s).scaled(i))),
        ("rotated-eps1.adjoint-form", D_j1 == (dl_s - dbar_s).scaled(i)),
        ("laplacian-eps", super_commutator(D_e1, D_e2) == lap),
        ("laplacian-rotated", super_commutator(D_j1, D_j2) == lap),
        ("del-squared", (dl @ dl).is_zero() and (dbar @ dbar).is_zero()),
    ]


def z_coordinate_forms(n):
    """z_a and zbar_a as PolyForms of degree 0 (Gaussian coefficients)."""
    m = 2 * n
    i = GaussianRational(0, 1)
    z, zbar, dz, dzbar = [], [], [], []
    for a in range(n):
        re, im = unit_index(m, a), unit_index(m, n + a)
        z.append(PolyForm(m, {(0, re): mpq(1), (0, im): i}))
        zbar.append(PolyForm(m, {(0, re): mpq(1), (0, im): -i}))
        dz.append(PolyForm(m, {(1 << a, (0,) * m): mpq(1), (1 << (n + a), (0,) * m): i}))
        dzbar.append(PolyForm(m, {(1 << a, (0,) * m): mpq(1), (1 << (n + a), (0,) * m): -i}))
    return z, zbar, dz, dzbar


def kahler_dolbeault_check(n):
    J = right_multiplication(1, "C", n)
    checks = dolbeault_check(J, epsilon(1, "C", 1), epsilon(2, "C", 1), "C", n)
    dl, dbar, _, _ = dolbeault_operators(J)
    z, zbar, dz, dzbar = z_coordinate_forms(n)
    ok = all(
        not dl.apply(zbar[a]) and dbar.apply(zbar[a]) == dzbar[a]
        and dl.apply(z[a]) == dz[a] and not dbar.apply(z[a])
        for a in range(n)
    )
    checks.append(("z-coordinates", ok))
    return checks


# hyperkaehler ----------------------------------------------------------------


def hyperkahler_generators(n):
    m = 4 * n
    triple = HyperkahlerTriple(n)
    gens = named_generators("H")
    rho = {k: _rho(v, "H", n) for k, v in gens.items()}
    checks = []
    for s, cs in enumerate(triple.structures, start=1):
        omega_op = form_wedge_op(cs.omega, m)
        checks.append((f"rhoL{s}-is-omega{s}-wedge", rho[f"L{s}"] == omega_op))
        checks.append((f"rhoL{s}-of-one", rho[f"L{s}"].apply({0: mpq(1)}) == _two_form_spinor(cs.omega)))
        checks.append((f"rhoLambda{s}-is-adjoint", rho[f"Lambda{s}"] == rho[f"L{s}"].transpose()))
        D1 = d_op_u(iota_hom(epsilon(1, "H", s), "H", n))
        D2 = d_op_u(iota_hom(epsilon(2, "H", s), "H", n))
        checks.append((f"laplacian-J{s}", super_commutator(D1, D2) == laplacian(m)))
        for row in dolbeault_check(cs.J, epsilon(1, "H", s), epsilon(2, "H", s), "H", n):
            checks.append((f"dolbeault-J{s}.{row[0]}",) + tuple(row[1:]))
        L, Lam, H = gens[f"L{s}"], gens[f"Lambda{s}"], gens["H"]
        checks.append((f"sl2-triple-{s}", mat_eq(bracket(H, L), 2 * L) and mat_eq(bracket(H, Lam), -2 * Lam)
                       and mat_eq(bracket(L, Lam), H)))
    checks.append(("closure-dimension-10", len(lie_closure([gens[k] for k in QUATERNION_GENERATOR_NAMES])) == 10))
    checks.append(("span-equals-su", _same_span([gens[k] for k in QUATERNION_GENERATOR_NAMES], su_basis("H"))))
    for name, ok in triple.relations().items():
        checks.append((f"relations.{name}", ok))
    return checks


def _same_span(a, b):
    ea, eb = EchelonBasis(), EchelonBasis()
    for x in a:
        ea.add(to_sparse(x))
    for x in b:
        eb.add(to_sparse(x))
    return ea.rank == eb.rank and all(ea.contains(to_sparse(x)) for x in b)


# hard Lefschetz on tori ------------------------------------------------------


def hard_lefschetz_torus(n, k, omega_op=None):
    """(omega ^)^k : Lambda^{n-k} -> Lambda^{n+k} on R^{2n} is an isomorphism."""
    m = 2 * n
    if omega_op is None:
        rho, _ = lefschetz_generators(n)
        omega_op = rho["L"]
    power = SpinorOp.identity(m)
    for _ in range(k):
        power = power @ omega_op
    src = masks_of_degree(m, n - k)
    tgt = masks_of_degree(m, n + k)
    rows = {t: r for r, t in enumerate(tgt)}
    mat = zeros(len(tgt), len(src))
    for c, I in enumerate(src):
        for r, v in power.cols.get(I, {}).items():
            mat[rows[r], c] = v
    return len(src) == len(tgt) == comb(m, n - k) and mat_rank(mat) == len(src)


def lefschetz_harmonic_invariance(n, omega_op=None):
    """Constant forms are harmonic and omega ^ commutes with the Laplacian."""
    m = 2 * n
    if omega_op is None:
        omega_op = lefschetz_generators(n)[0]["L"]
    lap = laplacian(m)
    L = DiffOp.multiplication(omega_op)
    constant_harmonic = all(not lap.apply(PolyForm.monomial(m, I)) for I in range(1 << m))
    return constant_harmonic and super_commutator(L, lap).is_zero()


# semi-flat models --------------------------------------------------------------


class SemiFlatModel:
    """W = (K')^n (x) (K')^{2,2} for K = C (K' = R) and K = H (K' = C).

    Slot a of (K')^4 holds (x, xi) components: for K = C the reals
    (Re x_a, Im x_a, Re xi_a, Im xi_a); for K = H, writing x = z + w j,
    the complex numbers (z_x, w_x, z_xi, w_xi).  The real coordinates of
    (K')^4 are c * d' + t (component c, real part t).
    """

    def __init__(self, algebra, n):
        if algebra not in ("C", "H"):
            raise ValueError("semi-flat models need K = C or H")
        self.algebra = algebra
        self.n = n
        self.d = DIMS[algebra]
        self.dprime = self.d // 2
        self.m = n * self.d
        self.prime = "R" if algebra == "C" else "C"
        # perm[w_index] = position in (slot, (K')^4 real coordinate) order
        m, dp = self.m, self.dprime
        self.index = {}
        for a in range(n):
            for s in range(2):  # x or xi
                for k in range(self.d):
                    c, t = divmod(k, dp)
                    self.index[s * m + a + n * k] = a * 4 * dp + (2 * s + c) * dp + t
        P = zeros(2 * m)
        for w, pos in self.index.items():
            P[pos, w] = mpq(1)
        self.P = P

    @property
    def block(self):
        return 4 * self.dprime

    def qprime_gram(self):
        dp = self.dprime
        g = zeros(4 * dp)
        for c1, c2 in ((0, 2), (1, 3)):
            for t in range(dp):
                g[c1 * dp + t, c2 * dp + t] = mpq(1, 2)
                g[c2 * dp + t, c1 * dp + t] = mpq(1, 2)
        return g

    def isometry(self):
        big = zeros(2 * self.m)
        g = self.qprime_gram()
        b = self.block
        for a in range(self.n):
            big[a * b:(a + 1) * b, a * b:(a + 1) * b] = g
        return mat_eq(self.P.T.dot(big).dot(self.P), quad_gram(self.m))

    def embed(self, x):
        """Id_n (x) x, pulled back to so(W, Q)."""
        b = self.block
        big = zeros(2 * self.m)
        for a in range(self.n):
            big[a * b:(a + 1) * b, a * b:(a + 1) * b] = x
        return self.P.T.dot(big).dot(self.P)

    def base_indices(self):
        """Real directions of V spanning the base copy of (K')^n."""
        return [a + self.n * t for t in range(self.dprime) for a in range(self.n)]

    def odd_hom(self, u):
        """V*_base -> W, xi -> xi (x) u, as a 2m x m matrix (zero on fibre covectors)."""
        out = zeros(2 * self.m, self.m)
        dp = self.dprime
        inv = {pos: w for w, pos in self.index.items()}
        b = self.block
        for a in range(self.n):
            for t in range(dp):  # covector dy^{a + n t} is the scalar i^t in slot a
                col = a + self.n * t
                for c in range(4):
                    val = [u[c * dp + r] for r in range(dp)]
                    if t == 1:  # multiply by i
                        val = [-val[1], val[0]]
                    for r, v in enumerate(val):
                        if v:
                            out[inv[a * b + c * dp + r], col] = v
        return out

    def d_prime(self, u):
        return d_op_u(self.odd_hom(u))

    def base_laplacian(self):
        m = self.m
        ident = SpinorOp.identity(m)
        return DiffOp(m, {(unit_index(m, j, 2), (0,) * m): -ident for j in self.base_indices()})

    def qprime(self, u, v):
        return u.dot(self.qprime_gram()).dot(v)


def _complex_phi(A):
    """Real 8x8 matrix of u -> u A* on C^4 for a 4x4 complex matrix of pairs."""
    out = zeros(8)
    for s in range(4):
        for t in range(2):
            for j in range(4):
                re, im = A[j][s]
                # e_t * conj(A_js), e_0 = 1, e_1 = i
                cre, cim = re, -im
                if t == 0:
                    vre, vim = cre, cim
                else:
                    vre, vim = -cim, cre
                out[j * 2, s * 2 + t] = vre
                out[j * 2 + 1, s * 2 + t] = vim
    return out


def sl4_generators(prime):
    """phi_A for trace-free elementary A in Mat(4, K')."""
    gens = []
    units = [(1, 0)] if prime == "R" else [(1, 0), (0, 1)]
    for i in range(4):
        for j in range(4):
            for u in units:
                if i == j and i == 3:
                    continue
                A = [[(0, 0)] * 4 for _ in range(4)]
                A[i][j] = u
                if i == j:
                    A[3][3] = (-u[0], -u[1])
                gens.append(A)
    if prime == "R":
        return [_real_phi(A) for A in gens]
    return [_complex_phi(A) for A in gens]


def _real_phi(A):
    out = zeros(4)
    for s in range(4):
        for j in range(4):
            out[j, s] = mpq(A[j][s][0])
    return out


def su22_basis(model):
    sl = lie_closure(sl4_generators(model.prime))
    return sl, antisymmetric_part(sl, model.qprime_gram())


def un_basis(model):
    """psi4-images of u_{K'}(n) acting on the (K')^n factor."""
    n = model.n
    out = []
    mats = []
    if model.prime == "R":
        for a in range(n):
            for b in range(a + 1, n):
                A = [[(0, 0)] * n for _ in range(n)]
                A[a][b], A[b][a] = (1, 0), (-1, 0)
                mats.append(A)
    else:
        for a in range(n):
            for b in range(a, n):
                if a != b:
                    A = [[(0, 0)] * n for _ in range(n)]
                    A[a][b], A[b][a] = (1, 0), (-1, 0)
                    mats.append(A)
                A = [[(0, 0)] * n for _ in range(n)]
                A[a][b] = (0, 1)
                A[b][a] = (0, 1)
                mats.append(A)
    for A in mats:
        out.append(psi4(_left_complex_on_V(A, model)))
    return out


def _left_complex_on_V(A, model):
    """Real m x m matrix of x -> A x with complex (or real) entries acting on the left."""
    n, algebra = model.n, model.algebra
    m = model.m
    alg_d = DIMS[algebra]
    out = zeros(m)
    for a in range(n):
        for b in range(n):
            re, im = A[a][b]
            if not re and not im:
                continue
            c = NormedElement(algebra, [re, im] + [0] * (alg_d - 2))
            for k in range(alg_d):
                img = c * NormedElement.unit(algebra, k)
                for l, v in enumerate(img.coords):
                    if v:
                        out[a + n * l, b + n * k] += v
    return out


def _super_table(model, evens):
    """Bracket table of su_{K'}(2,2)_sup against its operator images."""
    m = model.m
    lap = model.base_laplacian()
    block = model.block
    odd_basis = []
    for i in range(block):
        v = zeros(block, 1)[:, 0]
        v[i] = mpq(1)
        odd_basis.append(v)

    def psi(kind, val):
        if kind == "even":
            return rho_op(model.embed(val))
        if kind == "odd":
            return model.d_prime(val)
        return lap.scaled(-val)

    elems = [("even", x) for x in evens] + [("odd", u) for u in odd_basis] + [("scalar", mpq(1))]
    names = [f"x{i}" for i in range(len(evens))] + [f"eps{i + 1}" for i in range(block)] + ["one"]
    images = [psi(*e) for e in elems]
    out = []
    for i in range(len(elems)):
        for j in range(i, len(elems)):
            (ka, a), (kb, b) = elems[i], elems[j]
            lhs = super_commutator(images[i], images[j])
            if ka == "even" and kb == "even":
                rhs = psi("even", bracket(a, b))
            elif ka == "even" and kb == "odd":
                rhs = psi("odd", a.dot(b))
            elif ka == "odd" and kb == "odd":
                rhs = psi("scalar", -2 * model.qprime(a, b))
            else:
                rhs = DiffOp(m)
            out.append((f"table.{names[i]}-{names[j]}", lhs == rhs))
    return out


def mirror_split(model, su22, iota_part):
    """Split so(2,2) = iota(su_C(1,1)) + centralizer, with explicit sl2 triples."""
    # over coefficients of su22 of the map c -> [c, iota_part]
    col_vectors = []
    for b in su22:
        v = {}
        for t, x in enumerate(iota_part):
            for k, val in to_sparse(bracket(b, x)).items():
                v[(t,) + k] = val
        col_vectors.append(v)
    kernel = nullspace(col_vectors)
    mirror = [_dense(v, su22[0].shape) for v in span_basis([to_sparse(combine(c, su22)) for c in kernel])]
    ok_dim = len(mirror) == 3
    ok_commute = all(is_zero(bracket(a, b)) for a in mirror for b in iota_part)
    ok_sum = len(span_basis([to_sparse(x) for x in list(iota_part) + mirror])) == len(su22)
    ok_perfect = len(span_basis([to_sparse(bracket(a, b)) for a in mirror for b in mirror])) == 3
    triple = find_sl2_triple(mirror)
    return mirror, {
        "mirror-dimension-3": ok_dim,
        "factors-commute": ok_commute,
        "direct-sum": ok_sum,
        "mirror-perfect": ok_perfect,
        "mirror-sl2-triple": triple is not None,
    }, triple


def _ad_matrix(h, basis):
    """Matrix of ad_h on span(basis) in the basis coordinates."""
    ech = EchelonBasis(track=True)
    for b in basis:
        ech.add(to_sparse(b))
    k = len(basis)
    M = zeros(k)
    for c, b in enumerate(basis):
        coeffs = ech.solve(to_sparse(bracket(h, b)))
        for r, v in coeffs.items():
            M[r, c] = v
    return M


def _is_rational_square(q):
    from gmpy2 import is_square
    q = mpq(q)
    return q >= 0 and is_square(q.numerator) and is_square(q.denominator)


def _rational_sqrt(q):
    from gmpy2 import isqrt
    q = mpq(q)
    return mpq(isqrt(q.numerator), isqrt(q.denominator))


def find_sl2_triple(basis):
    """(h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h inside span(basis)."""
    k = len(basis)
    for coeffs in product(range(-2, 3), repeat=k):
        if not any(coeffs):
            continue
        h = combine(dict(enumerate(coeffs)), basis)
        ad = _ad_matrix(h, basis)
        kappa = sum(ad.dot(ad)[i, i] for i in range(k))
        if not kappa or not _is_rational_square(kappa / 8):
            continue
        h = h * (1 / _rational_sqrt(kappa / 8))
        ad = _ad_matrix(h, basis)
        plus = nullspace([to_sparse(col) for col in (ad - 2 * eye(k)).T])
        minus = nullspace([to_sparse(col) for col in (ad + 2 * eye(k)).T])
        if not plus or not minus:
            continue
        e = combine(plus[0], basis)
        f = combine(minus[0], basis)
        ef = bracket(e, f)
        ech = EchelonBasis(track=True)
        ech.add(to_sparse(h))
        c = ech.solve(to_sparse(ef))
        if not c:
            continue
        f = f * (1 / c[0])
        if mat_eq(bracket(h, e), 2 * e) and mat_eq(bracket(h, f), -2 * f) and mat_eq(bracket(e, f), h):
            return h, e, f
    return None


def semi_flat_action(algebra, n):
    model = SemiFlatModel(algebra, n)
    sl, su22 = su22_basis(model)
    expected = {"C": 6, "H": 15}[algebra]
    expected_sl = {"C": 15, "H": 30}[algebra]
    images = [model.embed(x) for x in su22]
    checks = [
        ("sl-dimension", len(sl) == expected_sl),
        ("dimension", len(su22) == expected),
        ("isometry", model.isometry()),
        ("images-q-antisymmetric", all(is_q_antisymmetric(x) for x in images)),
    ]
    iota_images = [iota_so(x, algebra, n) for x in su_basis(algebra)]
    ech = EchelonBasis()
    for x in images:
        ech.add(to_sparse(x))
    checks.append(("contains-iota", all(ech.contains(to_sparse(x)) for x in iota_images)))
    un = un_basis(model)
    checks.append(("commutes-with-u(n)", all(is_zero(bracket(a, b)) for a in images for b in un)))
    # the odd parts agree: iota(u) = u viewed in (K')^4, on base directions
    lap = model.base_laplacian()
    block = model.block
    odd = []
    for i in range(block):
        v = zeros(block, 1)[:, 0]
        v[i] = mpq(1)
        odd.append(v)
    ok = True
    for a in range(block):
        for b in range(a, block):
            lhs = super_commutator(model.d_prime(odd[a]), model.d_prime(odd[b]))
            ok = ok and lhs == lap.scaled(2 * model.qprime(odd[a], odd[b]))
    checks.append(("odd-anticommutators", ok))
    checks.append(("iota-odd-matches", _iota_odd_matches(model)))
    checks.extend(_super_table(model, su22))
    if algebra == "C":
        iota_part = su_basis("C")
        _, split, _ = mirror_split(model, su22, iota_part)
        for name, ok in split.items():
            checks.append((f"split.{name}", ok))
        checks.append(("split.iota-sl2-triple", find_sl2_triple(iota_part) is not None))
    return checks


def _iota_odd_matches(model):
    """On fibre-invariant forms D_{iota u} agrees with D'_u for u in K^{1,1}."""
    from .operators import monomial_forms

    algebra, n, m = model.algebra, model.n, model.m
    base = set(model.base_indices())
    forms = [f for f in monomial_forms(m, 2) if all(a[j] == 0 for (_, a) in f.terms for j in range(m) if j not in base)]
    for u in k11_basis(algebra):
        full = d_op_u(iota_hom(u, algebra, n))
        semi = model.d_prime(u)
        if not all(full.apply(f) == semi.apply(f) for f in forms):
            return False
    return True
