"""Exact verification of the flat-model identities between the superalgebras
and the differential operators rho_x, D_u and the Laplacian.

Every check returns a list of ``(name, ok, witness)`` triples; ``witness`` is
None on success and a small dict of canonical strings on failure.
"""
from __future__ import annotations

import random
from functools import lru_cache

from gmpy2 import mpq

from .clifford import ad_of, degree_two_monomials, is_q_antisymmetric
from .linalg import EchelonBasis, is_zero, zeros
from .lie import (
    iota,
    iota_hom,
    iota_so,
    k11_basis,
    octonion_products,
    qcheck,
    qhat,
    su_basis,
    super_basis,
    super_bracket,
)
from .normed import DIMS
from .operators import (
    DiffOp,
    Polynomial,
    d_op_u,
    laplacian,
    polynomial_times,
    rho_d_commutator_sides,
    rho_op,
    section_scale,
    super_commutator,
    symbol_super_commutator,
)


def describe_op(op, limit=4):
    """Deterministic short text form of a DiffOp or SymbolElement."""
    if not op.terms:
        return "0"
    parts = []
    for key in sorted(op.terms)[:limit]:
        A = op.terms[key]
        entries = sorted((c, r, str(v)) for c, col in A.cols.items() for r, v in col.items())[:3]
        parts.append(f"d^{key[0]} y^{key[1]}: {entries}")
    more = len(op.terms) - limit
    return "; ".join(parts) + (f"; +{more} more terms" if more > 0 else "")


def _result(name, lhs, rhs, inputs=None):
    if lhs == rhs:
        return (name, True, None)
    w = {"lhs": describe_op(lhs), "rhs": describe_op(rhs)}
    if inputs:
        w["inputs"] = inputs
    return (name, False, w)


def odd_name(k, algebra):
    d = DIMS[algebra]
    slot, unit = divmod(k, d)
    return f"eps{slot + 1}" if unit == 0 else f"e{unit}eps{slot + 1}"


def super_names(algebra, even_count):
    d = DIMS[algebra]
    return [f"x{i}" for i in range(even_count)] + [odd_name(k, algebra) for k in range(2 * d)] + ["one"]


def psi(p, m):
    """Psi(x, h, f) = rho_x + D_h - (1/m) f Delta for constant L elements."""
    out = DiffOp(m)
    if not is_zero(p.so):
        out = out + rho_op(p.so)
    if not is_zero(p.hom):
        out = out + d_op_u(p.hom)
    if p.scalar:
        out = out + laplacian(m).scaled(-p.scalar / m)
    return out


def _kind(i, j, n_even, n_odd):
    def part(t):
        return "even" if t < n_even else ("odd" if t < n_even + n_odd else "center")
    a, b = part(i), part(j)
    if "center" in (a, b):
        return "center"
    return f"{a}-{b}"


def odd_anticommutator_check(algebra, n):
    """{D_u, D_v} = 2 qcheck(u, v) Delta on all basis pairs of K^{1,1}."""
    m = n * DIMS[algebra]
    us = k11_basis(algebra)
    ds = [d_op_u(iota_hom(u, algebra, n)) for u in us]
    lap = laplacian(m)
    out = []
    for i in range(len(us)):
        for j in range(i, len(us)):
            lhs = super_commutator(ds[i], ds[j])
            rhs = lap.scaled(2 * qcheck(us[i], us[j]))
            out.append((f"{odd_name(i, algebra)}-{odd_name(j, algebra)}", *_result("", lhs, rhs)[1:]))
    return out


def odd_symbol_check(algebra, n=1):
    """sigma_2({D_u, D_v} - 2 qcheck(u, v) Delta) = 0, plus the remainder itself."""
    m = n * DIMS[algebra]
    us = k11_basis(algebra)
    ds = [d_op_u(iota_hom(u, algebra, n)) for u in us]
    lap = laplacian(m)
    out = []
    for i in range(len(us)):
        for j in range(i, len(us)):
            rem = super_commutator(ds[i], ds[j]) - lap.scaled(2 * qcheck(us[i], us[j]))
            sym = rem.symbol(2)
            name = f"{odd_name(i, algebra)}-{odd_name(j, algebra)}"
            out.append((name, not sym, None if not sym else {"symbol": describe_op(sym)}))
            out.append((name + ".remainder", not rem, None if not rem else {"remainder": describe_op(rem)}))
    return out


def homomorphism_table_check(algebra, n, even_basis=None, even_names=None):
    """Psi o iota is a super bracket homomorphism on all basis pairs.

    ``even_basis`` replaces the computed su_K(1,1) basis, e.g. by named
    generators; ``even_names`` labels it.
    """
    m = n * DIMS[algebra]
    basis = super_basis(algebra, even_basis)
    n_even = len(basis) - 2 * DIMS[algebra] - 1
    n_odd = 2 * DIMS[algebra]
    names = super_names(algebra, n_even)
    if even_names:
        names[:n_even] = list(even_names)
    images = [psi(iota(b, algebra, n), m) for b in basis]
    out = []
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            lhs = super_commutator(images[i], images[j])
            rhs = psi(iota(super_bracket(basis[i], basis[j]), algebra, n), m)
            kind = _kind(i, j, n_even, n_odd)
            out.append(_result(f"{kind}.{names[i]}-{names[j]}", lhs, rhs))
    lap = laplacian(m)
    for i in range(n_even + n_odd):
        lhs = super_commutator(images[i], lap)
        out.append(_result(f"center.{names[i]}-laplacian", lhs, DiffOp(m)))
    # scaling: Psi(iota(0,0,1)) = -Delta
    out.append(_result("scaling", images[-1], lap.scaled(-1)))
    out.append(("injective", _op_rank(images) == len(basis), None))
    return out


def _op_flat(op):
    return {(k, c, r): v for k, A in op.terms.items() for c, col in A.cols.items() for r, v in col.items()}


def _op_rank(ops):
    ech = EchelonBasis()
    for op in ops:
        ech.add(_op_flat(op))
    return ech.rank


# polynomial sections ---------------------------------------------------------


def random_polynomial(m, degree, rng):
    terms = {}
    for _ in range(3):
        alpha = [0] * m
        for _ in range(rng.randint(0, degree)):
            alpha[rng.randrange(m)] += 1
        terms[tuple(alpha)] = mpq(rng.randint(-3, 3), rng.randint(1, 3))
    return Polynomial(m, terms)


@lru_cache(maxsize=None)
def so_w_basis(m):
    return tuple(ad_of(mono) for _, mono in degree_two_monomials(m))


def random_so_section(m, degree, rng, terms=3):
    sec = {}
    basis = so_w_basis(m)
    for _ in range(terms):
        piece = section_scale({(0,) * m: basis[rng.randrange(len(basis))]}, random_polynomial(m, degree, rng))
        for a, X in piece.items():
            sec[a] = sec[a] + X if a in sec else X
    return {a: X for a, X in sec.items() if not is_zero(X)}


def random_hom_section(m, degree, rng, terms=3):
    sec = {}
    for _ in range(terms):
        h = zeros(2 * m, m)
        h[rng.randrange(2 * m), rng.randrange(m)] = mpq(1)
        piece = section_scale({(0,) * m: h}, random_polynomial(m, degree, rng))
        for a, X in piece.items():
            sec[a] = sec[a] + X if a in sec else X
    return {a: X for a, X in sec.items() if not is_zero(X)}


def rho_d_commutator_check(m, max_degree, seed, samples=4):
    rng = random.Random(seed)
    out = []
    for s in range(samples):
        x = random_so_section(m, max_degree, rng)
        u = random_hom_section(m, max_degree, rng)
        assert all(is_q_antisymmetric(X) for X in x.values())
        lhs, rhs = rho_d_commutator_sides(x, u, m)
        out.append(_result(f"sample{s}", lhs, rhs))
    return out


# symbols ---------------------------------------------------------------------


def _section_psi(p, f, m):
    """Psi of the section f * p for a constant L element p and Polynomial f."""
    out = DiffOp(m)
    if not is_zero(p.so):
        out = out + rho_op(section_scale({(0,) * m: p.so}, f), m)
    if not is_zero(p.hom):
        out = out + d_op_u(section_scale({(0,) * m: p.hom}, f), m)
    if p.scalar:
        out = out + polynomial_times(f, laplacian(m)).scaled(-p.scalar / m)
    return out


def _grade(p):
    if not is_zero(p.so):
        return 0
    if not is_zero(p.hom):
        return 1
    return 2


def _symbol_pair(p, q, f, g, m, bracket_pq):
    a, b = _section_psi(p, f, m), _section_psi(q, g, m)
    k = _grade(p) + _grade(q)
    lhs = super_commutator(a, b).symbol(k)
    rhs = _section_psi(bracket_pq, f * g, m).symbol(k)
    pointwise = symbol_super_commutator(a.symbol(_grade(p)), b.symbol(_grade(q)))
    return lhs == rhs and lhs == pointwise, lhs, rhs


def symbol_homomorphism_check(algebra, n, max_degree, seed):
    """sigma o Psi respects brackets of polynomial sections; injective on a fiber."""
    from .lie import l_super_bracket

    m = n * DIMS[algebra]
    rng = random.Random(seed)
    basis = [iota(b, algebra, n) for b in super_basis(algebra)]
    n_even = len(su_basis(algebra))
    names = super_names(algebra, n_even)
    out = []
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            f = random_polynomial(m, max_degree, rng)
            g = random_polynomial(m, max_degree, rng)
            ok, lhs, rhs = _symbol_pair(basis[i], basis[j], f, g, m, l_super_bracket(basis[i], basis[j]))
            w = None if ok else {"lhs": describe_op(lhs), "rhs": describe_op(rhs)}
            out.append((f"{names[i]}-{names[j]}", ok, w))
    symbols = [psi(p, m).symbol(_grade(p)) for p in basis]
    ech = EchelonBasis()
    for s in symbols:
        ech.add(_op_flat(s))
    out.append(("injective", ech.rank == len(basis), None))
    return out


def octonion_symbol_checks(seed):
    """Symbol-level bracket checks on the octonionic graded subspace.

    The odd part is all of Hom(V*, W).  The odd-odd identity is checked on
    the iota(O^{1,1}) basis and separately on the full odd part, where a
    counterexample is reported.
    """
    from .lie import LElement, l_super_bracket

    m = 8
    evens = [iota_so(x, "O", 1) for x in su_basis("O")]
    odds = [iota_hom(u, "O", 1) for u in k11_basis("O")]
    zero_so, zero_hom = zeros(2 * m), zeros(2 * m, m)
    one = Polynomial.constant(m, mpq(1))
    out = []

    def L(so=None, hom=None, scalar=mpq(0)):
        return LElement(zero_so if so is None else so, zero_hom if hom is None else hom, scalar)

    ok_all = True
    for i in range(len(odds)):
        for j in range(i, len(odds)):
            p, q = L(hom=odds[i]), L(hom=odds[j])
            ok, _, _ = _symbol_pair(p, q, one, one, m, l_super_bracket(p, q))
            ok_all = ok_all and ok
    out.append(("odd-odd.iota-basis", ok_all, None))

    rng = random.Random(seed)
    ok_all = True
    for _ in range(6):
        x = evens[rng.randrange(len(evens))]
        h = odds[rng.randrange(len(odds))]
        p, q = L(so=x), L(hom=h)
        ok, _, _ = _symbol_pair(p, q, one, one, m, l_super_bracket(p, q))
        ok_all = ok_all and ok
    out.append(("even-odd.sampled", ok_all, None))

    # full odd part: the rank-one map dy^0 -> f_0 + f^0 is in the span
    h = zeros(2 * m, m)
    h[0, 0] = mpq(1)
    h[m, 0] = mpq(1)
    in_span = EchelonBasis()
    for prod in octonion_products():
        in_span.add({k: v for k, v in _flat(prod).items()})
    assert in_span.contains(_flat(h))
    p = L(hom=h)
    ok, lhs, rhs = _symbol_pair(p, p, one, one, m, l_super_bracket(p, p))
    w = None if ok else {
        "inputs": "h: dy^0 -> f_0 + f^0, bracket [h, h]",
        "lhs": describe_op(lhs),
        "rhs": describe_op(rhs),
        "qhat": str(qhat(h, h)),
    }
    out.append(("odd-odd.full-span", ok, w))
    return out


def _flat(mat):
    return {idx: v for idx, v in zip(_indices(mat.shape), mat.reshape(-1)) if v}


def _indices(shape):
    return [(r, c) for r in range(shape[0]) for c in range(shape[1])]


def rho_d_commutator_examples(algebra, n, seed):
    """Special cases: x = 0, constant x and u, linear x against iota(eps2)."""
    from .lie import epsilon

    m = n * DIMS[algebra]
    rng = random.Random(seed)
    u2 = iota_hom(epsilon(2, algebra), algebra, n)
    out = []
    lhs, rhs = rho_d_commutator_sides({}, u2, m)
    out.append(_result("zero-x", lhs, rhs))
    ok = not lhs and not rhs
    out.append(("zero-x.both-vanish", ok, None if ok else {"lhs": describe_op(lhs)}))
    evens = [iota_so(x, algebra, n) for x in su_basis(algebra)]
    for i, x in enumerate(evens):
        h = iota_hom(k11_basis(algebra)[rng.randrange(2 * DIMS[algebra])], algebra, n)
        lhs = super_commutator(rho_op(x), d_op_u(h))
        out.append(_result(f"constant.x{i}", lhs, d_op_u(x.dot(h))))
    x = random_so_section(m, 1, rng)
    lhs, rhs = rho_d_commutator_sides(x, u2, m)
    out.append(_result("linear-x.eps2", lhs, rhs))
    return out


def operator_algebra_checks(m, seed):
    """Composition identities on seeded operators built from d, d*, rho and D."""
    from .operators import d_op, d_star_op

    rng = random.Random(seed)
    basis = so_w_basis(m)
    xs = [basis[rng.randrange(len(basis))] + basis[rng.randrange(len(basis))] for _ in range(2)]
    rhos = [rho_op(x) for x in xs]
    hom = [random_hom_section(m, 0, rng) for _ in range(2)]
    ds = [d_op_u(h, m) for h in hom]
    ident = DiffOp.identity(m)
    out = [
        ("identity-left", ident @ ds[0] == ds[0], None),
        ("identity-right", ds[0] @ ident == ds[0], None),
        ("order-of-composition", (ds[0] @ ds[1]).order() <= 2, None),
        _result("rho-bracket", super_commutator(rhos[0], rhos[1]), rho_op(xs[0].dot(xs[1]) - xs[1].dot(xs[0]))),
    ]
    a = rhos[0]
    b, c = d_op(m), d_star_op(m)
    lhs = super_commutator(a, super_commutator(b, c))
    rhs = super_commutator(super_commutator(a, b), c) + super_commutator(b, super_commutator(a, c))
    out.append(_result("graded-leibniz.rho-d-dstar", lhs, rhs))
    b, c = ds
    lhs = super_commutator(a, super_commutator(b, c))
    rhs = super_commutator(super_commutator(a, b), c) + super_commutator(b, super_commutator(a, c))
    out.append(_result("graded-leibniz.rho-D-D", lhs, rhs))
    return out


def symbol_product_check(m, max_degree, seed, samples=3):
    """sigma of a composition is the product of the symbols (seeded sections)."""
    rng = random.Random(seed)
    out = []
    for s in range(samples):
        a = d_op_u(random_hom_section(m, max_degree, rng), m)
        b = d_op_u(random_hom_section(m, max_degree, rng), m)
        x = rho_op(random_so_section(m, max_degree, rng), m)
        ok = (a @ b).symbol(2) == a.symbol(1) @ b.symbol(1)
        ok = ok and (x @ a).symbol(1) == x.symbol(0) @ a.symbol(1)
        ok = ok and (a @ laplacian(m)).symbol(3) == a.symbol(1) @ laplacian(m).symbol(2)
        out.append((f"sample{s}", ok, None))
    return out


def l_jacobi_check(algebra, n, seed, samples=20):
    """Graded Jacobi identity for the L bracket on seeded iota-basis triples."""
    from .lie import l_super_bracket

    rng = random.Random(seed)
    basis = [iota(b, algebra, n) for b in super_basis(algebra)]
    grades = [1 if is_zero(p.so) and not p.scalar else 0 for p in basis]
    ok = True
    for _ in range(samples):
        i, j, k = (rng.randrange(len(basis)) for _ in range(3))
        a, b, c = basis[i], basis[j], basis[k]
        lhs = l_super_bracket(a, l_super_bracket(b, c))
        rhs = l_super_bracket(l_super_bracket(a, b), c) + l_super_bracket(b, l_super_bracket(a, c)).scaled(
            mpq(-1) ** (grades[i] * grades[j]))
        ok = ok and lhs == rhs
    return [("graded-jacobi-sampled", ok, None)]
