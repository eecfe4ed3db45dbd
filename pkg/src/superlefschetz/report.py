"""Deterministic suite runner and report formatting."""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from gmpy2 import mpq

from . import __version__
from .normed import ALGEBRAS, DIMS

SUITES = ("normed", "clifford", "lie", "operators", "symbols", "kahler", "hyperkahler", "semiflat", "lefschetz")

# Check-id prefix -> reference anchor string reported with each check.
ANCHORS = {
    "normed": "§2.1",
    "cayley-dickson": "plumbing",
    "sample-unit": "plumbing",
    "clifford": "§3.1",
    "ad": "§3.1",
    "psi4": "§3.1",
    "nu": "Example 3.3",
    "hodge": "Example 3.3",
    "dims": "§2.2.1",
    "su-sup": "Remark 2.4",
    "uc11": "§3.4",
    "lemma27": "Lemma 2.7",
    "thm314": "Thm 3.14",
    "tau": "Appendix 5.1",
    "twist": "Definition 2.1",
    "flat": "§3.3",
    "prop36": "Prop 3.6",
    "prop38": "Prop 3.8",
    "prop39": "Prop 3.9",
    "thm310": "Thm 3.10",
    "thm312": "Thm 3.12",
    "symbol": "Appendix 5.2",
    "kahler": "Appendix 5.3",
    "dolbeault": "Appendix 5.3",
    "hyperkahler": "Appendix 5.3",
    "semiflat": "Thm 4.2",
    "lefschetz": "Remark 3.11",
    "oracle": "plumbing",
}


class ConfigError(ValueError):
    pass


@dataclass
class SuiteConfig:
    algebra: str = "R"
    n: int = 1
    suites: tuple = ()
    seed: int = 0
    max_degree: int = 2
    report: str = "text"
    timing: bool = False

    def validate(self):
        if self.algebra not in ALGEBRAS:
            raise ConfigError(f"unknown algebra {self.algebra!r}")
        if self.n < 1:
            raise ConfigError("n must be positive")
        if self.algebra == "O" and self.n > 1:
            raise ConfigError("octonionic models need n = 1")
        if not 0 <= self.max_degree <= 4:
            raise ConfigError("max-degree must lie in 0..4")
        if self.report not in ("text", "json"):
            raise ConfigError("report must be text or json")
        for s in self.suites:
            if s not in SUITES:
                raise ConfigError(f"unknown suite {s!r}")
        if "semiflat" in self.suites and self.algebra not in ("C", "H"):
            raise ConfigError("semiflat needs algebra C or H")
        if "kahler" in self.suites and self.algebra != "C":
            raise ConfigError("kahler needs algebra C")
        if "hyperkahler" in self.suites and self.algebra != "H":
            raise ConfigError("hyperkahler needs algebra H")
        if "lefschetz" in self.suites and self.algebra not in ("C", "H"):
            raise ConfigError("lefschetz needs a complex structure: algebra C or H")
        return self

    @property
    def m(self):
        return self.n * DIMS[self.algebra]

    def selected(self):
        if self.suites:
            return tuple(s for s in SUITES if s in self.suites)
        return applicable_suites(self.algebra)

    def echo(self):
        return {
            "algebra": self.algebra,
            "n": self.n,
            "suites": list(self.selected()),
            "seed": self.seed,
            "max_degree": self.max_degree,
        }


def applicable_suites(algebra):
    out = ["normed", "clifford", "lie", "operators", "symbols"]
    if algebra == "C":
        out += ["kahler", "semiflat", "lefschetz"]
    if algebra == "H":
        out += ["hyperkahler", "semiflat", "lefschetz"]
    return tuple(out)


@dataclass
class CheckResult:
    id: str
    status: str
    paper_ref: str
    witness: dict = None
    millis: int = None

    def as_dict(self, timing=False):
        d = {"id": self.id, "status": self.status, "paper_ref": self.paper_ref}
        if self.witness:
            d["witness"] = self.witness
        if timing and self.millis is not None:
            d["millis"] = self.millis
        return d


@dataclass
class Collector:
    config: SuiteConfig
    results: list = field(default_factory=list)

    def tag(self):
        return f"{self.config.algebra}.n{self.config.n}"

    def add(self, prefix, name, ok, witness=None, millis=None, status=None):
        if status is None:
            status = "pass" if ok else "fail"
        if status == "fail" and not witness:
            witness = {"detail": "identity does not hold"}
        cid = f"{prefix}.{self.tag()}.{name}" if name else f"{prefix}.{self.tag()}"
        self.results.append(CheckResult(cid, status, ANCHORS[prefix], witness if status == "fail" else None, millis))

    def extend(self, prefix, rows, millis=None):
        for row in rows:
            name, ok = row[0], row[1]
            witness = row[2] if len(row) > 2 else None
            self.add(prefix, name, ok, witness, millis)

    def timed(self, prefix, fn, *args):
        t = time.perf_counter()
        rows = fn(*args)
        ms = int((time.perf_counter() - t) * 1000)
        self.extend(prefix, rows, ms)


def _str(v):
    return str(v) if not isinstance(v, (list, tuple)) else [str(x) for x in v]


# suites ---------------------------------------------------------------------


def suite_normed(c):
    from .normed import (
        NormedElement,
        associator,
        cayley_dickson_mul,
        octonion_nonassociative_witness,
        random_element,
        sample_unit,
    )

    K = c.config.algebra
    rng = random.Random(c.config.seed)
    pairs = [(random_element(K, rng), random_element(K, rng)) for _ in range(100)]
    bad = next(((a, b) for a, b in pairs if (a * b).norm_sq() != a.norm_sq() * b.norm_sq()), None)
    c.add("normed", "norm-multiplicative", bad is None,
          bad and {"a": _str(bad[0].coords), "b": _str(bad[1].coords)})
    bad = next(((a, b) for a, b in pairs if (a * b).conj() != b.conj() * a.conj()), None)
    c.add("normed", "conj-anti-automorphism", bad is None, bad and {"a": _str(bad[0].coords), "b": _str(bad[1].coords)})
    c.add("normed", "conj-product-is-norm", all(a * a.conj() == NormedElement.one(K) * a.norm_sq() for a, _ in pairs))
    triples = [(a, b, pairs[(i + 1) % 100][0]) for i, (a, b) in enumerate(pairs)]
    if K == "O":
        w = octonion_nonassociative_witness()
        c.add("normed", "nonassociative-witness", w is not None, None)
        alt = all(not associator(a, a, b) and not associator(a, b, b) for a, b in pairs)
        c.add("normed", "alternative", alt)
    else:
        bad = next((t for t in triples if associator(*t)), None)
        c.add("normed", "associative", bad is None, bad and {"triple": [_str(x.coords) for x in bad]})
    units = NormedElement.basis(K)
    table_ok = all(
        list((a * b).coords) == cayley_dickson_mul(list(a.coords), list(b.coords)) for a in units for b in units
    )
    c.add("cayley-dickson", "table-matches-doubling", table_ok)
    if K == "H":
        e = units
        c.add("normed", "quaternion-units", e[1] * e[2] == e[3] and (e[1] * e[2]) * e[3] == -e[0])
    seeds = range(c.config.seed, c.config.seed + 10)
    c.add("sample-unit", "unit-norm", all(sample_unit(K, s).norm_sq() == 1 for s in seeds))
    c.add("sample-unit", "reproducible", all(sample_unit(K, s) == sample_unit(K, s) for s in seeds))


def suite_clifford(c):
    import numpy as np

    from .clifford import (
        SpinorOp,
        ad_inverse,
        ad_of,
        anticommutator,
        clifford_basis_op,
        clifford_op,
        commutator,
        degree_two_monomials,
        e_vec,
        hodge_star_op,
        is_q_antisymmetric,
        nu_op,
        nu_sign,
        psi4,
        quad_q,
        spin_act,
    )
    from .linalg import bracket, mat_eq, zeros

    m = c.config.m
    rng = random.Random(c.config.seed)
    basis = [np.array([mpq(int(i == k)) for i in range(2 * m)], dtype=object) for k in range(2 * m)]
    ops = [clifford_basis_op(k, m) for k in range(2 * m)]
    ok = True
    witness = None
    for i in range(2 * m):
        for j in range(i, 2 * m):
            lhs = anticommutator(ops[i], ops[j])
            rhs = SpinorOp.identity(m, -2 * quad_q(basis[i], basis[j]))
            if lhs != rhs:
                ok, witness = False, {"pair": f"{i},{j}"}
    c.add("clifford", "relation-all-basis-pairs", ok, witness)
    es = [clifford_op(e_vec(j, m)) for j in range(2 * m)]
    c.add("clifford", "e-basis-squares", all(
        es[j] @ es[j] == SpinorOp.identity(m, mpq(-1 if j < m else 1)) for j in range(2 * m)))

    monos = degree_two_monomials(m)
    samples = []
    for _ in range(4):
        x = zeros(2 * m)
        for _ in range(3):
            (i, j), mono = monos[rng.randrange(len(monos))]
            x = x + mpq(rng.randint(-3, 3), rng.randint(1, 3)) * ad_of(mono)
        samples.append(x)
    c.add("ad", "samples-q-antisymmetric", all(is_q_antisymmetric(x) for x in samples))
    c.add("ad", "round-trip-so", all(mat_eq(ad_of(ad_inverse(x)), x) for x in samples))
    c.add("ad", "round-trip-spin", all(ad_inverse(ad_of(mono)) == mono for _, mono in monos[:: max(1, len(monos) // 8)]))
    c.add("ad", "bracket-compatible", all(
        mat_eq(ad_of(commutator(ad_inverse(x), ad_inverse(y))), bracket(x, y))
        for x, y in zip(samples, samples[1:])))
    if m >= 2:
        x = ad_of(es[0] @ es[1])
        # ad(E_e0 E_e1) sends e0 to 2 e1 and e1 to -2 e0, and kills the rest
        rest = all(mat_eq(x.dot(e_vec(j, m)), 0 * e_vec(j, m)) for j in range(2, 2 * m))
        c.add("ad", "e0e1-rotation", rest and mat_eq(x.dot(e_vec(0, m)), 2 * e_vec(1, m))
              and mat_eq(x.dot(e_vec(1, m)), -2 * e_vec(0, m)))
        A = zeros(m)
        A[0, 1], A[1, 0] = mpq(1), mpq(-1)
        spin = ad_inverse(psi4(A))
        target = es[m] @ es[m + 1] - es[0] @ es[1]
        c0 = min(target.cols)
        r0 = min(target.cols[c0])
        ratio = spin.cols.get(c0, {}).get(r0, mpq(0)) / target.cols[c0][r0]
        c.add("psi4", "rotation-spin-lift", bool(ratio) and spin == target.scaled(ratio),
              {"scalar": str(ratio)})
    As = []
    for _ in range(3):
        A = zeros(m)
        for i in range(m):
            for j in range(i + 1, m):
                v = mpq(rng.randint(-2, 2))
                A[i, j], A[j, i] = v, -v
        As.append(A)
    phis = [{I: mpq(rng.randint(-3, 3)) for I in range(1 << m)} for _ in range(3)]
    ws = [np.array([mpq(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(2 * m)], dtype=object) for _ in phis]
    c.add("clifford", "spin-action-squares", all(
        spin_act(w, spin_act(w, phi)) == {I: -quad_q(w, w) * v for I, v in phi.items() if quad_q(w, w) * v}
        for w, phi in zip(ws, phis)))
    c.add("psi4", "q-antisymmetric", all(is_q_antisymmetric(psi4(A)) for A in As))
    deg1 = True
    for A in As:
        spin = ad_inverse(psi4(A))
        for j in range(m):
            img = spin.apply({1 << j: mpq(1)})
            # dual action on covectors: f^j -> sum_i A[i, j] f^i
            want = {1 << i: A[i, j] for i in range(m) if A[i, j]}
            deg1 = deg1 and img == want
    c.add("psi4", "restricts-to-dual-action", deg1)
    if m <= 8:
        nu = nu_op(m)
        star = hodge_star_op(m)
        ok = all(
            nu.restricted(r) == {k: nu_sign(m, r) * v for k, v in star.restricted(r).items()} for r in range(m + 1)
        )
        c.add("nu", "sign-times-hodge", ok)
        c.add("nu", "commutes-with-so(m)", all(commutator(nu, ad_inverse(psi4(A))).is_zero() for A in As))
        starstar = star @ star
        c.add("hodge", "star-star-sign", all(
            starstar.cols[I] == {I: mpq((-1) ** (bin(I).count("1") * (m - bin(I).count("1"))))}
            for I in range(1 << m)))


def suite_lie(c):
    from .lie import (
        iota_hom_table,
        iota_injective,
        is_qcheck_antisymmetric,
        named_generators,
        octonion_graded_closure,
        octonion_span_check,
        k11_basis,
        iota_hom,
        qhat_normalization,
        sl_basis,
        stated_tau_images,
        su_basis,
        super_basis,
        super_bracket,
        tau_homomorphism_table,
        tau_star_named,
        twist_equivariance,
        uc11_basis,
        QUATERNION_GENERATOR_NAMES,
        lie_closure,
    )
    from .linalg import mat_eq, bracket
    from .normed import NormedElement, sample_unit

    K, n = c.config.algebra, c.config.n
    expected = {"R": (3, 1), "C": (6, 3), "H": (15, 10), "O": (45, 36)}[K]
    c.timed("dims", lambda: [("sl2", len(sl_basis(K)) == expected[0]), ("su11", len(su_basis(K)) == expected[1])])
    c.add("dims", "su11-qcheck-antisymmetric", all(is_qcheck_antisymmetric(x) for x in su_basis(K)))
    rng = random.Random(c.config.seed)
    basis = super_basis(K)
    ok = True
    for _ in range(20):
        a, b, d = (basis[rng.randrange(len(basis))] for _ in range(3))
        ok = ok and _graded_jacobi(a, b, d, super_bracket)
    c.add("su-sup", "graded-jacobi-sampled", ok)
    c.add("su-sup", "graded-antisymmetry", all(
        _graded_antisym(a, b, super_bracket) for a in basis for b in basis))
    if K == "C":
        uc = uc11_basis()
        gens = named_generators("C")
        c.add("uc11", "dimension-4", len(uc) == 4)
        c.add("uc11", "extra-element-central", all(mat_eq(bracket(uc[-1], x), 0 * x) for x in uc))
        c.add("uc11", "extra-element-qcheck-antisymmetric", is_qcheck_antisymmetric(uc[-1]))
        from .lie import in_span
        c.add("uc11", "contains-L-Lambda-H", all(in_span(uc, gens[k]) for k in ("L", "Lambda", "H")))
        c.add("uc11", "matrix-form", _uc11_matrix_form(uc))
    if K != "O":
        table = iota_hom_table(K, n)
        bad = [p for p, okp in table if not okp]
        c.add("lemma27", "iota-bracket-homomorphism", not bad, bad and {"pairs": [str(p) for p in bad[:5]]})
        c.add("lemma27", "iota-injective", iota_injective(K, n))
    else:
        dim = octonion_span_check()
        c.add("lemma27", "octonion-span-128", dim == 128, {"dimension": str(dim)})
        from .lie import span_dim
        c.add("lemma27", "octonion-odd-span-16", span_dim([iota_hom(u, "O", 1) for u in k11_basis("O")]) == 16)
        c.add("thm314", "graded-closure", octonion_graded_closure())
        c.add("thm314", "even-closure", len(lie_closure(su_basis("O"))) == 36)
    const = qhat_normalization(K, n)
    if K != "O":
        from .theorems import l_jacobi_check
        from .clifford import is_q_antisymmetric
        from .lie import iota_so
        c.extend("lemma27", l_jacobi_check(K, n, c.config.seed))
        c.add("lemma27", "iota-so-q-antisymmetric", all(is_q_antisymmetric(iota_so(x, K, n)) for x in su_basis(K)))
    c.add("lemma27", "qhat-normalization", const == c.config.m, {"constant": str(const)})
    if K == "H":
        table = tau_homomorphism_table()
        bad = [p for p, okp in table if not okp]
        c.add("tau", "homomorphism-45-pairs", len(table) == 45 and not bad, bad and {"pairs": [str(p) for p in bad]})
        stated = stated_tau_images()
        for name in QUATERNION_GENERATOR_NAMES:
            got = tau_star_named(name)
            ok = mat_eq(got, stated[name])
            w = None if ok else {"computed": _nonzero_entries(got), "stated": _nonzero_entries(stated[name])}
            c.add("tau", f"stated-image.{name}", ok, w)
        if n == 1:
            one = NormedElement.one("H")
            trials = [(one, one), (one, NormedElement.unit("H", 1))]
            trials += [(sample_unit("H", c.config.seed + 2 * s), sample_unit("H", c.config.seed + 2 * s + 1))
                       for s in range(10)]
            for idx, (p, q) in enumerate(trials):
                res = twist_equivariance(p, q)
                bad = [k for k, v in res.items() if not v]
                c.add("twist", f"sample{idx:02d}", not bad,
                      bad and {"p": _str(p.coords), "q": _str(q.coords), "failed": bad})


def _uc11_matrix_form(uc):
    """u_C(1,1) = {(b1, b2; b3, -conj b1) : b2, b3 imaginary}."""
    from .lie import matrix_of_operator

    for x in uc:
        A = matrix_of_operator(x, "C")
        if A is None:
            return False
        if A[0][1].re() or A[1][0].re() or A[1][1] != -A[0][0].conj():
            return False
    return True


def _nonzero_entries(M):
    return [f"E{r + 1}{c + 1}:{M[r, c]}" for r in range(M.shape[0]) for c in range(M.shape[1]) if M[r, c]]


def _parity(p):
    from .lie import parity_of
    return parity_of(p)


def _graded_antisym(a, b, br):
    # [a, b] = -(-1)^{|a||b|} [b, a]
    if _parity(a) and _parity(b):
        return br(a, b) == br(b, a)
    return br(a, b) == br(b, a).scaled(-1)


def _graded_jacobi(a, b, d, br):
    pa, pb, pd = _parity(a), _parity(b), _parity(d)
    lhs = br(a, br(b, d))
    rhs = br(br(a, b), d) + br(b, br(a, d)).scaled(mpq(-1) ** (pa * pb))
    return lhs == rhs


def suite_operators(c):
    from .clifford import SpinorOp, nu_op
    from .lie import epsilon, iota_hom
    from .operators import (
        DiffOp,
        PolyForm,
        agree_on_monomials,
        coordinate_laplacian,
        d_op,
        d_op_u,
        d_star_op,
        laplacian,
        super_commutator,
    )
    from .theorems import (
        homomorphism_table_check,
        odd_anticommutator_check,
        odd_symbol_check,
        operator_algebra_checks,
        rho_d_commutator_check,
        rho_d_commutator_examples,
    )

    K, n, m = c.config.algebra, c.config.n, c.config.m
    d, ds, lap = d_op(m), d_star_op(m), laplacian(m)
    c.add("flat", "d-squared-zero", (d @ d).is_zero())
    c.add("flat", "dstar-squared-zero", (ds @ ds).is_zero())
    c.add("flat", "laplacian-is-minus-sum-of-squares", lap == coordinate_laplacian(m))
    c.add("flat", "laplacian-commutes-with-d", super_commutator(lap, d).is_zero() and super_commutator(lap, ds).is_zero())
    c.add("flat", "d-of-y0", d.apply(PolyForm.monomial(m, 0, _unit(m, 0))) == PolyForm.monomial(m, 1))
    c.add("flat", "dstar-of-y0-dy0", ds.apply(PolyForm.monomial(m, 1, _unit(m, 0))) == PolyForm.monomial(m, 0, None, mpq(-1)))
    c.add("flat", "laplacian-of-y0-squared", lap.apply(PolyForm.monomial(m, 0, _unit(m, 0, 2))) == PolyForm.monomial(m, 0, None, mpq(-2)))
    D2 = d_op_u(iota_hom(epsilon(2, K), K, n))
    D1 = d_op_u(iota_hom(epsilon(1, K), K, n))
    c.add("flat", "D-eps2-is-d", D2 == d)
    c.add("flat", "D-eps1-is-dstar", D1 == ds)
    nu = nu_op(m)
    sq = nu @ nu
    scal = sq.cols[0][0]
    nu_inv = nu.scaled(1 / scal)
    conj = DiffOp.multiplication(nu) @ D2 @ DiffOp.multiplication(nu_inv)
    c.add("flat", "D-eps1-is-nu-conjugate", sq == SpinorOp.identity(m, scal) and D1 == conj.scaled((-1) ** (m - 1)))
    c.timed("flat", operator_algebra_checks, m, c.config.seed)
    if m <= 4:
        c.add("oracle", "composition-on-monomials", agree_on_monomials(d @ ds + ds @ d, lap, 2))
    if K != "O":
        c.timed("prop39", odd_anticommutator_check, K, n)
        c.timed("thm310", homomorphism_table_check, K, n)
    c.timed("prop38", odd_symbol_check, K, n)
    if m <= 4:
        c.timed("prop36", rho_d_commutator_check, m, c.config.max_degree, c.config.seed)
        c.timed("prop36", rho_d_commutator_examples, K, n, c.config.seed)
    else:
        c.add("prop36", "samples", True, status="skipped")


def _unit(m, j, p=1):
    e = [0] * m
    e[j] = p
    return tuple(e)


def suite_symbols(c):
    from .clifford import SpinorOp, clifford_op
    from .lie import iota_hom, k11_basis
    from .operators import d_op, d_op_u, laplacian
    from .theorems import octonion_symbol_checks, symbol_homomorphism_check
    import numpy as np

    K, n, m = c.config.algebra, c.config.n, c.config.m
    rng = random.Random(c.config.seed)
    point = [mpq(rng.randint(-3, 3)) for _ in range(m)]
    xi = [mpq(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(m)]
    w = np.array([mpq(0)] * m + xi, dtype=object)
    c.add("symbol", "sigma1-of-d", d_op(m).symbol(1).at(point, xi) == clifford_op(w))
    norm = sum((x * x for x in xi), mpq(0))
    c.add("symbol", "sigma2-of-laplacian", laplacian(m).symbol(2).at(point, xi) == SpinorOp.identity(m, -norm))
    ok = True
    for u in k11_basis(K):
        h = iota_hom(u, K, n)
        ok = ok and d_op_u(h).symbol(1).at(point, xi) == clifford_op(h.dot(np.array(xi, dtype=object)))
    c.add("symbol", "sigma1-of-D-u", ok)
    if m <= 4:
        from .theorems import symbol_product_check
        c.timed("symbol", symbol_product_check, m, c.config.max_degree, c.config.seed)
    if K == "O":
        c.timed("thm314", octonion_symbol_checks, c.config.seed)
    else:
        degree = min(c.config.max_degree, 1 if m > 4 else 2)
        c.timed("thm312", symbol_homomorphism_check, K, n, degree, c.config.seed)


def suite_kahler(c):
    from .holonomy import kahler_dolbeault_check, lefschetz_generators

    _, rows = lefschetz_generators(c.config.n)
    c.extend("kahler", rows)
    c.timed("dolbeault", kahler_dolbeault_check, c.config.n)


def suite_hyperkahler(c):
    from .holonomy import hyperkahler_generators
    from .lie import QUATERNION_GENERATOR_NAMES, named_generators
    from .theorems import homomorphism_table_check

    c.timed("hyperkahler", hyperkahler_generators, c.config.n)
    gens = named_generators("H")
    names = QUATERNION_GENERATOR_NAMES
    rows = homomorphism_table_check("H", c.config.n, [gens[k] for k in names], names)
    c.extend("hyperkahler", [(f"named-basis.{r[0]}",) + tuple(r[1:]) for r in rows])


def suite_semiflat(c):
    from .holonomy import semi_flat_action

    c.timed("semiflat", semi_flat_action, c.config.algebra, c.config.n)


def suite_lefschetz(c):
    from .holonomy import (
        ComplexStructure,
        form_wedge_op,
        hard_lefschetz_torus,
        lefschetz_harmonic_invariance,
        right_multiplication,
    )

    K, n = c.config.algebra, c.config.n
    half = c.config.m // 2
    omega = form_wedge_op(ComplexStructure(right_multiplication(1, K, n)).omega, c.config.m)
    for k in range(half + 1):
        c.add("lefschetz", f"torus-k{k}", hard_lefschetz_torus(half, k, omega))
    c.add("lefschetz", "harmonic-invariance", lefschetz_harmonic_invariance(half, omega))


SUITE_FUNCTIONS = {
    "normed": suite_normed,
    "clifford": suite_clifford,
    "lie": suite_lie,
    "operators": suite_operators,
    "symbols": suite_symbols,
    "kahler": suite_kahler,
    "hyperkahler": suite_hyperkahler,
    "semiflat": suite_semiflat,
    "lefschetz": suite_lefschetz,
}


def run(config):
    """Run the selected suites; results sorted by id."""
    config.validate()
    c = Collector(config)
    for name in config.selected():
        SUITE_FUNCTIONS[name](c)
    ids = [r.id for r in c.results]
    if len(ids) != len(set(ids)):
        dup = sorted({i for i in ids if ids.count(i) > 1})
        raise RuntimeError(f"duplicate check ids: {dup[:5]}")
    return sorted(c.results, key=lambda r: r.id)


def counts(results):
    out = {"pass": 0, "fail": 0, "skipped": 0}
    for r in results:
        out[r.status] += 1
    out["total"] = len(results)
    return out


def exit_code(results):
    return 1 if any(r.status == "fail" for r in results) else 0


def format_text(results):
    return "".join(f"{r.id} {r.status} ({r.paper_ref})\n" for r in results)


def format_json(config, results):
    doc = {
        "header": {"config": config.echo(), "version": __version__, "counts": counts(results)},
        "checks": [r.as_dict(config.timing) for r in results],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def list_checks(config):
    results = run(config)
    return "".join(f"{r.id} {r.paper_ref}\n" for r in results)
