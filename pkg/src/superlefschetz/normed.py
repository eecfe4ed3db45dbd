"""Exact arithmetic in the normed division algebras R, C, H and O.

Elements carry rational coordinates over the basis (1, e1, ..., e_{d-1}).
Multiplication reads a frozen structure table; the Cayley-Dickson doubling
that produced the table is kept in :func:`cayley_dickson_mul` and serves as
the test oracle.
"""
from __future__ import annotations

import random

from gmpy2 import mpq

Rational = type(mpq())

DIMS = {"R": 1, "C": 2, "H": 4, "O": 8}
ALGEBRAS = ("R", "C", "H", "O")

# Entry [i][j] = s*(k+1) means e_i e_j = s e_k (e_0 = 1).
# Emitted once by cayley_dickson_mul with (a,b)(c,d) = (ac - d~b, da + bc~).
_OCTONION_TABLE = (
    (1, 2, 3, 4, 5, 6, 7, 8),
    (2, -1, 4, -3, 6, -5, -8, 7),
    (3, -4, -1, 2, 7, 8, -5, -6),
    (4, 3, -2, -1, 8, -7, 6, -5),
    (5, -6, -7, -8, -1, 2, 3, 4),
    (6, 5, -8, 7, -2, -1, -4, 3),
    (7, 8, 5, -6, -3, 4, -1, -2),
    (8, -7, 6, 5, -4, -3, 2, -1),
)

# Each smaller algebra is the top-left corner of the octonion table.
MUL_TABLE = {
    name: tuple(row[:d] for row in _OCTONION_TABLE[:d]) for name, d in DIMS.items()
}


def rational(x, y=1):
    """Exact rational x/y; accepts ints, mpq and 'p/q' strings."""
    if isinstance(x, str):
        return mpq(x)
    return mpq(x, y) if y != 1 else mpq(x)


def cayley_dickson_mul(a, b):
    """Product of coordinate lists of length 2^k by recursive doubling."""
    if len(a) != len(b):
        raise ValueError("length mismatch")
    if len(a) == 1:
        return [a[0] * b[0]]
    h = len(a) // 2
    p, q, r, s = a[:h], a[h:], b[:h], b[h:]
    left = [x - y for x, y in zip(cayley_dickson_mul(p, r), cayley_dickson_mul(_cd_conj(s), q))]
    right = [x + y for x, y in zip(cayley_dickson_mul(s, p), cayley_dickson_mul(q, _cd_conj(r)))]
    return left + right


def _cd_conj(a):
    if len(a) == 1:
        return list(a)
    h = len(a) // 2
    return _cd_conj(a[:h]) + [-x for x in a[h:]]


class NormedElement:
    """Immutable element of one of R, C, H, O."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        if algebra not in DIMS:
            raise ValueError(f"unknown algebra {algebra!r}")
        coords = tuple(mpq(c) for c in coords)
        if len(coords) != DIMS[algebra]:
            raise ValueError(f"{algebra} needs {DIMS[algebra]} coordinates")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("NormedElement is immutable")

    @classmethod
    def zero(cls, algebra):
        return cls(algebra, [0] * DIMS[algebra])

    @classmethod
    def one(cls, algebra):
        return cls.unit(algebra, 0)

    @classmethod
    def unit(cls, algebra, k):
        """Basis element e_k (e_0 = 1)."""
        c = [0] * DIMS[algebra]
        c[k] = 1
        return cls(algebra, c)

    @classmethod
    def basis(cls, algebra):
        return [cls.unit(algebra, k) for k in range(DIMS[algebra])]

    @property
    def dim(self):
        return len(self.coords)

    def _check(self, other):
        if not isinstance(other, NormedElement) or other.algebra != self.algebra:
            raise TypeError("operands must share the same algebra tag")

    def __add__(self, other):
        self._check(other)
        return NormedElement(self.algebra, [x + y for x, y in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return NormedElement(self.algebra, [x - y for x, y in zip(self.coords, other.coords)])

    def __neg__(self):
        return NormedElement(self.algebra, [-x for x in self.coords])

    def __mul__(self, other):
        if isinstance(other, NormedElement):
            return self.mul(other)
        return NormedElement(self.algebra, [x * other for x in self.coords])

    def __rmul__(self, scalar):
        return NormedElement(self.algebra, [scalar * x for x in self.coords])

    def mul(self, other):
        self._check(other)
        table = MUL_TABLE[self.algebra]
        out = [mpq(0)] * self.dim
        for i, a in enumerate(self.coords):
            if not a:
                continue
            row = table[i]
            for j, b in enumerate(other.coords):
                if not b:
                    continue
                entry = row[j]
                if entry > 0:
                    out[entry - 1] += a * b
                else:
                    out[-entry - 1] -= a * b
        return NormedElement(self.algebra, out)

    def conj(self):
        return NormedElement(self.algebra, (self.coords[0],) + tuple(-x for x in self.coords[1:]))

    def re(self):
        return self.coords[0]

    def im(self):
        return NormedElement(self.algebra, (mpq(0),) + self.coords[1:])

    def norm_sq(self):
        return sum((x * x for x in self.coords), mpq(0))

    def inverse(self):
        n = self.norm_sq()
        if not n:
            raise ZeroDivisionError("zero has no inverse")
        return self.conj() * (1 / n)

    def __eq__(self, other):
        return (
            isinstance(other, NormedElement)
            and other.algebra == self.algebra
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash((self.algebra, self.coords))

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"NormedElement({self.algebra!r}, [{', '.join(str(c) for c in self.coords)}])"


def _small_rational(rng):
    return mpq(rng.randint(-6, 6), rng.randint(1, 5))


def random_element(algebra, rng):
    """Element with small random rational coordinates drawn from ``rng``."""
    return NormedElement(algebra, [_small_rational(rng) for _ in range(DIMS[algebra])])


def sample_unit(algebra, seed):
    """Rational point of the unit sphere, by inverse stereographic projection."""
    rng = random.Random(seed)
    d = DIMS[algebra]
    if d == 1:
        return NormedElement(algebra, [rng.choice((1, -1))])
    v = [_small_rational(rng) for _ in range(d - 1)]
    s = sum((x * x for x in v), mpq(0))
    return NormedElement(algebra, [(1 - s) / (1 + s)] + [2 * x / (1 + s) for x in v])


def associator(a, b, c):
    return (a * b) * c - a * (b * c)


def octonion_nonassociative_witness():
    """First basis triple (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k)."""
    units = NormedElement.basis("O")
    for i in range(1, 8):
        for j in range(1, 8):
            for k in range(1, 8):
                if associator(units[i], units[j], units[k]):
                    return i, j, k
    return None


class GaussianRational:
    """a + b i with rational a, b; scalars for the Dolbeault checks."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = mpq(re)
        self.im = mpq(im)

    @staticmethod
    def _lift(x):
        return x if isinstance(x, GaussianRational) else GaussianRational(x, 0)

    def __add__(self, other):
        o = self._lift(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._lift(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        n = o.re * o.re + o.im * o.im
        return self * GaussianRational(o.re / n, -o.im / n)

    def conj(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        try:
            return not self.im and self.re == other
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.re) if not self.im else hash((self.re, self.im))

    def __repr__(self):
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


I = GaussianRational(0, 1)
