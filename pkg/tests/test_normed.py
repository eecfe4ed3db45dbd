import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from superlefschetz.normed import (
    ALGEBRAS,
    DIMS,
    MUL_TABLE,
    GaussianRational,
    NormedElement,
    associator,
    cayley_dickson_mul,
    octonion_nonassociative_witness,
    random_element,
    sample_unit,
)

from conftest import rationals


def elements(algebra):
    return st.lists(rationals(), min_size=DIMS[algebra], max_size=DIMS[algebra]).map(
        lambda c: NormedElement(algebra, c))


def test_table_is_cayley_dickson():
    # the frozen table against the recursive doubling, for every pair of units
    for i in range(8):
        for j in range(8):
            a = [0] * 8
            b = [0] * 8
            a[i] = b[j] = 1
            assert list(NormedElement("O", a).mul(NormedElement("O", b)).coords) == cayley_dickson_mul(a, b)


def test_smaller_tables_are_corners():
    for K in ("R", "C", "H"):
        d = DIMS[K]
        for i in range(d):
            for j in range(d):
                a = [0] * d
                b = [0] * d
                a[i] = b[j] = 1
                assert list(NormedElement(K, a).mul(NormedElement(K, b)).coords) == cayley_dickson_mul(a, b)
        assert len(MUL_TABLE[K]) == d


@pytest.mark.parametrize("K", ALGEBRAS)
def test_unit_law(K):
    one = NormedElement.one(K)
    for e in NormedElement.basis(K):
        assert one * e == e and e * one == e


def test_quaternion_units():
    e = NormedElement.basis("H")
    assert e[1] * e[2] == e[3]
    for k in (1, 2, 3):
        assert e[k] * e[k] == -e[0]
    assert (e[1] * e[2]) * e[3] == -e[0]


def test_mismatched_tags():
    with pytest.raises(TypeError):
        NormedElement.one("C").mul(NormedElement.one("H"))


def test_conj_re_im():
    one = NormedElement.one("O")
    assert one.conj() == one
    assert not one.im()
    z = NormedElement("C", [mpq(3, 5), mpq(4, 5)])
    assert z.norm_sq() == 1
    assert z.re() == mpq(3, 5)
    assert z.im() == NormedElement("C", [0, mpq(4, 5)])


@pytest.mark.parametrize("K", ALGEBRAS)
@given(data=st.data())
def test_norm_multiplicative(K, data):
    a, b = data.draw(elements(K)), data.draw(elements(K))
    assert (a * b).norm_sq() == a.norm_sq() * b.norm_sq()
    assert (a * b).conj() == b.conj() * a.conj()
    assert a * a.conj() == NormedElement.one(K) * a.norm_sq()


def test_octonion_norm_seeded():
    import random

    rng = random.Random(0)
    for _ in range(100):
        a, b = random_element("O", rng), random_element("O", rng)
        assert (a * b).norm_sq() == a.norm_sq() * b.norm_sq()


@pytest.mark.parametrize("K", ("R", "C", "H"))
@given(data=st.data())
def test_associative(K, data):
    a, b, c = (data.draw(elements(K)) for _ in range(3))
    assert not associator(a, b, c)


@given(a=elements("O"), b=elements("O"))
def test_octonions_alternative(a, b):
    assert a * (a * b) == (a * a) * b
    assert (a * b) * b == a * (b * b)


def test_octonion_witness():
    i, j, k = octonion_nonassociative_witness()
    e = NormedElement.basis("O")
    assert (e[i] * e[j]) * e[k] != e[i] * (e[j] * e[k])


def test_inverse():
    a = NormedElement("H", [1, 2, 3, 4])
    assert a * a.inverse() == NormedElement.one("H")
    with pytest.raises(ZeroDivisionError):
        NormedElement.zero("H").inverse()


@pytest.mark.parametrize("K", ALGEBRAS)
@given(seed=st.integers(0, 2 ** 63 - 1))
def test_sample_unit(K, seed):
    u = sample_unit(K, seed)
    assert u.norm_sq() == 1
    assert u == sample_unit(K, seed)


def test_sample_unit_real_is_sign():
    assert {sample_unit("R", s).coords[0] for s in range(20)} == {1, -1}


def test_gaussian_rationals():
    i = GaussianRational(0, 1)
    assert i * i == -1
    assert -1 == i * i
    assert (i + 1).conj() == 1 - i
    assert GaussianRational(3) == mpq(3)
    assert {mpq(2): 1} == {GaussianRational(2): 1}
    assert (GaussianRational(1, 1) / GaussianRational(1, 1)) == 1
