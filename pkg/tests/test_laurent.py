import pytest
from hypothesis import given, strategies as st

from tkt.laurent import DELTA, L, M, ONE, GaussLaurent, LaurentPoly2

terms = st.dictionaries(
    st.tuples(st.integers(-4, 4), st.integers(-3, 3)), st.integers(-5, 5), max_size=5
)


@given(terms, terms, terms)
def test_ring_axioms(a, b, c):
    A, B, C = LaurentPoly2(a), LaurentPoly2(b), LaurentPoly2(c)
    assert A * (B + C) == A * B + A * C
    assert (A * B) * C == A * (B * C)
    assert A + B == B + A
    assert A - A == LaurentPoly2()


@given(terms)
def test_serialization_round_trip(a):
    A = LaurentPoly2(a)
    assert LaurentPoly2.from_list(A.to_list()) == A
    rows = A.to_list()
    assert rows == sorted(rows)


@given(terms)
def test_mirror_is_involution(a):
    A = LaurentPoly2(a)
    assert A.mirror().mirror() == A


def test_monomial_inverse():
    assert L ** -2 * L ** 2 == ONE
    assert (-(L * M)) ** -1 * (-(L * M)) == ONE
    with pytest.raises(ValueError):
        (L + M) ** -1


def test_degrees_and_pretty():
    P = LaurentPoly2.from_list([[1, 3, -1], [3, 1, 2], [1, 1, 2], [-1, 1, 1]])
    assert P.l_degrees() == (3, -1)
    assert P.m_degrees() == (3, 1)
    assert P.pretty() == "-l m^3 + (2l^3 + 2l + l^-1) m"
    assert ONE.pretty() == "1"
    assert DELTA.pretty() == "(-l - l^-1) m^-1"
    with pytest.raises(ValueError):
        LaurentPoly2().l_degrees()


def test_gauss_division_exact():
    f = GaussLaurent({0: (1, 0), 3: (0, 2)})
    g = f * GaussLaurent({0: (1, 0), 4: (-1, 0)})
    assert g.divide_one_minus_a4().terms == f.terms
    with pytest.raises(ArithmeticError):
        f.divide_one_minus_a4()
    assert GaussLaurent({1: (1, 0)}).at_i() == (0, 1)
