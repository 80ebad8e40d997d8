from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from boson_ordering.polyp import PolyP, parse_poly

polys = st.lists(st.integers(-20, 20), max_size=5).map(PolyP)


def test_trimming_and_degree():
    assert PolyP((1, 2, 0, 0)).coeffs == (1, 2)
    assert PolyP().degree == -1
    assert PolyP((Fraction(4, 2),)).coeffs == (2,)


def test_compares_with_scalars():
    assert PolyP.const(3) == 3
    assert PolyP() == 0
    assert hash(PolyP.const(3)) == hash(3)


def test_format():
    assert str(PolyP((1, 3, 3))) == "3p^2+3p+1"
    assert str(PolyP((0, 0, 1))) == "p^2"
    assert str(PolyP((-1, 0, 2))) == "2p^2-1"
    assert str(PolyP()) == "0"
    assert str(PolyP((Fraction(1, 2), 1))) == "p+1/2"


@given(polys)
def test_parse_round_trip(p):
    assert parse_poly(str(p)) == p


@given(polys, polys, st.integers(-5, 5))
def test_evaluation_is_multiplicative(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)
