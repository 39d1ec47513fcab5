from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pshlab.gaussian import GaussianRational
from pshlab.polynomials import BivariatePolynomial as P
from pshlab.polynomials import ZeroPolynomialError

X, Y = P.x(), P.y()


def test_gaussian_arithmetic():
    a = GaussianRational.of(("1/2", "1/3"))
    b = GaussianRational.of(2)
    assert (a * b).re == 1 and (a * b).im == Fraction(2, 3)
    assert (a * a.inverse()).re == 1 and (a * a.inverse()).im == 0
    assert a.conjugate().im == Fraction(-1, 3)
    assert complex(b) == 2 + 0j
    assert str(GaussianRational.of("2/3")) == "2/3"


def test_multiplication_and_expansion():
    xyz = X * Y * (X + Y)
    assert xyz == P({(2, 1): 1, (1, 2): 1})
    assert xyz ** 2 == P({(4, 2): 1, (3, 3): 2, (2, 4): 1})
    assert (xyz ** 2).degree() == 6
    assert (xyz ** 2).multiplicity() == 6


def test_multiplicity_and_degree():
    f = P({(1, 0): 1, (3, 2): "2/3"})
    assert f.multiplicity() == 1
    assert f.degree() == 5
    assert P.zero().degree() == -1
    with pytest.raises(ZeroPolynomialError):
        P.zero().multiplicity()


def test_divide_by_y():
    f = X * Y + Y ** 2
    q = f.divide_by_linear(GaussianRational.of(0), GaussianRational.of(1))
    assert q == X + Y
    assert (X * X).divide_by_linear(GaussianRational.of(0), GaussianRational.of(1)) is None


def test_divide_by_general_line():
    one = GaussianRational.of(1)
    f = (X + Y) ** 3
    q = f.divide_by_linear(one, one)
    assert q == (X + Y) ** 2
    assert (X * Y).divide_by_linear(one, one) is None


def test_term_list_round_trip():
    f = P({(2, 1): ("1/2", "1/3"), (0, 0): 4})
    assert P.from_term_list(f.to_term_list()) == f


def test_str_forms():
    assert str(P.one()) == "1"
    assert str(X * Y) == "x*y"
    assert str(P({(2, 0): "2/3"})) == "(2/3)*x^2"


small_gauss = st.builds(
    GaussianRational,
    st.fractions(min_value=-3, max_value=3, max_denominator=6),
    st.fractions(min_value=-3, max_value=3, max_denominator=6),
)
small_poly = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), small_gauss,
    min_size=0, max_size=6,
).map(P)


@settings(max_examples=150, derandomize=True)
@given(small_poly, small_gauss)
def test_division_inverts_multiplication(f, cy):
    # ell = x + cy*y is always normalized
    one = GaussianRational.of(1)
    ell = P({(1, 0): one, (0, 1): cy})
    q = (f * ell).divide_by_linear(one, cy)
    assert q == f


@settings(max_examples=150, derandomize=True)
@given(small_poly, small_poly)
def test_evaluate_is_ring_morphism(f, g):
    z = (0.3 + 0.7j, -0.2 + 0.4j)
    lhs = (f * g).evaluate(*z)
    rhs = f.evaluate(*z) * g.evaluate(*z)
    assert abs(lhs - rhs) < 1e-9 * (1 + abs(lhs) + abs(rhs))
