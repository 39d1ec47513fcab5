import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pshlab.arrangement import new_arrangement, preset
from pshlab.multiplier_ideal import (
    IdealDescriptor,
    contains,
    generator_strings,
    generators,
    ideal_of,
    is_trivial,
)
from pshlab.polynomials import BivariatePolynomial as P
from pshlab.polynomials import ZeroPolynomialError

THEOREM1 = preset("theorem1")
X, Y = P.x(), P.y()
XYZ = X * Y * (X + Y)


def test_theorem1_ideals():
    assert ideal_of(THEOREM1, 2) == IdealDescriptor(b=(1, 1, 1), e=3, p=0)
    assert ideal_of(THEOREM1, 3) == IdealDescriptor(b=(2, 2, 2), e=5, p=0)
    assert ideal_of(THEOREM1, 4) == IdealDescriptor(b=(2, 2, 2), e=7, p=1)
    assert ideal_of(THEOREM1, 5) == IdealDescriptor(b=(3, 3, 3), e=9, p=0)
    assert is_trivial(ideal_of(THEOREM1, Fraction(1, 2)))


def test_preset_ideals():
    point = preset("point")
    for m in range(1, 7):
        ideal = ideal_of(point, m)
        assert ideal == IdealDescriptor(b=(), e=m - 1, p=m - 1)
    smooth = preset("smooth")
    for m in range(1, 7):
        ideal = ideal_of(smooth, m)
        assert ideal == IdealDescriptor(b=(m,), e=m - 1, p=0)


def test_trivial_cases():
    assert is_trivial(IdealDescriptor(b=(), e=-1, p=0))
    assert is_trivial(IdealDescriptor(b=(0, 0), e=0, p=0))
    assert not is_trivial(ideal_of(THEOREM1, 2))
    with pytest.raises(ValueError):
        ideal_of(THEOREM1, -1)


def test_generators_match_hand_expansion():
    # frozen expansions of x*y*(x+y) powers
    assert generators(THEOREM1, ideal_of(THEOREM1, 2)) == [P({(2, 1): 1, (1, 2): 1})]
    assert generators(THEOREM1, ideal_of(THEOREM1, 3)) == [
        P({(4, 2): 1, (3, 3): 2, (2, 4): 1})
    ]
    assert generators(THEOREM1, ideal_of(THEOREM1, 4)) == [
        P({(5, 2): 1, (4, 3): 2, (3, 4): 1}),
        P({(4, 3): 1, (3, 4): 2, (2, 5): 1}),
    ]
    assert generators(THEOREM1, ideal_of(THEOREM1, 5)) == [
        P({(6, 3): 1, (5, 4): 3, (4, 5): 3, (3, 6): 1})
    ]
    trivial = ideal_of(THEOREM1, Fraction(1, 2))
    assert generators(THEOREM1, trivial) == [P.one()]


def test_generator_strings():
    assert generator_strings(THEOREM1, ideal_of(THEOREM1, 4)) == [
        "(x*y*(x+y))^2 * x",
        "(x*y*(x+y))^2 * y",
    ]
    assert generator_strings(THEOREM1, ideal_of(THEOREM1, 2)) == ["x*y*(x+y)"]
    smooth = preset("smooth")
    assert generator_strings(smooth, ideal_of(smooth, 3)) == ["x^3"]
    point = preset("point")
    assert generator_strings(point, ideal_of(point, 3)) == ["x^2", "x * y", "y^2"]


def test_contains_examples():
    c4 = ideal_of(THEOREM1, 4)
    assert contains(THEOREM1, c4, XYZ ** 2 * X)
    assert contains(THEOREM1, c4, XYZ ** 2 * Y)
    # x^2 y^2 z vanishes only to order 1 along x + y = 0
    x2y2z = P({(3, 2): 1, (2, 3): 1})
    assert not contains(THEOREM1, ideal_of(THEOREM1, 3), x2y2z)
    assert not contains(THEOREM1, c4, P.one())
    with pytest.raises(ZeroPolynomialError):
        contains(THEOREM1, c4, P.zero())


def test_generators_lie_in_ideal():
    for c in (2, 3, 4, 5, Fraction(7, 2)):
        ideal = ideal_of(THEOREM1, c)
        gens = generators(THEOREM1, ideal)
        assert len(gens) == ideal.p + 1
        for g in gens:
            assert contains(THEOREM1, ideal, g)


small_weight = st.fractions(min_value=0, max_value=3, max_denominator=12)


@settings(max_examples=100, derandomize=True)
@given(small_weight, small_weight,
       st.fractions(min_value=0, max_value=20, max_denominator=8),
       st.fractions(min_value=0, max_value=20, max_denominator=8))
def test_monotonicity_in_c(a1, a2, c1, c2):
    arr = new_arrangement([(1, 0), (0, 1)], [a1, a2], "1/3")
    lo, hi = sorted((c1, c2))
    ideal_lo, ideal_hi = ideal_of(arr, lo), ideal_of(arr, hi)
    assert all(bh >= bl for bl, bh in zip(ideal_lo.b, ideal_hi.b))
    assert sum(ideal_hi.b) + ideal_hi.p >= sum(ideal_lo.b) + ideal_lo.p


@settings(max_examples=100, derandomize=True)
@given(small_weight, small_weight,
       st.fractions(min_value=0, max_value=20, max_denominator=12))
def test_two_lines_are_simple_crossings(a1, a2, c):
    # without a point mass, two lines resolve with no extra maximal-ideal power
    arr = new_arrangement([(1, 0), (0, 1)], [a1, a2], 0)
    assert ideal_of(arr, c).p == 0


def test_membership_equals_brute_force_over_monomials():
    # exhaustive cross-check of the divisibility route against the raw
    # order/multiplicity conditions defining the pushforward
    for c in (1, Fraction(3, 2), 2, 3, 4):
        ideal = ideal_of(THEOREM1, c)
        for alpha in range(0, 7):
            for beta in range(0, 7 - alpha):
                f = P.monomial(alpha, beta)
                orders = (alpha, beta, 0)  # vanishing along x, y, x+y
                direct = all(o >= b for o, b in zip(orders, ideal.b)) \
                    and alpha + beta >= ideal.e
                assert contains(THEOREM1, ideal, f) == direct
