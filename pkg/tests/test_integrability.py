from fractions import Fraction

import pytest

from pshlab.arrangement import new_arrangement, preset
from pshlab.integrability import integrability_estimate
from pshlab.multiplier_ideal import contains, ideal_of
from pshlab.polynomials import BivariatePolynomial as P
from pshlab.polynomials import ZeroPolynomialError

THEOREM1 = preset("theorem1")
X, Y = P.x(), P.y()


def test_radial_threshold_of_point_mass():
    # |1|^2 |z|^(-2c) is integrable near 0 in C^2 iff c < 2
    point = preset("point")
    assert integrability_estimate(point, P.one(), Fraction(7, 4)).integrable
    assert not integrability_estimate(point, P.one(), Fraction(9, 4)).integrable
    # boundary c = 2 is log-divergent: caught by the tail-ratio certificate
    verdict = integrability_estimate(point, P.one(), 2)
    assert not verdict.integrable
    assert verdict.radial_tail_ratio == pytest.approx(1.0, abs=1e-9)


def test_log_divergence_along_a_line():
    # x^2 y^2 (x+y) vanishes to order 1 < 2 along x+y=0 at c=3: the
    # transverse integral is exactly log-divergent
    f = P({(3, 2): 1, (2, 3): 1})
    verdict = integrability_estimate(THEOREM1, f, 3)
    assert not verdict.integrable
    assert verdict.line_tail_ratios[2] == pytest.approx(1.0, abs=1e-6)


def test_power_divergence_grows_past_threshold():
    verdict = integrability_estimate(preset("point"), P.one(), 3)
    assert not verdict.integrable
    assert verdict.log_growth > 6.9  # grew by more than 10^3


def test_matches_membership_on_spot_checks():
    for c in (1, Fraction(3, 2), 2, 3):
        ideal = ideal_of(THEOREM1, c)
        for f in (P.one(), X * Y, (X * Y * (X + Y)) ** 2, P.monomial(4, 1)):
            assert integrability_estimate(THEOREM1, f, c).integrable == \
                contains(THEOREM1, ideal, f)


def test_below_threshold_is_integrable():
    # J(c*phi) trivial at c = 1/2, and the direct integral agrees
    assert integrability_estimate(THEOREM1, P.one(), Fraction(1, 2)).integrable


def test_zero_weight_always_integrable():
    zero = new_arrangement([(1, 0)], [0])
    assert integrability_estimate(zero, P.one(), 5).integrable


def test_input_validation():
    with pytest.raises(ZeroPolynomialError):
        integrability_estimate(THEOREM1, P.zero(), 1)
    with pytest.raises(ValueError):
        integrability_estimate(THEOREM1, P.one(), -1)
