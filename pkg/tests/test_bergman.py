import math

import numpy as np
import pytest

from pshlab.arrangement import new_arrangement, preset
from pshlab.bergman import (
    EmptyBasisError,
    NonIntegrableExponentError,
    QuadratureSpec,
    admissible_basis,
    bergman_phi,
    curve_scan,
    diagonal_curve,
    gram_matrix,
    kernel_values,
    lelong_estimate,
    radial_factor,
    sphere_points,
)
from pshlab.polynomials import BivariatePolynomial as P

THEOREM1 = preset("theorem1")
ZERO_WEIGHT = new_arrangement([], [], 0)
QUAD = QuadratureSpec(max_degree=8, sphere_samples=50_000, seed=42)


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(max_degree=8, sphere_samples=100, seed=1)
    with pytest.raises(ValueError):
        QuadratureSpec(max_degree=-1, sphere_samples=10_000, seed=1)
    with pytest.raises(ValueError):
        QuadratureSpec(max_degree=8, sphere_samples=10_000, seed=1, radius=0.0)


def test_radial_factor_values():
    assert radial_factor(12, 12, 1.0) == pytest.approx(0.25)
    assert radial_factor(2, 0, 1.0) == pytest.approx(1 / 6)
    assert radial_factor(14, 16, 1.0) == pytest.approx(0.5)
    with pytest.raises(NonIntegrableExponentError):
        radial_factor(0, 6, 1.0)


def test_admissible_basis_examples():
    basis = admissible_basis(THEOREM1, 3, 6)
    assert basis == [(P.x() * P.y() * (P.x() + P.y())) ** 2]
    assert len(admissible_basis(THEOREM1, 3, 7)) == 3
    assert admissible_basis(THEOREM1, 1, 1) == [P.x(), P.y()]
    assert admissible_basis(THEOREM1, 3, 5) == []


def test_sphere_points_deterministic_and_unit():
    a = sphere_points(1000, seed=5)
    b = sphere_points(1000, seed=5)
    assert np.array_equal(a, b)
    norms = np.abs(a[:, 0]) ** 2 + np.abs(a[:, 1]) ** 2
    assert np.allclose(norms, 1.0)


def test_gram_closed_forms():
    # volume of the unit ball in R^4 and the first moment of |x|^2
    result = gram_matrix(ZERO_WEIGHT, 1, QuadratureSpec(2, 200_000, 42))
    labels = [str(b) for b in result.basis()]
    i0, ix = labels.index("1"), labels.index("x")
    vol = result.gram[i0, i0].real
    assert vol == pytest.approx(math.pi ** 2 / 2, abs=1e-9)
    mx = result.gram[ix, ix].real
    assert abs(mx - math.pi ** 2 / 6) <= 3 * result.stderr[ix, ix]
    assert mx > 0


def test_gram_positive_entry_for_theorem1():
    result = gram_matrix(THEOREM1, 3, QuadratureSpec(6, 50_000, 42))
    assert result.basis_size == 1
    assert result.gram[0, 0].real > 0
    # floors cancel the weight exactly on the single generator: the sphere
    # integrand is bounded, so the relative error is small
    assert result.stderr[0, 0] < 0.05 * result.gram[0, 0].real


def test_gram_determinism_bitwise():
    g1 = gram_matrix(THEOREM1, 2, QUAD)
    g2 = gram_matrix(THEOREM1, 2, QUAD)
    assert np.array_equal(g1.gram, g2.gram)
    assert np.array_equal(g1.stderr, g2.stderr)
    assert np.array_equal(g1.transform, g2.transform)


def test_gram_positive_semidefinite():
    result = gram_matrix(THEOREM1, 1, QuadratureSpec(10, 50_000, 7))
    eigs = np.linalg.eigvalsh(result.gram)
    assert eigs.min() >= -1e-8 * eigs.max()


def test_cross_degree_entries_vanish():
    result = gram_matrix(THEOREM1, 2, QuadratureSpec(9, 100_000, 42))
    d = result.degrees
    off = d[:, None] != d[None, :]
    z = np.abs(result.gram[off]) / np.maximum(result.stderr[off], 1e-300)
    assert z.max() < 5.0


def test_truncation_monotonicity():
    # with the same seed the smaller Gram is exactly the leading principal
    # submatrix of the larger one, so enlarging the degree cutoff can only
    # grow the kernel (projection onto a larger subspace)
    small = gram_matrix(THEOREM1, 2, QuadratureSpec(6, 50_000, 42))
    large = gram_matrix(THEOREM1, 2, QuadratureSpec(10, 50_000, 42))
    k = small.basis_size
    assert large.monomials[:k] == small.monomials
    assert np.abs(large.gram[:k, :k] - small.gram).max() < 1e-12

    rng = np.random.default_rng(3)
    pts = rng.normal(size=(25, 4)) * 0.2
    xs = pts[:, 0] + 1j * pts[:, 1]
    ys = pts[:, 2] + 1j * pts[:, 3]
    k_small = kernel_values(small, xs, ys)
    k_large = kernel_values(large, xs, ys)
    assert np.all(k_large >= k_small * (1 - 1e-9))


def test_empty_basis_raises():
    with pytest.raises(EmptyBasisError):
        gram_matrix(THEOREM1, 8, QuadratureSpec(12, 10_000, 1))


def test_bergman_phi_bounded_without_singularity():
    quad = QuadratureSpec(4, 50_000, 42)
    gram = gram_matrix(ZERO_WEIGHT, 1, quad)
    values = [
        bergman_phi(ZERO_WEIGHT, 1, quad, (0.4 * math.cos(t), 0.4 * math.sin(t)),
                    gram=gram)
        for t in np.linspace(0, 3, 7)
    ]
    assert all(math.isfinite(v) for v in values)
    assert max(values) - min(values) < 2.0


def test_bergman_phi_slope_matches_symbolic():
    quad = QuadratureSpec(12, 50_000, 42)
    est = lelong_estimate(THEOREM1, 3, quad)
    assert est.value == pytest.approx(2.0, abs=0.05)
    point = preset("point")
    est2 = lelong_estimate(point, 2, QuadratureSpec(8, 50_000, 42))
    assert est2.value == pytest.approx(0.5, abs=0.05)
    est3 = lelong_estimate(point, 3, QuadratureSpec(8, 50_000, 42))
    assert est3.value == pytest.approx(2 / 3, abs=0.05)


def test_bergman_phi_on_witness_ray():
    # slope of phi_hat_3 along z = r*(1,1)/sqrt(2) recovers the Lelong
    # number 2 of its class
    quad = QuadratureSpec(12, 50_000, 42)
    gram = gram_matrix(THEOREM1, 3, quad)
    r = np.geomspace(1e-3, 1e-1, 20)
    u = 1 / math.sqrt(2)
    values = [
        bergman_phi(THEOREM1, 3, quad, (ri * u, ri * u), gram=gram) for ri in r
    ]
    slope = np.polyfit(np.log(r), values, 1)[0]
    assert slope == pytest.approx(2.0, abs=0.05)


def test_curve_scan_flat_for_smooth():
    quad = QuadratureSpec(8, 50_000, 42)
    t = np.geomspace(1e-3, 1e-1, 20)
    scan = curve_scan(preset("smooth"), 2, 5, diagonal_curve, t, quad)
    assert abs(scan.slope) < 0.05
    rows = scan.rows()
    assert len(rows) == 20 and len(rows[0]) == 4


def test_curve_scan_witness_direction():
    quad = QuadratureSpec(12, 50_000, 42)
    t = np.geomspace(1e-3, 1e-1, 20)
    scan = curve_scan(THEOREM1, 3, 4, diagonal_curve, t, quad)
    assert scan.slope == pytest.approx(-0.25, abs=0.05)


def test_gram_audit_dict_round_trip():
    result = gram_matrix(THEOREM1, 3, QuadratureSpec(7, 50_000, 42))
    data = result.to_dict()
    assert data["m"] == 3 and len(data["monomials"]) == result.basis_size
    assert data["effective_rank"] <= result.basis_size
