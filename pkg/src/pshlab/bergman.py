"""Numeric reconstruction of the approximation weights from first principles.

phi_m is (1/2m) log of the Bergman kernel of the space of holomorphic
functions on the unit ball that are square integrable against e^{-2m phi}.
For arrangement weights every admissible basis element is homogeneous, so
each inner product splits into an exact radial integral times an integral
over the unit sphere S^3, which is estimated by seeded Monte Carlo.  The
Gram matrix of the truncated basis is then factorized to an orthonormal
basis, giving a computable lower truncation phi_hat of phi_m whose slopes
near 0 recover the symbolic singularity data.

Admissibility of a basis element is decided symbolically (ideal
membership); the quadrature never gets to vote on integrability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .arrangement import WeightedArrangement
from .multiplier_ideal import ideal_of, min_admissible_degree
from .polynomials import BivariatePolynomial

MIN_SPHERE_SAMPLES = 10_000
SPHERE_AREA = 2.0 * math.pi ** 2  # |S^3|
RANK_TOLERANCE = 1e-8
_CHUNK = 1 << 16


class NonIntegrableExponentError(ArithmeticError):
    """The radial exponent left the integrable range; the basis filter is
    broken if this ever triggers on admissible input."""


class EmptyBasisError(ValueError):
    """No admissible basis element exists below the degree cutoff."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Truncation and sampling parameters for the Gram estimation."""

    max_degree: int
    sphere_samples: int
    seed: int
    radius: float = 1.0

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        if self.sphere_samples < MIN_SPHERE_SAMPLES:
            raise ValueError(
                f"sphere_samples must be >= {MIN_SPHERE_SAMPLES}"
            )
        if not (self.radius > 0):
            raise ValueError("radius must be positive")

    def with_max_degree(self, n: int) -> "QuadratureSpec":
        return QuadratureSpec(n, self.sphere_samples, self.seed, self.radius)


def _basis_layout(arr: WeightedArrangement, m: int, max_degree: int
                  ) -> tuple[tuple[int, ...], int, list[tuple[int, int]]]:
    """Line powers b, base degree, and monomial cofactors of the basis.

    The degree <= N part of J(m phi) is spanned by prod ell^b times the
    monomials x^u y^v with u+v >= p and sum(b)+u+v <= N.
    """
    ideal = ideal_of(arr, m)
    base = sum(ideal.b)
    monos = [
        (u, t - u)
        for t in range(ideal.p, max(max_degree - base, ideal.p - 1) + 1)
        if base + t <= max_degree
        for u in range(t, -1, -1)
    ]
    return ideal.b, base, monos


def admissible_basis(arr: WeightedArrangement, m: int, max_degree: int
                     ) -> list[BivariatePolynomial]:
    """Degree-sorted basis of the admissible (square-integrable) monomial
    span up to the total-degree cutoff, as expanded polynomials."""
    b, _base, monos = _basis_layout(arr, m, max_degree)
    common = BivariatePolynomial.one()
    for line, power in zip(arr.lines, b):
        common = common * (line.form() ** power)
    return [common * BivariatePolynomial.monomial(u, v) for u, v in monos]


def radial_factor(d_total: int, s, radius: float = 1.0) -> float:
    """Exact integral of r^(d_total - s + 3) over (0, radius].

    `s` is the homogeneity degree 2m*total_mass of the weight; the
    integrand exponent must stay above -1.
    """
    power = float(d_total) - float(s) + 4.0
    if power <= 0:
        raise NonIntegrableExponentError(
            f"radial exponent {power - 1} is not integrable; "
            "an inadmissible element slipped through the basis filter"
        )
    return radius ** power / power


def sphere_points(count: int, seed: int) -> np.ndarray:
    """`count` uniform points on S^3 in C^2, deterministic in the seed.

    Uses a counter-based generator so the stream is a pure function of
    (seed, index) and independent of how callers batch their draws.
    """
    gen = np.random.Generator(np.random.Philox(key=seed))
    out = np.empty((count, 2), dtype=np.complex128)
    done = 0
    while done < count:
        take = min(_CHUNK, count - done)
        raw = gen.standard_normal((take, 4))
        norm = np.sqrt(np.einsum("ij,ij->i", raw, raw))
        norm[norm == 0.0] = 1.0
        out[done:done + take, 0] = (raw[:, 0] + 1j * raw[:, 1]) / norm
        out[done:done + take, 1] = (raw[:, 2] + 1j * raw[:, 3]) / norm
        done += take
    return out


@dataclass
class GramResult:
    """Estimated Gram data of the admissible basis for one (arr, m)."""

    m: int
    spec: QuadratureSpec
    line_powers: tuple[int, ...]
    monomials: list[tuple[int, int]]
    degrees: np.ndarray
    gram: np.ndarray
    stderr: np.ndarray
    transform: np.ndarray
    effective_rank: int
    degenerate: bool
    _arr: WeightedArrangement

    @property
    def basis_size(self) -> int:
        return len(self.monomials)

    def basis(self) -> list[BivariatePolynomial]:
        common = BivariatePolynomial.one()
        for line, power in zip(self._arr.lines, self.line_powers):
            common = common * (line.form() ** power)
        return [common * BivariatePolynomial.monomial(u, v)
                for u, v in self.monomials]

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "max_degree": self.spec.max_degree,
            "sphere_samples": self.spec.sphere_samples,
            "seed": self.spec.seed,
            "radius": self.spec.radius,
            "line_powers": list(self.line_powers),
            "monomials": [list(mn) for mn in self.monomials],
            "degrees": self.degrees.tolist(),
            "gram_re": self.gram.real.tolist(),
            "gram_im": self.gram.imag.tolist(),
            "stderr": self.stderr.tolist(),
            "effective_rank": self.effective_rank,
            "degenerate": self.degenerate,
        }


def _basis_values(arr: WeightedArrangement, line_powers: Sequence[int],
                  monomials: Sequence[tuple[int, int]],
                  x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Matrix of basis values, one row per basis element."""
    common = np.ones_like(x)
    for line, power in zip(arr.lines, line_powers):
        if power:
            common = common * line.evaluate(x, y) ** power
    max_u = max((u for u, _ in monomials), default=0)
    max_v = max((v for _, v in monomials), default=0)
    xp = [np.ones_like(x)]
    for _ in range(max_u):
        xp.append(xp[-1] * x)
    yp = [np.ones_like(y)]
    for _ in range(max_v):
        yp.append(yp[-1] * y)
    rows = [common * xp[u] * yp[v] for u, v in monomials]
    return np.vstack(rows)


def gram_matrix(arr: WeightedArrangement, m: int, quad: QuadratureSpec
                ) -> GramResult:
    """Monte Carlo Gram matrix of the admissible basis with per-entry
    standard errors and the orthonormalizing transform."""
    line_powers, base, monos = _basis_layout(arr, m, quad.max_degree)
    if not monos:
        raise EmptyBasisError(
            f"no admissible element of degree <= {quad.max_degree} for m={m} "
            f"(minimal admissible degree is {min_admissible_degree(arr, m)})"
        )
    k = len(monos)
    degrees = np.array([base + u + v for u, v in monos], dtype=np.int64)
    weight_exps = [-float(m * a) for a in arr.coeffs]  # per line, for sqrt(w)

    gen = np.random.Generator(np.random.Philox(key=quad.seed))
    s_sum = np.zeros((k, k), dtype=np.complex128)
    m2_sum = np.zeros((k, k), dtype=np.float64)
    done = 0
    while done < quad.sphere_samples:
        take = min(_CHUNK, quad.sphere_samples - done)
        raw = gen.standard_normal((take, 4))
        norm = np.sqrt(np.einsum("ij,ij->i", raw, raw))
        norm[norm == 0.0] = 1.0
        x = (raw[:, 0] + 1j * raw[:, 1]) / norm
        y = (raw[:, 2] + 1j * raw[:, 3]) / norm
        rows = _basis_values(arr, line_powers, monos, x, y)
        sqrt_w = np.ones(take, dtype=np.float64)
        for line, exp in zip(arr.lines, weight_exps):
            if exp != 0.0:
                sqrt_w *= np.abs(line.evaluate(x, y)) ** exp
        rows *= sqrt_w
        s_sum += rows @ rows.conj().T
        abs2 = rows.real ** 2 + rows.imag ** 2
        m2_sum += abs2 @ abs2.T
        done += take

    n = float(quad.sphere_samples)
    sphere_mean = s_sum / n
    second_moment = m2_sum / n
    s_hom = 2 * m * arr.total_mass
    scale = np.array(
        [
            [SPHERE_AREA * radial_factor(int(dg + dh), s_hom, quad.radius)
             for dh in degrees]
            for dg in degrees
        ]
    )
    gram = sphere_mean * scale
    gram = (gram + gram.conj().T) / 2.0
    variance = np.maximum(second_moment - np.abs(sphere_mean) ** 2, 0.0)
    stderr = np.sqrt(variance / n) * scale

    eigvals, eigvecs = np.linalg.eigh(gram)
    lam_max = float(eigvals[-1]) if k else 0.0
    keep = eigvals > RANK_TOLERANCE * max(lam_max, 0.0)
    if lam_max <= 0.0:
        keep = np.zeros(k, dtype=bool)
    transform = eigvecs[:, keep].conj() / np.sqrt(eigvals[keep])
    rank = int(keep.sum())
    return GramResult(
        m=m,
        spec=quad,
        line_powers=tuple(line_powers),
        monomials=list(monos),
        degrees=degrees,
        gram=gram,
        stderr=stderr,
        transform=transform,
        effective_rank=rank,
        degenerate=rank < k,
        _arr=arr,
    )


def kernel_values(result: GramResult, x, y) -> np.ndarray:
    """Sum of |sigma_l|^2 over the orthonormal basis, at arrays of points."""
    x = np.asarray(x, dtype=np.complex128)
    y = np.asarray(y, dtype=np.complex128)
    rows = _basis_values(result._arr, result.line_powers, result.monomials,
                         x.ravel(), y.ravel())
    sigma = result.transform.T @ rows
    return np.sum(np.abs(sigma) ** 2, axis=0).reshape(x.shape)


def bergman_phi(arr: WeightedArrangement, m: int, quad: QuadratureSpec,
                point: tuple[complex, complex], *,
                gram: GramResult | None = None) -> float:
    """Truncated approximation weight (1/2m) log sum |sigma_l(z)|^2."""
    result = gram if gram is not None else gram_matrix(arr, m, quad)
    k = float(kernel_values(result, np.array([point[0]]),
                            np.array([point[1]]))[0])
    if k <= 0.0:
        return float("-inf")
    return math.log(k) / (2.0 * m)


def _phi_on_points(result: GramResult, x: np.ndarray, y: np.ndarray
                   ) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.log(kernel_values(result, x, y)) / (2.0 * result.m)


def _effective_spec(arr: WeightedArrangement, m: int, quad: QuadratureSpec,
                    margin: int = 4) -> QuadratureSpec:
    """Keep the requested degree cutoff unless it admits nothing, in which
    case raise it to (minimal admissible degree + margin).  Slopes near 0
    are governed by the lowest admissible degree, so the raise is safe."""
    lowest = min_admissible_degree(arr, m)
    if quad.max_degree >= lowest:
        return quad
    return quad.with_max_degree(lowest + margin)


@dataclass
class RaySlopes:
    m: int
    value: float
    per_ray: list[float]
    max_degree_used: int

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "lelong_estimate": self.value,
            "per_ray": self.per_ray,
            "max_degree_used": self.max_degree_used,
        }


def _fit_slope(log_r: np.ndarray, values: np.ndarray) -> float:
    return float(np.polyfit(log_r, values, 1)[0])


def lelong_estimate(arr: WeightedArrangement, m: int, quad: QuadratureSpec,
                    *, rays: int = 8, r_lo: float = 1e-3, r_hi: float = 1e-1,
                    n_points: int = 25, gram: GramResult | None = None
                    ) -> RaySlopes:
    """Average slope of phi_hat_m against log r along generic rays."""
    spec = _effective_spec(arr, m, quad)
    result = gram if gram is not None else gram_matrix(arr, m, spec)
    gen = np.random.Generator(np.random.Philox(key=spec.seed + 0x9E3779B9))
    directions = []
    while len(directions) < rays:
        raw = gen.standard_normal(4)
        norm = math.sqrt(float(raw @ raw))
        if norm == 0.0:
            continue
        u = (complex(raw[0], raw[1]) / norm, complex(raw[2], raw[3]) / norm)
        dist = min(
            (abs(line.evaluate(*u)) / line.coeff_norm() for line in arr.lines),
            default=1.0,
        )
        if dist > 0.05:
            directions.append(u)
    r = np.geomspace(r_lo, r_hi, n_points)
    log_r = np.log(r)
    slopes = []
    for u in directions:
        vals = _phi_on_points(result, r * u[0], r * u[1])
        slopes.append(_fit_slope(log_r, vals))
    return RaySlopes(
        m=m,
        value=float(np.mean(slopes)),
        per_ray=slopes,
        max_degree_used=spec.max_degree,
    )


@dataclass
class CurveScan:
    m1: int
    m2: int
    t: np.ndarray
    phi1: np.ndarray
    phi2: np.ndarray
    slope: float
    max_degree_used: tuple[int, int]

    @property
    def delta(self) -> np.ndarray:
        return self.phi2 - self.phi1

    def rows(self) -> list[list[float]]:
        return [
            [float(t), float(p1), float(p2), float(p2 - p1)]
            for t, p1, p2 in zip(self.t, self.phi1, self.phi2)
        ]

    def to_dict(self) -> dict:
        return {
            "m1": self.m1,
            "m2": self.m2,
            "slope": self.slope,
            "max_degree_used": list(self.max_degree_used),
            "rows": [
                {"t": r[0], "phi_m1": r[1], "phi_m2": r[2], "delta": r[3]}
                for r in self.rows()
            ],
        }


def curve_scan(arr: WeightedArrangement, m1: int, m2: int,
               curve: Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]],
               t_grid: np.ndarray, quad: QuadratureSpec, *,
               gram1: GramResult | None = None,
               gram2: GramResult | None = None) -> CurveScan:
    """Tabulate Delta(t) = phi_hat_{m2} - phi_hat_{m1} along a curve through
    the origin and fit its slope against log t.  A negative slope means
    Delta blows up at the origin."""
    t = np.asarray(t_grid, dtype=np.float64)
    x, y = curve(t)
    spec1 = _effective_spec(arr, m1, quad)
    spec2 = _effective_spec(arr, m2, quad)
    g1 = gram1 if gram1 is not None else gram_matrix(arr, m1, spec1)
    g2 = gram2 if gram2 is not None else gram_matrix(arr, m2, spec2)
    spec1, spec2 = g1.spec, g2.spec
    phi1 = _phi_on_points(g1, np.asarray(x, dtype=np.complex128),
                          np.asarray(y, dtype=np.complex128))
    phi2 = _phi_on_points(g2, np.asarray(x, dtype=np.complex128),
                          np.asarray(y, dtype=np.complex128))
    slope = _fit_slope(np.log(t), phi2 - phi1)
    return CurveScan(
        m1=m1, m2=m2, t=t, phi1=phi1, phi2=phi2, slope=slope,
        max_degree_used=(spec1.max_degree, spec2.max_degree),
    )


def diagonal_curve(t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """The curve x = y = t, the classic witness direction."""
    return t, t


def ray_curve(direction: tuple[complex, complex]
              ) -> Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]:
    dx, dy = complex(direction[0]), complex(direction[1])

    def curve(t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return t * dx, t * dy

    return curve
