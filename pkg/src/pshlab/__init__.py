"""Exact and numeric singularity analysis of weighted line arrangements in C^2.

The symbolic side computes multiplier ideals, singularity classes and the
monotonicity structure of the approximation sequence with exact rational
arithmetic; the numeric side rebuilds the same weights from orthonormal
bases of weighted Bergman spaces and cross-checks slopes and memberships.
"""

from .arrangement import (
    ArrangementError,
    DuplicateLineError,
    Line,
    NegativeCoefficientError,
    WeightedArrangement,
    ZeroFormError,
    ZeroWeightError,
    lct,
    load_arrangement,
    new_arrangement,
    phi_value,
    preset,
    save_arrangement,
)
from .bergman import (
    EmptyBasisError,
    GramResult,
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
    ray_curve,
)
from .gaussian import GaussianRational
from .integrability import IntegrabilityVerdict, integrability_estimate
from .multiplier_ideal import (
    IdealDescriptor,
    contains,
    generator_strings,
    generators,
    ideal_of,
    is_trivial,
    min_admissible_degree,
)
from .polynomials import BivariatePolynomial, ZeroPolynomialError
from .sequence import (
    MonotonicityReport,
    SequenceEntry,
    SubsequenceVerdict,
    VerificationReport,
    adjacent_violations,
    build_sequence,
    check_subsequence,
    entry,
    monotonicity_report,
    pattern_violations,
    verify_paper,
)
from .singularity import (
    ArrangementMismatchError,
    ComparisonResult,
    Relation,
    SingularityClass,
    boundedness_probe,
    class_of_ideal,
    class_of_weight,
    compare,
    lelong,
    more_singular_or_equal,
)

__version__ = "0.1.0"

__all__ = [
    "ArrangementError",
    "ArrangementMismatchError",
    "BivariatePolynomial",
    "ComparisonResult",
    "DuplicateLineError",
    "EmptyBasisError",
    "GaussianRational",
    "GramResult",
    "IdealDescriptor",
    "IntegrabilityVerdict",
    "Line",
    "MonotonicityReport",
    "NegativeCoefficientError",
    "NonIntegrableExponentError",
    "QuadratureSpec",
    "Relation",
    "SequenceEntry",
    "SingularityClass",
    "SubsequenceVerdict",
    "VerificationReport",
    "WeightedArrangement",
    "ZeroFormError",
    "ZeroPolynomialError",
    "ZeroWeightError",
    "adjacent_violations",
    "admissible_basis",
    "bergman_phi",
    "boundedness_probe",
    "build_sequence",
    "check_subsequence",
    "class_of_ideal",
    "class_of_weight",
    "compare",
    "contains",
    "curve_scan",
    "diagonal_curve",
    "entry",
    "generator_strings",
    "generators",
    "gram_matrix",
    "ideal_of",
    "integrability_estimate",
    "is_trivial",
    "kernel_values",
    "lct",
    "lelong",
    "lelong_estimate",
    "load_arrangement",
    "min_admissible_degree",
    "monotonicity_report",
    "more_singular_or_equal",
    "new_arrangement",
    "pattern_violations",
    "phi_value",
    "preset",
    "radial_factor",
    "ray_curve",
    "save_arrangement",
    "verify_paper",
]
