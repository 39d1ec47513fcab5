"""Sparse bivariate polynomials over Q(i).

The only nontrivial algebra the package needs is exact arithmetic, exact
division by a linear form through the origin, and the multiplicity at the
origin (lowest total degree).  Everything is kept as a dictionary mapping
exponent pairs to Gaussian-rational coefficients; zero coefficients are
never stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .gaussian import GaussianRational, ONE

Term = tuple[int, int]


class ZeroPolynomialError(ValueError):
    """Raised where a nonzero polynomial is required."""


class BivariatePolynomial:
    """A polynomial in x, y with Gaussian-rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Term, GaussianRational] | None = None):
        clean: dict[Term, GaussianRational] = {}
        if terms:
            for (a, b), coeff in terms.items():
                coeff = GaussianRational.of(coeff)
                if a < 0 or b < 0:
                    raise ValueError(f"negative exponent in term {(a, b)}")
                if not coeff.is_zero:
                    clean[(int(a), int(b))] = coeff
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "BivariatePolynomial":
        return cls()

    @classmethod
    def one(cls) -> "BivariatePolynomial":
        return cls({(0, 0): ONE})

    @classmethod
    def monomial(cls, a: int, b: int, coeff=1) -> "BivariatePolynomial":
        return cls({(a, b): GaussianRational.of(coeff)})

    @classmethod
    def x(cls) -> "BivariatePolynomial":
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> "BivariatePolynomial":
        return cls.monomial(0, 1)

    # -- inspection ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, a: int, b: int) -> GaussianRational:
        return self._terms.get((a, b), GaussianRational())

    def terms(self) -> Iterator[tuple[Term, GaussianRational]]:
        """Terms in graded order (total degree, then descending x power)."""
        for key in sorted(self._terms, key=lambda t: (t[0] + t[1], -t[0])):
            yield key, self._terms[key]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(a + b for a, b in self._terms)

    def multiplicity(self) -> int:
        """Vanishing order at the origin (lowest total degree)."""
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no multiplicity")
        return min(a + b for a, b in self._terms)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            acc = out.get(key)
            out[key] = coeff if acc is None else acc + coeff
        return BivariatePolynomial(out)

    def __sub__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        return self + (-other)

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial({k: -c for k, c in self._terms.items()})

    def __mul__(self, other) -> "BivariatePolynomial":
        if not isinstance(other, BivariatePolynomial):
            scalar = GaussianRational.of(other)
            return BivariatePolynomial({k: c * scalar for k, c in self._terms.items()})
        out: dict[Term, GaussianRational] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                prod = c1 * c2
                acc = out.get(key)
                out[key] = prod if acc is None else acc + prod
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BivariatePolynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = BivariatePolynomial.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- division by a linear form ------------------------------------

    def divide_by_linear(self, cx: GaussianRational, cy: GaussianRational
                         ) -> "BivariatePolynomial | None":
        """Exact quotient by cx*x + cy*y, or None if it does not divide.

        Requires the form to be normalized: cx = 1, or cx = 0 and cy = 1.
        """
        if self.is_zero:
            return self
        if cx.is_zero:
            if not cy == ONE:
                raise ValueError("linear form must be normalized")
            if any(b == 0 for (_, b) in self._terms):
                return None
            return BivariatePolynomial({(a, b - 1): c for (a, b), c in self._terms.items()})
        if not cx == ONE:
            raise ValueError("linear form must be normalized")

        # Synthetic division in x: write self = sum_a x^a A_a(y) and match
        # coefficients of x + cy*y times the quotient from the top degree down.
        by_xdeg: dict[int, dict[int, GaussianRational]] = {}
        for (a, b), c in self._terms.items():
            by_xdeg.setdefault(a, {})[b] = c
        deg_x = max(by_xdeg)
        quotient: dict[int, dict[int, GaussianRational]] = {}
        carry: dict[int, GaussianRational] = {}  # cy*y*Q_a, as poly in y
        for a in range(deg_x, -1, -1):
            row = dict(by_xdeg.get(a, {}))
            for b, c in carry.items():
                acc = row.get(b)
                val = -c if acc is None else acc - c
                if val.is_zero:
                    row.pop(b, None)
                else:
                    row[b] = val
            if a == 0:
                if row:
                    return None  # nonzero remainder
                break
            quotient[a - 1] = row
            carry = {b + 1: cy * c for b, c in row.items() if not (cy * c).is_zero}
        out: dict[Term, GaussianRational] = {}
        for a, row in quotient.items():
            for b, c in row.items():
                out[(a, b)] = c
        return BivariatePolynomial(out)

    # -- numeric evaluation -------------------------------------------

    def evaluate(self, x, y):
        """Evaluate at complex scalars or numpy arrays."""
        total = 0
        for (a, b), coeff in self._terms.items():
            total = total + complex(coeff) * (x ** a) * (y ** b)
        return total

    # -- serialization / printing --------------------------------------

    def to_term_list(self) -> list[list]:
        return [[a, b, str(c.re), str(c.im)] for (a, b), c in self.terms()]

    @classmethod
    def from_term_list(cls, data: Iterable) -> "BivariatePolynomial":
        terms: dict[Term, GaussianRational] = {}
        for item in data:
            a, b, re, im = item
            terms[(int(a), int(b))] = GaussianRational(Fraction(re), Fraction(im))
        return cls(terms)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for (a, b), coeff in self.terms():
            mono = "*".join(
                ([f"x^{a}" if a > 1 else "x"] if a else [])
                + ([f"y^{b}" if b > 1 else "y"] if b else [])
            )
            if not mono:
                parts.append(str(coeff))
            elif coeff == ONE:
                parts.append(mono)
            else:
                parts.append(f"({coeff})*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self})"
