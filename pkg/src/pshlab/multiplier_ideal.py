"""Multiplier ideals J(c*phi) of arrangement weights, in closed normal form.

For a central line arrangement one blowup of the origin resolves the pair,
so the pushforward of the resolved ideal sheaf reduces to floor arithmetic:
a germ f lies in J(c*phi) iff it vanishes to order b_i = floor(c*a_i) along
each line and to order e = floor(c*total_mass) - 1 at the origin.  Dividing
out the forced line factors leaves an extra power p = max(0, e - sum b_i)
of the maximal ideal, which is the normal form stored here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import WeightedArrangement
from .gaussian import to_fraction
from .polynomials import BivariatePolynomial, ZeroPolynomialError


@dataclass(frozen=True)
class IdealDescriptor:
    """Normal form of a multiplier ideal: prod ell_i^{b_i} * m^p.

    `e` is the required vanishing order at the origin, kept for reporting;
    the invariant p = max(0, e - sum(b)) always holds.
    """

    b: tuple[int, ...]
    e: int
    p: int

    def to_dict(self) -> dict:
        return {"b": list(self.b), "e": self.e, "p": self.p}


def ideal_of(arr: WeightedArrangement, c) -> IdealDescriptor:
    """Compute J(c*phi) for a nonnegative rational c."""
    c = to_fraction(c)
    if c < 0:
        raise ValueError("multiplier ideal parameter must be nonnegative")
    b = tuple(math.floor(c * a) for a in arr.coeffs)
    e = math.floor(c * arr.total_mass) - 1
    p = max(0, e - sum(b))
    return IdealDescriptor(b=b, e=e, p=p)


def is_trivial(ideal: IdealDescriptor) -> bool:
    return all(v == 0 for v in ideal.b) and ideal.p == 0


def generators(arr: WeightedArrangement, ideal: IdealDescriptor
               ) -> list[BivariatePolynomial]:
    """Generators prod ell_i^{b_i} * x^j * y^{p-j}, j = p..0 (p+1 of them)."""
    base = BivariatePolynomial.one()
    for line, power in zip(arr.lines, ideal.b):
        base = base * (line.form() ** power)
    return [
        base * BivariatePolynomial.monomial(j, ideal.p - j)
        for j in range(ideal.p, -1, -1)
    ]


def generator_strings(arr: WeightedArrangement, ideal: IdealDescriptor) -> list[str]:
    """Factored human-readable generators, e.g. ``(x*y*(x+y))^2 * x``."""
    labels = [line.label() for line in arr.lines]
    wrapped = [f"({lab})" if "+" in lab else lab for lab in labels]
    powers = [p for p in ideal.b]
    factors: list[str] = []
    positive = [i for i, p in enumerate(powers) if p > 0]
    if positive and len(set(powers[i] for i in positive)) == 1 and len(positive) > 1:
        shared = powers[positive[0]]
        joint = "*".join(wrapped[i] for i in positive)
        factors.append(f"({joint})^{shared}" if shared > 1 else joint)
    else:
        for i in positive:
            factors.append(f"{wrapped[i]}^{powers[i]}" if powers[i] > 1 else wrapped[i])

    out = []
    for j in range(ideal.p, -1, -1):
        mono_parts = []
        if j:
            mono_parts.append(f"x^{j}" if j > 1 else "x")
        if ideal.p - j:
            mono_parts.append(f"y^{ideal.p - j}" if ideal.p - j > 1 else "y")
        parts = factors + mono_parts
        out.append(" * ".join(parts) if parts else "1")
    return out


def contains(arr: WeightedArrangement, ideal: IdealDescriptor,
             f: BivariatePolynomial) -> bool:
    """Exact germ membership: divide out each line factor, then check the
    remaining multiplicity at the origin against p."""
    if f.is_zero:
        raise ZeroPolynomialError("membership of the zero polynomial is undefined")
    g = f
    for line, power in zip(arr.lines, ideal.b):
        for _ in range(power):
            nxt = g.divide_by_linear(line.cx, line.cy)
            if nxt is None:
                return False
            g = nxt
    return g.multiplicity() >= ideal.p


def min_admissible_degree(arr: WeightedArrangement, c) -> int:
    """Lowest total degree of a nonzero element of J(c*phi)."""
    ideal = ideal_of(arr, c)
    return sum(ideal.b) + ideal.p


def first_nontrivial_parameter(arr: WeightedArrangement, grid: Fraction,
                               c_max: Fraction) -> Fraction | None:
    """Sweep c over multiples of `grid` and return the first nontrivial one."""
    step = to_fraction(grid)
    c = step
    c_max = to_fraction(c_max)
    while c <= c_max:
        if not is_trivial(ideal_of(arr, c)):
            return c
        c += step
    return None
