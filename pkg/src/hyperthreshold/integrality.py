"""r-integrality: every eigenvalue an integer multiple of one rational r."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable

from .closedform import CoExpr, Complement, Leaf, vertex_count
from .core import Spectrum
from .errors import AllZero, NonPositiveR


@dataclass(frozen=True)
class IntegralityCertificate:
    """``r`` is None for an all-zero spectrum, where any r works."""

    r: Fraction | None
    values: tuple[Fraction, ...]
    quotients: tuple[int, ...]

    @property
    def all_zero(self) -> bool:
        return self.r is None

    def to_json(self) -> dict:
        if self.r is None:
            return {"r": None, "all_zero": True, "quotients": list(self.quotients)}
        return {
            "r": {"num": self.r.numerator, "den": self.r.denominator},
            "quotients": list(self.quotients),
        }


def rational_gcd(values: Iterable) -> Fraction:
    """Largest rational g such that every value is an integer multiple of g."""
    vals = [Fraction(v) for v in values]
    if any(v < 0 for v in vals):
        raise ValueError("values must be non-negative")
    nonzero = [v for v in vals if v != 0]
    if not nonzero:
        raise AllZero("no nonzero value to take a gcd of")
    common = lcm(*(v.denominator for v in nonzero))
    g = 0
    for v in nonzero:
        g = gcd(g, v.numerator * (common // v.denominator))
    return Fraction(g, common)


def certify(spec: Spectrum) -> IntegralityCertificate:
    values = tuple(v for v, _ in spec.entries)
    try:
        r = rational_gcd(values)
    except AllZero:
        return IntegralityCertificate(None, values, tuple(0 for _ in values))
    quotients = []
    for v in values:
        q = v / r
        assert q.denominator == 1
        quotients.append(q.numerator)
    return IntegralityCertificate(r, values, tuple(quotients))


def verify_integral(spec: Spectrum, r) -> bool:
    r = Fraction(r)
    if r <= 0:
        raise NonPositiveR(f"r must be positive, got {r}")
    return all((v / r).denominator == 1 for v, _ in spec.entries)


def threshold_ratio(ks: Iterable[int]) -> Fraction:
    """1/lcm(k_i): each closed-form denominator divides some k_i."""
    ks = list(ks)
    return Fraction(1, lcm(*ks)) if ks else Fraction(1)


def predicted_ratio(expr: CoExpr) -> Fraction:
    """A ratio r = 1/q that the expression's spectrum is guaranteed to be integral for.

    Leaves give 1/k, a complement on n vertices divides by n - 1, and a
    union of 1/q1 and 1/q2 gives 1/(q1 q2).
    """
    if isinstance(expr, Leaf):
        return Fraction(1, expr.k)
    if isinstance(expr, Complement):
        child = _as_unit_fraction(predicted_ratio(expr.child))
        return child / (vertex_count(expr.child) - 1)
    q1 = _as_unit_fraction(predicted_ratio(expr.left)).denominator
    q2 = _as_unit_fraction(predicted_ratio(expr.right)).denominator
    return Fraction(1, q1 * q2)


def _as_unit_fraction(r: Fraction) -> Fraction:
    # p/q-integral implies 1/q-integral
    return Fraction(1, r.denominator)
