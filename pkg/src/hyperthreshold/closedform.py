"""Closed-form Laplacian spectra of threshold hypergraphs and their co-expressions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Union as _U

from .construct import build_hypergraph, complement, disjoint_union, parse_code
from .core import Hypergraph, Spectrum, ThresholdCode
from .errors import (
    EmptySpectrum,
    MalformedExpression,
    MissingZeroEigenvalue,
    MixedK,
    NonPositiveK,
    NonUniformK,
    SpectrumExceedsPhi,
    UniformityExceedsOrder,
)


def _require_zero(spec: Spectrum) -> None:
    if spec.n == 0:
        raise EmptySpectrum("spectrum is empty")
    if spec.entries[0][0] != 0:
        raise MissingZeroEigenvalue("smallest eigenvalue must be 0")


def dominate_spectrum(spec: Spectrum, k: int) -> Spectrum:
    """Spectrum after adding a k-dominating set to a hypergraph with spectrum ``spec``.

    One zero stays; every other eigenvalue shifts up by 1; the new ones are
    (n+k)/k once and (k+1)n/k with multiplicity k-1, where n = spec.n.
    """
    if k < 1:
        raise NonPositiveK(f"k must be positive, got {k}")
    _require_zero(spec)
    n = spec.n
    pairs = [(Fraction(0), 1)]
    for value, mult in spec.entries:
        if value == 0:
            mult -= 1
        pairs.append((value + 1, mult))
    pairs.append((Fraction(n + k, k), 1))
    pairs.append((Fraction((k + 1) * n, k), k - 1))
    return Spectrum.from_pairs(pairs)


def add_isolated(spec: Spectrum, count: int) -> Spectrum:
    if count < 0:
        raise ValueError("count must be non-negative")
    return Spectrum.from_pairs(list(spec.entries) + [(0, count)])


def threshold_spectrum(code: ThresholdCode) -> Spectrum:
    """Direct formula for the spectrum of an arbitrary threshold code."""
    d = code.d
    if d == 0:
        return Spectrum.from_pairs([(0, code.m[0])])
    m, k = code.m, code.k
    pairs: list[tuple[Fraction, int]] = [(Fraction(0), 1)]
    for i in range(2, d + 1):
        pairs.append((Fraction(d - i + 1), m[i - 1]))
    pairs.append((Fraction(d), m[0] - 1))
    for i in range(1, d + 1):
        ki = k[i - 1]
        m_sum = sum(m[:i])
        pairs.append((Fraction(m_sum + sum(k[:i]), ki) + d - i, 1))
        pairs.append((Fraction((ki + 1) * (m_sum + sum(k[:i - 1])), ki) + d - i, ki - 1))
    return Spectrum.from_pairs(pairs)


def incremental_spectrum(code: ThresholdCode) -> Spectrum:
    """Fold the single-domination update over the code, starting from one vertex."""
    spec = Spectrum.from_pairs([(0, 1)])
    spec = add_isolated(spec, code.m[0] - 1)
    for i in range(code.d):
        if i > 0:
            spec = add_isolated(spec, code.m[i])
        spec = dominate_spectrum(spec, code.k[i])
    return spec


def k_threshold_spectrum(code: ThresholdCode) -> Spectrum:
    """Specialisation of :func:`threshold_spectrum` to a shared domination size."""
    k = code.uniform_k()
    if k is None:
        if code.d == 0:
            return threshold_spectrum(code)
        raise NonUniformK(f"domination sizes {code.k} are not all equal")
    d, m = code.d, code.m
    pairs: list[tuple[Fraction, int]] = [(Fraction(0), 1)]
    for i in range(2, d + 1):
        pairs.append((Fraction(d - i + 1), m[i - 1]))
    pairs.append((Fraction(d), m[0] - 1))
    for i in range(1, d + 1):
        m_sum = sum(m[:i])
        pairs.append((Fraction(m_sum, k) + d, 1))
        pairs.append((Fraction((k + 1) * m_sum, k) + k * (i - 1) + d - 1, k - 1))
    return Spectrum.from_pairs(pairs)


def phi(m: int, n: int) -> Fraction:
    """Nonzero eigenvalue of the complete m-uniform hypergraph on n vertices."""
    if m < 2:
        raise ValueError("uniformity must be at least 2")
    if m > n:
        raise UniformityExceedsOrder(f"m={m} exceeds n={n}")
    return Fraction(n, n - 1) * comb(n - 1, m - 1)


def complement_spectrum(spec: Spectrum, m: int) -> Spectrum:
    """Spectrum of the m-uniform complement: one zero kept, the rest reflected about phi."""
    _require_zero(spec)
    n = spec.n
    if n < 2:
        raise UniformityExceedsOrder("complement needs at least 2 vertices")
    top = phi(m, n)
    if spec.max() > top:
        raise SpectrumExceedsPhi(f"largest eigenvalue {spec.max()} exceeds phi_{m}({n}) = {top}")
    pairs = [(Fraction(0), 1)]
    for value, mult in spec.entries:
        if value == 0:
            mult -= 1
        pairs.append((top - value, mult))
    return Spectrum.from_pairs(pairs)


def union_spectrum(s1: Spectrum, s2: Spectrum) -> Spectrum:
    return Spectrum.from_pairs(list(s1.entries) + list(s2.entries))


# ---------------------------------------------------------------------------
# co-k-threshold expressions


@dataclass(frozen=True)
class Leaf:
    code: ThresholdCode
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise NonPositiveK("leaf k must be positive")
        uk = self.code.uniform_k()
        if self.code.d and uk is None:
            raise NonUniformK(f"leaf code {self.code} mixes domination sizes")
        if uk is not None and uk != self.k:
            raise MixedK(f"leaf code uses k={uk} but is tagged k={self.k}")


@dataclass(frozen=True)
class Complement:
    child: "CoExpr"


@dataclass(frozen=True)
class Union:
    left: "CoExpr"
    right: "CoExpr"


CoExpr = _U[Leaf, Complement, Union]


def leaves(expr: CoExpr):
    if isinstance(expr, Leaf):
        yield expr
    elif isinstance(expr, Complement):
        yield from leaves(expr.child)
    else:
        yield from leaves(expr.left)
        yield from leaves(expr.right)


def shared_k(expr: CoExpr) -> int:
    ks = {leaf.k for leaf in leaves(expr)}
    if len(ks) != 1:
        raise MixedK(f"leaves use different k values {sorted(ks)}")
    return ks.pop()


def vertex_count(expr: CoExpr) -> int:
    if isinstance(expr, Leaf):
        return expr.code.n
    if isinstance(expr, Complement):
        return vertex_count(expr.child)
    return vertex_count(expr.left) + vertex_count(expr.right)


def coexpr_spectrum(expr: CoExpr) -> Spectrum:
    k = shared_k(expr)

    def walk(e: CoExpr) -> Spectrum:
        if isinstance(e, Leaf):
            return k_threshold_spectrum(e.code)
        if isinstance(e, Complement):
            return complement_spectrum(walk(e.child), k + 1)
        return union_spectrum(walk(e.left), walk(e.right))

    spec = walk(expr)
    assert spec.n == vertex_count(expr)
    return spec


def build_coexpr(expr: CoExpr) -> Hypergraph:
    """Materialise the hypergraph an expression denotes."""
    k = shared_k(expr)

    def walk(e: CoExpr) -> Hypergraph:
        if isinstance(e, Leaf):
            return build_hypergraph(e.code)
        if isinstance(e, Complement):
            return complement(walk(e.child), k + 1)
        return disjoint_union(walk(e.left), walk(e.right))

    return walk(expr)


def parse_coexpr(text: str) -> CoExpr:
    """Parse ``T(code[; k=K])``, ``C(expr)`` and ``U(expr, expr)``.

    Leaf codes use the same token syntax as :func:`parse_code`. The ``k=``
    suffix is only needed on edgeless leaves when no other leaf fixes k.
    """
    src = text
    pos = 0

    def skip() -> None:
        nonlocal pos
        while pos < len(src) and src[pos].isspace():
            pos += 1

    def expect(ch: str) -> None:
        nonlocal pos
        skip()
        if pos >= len(src) or src[pos] != ch:
            found = src[pos] if pos < len(src) else "end of input"
            raise MalformedExpression(f"expected {ch!r} at offset {pos}, found {found!r}")
        pos += 1

    def node():
        nonlocal pos
        skip()
        if pos >= len(src):
            raise MalformedExpression("unexpected end of expression")
        tag = src[pos].upper()
        pos += 1
        expect("(")
        if tag == "T":
            close = src.find(")", pos)
            if close < 0:
                raise MalformedExpression("unterminated T(...)")
            body = src[pos:close]
            pos = close + 1
            code_text, _, k_text = body.partition(";")
            code = parse_code(code_text)
            k = None
            if k_text.strip():
                key, _, val = k_text.partition("=")
                if key.strip().lower() != "k" or not val.strip().isdigit():
                    raise MalformedExpression(f"bad leaf annotation {k_text!r}")
                k = int(val)
            return ("T", code, k)
        if tag == "C":
            child = node()
            expect(")")
            return ("C", child)
        if tag == "U":
            left = node()
            expect(",")
            right = node()
            expect(")")
            return ("U", left, right)
        raise MalformedExpression(f"unknown node tag {tag!r}")

    raw = node()
    skip()
    if pos != len(src):
        raise MalformedExpression(f"trailing input at offset {pos}")

    ks = set()

    def collect(r):
        if r[0] == "T":
            uk = r[1].uniform_k()
            if r[1].d and uk is None:
                raise NonUniformK(f"leaf code {r[1]} mixes domination sizes")
            for x in (uk, r[2]):
                if x is not None:
                    ks.add(x)
        else:
            for c in r[1:]:
                collect(c)

    collect(raw)
    if len(ks) > 1:
        raise MixedK(f"leaves use different k values {sorted(ks)}")
    if not ks:
        raise MalformedExpression("cannot infer k: annotate an edgeless leaf with ';k=K'")
    k = ks.pop()

    def convert(r) -> CoExpr:
        if r[0] == "T":
            return Leaf(r[1], k)
        if r[0] == "C":
            return Complement(convert(r[1]))
        return Union(convert(r[1]), convert(r[2]))

    return convert(raw)


def format_coexpr(expr: CoExpr) -> str:
    from .construct import serialize_code

    if isinstance(expr, Leaf):
        body = serialize_code(expr.code, runlength=True)
        if expr.code.d == 0:
            body += f"; k={expr.k}"
        return f"T({body})"
    if isinstance(expr, Complement):
        return f"C({format_coexpr(expr.child)})"
    return f"U({format_coexpr(expr.left)}, {format_coexpr(expr.right)})"
