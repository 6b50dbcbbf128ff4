"""Shared value types: exact rationals, hypergraphs, threshold codes, spectra."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import MalformedCode

# Python's Fraction is arbitrary precision and always stored in lowest terms
# with a positive denominator, which is exactly the contract we need.
Rational = Fraction


def fmt_rational(x: Fraction) -> str:
    """``"num/den"``, or just ``"num"`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True)
class Hypergraph:
    """Vertices are ``0..n-1``; edges are strictly ascending id tuples."""

    n: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = tuple(tuple(sorted(e)) for e in self.edges)
        seen = set()
        for e in edges:
            if len(e) < 2:
                raise ValueError(f"edge {e} has fewer than 2 vertices")
            if len(set(e)) != len(e):
                raise ValueError(f"edge {e} repeats a vertex")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"edge {e} out of range for n={self.n}")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", edges)

    def degrees(self) -> list[int]:
        """Degree of each vertex, indexed by vertex id."""
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def edge_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.edges)


@dataclass(frozen=True)
class ThresholdCode:
    """Construction string ``0^{m_1} k_1 0^{m_2} k_2 ... 0^{m_d} k_d``.

    ``m[i]`` isolated vertices are added before the ``i``-th domination, which
    adds ``k[i]`` new vertices. The edgeless code ``0^{m}`` is ``m=(m,), k=()``.
    """

    m: tuple[int, ...]
    k: tuple[int, ...] = ()

    def __post_init__(self):
        m = tuple(int(x) for x in self.m)
        k = tuple(int(x) for x in self.k)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "k", k)
        if not m:
            raise MalformedCode("code needs at least the initial vertex")
        if k and len(m) != len(k):
            raise MalformedCode(f"len(m)={len(m)} but len(k)={len(k)}")
        if not k and len(m) != 1:
            raise MalformedCode("a code without dominations has a single m entry")
        if m[0] < 1:
            raise MalformedCode("m_1 must be at least 1")
        if any(x < 0 for x in m):
            raise MalformedCode("m_i must be non-negative")
        if any(x < 1 for x in k):
            raise MalformedCode("k_i must be positive")

    @property
    def d(self) -> int:
        return len(self.k)

    @property
    def n(self) -> int:
        return sum(self.m) + sum(self.k)

    def uniform_k(self) -> int | None:
        """The shared domination size, or None if sizes differ or d = 0."""
        if self.k and len(set(self.k)) == 1:
            return self.k[0]
        return None

    def __str__(self) -> str:
        from .construct import serialize_code

        return serialize_code(self)


@dataclass(frozen=True)
class Spectrum:
    """Multiset of exact eigenvalues as ascending ``(value, multiplicity)`` pairs."""

    entries: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self):
        prev = None
        for value, mult in self.entries:
            if mult < 1:
                raise ValueError("multiplicities must be positive")
            if prev is not None and value <= prev:
                raise ValueError("values must be strictly ascending")
            prev = value

    @classmethod
    def from_values(cls, values: Iterable) -> "Spectrum":
        counts = Counter(Fraction(v) for v in values)
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[object, int]]) -> "Spectrum":
        """Build from (value, multiplicity) pairs; non-positive multiplicities are dropped."""
        counts: Counter = Counter()
        for value, mult in pairs:
            if mult > 0:
                counts[Fraction(value)] += mult
        return cls(tuple(sorted(counts.items())))

    @property
    def n(self) -> int:
        return sum(m for _, m in self.entries)

    def values(self) -> list[Fraction]:
        """Ascending expansion with repeats."""
        out: list[Fraction] = []
        for value, mult in self.entries:
            out.extend([value] * mult)
        return out

    def multiplicity(self, value) -> int:
        value = Fraction(value)
        for v, m in self.entries:
            if v == value:
                return m
        return 0

    def total(self) -> Fraction:
        return sum((v * m for v, m in self.entries), Fraction(0))

    def max(self) -> Fraction:
        return self.entries[-1][0]

    def as_floats(self) -> np.ndarray:
        return np.array([float(v) for v in self.values()], dtype=float)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return "{" + ", ".join(fmt_rational(v) for v in self.values()) + "}"


def spectrum_from_multiset(values: Sequence) -> Spectrum:
    return Spectrum.from_values(values)


@dataclass(frozen=True)
class SquareMatrix:
    """Dense symmetric matrix of exact rationals."""

    order: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.order or any(len(r) != self.order for r in self.entries):
            raise ValueError("entries must be order x order")
        for i in range(self.order):
            for j in range(i + 1, self.order):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i}, {j})")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row_sums(self) -> list[Fraction]:
        return [sum(row, Fraction(0)) for row in self.entries]

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries], dtype=float)

    def to_csv(self) -> str:
        return "\n".join(",".join(fmt_rational(x) for x in row) for row in self.entries) + "\n"


LaplacianMatrix = SquareMatrix
