"""Exact hypergraph Laplacian.

    (L f)(v) = sum over edges e containing v of 1/(|e|-1) * sum_{u in e} (f(v) - f(u))

Expanding the inner sum, the coefficient of f(v) is |e| - 1 per edge, so the
diagonal is the degree; each shared edge contributes -1/(|e|-1) off the diagonal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .core import Hypergraph, SquareMatrix
from .errors import DimensionMismatch


def laplacian_matrix(h: Hypergraph) -> SquareMatrix:
    n = h.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for e in h.edges:
        w = Fraction(1, len(e) - 1)
        for a, u in enumerate(e):
            rows[u][u] += 1
            for v in e[a + 1:]:
                rows[u][v] -= w
                rows[v][u] -= w
    return SquareMatrix(n, tuple(tuple(r) for r in rows))


def apply(h: Hypergraph, f: Sequence) -> list[Fraction]:
    """Evaluate ``L f`` edge by edge, without building the matrix."""
    if len(f) != h.n:
        raise DimensionMismatch(f"vector has length {len(f)}, hypergraph has {h.n} vertices")
    f = [Fraction(x) for x in f]
    out = [Fraction(0)] * h.n
    for e in h.edges:
        w = Fraction(1, len(e) - 1)
        s = sum((f[u] for u in e), Fraction(0))
        for v in e:
            # sum_{u in e} (f(v) - f(u)) = |e| f(v) - s
            out[v] += w * (len(e) * f[v] - s)
    return out


def trace(lm: SquareMatrix) -> Fraction:
    return sum((lm.entries[i][i] for i in range(lm.order)), Fraction(0))
