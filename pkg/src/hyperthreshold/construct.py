"""Threshold codes and the hypergraphs they describe.

A code is read left to right starting from a single vertex: a ``0`` adds an
isolated vertex, a positive ``k`` adds ``k`` new vertices ``S`` together with
one edge ``S + {v}`` for every vertex ``v`` already present.
"""

from __future__ import annotations

import re
from itertools import combinations
from math import comb

import numpy as np

from .core import Hypergraph, ThresholdCode
from .errors import (
    EmptyInput,
    FirstTokenNonzero,
    MalformedCode,
    MalformedRunLength,
    NegativeToken,
    NonUniformK,
    NotUniform,
    UniformityExceedsOrder,
)

_TOKEN_SPLIT = re.compile(r"[\s,]+")
_RUN = re.compile(r"^(-?\d+)\^(.*)$")

# returned by is_uniform() for hypergraphs without edges
VACUOUS = "vacuous"


def _expand_tokens(text: str) -> list[int]:
    raw = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
    if not raw:
        raise EmptyInput("empty threshold code")
    out: list[int] = []
    for tok in raw:
        run = _RUN.match(tok)
        if run:
            base, reps = run.groups()
            if not reps.isdigit():
                raise MalformedRunLength(f"bad repeat count in {tok!r}")
            value, count = int(base), int(reps)
        elif "^" in tok:
            raise MalformedRunLength(f"bad run-length token {tok!r}")
        else:
            try:
                value, count = int(tok), 1
            except ValueError:
                raise MalformedCode(f"not an integer: {tok!r}") from None
        if value < 0:
            raise NegativeToken(f"negative token {tok!r}")
        out.extend([value] * count)
    if not out:
        raise EmptyInput("threshold code expands to nothing")
    return out


def parse_code(text: str) -> ThresholdCode:
    """Parse ``"0 3 0 3 0 0 3 3"`` or run-length ``"0^2 3"`` into a code."""
    tokens = _expand_tokens(text)
    if tokens[0] != 0:
        raise FirstTokenNonzero("a threshold code starts with the initial vertex 0")
    m: list[int] = []
    k: list[int] = []
    zeros = 0
    for t in tokens:
        if t == 0:
            zeros += 1
        else:
            m.append(zeros)
            k.append(t)
            zeros = 0
    if not k:
        return ThresholdCode((zeros,), ())
    if zeros:
        raise MalformedCode(
            "isolated vertices after the last domination cannot be encoded; "
            "use disjoint_union with an edgeless code instead"
        )
    return ThresholdCode(tuple(m), tuple(k))


def serialize_code(code: ThresholdCode, runlength: bool = False) -> str:
    parts: list[str] = []
    for i, m in enumerate(code.m):
        if runlength and m > 1:
            parts.append(f"0^{m}")
        else:
            parts.extend(["0"] * m)
        if i < code.d:
            parts.append(str(code.k[i]))
    return " ".join(parts)


def build_hypergraph(code: ThresholdCode) -> Hypergraph:
    """Replay the construction; ids follow creation order."""
    edges: list[tuple[int, ...]] = []
    n = 0
    for i, m in enumerate(code.m):
        n += m
        if i < code.d:
            dom = tuple(range(n, n + code.k[i]))
            edges.extend((v,) + dom for v in range(n))
            n += code.k[i]
    return Hypergraph(n, tuple(edges))


def expected_edge_count(code: ThresholdCode) -> int:
    total = 0
    present = 0
    for i, m in enumerate(code.m):
        present += m
        if i < code.d:
            total += present
            present += code.k[i]
    return total


def degree_sequence(h: Hypergraph) -> list[int]:
    return sorted(h.degrees(), reverse=True)


def k_threshold_degree(code: ThresholdCode, i: int) -> int:
    """Degree of a vertex added in the ``i``-th (1-based) domination of a k-threshold code."""
    k = code.uniform_k()
    if k is None:
        raise NonUniformK(f"domination sizes {code.k} are not all equal")
    if not 1 <= i <= code.d:
        raise IndexError(f"domination index {i} outside 1..{code.d}")
    return sum(code.m[:i]) + k * (i - 1) + (code.d - i)


def is_uniform(h: Hypergraph):
    """Common edge size, ``VACUOUS`` when there are no edges, otherwise None."""
    sizes = {len(e) for e in h.edges}
    if not sizes:
        return VACUOUS
    if len(sizes) == 1:
        return sizes.pop()
    return None


def complement(h: Hypergraph, m: int | None = None) -> Hypergraph:
    """All ``m``-subsets of the vertex set that are not edges of ``h``."""
    size = is_uniform(h)
    if size is None:
        raise NotUniform("complement is only defined for uniform hypergraphs")
    if m is None:
        if size == VACUOUS:
            raise NotUniform("edgeless hypergraph is uniform for every m; pass m explicitly")
        m = size
    elif size != VACUOUS and size != m:
        raise NotUniform(f"hypergraph is {size}-uniform, not {m}-uniform")
    if m < 2:
        raise NotUniform("uniformity must be at least 2")
    if m > h.n:
        raise UniformityExceedsOrder(f"m={m} exceeds n={h.n}")
    present = h.edge_set()
    edges = tuple(e for e in combinations(range(h.n), m) if e not in present)
    assert len(edges) == comb(h.n, m) - len(present)
    return Hypergraph(h.n, edges)


def disjoint_union(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    shift = h1.n
    shifted = tuple(tuple(v + shift for v in e) for e in h2.edges)
    return Hypergraph(h1.n + h2.n, h1.edges + shifted)


def _draw_code(rng: np.random.Generator, max_d, max_k, max_m, k_threshold, positive_m):
    d = int(rng.integers(1, max_d, endpoint=True))
    if k_threshold:
        k = [int(rng.integers(1, max_k, endpoint=True))] * d
    else:
        k = [int(x) for x in rng.integers(1, max_k, size=d, endpoint=True)]
    m = [int(rng.integers(1, max(1, max_m), endpoint=True))]
    low = 1 if positive_m else 0
    m += [int(x) for x in rng.integers(low, max(low, max_m), size=d - 1, endpoint=True)]
    return ThresholdCode(tuple(m), tuple(k))


def random_codes(seed: int, count: int, max_d: int, max_k: int, max_m: int, *,
                 k_threshold: bool = False, positive_m: bool = False) -> list[ThresholdCode]:
    """``count`` codes drawn from one PCG64 stream seeded with ``seed``.

    d is uniform on 1..max_d, each k_i on 1..max_k (one shared draw in
    k-threshold mode), m_1 on 1..max_m and later m_i on 0..max_m (1..max_m
    with ``positive_m``).
    """
    if min(max_d, max_k, max_m) < 1:
        raise ValueError("bounds must be at least 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    return [_draw_code(rng, max_d, max_k, max_m, k_threshold, positive_m) for _ in range(count)]


def random_code(seed: int, max_d: int, max_k: int, max_m: int, *,
                k_threshold: bool = False, positive_m: bool = False) -> ThresholdCode:
    return random_codes(seed, 1, max_d, max_k, max_m,
                        k_threshold=k_threshold, positive_m=positive_m)[0]


def to_edge_list(h: Hypergraph) -> str:
    lines = [f"{h.n} {len(h.edges)}"]
    lines += [" ".join(str(v) for v in e) for e in h.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Hypergraph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise EmptyInput("empty edge list")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError("edge list header must be 'n <edge_count>'")
    n, count = int(header[0]), int(header[1])
    edges = tuple(tuple(int(t) for t in ln.split()) for ln in lines[1:])
    if len(edges) != count:
        raise ValueError(f"header declares {count} edges, found {len(edges)}")
    return Hypergraph(n, edges)
