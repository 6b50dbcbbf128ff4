"""Ferrers diagrams of degree sequences and the degree-sequence route to the spectrum.

For a connected k-threshold hypergraph the degree sequence alone fixes the
construction code, and the spectrum can be read off the diagram's block widths
``D_i`` and column sums ``C_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .construct import build_hypergraph, degree_sequence, k_threshold_degree
from .core import Spectrum, ThresholdCode
from .errors import NegativeDegree, NoBlocks, RoundTripMismatch


@dataclass(frozen=True)
class FerrersDiagram:
    rows: tuple[int, ...]
    blocks: tuple[tuple[int, int], ...]  # (width, height), widths strictly decreasing
    colsums: tuple[int, ...]

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(w for w, _ in self.blocks)

    def width(self, i: int) -> int:
        """``D_i`` (1-based); 0 past the last block."""
        return self.blocks[i - 1][0] if 1 <= i <= len(self.blocks) else 0

    def colsum(self, j: int) -> int:
        """``C_j`` (1-based); 0 past the widest row."""
        return self.colsums[j - 1] if 1 <= j <= len(self.colsums) else 0

    def conjugate(self) -> "FerrersDiagram":
        return ferrers_from_degrees(self.colsums)


def ferrers_from_degrees(degrees: Sequence[int]) -> FerrersDiagram:
    rows = tuple(sorted((int(x) for x in degrees), reverse=True))
    if any(r < 0 for r in rows):
        raise NegativeDegree("degrees must be non-negative")
    blocks: list[tuple[int, int]] = []
    for r in rows:
        if r == 0:
            break
        if blocks and blocks[-1][0] == r:
            blocks[-1] = (r, blocks[-1][1] + 1)
        else:
            blocks.append((r, 1))
    width = rows[0] if rows else 0
    colsums = tuple(sum(1 for r in rows if r >= j) for j in range(1, width + 1))
    return FerrersDiagram(rows, tuple(blocks), colsums)


def domination_count(f: FerrersDiagram) -> int:
    """``min{s : D_s < s} - 1``."""
    if not f.blocks:
        raise NoBlocks("diagram has no boxes")
    s = 1
    while f.width(s) >= s:
        s += 1
    return s - 1


def _code_from_blocks(f: FerrersDiagram, n: int) -> tuple[ThresholdCode, int] | None:
    k = n - f.width(1)
    d = domination_count(f)
    if k < 1:
        return None
    m = [0] * d
    for i in range(1, d):
        m[d - i] = f.width(i) - f.width(i + 1) - k + 1
    dd = f.width(d)
    m[0] = 1 if dd == d else dd - f.width(d + 1) + 1
    if m[0] < 1 or any(x < 0 for x in m):
        return None
    return ThresholdCode(tuple(m), (k,) * d), k


def _code_by_peeling(degrees: Sequence[int], k: int) -> ThresholdCode | None:
    # Undo the construction from the end: a degree-0 vertex can only have been
    # added as an isolated vertex; otherwise the last step was a domination,
    # whose k vertices have degree (remaining - k) and touched everyone else once.
    degs = sorted(degrees, reverse=True)
    steps: list[int] = []
    while len(degs) > 1:
        if degs[-1] == 0:
            degs.pop()
            steps.append(0)
            continue
        target = len(degs) - k
        if target < 1 or len(degs) < k + 1 or degs[k - 1] != target or degs[0] != target:
            return None
        degs = sorted((x - 1 for x in degs[k:]), reverse=True)
        steps.append(k)
    if degs != [0] or not steps or steps[0] == 0:
        return None
    tokens = [0] + steps[::-1]
    m: list[int] = []
    zeros = 0
    for t in tokens:
        if t == 0:
            zeros += 1
        else:
            m.append(zeros)
            zeros = 0
    return ThresholdCode(tuple(m), (k,) * len(m))


def recover_code(degrees: Sequence[int]) -> tuple[ThresholdCode, int]:
    """Construction code and k of the connected k-threshold hypergraph with these degrees.

    k is the number of vertices not adjacent to the top row, ``n - D_1``. The
    block-width formulas are tried first; when blocks have merged (k = 1 with an
    empty isolated run) the construction is unwound step by step instead. The
    answer is always rebuilt and checked against the input.
    """
    f = ferrers_from_degrees(degrees)
    if not f.blocks:
        raise NoBlocks("degree sequence has no positive entries")
    target = list(f.rows)
    n = len(target)
    candidates = []
    found = _code_from_blocks(f, n)
    if found is not None:
        candidates.append(found[0])
    k = n - f.width(1)
    if k >= 1:
        peeled = _code_by_peeling(target, k)
        if peeled is not None:
            candidates.append(peeled)
    for code in candidates:
        if degree_sequence(build_hypergraph(code)) == target:
            return code, code.k[0]
    raise RoundTripMismatch(
        f"{list(degrees)} is not the degree sequence of a connected k-threshold hypergraph"
    )


def domination_widths(code: ThresholdCode) -> list[int]:
    """Degrees of the dominating vertices, newest domination first.

    These are the block widths ``D_1..D_d`` whenever no two blocks merge.
    """
    return [k_threshold_degree(code, code.d - i + 1) for i in range(1, code.d + 1)]


def ferrers_terms(degrees: Sequence[int], corrected: bool = True) -> list[tuple[Fraction, int]]:
    """(value, multiplicity) terms of the degree-sequence spectrum formula.

    With ``corrected=False`` the isolated-vertex families use multiplicity
    ``D_i - D_{i+1} - k``; those terms are returned unclipped, so their signed
    total shows how far the multiset falls short of ``n``.
    """
    code, k = recover_code(degrees)
    f = ferrers_from_degrees(degrees)
    d = code.d
    widths = domination_widths(code) + [0]

    def D(i: int) -> int:
        if i <= d:
            return widths[i - 1]
        below = [r for r in f.rows if r < widths[d - 1]]
        return below[0] if below else 0

    C = f.colsum
    bump = 1 if corrected else 0
    terms: list[tuple[Fraction, int]] = [(Fraction(0), 1)]
    for i in range(1, d):
        terms.append((Fraction(C(D(i)), k), D(i) - D(i + 1) - k + bump))
    if D(d) != d:
        terms.append((Fraction(C(D(d)), k), D(d) - D(d + 1)))
    for i in range(1, d + 1):
        terms.append((Fraction(C(i), k), 1))
    for i in range(1, d + 1):
        terms.append((Fraction((k + 1) * D(i) - i + 1, k), k - 1))
    return terms


def ferrers_spectrum(degrees: Sequence[int]) -> Spectrum:
    terms = ferrers_terms(degrees)
    assert all(mult >= 0 for _, mult in terms), terms
    return Spectrum.from_pairs(terms)


def uncorrected_total(degrees: Sequence[int]) -> int:
    """Signed multiplicity total using ``D_i - D_{i+1} - k`` (falls short of n)."""
    return sum(mult for _, mult in ferrers_terms(degrees, corrected=False))


def render_ascii(f: FerrersDiagram, glyph: str = "#") -> str:
    """Left-justified rows, each block's first row labelled with its width, column sums underneath."""
    lines: list[str] = []
    pad = f.rows[0] if f.rows else 0
    for block_no, (width, height) in enumerate(f.blocks, start=1):
        for h in range(height):
            row = (glyph * width).ljust(pad)
            if h == 0:
                row += f"  D{block_no}={width}"
            lines.append(row.rstrip())
    if f.colsums:
        lines.append("-" * pad)
        lines.append(" ".join(str(c) for c in f.colsums))
    return "\n".join(lines) + ("\n" if lines else "")
