"""Numeric cross-check: cyclic Jacobi eigensolver and spectrum comparison."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Spectrum, SquareMatrix
from .errors import CountMismatch, NoConvergence

OFF_TOL = 1e-12
MAX_SWEEPS = 100
COMPARE_TOL = 1e-8


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pairings covering every (p, q) once per sweep, n//2 disjoint pairs per round."""
    size = n + (n % 2)
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        ps, qs = [], []
        for a in range(size // 2):
            p, q = players[a], players[size - 1 - a]
            if p < n and q < n:
                ps.append(min(p, q))
                qs.append(max(p, q))
        rounds.append((np.array(ps, dtype=int), np.array(qs, dtype=int)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(a: np.ndarray) -> float:
    # summed directly; ||A||^2 - ||diag||^2 cancels down to ~sqrt(eps)
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def symmetric_eigenvalues(matrix, tol: float = OFF_TOL, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, ascending.

    Each sweep visits every off-diagonal pair once. Pairs within a round are
    disjoint, so their rotations commute and are applied together as a single
    orthogonal similarity. The matrix is scaled by its largest entry and the
    sweeps stop once the off-diagonal Frobenius norm drops below ``tol``.
    """
    if isinstance(matrix, SquareMatrix):
        a = matrix.to_numpy()
    else:
        a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ValueError("expected a non-empty square matrix")
    if not np.allclose(a, a.T, rtol=0, atol=1e-12 * max(1.0, np.abs(a).max())):
        raise ValueError("matrix is not symmetric")
    n = a.shape[0]
    scale = float(np.abs(a).max())
    if scale == 0.0:
        return np.zeros(n)
    a = (a + a.T) / (2 * scale)
    rounds = _round_robin(n)
    eye = np.eye(n)
    for _ in range(max_sweeps):
        if _off_norm(a) < tol:
            return np.sort(np.diag(a)) * scale
        for p, q in rounds:
            if p.size == 0:
                continue
            apq = a[p, q]
            active = apq != 0.0
            # a tiny apq can overflow theta to inf, which correctly yields t = 0
            with np.errstate(over="ignore"):
                theta = np.where(active, (a[q, q] - a[p, p]) / (2.0 * np.where(active, apq, 1.0)), 0.0)
                sign = np.where(theta >= 0.0, 1.0, -1.0)
                t = sign / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rot = eye.copy()
            rot[p, p] = c
            rot[q, q] = c
            rot[p, q] = s
            rot[q, p] = -s
            a = rot.T @ a @ rot
            a = (a + a.T) / 2
    if _off_norm(a) < tol:
        return np.sort(np.diag(a)) * scale
    raise NoConvergence(f"off-diagonal norm {_off_norm(a):.3e} after {max_sweeps} sweeps")


@dataclass(frozen=True)
class ComparisonReport:
    passed: bool
    worst_deviation: float
    worst_index: int
    first_mismatch: int | None
    tol: float

    def __str__(self) -> str:
        verdict = "pass" if self.passed else f"FAIL at index {self.first_mismatch}"
        return f"{verdict}: worst deviation {self.worst_deviation:.3e} at index {self.worst_index} (tol {self.tol:g})"


def compare_spectra(exact: Spectrum, numeric, tol: float = COMPARE_TOL) -> ComparisonReport:
    expected = exact.as_floats()
    got = np.sort(np.asarray(numeric, dtype=float))
    if expected.size != got.size:
        raise CountMismatch(f"exact spectrum has {expected.size} values, numeric has {got.size}")
    if expected.size == 0:
        return ComparisonReport(True, 0.0, -1, None, tol)
    dev = np.abs(expected - got)
    bad = np.nonzero(dev > tol)[0]
    worst = int(np.argmax(dev))
    return ComparisonReport(
        passed=bad.size == 0,
        worst_deviation=float(dev[worst]),
        worst_index=worst,
        first_mismatch=int(bad[0]) if bad.size else None,
        tol=tol,
    )
