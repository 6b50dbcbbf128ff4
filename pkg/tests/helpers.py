"""Independent reference computations used by several test modules."""

from itertools import product

import numpy as np

from hyperthreshold.core import ThresholdCode


def numpy_eigs(h):
    """Laplacian eigenvalues by a float-only route (numpy, no Fractions, no Jacobi)."""
    lap = np.zeros((h.n, h.n))
    for e in h.edges:
        w = 1.0 / (len(e) - 1)
        for v in e:
            lap[v, v] += 1.0
            for u in e:
                if u != v:
                    lap[v, u] -= w
    if h.n == 0:
        return np.zeros(0)
    return np.sort(np.linalg.eigvalsh(lap))


def all_codes(n):
    """Every connected threshold code on exactly n vertices, plus the edgeless one."""
    out = [ThresholdCode((n,), ())]

    def rec(m, k, remaining):
        # choose next (m_i, k_i) with sum = remaining eventually
        for mi in range(0 if m else 1, remaining):
            for ki in range(1, remaining - mi + 1):
                m2, k2 = m + [mi], k + [ki]
                left = remaining - mi - ki
                if left == 0:
                    out.append(ThresholdCode(tuple(m2), tuple(k2)))
                else:
                    rec(m2, k2, left)

    rec([], [], n)
    return out


def random_coexpr(rng, k, depth, max_leaf_n=12):
    """Random co-k-threshold expression tree of at most ``depth`` internal levels."""
    from hyperthreshold.closedform import Complement, Leaf, Union

    if depth == 0 or rng.random() < 0.3:
        d = int(rng.integers(1, 4))
        m = [int(rng.integers(1, 4))] + [int(x) for x in rng.integers(0, 4, size=d - 1)]
        while sum(m) + k * len(m) > max_leaf_n and len(m) > 1:
            m.pop()
        if sum(m) + k * len(m) > max_leaf_n:
            m = [max(1, max_leaf_n - k)]
        return Leaf(ThresholdCode(tuple(m), (k,) * len(m)), k)
    if rng.random() < 0.4:
        return Complement(random_coexpr(rng, k, depth - 1, max_leaf_n))
    return Union(random_coexpr(rng, k, depth - 1, max_leaf_n),
                 random_coexpr(rng, k, depth - 1, max_leaf_n))
