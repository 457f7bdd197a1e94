"""Pure-NumPy fallback for the pairwise-overlap kernel.

Same contract as the compiled extension in ``_gram.pyx``: block partial sums
are accumulated in a fixed order and reduced with NumPy's pairwise summation,
so results do not depend on BLAS thread count at the tolerance we certify.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"

_BLOCK = 1024


def mean_abs_overlap_power(rows: np.ndarray, t: int) -> float:
    """(1/K^2) * sum_{i,j} |<rows_i, rows_j>|^(2t) over all ordered pairs.

    ``rows`` is a (K, D) complex matrix; the inner product conjugates the
    first argument. Hermitian symmetry is exploited: blocks with i < j are
    computed once and doubled.
    """
    w = np.ascontiguousarray(rows, dtype=np.complex128)
    k = w.shape[0]
    if k == 0:
        raise ValueError("empty row matrix")
    wc = w.conj()
    partials = []
    for bi in range(0, k, _BLOCK):
        wi = wc[bi:bi + _BLOCK]
        for bj in range(bi, k, _BLOCK):
            g = wi @ w[bj:bj + _BLOCK].T
            p = np.abs(g) ** 2
            if t > 1:
                p = p**t
            if bj == bi:
                partials.append(p.sum())
            else:
                partials.append(2.0 * p.sum())
    return float(np.sum(np.array(partials))) / (k * k)
