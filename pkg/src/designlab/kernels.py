"""Hot-kernel selection: compiled extension if available, NumPy fallback otherwise.

Set ``DESIGNLAB_PURE_PYTHON=1`` to force the fallback (used by the benchmark
and by tests that compare the two paths).
"""

from __future__ import annotations

import os

from . import _gram_py

if os.environ.get("DESIGNLAB_PURE_PYTHON"):
    _impl = _gram_py
else:
    try:
        from . import _gram as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _gram_py

BACKEND: str = _impl.BACKEND


def mean_abs_overlap_power(rows, t: int) -> float:
    """Mean of |<r_i, r_j>|^(2t) over all ordered row pairs of ``rows``."""
    if t < 1:
        raise ValueError("degree t must be a positive integer")
    return _impl.mean_abs_overlap_power(rows, int(t))


def backends():
    """All importable kernel backends, for benchmarking and cross-checks."""
    found = {_gram_py.BACKEND: _gram_py}
    try:
        from . import _gram
        found[_gram.BACKEND] = _gram
    except ImportError:
        pass
    return found
