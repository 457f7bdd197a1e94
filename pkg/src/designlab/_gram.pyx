# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for the pairwise-overlap power sum.

Serial with a fixed loop order: per-row partial sums are stored and reduced
with NumPy's pairwise summation, so the result is reproducible bit for bit.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"


def mean_abs_overlap_power(rows, int t):
    """(1/K^2) * sum_{i,j} |<rows_i, rows_j>|^(2t) over all ordered pairs."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=2, mode="c"] w = \
        np.ascontiguousarray(rows, dtype=np.complex128)
    cdef Py_ssize_t k = w.shape[0]
    cdef Py_ssize_t d = w.shape[1]
    if k == 0:
        raise ValueError("empty row matrix")
    cdef cnp.ndarray[cnp.float64_t, ndim=1] partials = np.zeros(k, dtype=np.float64)
    cdef double complex acc
    cdef double p2, val
    cdef double row_sum
    cdef Py_ssize_t i, j, m, e
    for i in range(k):
        row_sum = 0.0
        for j in range(i, k):
            acc = 0
            for m in range(d):
                acc = acc + w[i, m].conjugate() * w[j, m]
            p2 = acc.real * acc.real + acc.imag * acc.imag
            val = p2
            for e in range(t - 1):
                val = val * p2
            if j == i:
                row_sum += val
            else:
                row_sum += 2.0 * val
        partials[i] = row_sum
    return float(np.sum(partials)) / (k * k)
