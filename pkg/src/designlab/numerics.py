"""Dense complex linear algebra primitives.

Everything here is a pure function of its inputs. Arrays are 64-bit complex
throughout; the default absolute tolerance for equality-style checks is
``DEFAULT_ATOL`` and can be overridden per call.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import SizeGuardError

DEFAULT_ATOL = 1e-9

#: Supported Schatten exponents: trace, Hilbert-Schmidt, spectral.
SCHATTEN_PS = (1, 2, np.inf)

#: Moment-operator-sized objects are rejected beyond this dimension.
DIM_GUARD = 2**24


def as_vector(v) -> np.ndarray:
    """Coerce a DenseState or array-like to a 1-d complex array."""
    if isinstance(v, DenseState):
        return v.amplitudes
    return np.asarray(v, dtype=complex).reshape(-1)


def as_matrix(m) -> np.ndarray:
    """Coerce a DenseOperator or array-like to a 2-d complex array."""
    if isinstance(m, DenseOperator):
        return m.entries
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={a.ndim}")
    return a


@dataclass(frozen=True, eq=False)
class DenseState:
    """A complex state vector with its dimension.

    When ``normalized`` the 2-norm must be 1 within 1e-10.
    """

    amplitudes: np.ndarray
    normalized: bool = True

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        object.__setattr__(self, "amplitudes", a)
        if not np.all(np.isfinite(a.view(float))):
            raise ValueError("state vector has non-finite entries")
        if self.normalized and abs(np.linalg.norm(a) - 1.0) > 1e-10:
            raise ValueError("state vector flagged normalized but has norm "
                             f"{np.linalg.norm(a)!r}")

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]


@dataclass(frozen=True, eq=False)
class DenseOperator:
    """A complex matrix, optionally validated as unitary or as a density operator."""

    entries: np.ndarray
    unitary: bool = False
    density: bool = False

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=complex)
        if m.ndim != 2:
            raise ValueError("operator entries must be a 2-d array")
        object.__setattr__(self, "entries", m)
        if not np.all(np.isfinite(m.view(float))):
            raise ValueError("operator has non-finite entries")
        if self.unitary:
            if m.shape[0] != m.shape[1]:
                raise ValueError("unitary operator must be square")
            err = np.abs(m.conj().T @ m - np.eye(m.shape[0])).max()
            if err > 1e-10:
                raise ValueError(f"operator flagged unitary but ||U^H U - I||_max = {err:.3e}")
        if self.density:
            if np.abs(m - m.conj().T).max() > 1e-12:
                raise ValueError("density operator is not Hermitian within 1e-12")
            if abs(np.trace(m).real - 1.0) > 1e-10:
                raise ValueError("density operator trace differs from 1 beyond 1e-10")

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]


def schatten_norm(m, p) -> float:
    """Schatten p-norm (sum of p-th powers of singular values, to the 1/p).

    Only p in {1, 2, inf} is supported; p=inf returns the largest singular
    value. Computed from singular values so non-Hermitian differences are
    handled correctly.
    """
    if p not in SCHATTEN_PS:
        raise ValueError(f"unsupported Schatten exponent {p!r}; use one of {SCHATTEN_PS}")
    a = as_matrix(m)
    sv = np.linalg.svd(a, compute_uv=False)
    if p == 1:
        return float(sv.sum())
    if p == 2:
        return float(np.sqrt((sv**2).sum()))
    return float(sv[0]) if sv.size else 0.0


def tensor(*ops) -> np.ndarray:
    """Kronecker product of the given matrices, left to right."""
    out = np.asarray(ops[0], dtype=complex)
    for op in ops[1:]:
        out = np.kron(out, np.asarray(op, dtype=complex))
    return out


def kron_power(a, t: int) -> np.ndarray:
    """t-fold Kronecker power of a vector or matrix."""
    a = np.asarray(a, dtype=complex)
    out = a
    for _ in range(t - 1):
        out = np.kron(out, a)
    return out


def partial_trace(m, dims, keep) -> np.ndarray:
    """Trace out all subsystems not in ``keep``.

    ``dims`` lists the subsystem dimensions (product must equal the matrix
    size); ``keep`` is an iterable of subsystem indices to retain, and the
    result is ordered by ascending kept index.
    """
    a = as_matrix(m)
    dims = list(dims)
    n = len(dims)
    d_total = math.prod(dims)
    if a.shape != (d_total, d_total):
        raise ValueError(f"dims {dims} are incompatible with shape {a.shape}")
    keep = sorted(set(keep))
    if any(k < 0 or k >= n for k in keep):
        raise ValueError(f"keep indices {keep} out of range for {n} subsystems")
    drop = [i for i in range(n) if i not in keep]
    a = a.reshape(dims + dims)
    for i in reversed(drop):
        a = np.trace(a, axis1=i, axis2=i + a.ndim // 2)
    d_keep = math.prod(dims[k] for k in keep) if keep else 1
    return a.reshape(d_keep, d_keep)


def perm_operator(d: int, t: int, perm) -> np.ndarray:
    """Permutation operator on (C^d)^{x t} sending |i_1 .. i_t> to the tuple
    reordered so that slot k receives i_{perm^-1(k)}.

    ``perm`` is a length-t sequence with perm[k] = image of slot k. Satisfies
    the group law perm_operator(pi) @ perm_operator(sigma) ==
    perm_operator(compose(pi, sigma)) with compose(pi, sigma)[k] = pi[sigma[k]].
    """
    if t < 1 or d < 2:
        raise ValueError("need t >= 1 and d >= 2")
    if d**t > DIM_GUARD:
        raise SizeGuardError(f"d^t = {d**t} exceeds the dense-operator guard {DIM_GUARD}")
    perm = tuple(perm)
    if sorted(perm) != list(range(t)):
        raise ValueError(f"{perm!r} is not a permutation of 0..{t-1}")
    eye = np.eye(d**t, dtype=complex).reshape((d,) * t + (d,) * t)
    # Output axis perm[k] carries input axis k.
    inv = [0] * t
    for k, pk in enumerate(perm):
        inv[pk] = k
    axes = inv + list(range(t, 2 * t))
    return eye.transpose(axes).reshape(d**t, d**t)


def compose_perms(pi, sigma):
    """Composition pi after sigma: (pi o sigma)[k] = pi[sigma[k]]."""
    return tuple(pi[s] for s in sigma)


def symmetric_dim(d: int, t: int) -> int:
    """Dimension of the symmetric subspace of (C^d)^{x t}: C(d+t-1, t)."""
    return math.comb(d + t - 1, t)


def sym_projector(d: int, t: int) -> np.ndarray:
    """Projector onto the symmetric subspace: mean of all t! permutation operators."""
    if d**t > DIM_GUARD:
        raise SizeGuardError(f"d^t = {d**t} exceeds the dense-operator guard {DIM_GUARD}")
    acc = np.zeros((d**t, d**t), dtype=complex)
    count = 0
    for perm in itertools.permutations(range(t)):
        acc += perm_operator(d, t, perm)
        count += 1
    return acc / count


def orthonormal_span(vectors, atol: float = 1e-10):
    """Orthonormal basis of the span of the given vectors, plus its rank.

    Modified Gram-Schmidt with a second orthogonalization pass; vectors whose
    residual norm falls below ``atol`` are discarded as dependent. Returns
    (basis, rank) where basis is a (rank, dim) array.
    """
    vecs = [as_vector(v) for v in vectors]
    if not vecs:
        return np.zeros((0, 0), dtype=complex), 0
    dim = vecs[0].shape[0]
    if any(v.shape[0] != dim for v in vecs):
        raise ValueError("vectors must share a dimension")
    basis: list[np.ndarray] = []
    for v in vecs:
        w = v.astype(complex, copy=True)
        for _ in range(2):  # re-orthogonalize once for stability
            for b in basis:
                w = w - np.vdot(b, w) * b
        nrm = np.linalg.norm(w)
        if nrm >= atol:
            basis.append(w / nrm)
    if not basis:
        return np.zeros((0, dim), dtype=complex), 0
    return np.array(basis), len(basis)
