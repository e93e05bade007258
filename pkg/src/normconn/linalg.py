"""Dense symmetric linear algebra used by every spectral computation.

Matrices are plain ``float64`` numpy arrays.  Symmetric inputs are validated
on entry rather than wrapped in a dedicated class.

The reference eigensolver is a cyclic Jacobi iteration.  Search loops that
evaluate thousands of small spectra call :func:`fast_eigenvalues` (LAPACK
``syevd`` through numpy) instead; the two are cross-checked in the tests.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    NoConvergenceError,
    NonFiniteError,
)

#: Tolerance for every eigenvalue comparison outside the solver itself.
EPS = 1e-9

#: Jacobi termination threshold on the off-diagonal Frobenius mass.
SOLVER_TOL = 1e-12

_MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    """Sorted eigenvalues of a symmetric matrix.

    ``residual`` is the largest off-diagonal magnitude left when the solver
    stopped.
    """

    values: np.ndarray
    residual: float

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]


def as_symmetric(M, name="matrix"):
    """Return ``M`` as a float array after checking it is square, finite and symmetric."""
    A = np.array(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatchError(f"{name} must be square, got shape {A.shape}")
    if A.shape[0] < 1:
        raise DimensionMismatchError(f"{name} must have order at least 1")
    if not np.all(np.isfinite(A)):
        raise NonFiniteError(f"{name} has non-finite entries")
    scale = max(1.0, float(np.max(np.abs(A))))
    if np.max(np.abs(A - A.T)) > 1e-12 * scale:
        raise ValueError(f"{name} is not symmetric")
    # Exact symmetry from here on.
    return 0.5 * (A + A.T)


def _off_mass(A):
    return float(np.linalg.norm(A - np.diag(np.diag(A))))


def jacobi_eigenvalues(M, tol=SOLVER_TOL, max_sweeps=_MAX_SWEEPS):
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    M : array_like, shape (n, n)
        Real symmetric matrix.
    tol : float
        Sweeps stop once the off-diagonal Frobenius mass drops below
        ``tol * max(1, ||M||_F)``.
    max_sweeps : int
        Iteration cap; exceeding it raises :class:`NoConvergenceError`.

    Returns
    -------
    Spectrum
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    A = as_symmetric(M)
    n = A.shape[0]
    threshold = tol * max(1.0, float(np.linalg.norm(A)))
    for _ in range(max_sweeps):
        if _off_mass(A) < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                diff = A[q, q] - A[p, p]
                if abs(apq) < 1e-150 * abs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = np.copysign(1.0, theta) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q]
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :]
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0
    else:
        if _off_mass(A) >= threshold:
            raise NoConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"(off-diagonal mass {_off_mass(A):.3e})"
            )
    off = A - np.diag(np.diag(A))
    residual = float(np.max(np.abs(off))) if n > 1 else 0.0
    return Spectrum(np.sort(np.diag(A)), residual)


def sym_eigenvalues(M, tol=SOLVER_TOL, method="jacobi"):
    """All eigenvalues of a symmetric matrix, sorted ascending.

    ``method="jacobi"`` runs the reference solver; ``method="lapack"`` defers
    to :func:`numpy.linalg.eigvalsh` and reports a zero residual.
    """
    if method == "jacobi":
        return jacobi_eigenvalues(M, tol=tol)
    if method == "lapack":
        return Spectrum(np.linalg.eigvalsh(as_symmetric(M)), 0.0)
    raise ValueError(f"unknown eigensolver {method!r}")


def fast_eigenvalues(M):
    """Sorted eigenvalues without validation, for hot loops on trusted input."""
    return np.linalg.eigvalsh(M)


def eigenvalue_k(M, k, method="jacobi"):
    """The k-th smallest eigenvalue (1-based, multiplicities counted)."""
    A = as_symmetric(M)
    n = A.shape[0]
    if not 1 <= k <= n:
        raise IndexOutOfRangeError(f"k={k} outside 1..{n}")
    return float(sym_eigenvalues(A, method=method).values[k - 1])


def congruence(M, S):
    """Return ``S.T @ M @ S``, symmetrised to remove rounding asymmetry."""
    A = as_symmetric(M)
    S = np.asarray(S, dtype=float)
    if S.shape != A.shape:
        raise DimensionMismatchError(f"S has shape {S.shape}, expected {A.shape}")
    if not np.all(np.isfinite(S)):
        raise NonFiniteError("S has non-finite entries")
    C = S.T @ A @ S
    return 0.5 * (C + C.T)


def kron(A, B):
    """Kronecker product; the (i, j) block is ``A[i, j] * B``."""
    A = np.atleast_2d(np.asarray(A, dtype=float))
    B = np.atleast_2d(np.asarray(B, dtype=float))
    if not (np.all(np.isfinite(A)) and np.all(np.isfinite(B))):
        raise NonFiniteError("kron operands must be finite")
    return np.kron(A, B)


def perfect_shuffle(d, n):
    """Permutation matrix ``P`` with ``P @ kron(B_i, L) @ P.T == kron(L, B_i)``.

    Index ``i*n + v`` (coordinate-major) is sent to ``v*d + i``
    (vertex-major), for ``0 <= i < d`` and ``0 <= v < n``.
    """
    if d < 1 or n < 1:
        raise ValueError("d and n must be positive")
    P = np.zeros((d * n, d * n))
    i, v = np.divmod(np.arange(d * n), n)
    P[v * d + i, i * n + v] = 1.0
    return P


def block_diag(*blocks):
    """Direct sum of square matrices."""
    size = sum(b.shape[0] for b in blocks)
    out = np.zeros((size, size))
    at = 0
    for b in blocks:
        k = b.shape[0]
        out[at:at + k, at:at + k] = b
        at += k
    return out


def spectral_norm(A):
    return float(np.linalg.norm(np.asarray(A, dtype=float), 2))


def kernel_dimension(values, eps=EPS):
    """Number of eigenvalues with magnitude below ``eps``."""
    return int(np.sum(np.abs(np.asarray(values)) < eps))
