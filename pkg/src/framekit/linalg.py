"""Dense complex linear algebra kernel.

Hermitian spectra, singular values, Moore-Penrose pseudo-inverse, operator
norm, numerical rank/surjectivity and Hermitian matrix powers, all with
scale-free tolerances (relative to the largest singular value or
eigenvalue).  Backed by LAPACK through numpy; intended for desk-scale
matrices (d <= 512), not large sparse problems.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotHermitian, NotPositiveDefinite

DEFAULT_TOL = 1e-10


def as_matrix(a) -> np.ndarray:
    """Coerce input to a 2-D complex128 array with finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def frobenius(a) -> float:
    return float(np.linalg.norm(a, "fro"))


@dataclass(frozen=True)
class SpectralData:
    """Eigendecomposition A = U diag(eigenvalues) U* of a Hermitian matrix.

    eigenvalues are real and sorted descending; eigenvectors holds the
    matching unitary U column by column.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        u = self.eigenvectors
        return (u * self.eigenvalues) @ u.conj().T


@dataclass(frozen=True)
class SvdData:
    """Singular value decomposition A = left diag(s) right*.

    singular_values are nonnegative, sorted descending; left (m x m) and
    right (n x n) are unitary.  The largest singular value equals the
    operator norm of A.
    """

    singular_values: np.ndarray
    left: np.ndarray
    right: np.ndarray

    def reconstruct(self) -> np.ndarray:
        m = self.left.shape[0]
        n = self.right.shape[0]
        sigma = np.zeros((m, n), dtype=np.complex128)
        k = len(self.singular_values)
        sigma[:k, :k] = np.diag(self.singular_values)
        return self.left @ sigma @ self.right.conj().T


def spectral_decompose_hermitian(a, tol: float = DEFAULT_TOL) -> SpectralData:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    Parameters
    ----------
    a : array_like, square
        Matrix to decompose.  Must satisfy ||a - a*||_F <= tol * ||a||_F.
    tol : float
        Relative Hermiticity tolerance.

    Raises
    ------
    NotHermitian
        If the Hermiticity precondition fails.
    NoConvergence
        If the underlying eigensolver does not converge.
    """
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise NotHermitian(f"matrix is {m.shape[0]}x{m.shape[1]}, not square")
    scale = frobenius(m)
    if frobenius(m - m.conj().T) > tol * max(scale, 1e-300):
        raise NotHermitian("||A - A*||_F exceeds the Hermiticity tolerance")
    try:
        evals, evecs = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NoConvergence(str(exc)) from exc
    order = np.argsort(evals)[::-1]
    return SpectralData(np.ascontiguousarray(evals[order]),
                        np.ascontiguousarray(evecs[:, order]))


def svd(a) -> SvdData:
    """Full singular value decomposition with unitary factors."""
    m = as_matrix(a)
    try:
        u, s, vh = np.linalg.svd(m, full_matrices=True)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NoConvergence(str(exc)) from exc
    return SvdData(s, u, vh.conj().T)


def operator_norm(a) -> float:
    """Largest singular value (spectral norm)."""
    m = as_matrix(a)
    if m.size == 0:
        return 0.0
    return float(np.linalg.svd(m, compute_uv=False)[0])


def singular_values(a) -> np.ndarray:
    return np.linalg.svd(as_matrix(a), compute_uv=False)


def pseudo_inverse(a, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose pseudo-inverse with a relative rank threshold.

    Singular values below tol * sigma_max are treated as exact zeros, so
    the zero matrix maps to the zero matrix.  The output satisfies the
    four Penrose identities to rounding accuracy.
    """
    if not 0.0 < tol < 1.0:
        raise ValueError(f"tol must lie in (0, 1), got {tol}")
    m = as_matrix(a)
    u, s, vh = np.linalg.svd(m, full_matrices=False)
    if s.size == 0 or s[0] == 0.0:
        return np.zeros((m.shape[1], m.shape[0]), dtype=np.complex128)
    inv = np.where(s > tol * s[0], 1.0 / np.where(s > 0, s, 1.0), 0.0)
    return (vh.conj().T * inv) @ u.conj().T


def pinv_norm(a, tol: float = DEFAULT_TOL) -> float:
    """Operator norm of the pseudo-inverse: 1 / (smallest retained sigma)."""
    s = singular_values(a)
    if s.size == 0 or s[0] == 0.0:
        return 0.0
    kept = s[s > tol * s[0]]
    return float(1.0 / kept[-1])


def numerical_rank(a, tol: float = DEFAULT_TOL) -> int:
    s = singular_values(a)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


def is_surjective(a, tol: float = DEFAULT_TOL) -> bool:
    """True iff the numerical row rank equals the number of rows.

    Equivalently sigma_rows > tol * sigma_1 (with sigma_1 > 0); for a
    square matrix this is invertibility.
    """
    m = as_matrix(a)
    return numerical_rank(m, tol) == m.shape[0]


def is_invertible(a, tol: float = DEFAULT_TOL) -> bool:
    m = as_matrix(a)
    return m.shape[0] == m.shape[1] and is_surjective(m, tol)


def hermitian_power(a, alpha: float, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Real power A^alpha of a Hermitian positive-definite matrix.

    Computed as U diag(lambda^alpha) U*.  Requires every eigenvalue to
    exceed tol * lambda_max; raises NotPositiveDefinite otherwise.
    alpha = 0 returns the identity.
    """
    dec = spectral_decompose_hermitian(a, tol=max(tol, 1e-10))
    lam = dec.eigenvalues
    if lam.size == 0:
        raise NotPositiveDefinite("empty matrix")
    lam_max = lam[0]
    if lam_max <= 0.0 or lam[-1] <= tol * lam_max:
        raise NotPositiveDefinite(
            f"eigenvalues in [{lam[-1]:.3e}, {lam_max:.3e}] are not "
            f"uniformly positive at relative tolerance {tol:.1e}")
    u = dec.eigenvectors
    return (u * lam**alpha) @ u.conj().T
