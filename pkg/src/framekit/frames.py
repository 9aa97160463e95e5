"""Finite frame systems in C^d.

A frame here is an ordered family of m vectors spanning C^d, with frame
operator S f = sum_i <f, f_i> f_i and optimal bounds given by the extreme
eigenvalues of S.  The inner product is linear in the first argument and
conjugate-linear in the second: <u, v> = sum_k u_k conj(v_k).
"""

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import DimensionMismatch, NotAFrame

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class FrameSystem:
    """Ordered family of m complex vectors in a common ambient dimension.

    vectors is an (m, d) array; row i is the i-th frame vector.
    """

    dim: int
    vectors: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=np.complex128)
        if v.ndim != 2 or v.shape[1] != self.dim:
            raise DimensionMismatch(
                f"expected vectors of shape (m, {self.dim}), got {v.shape}")
        if v.shape[0] < 1:
            raise ValueError("a frame system needs at least one vector")
        if not np.all(np.isfinite(v)):
            raise ValueError("frame vectors must have finite entries")
        object.__setattr__(self, "vectors", v)

    @property
    def size(self) -> int:
        return self.vectors.shape[0]

    @classmethod
    def from_vectors(cls, vectors) -> "FrameSystem":
        v = np.atleast_2d(np.asarray(vectors, dtype=np.complex128))
        return cls(v.shape[1], v)

    @classmethod
    def standard_basis(cls, dim: int) -> "FrameSystem":
        return cls(dim, np.eye(dim, dtype=np.complex128))


@dataclass(frozen=True)
class FrameDiagnostics:
    """Computed frame operator, optimal bounds and frame predicates."""

    frame_operator: np.ndarray
    lower: float
    upper: float
    is_frame: bool
    is_riesz_basis: bool
    residuals: dict = field(default_factory=dict)


def analysis_matrix(frame: FrameSystem) -> np.ndarray:
    """The m x d matrix T with (T f)_i = <f, f_i>.

    Row i is the entrywise conjugate of the i-th frame vector, so T f
    produces the coefficient sequence of f against the family.
    """
    return frame.vectors.conj()


def synthesis_matrix(frame: FrameSystem) -> np.ndarray:
    """Adjoint of the analysis matrix; maps coefficients back to C^d."""
    return frame.vectors.T


def frame_operator(frame: FrameSystem) -> np.ndarray:
    """S = sum_i f_i f_i*, assembled from outer products.

    Hermitian positive semidefinite; trace(S) = sum_i ||f_i||^2.  The sum
    runs over the vectors in a canonical sort order, so permuting the
    family reproduces S bit for bit and the optimal bounds exactly.
    """
    v = frame.vectors
    order = np.lexsort(np.concatenate([v.real, v.imag], axis=1).T[::-1])
    v = v[order]
    return np.einsum("ia,ib->ab", v, v.conj())


def optimal_bounds(frame: FrameSystem, tol: float = DEFAULT_TOL) -> FrameDiagnostics:
    """Optimal frame bounds: extreme eigenvalues of the frame operator.

    is_frame requires lambda_min > tol * lambda_max; a Riesz basis is a
    frame with exactly dim vectors.
    """
    s = frame_operator(frame)
    dec = linalg.spectral_decompose_hermitian(s, tol=1e-8)
    lam_max = float(dec.eigenvalues[0])
    lam_min = float(dec.eigenvalues[-1])
    is_frame = lam_max > 0.0 and lam_min > tol * lam_max
    residuals = {
        "hermiticity": linalg.frobenius(s - s.conj().T),
        "eig_reconstruction": linalg.frobenius(dec.reconstruct() - s),
    }
    return FrameDiagnostics(
        frame_operator=s,
        lower=max(lam_min, 0.0),
        upper=max(lam_max, 0.0),
        is_frame=is_frame,
        is_riesz_basis=is_frame and frame.size == frame.dim,
        residuals=residuals,
    )


def canonical_dual(frame: FrameSystem, tol: float = DEFAULT_TOL) -> FrameSystem:
    """The dual family {S^{-1} f_i}, defined only for a frame.

    Reconstruction f = sum_i <f, S^{-1} f_i> f_i then holds for every f.
    """
    diag = optimal_bounds(frame, tol)
    if not diag.is_frame:
        raise NotAFrame(
            f"lower bound {diag.lower:.3e} does not clear tol * upper "
            f"bound {tol * diag.upper:.3e}")
    dual_vectors = np.linalg.solve(diag.frame_operator, frame.vectors.T).T
    return FrameSystem(frame.dim, dual_vectors)


def random_unit_vectors(dim: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """(count, dim) array of unit vectors with complex Gaussian direction."""
    z = rng.standard_normal((count, dim)) + 1j * rng.standard_normal((count, dim))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


@dataclass(frozen=True)
class InequalityReport:
    """Sampled check of A ||f||^2 <= sum_i |<f, f_i>|^2 <= B ||f||^2."""

    lower: float
    upper: float
    min_sum: float
    max_sum: float
    passed: bool
    trials: int
    seed: int
    witness_min: np.ndarray
    witness_max: np.ndarray


def check_frame_inequality(frame: FrameSystem, lower: float, upper: float,
                           trials: int = 100, seed: int = 0) -> InequalityReport:
    """Sample random unit vectors and test the two-sided frame inequality.

    Passes iff every sampled coefficient energy lies in
    [lower * (1 - 1e-9), upper * (1 + 1e-9)].  The extremal sampled
    vectors are reported as witnesses.
    """
    if lower > upper:
        raise ValueError(f"lower bound {lower} exceeds upper bound {upper}")
    rng = np.random.default_rng([seed, frame.dim, frame.size])
    t = analysis_matrix(frame)
    f = random_unit_vectors(frame.dim, trials, rng)
    sums = np.sum(np.abs(f @ t.T) ** 2, axis=1)
    i_min = int(np.argmin(sums))
    i_max = int(np.argmax(sums))
    passed = bool(sums[i_min] >= lower * (1.0 - 1e-9)
                  and sums[i_max] <= upper * (1.0 + 1e-9))
    return InequalityReport(
        lower=lower, upper=upper,
        min_sum=float(sums[i_min]), max_sum=float(sums[i_max]),
        passed=passed, trials=trials, seed=seed,
        witness_min=f[i_min], witness_max=f[i_max],
    )
