"""Exception types raised across framekit."""


class FramekitError(Exception):
    """Base class for all framekit errors."""


class NotHermitian(FramekitError):
    """Matrix fails the Hermitian precondition."""


class NoConvergence(FramekitError):
    """An eigenvalue/SVD iteration failed to converge."""


class NotPositiveDefinite(FramekitError):
    """Hermitian matrix has an eigenvalue at or below the rank threshold."""


class NotAFrame(FramekitError):
    """Vector system does not satisfy a positive lower frame bound."""


class NotRieszBasis(FramekitError):
    """System is not a Riesz basis (m != dim or synthesis map singular)."""


class NotIdempotent(FramekitError):
    """Operator fails the P^2 = P precondition."""


class DimensionMismatch(FramekitError):
    """Operator/frame shapes are incompatible."""


class HypothesisFailed(FramekitError):
    """A stated hypothesis of the law under test does not hold for the input."""


class InvalidLattice(FramekitError):
    """Discrete Gabor lattice steps must divide the modulus."""


class InvalidParams(FramekitError):
    """Construction parameters outside their admissible range."""


class InputError(FramekitError):
    """Malformed JSON input or a violated type invariant."""
