"""framekit: frame transformation laws, checked numerically and exactly.

A numpy library plus a CLI of reproducible verification suites covering:
finite frame systems and their operators (`frames`), dense complex linear
algebra (`linalg`), executable transformation laws (`transforms`), exact
shift-operator counterexamples on finitely-supported sequences
(`sparseseq`), exact piecewise-exponential constructions under modulation
and translation (`gabor_continuous`), and discrete Gabor lattices on Z_N
(`gabor_discrete`).
"""

from .errors import (DimensionMismatch, FramekitError, HypothesisFailed,
                     InputError, InvalidLattice, InvalidParams, NoConvergence,
                     NotAFrame, NotHermitian, NotIdempotent,
                     NotPositiveDefinite, NotRieszBasis)
from .frames import (FrameDiagnostics, FrameSystem, analysis_matrix,
                     canonical_dual, check_frame_inequality, frame_operator,
                     optimal_bounds, synthesis_matrix)
from .gabor_continuous import (PiecewiseExp, UnitPhase, apply_modulation,
                               apply_translation, build_witness,
                               collapse_report, commutation_phase,
                               inner_product, norm_sq, verify_factorization)
from .gabor_discrete import GaborSystemSpec, build_gabor_system, perturb_window
from .linalg import (SpectralData, SvdData, hermitian_power, is_invertible,
                     is_surjective, operator_norm, pseudo_inverse,
                     spectral_decompose_hermitian, svd)
from .sparseseq import (RationalComplex, ShiftOp, SparseSeq, apply_shift,
                        delta, shift_down, shift_up,
                        verify_shift_counterexample, verify_tlstar_obstruction)
from .suites import SuiteConfig, list_suites, run_suite
from .transforms import (TransformReport, power_sum, projection_sum,
                         recover_from_transforms, riesz_transform_check,
                         sum_with_operator, transform_by_operator,
                         two_frame_sum, two_sided_check)

__version__ = "0.1.0"

__all__ = [
    "DimensionMismatch", "FramekitError", "HypothesisFailed", "InputError",
    "InvalidLattice", "InvalidParams", "NoConvergence", "NotAFrame",
    "NotHermitian", "NotIdempotent", "NotPositiveDefinite", "NotRieszBasis",
    "FrameDiagnostics", "FrameSystem", "analysis_matrix", "canonical_dual",
    "check_frame_inequality", "frame_operator", "optimal_bounds",
    "synthesis_matrix", "PiecewiseExp", "UnitPhase", "apply_modulation",
    "apply_translation", "build_witness", "collapse_report",
    "commutation_phase", "inner_product", "norm_sq", "verify_factorization",
    "GaborSystemSpec", "build_gabor_system", "perturb_window", "SpectralData",
    "SvdData", "hermitian_power", "is_invertible", "is_surjective",
    "operator_norm", "pseudo_inverse", "spectral_decompose_hermitian", "svd",
    "RationalComplex", "ShiftOp", "SparseSeq", "apply_shift", "delta",
    "shift_down", "shift_up", "verify_shift_counterexample",
    "verify_tlstar_obstruction", "SuiteConfig", "list_suites", "run_suite",
    "TransformReport", "power_sum", "projection_sum",
    "recover_from_transforms", "riesz_transform_check", "sum_with_operator",
    "transform_by_operator", "two_frame_sum", "two_sided_check",
    "__version__",
]
