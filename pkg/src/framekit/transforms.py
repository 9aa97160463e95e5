"""Executable frame-transformation laws.

Each operation builds a transformed vector system from a frame and an
operator, computes the predicted frame operator and bound envelope, then
verifies the predictions against direct computation.  Results come back
as a TransformReport holding named boolean checks plus all residuals, so
callers can distinguish which part of a law held.

The laws covered: image of a frame under an operator (frame iff the
operator is surjective, with S' = L S L* and bounds A/||Ldag||^2,
B ||L||^2), the two-sided L/L* criterion for invertibility, sums
f_i + L f_i, idempotent perturbations f_i + a P f_i, recovery of the
original frame operator from a transformed one, Riesz basis transforms
T_L = T L*, frame-operator power sums, and two-frame combinations
L1 f_i + L2 g_i.
"""

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import (DimensionMismatch, HypothesisFailed, NotIdempotent,
                     NotRieszBasis)
from .frames import (FrameDiagnostics, FrameSystem, analysis_matrix,
                     frame_operator, optimal_bounds)

DEFAULT_TOL = 1e-10
ENVELOPE_SLACK = 1e-9


@dataclass
class TransformReport:
    """Outcome of checking one transformation law on one input."""

    claim: str
    transformed: FrameSystem | None = None
    predicted_operator: np.ndarray | None = None
    predicted_lower: float | None = None
    predicted_upper: float | None = None
    actual: FrameDiagnostics | None = None
    checks: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def apply_operator(frame: FrameSystem, op) -> FrameSystem:
    """The image system {L f_i}."""
    op = linalg.as_matrix(op)
    if op.shape[1] != frame.dim:
        raise DimensionMismatch(
            f"operator acts on C^{op.shape[1]}, frame lives in C^{frame.dim}")
    return FrameSystem(op.shape[0], frame.vectors @ op.T)


def _rel(diff: float, scale: float) -> float:
    return diff / scale if scale > 0.0 else diff


def _require_square(op, claim: str) -> np.ndarray:
    op = linalg.as_matrix(op)
    if op.shape[0] != op.shape[1]:
        raise DimensionMismatch(f"{claim} needs a square operator, got {op.shape}")
    return op


def _image_law(frame, op, claim, tol) -> TransformReport:
    """Shared engine: image frame iff surjective op, S' = L S L*, envelope."""
    op = linalg.as_matrix(op)
    s = frame_operator(frame)
    input_diag = optimal_bounds(frame, tol)
    transformed = apply_operator(frame, op)
    actual = optimal_bounds(transformed, tol)
    predicted = op @ s @ op.conj().T
    surjective = linalg.is_surjective(op, tol)

    op_resid = _rel(linalg.frobenius(actual.frame_operator - predicted),
                    linalg.frobenius(actual.frame_operator))
    report = TransformReport(
        claim=claim,
        transformed=transformed,
        predicted_operator=predicted,
        actual=actual,
        checks={
            "frame_iff_surjective": actual.is_frame == surjective,
            "operator_identity": op_resid <= 1e-10,
        },
        residuals={"operator_identity_rel": op_resid},
        details={"surjective": surjective, "input_is_frame": input_diag.is_frame,
                 "input_lower": input_diag.lower, "input_upper": input_diag.upper},
    )
    if input_diag.is_frame:
        pinv_n = linalg.pinv_norm(op, tol)
        norm = linalg.operator_norm(op)
        if pinv_n > 0.0:
            report.predicted_lower = input_diag.lower / pinv_n**2
        report.predicted_upper = input_diag.upper * norm**2
        if surjective:
            report.checks["lower_envelope"] = (
                actual.lower >= report.predicted_lower * (1.0 - ENVELOPE_SLACK))
            report.checks["upper_envelope"] = (
                actual.upper <= report.predicted_upper * (1.0 + ENVELOPE_SLACK))
            report.residuals["lower_envelope_slack"] = (
                actual.lower - report.predicted_lower)
            report.residuals["upper_envelope_slack"] = (
                report.predicted_upper - actual.upper)
    return report


def transform_by_operator(frame: FrameSystem, op, tol: float = DEFAULT_TOL) -> TransformReport:
    """Check the image law for {L f_i}.

    {L f_i} is a frame for the target space iff L is surjective; its frame
    operator is L S L*, and when L is surjective the optimal bounds lie in
    the envelope [A / ||Ldag||^2, B ||L||^2].
    """
    return _image_law(frame, op, "transform-by-operator", tol)


def sum_with_operator(frame: FrameSystem, op, tol: float = DEFAULT_TOL) -> TransformReport:
    """Check the image law for {f_i + L f_i}, i.e. the operator I + L."""
    op = _require_square(op, "sum_with_operator")
    eye = np.eye(op.shape[0], dtype=np.complex128)
    report = _image_law(frame, eye + op, "sum-with-operator", tol)
    return report


def two_sided_check(frame: FrameSystem, op, tol: float = DEFAULT_TOL) -> TransformReport:
    """Check that {L f_i} and {L* f_i} are both frames iff L is invertible.

    Also verifies both frame-operator identities L S L* and L* S L.
    """
    op = _require_square(op, "two_sided_check")
    s = frame_operator(frame)
    image = apply_operator(frame, op)
    adj_image = apply_operator(frame, op.conj().T)
    diag = optimal_bounds(image, tol)
    adj_diag = optimal_bounds(adj_image, tol)
    invertible = linalg.is_invertible(op, tol)

    predicted = op @ s @ op.conj().T
    adj_predicted = op.conj().T @ s @ op
    resid = _rel(linalg.frobenius(diag.frame_operator - predicted),
                 linalg.frobenius(diag.frame_operator))
    adj_resid = _rel(linalg.frobenius(adj_diag.frame_operator - adj_predicted),
                     linalg.frobenius(adj_diag.frame_operator))
    return TransformReport(
        claim="two-sided-check",
        transformed=image,
        predicted_operator=predicted,
        actual=diag,
        checks={
            "both_frames_iff_invertible":
                (diag.is_frame and adj_diag.is_frame) == invertible,
            "operator_identity": resid <= 1e-10,
            "adjoint_operator_identity": adj_resid <= 1e-10,
        },
        residuals={"operator_identity_rel": resid,
                   "adjoint_operator_identity_rel": adj_resid},
        details={"invertible": invertible,
                 "adjoint_transformed": adj_image,
                 "adjoint_actual": adj_diag},
    )


def projection_sum(frame: FrameSystem, proj, a: complex,
                   tol: float = DEFAULT_TOL) -> TransformReport:
    """Check the idempotent perturbation {f_i + a P f_i}, P^2 = P.

    For a != -1 the explicit inverse (I + aP)(I - a/(a+1) P) = I certifies
    I + aP invertible, so a frame stays a frame.  a = -1 is the excluded
    scalar: the report carries the observed behaviour instead of asserting.
    """
    proj = _require_square(proj, "projection_sum")
    d = proj.shape[0]
    idem_resid = linalg.frobenius(proj @ proj - proj)
    if idem_resid > tol * max(1.0, linalg.frobenius(proj)**2):
        raise NotIdempotent(f"||P^2 - P||_F = {idem_resid:.3e}")

    a = complex(a)
    eye = np.eye(d, dtype=np.complex128)
    perturbed = eye + a * proj
    transformed = apply_operator(frame, perturbed)
    actual = optimal_bounds(transformed, tol)
    input_is_frame = optimal_bounds(frame, tol).is_frame

    if a == -1:
        return TransformReport(
            claim="projection-sum-excluded",
            transformed=transformed,
            actual=actual,
            checks={},
            residuals={"idempotency": idem_resid},
            details={"excluded_scalar": True, "is_frame": actual.is_frame,
                     "input_is_frame": input_is_frame},
        )

    inverse = eye - (a / (a + 1)) * proj
    identity_resid = linalg.frobenius(perturbed @ inverse - eye)
    checks = {"inverse_identity": identity_resid <= tol * d}
    if input_is_frame:
        checks["frame_preserved"] = actual.is_frame
    return TransformReport(
        claim="projection-sum",
        transformed=transformed,
        actual=actual,
        checks=checks,
        residuals={"idempotency": idem_resid,
                   "inverse_identity": identity_resid},
        details={"excluded_scalar": False, "scalar": a,
                 "input_is_frame": input_is_frame},
    )


def recover_from_transforms(frame: FrameSystem, op,
                            tol: float = DEFAULT_TOL) -> TransformReport:
    """Recover the frame operator of {f_i} from the one of {L f_i}.

    Hypothesis: {L f_i} and {L* f_i} are both frames (then L is
    invertible).  Conclusion: {f_i} is a frame with frame operator
    L^{-1} S_L (L*)^{-1}, where S_L belongs to {L f_i}.
    """
    op = _require_square(op, "recover_from_transforms")
    image = apply_operator(frame, op)
    adj_image = apply_operator(frame, op.conj().T)
    if not optimal_bounds(image, tol).is_frame:
        raise HypothesisFailed("{L f_i} is not a frame")
    if not optimal_bounds(adj_image, tol).is_frame:
        raise HypothesisFailed("{L* f_i} is not a frame")

    s_image = frame_operator(image)
    op_inv = np.linalg.inv(op)
    recovered = op_inv @ s_image @ op_inv.conj().T
    actual = optimal_bounds(frame, tol)
    resid = _rel(linalg.frobenius(actual.frame_operator - recovered),
                 linalg.frobenius(actual.frame_operator))
    return TransformReport(
        claim="recover-from-transforms",
        transformed=image,
        predicted_operator=recovered,
        actual=actual,
        checks={
            "recovered_operator": resid <= 1e-9,
            "original_is_frame": actual.is_frame,
        },
        residuals={"recovered_operator_rel": resid},
    )


def riesz_transform_check(frame: FrameSystem, op,
                          tol: float = DEFAULT_TOL) -> TransformReport:
    """Check the Riesz basis transform law for L and for I + L.

    {L f_i} is a Riesz basis iff L is invertible; the analysis matrix of
    the image is T L*; when invertible, the new bounds lie inside
    [A / ||L^{-1}||^2, B ||L||^2].  The same checks run for I + L.
    """
    op = _require_square(op, "riesz_transform_check")
    input_diag = optimal_bounds(frame, tol)
    if frame.size != frame.dim or not input_diag.is_riesz_basis:
        raise NotRieszBasis(
            f"m={frame.size}, dim={frame.dim}, lower bound {input_diag.lower:.3e}")
    t = analysis_matrix(frame)
    eye = np.eye(frame.dim, dtype=np.complex128)

    report = TransformReport(claim="riesz-transform")
    for prefix, variant in (("", op), ("sum_", eye + op)):
        image = apply_operator(frame, variant)
        diag = optimal_bounds(image, tol)
        predicted_t = t @ variant.conj().T
        resid = _rel(linalg.frobenius(analysis_matrix(image) - predicted_t),
                     linalg.frobenius(predicted_t))
        invertible = linalg.is_invertible(variant, tol)
        report.checks[prefix + "riesz_iff_invertible"] = (
            diag.is_riesz_basis == invertible)
        report.checks[prefix + "analysis_identity"] = resid <= 1e-10
        report.residuals[prefix + "analysis_identity_rel"] = resid
        if invertible:
            inv_norm = linalg.pinv_norm(variant, tol)
            lower = input_diag.lower / inv_norm**2
            upper = input_diag.upper * linalg.operator_norm(variant)**2
            report.checks[prefix + "lower_envelope"] = (
                diag.lower >= lower * (1.0 - ENVELOPE_SLACK))
            report.checks[prefix + "upper_envelope"] = (
                diag.upper <= upper * (1.0 + ENVELOPE_SLACK))
            if prefix == "":
                report.predicted_lower = lower
                report.predicted_upper = upper
        if prefix == "":
            report.transformed = image
            report.actual = diag
            report.details["invertible"] = invertible
        else:
            report.details["sum_transformed"] = image
            report.details["sum_actual"] = diag
            report.details["sum_invertible"] = invertible
    return report


def power_sum(frame: FrameSystem, a: float, b: float,
              tol: float = DEFAULT_TOL) -> TransformReport:
    """Check that {S^a f_i + S^b g_i} is a Riesz basis, g_i the dual.

    With g_i = S^{-1} f_i the system equals {(S^a + S^{b-1}) f_i}; the
    operator factors as S^a (I + S^{b-a-1}), so it is invertible exactly
    when -1 avoids the spectrum of S^{b-a-1}.  For positive-definite S
    that spectrum is positive, so the condition holds automatically; it
    is still checked and recorded.
    """
    input_diag = optimal_bounds(frame, tol)
    if frame.size != frame.dim or not input_diag.is_riesz_basis:
        raise NotRieszBasis(
            f"m={frame.size}, dim={frame.dim}, lower bound {input_diag.lower:.3e}")
    s = input_diag.frame_operator
    combined = linalg.hermitian_power(s, a) + linalg.hermitian_power(s, b - 1.0)
    transformed = apply_operator(frame, combined)
    actual = optimal_bounds(transformed, tol)

    exponent = b - a - 1.0
    spectrum = linalg.spectral_decompose_hermitian(s, tol=1e-8).eigenvalues ** exponent
    dist_to_minus_one = float(np.min(np.abs(spectrum + 1.0)))
    spectrum_clear = dist_to_minus_one > 1e-9
    checks = {"spectrum_avoids_minus_one": spectrum_clear}
    if spectrum_clear:
        checks["riesz_basis"] = actual.is_riesz_basis
    return TransformReport(
        claim="power-sum",
        transformed=transformed,
        actual=actual,
        checks=checks,
        residuals={"spectrum_distance_to_minus_one": dist_to_minus_one},
        details={"exponent": exponent,
                 "spectrum_min": float(np.min(spectrum)),
                 "spectrum_max": float(np.max(spectrum))},
    )


def two_frame_sum(frame_a: FrameSystem, frame_b: FrameSystem, op_a, op_b,
                  tol: float = DEFAULT_TOL) -> TransformReport:
    """Check the combined system {L1 f_i + L2 g_i}.

    Its analysis matrix is T1 L1* + T2 L2*.  For m = dim the system is a
    Riesz basis iff that combined map is invertible.  For m > dim the
    report contrasts frame status with surjectivity of the combined map
    (the direction refuted by the shift counterexample).
    """
    if frame_a.dim != frame_b.dim or frame_a.size != frame_b.size:
        raise DimensionMismatch(
            f"frames have shapes {frame_a.vectors.shape} vs {frame_b.vectors.shape}")
    op_a = _require_square(op_a, "two_frame_sum")
    op_b = _require_square(op_b, "two_frame_sum")
    if op_a.shape[0] != frame_a.dim or op_b.shape[0] != frame_a.dim:
        raise DimensionMismatch("operators must act on the frames' space")

    vectors = frame_a.vectors @ op_a.T + frame_b.vectors @ op_b.T
    system = FrameSystem(frame_a.dim, vectors)
    actual = optimal_bounds(system, tol)

    combined = (analysis_matrix(frame_a) @ op_a.conj().T
                + analysis_matrix(frame_b) @ op_b.conj().T)
    resid = _rel(linalg.frobenius(analysis_matrix(system) - combined),
                 linalg.frobenius(combined))
    checks = {"analysis_identity": resid <= 1e-10}
    details = {"combined_map": combined}
    if frame_a.size == frame_a.dim:
        invertible = linalg.is_invertible(combined, tol)
        checks["riesz_iff_invertible"] = actual.is_riesz_basis == invertible
        details["combined_invertible"] = invertible
    else:
        surjective = linalg.is_surjective(combined, tol)
        details["combined_surjective"] = surjective
        details["is_frame"] = actual.is_frame
        details["converse_refuted"] = actual.is_frame and not surjective
    return TransformReport(
        claim="two-frame-sum",
        transformed=system,
        actual=actual,
        checks=checks,
        residuals={"analysis_identity_rel": resid},
        details=details,
    )
