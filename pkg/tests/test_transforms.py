import numpy as np
import pytest

from framekit.errors import (DimensionMismatch, HypothesisFailed,
                             NotIdempotent, NotRieszBasis)
from framekit.frames import FrameSystem, frame_operator
from framekit.transforms import (power_sum, projection_sum,
                                 recover_from_transforms,
                                 riesz_transform_check, sum_with_operator,
                                 transform_by_operator, two_frame_sum,
                                 two_sided_check)

BASIS2 = FrameSystem.standard_basis(2)
REDUNDANT = FrameSystem.from_vectors([[1, 0], [1, 0], [0, 1]])


def random_frame(d, m, seed):
    rng = np.random.default_rng(seed)
    return FrameSystem(d, rng.standard_normal((m, d))
                       + 1j * rng.standard_normal((m, d)))


def controlled_operator(d, seed, sigmas=None):
    rng = np.random.default_rng(seed)
    q1, _ = np.linalg.qr(rng.standard_normal((d, d))
                         + 1j * rng.standard_normal((d, d)))
    q2, _ = np.linalg.qr(rng.standard_normal((d, d))
                         + 1j * rng.standard_normal((d, d)))
    if sigmas is None:
        sigmas = rng.uniform(0.5, 2.0, d)
    return (q1 * sigmas) @ q2.conj().T


class TestTransformByOperator:
    def test_scaling_doubles_bounds(self):
        rep = transform_by_operator(BASIS2, 2 * np.eye(2))
        assert rep.passed
        assert rep.actual.lower == pytest.approx(4)
        assert rep.actual.upper == pytest.approx(4)
        np.testing.assert_allclose(rep.actual.frame_operator, 4 * np.eye(2))

    def test_rank_deficient_image_is_not_frame(self):
        rep = transform_by_operator(BASIS2, np.diag([1.0, 0.0]))
        assert not rep.details["surjective"]
        assert not rep.actual.is_frame
        assert rep.checks["frame_iff_surjective"]

    def test_diagonal_envelope_is_tight(self):
        # direct assembly: images {e1, 2 e2} give S = diag(1, 4);
        # ||Ldag|| = 1, ||L|| = 2, so the envelope [1, 4] is attained
        rep = transform_by_operator(BASIS2, np.diag([1.0, 2.0]))
        assert rep.passed
        assert rep.predicted_lower == pytest.approx(1)
        assert rep.predicted_upper == pytest.approx(4)
        assert rep.actual.lower == pytest.approx(1)
        assert rep.actual.upper == pytest.approx(4)

    def test_truncated_shift_frame_without_invertibility(self):
        shift = np.array([[0, 1, 0], [0, 0, 1]], dtype=complex)
        rep = transform_by_operator(FrameSystem.standard_basis(3), shift)
        assert rep.actual.is_frame and rep.details["surjective"]
        assert rep.passed

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            transform_by_operator(BASIS2, np.eye(3))

    def test_seeded_random_law(self):
        for i in range(25):
            rng = np.random.default_rng(100 + i)
            d = int(rng.integers(2, 7))
            frame = random_frame(d, int(rng.integers(d, 2 * d + 1)), 200 + i)
            rep = transform_by_operator(frame, controlled_operator(d, 300 + i))
            assert rep.passed, rep.residuals


class TestTwoSided:
    def test_unitary(self):
        rng = np.random.default_rng(1)
        q, _ = np.linalg.qr(rng.standard_normal((2, 2))
                            + 1j * rng.standard_normal((2, 2)))
        rep = two_sided_check(REDUNDANT, q)
        assert rep.passed and rep.details["invertible"]

    def test_singular(self):
        rep = two_sided_check(REDUNDANT, np.diag([1.0, 0.0]))
        assert rep.passed and not rep.details["invertible"]
        assert not (rep.actual.is_frame and rep.details["adjoint_actual"].is_frame)

    def test_random_invertible_operators_match_predictions(self):
        for i in range(10):
            frame = random_frame(3, 5, 400 + i)
            rep = two_sided_check(frame, controlled_operator(3, 500 + i))
            assert rep.passed
            assert rep.residuals["operator_identity_rel"] <= 1e-10
            assert rep.residuals["adjoint_operator_identity_rel"] <= 1e-10


class TestSumWithOperator:
    def test_zero_operator_reduces_to_input(self):
        rep = sum_with_operator(REDUNDANT, np.zeros((2, 2)))
        assert rep.passed
        np.testing.assert_allclose(rep.actual.frame_operator,
                                   frame_operator(REDUNDANT))
        assert rep.predicted_lower == pytest.approx(1)
        assert rep.predicted_upper == pytest.approx(2)

    def test_minus_identity_kills_everything(self):
        rep = sum_with_operator(BASIS2, -np.eye(2))
        assert rep.passed and not rep.actual.is_frame

    def test_diagonal_example(self):
        # I + L = diag(2, 1/2): images {2 e1, e2/2} give S = diag(4, 1/4);
        # ||(I+L)dag|| = 2 and ||I+L|| = 2, envelope [1/4, 4] attained
        rep = sum_with_operator(BASIS2, np.diag([1.0, -0.5]))
        assert rep.passed
        np.testing.assert_allclose(rep.actual.frame_operator,
                                   np.diag([4.0, 0.25]))
        assert rep.predicted_lower == pytest.approx(0.25)
        assert rep.predicted_upper == pytest.approx(4)


class TestProjectionSum:
    def test_rank_one_projection_scalar_one(self):
        # (I+P)(I-P/2) = diag(2,1) diag(1/2,1) = I exactly; images {2e1, e2}
        # give S = diag(4, 1) with bounds (1, 4)
        rep = projection_sum(BASIS2, np.diag([1.0, 0.0]), 1)
        assert rep.passed
        assert rep.residuals["inverse_identity"] <= 1e-14
        assert rep.actual.lower == pytest.approx(1)
        assert rep.actual.upper == pytest.approx(4)

    def test_zero_scalar_is_identity_transform(self):
        rep = projection_sum(REDUNDANT, np.diag([1.0, 0.0]), 0)
        assert rep.passed
        np.testing.assert_array_equal(rep.transformed.vectors,
                                      REDUNDANT.vectors)

    def test_excluded_scalar_reports_instead_of_asserting(self):
        rep = projection_sum(BASIS2, np.diag([1.0, 0.0]), -1)
        assert rep.details["excluded_scalar"]
        assert not rep.details["is_frame"]  # killing e1 loses the frame
        assert rep.checks == {}

    def test_excluded_scalar_zero_projection_keeps_frame(self):
        rep = projection_sum(BASIS2, np.zeros((2, 2)), -1)
        assert rep.details["excluded_scalar"] and rep.details["is_frame"]

    def test_complex_scalar_and_oblique_projection(self):
        rng = np.random.default_rng(7)
        a = rng.standard_normal((3, 1)) + 1j * rng.standard_normal((3, 1))
        b = rng.standard_normal((1, 3)) + 1j * rng.standard_normal((1, 3))
        proj = a @ b / (b @ a)
        frame = random_frame(3, 4, 9)
        for scalar in (-0.5, 1, 2, 10, 1j):
            rep = projection_sum(frame, proj, scalar)
            assert rep.passed, (scalar, rep.residuals)

    def test_rejects_non_idempotent(self):
        with pytest.raises(NotIdempotent):
            projection_sum(BASIS2, np.array([[0.0, 1.0], [0.0, 0.0]]) + 1, 1)


class TestRecover:
    def test_identity_recovers_itself(self):
        rep = recover_from_transforms(REDUNDANT, np.eye(2))
        assert rep.passed
        np.testing.assert_allclose(rep.predicted_operator,
                                   frame_operator(REDUNDANT), atol=1e-12)

    def test_diagonal_example(self):
        # images {2e1, 2e1, e2} have S_L = diag(8, 1); conjugating back by
        # L^{-1} = diag(1/2, 1) recovers diag(2, 1)
        rep = recover_from_transforms(REDUNDANT, np.diag([2.0, 1.0]))
        assert rep.passed
        np.testing.assert_array_equal(
            frame_operator(rep.transformed), np.diag([8.0, 1.0]))
        np.testing.assert_allclose(rep.predicted_operator, np.diag([2.0, 1.0]),
                                   atol=1e-12)

    def test_random_invertible(self):
        for i in range(10):
            frame = random_frame(4, 6, 600 + i)
            rep = recover_from_transforms(frame, controlled_operator(4, 700 + i))
            assert rep.passed
            assert rep.residuals["recovered_operator_rel"] <= 1e-9

    def test_hypothesis_failure(self):
        with pytest.raises(HypothesisFailed):
            recover_from_transforms(REDUNDANT, np.diag([1.0, 0.0]))


class TestRieszTransform:
    def test_unitary_keeps_bounds(self):
        rng = np.random.default_rng(2)
        q, _ = np.linalg.qr(rng.standard_normal((3, 3))
                            + 1j * rng.standard_normal((3, 3)))
        rep = riesz_transform_check(FrameSystem.standard_basis(3), q)
        assert rep.passed
        assert rep.actual.lower == pytest.approx(1)
        assert rep.actual.upper == pytest.approx(1)

    def test_singular_operator_breaks_riesz(self):
        rep = riesz_transform_check(BASIS2, np.diag([1.0, 0.0]))
        assert rep.checks["riesz_iff_invertible"]
        assert not rep.actual.is_riesz_basis

    def test_diagonal_bounds(self):
        # images {e1, 3 e2}: bounds (1, 9); envelope [1/||L^-1||^2, 9] tight
        rep = riesz_transform_check(BASIS2, np.diag([1.0, 3.0]))
        assert rep.passed
        assert rep.actual.lower == pytest.approx(1)
        assert rep.actual.upper == pytest.approx(9)
        assert rep.predicted_lower == pytest.approx(1)
        assert rep.predicted_upper == pytest.approx(9)

    def test_sum_variant_included(self):
        rep = riesz_transform_check(BASIS2, np.diag([1.0, -0.5]))
        assert "sum_riesz_iff_invertible" in rep.checks
        assert "sum_analysis_identity" in rep.checks
        assert rep.passed

    def test_rejects_redundant_family(self):
        with pytest.raises(NotRieszBasis):
            riesz_transform_check(REDUNDANT, np.eye(2))


class TestPowerSum:
    def test_zero_one_doubles(self):
        # a=0, b=1: f_i + S S^{-1} f_i = 2 f_i, bounds (4A, 4B)
        rep = power_sum(BASIS2, 0.0, 1.0)
        assert rep.passed
        np.testing.assert_allclose(rep.transformed.vectors, 2 * np.eye(2),
                                   atol=1e-12)
        assert rep.actual.lower == pytest.approx(4)
        assert rep.actual.upper == pytest.approx(4)

    def test_zero_zero_on_basis(self):
        rep = power_sum(BASIS2, 0.0, 0.0)
        assert rep.passed
        np.testing.assert_allclose(rep.transformed.vectors, 2 * np.eye(2),
                                   atol=1e-12)

    def test_anisotropic_spectrum_recorded(self):
        # F = {sqrt(2) e1, e2/sqrt(2)}: S = diag(2, 1/2); with a=1, b=0 the
        # checked spectrum is that of S^{-2}, i.e. {1/4, 4}
        basis = FrameSystem.from_vectors([[np.sqrt(2), 0], [0, 1 / np.sqrt(2)]])
        rep = power_sum(basis, 1.0, 0.0)
        assert rep.passed
        assert rep.details["spectrum_min"] == pytest.approx(0.25)
        assert rep.details["spectrum_max"] == pytest.approx(4.0)
        assert rep.residuals["spectrum_distance_to_minus_one"] > 1.0

    def test_random_exponents(self):
        rng = np.random.default_rng(42)
        for i in range(20):
            basis = FrameSystem(3, controlled_operator(3, 800 + i))
            a, b = rng.uniform(-2, 2, 2)
            rep = power_sum(basis, float(a), float(b))
            assert rep.passed, (a, b, rep.checks)

    def test_rejects_non_riesz(self):
        with pytest.raises(NotRieszBasis):
            power_sum(REDUNDANT, 0.0, 1.0)


class TestTwoFrameSum:
    def test_identity_and_zero(self):
        rep = two_frame_sum(BASIS2, BASIS2, np.eye(2), np.zeros((2, 2)))
        assert rep.passed and rep.actual.is_riesz_basis
        np.testing.assert_allclose(rep.details["combined_map"], np.eye(2))

    def test_cancellation_gives_zero_system(self):
        neg = FrameSystem(2, -BASIS2.vectors)
        rep = two_frame_sum(BASIS2, neg, np.eye(2), np.eye(2))
        assert rep.passed
        assert not rep.actual.is_frame
        np.testing.assert_allclose(rep.details["combined_map"],
                                   np.zeros((2, 2)), atol=1e-14)

    def test_complementary_projections(self):
        # L1 = diag(1,0), L2 = diag(0,1) on two copies of the basis:
        # the system is {e1, e2} and the combined map is the identity
        rep = two_frame_sum(BASIS2, BASIS2, np.diag([1.0, 0.0]),
                            np.diag([0.0, 1.0]))
        assert rep.passed and rep.actual.is_riesz_basis
        np.testing.assert_allclose(rep.details["combined_map"], np.eye(2))

    def test_overcomplete_probe_refutes_converse(self):
        rep = two_frame_sum(REDUNDANT, REDUNDANT, np.eye(2), np.eye(2))
        assert rep.checks["analysis_identity"]
        assert rep.details["is_frame"]
        assert not rep.details["combined_surjective"]
        assert rep.details["converse_refuted"]

    def test_random_square_case(self):
        for i in range(15):
            fa = FrameSystem(3, controlled_operator(3, 900 + i))
            fb = FrameSystem(3, controlled_operator(3, 950 + i))
            rep = two_frame_sum(fa, fb, controlled_operator(3, 980 + i),
                                controlled_operator(3, 990 + i))
            assert rep.passed
            assert rep.residuals["analysis_identity_rel"] <= 1e-10

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            two_frame_sum(BASIS2, FrameSystem.standard_basis(3),
                          np.eye(2), np.eye(2))
