import numpy as np
import pytest

from framekit.errors import NotAFrame
from framekit.frames import (FrameSystem, analysis_matrix, canonical_dual,
                             check_frame_inequality, frame_operator,
                             optimal_bounds)

REDUNDANT = FrameSystem.from_vectors([[1, 0], [1, 0], [0, 1]])


def random_frame(d, m, seed):
    rng = np.random.default_rng(seed)
    return FrameSystem(d, rng.standard_normal((m, d))
                       + 1j * rng.standard_normal((m, d)))


class TestAnalysisMatrix:
    def test_standard_basis(self):
        np.testing.assert_array_equal(
            analysis_matrix(FrameSystem.standard_basis(2)), np.eye(2))

    def test_redundant_family(self):
        np.testing.assert_array_equal(analysis_matrix(REDUNDANT),
                                      [[1, 0], [1, 0], [0, 1]])

    def test_rows_are_conjugated(self):
        f = FrameSystem.from_vectors([[1j, 0]])
        np.testing.assert_array_equal(analysis_matrix(f), [[-1j, 0]])
        # so (T f)_i = <f, f_i> with <u, v> = sum u_k conj(v_k)
        vec = np.array([1.0, 0.0])
        assert analysis_matrix(f) @ vec == pytest.approx(-1j)

    def test_gram_route_matches_outer_product_route(self):
        f = random_frame(3, 7, 2)
        t = analysis_matrix(f)
        s = frame_operator(f)
        assert (np.linalg.norm(t.conj().T @ t - s, "fro")
                <= 1e-12 * np.linalg.norm(s, "fro"))


class TestFrameOperator:
    def test_orthonormal_basis(self):
        np.testing.assert_allclose(
            frame_operator(FrameSystem.standard_basis(4)), np.eye(4))

    def test_redundant_family(self):
        # direct 2x2 assembly: e1 e1* + e1 e1* + e2 e2* = diag(2, 1)
        np.testing.assert_array_equal(frame_operator(REDUNDANT),
                                      np.diag([2.0, 1.0]))

    def test_mercedes_benz(self):
        mb = FrameSystem.from_vectors([
            [0, 1],
            [-np.sqrt(3) / 2, -0.5],
            [np.sqrt(3) / 2, -0.5],
        ])
        # oracle: explicit outer-product assembly
        target = sum(np.outer(v, v.conj()) for v in mb.vectors)
        np.testing.assert_allclose(target, 1.5 * np.eye(2), atol=1e-15)
        np.testing.assert_allclose(frame_operator(mb), 1.5 * np.eye(2),
                                   atol=1e-15)

    def test_trace_is_total_energy(self):
        f = random_frame(4, 9, 5)
        energy = float(np.sum(np.abs(f.vectors) ** 2))
        assert np.trace(frame_operator(f)).real == pytest.approx(energy)

    def test_quadratic_form_matches_coefficient_energy(self):
        f = random_frame(3, 6, 8)
        s = frame_operator(f)
        rng = np.random.default_rng(13)
        for _ in range(20):
            z = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            lhs = np.vdot(z, s @ z).real  # <Sf, f> with vdot conjugating left
            rhs = float(np.sum(np.abs(analysis_matrix(f) @ z) ** 2))
            assert lhs == pytest.approx(rhs, rel=1e-10)


class TestOptimalBounds:
    def test_orthonormal_basis(self):
        d = optimal_bounds(FrameSystem.standard_basis(3))
        assert d.lower == pytest.approx(1) and d.upper == pytest.approx(1)
        assert d.is_frame and d.is_riesz_basis

    def test_redundant_family(self):
        # eigenvalues of diag(2, 1)
        d = optimal_bounds(REDUNDANT)
        assert d.lower == pytest.approx(1) and d.upper == pytest.approx(2)
        assert d.is_frame and not d.is_riesz_basis

    def test_rank_deficient_family(self):
        d = optimal_bounds(FrameSystem(2, np.array([[1.0, 0.0]])))
        assert not d.is_frame and not d.is_riesz_basis
        assert d.lower <= 1e-12

    def test_permutation_invariance_exact(self):
        f = random_frame(3, 8, 21)
        rng = np.random.default_rng(0)
        base = optimal_bounds(f)
        for _ in range(10):
            g = FrameSystem(3, f.vectors[rng.permutation(8)])
            d = optimal_bounds(g)
            assert d.lower == base.lower and d.upper == base.upper


class TestCanonicalDual:
    def test_orthonormal_basis_self_dual(self):
        basis = FrameSystem.standard_basis(3)
        np.testing.assert_allclose(canonical_dual(basis).vectors,
                                   basis.vectors, atol=1e-14)

    def test_redundant_family(self):
        # S^{-1} = diag(1/2, 1)
        dual = canonical_dual(REDUNDANT)
        np.testing.assert_allclose(dual.vectors,
                                   [[0.5, 0], [0.5, 0], [0, 1]], atol=1e-14)

    def test_reconstruction_both_ways(self):
        f = random_frame(4, 7, 3)
        dual = canonical_dual(f)
        t, td = analysis_matrix(f), analysis_matrix(dual)
        rng = np.random.default_rng(4)
        for _ in range(100):
            z = rng.standard_normal(4) + 1j * rng.standard_normal(4)
            via_dual_coeff = f.vectors.T @ (td @ z)
            via_dual_synth = dual.vectors.T @ (t @ z)
            assert np.linalg.norm(via_dual_coeff - z) <= 1e-9 * np.linalg.norm(z)
            assert np.linalg.norm(via_dual_synth - z) <= 1e-9 * np.linalg.norm(z)

    def test_rejects_non_frame(self):
        with pytest.raises(NotAFrame):
            canonical_dual(FrameSystem(2, np.array([[1.0, 0.0]])))


class TestFrameInequality:
    def test_orthonormal_tight(self):
        rep = check_frame_inequality(FrameSystem.standard_basis(3), 1, 1,
                                     trials=50, seed=1)
        assert rep.passed
        assert rep.min_sum == pytest.approx(1, abs=1e-12)
        assert rep.max_sum == pytest.approx(1, abs=1e-12)

    def test_redundant_true_bounds_pass(self):
        rep = check_frame_inequality(REDUNDANT, 1, 2, trials=100, seed=2)
        assert rep.passed
        # sums are 1 + |f_1|^2, so they stay in [1, 2]
        assert 1 - 1e-12 <= rep.min_sum and rep.max_sum <= 2 + 1e-12

    def test_redundant_inflated_lower_bound_fails(self):
        rep = check_frame_inequality(REDUNDANT, 1.5, 2, trials=100, seed=2)
        assert not rep.passed
        assert rep.min_sum < 1.5
        # the witness achieves the violating coefficient energy
        t = analysis_matrix(REDUNDANT)
        energy = float(np.sum(np.abs(t @ rep.witness_min) ** 2))
        assert energy == pytest.approx(rep.min_sum)

    def test_rejects_inverted_bounds(self):
        with pytest.raises(ValueError):
            check_frame_inequality(REDUNDANT, 2, 1)


class TestFrameSystemValidation:
    def test_dimension_mismatch(self):
        with pytest.raises(Exception):
            FrameSystem(3, np.eye(2))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            FrameSystem(2, np.zeros((0, 2)))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            FrameSystem(2, np.array([[np.inf, 0.0]]))
