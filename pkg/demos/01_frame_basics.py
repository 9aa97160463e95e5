#!/usr/bin/env python3
"""Frame systems in C^d: bounds, duals, and the defining inequality.

A frame is a family {f_i} with A ||f||^2 <= sum_i |<f, f_i>|^2 <= B ||f||^2
for all f.  The optimal A, B are the extreme eigenvalues of the frame
operator S = sum_i f_i f_i*.
"""

import numpy as np

from framekit import (FrameSystem, canonical_dual, check_frame_inequality,
                      frame_operator, optimal_bounds)

# A redundant family: e1 twice, e2 once.  Three vectors in C^2.
family = FrameSystem.from_vectors([[1, 0], [1, 0], [0, 1]])
print("frame operator:\n", frame_operator(family).real)

diag = optimal_bounds(family)
print(f"optimal bounds: A = {diag.lower}, B = {diag.upper}")
print(f"is_frame = {diag.is_frame}, is_riesz_basis = {diag.is_riesz_basis}")

# The canonical dual {S^{-1} f_i} reconstructs any vector two ways:
# f = sum <f, dual_i> f_i = sum <f, f_i> dual_i
dual = canonical_dual(family)
print("canonical dual vectors:\n", dual.vectors.real)

rng = np.random.default_rng(0)
f = rng.standard_normal(2) + 1j * rng.standard_normal(2)
coeffs = dual.vectors.conj() @ f
reconstructed = family.vectors.T @ coeffs
print("reconstruction error:", np.linalg.norm(reconstructed - f))

# Sampling the inequality: with the true bounds, every random unit vector
# lands inside [A, B]; inflating A manufactures a violation witness.
ok = check_frame_inequality(family, 1.0, 2.0, trials=200, seed=1)
print(f"\nA=1, B=2: passed={ok.passed}, "
      f"sampled range [{ok.min_sum:.6f}, {ok.max_sum:.6f}]")

bad = check_frame_inequality(family, 1.5, 2.0, trials=200, seed=1)
print(f"A=1.5 (too big): passed={bad.passed}, witness energy {bad.min_sum:.6f}")
print("violating vector:", np.round(bad.witness_min, 4))

# The Mercedes-Benz configuration: three unit-ish vectors at 120 degrees
# make a tight frame, A = B = 3/2.
mercedes = FrameSystem.from_vectors([
    [0, 1],
    [-np.sqrt(3) / 2, -0.5],
    [np.sqrt(3) / 2, -0.5],
])
mb = optimal_bounds(mercedes)
print(f"\nMercedes-Benz bounds: A = {mb.lower:.12f}, B = {mb.upper:.12f}")
