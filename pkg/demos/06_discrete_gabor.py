#!/usr/bin/env python3
"""Discrete Gabor systems on Z_N: lattice orbits as finite frames.

The full lattice a = b = 1 is always tight with bound N ||g||^2.  Window
perturbations g -> g + c E_y T_x g are run as an experiment: on C^N the
operator I + d T_x E_y is singular only for special scalars, so the
discrete model reports bound degradation and spectra rather than claiming
the continuous non-surjectivity result.
"""

import numpy as np

from framekit import GaborSystemSpec, build_gabor_system, optimal_bounds
from framekit.gabor_discrete import (modulation_matrix, perturb_window,
                                     translation_matrix)

rng = np.random.default_rng(7)

# full lattice on Z_12: tight no matter the window
window = rng.standard_normal(12) + 1j * rng.standard_normal(12)
spec = GaborSystemSpec(12, 1, 1, window)
system = build_gabor_system(spec)
diag = optimal_bounds(system)
energy = float(np.sum(np.abs(window) ** 2))
print(f"Z_12 full lattice: {system.size} vectors, bounds "
      f"[{diag.lower:.9f}, {diag.upper:.9f}], N ||g||^2 = {12 * energy:.9f}")

# a sparser lattice need not be tight (or even a frame)
coarse = GaborSystemSpec(12, 3, 4, window)
cdiag = optimal_bounds(build_gabor_system(coarse))
print(f"a=3, b=4 lattice:  {12 // 3 * (12 // 4)} vectors, bounds "
      f"[{cdiag.lower:.6f}, {cdiag.upper:.6f}], frame={cdiag.is_frame}")

# generators commute up to an N-th root of unity
t, e = translation_matrix(12, 3), modulation_matrix(12, 4)
phase = np.exp(-2j * np.pi * 3 * 4 / 12)
print("\nT_3 E_4 - e^{-2 pi i 12/12} E_4 T_3 residual:",
      np.linalg.norm(t @ e - phase * (e @ t)))

# perturbation experiment: delta window, half-period shift
delta0 = np.zeros(8, dtype=complex)
delta0[0] = 1.0
base = GaborSystemSpec(8, 1, 1, delta0)
_, rep = perturb_window(base, x=4, y=2, c_phase=0)
print(f"\nZ_8 perturbation x=4, y=2: lower bound ratio "
      f"{rep.lower_bound_ratio:.6f}")
print(f"smallest singular value of I + d T_x E_y across the lattice: "
      f"{min(rep.min_singular_values):.6f}")
print(f"near-singular lattice points: {sum(rep.near_singular)} of "
      f"{len(rep.near_singular)}")

# trivial perturbation doubles the window, quadrupling both bounds
_, rep = perturb_window(base, x=0, y=0, c_phase=0)
print(f"\nx=y=0, c=1 (window doubled): bound ratio {rep.lower_bound_ratio:.1f}")
