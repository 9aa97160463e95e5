#!/usr/bin/env python3
"""How frames behave under operators: each law checked against prediction.

The image {L f_i} of a frame is a frame exactly when L is surjective; its
frame operator is L S L* and the new optimal bounds stay inside
[A / ||Ldag||^2, B ||L||^2].  Invertibility is NOT needed - that is the
point of the truncated-shift probe at the end.
"""

import numpy as np

from framekit import (FrameSystem, projection_sum, recover_from_transforms,
                      riesz_transform_check, sum_with_operator,
                      transform_by_operator, two_sided_check)

basis = FrameSystem.standard_basis(2)

# --- image law with a diagonal operator: the envelope is attained
rep = transform_by_operator(basis, np.diag([1.0, 2.0]))
print("L = diag(1,2) on the standard basis:")
print(f"  predicted bounds [{rep.predicted_lower}, {rep.predicted_upper}]")
print(f"  actual bounds    [{rep.actual.lower}, {rep.actual.upper}]")
print(f"  checks: {rep.checks}")

# --- a rank-deficient operator destroys the frame
rep = transform_by_operator(basis, np.diag([1.0, 0.0]))
print(f"\nL = diag(1,0): surjective={rep.details['surjective']}, "
      f"frame={rep.actual.is_frame}")

# --- {L f_i} and {L* f_i} both frames <=> L invertible
rng = np.random.default_rng(1)
op = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
rep = two_sided_check(basis, op)
print(f"\ntwo-sided with a random L: invertible={rep.details['invertible']}, "
      f"passed={rep.passed}")

# --- f_i + L f_i: the operator I + L drives everything
rep = sum_with_operator(basis, np.diag([1.0, -0.5]))
print(f"\nI+L = diag(2, 1/2): actual S_new diag = "
      f"{np.diagonal(rep.actual.frame_operator).real}")

# --- idempotent perturbations always keep the frame (a != -1)
proj = np.diag([1.0, 0.0])
for a in (1, 2, 1j):
    rep = projection_sum(basis, proj, a)
    print(f"projection_sum a={a}: identity residual "
          f"{rep.residuals['inverse_identity']:.2e}, "
          f"frame={rep.actual.is_frame}")
rep = projection_sum(basis, proj, -1)
print(f"projection_sum a=-1 (excluded): frame={rep.details['is_frame']} "
      "(reported, not asserted)")

# --- recovering the original frame operator from the image's
family = FrameSystem.from_vectors([[1, 0], [1, 0], [0, 1]])
rep = recover_from_transforms(family, np.diag([2.0, 1.0]))
print(f"\nrecovered operator:\n{rep.predicted_operator.real.round(12)}")

# --- Riesz basis transforms: analysis matrix is T L*
rep = riesz_transform_check(basis, np.diag([1.0, 3.0]))
print(f"\nRiesz transform diag(1,3): bounds "
      f"[{rep.actual.lower}, {rep.actual.upper}], passed={rep.passed}")

# --- the refuted converse: a frame image from a non-invertible map.
# The 2x3 truncated shift satisfies L L* = I, so {L e_i} is a frame for
# C^2, yet L is not even square.
shift = np.array([[0, 1, 0], [0, 0, 1]], dtype=complex)
rep = transform_by_operator(FrameSystem.standard_basis(3), shift)
print(f"\ntruncated shift: frame={rep.actual.is_frame}, "
      f"surjective={rep.details['surjective']}, square={shift.shape[0] == shift.shape[1]}")
