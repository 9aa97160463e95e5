"""Discrete Gabor systems on Z_N as finite frames.

Translation (T_a v)_t = v_{t-a mod N} and modulation
(E_b v)_t = e^{2 pi i b t / N} v_t generate the lattice orbit
{E_{mb} T_{na} g : 0 <= n < N/a, 0 <= m < N/b} of a window g.  Lattice
steps must divide N so the system is a finite group orbit.  The full
lattice a = b = 1 is always a tight frame with bound N ||g||^2.

The continuous non-surjectivity statement for I + c E_y T_x has no exact
finite analogue (on C^N the operator is singular only for special c), so
perturbed-window runs report spectra and bound degradation as an
experiment; the normative lower-bound collapse lives in
gabor_continuous.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import InvalidLattice
from .frames import FrameDiagnostics, FrameSystem, optimal_bounds
from .gabor_continuous import UnitPhase, frac


def translation_matrix(n_mod: int, step: int) -> np.ndarray:
    """Cyclic shift by `step`: row t has a one in column (t - step) mod N."""
    return np.roll(np.eye(n_mod, dtype=np.complex128), step, axis=0)


def modulation_matrix(n_mod: int, step: int) -> np.ndarray:
    """diag(e^{2 pi i step t / N})."""
    t = np.arange(n_mod)
    return np.diag(np.exp(2j * np.pi * step * t / n_mod))


def translate(v: np.ndarray, step: int) -> np.ndarray:
    return np.roll(v, step)


def modulate(v: np.ndarray, step: int) -> np.ndarray:
    t = np.arange(len(v))
    return np.exp(2j * np.pi * step * t / len(v)) * v


@dataclass(frozen=True)
class GaborSystemSpec:
    """Window plus lattice (g, a, b) on Z_N; a and b must divide N."""

    n_mod: int
    time_step: int
    freq_step: int
    window: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.window, dtype=np.complex128)
        if self.n_mod < 1:
            raise InvalidLattice(f"modulus must be positive, got {self.n_mod}")
        for name, step in (("time", self.time_step), ("freq", self.freq_step)):
            if step < 1 or self.n_mod % step != 0:
                raise InvalidLattice(
                    f"{name} step {step} does not divide N = {self.n_mod}")
        if w.shape != (self.n_mod,):
            raise InvalidLattice(
                f"window has shape {w.shape}, expected ({self.n_mod},)")
        if not np.any(w):
            raise InvalidLattice("window must be nonzero")
        object.__setattr__(self, "window", w)


def build_gabor_system(spec: GaborSystemSpec) -> FrameSystem:
    """All (N/a)(N/b) lattice shifts E_{mb} T_{na} g as a frame system.

    Every vector has norm ||g|| since both generators are unitary.
    """
    n_mod, a, b = spec.n_mod, spec.time_step, spec.freq_step
    vectors = []
    for n in range(n_mod // a):
        shifted = translate(spec.window, n * a)
        for m in range(n_mod // b):
            vectors.append(modulate(shifted, m * b))
    return FrameSystem(n_mod, np.array(vectors))


@dataclass
class PerturbReport:
    """Window perturbation experiment g -> g + c E_y T_x g.

    For each lattice point the factorization scalar
    d = c e^{2 pi i (x y + m b x - n a y) / N} is recorded together with
    the smallest singular value of I + d T_x E_y; values at or below
    1e-9 are flagged near-singular.
    """

    base_diagnostics: FrameDiagnostics
    perturbed_diagnostics: FrameDiagnostics
    lattice_scalars: list = field(default_factory=list)
    min_singular_values: list = field(default_factory=list)
    near_singular: list = field(default_factory=list)
    lower_bound_ratio: float = 0.0


def perturb_window(spec: GaborSystemSpec, x: int, y: int,
                   c_phase=0) -> tuple[FrameSystem, PerturbReport]:
    """Build the Gabor system with window g + c E_y T_x g and report bounds.

    x, y are residues mod N; c = e^{2 pi i c_phase} is a unit scalar.
    Returns the perturbed system plus a report contrasting its optimal
    bounds with the unperturbed ones and scanning I + d T_x E_y for
    near-singularity across the lattice.
    """
    n_mod, a, b = spec.n_mod, spec.time_step, spec.freq_step
    x, y = x % n_mod, y % n_mod
    c_phase = frac(c_phase)
    c = UnitPhase(c_phase).value

    perturbed_window = spec.window + c * modulate(translate(spec.window, x), y)
    base = optimal_bounds(build_gabor_system(spec))
    if not np.any(np.abs(perturbed_window) > 1e-15 * np.max(np.abs(spec.window))):
        raise InvalidLattice("perturbed window vanishes; system undefined")
    perturbed_spec = GaborSystemSpec(n_mod, a, b, perturbed_window)
    system = build_gabor_system(perturbed_spec)
    diag = optimal_bounds(system)

    t_x = translation_matrix(n_mod, x)
    e_y = modulation_matrix(n_mod, y)
    eye = np.eye(n_mod, dtype=np.complex128)
    scalars, sigmas, flags = [], [], []
    for n in range(n_mod // a):
        for m in range(n_mod // b):
            d = UnitPhase(c_phase + Fraction(x * y + m * b * x - n * a * y,
                                             n_mod))
            sigma_min = float(np.linalg.svd(eye + d.value * (t_x @ e_y),
                                            compute_uv=False)[-1])
            scalars.append((m, n, d))
            sigmas.append(sigma_min)
            flags.append(sigma_min <= 1e-9)
    ratio = diag.lower / base.lower if base.lower > 0 else float("inf")
    report = PerturbReport(
        base_diagnostics=base,
        perturbed_diagnostics=diag,
        lattice_scalars=scalars,
        min_singular_values=sigmas,
        near_singular=flags,
        lower_bound_ratio=ratio,
    )
    return system, report
