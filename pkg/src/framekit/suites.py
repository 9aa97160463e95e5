"""Named verification suites with seeded randomness.

Each suite replays one transformation law or counterexample over many
deterministic trials and aggregates the outcome into a list of checks.
Identical (config, seed) always produces an identical report: every
trial's generator is derived from (seed, trial index), never from global
state.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import gabor_continuous as gc
from . import linalg, sparseseq, transforms
from .errors import InputError
from .frames import FrameSystem, optimal_bounds
from .gabor_discrete import (GaborSystemSpec, build_gabor_system,
                             modulation_matrix, perturb_window,
                             translation_matrix)

TRUNCATED_SHIFT = np.array([[0, 1, 0], [0, 0, 1]], dtype=np.complex128)


@dataclass
class Check:
    """One verified claim: identifier, statement, residuals, verdict."""

    claim: str
    anchor: str
    verdict: bool
    residuals: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"claim": self.claim, "anchor": self.anchor,
                "residuals": self.residuals,
                "verdict": "pass" if self.verdict else "fail"}


@dataclass
class SuiteConfig:
    suite: str
    trials: int | None = None
    seed: int = 0
    tolerances: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    inputs: dict = field(default_factory=dict)

    def tol(self, name: str, default: float) -> float:
        return float(self.tolerances.get(name, default))


@dataclass
class SuiteReport:
    suite: str
    anchor: str
    config: dict
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.verdict for c in self.checks)

    def to_json(self) -> dict:
        return {"schema": "framekit-report/1",
                "suite": self.suite,
                "anchor": self.anchor,
                "config": self.config,
                "checks": [c.to_json() for c in self.checks],
                "verdict": "pass" if self.passed else "fail"}


# ---------------------------------------------------------------------------
# seeded random ingredients

def _rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng([seed, *key])


def _gaussian(rng, m, d):
    return rng.standard_normal((m, d)) + 1j * rng.standard_normal((m, d))


def random_unitary(d: int, rng) -> np.ndarray:
    q, r = np.linalg.qr(_gaussian(rng, d, d))
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def random_operator(d: int, rng, smin=0.5, smax=2.0, rank=None) -> np.ndarray:
    """U diag(sigma) V* with sigma in [smin, smax]; rank zeros trailing sigmas."""
    sigma = rng.uniform(smin, smax, d)
    if rank is not None:
        sigma[rank:] = 0.0
    return (random_unitary(d, rng) * sigma) @ random_unitary(d, rng).conj().T


def random_frame(d: int, m: int, rng) -> FrameSystem:
    return FrameSystem(d, _gaussian(rng, m, d))


def random_riesz_basis(d: int, rng) -> FrameSystem:
    return FrameSystem(d, random_operator(d, rng))


def random_idempotent(d: int, rank: int, rng) -> np.ndarray:
    """Oblique projection of the given rank: A (B A)^{-1} B."""
    if rank == 0:
        return np.zeros((d, d), dtype=np.complex128)
    while True:
        a = _gaussian(rng, d, rank)
        b = _gaussian(rng, rank, d)
        core = b @ a
        if np.linalg.cond(core) < 1e3:
            return a @ np.linalg.solve(core, b)


# ---------------------------------------------------------------------------
# suite runners

def _worst(values):
    return float(max(values)) if values else 0.0


def transform_law_suite(cfg: SuiteConfig) -> list:
    trials = cfg.trials or 500
    tol = cfg.tol("rank", 1e-10)
    anchor = SUITE_ANCHORS["transform-law"]
    op_resid, low_ok, up_ok, iff_ok = [], True, True, True
    neg_iff_ok = True
    for i in range(trials):
        rng = _rng(cfg.seed, 1, i)
        d = int(rng.integers(2, 9))
        m = int(rng.integers(d, 2 * d + 1))
        frame = random_frame(d, m, rng)
        rep = transforms.transform_by_operator(frame, random_operator(d, rng),
                                               tol)
        op_resid.append(rep.residuals["operator_identity_rel"])
        iff_ok &= rep.checks["frame_iff_surjective"]
        low_ok &= rep.checks.get("lower_envelope", False)
        up_ok &= rep.checks.get("upper_envelope", False)

        # rank-deficient probe: image must never be a frame
        deficient = random_operator(d, rng, rank=int(rng.integers(0, d)))
        neg = transforms.transform_by_operator(frame, deficient, tol)
        neg_iff_ok &= (not neg.actual.is_frame) and neg.checks["frame_iff_surjective"]

    probe = transforms.transform_by_operator(
        FrameSystem.standard_basis(3), TRUNCATED_SHIFT, tol)
    refuted = (probe.actual.is_frame
               and linalg.is_surjective(TRUNCATED_SHIFT)
               and TRUNCATED_SHIFT.shape[0] != TRUNCATED_SHIFT.shape[1])
    return [
        Check("operator-identity", anchor, _worst(op_resid) <= 1e-10,
              {"max_rel_residual": _worst(op_resid), "trials": trials}),
        Check("frame-iff-surjective", anchor, bool(iff_ok), {"trials": trials}),
        Check("bound-envelope", anchor, bool(low_ok and up_ok),
              {"trials": trials}),
        Check("rank-deficient-never-frame", anchor, bool(neg_iff_ok),
              {"trials": trials}),
        Check("refuted-converse-truncated-shift", anchor, bool(refuted),
              {"image_lower_bound": probe.actual.lower,
               "shape": "2x3"}),
    ]


def two_sided_suite(cfg: SuiteConfig) -> list:
    trials = cfg.trials or 100
    tol = cfg.tol("rank", 1e-10)
    anchor = SUITE_ANCHORS["two-sided"]
    resid, agree = [], True
    for i in range(trials):
        rng = _rng(cfg.seed, 2, i)
        d = int(rng.integers(2, 9))
        frame = random_frame(d, int(rng.integers(d, 2 * d + 1)), rng)
        rank = None if i % 3 else int(rng.integers(0, d))
        rep = transforms.two_sided_check(frame,
                                         random_operator(d, rng, rank=rank), tol)
        resid.append(max(rep.residuals["operator_identity_rel"],
                         rep.residuals["adjoint_operator_identity_rel"]))
        agree &= rep.checks["both_frames_iff_invertible"]
    return [
        Check("operator-identities", anchor, _worst(resid) <= 1e-10,
              {"max_rel_residual": _worst(resid), "trials": trials}),
        Check("both-frames-iff-invertible", anchor, bool(agree),
              {"trials": trials}),
    ]


def sum_operator_suite(cfg: SuiteConfig) -> list:
    trials = cfg.trials or 100
    tol = cfg.tol("rank", 1e-10)
    anchor = SUITE_ANCHORS["sum-operator"]
    resid, ok = [], True
    for i in range(trials):
        rng = _rng(cfg.seed, 3, i)
        d = int(rng.integers(2, 9))
        frame = random_frame(d, int(rng.integers(d, 2 * d + 1)), rng)
        op = _gaussian(rng, d, d) / np.sqrt(d)
        rep = transforms.sum_with_operator(frame, op, tol)
        resid.append(rep.residuals["operator_identity_rel"])
        ok &= all(rep.checks.values())

    basis = FrameSystem.standard_basis(2)
    zero = transforms.sum_with_operator(basis, np.zeros((2, 2)), tol)
    minus = transforms.sum_with_operator(basis, -np.eye(2), tol)
    return [
        Check("image-law-random", anchor, bool(ok and _worst(resid) <= 1e-10),
              {"max_rel_residual": _worst(resid), "trials": trials}),
        Check("zero-operator-reduces-to-input", anchor,
              zero.passed and zero.actual.is_frame
              and abs(zero.actual.lower - 1) < 1e-12
              and abs(zero.actual.upper - 1) < 1e-12, {}),
        Check("negative-identity-kills-frame", anchor,
              minus.passed and not minus.actual.is_frame, {}),
    ]


def projection_sum_suite(cfg: SuiteConfig) -> list:
    trials = cfg.trials or 100
    tol = cfg.tol("rank", 1e-10)
    anchor = SUITE_ANCHORS["projection-sum"]
    scalars = (-0.5, 1, 2, 10, 1j)
    identity_resid, frame_ok = [], True
    for i in range(trials):
        rng = _rng(cfg.seed, 4, i)
        d = int(rng.integers(2, 7))
        frame = random_frame(d, int(rng.integers(d, 2 * d + 1)), rng)
        proj = random_idempotent(d, int(rng.integers(0, d + 1)), rng)
        for a in scalars:
            rep = transforms.projection_sum(frame, proj, a, tol)
            identity_resid.append(rep.residuals["inverse_identity"] / d)
            frame_ok &= rep.checks.get("frame_preserved", False)

    excluded = transforms.projection_sum(
        FrameSystem.standard_basis(2), np.diag([1.0, 0.0]), -1, tol)
    return [
        Check("explicit-inverse-identity", anchor,
              _worst(identity_resid) <= 1e-10,
              {"max_residual_per_dim": _worst(identity_resid),
               "trials": trials, "scalars": len(scalars)}),
        Check("frame-preserved", anchor, bool(frame_ok), {"trials": trials}),
        Check("excluded-scalar-reported", anchor,
              excluded.details["excluded_scalar"]
              and not excluded.details["is_frame"], {}),
    ]


def recover_suite(cfg: SuiteConfig) -> list:
    trials = cfg.trials or 100
    tol = cfg.tol("rank", 1e-10)
    anchor = SUITE_ANCHORS["recover"]
    resid, ok = [], True
    for i in range(trials):
        rng = _rng(cfg.seed, 5, i)
        d = int(rng.integers(2, 9))
        frame = random_frame(d, int(rng.integers(d, 2 * d + 1)), rng)
        rep = transforms.recover_from_transforms(frame,
                                                 random_operator(d, rng), tol)
        resid.append(rep.residuals["recovered_operator_rel"])
        ok &= rep.passed
    return [Check("recovered-operator", anchor,
                  bool(ok and _worst(resid) <= 1e-9),
                  {"max_rel_residual": _worst(resid), "trials": trials})]


def riesz_suite(cfg: SuiteConfig) -> list:
    trials = cfg.trials or 100
    tol = cfg.tol("rank", 1e-10)
    anchor = SUITE_ANCHORS["riesz"]
    resid, agree, envelope = [], True, True
    for i in range(trials):
        rng = _rng(cfg.seed, 6, i)
        d = int(rng.integers(2, 9))
        basis = random_riesz_basis(d, rng)
        rank = None if i % 3 else int(rng.integers(0, d))
        rep = transforms.riesz_transform_check(
            basis, random_operator(d, rng, rank=rank), tol)
        resid.append(max(rep.residuals["analysis_identity_rel"],
                         rep.residuals["sum_analysis_identity_rel"]))
        agree &= (rep.checks["riesz_iff_invertible"]
                  and rep.checks["sum_riesz_iff_invertible"])
        envelope &= all(v for k, v in rep.checks.items() if "envelope" in k)
    return [
        Check("analysis-matrix-identity", anchor, _worst(resid) <= 1e-10,
              {"max_rel_residual": _worst(resid), "trials": trials}),
        Check("riesz-iff-invertible", anchor, bool(agree), {"trials": trials}),
        Check("bound-envelope", anchor, bool(envelope), {"trials": trials}),
    ]


def power_sum_suite(cfg: SuiteConfig) -> list:
    trials = cfg.trials or 100
    tol = cfg.tol("rank", 1e-10)
    anchor = SUITE_ANCHORS["power-sum"]
    riesz_ok, clear_ok, min_dist = True, True, float("inf")
    for i in range(trials):
        rng = _rng(cfg.seed, 7, i)
        d = int(rng.integers(2, 7))
        basis = random_riesz_basis(d, rng)
        a, b = rng.uniform(-2, 2, 2)
        rep = transforms.power_sum(basis, float(a), float(b), tol)
        clear_ok &= rep.checks["spectrum_avoids_minus_one"]
        riesz_ok &= rep.checks.get("riesz_basis", False)
        min_dist = min(min_dist, rep.residuals["spectrum_distance_to_minus_one"])
    return [
        Check("spectrum-avoids-minus-one", anchor, bool(clear_ok),
              {"min_distance": min_dist, "trials": trials}),
        Check("riesz-basis-every-trial", anchor, bool(riesz_ok),
              {"trials": trials}),
    ]


def two_frame_suite(cfg: SuiteConfig) -> list:
    trials = cfg.trials or 100
    tol = cfg.tol("rank", 1e-10)
    anchor = SUITE_ANCHORS["two-frame"]
    resid, agree = [], True
    for i in range(trials):
        rng = _rng(cfg.seed, 8, i)
        d = int(rng.integers(2, 9))
        fa, fb = random_riesz_basis(d, rng), random_riesz_basis(d, rng)
        rank = None if i % 3 else int(rng.integers(0, d))
        rep = transforms.two_frame_sum(fa, fb, random_operator(d, rng),
                                       random_operator(d, rng, rank=rank), tol)
        resid.append(rep.residuals["analysis_identity_rel"])
        agree &= rep.checks["riesz_iff_invertible"]

    redundant = FrameSystem.from_vectors([[1, 0], [1, 0], [0, 1]])
    eye = np.eye(2)
    probe = transforms.two_frame_sum(redundant, redundant, eye, eye, tol)
    return [
        Check("analysis-matrix-identity", anchor, _worst(resid) <= 1e-10,
              {"max_rel_residual": _worst(resid), "trials": trials}),
        Check("riesz-iff-invertible", anchor, bool(agree), {"trials": trials}),
        Check("refuted-converse-overcomplete", anchor,
              probe.details["converse_refuted"],
              {"combined_map_shape": "3x2"}),
    ]


def shift_suite(cfg: SuiteConfig) -> list:
    trials = cfg.trials or 1000
    anchor = SUITE_ANCHORS["shift"]
    rep = sparseseq.verify_shift_counterexample(
        max_index=int(cfg.params.get("max_index", 1000)),
        trials=trials, seed=cfg.seed)
    return [Check(name.replace("_", "-"), anchor, ok,
                  {"residual": "0 (exact)", "trials": trials})
            for name, ok in rep.checks.items()]


def tlstar_suite(cfg: SuiteConfig) -> list:
    trials = cfg.trials or 200
    anchor = SUITE_ANCHORS["tlstar"]
    rep = sparseseq.verify_tlstar_obstruction(
        trials=trials, seed=cfg.seed,
        max_index=int(cfg.params.get("max_index", 500)))
    return [Check(name.replace("_", "-"), anchor, ok,
                  {"residual": "0 (exact)", "trials": trials})
            for name, ok in rep.checks.items()]


WITNESS_PARAM_SETS = (("1", "1", "0"), ("1/2", "2", "1/7"), ("2", "1", "1/3"))
CONTRAST_PARAMS = ("1", "1/2", "0")


def witness_suite(cfg: SuiteConfig) -> list:
    anchor = SUITE_ANCHORS["witness"]
    n_max = int(cfg.params.get("n", 64))
    checks = []
    for x, y, c_phase in WITNESS_PARAM_SETS:
        rep = gc.collapse_report(n_max, x, y, c_phase)
        label = f"x={x},y={y},c={c_phase}"
        checks.append(Check(
            f"collapse({label})", anchor, rep.passed,
            {"n_max": n_max, "final_ratio": float(rep.rows[-1].ratio),
             "norms": "exact rational"}))

    x, y, c_phase = CONTRAST_PARAMS
    contrast = gc.collapse_report(4, x, y, c_phase)
    num = Fraction(contrast.rows[-1].numerator)
    two_x = 2 * abs(gc.frac(x))
    checks.append(Check(
        "contrast-xy-not-integer", anchor,
        (not contrast.xy_integer) and num != two_x,
        {"numerator_at_n4": float(num), "two_x": float(two_x)}))
    return checks


def factorization_suite(cfg: SuiteConfig) -> list:
    trials = cfg.trials or 50
    anchor = SUITE_ANCHORS["factorization"]
    all_equal, unit_dev = True, 0.0
    for i in range(trials):
        rng = random.Random(f"{cfg.seed}:factorization:{i}")

        def q():
            return Fraction(rng.randint(-6, 6), rng.randint(1, 6))

        rep = gc.verify_factorization(
            m=rng.randint(-3, 3), n=rng.randint(-3, 3),
            a=abs(q()) + Fraction(1, 6), b=abs(q()) + Fraction(1, 6),
            x=q(), y=q(), c_phase=q(),
            g=gc.random_piecewise(rng))
        all_equal &= rep.equal
        unit_dev = max(unit_dev, abs(abs(rep.shift_scalar.value) - 1.0))
    return [
        Check("factorization-identity-exact", anchor, bool(all_equal),
              {"residual": "0 (exact)", "trials": trials}),
        Check("shift-scalar-unit-modulus", anchor, unit_dev <= 1e-12,
              {"max_modulus_deviation": unit_dev}),
    ]


def gabor_lattice_suite(cfg: SuiteConfig) -> list:
    trials = cfg.trials or 20
    anchor = SUITE_ANCHORS["gabor-lattice"]
    if "gabor_spec" in cfg.inputs:
        base_spec = cfg.inputs["gabor_spec"]
        n_mod = base_spec.n_mod
    else:
        base_spec, n_mod = None, int(cfg.params.get("N", 12))

    tight_dev, brute_dev = 0.0, 0.0
    for i in range(trials):
        rng = _rng(cfg.seed, 13, i)
        window = (rng.standard_normal(n_mod) + 1j * rng.standard_normal(n_mod))
        spec = base_spec if base_spec is not None else GaborSystemSpec(
            n_mod, 1, 1, window)
        system = build_gabor_system(spec)
        diag = optimal_bounds(system)
        energy = float(np.sum(np.abs(spec.window) ** 2))
        if spec.time_step == 1 and spec.freq_step == 1:
            tight = n_mod * energy
            tight_dev = max(tight_dev,
                            abs(diag.lower - tight) / tight,
                            abs(diag.upper - tight) / tight)
        # brute-force route: assemble S vector by vector, then eigenvalues
        s = sum(np.outer(v, v.conj()) for v in system.vectors)
        lam = np.linalg.eigvalsh(s)
        brute_dev = max(brute_dev,
                        abs(diag.lower - lam[0]) / max(lam[-1], 1e-300),
                        abs(diag.upper - lam[-1]) / max(lam[-1], 1e-300))
        if base_spec is not None:
            break

    t1 = translation_matrix(n_mod, 1)
    e1 = modulation_matrix(n_mod, 1)
    comm = linalg.frobenius(t1 @ e1
                            - np.exp(-2j * np.pi / n_mod) * (e1 @ t1))

    delta0 = np.zeros(8)
    delta0[0] = 1.0
    _, perturbed = perturb_window(GaborSystemSpec(8, 1, 1, delta0), 4, 2, 0)
    return [
        Check("full-lattice-tight", anchor, tight_dev <= 1e-9,
              {"max_rel_deviation": tight_dev, "trials": trials,
               "N": n_mod}),
        Check("bounds-match-brute-force", anchor, brute_dev <= 1e-9,
              {"max_rel_deviation": brute_dev}),
        Check("commutation-matrix-identity", anchor, comm <= 1e-12,
              {"residual_fro": comm}),
        Check("perturbation-experiment", anchor,
              perturbed.perturbed_diagnostics.upper > 0
              and len(perturbed.min_singular_values) == 64,
              {"lower_bound_ratio": perturbed.lower_bound_ratio,
               "min_singular_value": min(perturbed.min_singular_values)}),
    ]


SUITE_ANCHORS = {
    "transform-law": ("{L f_i} is a frame iff L is surjective; frame operator "
                      "L S L*, bounds A/||Ldag||^2 and B ||L||^2"),
    "two-sided": ("{L f_i} and {L* f_i} are both frames iff L is invertible; "
                  "frame operators L S L* and L* S L"),
    "sum-operator": ("{f_i + L f_i} is a frame iff I + L is surjective; "
                     "frame operator (I+L) S (I+L)*"),
    "projection-sum": ("P idempotent, a != -1: (I + aP)(I - a/(a+1) P) = I, "
                       "so {f_i + a P f_i} remains a frame"),
    "recover": ("if {L f_i} and {L* f_i} are frames then {f_i} is a frame "
                "with operator L^-1 S_L (L*)^-1"),
    "riesz": ("{L f_i} is a Riesz basis iff L is invertible; analysis matrix "
              "T L*; bounds inside [A/||L^-1||^2, B ||L||^2]; I+L variant"),
    "power-sum": ("{S^a f_i + S^b g_i} with dual g_i is a Riesz basis when "
                  "-1 avoids the spectrum of S^(b-a-1)"),
    "two-frame": ("{L1 f_i + L2 g_i} is a Riesz basis iff T1 L1* + T2 L2* is "
                  "invertible; frame status does not force surjectivity"),
    "shift": ("down-shift images of a basis form an exact tight frame though "
              "the shift is not invertible (down after up = identity); "
              "up-shift images admit no positive lower bound"),
    "tlstar": ("e_1 is exactly orthogonal to the range of the up-shift "
               "coefficient map although doubled down-images form an exact "
               "tight frame with bound 4"),
    "witness": ("||(I + c E_y T_x) f_n||^2 = 2x while ||f_n||^2 = n x when "
                "x y is an integer, so no positive lower bound exists and "
                "the operator is not surjective"),
    "factorization": ("E_mb T_na (g + c E_y T_x g) = (I + d T_x E_y) "
                      "E_mb T_na g with d = c e^{2 pi i (xy + mbx - nay)}, "
                      "|d| = 1"),
    "gabor-lattice": ("the full lattice a = b = 1 on Z_N is a tight frame "
                      "with bound N ||g||^2; lattice bounds match brute-force "
                      "eigenvalues"),
}

SUITE_RUNNERS = {
    "transform-law": transform_law_suite,
    "two-sided": two_sided_suite,
    "sum-operator": sum_operator_suite,
    "projection-sum": projection_sum_suite,
    "recover": recover_suite,
    "riesz": riesz_suite,
    "power-sum": power_sum_suite,
    "two-frame": two_frame_suite,
    "shift": shift_suite,
    "tlstar": tlstar_suite,
    "witness": witness_suite,
    "factorization": factorization_suite,
    "gabor-lattice": gabor_lattice_suite,
}


def list_suites() -> list:
    """Catalogue of suites with their claim anchors."""
    return [{"suite": name, "anchor": SUITE_ANCHORS[name]}
            for name in SUITE_RUNNERS]


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    if cfg.suite not in SUITE_RUNNERS:
        raise InputError(f"unknown suite {cfg.suite!r}; "
                         f"known: {', '.join(SUITE_RUNNERS)}")
    if cfg.trials is not None and cfg.trials < 1:
        raise InputError("trials must be >= 1")
    checks = SUITE_RUNNERS[cfg.suite](cfg)
    config_echo = {"trials": cfg.trials, "seed": cfg.seed,
                   "tolerances": dict(cfg.tolerances),
                   "params": {k: str(v) for k, v in cfg.params.items()}}
    return SuiteReport(suite=cfg.suite, anchor=SUITE_ANCHORS[cfg.suite],
                       config=config_echo, checks=checks)
