"""Exact arithmetic on finitely-supported sequences over indices 1, 2, ...

Models the one-sided shift pair on l2: down maps e_n to e_{n-1} (killing
e_1), up maps e_n to e_{n+1}.  Coefficients are complex rationals with
arbitrary-precision numerator/denominator, so every identity in the
shift-operator counterexamples is verified with zero residual.  Frame
identities are checked on the dense subspace of finitely-supported
sequences, which suffices for these equalities.
"""

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class RationalComplex:
    """Complex number with exact rational real/imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __add__(self, other):
        return RationalComplex(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return RationalComplex(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        return RationalComplex(self.re * other.re - self.im * other.im,
                               self.re * other.im + self.im * other.re)

    def __neg__(self):
        return RationalComplex(-self.re, -self.im)

    def conj(self):
        return RationalComplex(self.re, -self.im)

    def abs_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @classmethod
    def of(cls, re, im=0):
        return cls(Fraction(re), Fraction(im))


QC_ZERO = RationalComplex()
QC_ONE = RationalComplex.of(1)


@dataclass(frozen=True)
class SparseSeq:
    """Finitely-supported sequence: map from index >= 1 to coefficient.

    Zero coefficients are never stored.
    """

    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for idx, coef in self.entries.items():
            if not isinstance(idx, int) or idx < 1:
                raise ValueError(f"indices must be integers >= 1, got {idx!r}")
            if not coef.is_zero():
                clean[idx] = coef
        object.__setattr__(self, "entries", clean)

    def __eq__(self, other):
        return isinstance(other, SparseSeq) and self.entries == other.entries

    def __getitem__(self, idx: int) -> RationalComplex:
        return self.entries.get(idx, QC_ZERO)

    def support(self):
        return sorted(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other):
        out = dict(self.entries)
        for idx, coef in other.entries.items():
            out[idx] = out.get(idx, QC_ZERO) + coef
        return SparseSeq(out)

    def scale(self, factor: RationalComplex):
        if factor.is_zero():
            return SparseSeq({})
        # rationals have no zero divisors, so no pruning is needed
        return _raw({i: factor * c for i, c in self.entries.items()})

    def inner(self, other) -> RationalComplex:
        """Exact <self, other> = sum_n self_n * conj(other_n)."""
        acc = QC_ZERO
        for idx, coef in self.entries.items():
            if idx in other.entries:
                acc = acc + coef * other.entries[idx].conj()
        return acc

    def norm_sq(self) -> Fraction:
        return sum((c.abs_sq() for c in self.entries.values()), Fraction(0))


def _raw(entries: dict) -> SparseSeq:
    """Construct without re-validation; caller guarantees the invariants."""
    seq = object.__new__(SparseSeq)
    object.__setattr__(seq, "entries", entries)
    return seq


def delta(idx: int) -> SparseSeq:
    """The standard basis sequence e_idx."""
    return SparseSeq({idx: QC_ONE})


class ShiftOp(enum.Enum):
    """Direction of the one-sided shift: down e_n -> e_{n-1}, up e_n -> e_{n+1}."""

    DOWN = "down"
    UP = "up"


def apply_shift(op: ShiftOp, h: SparseSeq) -> SparseSeq:
    """Exact index shift; DOWN drops index-1 mass, UP never drops mass."""
    if op is ShiftOp.DOWN:
        return _raw({i - 1: c for i, c in h.entries.items() if i > 1})
    return _raw({i + 1: c for i, c in h.entries.items()})


def shift_down(h: SparseSeq) -> SparseSeq:
    return apply_shift(ShiftOp.DOWN, h)


def shift_up(h: SparseSeq) -> SparseSeq:
    return apply_shift(ShiftOp.UP, h)


def random_sparse(rng: random.Random, max_index: int, max_terms: int = 8) -> SparseSeq:
    """Nonzero random sequence with small rational coefficients."""
    k = rng.randint(1, max_terms)
    indices = rng.sample(range(1, max_index + 1), min(k, max_index))
    entries = {}
    for idx in indices:
        coef = RationalComplex(
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        entries[idx] = coef
    seq = SparseSeq(entries)
    if seq.is_zero():
        seq = delta(rng.randint(1, max_index))
    return seq


@dataclass
class ShiftReport:
    """Exact verification outcome; every check ran in rational arithmetic."""

    checks: dict
    trials: int
    seed: int
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _image_energy(h: SparseSeq, images) -> Fraction:
    """sum_n |<h, g_n>|^2 over an image family, term by term.

    Exact-zero terms are skipped after the inner product is taken; they
    contribute nothing to the sum.
    """
    total = Fraction(0)
    for g in images:
        term = h.inner(g)
        if not term.is_zero():
            total += term.abs_sq()
    return total


def verify_shift_counterexample(max_index: int = 1000, trials: int = 100,
                                seed: int = 0) -> ShiftReport:
    """Exact checks for the one-sided shift pair on random sparse inputs.

    (i) down(up(h)) = h, so the composition down-after-up is the identity
        even though neither factor is invertible.
    (ii) sum_n |<h, down(e_n)>|^2 = ||h||^2: the down-images form a tight
        frame with bound exactly 1.
    (iii) sum_n |<e_1, up(e_n)>|^2 = 0 < ||e_1||^2: the up-images admit no
        positive lower frame bound.
    (iv) solving down(h) = e_{max_index} forces support at max_index + 1,
        and <down(e_1), h> = 0 for every h since down kills e_1.
    """
    if max_index < 2:
        raise ValueError("max_index must be at least 2")
    rng = random.Random(f"{seed}:shift")
    checks = {
        "down_after_up_is_identity": True,
        "down_images_tight_frame": True,
        "up_images_lower_bound_refuted": True,
        "down_kills_index_one": True,
        "surjectivity_needs_support_growth": True,
    }
    # the image families {down(e_n)} and {up(e_n)} are fixed; build them once
    down_images = [apply_shift(ShiftOp.DOWN, delta(n))
                   for n in range(1, max_index + 2)]
    up_images = [apply_shift(ShiftOp.UP, delta(n))
                 for n in range(1, max_index + 1)]
    for _ in range(trials):
        h = random_sparse(rng, max_index)
        top = h.support()[-1]
        if shift_down(shift_up(h)) != h:
            checks["down_after_up_is_identity"] = False
        if _image_energy(h, down_images[:top + 1]) != h.norm_sq():
            checks["down_images_tight_frame"] = False
        if not shift_down(delta(1)).inner(h).is_zero():
            checks["down_kills_index_one"] = False

    e1 = delta(1)
    if _image_energy(e1, up_images) != 0 or e1.norm_sq() != 1:
        checks["up_images_lower_bound_refuted"] = False
    # The only preimages of e_{max_index} under down are e_{max_index+1}
    # plus kernel mass at index 1, so support must exceed max_index.
    if shift_down(delta(max_index + 1)) != delta(max_index):
        checks["surjectivity_needs_support_growth"] = False

    return ShiftReport(checks=checks, trials=trials, seed=seed,
                       details={"max_index": max_index})


def verify_tlstar_obstruction(trials: int = 100, seed: int = 0,
                              max_index: int = 500) -> ShiftReport:
    """e_1 is exactly orthogonal to the range of the coefficient map of up.

    The map h -> (<h, down(e_n)>)_n has first coefficient <h, down(e_1)>
    = 0 for every h, so no input reaches e_1 even though the doubled
    down-images satisfy the exact tight-frame identity
    sum_n |<h, 2 down(e_n)>|^2 = 4 ||h||^2.
    """
    rng = random.Random(f"{seed}:tlstar")
    two = RationalComplex.of(2)
    checks = {"first_coefficient_always_zero": True,
              "doubled_images_tight_frame": True}
    doubled_images = [shift_down(delta(n)).scale(two)
                      for n in range(1, max_index + 2)]
    for _ in range(trials):
        h = random_sparse(rng, max_index)
        top = h.support()[-1]
        if not h.inner(shift_down(delta(1))).is_zero():
            checks["first_coefficient_always_zero"] = False
        if _image_energy(h, doubled_images[:top + 1]) != 4 * h.norm_sq():
            checks["doubled_images_tight_frame"] = False
    return ShiftReport(checks=checks, trials=trials, seed=seed,
                       details={"max_index": max_index})
