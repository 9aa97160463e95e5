"""Piecewise-exponential functions on the line under modulation and translation.

A function here is a finite sum of pieces coef * e^{2 pi i freq t} on
half-open rational intervals [left, right).  Interval endpoints and
frequencies are exact rationals.  A coefficient is a sum of phasors
base * e^{2 pi i turns} with float complex base and exact rational phase
(turns = fraction of a full circle).  Modulation E_y multiplies by
e^{2 pi i y t}, translation T_x shifts by x; both only move frequencies,
intervals and turns by rational amounts, so operator identities that hold
because some phase is an exact integer number of turns (e.g.
e^{-2 pi i k x y} = 1 when x y is an integer) are verified with zero
residual.  Additions of same-phase coefficients combine the float bases,
so telescoping cancellations are exact as well; leftover numerical dust
below 1e-14 of the largest coefficient is pruned.
"""

import cmath
import itertools
import random
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParams

COEF_PRUNE_REL = 1e-14

_QUARTER_TURNS = {
    Fraction(0): 1 + 0j,
    Fraction(1, 4): 1j,
    Fraction(1, 2): -1 + 0j,
    Fraction(3, 4): -1j,
}


def frac(value) -> Fraction:
    """Coerce int / str "p/q" / Fraction to an exact rational."""
    return value if isinstance(value, Fraction) else Fraction(value)


def phase_value(turns: Fraction) -> complex:
    """e^{2 pi i turns}; exact +-1, +-i on quarter turns."""
    q = turns - (turns // 1)
    exact = _QUARTER_TURNS.get(q)
    if exact is not None:
        return exact
    return cmath.exp(2j * cmath.pi * float(q))


@dataclass(frozen=True)
class UnitPhase:
    """Unit scalar e^{2 pi i turns} with exact rational phase."""

    turns: Fraction

    def __post_init__(self):
        t = frac(self.turns)
        object.__setattr__(self, "turns", t - (t // 1))

    @property
    def value(self) -> complex:
        return phase_value(self.turns)

    def __complex__(self) -> complex:
        return self.value

    def __mul__(self, other: "UnitPhase") -> "UnitPhase":
        return UnitPhase(self.turns + other.turns)

    def conj(self) -> "UnitPhase":
        return UnitPhase(-self.turns)


@dataclass(frozen=True)
class Phasor:
    """base * e^{2 pi i turns}; canonical form keeps turns in [0, 1/2)."""

    base: complex
    turns: Fraction

    def canonical(self) -> "Phasor":
        t = self.turns - (self.turns // 1)
        if t >= Fraction(1, 2):
            return Phasor(-self.base, t - Fraction(1, 2))
        return Phasor(self.base, t)

    def value(self) -> complex:
        return self.base * phase_value(self.turns)


def _combine_phasors(phasors) -> tuple:
    """Canonical coefficient: fold half turns, merge equal phases, drop zeros."""
    folded = sorted((p.canonical() for p in phasors),
                    key=lambda p: (p.turns, p.base.real, p.base.imag))
    out = []
    for turns, group in itertools.groupby(folded, key=lambda p: p.turns):
        base = 0j
        for p in group:
            base += p.base
        if base != 0:
            out.append(Phasor(base, turns))
    return tuple(out)


def _coef_value(coef: tuple) -> complex:
    return sum((p.value() for p in coef), 0j)


@dataclass(frozen=True)
class Piece:
    """One summand: coefficient * e^{2 pi i freq t} on [left, right)."""

    left: Fraction
    right: Fraction
    freq: Fraction
    coef: tuple  # tuple of Phasor

    def __post_init__(self):
        if self.left >= self.right:
            raise InvalidParams(f"empty interval [{self.left}, {self.right})")

    def coefficient(self) -> complex:
        return _coef_value(self.coef)


def piece(left, right, freq, base=1 + 0j, turns=0) -> Piece:
    return Piece(frac(left), frac(right), frac(freq),
                 (Phasor(complex(base), frac(turns)),))


@dataclass(frozen=True)
class PiecewiseExp:
    """Finite sum of exponential pieces; compare with == after any ops."""

    pieces: tuple

    def __eq__(self, other):
        if not isinstance(other, PiecewiseExp):
            return NotImplemented
        return functions_equal(self, other)

    def is_zero(self) -> bool:
        return not normalize(self).pieces

    @classmethod
    def from_pieces(cls, specs) -> "PiecewiseExp":
        return cls(tuple(piece(*s) for s in specs))


ZERO_FUNCTION = PiecewiseExp(())


def _split_at(pieces, cuts):
    """Split every piece at the sorted cut points falling strictly inside it."""
    out = []
    for p in pieces:
        lo = bisect_right(cuts, p.left)
        hi = bisect_left(cuts, p.right)
        edges = [p.left] + list(cuts[lo:hi]) + [p.right]
        for a, b in zip(edges, edges[1:]):
            out.append(Piece(a, b, p.freq, p.coef))
    return out


def _assemble(split_pieces):
    """Merge same (interval, freq) pieces and prune negligible coefficients."""
    split_pieces = sorted(split_pieces, key=lambda p: (p.left, p.right, p.freq))
    merged = []
    for key, group in itertools.groupby(split_pieces,
                                        key=lambda p: (p.left, p.right, p.freq)):
        coef = _combine_phasors(q for p in group for q in p.coef)
        if coef:
            merged.append(Piece(key[0], key[1], key[2], coef))
    if not merged:
        return PiecewiseExp(())
    top = max(abs(_coef_value(p.coef)) for p in merged)
    kept = tuple(p for p in merged if abs(_coef_value(p.coef)) > COEF_PRUNE_REL * top)
    return PiecewiseExp(kept)


def normalize(f: PiecewiseExp) -> PiecewiseExp:
    """Split at the union of breakpoints, merge, prune; canonical order."""
    cuts = sorted({e for p in f.pieces for e in (p.left, p.right)})
    return _assemble(_split_at(f.pieces, cuts))


def functions_equal(f: PiecewiseExp, g: PiecewiseExp) -> bool:
    """Exact equality: align both at the union of breakpoints, then compare.

    Normalization alone can leave the same function carved at different
    points, so both sides are re-split on the joint cut set first.
    """
    nf, ng = normalize(f), normalize(g)
    cuts = sorted({e for h in (nf, ng) for p in h.pieces
                   for e in (p.left, p.right)})
    return (_assemble(_split_at(nf.pieces, cuts)).pieces
            == _assemble(_split_at(ng.pieces, cuts)).pieces)


def apply_modulation(y, f: PiecewiseExp) -> PiecewiseExp:
    """E_y: multiply by e^{2 pi i y t}; every frequency rises by y."""
    y = frac(y)
    return PiecewiseExp(tuple(Piece(p.left, p.right, p.freq + y, p.coef)
                              for p in f.pieces))


def apply_translation(x, f: PiecewiseExp) -> PiecewiseExp:
    """T_x: shift support by x; coefficients pick up e^{-2 pi i freq x}."""
    x = frac(x)
    return PiecewiseExp(tuple(
        Piece(p.left + x, p.right + x, p.freq,
              tuple(Phasor(q.base, q.turns - p.freq * x) for q in p.coef))
        for p in f.pieces))


def scale_phase(f: PiecewiseExp, turns) -> PiecewiseExp:
    """Multiply by the unit scalar e^{2 pi i turns}, exactly."""
    turns = frac(turns)
    return PiecewiseExp(tuple(
        Piece(p.left, p.right, p.freq,
              tuple(Phasor(q.base, q.turns + turns) for q in p.coef))
        for p in f.pieces))


def scale_complex(f: PiecewiseExp, w: complex) -> PiecewiseExp:
    return PiecewiseExp(tuple(
        Piece(p.left, p.right, p.freq,
              tuple(Phasor(q.base * w, q.turns) for q in p.coef))
        for p in f.pieces))


def add(f: PiecewiseExp, g: PiecewiseExp) -> PiecewiseExp:
    return PiecewiseExp(f.pieces + g.pieces)


def _kernel(dfreq: Fraction, left: Fraction, right: Fraction):
    """integral over [left, right) of e^{2 pi i dfreq t} dt.

    Exact Fraction for dfreq = 0 or when dfreq spans whole turns over the
    interval; complex float otherwise.
    """
    if dfreq == 0:
        return right - left
    hi, lo = dfreq * right, dfreq * left
    if (hi - lo).denominator == 1:
        return Fraction(0)
    return (phase_value(hi) - phase_value(lo)) / (2j * cmath.pi * float(dfreq))


def _pair_products(p: Piece, q: Piece):
    """All phasor cross products base_p conj(base_q) e^{2 pi i (t_p - t_q)}."""
    for u in p.coef:
        for v in q.coef:
            dturns = u.turns - v.turns
            yield u.base * v.base.conjugate(), dturns


def norm_sq(f: PiecewiseExp):
    """Squared L2 norm by the closed-form piecewise integral.

    Returns an exact Fraction when every contribution is rational (all
    surviving same-interval cross terms vanish over whole turns and every
    diagonal term is a float-exact square); returns float otherwise.
    """
    nf = normalize(f)
    exact = Fraction(0)
    inexact = 0j
    has_float = False
    for _, group in itertools.groupby(nf.pieces, key=lambda p: (p.left, p.right)):
        group = list(group)
        for p in group:
            width = p.right - p.left
            for u in p.coef:
                exact += ((Fraction(u.base.real) ** 2 + Fraction(u.base.imag) ** 2)
                          * width)
            # cross terms between phasors of one coefficient
            for u, v in itertools.combinations(p.coef, 2):
                prod = 2.0 * (u.base * v.base.conjugate()
                              * phase_value(u.turns - v.turns)).real
                inexact += prod * float(width)
                has_float = True
        for p, q in itertools.permutations(group, 2):
            kern = _kernel(p.freq - q.freq, p.left, p.right)
            if isinstance(kern, Fraction):
                continue  # exactly zero over whole turns
            for prod, dturns in _pair_products(p, q):
                inexact += prod * phase_value(dturns) * kern
                has_float = True
    if not has_float:
        return exact
    total = float(exact) + inexact.real
    if abs(inexact.imag) > 1e-12 * max(1.0, abs(total)):
        raise ArithmeticError(f"imaginary residue {inexact.imag:.3e} in a norm")
    return max(total, 0.0)


def inner_product(f: PiecewiseExp, g: PiecewiseExp) -> complex:
    """<f, g> = integral of f conj(g), linear in the first argument."""
    nf, ng = normalize(f), normalize(g)
    cuts = sorted({e for h in (nf, ng) for p in h.pieces
                   for e in (p.left, p.right)})
    fp = sorted(_split_at(nf.pieces, cuts), key=lambda p: (p.left, p.freq))
    gp = sorted(_split_at(ng.pieces, cuts), key=lambda p: (p.left, p.freq))
    by_interval = {}
    for p in gp:
        by_interval.setdefault((p.left, p.right), []).append(p)
    acc = 0j
    for p in fp:
        for q in by_interval.get((p.left, p.right), ()):
            kern = _kernel(p.freq - q.freq, p.left, p.right)
            kern = float(kern) if isinstance(kern, Fraction) else kern
            for prod, dturns in _pair_products(p, q):
                acc += prod * phase_value(dturns) * kern
    return acc


def build_witness(n: int, x, y, c_phase=0) -> PiecewiseExp:
    """The n-piece lower-bound collapse witness for I + c E_y T_x.

    Piece k (k = 1..n) lives on [k x, (k+1) x) with frequency k y and
    coefficient (-1)^k c^k, where c = e^{2 pi i c_phase}.  Its squared
    norm is exactly n |x|.  Negative x mirrors the construction.
    """
    x, y, c_phase = frac(x), frac(y), frac(c_phase)
    if n < 1:
        raise InvalidParams(f"witness needs n >= 1, got {n}")
    if x == 0:
        raise InvalidParams("witness needs x != 0")
    pieces = []
    for k in range(1, n + 1):
        lo, hi = k * x, (k + 1) * x
        if x < 0:
            lo, hi = hi, lo
        turns = Fraction(k, 2) + k * c_phase
        pieces.append(Piece(lo, hi, k * y, (Phasor(1 + 0j, turns),)))
    return PiecewiseExp(tuple(pieces))


def modulate_translate(f: PiecewiseExp, x, y, phase_turns=0) -> PiecewiseExp:
    """c E_y T_x f with c = e^{2 pi i phase_turns}."""
    return scale_phase(apply_modulation(y, apply_translation(x, f)), phase_turns)


@dataclass
class CollapseRow:
    n: int
    norm_sq: object      # Fraction when exact, float otherwise
    numerator: object
    ratio: object


@dataclass
class CollapseReport:
    """Norm collapse of (I + c E_y T_x) on the witness family."""

    x: Fraction
    y: Fraction
    c_phase: Fraction
    xy_integer: bool
    rows: list
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def collapse_report(n_max: int, x, y, c_phase=0) -> CollapseReport:
    """Ratios ||(I + c E_y T_x) f_n||^2 / ||f_n||^2 for n = 1..n_max.

    When x y is an integer the numerator equals 2 x exactly and the ratio
    2/n decreases to zero, so no positive lower bound exists and the
    operator cannot be surjective.  When x y is not an integer the
    hypothesis fails: values are reported without assertion.
    """
    x, y, c_phase = frac(x), frac(y), frac(c_phase)
    xy_integer = (x * y).denominator == 1
    rows = []
    for n in range(1, n_max + 1):
        f = build_witness(n, x, y, c_phase)
        image = add(f, modulate_translate(f, x, y, c_phase))
        den = norm_sq(f)
        num = norm_sq(image)
        ratio = (Fraction(num) / Fraction(den)
                 if isinstance(num, Fraction) and isinstance(den, Fraction)
                 else float(num) / float(den))
        rows.append(CollapseRow(n, den, num, ratio))

    checks = {}
    if xy_integer:
        two_x = 2 * abs(x)
        checks["norms_exact"] = all(
            isinstance(r.norm_sq, Fraction) and r.norm_sq == r.n * abs(x)
            for r in rows)
        checks["numerator_is_two_x"] = all(
            abs(Fraction(r.numerator) - two_x) <= Fraction(1, 10**9) * two_x
            for r in rows)
        checks["ratio_two_over_n"] = all(
            abs(Fraction(r.ratio) - Fraction(2, r.n))
            <= Fraction(1, 10**9) * Fraction(2, r.n)
            for r in rows)
        checks["ratio_strictly_decreasing"] = all(
            Fraction(a.ratio) > Fraction(b.ratio)
            for a, b in zip(rows, rows[1:]))
    return CollapseReport(x=x, y=y, c_phase=c_phase, xy_integer=xy_integer,
                          rows=rows, checks=checks)


def random_piecewise(rng: random.Random, max_pieces: int = 3) -> PiecewiseExp:
    """Random function with rational breakpoints/frequencies/extra phases."""
    def q(lo=-8, hi=8, den=8):
        return Fraction(rng.randint(lo, hi), rng.randint(1, den))

    pieces = []
    for _ in range(rng.randint(1, max_pieces)):
        left = q()
        width = abs(q()) + Fraction(1, rng.randint(1, 8))
        base = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        pieces.append(Piece(left, left + width, q(),
                            (Phasor(base, q(0, 8)),)))
    return PiecewiseExp(tuple(pieces))


def commutation_phase(x, y, trials: int = 50, seed: int = 0) -> UnitPhase:
    """The unit scalar with E_y T_x = e^{2 pi i x y} T_x E_y.

    Validates the identity exactly on `trials` random piecewise functions
    before returning the phase.
    """
    x, y = frac(x), frac(y)
    phase = UnitPhase(x * y)
    rng = random.Random(f"{seed}:commutation")
    for _ in range(trials):
        f = random_piecewise(rng)
        lhs = apply_modulation(y, apply_translation(x, f))
        rhs = scale_phase(apply_translation(x, apply_modulation(y, f)),
                          phase.turns)
        if lhs != rhs:  # pragma: no cover - identity is exact by construction
            raise ArithmeticError(
                f"commutation identity violated for x={x}, y={y}")
    return phase


@dataclass
class FactorizationReport:
    """Lattice-shift factorization of a perturbed window, checked exactly."""

    shift_scalar: UnitPhase
    equal: bool
    params: dict

    @property
    def passed(self) -> bool:
        return self.equal


def verify_factorization(m: int, n: int, a, b, x, y, c_phase,
                         g: PiecewiseExp) -> FactorizationReport:
    """Check E_{mb} T_{na} (g + c E_y T_x g) = (I + d T_x E_y) E_{mb} T_{na} g.

    The scalar d = c e^{2 pi i (x y + m b x - n a y)} depends on the
    lattice point (m, n) and has modulus one by construction.  Both sides
    are assembled as piecewise functions and compared exactly after
    normalization.
    """
    a, b, x, y, c_phase = (frac(v) for v in (a, b, x, y, c_phase))
    if a <= 0 or b <= 0:
        raise InvalidParams("lattice steps a, b must be positive")
    lhs = apply_modulation(m * b, apply_translation(
        n * a, add(g, modulate_translate(g, x, y, c_phase))))
    d = UnitPhase(c_phase + x * y + m * b * x - n * a * y)
    h = apply_modulation(m * b, apply_translation(n * a, g))
    rhs = add(h, scale_phase(apply_translation(x, apply_modulation(y, h)),
                             d.turns))
    return FactorizationReport(
        shift_scalar=d,
        equal=(lhs == rhs),
        params={"m": m, "n": n, "a": a, "b": b, "x": x, "y": y,
                "c_phase": c_phase},
    )
