"""JSON wire formats.

Complex scalars are [re, im] pairs.  Rationals travel as "p/q" strings
(or "p" when integral).  Exact complex-rational coefficients use
[re_num, re_den, im_num, im_den].  Loaders raise InputError on malformed
data or violated invariants.
"""

import json
from fractions import Fraction

import numpy as np

from .errors import FramekitError, InputError
from .frames import FrameDiagnostics, FrameSystem
from .gabor_continuous import PiecewiseExp, frac, piece
from .gabor_discrete import GaborSystemSpec
from .sparseseq import RationalComplex, SparseSeq


def rational_to_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text) -> Fraction:
    try:
        return frac(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"bad rational {text!r}: {exc}") from exc


def complex_to_pair(z: complex) -> list:
    return [float(z.real), float(z.imag)]


def matrix_to_json(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=np.complex128)
    return {"rows": m.shape[0], "cols": m.shape[1],
            "data": [complex_to_pair(z) for z in m.ravel()]}


def matrix_from_json(obj) -> np.ndarray:
    try:
        rows, cols, data = obj["rows"], obj["cols"], obj["data"]
        flat = np.array([complex(re, im) for re, im in data], dtype=np.complex128)
        if flat.size != rows * cols:
            raise InputError(
                f"matrix data length {flat.size} != rows*cols = {rows * cols}")
        m = flat.reshape(rows, cols)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad matrix JSON: {exc}") from exc
    if not np.all(np.isfinite(m)):
        raise InputError("matrix entries must be finite")
    return m


def frame_to_json(frame: FrameSystem) -> dict:
    return {"dim": frame.dim,
            "vectors": [[complex_to_pair(z) for z in v] for v in frame.vectors]}


def frame_from_json(obj) -> FrameSystem:
    try:
        dim = obj["dim"]
        vectors = np.array([[complex(re, im) for re, im in vec]
                            for vec in obj["vectors"]], dtype=np.complex128)
        return FrameSystem(dim, vectors)
    except (KeyError, TypeError, ValueError, FramekitError) as exc:
        raise InputError(f"bad frame JSON: {exc}") from exc


def diagnostics_to_json(diag: FrameDiagnostics) -> dict:
    return {"A": diag.lower, "B": diag.upper,
            "is_frame": diag.is_frame, "is_riesz_basis": diag.is_riesz_basis,
            "residuals": {k: float(v) for k, v in diag.residuals.items()}}


def sparseseq_to_json(seq: SparseSeq) -> dict:
    entries = []
    for idx in seq.support():
        c = seq[idx]
        entries.append([idx, [c.re.numerator, c.re.denominator,
                              c.im.numerator, c.im.denominator]])
    return {"entries": entries}


def sparseseq_from_json(obj) -> SparseSeq:
    try:
        entries = {}
        for idx, (re_n, re_d, im_n, im_d) in obj["entries"]:
            entries[int(idx)] = RationalComplex(Fraction(re_n, re_d),
                                                Fraction(im_n, im_d))
        return SparseSeq(entries)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad sparse sequence JSON: {exc}") from exc


def piecewise_to_json(f: PiecewiseExp) -> dict:
    return {"pieces": [{
        "l": rational_to_str(p.left),
        "r": rational_to_str(p.right),
        "freq": rational_to_str(p.freq),
        "coef": complex_to_pair(p.coefficient()),
    } for p in f.pieces]}


def piecewise_from_json(obj) -> PiecewiseExp:
    try:
        pieces = tuple(
            piece(parse_rational(p["l"]), parse_rational(p["r"]),
                  parse_rational(p["freq"]),
                  base=complex(p["coef"][0], p["coef"][1]))
            for p in obj["pieces"])
        return PiecewiseExp(pieces)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"bad piecewise JSON: {exc}") from exc


def gabor_spec_to_json(spec: GaborSystemSpec) -> dict:
    return {"N": spec.n_mod, "a": spec.time_step, "b": spec.freq_step,
            "window": [complex_to_pair(z) for z in spec.window]}


def gabor_spec_from_json(obj) -> GaborSystemSpec:
    try:
        window = np.array([complex(re, im) for re, im in obj["window"]],
                          dtype=np.complex128)
        return GaborSystemSpec(int(obj["N"]), int(obj["a"]), int(obj["b"]),
                               window)
    except (KeyError, TypeError, ValueError, FramekitError) as exc:
        raise InputError(f"bad Gabor spec JSON: {exc}") from exc


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc
