"""Command-line entry point.

Subcommands:
  suites             list the verification suite catalogue (also the default)
  verify             run one named suite with seeded randomness
  witness            run the norm-collapse construction for given parameters
  bounds             optimal frame bounds of a frame JSON file

Reports are JSON (schema "framekit-report/1") or plain text.  Exit status
0 means every check passed, 1 means some check failed, 2 means bad input.
Tolerance overrides use --tol.<name> <value>; rationals are "p/q".
The FRAMEKIT_SEED environment variable supplies the seed when --seed is
absent.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import gabor_continuous as gc
from . import serialize
from .errors import FramekitError, InputError
from .frames import optimal_bounds
from .suites import SuiteConfig, list_suites, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _extract_tolerances(argv):
    """Pull --tol.<name> <v> / --tol.<name>=<v> pairs out of argv."""
    rest, tols = [], {}
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg.startswith("--tol."):
            key, eq, val = arg[6:].partition("=")
            if not eq:
                if i + 1 >= len(argv):
                    raise InputError(f"missing value for --tol.{key}")
                val = argv[i + 1]
                i += 1
            try:
                tols[key] = float(Fraction(val))
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"bad tolerance {val!r} for {key}") from exc
        else:
            rest.append(arg)
        i += 1
    return rest, tols


def _default_seed() -> int:
    env = os.environ.get("FRAMEKIT_SEED")
    return int(env) if env else 0


def _json_value(v):
    if isinstance(v, Fraction):
        return serialize.rational_to_str(v)
    return v


def _emit(report: dict, args) -> None:
    if args.format == "json":
        text = json.dumps(report, indent=2) + "\n"
    else:
        lines = [f"suite: {report.get('suite', report.get('command', '?'))}"]
        for check in report.get("checks", []):
            mark = "PASS" if check["verdict"] == "pass" else "FAIL"
            resid = ", ".join(f"{k}={v}" for k, v in check["residuals"].items())
            lines.append(f"[{mark}] {check['claim']}  {resid}")
        if "A" in report:
            lines.append(f"A={report['A']} B={report['B']} "
                         f"frame={report['is_frame']} "
                         f"riesz={report['is_riesz_basis']}")
        lines.append(f"verdict: {report.get('verdict', 'n/a')}")
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_suites(args) -> int:
    catalogue = list_suites()
    report = {"schema": "framekit-report/1", "command": "suites",
              "count": len(catalogue), "suites": catalogue}
    if args.format == "json":
        _emit(report, args)
    else:
        for entry in catalogue:
            sys.stdout.write(f"{entry['suite']:16s} {entry['anchor']}\n")
    return EXIT_PASS


def _cmd_verify(args, tols) -> int:
    params = {}
    if args.n is not None:
        params["n"] = args.n
    inputs = {}
    if args.input:
        obj = serialize.load_json(args.input)
        if args.suite == "gabor-lattice":
            inputs["gabor_spec"] = serialize.gabor_spec_from_json(obj)
        else:
            inputs["frame"] = serialize.frame_from_json(obj)
    cfg = SuiteConfig(suite=args.suite, trials=args.trials, seed=args.seed,
                      tolerances=tols, params=params, inputs=inputs)
    report = run_suite(cfg)
    _emit(report.to_json(), args)
    return EXIT_PASS if report.passed else EXIT_FAIL


def _cmd_witness(args, tols) -> int:
    try:
        x = Fraction(args.x)
        y = Fraction(args.y)
        c_phase = Fraction(args.c_phase)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational parameter: {exc}") from exc
    rep = gc.collapse_report(args.n, x, y, c_phase)
    rows = [{"n": r.n,
             "norm_sq": _json_value(r.norm_sq),
             "numerator": _json_value(r.numerator),
             "ratio": _json_value(r.ratio)} for r in rep.rows]
    checks = [{"claim": name, "anchor": "witness norm collapse",
               "residuals": {}, "verdict": "pass" if ok else "fail"}
              for name, ok in rep.checks.items()]
    passed = rep.passed
    report = {"schema": "framekit-report/1", "suite": "witness-run",
              "config": {"n": args.n, "x": str(x), "y": str(y),
                         "c_phase": str(c_phase)},
              "xy_integer": rep.xy_integer,
              "rows": rows,
              "checks": checks,
              "verdict": "pass" if passed else "fail"}
    _emit(report, args)
    return EXIT_PASS if passed else EXIT_FAIL


def _cmd_bounds(args, tols) -> int:
    if not args.input:
        raise InputError("bounds requires --input FRAME_JSON")
    frame = serialize.frame_from_json(serialize.load_json(args.input))
    diag = optimal_bounds(frame, tols.get("rank", 1e-10))
    report = {"schema": "framekit-report/1", "command": "bounds"}
    report.update(serialize.diagnostics_to_json(diag))
    _emit(report, args)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framekit",
        description="Verification suites for frame transformation laws, "
                    "shift counterexamples and Gabor constructions.")
    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--trials", type=int, default=None)
        p.add_argument("--out", default=None)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--input", default=None)

    p_suites = sub.add_parser("suites", help="list available suites")
    p_suites.add_argument("--format", choices=("json", "text"), default="text")
    p_suites.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="run a named suite")
    p_verify.add_argument("--suite", required=True)
    p_verify.add_argument("--n", type=int, default=None,
                          help="witness size override for the witness suite")
    common(p_verify)

    p_witness = sub.add_parser("witness", help="run the collapse construction")
    p_witness.add_argument("--n", type=int, required=True)
    p_witness.add_argument("--x", required=True)
    p_witness.add_argument("--y", required=True)
    p_witness.add_argument("--c-phase", dest="c_phase", default="0")
    common(p_witness)

    p_bounds = sub.add_parser("bounds", help="optimal bounds of a frame JSON")
    common(p_bounds)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        argv, tols = _extract_tolerances(argv)
        parser = build_parser()
        args = parser.parse_args(argv)
        if args.command in (None, "suites"):
            if not hasattr(args, "format"):
                args.format = "text"
                args.out = None
            return _cmd_suites(args)
        if getattr(args, "seed", None) is None:
            args.seed = _default_seed()
        if args.command == "verify":
            return _cmd_verify(args, tols)
        if args.command == "witness":
            return _cmd_witness(args, tols)
        if args.command == "bounds":
            return _cmd_bounds(args, tols)
        parser.error(f"unknown command {args.command!r}")
    except InputError as exc:
        sys.stderr.write(f"framekit: input error: {exc}\n")
        return EXIT_INPUT
    except FramekitError as exc:
        sys.stderr.write(f"framekit: {exc}\n")
        return EXIT_INPUT
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
