"""
Command-line driver.

    bcinterp compute G --n 2 --alpha 1,0 --principal --q 1/2 --s 1/3 --t 1/5
    bcinterp verify symexp --n 2 --dmax 4 --seed 7
    bcinterp scan --alpha 4,0 --radius 10 --seeds 1,2 --format svg --out fig1.svg

Rationals are given as ``p/q`` strings.  Exit codes: 0 success, 2 bad
configuration, 3 degenerate parameters, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

from . import __version__, interp, vanish, verify, weyl
from .points import DegenerateParameters, InterpParams, Verdict

EXIT_OK, EXIT_CONFIG, EXIT_DEGENERATE, EXIT_VERIFY = 0, 2, 3, 4

THREADS_ENV = "BCINTERP_THREADS"


class ConfigError(ValueError):
    """Invalid command-line configuration; the message names the flag."""


def threads() -> int:
    """Worker cap from BCINTERP_THREADS (default 1)."""
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


# -- parsing -----------------------------------------------------------------

def parse_rational(text: str, flag: str) -> Fraction:
    if "." in text or "e" in text.lower():
        raise ConfigError(f"{flag}: write rationals as p/q, not decimals ({text!r})")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"{flag}: cannot parse {text!r} as p/q") from None


def parse_ints(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ConfigError(f"{flag}: expected comma-separated integers, got {text!r}") from None


def _params_from_args(args, n: int) -> InterpParams:
    if args.seed is not None and args.q is None:
        if n is None:
            raise ConfigError("--n is required with --seed")
        return vanish.pseudo_random_draw(args.seed, n)
    if args.q is None:
        raise ConfigError("--q is required (or --seed)")
    q = parse_rational(args.q, "--q")
    try:
        if args.tau is not None:
            tau = tuple(parse_rational(x, "--tau") for x in args.tau.split(","))
            if len(tau) != n:
                raise ConfigError(f"--tau: expected {n} values, got {len(tau)}")
            return InterpParams.general(q, tau)
        if args.s is None:
            raise ConfigError("--s is required (or --tau)")
        s = parse_rational(args.s, "--s")
        if args.principal:
            if args.t is None:
                raise ConfigError("--t is required with --principal")
            return InterpParams.principal(q, s, parse_rational(args.t, "--t"), n)
        if args.t is not None:
            raise ConfigError("--t needs --principal")
        return InterpParams.constant(q, s, n)
    except ConfigError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"--q/--s/--t/--tau: {exc}") from None


def _add_param_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", help="base q as p/q, 0 < q < 1")
    p.add_argument("--s", help="parameter s as p/q; without --principal tau = (s, ..., s)")
    p.add_argument("--t", help="parameter t as p/q (with --principal)")
    p.add_argument("--tau", help="comma-separated tau_1..tau_n as p/q (general mode)")
    p.add_argument("--principal", action="store_true", help="tau_i = s t^(n-i)")
    p.add_argument("--seed", type=int, help="draw principal parameters from this seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bcinterp", description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("--version", action="version", version=f"bcinterp {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="build one interpolation polynomial")
    c.add_argument("kind", choices=("G", "R"))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--alpha", help="exponent vector for G")
    c.add_argument("--lambda", dest="lam", help="partition for R")
    _add_param_flags(c)
    c.add_argument("--out", type=Path)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=tuple(verify.SUITES))
    v.add_argument("--n", type=int)
    v.add_argument("--dmax", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--radius", type=int)
    v.add_argument("--out", type=Path)

    s = sub.add_parser("scan", help="zero pattern of G_alpha on a grid of nodes")
    s.add_argument("--alpha", required=True)
    s.add_argument("--radius", type=int, default=10)
    s.add_argument("--seeds", default="1,2", help="comma-separated draw seeds (at least two)")
    s.add_argument("--format", dest="fmt", choices=("text", "svg", "csv"), default="text")
    s.add_argument("--out", type=Path, help="grid artifact path (stdout if omitted)")
    s.add_argument("--report", type=Path, help="verdict JSON path (stderr if omitted)")
    return parser


def _normalise_argv(argv: list[str]) -> list[str]:
    """Attach values like '-1,3' to their flag so argparse does not read them as options."""
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in ("--alpha", "--lambda", "--tau") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


# -- output ------------------------------------------------------------------

def write_atomic(path: Path | None, text: str) -> None:
    """Write UTF-8 text once, via a temp file renamed into place; stdout if path is None."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, (tuple, list, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_jsonable(x) for x in items]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    return obj


def _dumps(obj) -> str:
    return json.dumps(_jsonable(obj), indent=2, ensure_ascii=False) + "\n"


def verdicts_report(name: str, verdicts) -> dict:
    return {
        "suite": name,
        "passed": all(v.passed for v in verdicts),
        "checks": [{"check": v.check, "passed": v.passed, "info": v.info} for v in verdicts],
    }


# -- commands ----------------------------------------------------------------

def cmd_compute(args) -> int:
    n = args.n
    if n is None or n < 1:
        raise ConfigError("--n must be a positive integer")
    if args.kind == "G":
        if args.alpha is None:
            raise ConfigError("--alpha is required for G")
        index = parse_ints(args.alpha, "--alpha")
    else:
        if args.lam is None:
            raise ConfigError("--lambda is required for R")
        index = parse_ints(args.lam, "--lambda")
        if not weyl.is_partition(index):
            raise ConfigError(f"--lambda: {index} is not a partition")
    if len(index) != n:
        raise ConfigError(f"--alpha/--lambda: expected {n} entries, got {len(index)}")
    params = _params_from_args(args, n)
    symmetric = args.kind == "R"
    poly = interp.build_R(index, params) if symmetric else interp.build_G(index, params)
    failures = interp.kronecker_failures(poly, index, params, symmetric=symmetric)
    if failures:
        print(f"bcinterp: interpolation conditions fail at {failures[:5]}", file=sys.stderr)
        return EXIT_VERIFY
    manifest = {"kind": args.kind, "index": list(index), "n": n, "d": weyl.weight(index),
                **params.to_dict(), "verified": True}
    doc = {"manifest": manifest, "polynomial": poly.to_dict()}
    write_atomic(args.out, _dumps(doc))
    return EXIT_OK


def cmd_verify(args) -> int:
    opts = {"n": args.n, "dmax": args.dmax, "seed": args.seed, "radius": args.radius}
    if args.suite == "weyl" and args.n is not None:
        opts["nmax"] = opts.pop("n")
    verdicts = verify.run_suite(args.suite, **opts)
    report = verdicts_report(args.suite, verdicts)
    write_atomic(args.out, _dumps(report))
    return EXIT_OK if report["passed"] else EXIT_VERIFY


def cmd_scan(args) -> int:
    alpha = parse_ints(args.alpha, "--alpha")
    seeds = parse_ints(args.seeds, "--seeds")
    if len(seeds) < 2:
        raise ConfigError("--seeds: at least two seeds are needed")
    if args.radius < 0:
        raise ConfigError("--radius must be nonnegative")
    if args.fmt != "csv" and len(alpha) != 2:
        raise ConfigError(f"--format {args.fmt} needs a two-entry --alpha")
    try:
        draws = [vanish.pseudo_random_draw(s, len(alpha)) for s in seeds]
    except RuntimeError as exc:
        raise DegenerateParameters(str(exc)) from None
    grid = vanish.scan(alpha, args.radius, draws, workers=threads())
    verdicts = [vanish.check_conjecture(grid)]
    if len(alpha) == 2 and alpha[1] != 0:
        verdicts.append(vanish.check_zero_symmetry(alpha, args.radius, draws, workers=threads()))
    verdicts.append(Verdict("draw-agreement", not grid.disagreements,
                                   {"disagreements": sorted(grid.disagreements)}))
    report = verdicts_report("scan", verdicts)
    report["alpha"] = list(alpha)
    report["seeds"] = list(seeds)
    report["draws"] = [p.to_dict() for p in draws]
    report["extra_zeros"] = sorted(grid.cells_of("extra_zero"))
    write_atomic(args.out, vanish.render(grid, args.fmt))
    if args.report is not None:
        write_atomic(args.report, _dumps(report))
    else:
        for c in report["checks"]:
            print(f"{c['check']}: {'pass' if c['passed'] else 'FAIL'}", file=sys.stderr)
    return EXIT_OK if not grid.disagreements else EXIT_VERIFY


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "scan": cmd_scan}


def main(argv: list[str] | None = None) -> int:
    argv = _normalise_argv(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        threads()
        return COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"bcinterp: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DegenerateParameters as exc:
        print(f"bcinterp: degenerate parameters: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
