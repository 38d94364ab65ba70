"""
Command-line surface

```bash
eisenzeta tables
eisenzeta gen --type IV --ell 6 --method both
eisenzeta zeta --type II --ell 12 --method ALL --format json
eisenzeta rha --types I,III --ell-range 2..24 --tol 1e-9
eisenzeta interlace --types III --step 3
eisenzeta padic --types I,IV --primes 3,5,7 --what EIS,ZETA
eisenzeta modular theta --type II --ell 8 --order 64
eisenzeta verify --config verify.conf --workers most --format json --out report.json
eisenzeta groups dump --type III
```

Exit codes: 0 when every check passes (FLAGGED items included), 1 when a
check fails or a computation raises, 2 on usage errors.
"""

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from eisenzeta import __version__
from eisenzeta.arith.rational import format_rational, parse_rational
from eisenzeta.eisenstein.core import BOUNDS, CLOSED_FORM_TYPES, closed_form, eisenstein_poly
from eisenzeta.errors import ConfigError, EisenZetaError, InvalidWeightError
from eisenzeta.groups.core import TYPE_LABELS, averaging_group, builtin_group
from eisenzeta.modular.core import eisenstein_series, series_integrality, theta_map
from eisenzeta.poly.homog import format_homog
from eisenzeta.utils.config import (
    FORMATS,
    METHODS,
    WORKERS,
    RunConfig,
    load_config,
    parse_int_list,
    parse_list,
    parse_range,
    parse_types,
)
from eisenzeta.utils.render import render_json, render_report, render_rows
from eisenzeta.utils.report import CheckReport, Status
from eisenzeta.verify.core import SUITES, SuiteRunner, SuiteTask, check_interlace, cmd_tables, run_task
from eisenzeta.zeta.core import INTERLACE_STEPS, zeta_for

logger = logging.getLogger("EisenZeta")

LOG_FORMAT = "[%(asctime)s] %(name)s (%(levelname)s) - %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"


def _what_list(text: str):
    return tuple(w.upper() for w in parse_list(text))


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("output and run options")
    group.add_argument("--format", choices=FORMATS, default=None, help="output format (default: table)")
    group.add_argument("--out", default=None, metavar="PATH", help="write output to PATH instead of stdout")
    group.add_argument("--config", default=None, metavar="PATH", help="key = value config file")
    group.add_argument("--workers", choices=WORKERS, default=None, help="CPU core utilization")
    verbosity = group.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings only, no progress bars")
    return common


def _sweep_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--types", type=parse_types, default=None, help="comma separated, e.g. I,III")
    parser.add_argument("--ell-min", type=int, default=None)
    parser.add_argument("--ell-max", type=int, default=None)
    parser.add_argument("--ell-range", type=parse_range, default=None, metavar="A..B")
    parser.add_argument("--tol", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="eisenzeta",
        description="Eisenstein polynomials of self-dual code types and their zeta polynomials",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", parents=[common], help="Eisenstein polynomial of one type and weight")
    gen.add_argument("--type", choices=TYPE_LABELS, required=True)
    gen.add_argument("--ell", type=int, required=True)
    gen.add_argument("--method", choices=("average", "closed", "both"), default="average")
    gen.add_argument("--bound", choices=BOUNDS, default="full", help="closed-form summation bound")

    zeta = commands.add_parser("zeta", parents=[common], help="zeta polynomial of an Eisenstein polynomial")
    zeta.add_argument("--type", choices=TYPE_LABELS, required=True)
    zeta.add_argument("--ell", type=int, required=True)
    zeta.add_argument("--method", type=str.upper, choices=METHODS, default="ALL")
    zeta.add_argument("--q", type=parse_rational, default=None, help="parameter, default the type's q")

    rha = commands.add_parser("rha", parents=[common], help="roots on the critical circle")
    _sweep_options(rha)

    interlace = commands.add_parser("interlace", parents=[common], help="interlacing of consecutive weights")
    _sweep_options(interlace)
    interlace.add_argument("--ell", type=int, default=None, help="single pair (l, l + step)")
    interlace.add_argument("--step", type=int, default=None)

    padic = commands.add_parser("padic", parents=[common], help="p-integrality at l = 2(p - 1)")
    padic.add_argument("--types", type=parse_types, default=None)
    padic.add_argument("--primes", type=parse_int_list, default=None)
    padic.add_argument("--what", type=_what_list, default=None, help="EIS,ZETA,THETA")
    padic.add_argument("--order", type=int, default=None, help="theta truncation in lattice units")

    modular = commands.add_parser("modular", help="q-expansions")
    actions = modular.add_subparsers(dest="action", required=True)
    theta = actions.add_parser("theta", parents=[common], help="theta image of an Eisenstein polynomial")
    theta.add_argument("--type", choices=TYPE_LABELS, required=True)
    theta.add_argument("--ell", type=int, required=True)
    theta.add_argument("--order", type=int, default=None)
    series = actions.add_parser("eisenstein-series", parents=[common], help="q-expansion of psi_k")
    series.add_argument("--k", type=int, required=True)
    series.add_argument("--order", type=int, default=None)
    integral = actions.add_parser("integrality", parents=[common], help="p-integrality of psi_k")
    integral.add_argument("--k", type=int, required=True)
    integral.add_argument("--p", type=int, required=True)
    integral.add_argument("--order", type=int, default=None)

    commands.add_parser("tables", parents=[common], help="reproduce the Type II reference tables")

    verify = commands.add_parser("verify", parents=[common], help="run the acceptance suites")
    _sweep_options(verify)
    verify.add_argument("--primes", type=parse_int_list, default=None)
    verify.add_argument("--what", type=_what_list, default=None)
    verify.add_argument("--method", type=str.upper, choices=METHODS, default=None)
    verify.add_argument("--order", type=int, default=None)
    verify.add_argument("--step", type=int, default=None)
    verify.add_argument("--suites", type=parse_list, default=None, help=f"subset of {','.join(SUITES)}")

    groups = commands.add_parser("groups", help="builtin matrix groups")
    group_actions = groups.add_subparsers(dest="action", required=True)
    dump = group_actions.add_parser("dump", parents=[common], help="every element of a group")
    dump.add_argument("--type", choices=TYPE_LABELS, required=True)
    dump.add_argument("--averaging", action="store_true", help="dump the averaging group instead")
    return parser


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """
    Config file values overridden by command-line flags.

    Raises:
        ConfigError: On invalid values in either source
    """

    config = load_config(args.config) if getattr(args, "config", None) else RunConfig()
    overrides = {name: getattr(args, name, None) for name in (
        "types", "ell_min", "ell_max", "primes", "what", "tol", "order", "step", "format", "out", "workers",
    )}
    if getattr(args, "command", None) == "verify":
        overrides["method"] = args.method
    if getattr(args, "ell_range", None):
        overrides["ell_min"], overrides["ell_max"] = args.ell_range
    return config.merged(overrides)


def configure_logging(args: argparse.Namespace) -> None:
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, datefmt=LOG_DATEFMT, stream=sys.stderr)


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
        logger.info(f"Wrote {out}")
    else:
        sys.stdout.write(text)


def run_gen(args, config: RunConfig):
    poly = eisenstein_poly(args.type, args.ell)
    rows = [{"type": args.type, "ell": args.ell, "method": "average", "polynomial": _homog_text(poly.tilde)}]
    payload = {"average": poly.to_json()}
    status = 0

    if args.method in ("closed", "both"):
        if args.type not in CLOSED_FORM_TYPES:
            raise ConfigError(f"No closed form for Type {args.type}. Choose one of {', '.join(CLOSED_FORM_TYPES)}")
        bounds = (args.bound,) if args.method == "closed" else BOUNDS
        for bound in bounds:
            predicted = closed_form(args.type, args.ell, bound)
            method = f"closed ({bound})"
            rows.append({"type": args.type, "ell": args.ell, "method": method, "polynomial": _homog_text(predicted)})
            payload[f"closed_{bound}"] = predicted.to_json() if predicted is not None else None
            agrees = predicted == poly.tilde
            payload[f"closed_{bound}_agrees"] = agrees
            if args.method == "both" and bound == "full" and not agrees:
                logger.error(f"Closed form for Type {args.type}, l={args.ell} differs from the average")
                status = 1
            elif args.method == "both" and not agrees:
                logger.info(f"The {bound} summation bound differs from the average at l={args.ell}")
        if args.method == "closed":
            rows = rows[1:]
            payload.pop("average")

    return render_rows(rows, ("type", "ell", "method", "polynomial"), config.format, payload), status


def _homog_text(f) -> str:
    return "0" if f is None else format_homog(f)


def run_zeta(args, config: RunConfig):
    methods = ["LINEAR", "SERIES", "CLOSED"] if args.method == "ALL" else [args.method]
    if args.method == "ALL" and (args.type not in CLOSED_FORM_TYPES or args.q is not None):
        methods.remove("CLOSED")
    results = [zeta_for(args.type, args.ell, m, args.q) for m in methods]
    rows = [
        {
            "type": r.label,
            "ell": r.ell,
            "method": r.method,
            "q": format_rational(r.q),
            "n": r.n,
            "d": r.d,
            "P": str(r.P),
        }
        for r in results
    ]
    status = 0
    if len({r.P for r in results}) > 1:
        logger.error(f"Zeta routes disagree for Type {args.type}, l={args.ell}")
        status = 1
    text = render_rows(
        rows, ("type", "ell", "method", "q", "n", "d", "P"), config.format, [r.to_json() for r in results]
    )
    return text, status


def run_suites(config: RunConfig, suites, progress: bool, evidence_primes=(3,)):
    report = SuiteRunner(config, tuple(suites), progress, evidence_primes).run()
    return render_report(report, config.format), report.exit_code()


def run_interlace(args, config: RunConfig, progress: bool):
    if args.ell is None:
        return run_suites(config, ("interlace",), progress)
    report = CheckReport("interlace")
    for label in config.types:
        step = config.step or INTERLACE_STEPS[label]
        subject = f"interlace {label} l={args.ell}->{args.ell + step}"
        task = SuiteTask("interlace", subject, check_interlace, (label, args.ell, step, config.tol))
        report.extend(run_task(task))
    return render_report(report, config.format), report.exit_code()


def run_modular(args, config: RunConfig):
    if args.action == "integrality":
        scan = series_integrality(eisenstein_series(args.k, config.order), args.p)
        report = CheckReport("modular")
        report.add(
            f"psi_{args.k} p={args.p}",
            "every retained coefficient is p-integral",
            Status.PASS if scan.passed else Status.FAIL,
            **scan.to_json(),
        )
        return render_report(report, config.format), report.exit_code()

    if args.action == "theta":
        poly = eisenstein_poly(args.type, args.ell)
        if poly.is_zero():
            raise InvalidWeightError(f"The Type {args.type} Eisenstein polynomial of weight {args.ell} is zero")
        expansion = theta_map(poly.tilde, config.order)
    else:
        expansion = eisenstein_series(args.k, config.order)
    series = expansion.series
    rows = [
        {"exponent": format_rational(Fraction(e, series.denom)), "coefficient": format_rational(c)}
        for e, c in series.items()
    ]
    title = f"{expansion.label} mod q^{format_rational(Fraction(series.order, series.denom))}"
    return render_rows(rows, ("exponent", "coefficient"), config.format, expansion.to_json(), title), 0


def run_groups(args, config: RunConfig):
    group = averaging_group(args.type) if args.averaging else builtin_group(args.type)
    if config.format == "json":
        return render_json(group.to_json()), 0
    rows = [{"index": k, "matrix": str(sigma)} for k, sigma in enumerate(group.elements)]
    title = f"{group.name}, order {group.order}"
    return render_rows(rows, ("index", "matrix"), config.format, title=title), 0


def dispatch(args: argparse.Namespace, config: RunConfig):
    """Run one command; returns (rendered output, exit code)"""

    progress = not args.quiet and sys.stderr.isatty()
    command = args.command
    if command == "tables":
        return cmd_tables(config.format), 0
    if command == "gen":
        return run_gen(args, config)
    if command == "zeta":
        return run_zeta(args, config)
    if command == "rha":
        return run_suites(config, ("rha",), progress)
    if command == "interlace":
        return run_interlace(args, config, progress)
    if command == "padic":
        return run_suites(config, ("integrality", "lemma-mod"), progress, evidence_primes=())
    if command == "modular":
        return run_modular(args, config)
    if command == "groups":
        return run_groups(args, config)
    if command == "verify":
        return run_suites(config, args.suites or SUITES, progress)
    raise ValueError(f"Invalid command: {command}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args)

    try:
        config = resolve_config(args)
        if getattr(args, "suites", None):
            bad = [s for s in args.suites if s not in SUITES]
            if bad:
                raise ConfigError(f"Invalid suite: {bad[0]}. Choose from {', '.join(SUITES)}")
    except ConfigError as error:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {error}", file=sys.stderr)
        return 2

    try:
        text, status = dispatch(args, config)
    except ConfigError as error:
        print(f"{parser.prog}: error: {error}", file=sys.stderr)
        return 2
    except EisenZetaError as error:
        logger.error(f"{type(error).__name__}: {error}")
        return 1
    except ValueError as error:
        print(f"{parser.prog}: error: {error}", file=sys.stderr)
        return 2

    _write(text, config.out)
    return status


if __name__ == "__main__":
    sys.exit(main())
