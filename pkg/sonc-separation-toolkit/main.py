"""Command-line entry point of the SONC separation toolkit.

    python main.py [--format json|csv|text] [--seed N] [--out PATH] [--metrics-out PATH] <command> ...

Exit codes: 0 success, 1 negative verdict, 2 parse or configuration error,
3 soundness alarm.
"""
import argparse
import sys
from typing import Callable, Dict, List, Optional, Sequence

from commands.attack import run_attack
from commands.bounds import bound, phi_audit
from commands.certificates import check_certificate, random_certificate
from commands.circuits import check_circuit
from commands.formatters import EXIT_ALARM, EXIT_USAGE, FORMATS, CommandResult, render
from config import settings
from errors import ClaimViolationError, SamplingError, SoundnessAlarm
from experiment.models import AttackConfig
from middleware.logging_middleware import StructuredCommandLogging
from monitoring import COMMAND_DURATION, write_metrics

# Options whose values may start with "-", e.g. --K -2:2
NEGATIVE_VALUE_OPTIONS = ("--K",)


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _global_options(defaults: bool) -> argparse.ArgumentParser:
    # Subparsers suppress their defaults so flags given before the command survive.
    default = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--format", choices=FORMATS, default=default("json"), help="Output format")
    parser.add_argument("--seed", type=int, default=default(0), help="Seed for randomized commands")
    parser.add_argument("--out", default=default(None), help="Write the result here instead of stdout")
    parser.add_argument("--metrics-out", default=default(None), help="Write Prometheus metrics here")
    return parser


def _add_bound_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--K", action="append", required=True, metavar="LO:HI",
                        help="Interval of K; once to broadcast, or once per axis")
    parser.add_argument("--d", type=int, required=True, help="Degree of the witness' square root (>= 3)")
    parser.add_argument("--n", type=positive_int, required=True, help="Number of variables")
    parser.add_argument("--u", default=None, help="Rational u > 1 instead of the automatic choice")
    parser.add_argument("--anchor", action="store_true", help="Rescale K so the all-ones point is interior")


# PUBLIC_INTERFACE
def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser with all subcommands.

    Returns:
        The parser; each subcommand sets a handler default
    """
    common = _global_options(defaults=False)
    parser = argparse.ArgumentParser(
        prog="sonc-sep",
        description="Exact SONC certificates and the separation bound for nonnegative polynomials",
        parents=[_global_options(defaults=True)],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-circuit", parents=[common], help="Recognize a circuit and decide nonnegativity")
    p.add_argument("poly", help="Polynomial text; put -- before text starting with '-'")
    p.add_argument("--n", type=positive_int, required=True, help="Number of variables")
    p.set_defaults(handler=lambda a: check_circuit(a.poly, a.n))

    p = sub.add_parser("check-cert", parents=[common], help="Verify a SONC certificate file")
    p.add_argument("path", help="Certificate JSON file")
    p.add_argument("--u", default=None, help="Also evaluate L with this u on a verified certificate")
    p.set_defaults(handler=lambda a: check_certificate(a.path, u=a.u))

    p = sub.add_parser("bound", parents=[common], help="Certified lower bound on the SONC approximation error")
    _add_bound_options(p)
    p.set_defaults(handler=lambda a: bound(a.K, a.d, a.n, u=a.u, anchor=a.anchor))

    p = sub.add_parser("phi-audit", parents=[common], help="Check the p(y) identity and log-convexity of phi")
    p.add_argument("--start", type=float, default=0.0)
    p.add_argument("--stop", type=float, default=5.0)
    p.add_argument("--step", type=float, default=0.01)
    p.set_defaults(handler=lambda a: phi_audit(a.start, a.stop, a.step))

    p = sub.add_parser("attack", parents=[common], help="Search for SONC candidates beating the bound")
    _add_bound_options(p)
    p.add_argument("--budget", type=positive_int, default=settings.ATTACK_BUDGET, help="Iterations per restart")
    p.add_argument("--restarts", type=positive_int, default=settings.ATTACK_RESTARTS)
    p.add_argument("--parts", type=positive_int, default=settings.ATTACK_PARTS, help="Circuits per candidate")
    p.add_argument("--resolution", type=int, default=settings.GRID_RESOLUTION, help="Grid points per axis")
    p.add_argument("--verify-interval", type=positive_int, default=settings.VERIFY_INTERVAL)
    p.add_argument("--trace", default=None, help="Write the CSV trace of certified improvements here")
    p.set_defaults(handler=_attack_handler)

    p = sub.add_parser("random-cert", parents=[common], help="Emit a random certificate that verifies")
    p.add_argument("--n", type=positive_int, required=True, help="Number of variables")
    p.add_argument("--degree", type=int, required=True, help="Total degree bound 2d of the support pool")
    p.add_argument("--parts", type=positive_int, default=3)
    p.set_defaults(handler=lambda a: random_certificate(a.n, a.degree, a.parts, a.seed))

    return parser


def _attack_handler(args: argparse.Namespace) -> CommandResult:
    cfg = AttackConfig(
        seed=args.seed,
        parts=args.parts,
        budget=args.budget,
        restarts=args.restarts,
        resolution=args.resolution,
        verify_interval=args.verify_interval,
    )
    return run_attack(args.K, args.d, args.n, cfg, u=args.u, anchor=args.anchor, trace_path=args.trace)


def normalize_argv(argv: Sequence[str]) -> List[str]:
    """Join options like --K with a value that starts with '-' into --K=value."""
    out: List[str] = []
    tokens = list(argv)
    i = 0
    while i < len(tokens):
        token = tokens[i]
        if token in NEGATIVE_VALUE_OPTIONS and i + 1 < len(tokens) and tokens[i + 1].startswith("-"):
            out.append(f"{token}={tokens[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _run(handler: Callable[[argparse.Namespace], CommandResult], args: argparse.Namespace) -> int:
    try:
        result = handler(args)
        _emit(render(result, args.format), args.out)
    except (SoundnessAlarm, ClaimViolationError) as e:
        print(f"soundness alarm: {e}", file=sys.stderr)
        return EXIT_ALARM
    except (ValueError, OSError, SamplingError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return result.exit_code


# PUBLIC_INTERFACE
def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one subcommand.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        The exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(normalize_argv(sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0
    settings.configure_logging()

    fields: Dict[str, object] = {"format": args.format, "seed": args.seed}
    with StructuredCommandLogging(args.command, **fields) as log:
        with COMMAND_DURATION.labels(command=args.command).time():
            log.exit_code = _run(args.handler, args)
    if args.metrics_out:
        try:
            write_metrics(args.metrics_out)
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
    return log.exit_code


if __name__ == "__main__":
    sys.exit(main())
