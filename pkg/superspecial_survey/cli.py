#!/usr/bin/env python3
"""
superspecial-survey CLI Entry Point

Subcommands: check, coeffs, count, table, density, verify.

Exit codes: 0 success, 1 usage error, 2 internal inconsistency (a computed
verdict contradicting p mod 3, or any InconsistencyError).
"""

import argparse
import json
import sys
import time
from typing import Any, Dict, List, Optional

from . import __version__
from .core.survey import FORMATS, annotate_with_published, emit, run_survey
from .errors import InconsistencyError, SurveyError
from .tools import CheckTool, CoeffsTool, CountTool, DensityTool, VerifyTool
from .utils.analytics import log_tool_execution
from .utils.cache import SurveyCache
from .utils.config import Settings, get_settings
from .utils.logger import Logger

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONSISTENT = 2


class UsageError(Exception):
    """Raised by the parser instead of exiting with argparse's status 2."""


class SurveyArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> SurveyArgumentParser:
    parser = SurveyArgumentParser(
        prog="superspecial-survey",
        description="Superspeciality and F_{p^2} point counts of x^3+y^3+w^3 = 2yw+z^2 = 0.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=SurveyArgumentParser)

    check = sub.add_parser("check", help="superspeciality verdict and the 16 coefficients")
    check.add_argument("p", type=int)
    check.add_argument("--method", choices=["enumeration", "expansion"], default="enumeration")
    check.add_argument("--json", action="store_true")

    coeffs = sub.add_parser("coeffs", help="the 16 target coefficients of (QP)^(p-1)")
    coeffs.add_argument("p", type=int)
    coeffs.add_argument(
        "--method", choices=["enumeration", "expansion", "both"], default="enumeration"
    )
    coeffs.add_argument("--json", action="store_true")

    count = sub.add_parser("count", help="#C_p(F_{p^2}) and Hasse-Weil classification")
    count.add_argument("p", type=int)
    count.add_argument("--method", choices=["fast", "brute", "both"], default="fast")
    count.add_argument("--json", action="store_true")

    table = sub.add_parser("table", help="survey a range of primes")
    table.add_argument("--min", dest="min_p", type=int, default=3)
    table.add_argument("--max", dest="max_p", type=int, default=269)
    table.add_argument("--format", choices=FORMATS, default="csv")
    table.add_argument("--no-counts", dest="with_counts", action="store_false")
    table.add_argument("--paper-table", action="store_true",
                       help="add a note column comparing with the published table")
    table.add_argument("--cache", action=argparse.BooleanOptionalAction, default=False)
    table.add_argument("--workers", type=int, default=None,
                       help="process-pool size; 1 runs serially")

    density = sub.add_parser("density", help="share of primes p = 2 (mod 3)")
    density.add_argument("--limit", type=int, required=True)
    density.add_argument("--json", action="store_true")

    verify = sub.add_parser("verify", help="smoothness certificate report")
    verify.add_argument("p", type=int)
    verify.add_argument("--json", action="store_true")

    return parser


def _out(text: str):
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _dump(payload: Dict[str, Any]):
    _out(json.dumps(payload, indent=2))


def cmd_check(args, settings: Settings) -> int:
    payload = CheckTool().run({"p": args.p, "method": args.method})
    if args.json:
        _dump(payload)
    else:
        verdict = "superspecial" if payload["superspecial"] else "not superspecial"
        agreement = "agrees" if payload["agrees"] else "DISAGREES"
        lines = [
            f"p={args.p}: {verdict} (p mod 3 = {args.p % 3}; prediction {agreement})",
        ]
        for entry in payload["coefficients"]:
            lines.append(f"  {entry['monomial']:<28} {entry['coefficient']}")
        _out("\n".join(lines))
    return EXIT_OK if payload["agrees"] else EXIT_INCONSISTENT


def cmd_coeffs(args, settings: Settings) -> int:
    payload = CoeffsTool().run({"p": args.p, "method": args.method})
    if args.json:
        _dump(payload)
    else:
        lines = []
        for entry in payload["coefficients"]:
            if args.method == "both":
                mark = "ok" if entry["agrees"] else "MISMATCH"
                lines.append(
                    f"{entry['monomial']:<28} {entry['enumeration']:>6} {entry['expansion']:>6}"
                    f"  {mark}"
                )
            else:
                lines.append(f"{entry['monomial']:<28} {entry['coefficient']}")
        _out("\n".join(lines))
    return EXIT_OK if payload.get("agrees", True) else EXIT_INCONSISTENT


def _count_line(record: Dict[str, Any]) -> str:
    return (
        f"#C_{record['p']}(F_{record['q']}) = {record['count']} "
        f"({record['classification']}; bounds [{record['hw_lower']}, {record['hw_upper']}]; "
        f"{record['method']})"
    )


def cmd_count(args, settings: Settings) -> int:
    payload = CountTool().run({"p": args.p, "method": args.method})
    if args.json:
        _dump(payload)
    elif args.method == "both":
        _out("\n".join([
            _count_line(payload["fast"]),
            _count_line(payload["brute"]),
            "agree" if payload["agrees"] else "DISAGREE",
        ]))
    else:
        _out(_count_line(payload))
    return EXIT_OK if payload.get("agrees", True) else EXIT_INCONSISTENT


def cmd_table(args, settings: Settings) -> int:
    workers = args.workers if args.workers is not None else settings.effective_workers()
    if workers < 1:
        raise UsageError(f"--workers must be at least 1, got {workers}")
    cache = SurveyCache(settings.cache_file, __version__) if args.cache else None
    rows = run_survey(
        args.min_p,
        args.max_p,
        with_counts=args.with_counts,
        workers=workers,
        cache=cache,
        cube_table_limit=settings.cube_table_limit,
    )
    if args.paper_table:
        rows = annotate_with_published(rows)
    data = emit(rows, args.format, include_note=args.paper_table)
    sys.stdout.flush()
    sys.stdout.buffer.write(data)
    sys.stdout.buffer.flush()
    return EXIT_OK


def cmd_density(args, settings: Settings) -> int:
    payload = DensityTool().run({"limit": args.limit})
    if args.json:
        _dump(payload)
    else:
        lines = [
            f"primes 3 < p <= {payload['limit']}: {payload['primes_considered']}, "
            f"p = 2 (mod 3): {payload['superspecial_count']}",
            f"ratio {payload['ratio']} = {payload['ratio_float']:.6f} "
            f"(expected {payload['expected']})",
        ]
        for checkpoint in payload["checkpoints"]:
            lines.append(f"  up to {checkpoint['limit']}: {checkpoint['ratio']}")
        _out("\n".join(lines))
    return EXIT_OK


def cmd_verify(args, settings: Settings) -> int:
    payload = VerifyTool().run({"p": args.p})
    if args.json:
        _dump(payload)
    elif payload["singular"]:
        state = "all zero" if payload["all_minors_zero"] else "not all zero"
        _out(f"p={args.p}: singular; Jacobian minors f1..f6 are {state}")
    else:
        lines = [f"p={args.p}: certificate {'verified' if payload['verified'] else 'FAILED'}"]
        for check in payload["identities"]:
            sign = f" [f5 sign {check['f5_sign']}]" if check.get("f5_sign") else ""
            lines.append(
                f"  {check['name']}: {check['combination']} = {check['target']}"
                f"  residual {check['residual']}{sign}"
            )
        _out("\n".join(lines))

    if payload["singular"]:
        return EXIT_USAGE
    return EXIT_OK if payload["verified"] else EXIT_INCONSISTENT


COMMANDS = {
    "check": cmd_check,
    "coeffs": cmd_coeffs,
    "count": cmd_count,
    "table": cmd_table,
    "density": cmd_density,
    "verify": cmd_verify,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, dispatch, and return the exit code."""
    start_time = time.time()
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE

    try:
        settings = get_settings()
    except SurveyError as e:
        print(f"superspecial-survey: {e}", file=sys.stderr)
        return EXIT_USAGE

    Logger(level="DEBUG" if args.verbose else settings.log_level)

    status, error = "error", None
    code = EXIT_OK
    try:
        code = COMMANDS[args.command](args, settings)
        if code == EXIT_OK:
            status = "success"
    except InconsistencyError as e:
        error, code = str(e), EXIT_INCONSISTENT
    except (SurveyError, ValueError, UsageError) as e:
        error, code = str(e), EXIT_USAGE
    except Exception as e:
        # Unexpected failures still reach the history before propagating
        error, code = f"{type(e).__name__}: {e}", None
        raise
    finally:
        if error and code is not None:
            print(f"superspecial-survey {args.command}: {error}", file=sys.stderr)
        inputs = {k: v for k, v in vars(args).items() if k not in ("command", "verbose")}
        try:
            log_tool_execution(
                tool_name=args.command,
                status=status,
                duration_sec=time.time() - start_time,
                inputs=inputs,
                error=error,
                metadata={"surface": "cli", "exit_code": code},
            )
        except Exception:
            pass
    return code


def main():
    """Entry point for the CLI"""
    sys.exit(run())


if __name__ == "__main__":
    main()
