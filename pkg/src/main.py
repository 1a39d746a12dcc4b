#!/usr/bin/env python3
"""
posettop Main Entry Point

LEARNING: Entry point pattern, CLI structure

What this does:
- Thin entry point
- Sets up logging
- Parses command-line arguments (family / compute / check / oracle)
- Delegates to src.pipeline and prints the report as JSON or a table
- Maps outcomes to exit codes: 0 ok, 1 check failure, 2 usage error,
  3 infeasible size
"""

import sys
import json
import logging
import argparse
from typing import List, Optional

from src.config import Settings, get_settings, load_config
from src.exceptions import InfeasibleSizeError, PosetTopError
from src.families import family_names
from src.pipeline import (
    CLI, COMPUTE_KINDS, ORACLE_NAMES, SUITE_NAMES, CheckRunner, RunReport,
    compute_report, family_report, load_target, oracle_report, render_table,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


def setup_logging(debug: bool = False, level: str = "INFO"):
    """
    Configure logging for the application.

    LEARNING POINT:
    - Logging is configured once at entry point
    - All modules use logging.getLogger(__name__)
    - Logs go to stderr so stdout carries only the report
    """
    logging.basicConfig(
        level=logging.DEBUG if debug else getattr(logging, level, logging.INFO),
        format="%(levelname)s - %(name)s - %(message)s",
        stream=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posettop",
        description="Exact topology of finite posets, simplicial complexes and subspace arrangements"
    )
    parser.add_argument('--format', choices=('json', 'table'), default='json', help='Output format')
    parser.add_argument('--config', type=str, default=None, help='Path to a config YAML file')
    parser.add_argument('--debug', action='store_true', help='Enable debug logging')
    sub = parser.add_subparsers(dest='command', required=True)

    family = sub.add_parser('family', help='Build a named poset or complex')
    family.add_argument('name', help=f"One of: {', '.join(family_names())}")
    family.add_argument('params', nargs='*', help='Family parameters')
    family.add_argument('--out', type=str, default=None, help='Write the JSON here')

    compute = sub.add_parser('compute', help='Compute an invariant')
    compute.add_argument('kind', choices=COMPUTE_KINDS)
    compute.add_argument('oracle', nargs='*', help='NAME PARAMS for compute oracle')
    compute.add_argument('--family', nargs='+', metavar='NAME_OR_PARAM', help='Family and parameters')
    compute.add_argument('--input', type=str, default=None, help='Poset, complex or arrangement JSON')
    compute.add_argument('--arrangement', nargs='+', metavar='KIND_OR_PARAM', help='Arrangement kind, n [k]')
    compute.add_argument('--complex', action='store_true', help='Read the arrangement over C')
    compute.add_argument('--proper', action='store_true', help='Remove the bounds of the poset first')
    compute.add_argument('--derive', action='append', default=[],
                         help='Derived poset, KIND or KIND:x[:y] (repeatable)')
    compute.add_argument('--labeling', type=str, default=None, help='Built-in EL-labeling name')
    compute.add_argument('--unreduced', action='store_true', help='Unreduced (co)homology')

    check = sub.add_parser('check', help='Run verification suites')
    check.add_argument('suite', nargs='?', default='all', choices=SUITE_NAMES)
    check.add_argument('--max-size', type=int, default=None, help='Skip instances above this size')
    check.add_argument('--jobs', type=int, default=1, help='Worker threads')
    check.add_argument('--timing', action='store_true', help='Include wall times in the JSON')

    oracle = sub.add_parser('oracle', help='Closed-form values')
    oracle.add_argument('name', choices=ORACLE_NAMES)
    oracle.add_argument('params', nargs='*')
    return parser


def emit(report: RunReport, fmt: str, timing: bool = False) -> None:
    payload = report.to_dict(timing=timing)
    if fmt == 'table':
        print(render_table(payload))
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))


def run_command(args: argparse.Namespace, settings: Settings, argv: List[str]) -> int:
    """Dispatch one parsed command and return its exit code."""
    if args.command == 'family':
        emit(family_report(args.name, args.params, args.out), args.format)
        return EXIT_OK

    if args.command == 'oracle':
        emit(oracle_report(args.name, args.params), args.format)
        return EXIT_OK

    if args.command == 'compute':
        target = None
        if args.kind != 'oracle':
            target = load_target(args.family, args.input, args.arrangement, args.complex, args.derive)
        options = {"proper": args.proper, "unreduced": args.unreduced, "labeling": args.labeling}
        command = f"{CLI} " + " ".join(argv)
        emit(compute_report(args.kind, target, options, args.oracle, settings, command), args.format)
        return EXIT_OK

    # check: the table view is the runner's own progress output
    runner = CheckRunner(suite=args.suite, max_size=args.max_size, jobs=args.jobs,
                         verbose=args.format == 'table', settings=settings)
    results = runner.run()
    if args.format == 'json':
        emit(runner.report(results, timing=args.timing), 'json', timing=args.timing)
    return EXIT_OK if results['status'] == 'passed' else EXIT_CHECK_FAILED


def main(argv: Optional[List[str]] = None):
    """
    Main entry point for posettop.

    LEARNING POINT:
    - Entry point should be thin
    - Parse arguments, setup logging, run the command, pick the exit code
    - All math lives in the modules under src/
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = load_config(args.config) if args.config else get_settings()
        setup_logging(debug=args.debug, level=settings.log_level)
        code = run_command(args, settings, argv)
    except InfeasibleSizeError as e:
        print(f"❌ Infeasible: {e.message}", file=sys.stderr)
        code = EXIT_INFEASIBLE
    except PosetTopError as e:
        print(f"❌ Error: {e}", file=sys.stderr)
        code = EXIT_USAGE
    except Exception:
        logging.getLogger(__name__).exception("Unexpected error")
        code = EXIT_CHECK_FAILED

    sys.exit(code)


if __name__ == "__main__":
    main()
