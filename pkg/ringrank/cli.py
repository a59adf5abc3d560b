# -*- coding: utf-8 -*-
"""A module containing the ringrank command line.

Usage:
    ringrank [-v] [--max-ring-size N] analyze <file.json | -> [--deterministic]
    ringrank [-v] [--max-ring-size N] demo [--filter PAT] [--deterministic]
    ringrank [-v] construct <name> [args...] [--x X] [--primes P,Q]
        --emit <file.json | ->

Reports go to stdout and log records to stderr.

Exit codes:
    0: Success.
    1: A demo check failed.
    2: The job or a parameter is invalid.
    3: A computation failed or a computed check did not hold.

Functions:
    main: Parse the arguments, run a command and return its exit code.
    cmd_analyze: Analyze a job document and print its report.
    cmd_demo: Run the check catalog and print one line per check.
    cmd_construct: Build a named construction and write its job document.
"""

from __future__ import absolute_import
from __future__ import unicode_literals

from typing import (  # noqa: F401 pylint: disable=unused-import
    Any,
    List,
    Optional,
    Sequence,
)
import argparse
import datetime
import logging
import os
import sys

from . import config
from .demo import format_outcome, run_checks
from .errors import ComputationError, RingRankError, SchemaError
from .finring import FinRing
from .schema import (
    CONSTRUCTIONS,
    build_job,
    construct,
    dump_construction,
    load_job,
    render,
    report_error,
    report_finring,
    report_order,
)
from .validation import JobFile


__all__ = ("main", "cmd_analyze", "cmd_demo", "cmd_construct")

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_COMPUTATION = 3


def _as_error(exc):
    # type: (Exception) -> RingRankError
    """Return a library error for an exception raised on bad input."""
    if isinstance(exc, RingRankError):
        return exc
    return SchemaError(str(exc))


def _read_source(source):
    # type: (str) -> str
    if source == "-":
        return sys.stdin.read()
    with open(str(JobFile(source)), "r") as handle:
        return handle.read()


def _write(text, target):
    # type: (str, str) -> None
    if target == "-":
        sys.stdout.write(text)
        return
    with open(target, "w") as handle:
        handle.write(text)
    logger.info("wrote %s", target)


def cmd_analyze(source, deterministic=False, cap=None):
    # type: (str, bool, Optional[int]) -> int
    """Analyze the job read from a file, or from stdin when source is "-".

    The cap given here wins over the cap in the job, which wins over the
    environment. A failing cross-check in the report exits with 3.
    """
    ring_id = source
    try:
        job = load_job(_read_source(source))
        ring_id = job.ring_id
        cap = config.max_ring_size(
            job.max_ring_size if cap is None else cap
        )
        built = build_job(job)
        if isinstance(built, FinRing):
            document = report_finring(built, ring_id, cap)
        else:
            document = report_order(built, ring_id, cap)
    except ComputationError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        sys.stdout.write(render(report_error(ring_id, exc), deterministic))
        return EXIT_COMPUTATION
    except (RingRankError, ValueError, OSError) as exc:
        error = _as_error(exc)
        logger.error("%s: %s", type(error).__name__, error)
        sys.stdout.write(render(report_error(ring_id, error), deterministic))
        return EXIT_INPUT
    sys.stdout.write(render(document, deterministic))
    failed = [
        check
        for check in document.get("checks", ())
        if check.get("passed") is False
    ]
    if failed:
        logger.error("%d cross-checks failed", len(failed))
        return EXIT_COMPUTATION
    return EXIT_OK


def cmd_demo(pattern=None, deterministic=False):
    # type: (Optional[str], bool) -> int
    """Run the catalog, optionally filtered, and print a line per check.

    Returns:
        0 when every selected check passed, including when none was
        selected, and 1 otherwise.
    """
    if not deterministic:
        stamp = datetime.datetime.now(datetime.timezone.utc).replace(
            microsecond=0
        )
        print("ringrank demo at {}".format(stamp.isoformat()))
    outcomes = run_checks(pattern)
    for outcome in outcomes:
        print(format_outcome(outcome))
    failed = sum(1 for outcome in outcomes if not outcome.passed)
    print("{} checks run, {} failed".format(len(outcomes), failed))
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_construct(name, args, emit, x=None, primes=None):
    # type: (str, Sequence[int], str, Optional[int], Any) -> int
    """Build a construction and write its job document to emit."""
    try:
        built = construct(name, args, x=x, primes=primes)
    except ComputationError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_COMPUTATION
    except (RingRankError, ValueError) as exc:
        error = _as_error(exc)
        logger.error("%s: %s", type(error).__name__, error)
        return EXIT_INPUT
    _write(render(dump_construction(built), deterministic=True), emit)
    return EXIT_OK


def _prime_list(value):
    # type: (str) -> List[int]
    try:
        return [int(p) for p in value.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected comma-separated integers, not {!r}".format(value)
        )


def _parser():
    # type: () -> argparse.ArgumentParser
    parser = argparse.ArgumentParser(
        prog="ringrank",
        description="Compute ranks of orders and finite rings exactly.",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log at DEBUG level"
    )
    parser.add_argument(
        "--max-ring-size",
        type=int,
        default=None,
        help="the largest ring handled by brute force (default {}, or ${})"
        "".format(config.DEFAULT_MAX_RING_SIZE, config.MAX_RING_SIZE_ENV),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze a job document")
    analyze.add_argument("source", help="a job file, or - for stdin")
    analyze.add_argument(
        "--deterministic",
        action="store_true",
        help="omit the timestamp from the report",
    )

    demo = sub.add_parser("demo", help="run the check catalog")
    demo.add_argument(
        "--filter",
        dest="pattern",
        default=None,
        help="a glob or a substring selecting check names",
    )
    demo.add_argument(
        "--deterministic",
        action="store_true",
        help="omit the timestamp from the output",
    )

    build = sub.add_parser("construct", help="emit a construction as a job")
    build.add_argument("name", choices=sorted(CONSTRUCTIONS))
    build.add_argument("args", nargs="*", type=int)
    build.add_argument("--x", type=int, default=None)
    build.add_argument("--primes", type=_prime_list, default=None)
    build.add_argument("--emit", required=True, help="a file, or - for stdout")
    return parser


def main(argv=None):
    # type: (Optional[Sequence[str]]) -> int
    """Run the command line and return its exit code."""
    parser = _parser()
    try:
        options = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if options.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if options.max_ring_size is not None and options.max_ring_size < 1:
        logger.error("--max-ring-size must be a positive integer")
        return EXIT_INPUT
    if options.command == "analyze":
        return cmd_analyze(
            options.source, options.deterministic, options.max_ring_size
        )
    if options.command == "demo":
        if options.max_ring_size is not None:
            # The catalog resolves its cap through the environment.
            os.environ[config.MAX_RING_SIZE_ENV] = str(options.max_ring_size)
        return cmd_demo(options.pattern, options.deterministic)
    return cmd_construct(
        options.name,
        options.args,
        options.emit,
        x=options.x,
        primes=options.primes,
    )
