"""Symbol-level precoding toolkit: command-line entry point."""

import argparse
import logging
import sys

from pydantic import ValidationError

from cli import bench, selftest, slot
from core.config import settings
from core.errors import SlpError
from core.logs import configure_logging

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slp",
        description="Symbol-level precoding against zero-forcing: benchmarks, slot inspection and self-tests.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")
    subparsers = parser.add_subparsers(dest="command", required=True)
    bench.register(subparsers)
    slot.register(subparsers)
    selftest.register(subparsers)
    return parser


def _log_level(verbose: int) -> str:
    if verbose >= 2:
        return "DEBUG"
    if verbose == 1:
        return "INFO"
    return settings.log_level


def _describe(exc: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(p) for p in err['loc']) or 'flags'}: {err['msg']}" for err in exc.errors()
    )


def main(argv: list[str] | None = None) -> int:
    """Run one subcommand; returns 0 on success, 1 on runtime failure, 2 on usage errors."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    configure_logging(_log_level(args.verbose))
    try:
        return args.run(args)
    except ValidationError as exc:
        print(f"{parser.prog} {args.command}: error: {_describe(exc)}", file=sys.stderr)
        return EXIT_USAGE
    except SlpError as exc:
        logger.error("%s failed: %s", args.command, exc)
        print(f"{parser.prog} {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
