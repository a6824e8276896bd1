"""fracspec command-line entry point."""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

import config
from fracspec.commands import oracle, run, solve, sweep
from fracspec.errors import FracspecError

logger = logging.getLogger("fracspec")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracspec",
        description="Variable-order time-fractional PDE solver and benchmark harness",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (run, solve, oracle, sweep):
        command.register(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit code."""
    logging.basicConfig(level=config.LOG_LEVEL)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except FracspecError as exc:
        logger.error("%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
