"""fracspec run <example-id>: reproduce one example's tables."""
from __future__ import annotations

import argparse

from fracspec.commands._common import add_override_arguments, overrides
from fracspec.services.benchmarks import run_example
from fracspec.services.reporting import write_result


def register(subparsers) -> None:
    parser = subparsers.add_parser("run", help="run one example and write its CSV tables")
    add_override_arguments(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    result = run_example(args.example, overrides(args))
    paths = write_result(result, args.out)
    for path in paths:
        print(path)
    return 0
