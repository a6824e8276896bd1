"""fracspec oracle <example-id>: finite-difference cross-check."""
from __future__ import annotations

import argparse

from fracspec.commands._common import add_override_arguments, overrides
from fracspec.services.benchmarks import run_oracle
from fracspec.services.reporting import write_result


def register(subparsers) -> None:
    parser = subparsers.add_parser("oracle", help="compare an example against the L1 finite-difference solver")
    add_override_arguments(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    result = run_oracle(args.example, overrides(args))
    for path in write_result(result, args.out):
        print(path)
    return 0
