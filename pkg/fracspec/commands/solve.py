"""fracspec solve <problem-file>: solve a JSON problem."""
from __future__ import annotations

import argparse
from pathlib import Path

from fracspec.commands._common import add_out_argument
from fracspec.services.benchmarks import Table
from fracspec.services.problem_file import load_problem, solve_spec
from fracspec.services.reporting import write_table


def register(subparsers) -> None:
    parser = subparsers.add_parser("solve", help="solve a problem described by a JSON file")
    parser.add_argument("problem", type=Path, help="problem file")
    parser.add_argument("--samples", type=int, default=11, help="output grid points per dimension")
    add_out_argument(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    spec = load_problem(args.problem)
    result = solve_spec(spec, args.samples)
    name = spec.name or args.problem.stem
    d = len(spec.domain.lengths)
    header = tuple(f"x{i + 1}" for i in range(d)) + ("re_u", "im_u")
    path = write_table(Table(f"{name}_solution", header, tuple(map(tuple, result.samples))), args.out)
    print(path)
    if result.merr is not None:
        print(f"Merr = {result.merr:.5E}")
        print(f"Rerr = {result.rerr:.5E}")
    return 0
