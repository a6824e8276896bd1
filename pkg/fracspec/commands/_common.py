"""Arguments shared by the example subcommands."""
from __future__ import annotations

import argparse
from pathlib import Path

import config


def add_override_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("example", type=int, help="example id (1-8)")
    parser.add_argument("--N", type=int, help="sine modes (total in 2D)")
    parser.add_argument("--K", type=int, help="Müntz basis size")
    parser.add_argument("--delta", type=float, help="Müntz exponent step")
    parser.add_argument("--T", type=float, help="final time")
    parser.add_argument("--quad", type=int, help="Gauss-Legendre order per dimension")
    parser.add_argument("--test-points", dest="test_points", type=int, help="N_t interior points per dimension")
    parser.add_argument("--test-times", dest="test_times", type=int, help="K_t time samples")
    add_out_argument(parser)


def add_out_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, default=config.OUT_DIR, help="output directory")


def overrides(args: argparse.Namespace) -> dict:
    """Override keys the user actually passed."""
    keys = ("N", "K", "delta", "T", "quad", "test_points", "test_times")
    return {key: getattr(args, key) for key in keys if getattr(args, key, None) is not None}
