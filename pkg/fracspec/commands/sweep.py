"""fracspec all: every example with its defaults, plus a merged summary."""
from __future__ import annotations

import argparse
import logging
from concurrent.futures import ThreadPoolExecutor

import config
from fracspec.commands._common import add_out_argument
from fracspec.services.benchmarks import REGISTRY, run_example
from fracspec.services.reporting import write_result, write_summary

logger = logging.getLogger("fracspec.bench")


def register(subparsers) -> None:
    parser = subparsers.add_parser("all", help="run the full reproduction sweep")
    parser.add_argument("--only", type=int, nargs="+", help="restrict the sweep to these example ids")
    add_out_argument(parser)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    ids = sorted(args.only) if args.only else sorted(REGISTRY)
    workers = min(config.worker_count(), len(ids))
    logger.info("Sweep over examples %s with %d worker(s)", ids, workers)
    # Each example writes its own files; the summary is merged afterwards in id order
    with ThreadPoolExecutor(max_workers=workers) as executor:
        results = list(executor.map(run_example, ids))
    for result in results:
        write_result(result, args.out)
    print(write_summary(results, args.out))
    return 0
