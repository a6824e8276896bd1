"""CSV tables and gnuplot scripts for benchmark results."""
from __future__ import annotations

import csv
import io
import logging
import math
from pathlib import Path
from typing import Iterable, Sequence

from fracspec.errors import ArtifactIOError
from fracspec.services.benchmarks import BenchmarkResult, PlotData, Table

logger = logging.getLogger("fracspec.bench")


def format_cell(value) -> str:
    """Scientific with 6 significant digits for floats, '-' for missing values."""
    if value is None:
        return "-"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if math.isnan(value):
            return "nan"
        return f"{value:.5E}"
    return str(value)


def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(value) for value in row])
    return buffer.getvalue()


def _write(path: Path, text: str) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise ArtifactIOError(f"cannot write {path}: {exc}") from exc
    return path


def write_table(table: Table, out_dir: Path) -> Path:
    return _write(Path(out_dir) / f"{table.name}.csv", render_csv(table.header, table.rows))


def write_plot(plot: PlotData, out_dir: Path) -> list[Path]:
    out_dir = Path(out_dir)
    data = _write(out_dir / f"{plot.name}.csv", render_csv(plot.header, plot.rows))
    script = _write(out_dir / f"{plot.name}.gp", plot.script + "\n")
    return [data, script]


def write_result(result: BenchmarkResult, out_dir: Path) -> list[Path]:
    paths = [write_table(table, out_dir) for table in result.tables]
    for plot in result.plots:
        paths.extend(write_plot(plot, out_dir))
    logger.info("Example %d: wrote %s", result.example, ", ".join(path.name for path in paths))
    return paths


def write_summary(results: Sequence[BenchmarkResult], out_dir: Path) -> Path:
    """All tables of a sweep in one CSV, in example order."""
    rows = []
    for result in sorted(results, key=lambda item: item.example):
        for table in result.tables:
            for row in table.rows:
                for column, value in zip(table.header, row):
                    rows.append((result.example, table.name, format_cell(row[0]), column, value))
    return _write(
        Path(out_dir) / "summary.csv", render_csv(("example", "table", "row", "column", "value"), rows)
    )
