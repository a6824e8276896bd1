"""API routes for the example registry and problem solving."""
from __future__ import annotations

import asyncio
import logging
from typing import Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from fracspec.errors import DomainError, FracspecError, NumericalFailure
from fracspec.services.benchmarks import REGISTRY, BenchmarkResult, get_benchmark
from fracspec.services.problem_file import ProblemSpec, SolveReport, solve_spec
from fracspec.services.reporting import format_cell

logger = logging.getLogger("fracspec.api")

router = APIRouter(prefix="/api", tags=["solver"])


# --- Pydantic schemas ---


class ExampleInfo(BaseModel):
    id: int
    title: str
    defaults: dict
    accepts: list[str]


class RunRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    N: Optional[int] = Field(default=None, ge=1)
    K: Optional[int] = Field(default=None, ge=1)
    delta: Optional[float] = Field(default=None, gt=0)
    T: Optional[float] = Field(default=None, gt=0)
    quad: Optional[int] = Field(default=None, ge=2)
    test_points: Optional[int] = Field(default=None, ge=1)
    test_times: Optional[int] = Field(default=None, ge=1)


class TableResponse(BaseModel):
    name: str
    header: list[str]
    rows: list[list[str]]  # cells formatted as in the CSV files


class RunResponse(BaseModel):
    example: int
    tables: list[TableResponse]
    plots: list[str]


def _http_error(exc: FracspecError) -> HTTPException:
    if isinstance(exc, DomainError):
        return HTTPException(422, str(exc))
    if isinstance(exc, NumericalFailure):
        logger.warning("Numerical failure: %s", exc)
        return HTTPException(500, str(exc))
    logger.exception("Solver error: %s", exc)
    return HTTPException(500, str(exc))


def _run_response(result: BenchmarkResult) -> RunResponse:
    return RunResponse(
        example=result.example,
        tables=[
            TableResponse(
                name=table.name,
                header=list(table.header),
                rows=[[format_cell(value) for value in row] for row in table.rows],
            )
            for table in result.tables
        ],
        plots=[plot.name for plot in result.plots],
    )


# --- Examples ---


@router.get("/examples")
async def list_examples() -> list[ExampleInfo]:
    """Registered examples with their default parameters."""
    return [
        ExampleInfo(id=bench.id, title=bench.title, defaults=bench.defaults, accepts=list(bench.accepts))
        for bench in REGISTRY.values()
    ]


@router.post("/examples/{example_id}/run")
async def run_example(example_id: int, body: Optional[RunRequest] = None) -> RunResponse:
    """Run one example with optional parameter overrides."""
    overrides = body.model_dump(exclude_none=True) if body else {}
    try:
        bench = get_benchmark(example_id)
    except DomainError as exc:
        raise HTTPException(404, str(exc)) from exc
    try:
        result = await asyncio.to_thread(bench.run, overrides)
    except FracspecError as exc:
        raise _http_error(exc) from exc
    return _run_response(result)


# --- Problems ---


@router.post("/solve")
async def solve_problem(spec: ProblemSpec, samples: int = 11) -> SolveReport:
    """Solve a problem given in the problem-file schema."""
    if samples < 1:
        raise HTTPException(422, "samples must be >= 1")
    try:
        return await asyncio.to_thread(solve_spec, spec, samples)
    except FracspecError as exc:
        raise _http_error(exc) from exc
