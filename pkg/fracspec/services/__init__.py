"""Numerical services: fractional core, Müntz solver, spectral pipeline, benchmarks."""
