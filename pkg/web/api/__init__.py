"""Solver HTTP API."""
