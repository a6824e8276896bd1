"""Tests for JSON problem files."""
from pathlib import Path

import numpy as np
import pytest

from fracspec.errors import ArtifactIOError, ProblemValidationError
from fracspec.services.benchmarks import example3_problem
from fracspec.services.problem_file import load_problem, parse_problem, solve_spec

SAMPLE = Path(__file__).resolve().parents[1] / "problems" / "diffusion_1d.json"


def _minimal(**changes) -> dict:
    data = {
        "domain": {"lengths": [1.0]},
        "T": 1.0,
        "leading_order": 0.5,
        "terms": [{"side": "rhs", "coefficient": 0.1}],
        "exact": [{"spatial": {"kind": "sine", "wave_numbers": [np.pi]}, "profile": [{"coefficient": 1, "exponent": 1}]}],
        "options": {"N": 4, "K": 3},
    }
    data.update(changes)
    return data


def test_sample_file_matches_example3():
    """The bundled file describes the same problem as example 3."""
    problem = load_problem(SAMPLE).build()
    reference = example3_problem(1.0)
    x = np.linspace(0.05, 0.95, 7)[:, None]
    for t in (0.0, 0.4, 1.0):
        np.testing.assert_allclose(problem.forcing(x, t), reference.forcing(x, t), rtol=1e-12, atol=1e-12)
    np.testing.assert_allclose(problem.leading_order.eval(0.3), reference.leading_order.eval(0.3))
    assert problem.boundary.value is not None


def test_defaults_fill_in():
    """Unset term fields take their documented defaults."""
    spec = parse_problem(_minimal())
    assert spec.terms[0].symbol is None
    term = spec.terms[0].build(1.0)
    assert term.symbol.kind == "laplacian"
    assert term.order is None
    assert spec.options.delta > 0


def test_forcing_and_exact_are_exclusive():
    """Exactly one source for the forcing."""
    with pytest.raises(ProblemValidationError, match="exactly one"):
        parse_problem(_minimal(forcing=[]))


def test_initial_required_without_exact():
    """Without an exact solution the initial data must be given."""
    data = _minimal(forcing=[{"spatial": {"kind": "sine", "wave_numbers": [1.0]}, "profile": [{"coefficient": 1, "exponent": 0}]}])
    del data["exact"]
    with pytest.raises(ProblemValidationError, match="initial"):
        parse_problem(data)


def test_complex_coefficients_are_pairs():
    """[re, im] pairs only."""
    spec = parse_problem(_minimal(leading_coefficient=[0.0, 1.0]))
    assert spec.build().scalar_field == "complex"
    with pytest.raises(ProblemValidationError):
        parse_problem(_minimal(leading_coefficient=[0.0, 1.0, 2.0]))


def test_order_forms():
    """A variable order needs its ceiling; a constant order is checked against one."""
    with pytest.raises(ProblemValidationError, match="ceiling"):
        parse_problem(_minimal(leading_order={"fn": {"kind": "exp", "b": 0.25}}))
    spec = parse_problem(_minimal(leading_order={"value": 0.5, "ceiling": 2}))
    with pytest.raises(ProblemValidationError, match="ceiling"):
        spec.build()


def test_unknown_fields_are_rejected():
    """Typos do not pass silently."""
    with pytest.raises(ProblemValidationError):
        parse_problem(_minimal(horizon=2.0))


def test_origin_translates_functions():
    """Fields are written in the original coordinates of the box."""
    data = _minimal(domain={"lengths": [2.0], "origin": [-1.0]})
    data["exact"] = [{"spatial": {"kind": "polynomial", "coefficients": [0.0, 1.0]}, "profile": [{"coefficient": 1, "exponent": 1}]}]
    problem = parse_problem(data).build()
    # u = x t on [−1, 1] is y − 1 at box coordinate y
    np.testing.assert_allclose(problem.exact.value(np.array([[0.0], [2.0]]), 1.0), [-1.0, 1.0])


def test_missing_file(tmp_path):
    """I/O problems are artifact errors."""
    with pytest.raises(ArtifactIOError):
        load_problem(tmp_path / "absent.json")


def test_malformed_json(tmp_path):
    """Broken JSON is a validation error."""
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(ProblemValidationError):
        load_problem(path)


def test_solve_spec_reports_errors():
    """A manufactured single-harmonic problem is solved to high accuracy."""
    result = solve_spec(parse_problem(_minimal()), per_dim=5)
    assert result.N == 4 and result.K == 3
    assert len(result.samples) == 5
    assert len(result.samples[0]) == 3
    assert result.merr < 1e-6
