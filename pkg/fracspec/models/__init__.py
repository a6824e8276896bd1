from fracspec.models.domain import (
    BILAPLACIAN,
    IDENTITY,
    LAPLACIAN,
    BoxDomain,
    SineMode,
    SpatialSymbol,
    as_points,
)
from fracspec.models.lift import LiftFunction, LiftMetadata
from fracspec.models.ode import CollocationGrid, MuntzBasis, VotfOdeProblem, VotfOdeSolution
from fracspec.models.order import OrderFunction
from fracspec.models.problem import BoundaryData, PdeProblem, PdeSolution, PdeTerm
from fracspec.models.profile import PowerProfile, PowerTerm
from fracspec.models.report import ErrorReport
from fracspec.models.spatial import (
    ExpSum,
    Gaussian,
    LaplacianOf,
    LegendreSeries,
    LinearCombination,
    Multiquadric,
    Polynomial,
    SechSum,
    SeparableField,
    SineProduct,
    SpatialFunction,
    Translated,
)
from fracspec.models.timefn import (
    ConstantTime,
    CosineTime,
    ExpTime,
    PolynomialTime,
    ScaledTime,
    SineTime,
    SumTime,
    evaluate_time_function,
)

__all__ = [
    "BILAPLACIAN",
    "IDENTITY",
    "LAPLACIAN",
    "BoundaryData",
    "BoxDomain",
    "CollocationGrid",
    "ConstantTime",
    "CosineTime",
    "ErrorReport",
    "ExpSum",
    "ExpTime",
    "Gaussian",
    "LaplacianOf",
    "LiftFunction",
    "LiftMetadata",
    "LegendreSeries",
    "LinearCombination",
    "Multiquadric",
    "MuntzBasis",
    "OrderFunction",
    "PdeProblem",
    "PdeSolution",
    "PdeTerm",
    "Polynomial",
    "PolynomialTime",
    "PowerProfile",
    "PowerTerm",
    "ScaledTime",
    "SechSum",
    "SeparableField",
    "SineMode",
    "SineProduct",
    "SineTime",
    "SpatialFunction",
    "SpatialSymbol",
    "SumTime",
    "Translated",
    "VotfOdeProblem",
    "VotfOdeSolution",
    "as_points",
    "evaluate_time_function",
]
