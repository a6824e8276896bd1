"""Rank-revealing least squares shared by the collocation solver and the RBF lift."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import linalg

from fracspec.errors import NumericalFailure


@dataclass(frozen=True)
class LeastSquaresResult:
    solution: np.ndarray
    rank: int
    residual_norm: float

    @property
    def full_rank(self) -> bool:
        return self.rank == self.solution.shape[0]


def least_squares(A: np.ndarray, b: np.ndarray, rcond: float | None = None) -> LeastSquaresResult:
    """min ‖A x − b‖₂ by column scaling and QR with column pivoting.

    Columns whose pivot falls below rows·eps·(largest pivot), or rcond·(largest
    pivot) when that is larger, are dropped, giving the basic solution of the
    numerically resolvable part. ``b`` may hold several right-hand sides as
    columns.
    """
    A = np.asarray(A)
    b = np.asarray(b)
    if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
        raise NumericalFailure("least-squares system has non-finite entries")
    rows, cols = A.shape
    scale = np.linalg.norm(A, axis=0)
    scale[scale == 0] = 1.0
    try:
        Q, R, piv = linalg.qr(A / scale, mode="economic", pivoting=True)
    except (linalg.LinAlgError, ValueError) as exc:
        raise NumericalFailure(f"QR factorization failed: {exc}") from exc
    diag = np.abs(np.diag(R))
    tol = max(rows * np.finfo(float).eps, rcond or 0.0) * (diag[0] if diag.size else 0.0)
    rank = int(np.sum(diag > tol)) if diag.size and diag[0] > 0 else 0
    rhs = Q.conj().T @ b
    z = np.zeros((cols,) + b.shape[1:], dtype=np.result_type(A, b, float))
    if rank:
        z[piv[:rank]] = linalg.solve_triangular(R[:rank, :rank], rhs[:rank])
    x = z / (scale if b.ndim == 1 else scale[:, None])
    residual = float(np.linalg.norm(A @ x - b))
    return LeastSquaresResult(x, rank, residual)
