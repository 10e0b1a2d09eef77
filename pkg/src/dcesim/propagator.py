"""Time evolution of the linear operator system by matrix exponential.

The drift matrix is constant, so the time-t transformation is U(t) = exp(M*t)
exactly.  U is computed by eigendecomposition whenever the eigenvector basis
is well conditioned, falling back to scaling-and-squaring (Pade order 13, as
implemented by scipy) when the matrix is defective or nearly so; the drift
matrix is defective exactly on regime boundaries, where the dynamics grows
polynomially rather than exponentially.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.linalg import expm

from .errors import OverflowRisk
from .model import DriftMatrix, ModelParams, build_drift_matrix

#: Bosonic metric J = diag(1, 1, -1, -1) preserved by every valid map.
BOSONIC_METRIC = np.diag([1.0, 1.0, -1.0, -1.0])

#: Above growth_rate*t = 300 the squared map entries overflow double precision.
GROWTH_TIME_LIMIT = 300.0

#: Eigenvector condition number beyond which we distrust diagonalization.
_EIG_COND_LIMIT = 1.0e6

#: Relative slack allowed when deciding whether a time grid is uniform.
_UNIFORM_GRID_RTOL = 1.0e-12


@dataclass(frozen=True)
class BogoliubovMap:
    """Linear map sending (a0, b0, a0^dag, b0^dag) to the time-t operators.

    Row 0 gives a(t) = A_aa*a0 + A_ab*b0 + B_aa*a0^dag + B_ab*b0^dag in the
    co-rotating frame; rows 2 and 3 are the block conjugates of rows 0 and 1.
    The detuning is carried along so observables can restore the physical
    frame phase exp(2i*kappa*t) where it matters.
    """

    matrix: np.ndarray
    time: float
    kappa: float = 0.0

    @property
    def block_a(self) -> np.ndarray:
        """2x2 coefficients of the annihilation operators (rows 0-1)."""
        return self.matrix[0:2, 0:2]

    @property
    def block_b(self) -> np.ndarray:
        """2x2 coefficients of the creation operators (rows 0-1)."""
        return self.matrix[0:2, 2:4]


def _growth_rate(m: np.ndarray) -> float:
    """Largest real part among the eigenvalues of the drift matrix."""
    return float(np.max(np.linalg.eigvals(m).real))


def _expm(m: np.ndarray) -> np.ndarray:
    """exp(m) by diagonalization when safe, scaling-and-squaring otherwise."""
    w, v = np.linalg.eig(m)
    cond = np.linalg.cond(v)
    if np.isfinite(cond) and cond < _EIG_COND_LIMIT:
        return (v * np.exp(w)) @ np.linalg.solve(v, np.eye(4, dtype=complex))
    return expm(m)


def propagate(drift: DriftMatrix, t: float) -> BogoliubovMap:
    """Return the exact time-t transformation U(t) = exp(M*t).

    Raises
    ------
    OverflowRisk
        If growth_rate*t exceeds 300, where entries of U(t)^2 would leave the
        double precision range.
    """
    if not np.isfinite(t) or t < 0:
        raise ValueError(f"time must be finite and >= 0, got {t!r}")
    m = drift.entries
    if _growth_rate(m) * t > GROWTH_TIME_LIMIT:
        raise OverflowRisk(
            f"growth_rate*t = {_growth_rate(m) * t:.3g} > {GROWTH_TIME_LIMIT}; "
            "evolution would overflow double precision"
        )
    return BogoliubovMap(matrix=_expm(m * t), time=float(t), kappa=drift.params.kappa)


def evolve_series(params: ModelParams, t_grid: Sequence[float]) -> list[BogoliubovMap]:
    """Evaluate the transformation on a strictly increasing time grid.

    Uniform grids are advanced by the semigroup property
    U(t0 + k*dt) = U(dt)^k U(t0), which costs one exponential plus one 4x4
    product per point; non-uniform grids fall back to one exponential per
    point.  Either route agrees with `propagate` at every grid point to
    round-off.
    """
    grid = np.asarray(t_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("t_grid must be a non-empty 1-d sequence")
    if not np.all(np.isfinite(grid)):
        raise ValueError("t_grid must be finite")
    if grid[0] < 0:
        raise ValueError("t_grid must start at a non-negative time")
    if grid.size > 1 and not np.all(np.diff(grid) > 0):
        raise ValueError("t_grid must be strictly increasing")

    drift = build_drift_matrix(params)
    # Fail fast if the endpoint would overflow.
    rate = _growth_rate(drift.entries)
    if rate * grid[-1] > GROWTH_TIME_LIMIT:
        raise OverflowRisk(
            f"growth_rate*t = {rate * grid[-1]:.3g} > {GROWTH_TIME_LIMIT} at the "
            "end of the requested grid"
        )

    if grid.size == 1:
        return [propagate(drift, grid[0])]

    steps = np.diff(grid)
    dt = steps[0]
    uniform = bool(np.all(np.abs(steps - dt) <= _UNIFORM_GRID_RTOL * max(dt, grid[-1])))
    if not uniform:
        return [propagate(drift, t) for t in grid]

    step_map = _expm(drift.entries * dt)
    u = propagate(drift, grid[0]).matrix
    kappa = params.kappa
    out = [BogoliubovMap(matrix=u, time=float(grid[0]), kappa=kappa)]
    for t in grid[1:]:
        u = step_map @ u
        out.append(BogoliubovMap(matrix=u, time=float(t), kappa=kappa))
    return out


def symplectic_defect(bmap: BogoliubovMap) -> float:
    """Deviation of a map from the exact Bogoliubov structure.

    Two families of relations are checked: the block conjugation structure of
    the matrix, and preservation of the bosonic metric, U J U^H = J.  The
    returned value is the worst entrywise deviation, normalized by the map
    magnitude (its square for the metric relation, which is quadratic in U) so
    the figure stays meaningful for strongly amplifying maps whose raw entries
    grow exponentially.  Exact maps give 0.
    """
    u = bmap.matrix
    umax = float(np.max(np.abs(u)))
    scale1 = max(1.0, umax)
    scale2 = max(1.0, umax * umax)
    structure = max(
        float(np.max(np.abs(u[2:4, 2:4] - np.conj(u[0:2, 0:2])))),
        float(np.max(np.abs(u[2:4, 0:2] - np.conj(u[0:2, 2:4])))),
    )
    metric = float(np.max(np.abs(u @ BOSONIC_METRIC @ u.conj().T - BOSONIC_METRIC)))
    return max(structure / scale1, metric / scale2)
