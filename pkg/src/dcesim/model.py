"""Two-mode model: a parametrically driven cavity mode coupled to an
oscillator detector.

The cavity mode frequency is modulated as omega_t = 1 + epsilon*sin(eta*t)
(units of the unperturbed mode frequency) with eta = 2*(1 + kappa), and the
mode is linearly coupled to a detector oscillator of the same frequency with
strength g.  In the co-rotating frame, after dropping rapidly oscillating
terms, the Heisenberg equations for (a, b, a^dag, b^dag) close into a linear
system with constant coefficients

    d/dt a      = -i*kappa*a - i*g*b + 2*beta*a^dag
    d/dt b      = -i*g*a - i*kappa*b

plus the conjugate pair, with pump amplitude beta = epsilon/4.  This module
validates the parameter triple and builds the 4x4 drift matrix of that
system; everything downstream (propagation, moments, photon statistics) is a
function of this matrix.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import EpsilonOutOfRange, NonFiniteInput

#: Hard bound on the modulation depth; the quadratic model needs |epsilon| << 1.
EPSILON_MAX = 0.5
#: Depth above which we warn that the model is being stretched.
EPSILON_WARN = 0.1


@dataclass(frozen=True)
class ModelParams:
    """Validated parameter triple plus the derived pump amplitude.

    Attributes
    ----------
    epsilon:
        Modulation depth of the cavity mode frequency.
    g:
        Field-detector coupling constant.
    kappa:
        Detuning; the modulation frequency is 2*(1 + kappa).
    beta:
        Parametric pump amplitude, always exactly epsilon/4.
    """

    epsilon: float
    g: float
    kappa: float
    beta: float

    @property
    def scale(self) -> float:
        """Largest parameter magnitude; used to scale numerical tolerances."""
        return max(abs(self.beta), abs(self.g), abs(self.kappa))


@dataclass(frozen=True)
class DriftMatrix:
    """Constant coefficient matrix M with d/dt (a, b, a^dag, b^dag)^T = M (...)^T.

    The lower-right 2x2 block is the complex conjugate of the upper-left one,
    and the lower-left block the conjugate of the upper-right one, so the map
    exp(M*t) is a valid Bogoliubov transformation at every time.
    """

    entries: np.ndarray
    params: ModelParams


def validate_params(epsilon: float, g: float, kappa: float) -> ModelParams:
    """Check and package the model parameters.

    Raises
    ------
    NonFiniteInput
        If any input is NaN or infinite.
    EpsilonOutOfRange
        If |epsilon| >= 0.5, where the quadratic model is meaningless.
    """
    for name, value in (("epsilon", epsilon), ("g", g), ("kappa", kappa)):
        if not math.isfinite(value):
            raise NonFiniteInput(f"{name} = {value!r} is not finite")
    if abs(epsilon) >= EPSILON_MAX:
        raise EpsilonOutOfRange(
            f"|epsilon| = {abs(epsilon)} >= {EPSILON_MAX}; modulation depth must be small"
        )
    if abs(epsilon) > EPSILON_WARN:
        warnings.warn(
            f"|epsilon| = {abs(epsilon)} > {EPSILON_WARN}: results leave the "
            "validity regime of the quadratic model",
            stacklevel=2,
        )
    return ModelParams(
        epsilon=float(epsilon), g=float(g), kappa=float(kappa), beta=float(epsilon) / 4.0
    )


def params_from_beta(beta: float, g: float, kappa: float) -> ModelParams:
    """Build parameters from the pump amplitude instead of the depth.

    Regime classification is invariant under a common rescaling of
    (beta, g, kappa), so it is conventional to work with beta normalized to 1;
    this constructor therefore skips the modulation depth bound.  Do not feed
    such parameters to the propagator expecting physical time scales.
    """
    for name, value in (("beta", beta), ("g", g), ("kappa", kappa)):
        if not math.isfinite(value):
            raise NonFiniteInput(f"{name} = {value!r} is not finite")
    return ModelParams(epsilon=4.0 * float(beta), g=float(g), kappa=float(kappa), beta=float(beta))


def build_drift_matrix(params: ModelParams) -> DriftMatrix:
    """Assemble the 4x4 drift matrix for the co-rotating operator vector."""
    beta, g, kappa = params.beta, params.g, params.kappa
    m = np.array(
        [
            [-1j * kappa, -1j * g, 2 * beta, 0.0],
            [-1j * g, -1j * kappa, 0.0, 0.0],
            [2 * beta, 0.0, 1j * kappa, 1j * g],
            [0.0, 0.0, 1j * g, 1j * kappa],
        ],
        dtype=complex,
    )
    return DriftMatrix(entries=m, params=params)
