"""Physical observables of the field mode evolved from the two-mode vacuum.

With quadratures x = (a + a^dag)/sqrt(2) and p = (a - a^dag)/(i*sqrt(2)), a
zero-mean Gaussian state of the field mode is fully characterized by the pair
(<a^dag a>, <a^2>).  The derived quantities used throughout:

    sigma_xx = 1/2 + <n> + Re<a^2>      sigma_pp = 1/2 + <n> - Re<a^2>
    sigma_xp = Im<a^2>
    tau   = sigma_xx + sigma_pp = 1 + 2<n>
    Delta = sigma_xx*sigma_pp - sigma_xp^2 = (1/2 + <n>)^2 - |<a^2>|^2
    Q     = 1 + 2<n> - (Delta - 1/4)/<n>          (Mandel factor)
    S     = 4*Delta / (tau + sqrt(tau^2 - 4*Delta))  (invariant squeezing)

S equals twice the smaller eigenvalue of the quadrature covariance matrix, is
invariant under rotations in the quadrature plane, and equals 1 for the
vacuum; S < 1 signals squeezing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NegativeDiscriminant
from .propagator import BogoliubovMap

#: Mean occupation below which the Mandel factor is treated as undefined (0/0).
_Q_VACUUM_FLOOR = 1.0e-14


@dataclass(frozen=True)
class FieldMoments:
    """Second moments of the field mode at one instant.

    `a_sq` is <a^2> in the physical frame, i.e. the co-rotating value times
    exp(2i*kappa*t); mean occupations are frame independent.
    """

    n_a: float
    n_b: float
    a_sq: complex
    time: float


@dataclass(frozen=True)
class GaussianSummary:
    """Scalar summary of the Gaussian field state.

    `q_undefined` marks the vacuum point n_a = 0 where the Mandel factor is a
    0/0 limit with no parameter-independent value; q_mandel is set to 0 there
    by convention.
    """

    delta: float
    tau: float
    q_mandel: float
    squeeze_s: float
    sigma_xx: float
    sigma_pp: float
    sigma_xp: float
    q_undefined: bool = False

    @property
    def n_mean(self) -> float:
        """Mean photon number, (tau - 1)/2."""
        return 0.5 * (self.tau - 1.0)

    @property
    def sigma_min(self) -> float:
        """Smaller eigenvalue of the covariance matrix, equal to S/2."""
        return 0.5 * self.squeeze_s


def field_moments(bmap: BogoliubovMap) -> FieldMoments:
    """Vacuum expectation values of a^dag a, b^dag b and a^2 at time t.

    For the initial two-mode vacuum only the creation-coefficient block
    contributes to the occupations, and <a^2> picks up one cross product of
    the two blocks per input mode.
    """
    a = bmap.block_a
    b = bmap.block_b
    n_a = float(abs(b[0, 0]) ** 2 + abs(b[0, 1]) ** 2)
    n_b = float(abs(b[1, 0]) ** 2 + abs(b[1, 1]) ** 2)
    a_sq_corot = a[0, 0] * b[0, 0] + a[0, 1] * b[0, 1]
    phase = np.exp(2j * bmap.kappa * bmap.time)
    return FieldMoments(n_a=n_a, n_b=n_b, a_sq=complex(phase * a_sq_corot), time=bmap.time)


def gaussian_summary(moments: FieldMoments) -> GaussianSummary:
    """Covariances, Mandel factor and invariant squeezing from the moments.

    Raises
    ------
    NegativeDiscriminant
        If tau^2 - 4*Delta is negative beyond round-off.  For any moments
        derived from a state this combination equals 4*|<a^2>|^2 >= 0
        identically, so the branch only fires on corrupted input.
    """
    n = moments.n_a
    asq = moments.a_sq
    re, im = asq.real, asq.imag

    delta = (0.5 + n) ** 2 - (re * re + im * im)
    tau = 1.0 + 2.0 * n
    disc = tau * tau - 4.0 * delta
    if disc < -1.0e-10 * max(1.0, tau * tau):
        raise NegativeDiscriminant(
            f"tau^2 - 4*Delta = {disc:.3g} < 0: moments do not describe a state"
        )
    squeeze_s = 4.0 * delta / (tau + np.sqrt(max(disc, 0.0)))

    if n <= _Q_VACUUM_FLOOR:
        q, q_undefined = 0.0, True
    else:
        q, q_undefined = 1.0 + 2.0 * n - (delta - 0.25) / n, False

    return GaussianSummary(
        delta=float(delta),
        tau=float(tau),
        q_mandel=float(q),
        squeeze_s=float(squeeze_s),
        sigma_xx=float(0.5 + n + re),
        sigma_pp=float(0.5 + n - re),
        sigma_xp=float(im),
        q_undefined=q_undefined,
    )
