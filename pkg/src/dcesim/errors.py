"""Exception types raised by the simulation toolkit."""


class DcesimError(Exception):
    """Base class for all toolkit errors."""


class NonFiniteInput(DcesimError):
    """An input parameter is NaN or infinite."""


class EpsilonOutOfRange(DcesimError):
    """Modulation depth outside the hard validity bound of the quadratic model."""


class OverflowRisk(DcesimError):
    """Requested evolution would push matrix entries beyond double precision."""


class NegativeDiscriminant(DcesimError):
    """tau^2 - 4*Delta came out negative beyond tolerance (unphysical input)."""


class NonPhysicalSummary(DcesimError):
    """Gaussian summary violates positivity (D+ <= 0); no distribution exists."""


class GammaImaginary(DcesimError):
    """Oscillation frequency sqrt(g^2 - beta^2) is not real; closed form invalid."""
