"""Large- and small-mass asymptotes of the adiabatic (sigma = inf) response
for the accelerated massive 1+1D scenario, with validity-region predicates.

Both forms follow from the Bessel closed form of the spectral density:
the large-argument expansion K_{i nu}(x) ~ sqrt(pi/2x) e^{-x} gives

    F ~ exp(-beta (Omega/2 + m/pi)) / (2 m),

and the small-argument oscillatory expansion gives

    F ~ [1 + cos((beta Omega/pi) log(beta m/4 pi) - phi(beta Omega/2 pi))]
        / (Omega (e^{beta Omega} - 1)),        phi(z) = 2 Arg Gamma(i z).

Asymptotic (not uniform) error control: agreement with the exact transform
is at the 10-15% level at the validity margins and improves as the margins
strengthen.
"""

from __future__ import annotations

import math
import warnings
from enum import Enum

from .errors import DomainError, ValidityWarning
from .specfun import gamma_arg_phase

# margin constants implementing the strict "<<" / ">>" of the validity
# conditions (beta Omega/2 pi)^2 + 1/4 << beta m/2 pi  and
# (beta m/2 pi)^4 << (beta Omega/2 pi)^2 + 1
_LARGE_MASS_MARGIN = 0.1
_SMALL_MASS_MARGIN = 10.0


class MassRegime(str, Enum):
    LARGE = "large-mass"
    SMALL = "small-mass"
    NEITHER = "neither"
    BOTH = "both"


def _check_args(Omega: float, beta: float, m: float) -> None:
    if not (Omega > 0 and beta > 0 and m > 0):
        raise DomainError("asymptotics require Omega, beta, m > 0")


def large_mass_valid(Omega: float, beta: float, m: float) -> bool:
    nu = beta * Omega / (2.0 * math.pi)
    x = beta * m / (2.0 * math.pi)
    return nu * nu + 0.25 <= _LARGE_MASS_MARGIN * x


def small_mass_valid(Omega: float, beta: float, m: float) -> bool:
    nu = beta * Omega / (2.0 * math.pi)
    x = beta * m / (2.0 * math.pi)
    return _SMALL_MASS_MARGIN * x ** 4 <= nu * nu + 1.0


def response_large_mass(Omega: float, beta: float, m: float) -> float:
    """exp(-beta (Omega/2 + m/pi)) / (2 m); monotone in the KMS temperature.

    Outside the validity region the value is still returned, with a warning.
    """
    _check_args(Omega, beta, m)
    if not large_mass_valid(Omega, beta, m):
        warnings.warn(
            "large-mass asymptote evaluated outside its validity region",
            ValidityWarning,
            stacklevel=2,
        )
    return math.exp(-beta * (0.5 * Omega + m / math.pi)) / (2.0 * m)


def response_small_mass(Omega: float, beta: float, m: float) -> float:
    """Oscillatory small-mass asymptote, bounded by 2/(Omega (e^{b O} - 1))."""
    _check_args(Omega, beta, m)
    if not small_mass_valid(Omega, beta, m):
        warnings.warn(
            "small-mass asymptote evaluated outside its validity region",
            ValidityWarning,
            stacklevel=2,
        )
    phase = (beta * Omega / math.pi) * math.log(beta * m / (4.0 * math.pi)) \
        - gamma_arg_phase(beta * Omega / (2.0 * math.pi))
    return (1.0 + math.cos(phase)) / (Omega * math.expm1(beta * Omega))


def small_mass_log_period(Omega: float, beta: float) -> float:
    """Oscillation period of the small-mass response in log(beta m)."""
    return 2.0 * math.pi ** 2 / (beta * Omega)


def validity_region(Omega: float, beta: float, m: float) -> MassRegime:
    """Deterministic label from the two validity predicates."""
    _check_args(Omega, beta, m)
    large = large_mass_valid(Omega, beta, m)
    small = small_mass_valid(Omega, beta, m)
    if large and small:
        return MassRegime.BOTH
    if large:
        return MassRegime.LARGE
    if small:
        return MassRegime.SMALL
    return MassRegime.NEITHER
