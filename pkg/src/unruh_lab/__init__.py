"""Detector response functions and Anti-Unruh region scans for KMS field states."""

__version__ = "0.1.0"

from .antiunruh import (
    RegionScan,
    ScanSpec,
    StepControl,
    classify,
    d_beta_edr_d_beta,
    d_response_d_beta,
    scan_to_csv,
    weak_necessary_condition,
)
from .asymptotics import (
    MassRegime,
    response_large_mass,
    response_small_mass,
    validity_region,
)
from .response import (
    DetectorCoupling,
    QuadratureConfig,
    ResponseQuery,
    ResponseResult,
    beta_edr,
    edr_ratio,
    response_function,
    transition_probability,
)
from .scenarios import (
    ACCELERATED,
    INERTIAL,
    Scenario,
    SpectralDensity,
    commutator_ft,
    commutator_ft_inertial_closed,
    detailed_balance_residual,
    spectral_density,
    stationarity_defect,
    wightman_ft,
    wightman_ft_batch,
)
from .series import (
    SeriesConfig,
    beta_edr_expansion,
    convergence_radius_massless,
    response_series,
)
from .specfun import (
    BesselEvalConfig,
    bessel_k_imag_order,
    gamma_arg_phase,
    planck,
)
from .switching import (
    BandLimitedSwitching,
    GaussianSwitching,
    SwitchingFunction,
    TabulatedSwitching,
    derivative_norm,
    gaussian_fourier,
    make_switching,
    moment_bounds,
)

__all__ = [
    "ACCELERATED",
    "BandLimitedSwitching",
    "BesselEvalConfig",
    "DetectorCoupling",
    "GaussianSwitching",
    "INERTIAL",
    "MassRegime",
    "QuadratureConfig",
    "RegionScan",
    "ResponseQuery",
    "ResponseResult",
    "ScanSpec",
    "Scenario",
    "SeriesConfig",
    "SpectralDensity",
    "StepControl",
    "SwitchingFunction",
    "TabulatedSwitching",
    "bessel_k_imag_order",
    "beta_edr",
    "beta_edr_expansion",
    "classify",
    "commutator_ft",
    "commutator_ft_inertial_closed",
    "convergence_radius_massless",
    "d_beta_edr_d_beta",
    "d_response_d_beta",
    "derivative_norm",
    "detailed_balance_residual",
    "edr_ratio",
    "gamma_arg_phase",
    "gaussian_fourier",
    "make_switching",
    "moment_bounds",
    "planck",
    "response_function",
    "response_large_mass",
    "response_series",
    "response_small_mass",
    "scan_to_csv",
    "spectral_density",
    "stationarity_defect",
    "transition_probability",
    "validity_region",
    "weak_necessary_condition",
    "wightman_ft",
    "wightman_ft_batch",
]
