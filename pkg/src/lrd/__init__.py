"""Local risk decomposition of profit-and-loss series.

Box-wise detrended local risk/return extraction across investment
horizons, local Sharpe and risk-adjusted measures, and kernel-convolved
scalar performance indicators with jackknife errors.
"""

from ._backend import BACKEND, available_backends
from .decompose import Box, FitRow, LocalFit, LRDGrid, decompose, fit_box, partition
from .errors import (
    DegenerateBox,
    DegeneracyError,
    EstimatorFailure,
    HorizonTooLarge,
    HorizonTooSmall,
    InsufficientBoxes,
    IoError,
    LabelMismatch,
    LRDError,
    NonFinite,
    ParseError,
    SpecInvalid,
    TooFewUnits,
    TooShort,
    UsageError,
    ValidationError,
    ZeroFieldSpread,
    ZeroKernelMass,
    ZeroMeanRisk,
    ZeroVolatility,
)
from .jackknife import JackknifeEstimate, jackknife
from .kernels import (
    Kernel,
    IndicatorResult,
    default_parameters,
    eta,
    eta_estimate,
    kernel_weight,
    phi_indicator,
    phi_value,
)
from .measures import (
    DAILY,
    LOCAL_RETURN,
    LOCAL_RISK,
    LSR,
    MONTHLY,
    MeasureField,
    MeasureKind,
    global_rar,
    global_sharpe,
    local_rar,
    local_sharpe,
    lra,
    measure_field,
    phi_h,
    risk_floor,
)
from .series import PnLSeries, ReturnSeries, increments, validate
from .synth import GENERATOR_ID, SynthSpec, blue_green_pair, calibrate, generate

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Box",
    "DAILY",
    "DegenerateBox",
    "DegeneracyError",
    "EstimatorFailure",
    "FitRow",
    "GENERATOR_ID",
    "HorizonTooLarge",
    "HorizonTooSmall",
    "IndicatorResult",
    "InsufficientBoxes",
    "IoError",
    "JackknifeEstimate",
    "Kernel",
    "LOCAL_RETURN",
    "LOCAL_RISK",
    "LRDError",
    "LRDGrid",
    "LSR",
    "LabelMismatch",
    "LocalFit",
    "MONTHLY",
    "MeasureField",
    "MeasureKind",
    "NonFinite",
    "ParseError",
    "PnLSeries",
    "ReturnSeries",
    "SpecInvalid",
    "SynthSpec",
    "TooFewUnits",
    "TooShort",
    "UsageError",
    "ValidationError",
    "ZeroFieldSpread",
    "ZeroKernelMass",
    "ZeroMeanRisk",
    "ZeroVolatility",
    "available_backends",
    "blue_green_pair",
    "calibrate",
    "decompose",
    "default_parameters",
    "eta",
    "eta_estimate",
    "fit_box",
    "generate",
    "global_rar",
    "global_sharpe",
    "increments",
    "jackknife",
    "kernel_weight",
    "local_rar",
    "local_sharpe",
    "lra",
    "measure_field",
    "partition",
    "phi_h",
    "phi_indicator",
    "phi_value",
    "risk_floor",
    "validate",
]
