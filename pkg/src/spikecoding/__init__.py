"""Temporal spike encoding and decoding: SF, LIF, PWM, BSA and GRF population coding."""

__version__ = "0.1.0"

from .converters import (  # noqa: E402
    BSAConverter,
    LIFConverter,
    PWMConverter,
    StepForwardConverter,
    reconstruct,
)
from .errors import (  # noqa: E402
    DegenerateSignal,
    EmptySpace,
    InvalidParams,
    InvalidSpec,
    LengthMismatch,
    ParseError,
)
from .signal import (  # noqa: E402
    NormalizationRecord,
    SpikeTrain,
    denormalize,
    min_max_normalize,
    mse,
    running_mse,
    sparsity,
    zscore_normalize,
)

__all__ = [
    "BSAConverter",
    "DegenerateSignal",
    "EmptySpace",
    "InvalidParams",
    "InvalidSpec",
    "LIFConverter",
    "LengthMismatch",
    "NormalizationRecord",
    "PWMConverter",
    "ParseError",
    "SpikeTrain",
    "StepForwardConverter",
    "denormalize",
    "min_max_normalize",
    "mse",
    "reconstruct",
    "running_mse",
    "sparsity",
    "zscore_normalize",
]
