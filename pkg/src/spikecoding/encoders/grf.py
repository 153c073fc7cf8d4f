"""Gaussian receptive field population coding (encode only)."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidParams


@dataclass(frozen=True)
class GRFParams:
    num_bins: int = 8
    value_min: float = 0.0
    value_max: float = 1.0
    width_scale: float = 1.0

    def __post_init__(self):
        if isinstance(self.num_bins, bool) or not isinstance(self.num_bins, (int, np.integer)) or self.num_bins < 2:
            raise InvalidParams(f"num_bins must be an integer >= 2, got {self.num_bins!r}")
        if not (np.isfinite(self.value_min) and np.isfinite(self.value_max)) or not self.value_max > self.value_min:
            raise InvalidParams("value_max must exceed value_min")
        if not (np.isfinite(self.width_scale) and self.width_scale > 0):
            raise InvalidParams("width_scale must be positive")

    @property
    def centers(self) -> np.ndarray:
        return np.linspace(self.value_min, self.value_max, self.num_bins)

    @property
    def spacing(self) -> float:
        return (self.value_max - self.value_min) / (self.num_bins - 1)

    @property
    def sigma(self) -> float:
        return self.width_scale * self.spacing


def grf_encode(value, params: GRFParams) -> np.ndarray:
    """Bin responses ``exp(-(value - c_i)^2 / (2 sigma^2))``.

    ``value`` may be a scalar (returns ``(num_bins,)``) or an array
    (returns ``value.shape + (num_bins,)``). Responses underflow to 0 only
    for values many widths away from every center.
    """
    v = np.asarray(value, dtype=np.float64)
    if not np.all(np.isfinite(v)):
        raise InvalidParams("GRF input must be finite")
    offsets = (v[..., None] - params.centers) / params.sigma
    return np.exp(-0.5 * offsets**2)
