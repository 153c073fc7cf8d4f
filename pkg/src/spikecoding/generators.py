"""Seeded synthesis of the four benchmark waveforms.

Every generator returns a z-normalized signal (zero mean, unit population
variance). Sample index ``t`` runs over ``0 .. length-1``.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import InvalidSpec
from .rng import MASK64, SplitMix64
from .signal import zscore_normalize

KINDS = ("vibration", "trended", "rectangular", "sinusoidal")

DEFAULT_LENGTH = 16384

# cycles over the whole signal, as multiples of ``periods``
VIBRATION_HARMONICS = (16.0, 39.0, 97.0)
VIBRATION_AMPLITUDES = (1.0, 0.6, 0.35)
# incommensurate pair of slow components for the trended signal
TREND_CYCLES = (1.5, 1.5 * np.sqrt(2.0))
TREND_AMPLITUDES = (0.5, 0.3)


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    length: int = DEFAULT_LENGTH
    seed: int = 0
    periods: int = 8
    noise_std: float = 0.1
    trend_slope: float = 3.0

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise InvalidSpec(f"unknown signal kind {self.kind!r}; expected one of {KINDS}")
        if not isinstance(self.length, (int, np.integer)) or self.length < 16:
            raise InvalidSpec(f"length must be an integer >= 16, got {self.length!r}")
        if not isinstance(self.periods, (int, np.integer)) or self.periods < 1:
            raise InvalidSpec(f"periods must be a positive integer, got {self.periods!r}")
        if 2 * self.periods > self.length:
            raise InvalidSpec("periods too large for the signal length")
        if not (np.isfinite(self.noise_std) and self.noise_std >= 0):
            raise InvalidSpec(f"noise_std must be >= 0, got {self.noise_std!r}")
        if not np.isfinite(self.trend_slope):
            raise InvalidSpec("trend_slope must be finite")
        if not 0 <= self.seed <= MASK64:
            raise InvalidSpec("seed must be a 64-bit unsigned integer")

    def with_(self, **changes) -> "GeneratorSpec":
        return replace(self, **changes)


def _phase(spec: GeneratorSpec) -> np.ndarray:
    return np.arange(spec.length, dtype=np.float64) / spec.length


def _sinusoidal(spec, rng):
    return np.sin(2.0 * np.pi * spec.periods * _phase(spec))


def _rectangular(spec, rng):
    # Quarter-period aligned square wave, decided by exact integer arithmetic
    # so no sample sits on a zero crossing: high in quadrants 0 and 3.
    t = np.arange(spec.length, dtype=np.int64)
    quadrant = (4 * spec.periods * t // spec.length) % 4
    return np.where((quadrant == 0) | (quadrant == 3), 1.0, -1.0)


def _trended(spec, rng):
    x = _phase(spec)
    out = spec.trend_slope * x
    for cycles, amp in zip(TREND_CYCLES, TREND_AMPLITUDES):
        out = out + amp * np.sin(2.0 * np.pi * cycles * x)
    if spec.noise_std > 0:
        out = out + spec.noise_std * rng.normals(spec.length)
    return out


def _vibration(spec, rng):
    x = _phase(spec)
    out = np.zeros(spec.length)
    for harmonic, amp in zip(VIBRATION_HARMONICS, VIBRATION_AMPLITUDES):
        phase = 2.0 * np.pi * rng.uniform()
        out += amp * np.sin(2.0 * np.pi * spec.periods * harmonic * x + phase)
    if spec.noise_std > 0:
        out += spec.noise_std * rng.normals(spec.length)
    return out


_BUILDERS = {
    "sinusoidal": _sinusoidal,
    "rectangular": _rectangular,
    "trended": _trended,
    "vibration": _vibration,
}


def generate(spec: GeneratorSpec) -> np.ndarray:
    """Synthesize and z-normalize the waveform described by ``spec``."""
    spec.validate()
    rng = SplitMix64(int(spec.seed))
    raw = _BUILDERS[spec.kind](spec, rng)
    out, _ = zscore_normalize(raw)
    out.flags.writeable = False
    return out


def default_specs(length: int = DEFAULT_LENGTH, seed: int = 0, **params) -> list[GeneratorSpec]:
    return [GeneratorSpec(kind, length=length, seed=seed, **params) for kind in KINDS]
