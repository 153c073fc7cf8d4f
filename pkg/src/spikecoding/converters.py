"""Converter objects and a method registry tying encoders to decoders.

A converter bundles one method's parameters with whatever context its
decoder needs (normalization record, SF starting value) from the most
recent ``encode`` call::

    converter = StepForwardConverter()
    spikes = converter.encode(signal)
    converter.optimize(signal)
    recon = converter.decode(converter.encode(signal))
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from .encoders import bsa, lif, pwm, sf
from .errors import InvalidParams
from .signal import NormalizationRecord, SpikeTrain, as_signal, min_max_normalize, mse

METHOD_ORDER = ("lif", "sf", "pwm", "bsa")
METHOD_LABELS = {"lif": "LIF", "sf": "SF", "pwm": "PWM", "bsa": "BSA"}


@dataclass(frozen=True)
class Method:
    name: str
    params_type: type
    prepare: Callable[[np.ndarray], tuple[np.ndarray, NormalizationRecord]]
    encode_prepared: Callable[[np.ndarray, Any], SpikeTrain]
    decode_prepared: Callable[[SpikeTrain, Any], np.ndarray]

    def make_params(self, values: dict[str, Any]):
        names = {f.name for f in dataclasses.fields(self.params_type)}
        unknown = set(values) - names
        if unknown:
            raise InvalidParams(f"unknown {self.name} parameter(s): {sorted(unknown)}")
        return self.params_type(**values)

    def param_names(self) -> list[str]:
        return [f.name for f in dataclasses.fields(self.params_type)]


def _identity_prepare(signal):
    return as_signal(signal), NormalizationRecord.identity()


def _lif_prepare(signal):
    return lif.lif_normalize(signal)


def _lif_decode_prepared(train, params):
    # back to the [0, 1] min-max domain so the shared record inverts it
    return (lif.lif_decode_normalized(train, params) + 1.0) / 2.0


METHODS: dict[str, Method] = {
    "sf": Method("sf", sf.SFParams, _identity_prepare, sf.sf_encode, lambda tr, p: sf.sf_decode(tr, p, 0.0)),
    "lif": Method("lif", lif.LIFParams, _lif_prepare, lif.lif_encode_normalized, _lif_decode_prepared),
    "pwm": Method("pwm", pwm.PWMParams, min_max_normalize, pwm.pwm_encode_normalized, pwm.pwm_decode_normalized),
    "bsa": Method("bsa", bsa.BSAParams, min_max_normalize, bsa.bsa_encode_normalized, bsa.bsa_decode_normalized),
}


def get_method(name: str) -> Method:
    try:
        return METHODS[name.lower()]
    except KeyError:
        raise InvalidParams(f"unknown method {name!r}; expected one of {sorted(METHODS)}") from None


def reconstruct(method: str | Method, signal, params) -> tuple[SpikeTrain, np.ndarray]:
    """Encode then decode; the reconstruction is in the signal's own units.

    SF decodes from 0, the same starting point as the encoder's baseline.
    """
    m = get_method(method) if isinstance(method, str) else method
    prepared, record = m.prepare(signal)
    train = m.encode_prepared(prepared, params)
    recon = m.decode_prepared(train, params) * record.scale + record.offset
    return train, recon


def reconstruction_error(method: str | Method, signal, params) -> float:
    signal = as_signal(signal)
    _, recon = reconstruct(method, signal, params)
    return mse(signal, recon)


class Converter:
    """Stateful encode/decode/optimize wrapper around one method."""

    method: str = ""

    def __init__(self, params=None, **kwargs):
        spec = get_method(self.method)
        if params is not None and kwargs:
            raise TypeError("pass either a params object or keyword parameters")
        self.params = params if params is not None else spec.make_params(kwargs)
        self.record: NormalizationRecord | None = None

    @property
    def spec(self) -> Method:
        return get_method(self.method)

    def encode(self, signal) -> SpikeTrain:
        prepared, self.record = self.spec.prepare(signal)
        return self.spec.encode_prepared(prepared, self.params)

    def decode(self, train: SpikeTrain, record: NormalizationRecord | None = None) -> np.ndarray:
        record = record or self.record or NormalizationRecord.identity()
        return self.spec.decode_prepared(train, self.params) * record.scale + record.offset

    def optimize(self, signal, n_trials: int | None = None, seed: int = 0, space=None):
        """Random-search the parameters on ``signal`` and adopt the best set."""
        from .optimizer import optimize

        result = optimize(self.method, signal, space=space, n_trials=n_trials, seed=seed)
        self.params = result.best_params
        return result.best_params

    def __repr__(self):
        return f"{type(self).__name__}({self.params!r})"


class StepForwardConverter(Converter):
    method = "sf"


class LIFConverter(Converter):
    method = "lif"


class PWMConverter(Converter):
    method = "pwm"


class BSAConverter(Converter):
    method = "bsa"
