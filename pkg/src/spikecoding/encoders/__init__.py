from .bsa import BSAParams, bsa_decode, bsa_decode_normalized, bsa_encode, bsa_encode_normalized, fir_lowpass
from .grf import GRFParams, grf_encode
from .lif import LIFParams, decode_window, lif_decode, lif_encode, lif_encode_normalized, lif_normalize
from .pwm import PWMParams, pwm_decode, pwm_decode_normalized, pwm_encode, pwm_encode_normalized, sawtooth
from .sf import SFParams, sf_decode, sf_encode

__all__ = [
    "BSAParams", "bsa_decode", "bsa_decode_normalized", "bsa_encode", "bsa_encode_normalized", "fir_lowpass",
    "GRFParams", "grf_encode",
    "LIFParams", "decode_window", "lif_decode", "lif_encode", "lif_encode_normalized", "lif_normalize",
    "PWMParams", "pwm_decode", "pwm_decode_normalized", "pwm_encode", "pwm_encode_normalized", "sawtooth",
    "SFParams", "sf_decode", "sf_encode",
]
