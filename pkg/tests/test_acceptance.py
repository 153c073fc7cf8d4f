"""Exit criteria for the package, one test (or test group) per criterion.

Each criterion prints a PASS/FAIL line; the lines are repeated in the pytest
terminal summary. The 4x4 grid at 500 trials per cell takes several minutes.
"""
import math
import time

import numpy as np
import pytest

from spikecoding.bench import mean_rows, run_benchmark, time_encode
from spikecoding.cli import main
from spikecoding.converters import METHOD_ORDER
from spikecoding.csvio import FEATURE_HEADER, SIGNAL_HEADER, read_csv
from spikecoding.encoders import (
    BSAParams,
    LIFParams,
    PWMParams,
    SFParams,
    bsa_encode_normalized,
    fir_lowpass,
    lif_encode,
    pwm_encode_normalized,
    sf_encode,
)
from spikecoding.generators import default_specs

from . import invariants
from .acceptance_log import criterion

GRID_TRIALS = 500
GRID_SEED = 0

# criterion 2
SF_SINE_MSE = 0.01
PWM_SINE_MSE = 0.05
# criterion 4
PWM_SINE_SPARSITY_PCT = 10.0
# criterion 5
SF_LIF_SLACK = 1.25
TIMING_REPEATS = 21
# criterion 6
MIN_CASES = 1000
INVARIANT_BUDGET_S = 120.0
# criterion 8
ORACLE_SIGNALS = 100
ORACLE_MAX_LEN = 256


@pytest.fixture(scope="module")
def grid():
    return run_benchmark(METHOD_ORDER, default_specs(), n_trials=GRID_TRIALS, seed=GRID_SEED, repeats=5)


def dump(report) -> str:
    lines = ["method signal mse sparsity_pct encode_ms params"]
    for c in report.cells:
        lines.append(f"{c.method} {c.signal} {c.mse:.6g} {c.sparsity_pct:.3f} {c.encode_time * 1e3:.3f} "
                     f"{c.best_params if not c.failed else c.error}")
    for method, means in mean_rows(report).items():
        lines.append(f"mean {method}: mse={means['mse']:.6g} sparsity={means['sparsity_pct']:.3f}%")
    return "\n".join(lines)


# 1 ------------------------------------------------------------------------------


def test_criterion_1_pseudocode_traces():
    with criterion("1 pseudocode conformance"):
        start = time.perf_counter()
        assert sf_encode([0.1, 0.3, 0.2, 0.4, 0.8], SFParams(0.15)).spikes.tolist() == [0, 1, 0, 1, 1]
        train, _ = lif_encode([0, 1, 0, 1], LIFParams(0.5, 1.0))
        assert train.spikes.tolist() == [-1, 1, -1, 1]
        assert pwm_encode_normalized(np.full(4, 0.6), PWMParams(1, True)).spikes.tolist() == [0, 0, -1, 1]
        params = BSAParams(8, 0.1, 0.01)
        pulse = np.zeros(24)
        pulse[:9] = params.taps()
        assert np.flatnonzero(bsa_encode_normalized(pulse, params).spikes).tolist() == [0]
        assert time.perf_counter() - start < 1.0


# 2 ------------------------------------------------------------------------------


def test_criterion_2_round_trip_quality(grid):
    with criterion("2 round-trip quality on sinusoidal (500 trials)"):
        sf_cell = grid.cell("sf", "sinusoidal")
        pwm_cell = grid.cell("pwm", "sinusoidal")
        assert sf_cell.n_trials == pwm_cell.n_trials == GRID_TRIALS
        assert sf_cell.mse < SF_SINE_MSE, dump(grid)
        assert pwm_cell.mse < PWM_SINE_MSE, dump(grid)


# 3 ------------------------------------------------------------------------------


def test_criterion_3_sf_lowest_mean_error(grid):
    with criterion("3 SF has the lowest mean MSE on the 4x4 grid"):
        assert not grid.failed_cells, dump(grid)
        print(dump(grid))
        means = mean_rows(grid)
        best = min(means, key=lambda m: means[m]["mse"])
        assert best == "sf", dump(grid)


# 4 ------------------------------------------------------------------------------


def test_criterion_4_pwm_sparsest(grid):
    with criterion("4 PWM has the lowest mean sparsity; PWM sinusoidal < 10%"):
        means = mean_rows(grid)
        best = min(means, key=lambda m: means[m]["sparsity_pct"])
        assert best == "pwm", dump(grid)
        assert grid.cell("pwm", "sinusoidal").sparsity_pct < PWM_SINE_SPARSITY_PCT, dump(grid)


# 5 ------------------------------------------------------------------------------


def test_criterion_5_timing_order(sinusoid_16k):
    with criterion("5 encode time SF <= 1.25 LIF < PWM < BSA"):
        x = sinusoid_16k
        assert x.size == 16384
        t = {
            "sf": time_encode("sf", x, SFParams(0.05), TIMING_REPEATS),
            "lif": time_encode("lif", x, LIFParams(0.5, 0.9), TIMING_REPEATS),
            "pwm": time_encode("pwm", x, PWMParams(64, True), TIMING_REPEATS),
            "bsa": time_encode("bsa", x, BSAParams(16, 0.1, 0.5), 5),
        }
        msg = ", ".join(f"{m}={v * 1e3:.3f}ms" for m, v in t.items())
        print(msg)
        assert t["sf"] <= SF_LIF_SLACK * t["lif"], msg
        assert t["lif"] < t["pwm"] < t["bsa"], msg


# 6 ------------------------------------------------------------------------------

PROPERTIES = sorted(name for name in dir(invariants) if name.startswith("test_"))
_elapsed: dict[str, float] = {}


@pytest.mark.parametrize("name", PROPERTIES)
def test_criterion_6_invariants(name):
    prop = getattr(invariants, name)
    with criterion(f"6 invariant {name}"):
        assert prop.hypothesis.inner_test is not None
        assert prop._hypothesis_internal_use_settings.max_examples >= MIN_CASES
        start = time.perf_counter()
        prop()
        _elapsed[name] = time.perf_counter() - start


def test_criterion_6_budget():
    with criterion("6 invariant suite runtime < 2 min"):
        assert set(_elapsed) == set(PROPERTIES), "run the whole module so every property is timed"
        total = sum(_elapsed.values())
        print(f"invariant suite: {total:.1f}s over {len(PROPERTIES)} properties")
        assert total < INVARIANT_BUDGET_S


# 7 ------------------------------------------------------------------------------


def test_criterion_7_csv_contract(tmp_path):
    with criterion("7 CSV headers and byte-identical regeneration"):
        for run in ("a", "b"):
            out = tmp_path / run
            assert main(["generate", "--seed", "11", "--out-dir", str(out)]) == 0
            code = main(["bench", "--seed", "11", "--trials", "2", "--repeats", "1", "--signals", "trended",
                         "--out-dir", str(out)])
            assert code == 0
        produced = sorted(p.name for p in (tmp_path / "a").glob("*.csv"))
        signal_files = [p for p in produced if p.startswith("signal_")]
        feature_files = [p for p in produced if p.startswith("reconstruction_feature_")]
        assert len(signal_files) == 4 and len(feature_files) == 4
        for name in signal_files:
            header, rows = read_csv(tmp_path / "a" / name, SIGNAL_HEADER)
            assert len(rows) == 16384
        for name in feature_files:
            header, rows = read_csv(tmp_path / "a" / name, FEATURE_HEADER)
            assert len(rows) == 16384
            assert all(math.isfinite(float(v)) for v in rows[-1])
        for name in signal_files + feature_files:
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes(), name


# 8 ------------------------------------------------------------------------------


def bsa_oracle(signal, fir_coeff, threshold):
    """Line-by-line transcription of the BSA pseudocode with 1-based indices."""
    lo, hi = min(signal), max(signal)
    s = [None] + [(v - lo) / (hi - lo) for v in signal]
    f = [None] + list(fir_coeff)
    time_steps = len(signal)
    filter_size = len(fir_coeff)
    spikes = [None] + [0] * time_steps
    for t in range(1, time_steps + 1):
        err1 = 0.0
        err2 = 0.0
        for j in range(1, filter_size + 1):
            if t + j - 1 <= time_steps:
                err1 = err1 + abs(s[t + j - 1] - f[j])
                err2 = err2 + abs(s[t + j - 1])
        if err1 <= err2 - threshold:
            spikes[t] = 1
            for j in range(1, filter_size + 1):
                if t + j - 1 <= time_steps:
                    s[t + j - 1] = s[t + j - 1] - f[j]
        else:
            spikes[t] = 0
    return spikes[1:]


def test_criterion_8_bsa_oracle():
    with criterion("8 BSA matches the double-loop oracle on 100 random signals"):
        from spikecoding.encoders import bsa_encode

        rng = np.random.default_rng(8)
        total_spikes = 0
        for _ in range(ORACLE_SIGNALS):
            n = int(rng.integers(2, ORACLE_MAX_LEN + 1))
            kind = rng.integers(3)
            if kind == 0:
                x = rng.normal(size=n)
            elif kind == 1:
                x = np.cumsum(rng.normal(size=n))
            else:
                x = np.sin(np.linspace(0, rng.uniform(1, 30), n)) + 0.1 * rng.normal(size=n)
            params = BSAParams(
                int(rng.integers(0, min(64, n - 1) + 1)),
                float(rng.uniform(0.01, 0.49)),
                float(np.exp(rng.uniform(np.log(1e-3), np.log(2.0)))),
            )
            train, _ = bsa_encode(x, params)
            expected = bsa_oracle(x.tolist(), fir_lowpass(params.filter_size, params.filter_cutoff).tolist(),
                                  params.threshold)
            assert train.spikes.tolist() == expected, (n, params)
            total_spikes += sum(expected)
        assert total_spikes > 0
