import numpy as np
import pytest

from spikecoding.converters import reconstruction_error
from spikecoding.encoders import SFParams
from spikecoding.errors import DegenerateSignal, EmptySpace, InvalidParams
from spikecoding.optimizer import (
    Categorical,
    Continuous,
    Integer,
    default_space,
    default_trials,
    optimize,
    sample_params,
    space_from_values,
)


@pytest.fixture
def short_sine():
    return np.sin(np.linspace(0, 6 * np.pi, 300))


def test_singleton_space(short_sine):
    space = space_from_values({"threshold": [0.05]})
    result = optimize("sf", short_sine, space=space, n_trials=7, seed=1)
    assert result.best_params == SFParams(0.05)
    assert result.best_mse == reconstruction_error("sf", short_sine, SFParams(0.05))
    assert result.best_index == 0  # every trial ties, earliest wins


def test_sf_500_trials_beats_reference(sinusoid_16k):
    x = sinusoid_16k
    span = float(x.max() - x.min())
    space = {"threshold": Continuous(1e-4, 2 * span)}
    result = optimize("sf", x, space=space, n_trials=500, seed=0)
    reference = reconstruction_error("sf", x, SFParams(span / 10))
    assert result.best_mse <= reference


def test_determinism(short_sine):
    a = optimize("pwm", short_sine, n_trials=30, seed=5)
    b = optimize("pwm", short_sine, n_trials=30, seed=5)
    assert [(t.values, t.mse) for t in a.trials] == [(t.values, t.mse) for t in b.trials]


def test_prefix_consistency_and_monotone_budget(short_sine):
    small = optimize("lif", short_sine, n_trials=20, seed=9)
    large = optimize("lif", short_sine, n_trials=40, seed=9)
    assert [t.values for t in large.trials[:20]] == [t.values for t in small.trials]
    assert large.best_mse <= small.best_mse


def test_result_invariants(short_sine):
    result = optimize("bsa", short_sine, n_trials=12, seed=2)
    assert len(result.trials) == result.n_trials == 12
    assert result.best_mse == min(t.mse for t in result.trials)
    assert result.best_mse >= 0


def test_parallel_matches_serial(short_sine):
    serial = optimize("sf", short_sine, n_trials=16, seed=4)
    parallel = optimize("sf", short_sine, n_trials=16, seed=4, workers=2)
    assert [t.mse for t in serial.trials] == [t.mse for t in parallel.trials]


def test_samples_stay_in_space():
    space = {
        "a": Continuous(0.5, 2.0),
        "b": Continuous(1e-3, 10.0, log=True),
        "c": Integer(1, 9),
        "d": Integer(1, 4096, log=True),
        "e": Categorical((True, False)),
    }
    for i in range(300):
        values = sample_params(space, 123, i)
        assert all(space[k].contains(v) for k, v in values.items())


def test_integer_sampler_covers_range():
    seen = {sample_params({"k": Integer(2, 5)}, 0, i)["k"] for i in range(200)}
    assert seen == {2, 3, 4, 5}


def test_errors(short_sine):
    with pytest.raises(DegenerateSignal):
        optimize("sf", np.ones(20), n_trials=3)
    with pytest.raises(EmptySpace):
        optimize("sf", short_sine, space={}, n_trials=3)
    with pytest.raises(EmptySpace):
        Categorical(())
    with pytest.raises(InvalidParams):
        optimize("sf", short_sine, space={"bogus": Continuous(0, 1)}, n_trials=3)
    with pytest.raises(InvalidParams):
        optimize("sf", short_sine, n_trials=0)
    with pytest.raises(InvalidParams):
        Continuous(1.0, 1.0)


def test_defaults(short_sine):
    assert default_trials("bsa") == 1000 and default_trials("sf") == 500
    space = default_space("pwm", short_sine)
    assert space["frequency"].high == 300 // 4
    span = short_sine.max() - short_sine.min()
    assert default_space("sf", short_sine)["threshold"].high == pytest.approx(span)
