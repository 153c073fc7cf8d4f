import numpy as np
import pytest

from spikecoding.errors import DegenerateSignal, LengthMismatch, NonFiniteSignal
from spikecoding.signal import (
    NormalizationRecord,
    SpikeTrain,
    as_signal,
    denormalize,
    min_max_normalize,
    mse,
    running_mse,
    sparsity,
    zscore_normalize,
)


def test_min_max_examples():
    out, rec = min_max_normalize([0, 5, 10])
    np.testing.assert_array_equal(out, [0, 0.5, 1])
    assert (rec.kind, rec.offset, rec.scale) == ("minmax", 0.0, 10.0)
    out, _ = min_max_normalize([-1, 0, 1, 3])
    np.testing.assert_allclose(out, [0, 0.25, 0.5, 1], rtol=0, atol=1e-15)


def test_min_max_rejects_constant():
    with pytest.raises(DegenerateSignal):
        min_max_normalize([3, 3, 3])


def test_zscore_examples():
    out, _ = zscore_normalize([1, -1])
    np.testing.assert_allclose(out, [1, -1], atol=1e-15)
    out, rec = zscore_normalize([0, 2])
    np.testing.assert_allclose(out, [-1, 1], atol=1e-15)
    assert (rec.offset, rec.scale) == (1.0, 1.0)
    with pytest.raises(DegenerateSignal):
        zscore_normalize([2, 2, 2])
    with pytest.raises(DegenerateSignal):
        zscore_normalize([2.0])


def test_denormalize_examples():
    np.testing.assert_array_equal(denormalize([0, 0.5, 1], NormalizationRecord("minmax", 0, 10)), [0, 5, 10])
    np.testing.assert_array_equal(denormalize([-1, 1], NormalizationRecord("zscore", 1, 1)), [0, 2])


def test_record_rejects_nonpositive_scale():
    with pytest.raises(ValueError):
        NormalizationRecord("minmax", 0.0, 0.0)


def test_mse_examples():
    assert mse([1, 2, 3], [1, 2, 3]) == 0
    assert mse([0, 0], [1, 1]) == 1
    assert mse([0, 3], [0, 0]) == 4.5
    with pytest.raises(LengthMismatch):
        mse([1, 2], [1, 2, 3])


def test_running_mse_examples(rng):
    np.testing.assert_array_equal(running_mse([0, 0], [0, 0]), [0, 0])
    np.testing.assert_array_equal(running_mse([0, 3], [0, 0]), [0, 4.5])
    a, b = rng.normal(size=257), rng.normal(size=257)
    assert running_mse(a, b)[-1] == mse(a, b)
    with pytest.raises(LengthMismatch):
        running_mse([1], [1, 2])


def test_sparsity_examples():
    assert sparsity(SpikeTrain([0, 1, 0, -1])) == 0.5
    assert sparsity(SpikeTrain(np.zeros(10, dtype=int))) == 0
    assert sparsity(SpikeTrain(np.ones(7, dtype=int))) == 1


def test_signal_validation():
    with pytest.raises(NonFiniteSignal):
        as_signal([0.0, np.nan])
    with pytest.raises(NonFiniteSignal):
        as_signal([np.inf, 1.0])
    x = as_signal([1.0, 2.0])
    with pytest.raises(ValueError):
        x[0] = 5.0


def test_spike_train_domain():
    with pytest.raises(ValueError):
        SpikeTrain([0, -1], "unipolar")
    with pytest.raises(ValueError):
        SpikeTrain([0, 2])
    with pytest.raises(ValueError):
        SpikeTrain([0.5, 0])
    train = SpikeTrain([1, 0, -1])
    assert len(train) == 3 and train.count == 2
    assert train.flipped() == SpikeTrain([-1, 0, 1])
