import pytest
from hypothesis import given, settings, strategies as st

from metrics.classification import expected_accuracy
from metrics.models import ClassificationDataset, VarianceConvention
from oracle.enumeration import enumerate_flip_moments
from utils.errors import ValidationError


@st.composite
def small_datasets(draw, max_size=12):
    m = draw(st.integers(min_value=1, max_value=max_size))
    y = draw(st.lists(st.integers(0, 1), min_size=m, max_size=m))
    p_hat = draw(st.lists(st.floats(0, 1), min_size=m, max_size=m))
    q = draw(st.floats(0, 0.5))
    return ClassificationDataset.from_arrays(y, p_hat, q=q)


@given(small_datasets())
@settings(max_examples=60, deadline=None)
def test_expected_accuracy_is_exact(ds):
    expected, variance, n_vectors = enumerate_flip_moments(ds)
    assert n_vectors == 2**ds.size
    closed = expected_accuracy(ds)
    assert abs(expected - closed.expected) <= 1e-14
    # the exact variance settles the convention: q(1-q)/M, not q(1-q)
    assert abs(variance - closed.variance) <= 1e-14


def test_printed_convention_disagrees_for_larger_sets():
    ds = ClassificationDataset.from_arrays([1, 0, 1, 0], [0.9, 0.1, 0.8, 0.6], q=0.1)
    _, variance, _ = enumerate_flip_moments(ds)
    printed = expected_accuracy(ds, VarianceConvention.PAPER_PRINTED).variance
    assert variance == pytest.approx(0.09 / 4, rel=1e-12)
    assert printed == pytest.approx(0.09)


def test_no_flips_has_single_outcome():
    ds = ClassificationDataset.from_arrays([1, 0, 0], [0.9, 0.7, 0.2], q=0.0)
    expected, variance, _ = enumerate_flip_moments(ds)
    assert expected == pytest.approx(2 / 3, abs=1e-15)
    assert variance == pytest.approx(0.0, abs=1e-15)


def test_size_limit():
    ds = ClassificationDataset.from_arrays([1] * 17, [0.9] * 17, q=0.1)
    with pytest.raises(ValidationError, match="limited to 16"):
        enumerate_flip_moments(ds)
