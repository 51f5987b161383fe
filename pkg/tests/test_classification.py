import pytest
from hypothesis import given, settings, strategies as st

from metrics.classical import classical_accuracy, confusion_counts
from metrics.classification import (
    accuracy_decomposition,
    accuracy_variance,
    accuracy_with_flipped_labels,
    corrected_accuracy,
    expected_accuracy,
)
from metrics.models import ClassificationDataset, ClassificationObservation, FlipModel, VarianceConvention
from utils.errors import EmptyDatasetError, ValidationError


@st.composite
def classification_datasets(draw, max_size=30, flip_probs=st.floats(min_value=0, max_value=0.5)):
    m = draw(st.integers(min_value=1, max_value=max_size))
    y = draw(st.lists(st.integers(min_value=0, max_value=1), min_size=m, max_size=m))
    p_hat = draw(st.lists(st.floats(min_value=0, max_value=1), min_size=m, max_size=m))
    q = draw(flip_probs)
    alpha = draw(st.floats(min_value=0.05, max_value=0.95))
    return ClassificationDataset.from_arrays(y, p_hat, alpha=alpha, q=q)


class TestDataModel:
    @pytest.mark.parametrize("y", [2, -1, True, 0.5])
    def test_label_must_be_binary(self, y):
        with pytest.raises(ValidationError):
            ClassificationObservation(y, 0.5)

    @pytest.mark.parametrize("p_hat", [-0.01, 1.01])
    def test_probability_range(self, p_hat):
        with pytest.raises(ValidationError):
            ClassificationObservation(1, p_hat)

    @pytest.mark.parametrize("q", [-0.1, 0.51, 1.0])
    def test_flip_probability_range(self, q):
        with pytest.raises(ValidationError):
            FlipModel(q)

    @pytest.mark.parametrize("alpha", [0.0, 1.0])
    def test_threshold_is_open_interval(self, alpha):
        with pytest.raises(ValidationError):
            ClassificationDataset.from_arrays([1], [0.5], alpha=alpha)

    def test_threshold_ties_predict_positive(self):
        ds = ClassificationDataset.from_arrays([1, 0], [0.5, 0.5], alpha=0.5)
        assert ds.predictions.tolist() == [1, 1]

    def test_empty(self):
        with pytest.raises(EmptyDatasetError):
            ClassificationDataset((), 0.5, 0.0)


class TestCorrectedAccuracy:
    def test_worked_example(self):
        assert corrected_accuracy(0.85, 0.05) == pytest.approx(0.815, abs=1e-15)

    @pytest.mark.parametrize("a", [0.0, 0.3, 0.5, 1.0])
    def test_coin_flip_labels(self, a):
        assert corrected_accuracy(a, 0.5) == pytest.approx(0.5, abs=1e-15)

    def test_half_accuracy_is_fixed_point(self):
        assert corrected_accuracy(0.5, 0.2) == 0.5

    @given(st.floats(min_value=0.51, max_value=1), st.floats(min_value=1e-6, max_value=0.5))
    def test_pessimism(self, a, q):
        assert corrected_accuracy(a, q) < a

    @pytest.mark.parametrize("q", [0.0, 0.05, 0.1, 0.25, 0.4, 0.5])
    def test_affine_in_accuracy(self, q):
        grid = [i / 20 for i in range(21)]
        values = [corrected_accuracy(a, q) for a in grid]
        slope = 1 - 2 * q
        for a, value in zip(grid, values):
            assert value == pytest.approx(q + slope * a, abs=1e-15)
        steps = [b - a for a, b in zip(values, values[1:])]
        assert steps == pytest.approx([slope / 20] * 20, abs=1e-15)


class TestExpectedAccuracy:
    def test_dataset_example(self, accuracy_085_dataset):
        assert classical_accuracy(accuracy_085_dataset) == 0.85
        est = expected_accuracy(accuracy_085_dataset)
        assert est.expected == pytest.approx(0.815, abs=1e-15)
        assert est.variance == pytest.approx(0.05 * 0.95 / 20, rel=1e-15)

    def test_paper_printed_variance(self, accuracy_085_dataset):
        est = expected_accuracy(accuracy_085_dataset, VarianceConvention.PAPER_PRINTED)
        assert est.variance == pytest.approx(0.0475, rel=1e-15)

    def test_no_flips(self):
        ds = ClassificationDataset.from_arrays([1, 0, 1], [0.9, 0.8, 0.1], q=0.0)
        est = expected_accuracy(ds)
        assert est.expected == classical_accuracy(ds)
        assert est.variance == 0.0

    def test_variance_scales_with_size(self):
        assert accuracy_variance(0.1, 10, VarianceConvention.ORACLE_CONSISTENT) == pytest.approx(0.009)
        assert accuracy_variance(0.1, 10, "paper-printed") == pytest.approx(0.09)

    @given(classification_datasets(flip_probs=st.just(0.0)))
    @settings(max_examples=100)
    def test_no_flips_on_random_data(self, ds):
        est = expected_accuracy(ds)
        assert est.expected == pytest.approx(classical_accuracy(ds), rel=1e-13, abs=0.0)
        assert est.variance == 0.0


class TestDecomposition:
    def test_confusion_counts(self):
        ds = ClassificationDataset.from_arrays([1, 0, 1, 0], [0.9, 0.2, 0.4, 0.7], q=0.05)
        counts = confusion_counts(ds)
        assert counts.as_tuple() == (1, 1, 1, 1)
        assert counts.total == 4

    def test_routes_agree(self, accuracy_085_dataset):
        report = accuracy_decomposition(accuracy_085_dataset)
        assert report.decomposition_expected == pytest.approx(0.815, abs=1e-15)
        assert report.corrected.expected == pytest.approx(0.815, abs=1e-15)
        assert report.correction == pytest.approx(-0.035, abs=1e-15)
        assert report.paper_printed_variance is None

    def test_paper_compat_adds_printed_variance(self, accuracy_085_dataset):
        report = accuracy_decomposition(accuracy_085_dataset, paper_compat=True)
        assert report.paper_printed_variance == pytest.approx(0.0475)
        assert report.variance_convention is VarianceConvention.ORACLE_CONSISTENT

    @given(classification_datasets())
    @settings(max_examples=300)
    def test_routes_agree_on_random_data(self, ds):
        report = accuracy_decomposition(ds)
        assert abs(report.decomposition_expected - report.corrected.expected) <= 1e-14


class TestFlippedLabels:
    def test_keep_all(self, accuracy_085_dataset):
        assert accuracy_with_flipped_labels(accuracy_085_dataset, [1] * 20) == 0.85

    def test_flip_all(self, accuracy_085_dataset):
        assert accuracy_with_flipped_labels(accuracy_085_dataset, [0] * 20) == pytest.approx(0.15)

    def test_length_mismatch(self, accuracy_085_dataset):
        with pytest.raises(ValidationError):
            accuracy_with_flipped_labels(accuracy_085_dataset, [1] * 19)

    def test_bits_must_be_binary(self, accuracy_085_dataset):
        with pytest.raises(ValidationError):
            accuracy_with_flipped_labels(accuracy_085_dataset, [2] + [1] * 19)
