import numpy as np
import pytest

from dpskit.data import Dataset, QuestionnaireInstance
from dpskit.evaluation import (
    CrossValReport,
    EmptyInputError,
    FoldFitError,
    LengthMismatchError,
    TooFewInstancesError,
    TooFewPerClassError,
    compute_metrics,
    cross_validate,
    fit_fold,
    fold_indices,
    kfold_plan,
)
from dpskit.models import ModelSpec, predict_batch


def make_dataset(rows, labels):
    return Dataset(
        instances=tuple(
            QuestionnaireInstance(answers=tuple(r), label=int(l)) for r, l in zip(rows, labels)
        ),
        attribute_count=len(rows[0]),
    )


class TestFoldPlan:
    def test_170_instances_10_folds_are_equal(self, dataset):
        plan = kfold_plan(len(dataset), dataset.labels(), k=10, seed=42)
        sizes = np.bincount(np.asarray(plan.assignments), minlength=10)
        assert sizes.tolist() == [17] * 10

    def test_fold_sizes_within_one_in_general(self):
        labels = np.array([0] * 9 + [1] * 8)
        plan = kfold_plan(17, labels, k=5, seed=0)
        sizes = sorted(np.bincount(np.asarray(plan.assignments), minlength=5).tolist())
        assert sizes == [3, 3, 3, 4, 4]

    def test_ten_instances_ten_folds_is_leave_one_out(self):
        labels = np.array([0, 1] * 5)
        plan = kfold_plan(10, labels, k=10, seed=7)
        sizes = np.bincount(np.asarray(plan.assignments), minlength=10)
        assert sizes.tolist() == [1] * 10

    def test_assignments_partition_everything(self, dataset):
        plan = kfold_plan(len(dataset), dataset.labels(), k=10, seed=1)
        all_test = np.concatenate([fold_indices(plan, f)[1] for f in range(10)])
        assert sorted(all_test.tolist()) == list(range(len(dataset)))
        train, test = fold_indices(plan, 3)
        assert sorted(np.concatenate([train, test]).tolist()) == list(range(len(dataset)))
        assert set(train.tolist()).isdisjoint(test.tolist())

    def test_stratified_class_counts_within_one(self, dataset):
        y = dataset.labels()
        plan = kfold_plan(len(dataset), y, k=10, seed=42)
        assign = np.asarray(plan.assignments)
        for c in (0, 1):
            per_fold = np.bincount(assign[y == c], minlength=10)
            assert per_fold.max() - per_fold.min() <= 1

    def test_deterministic_per_seed(self, dataset):
        a = kfold_plan(len(dataset), dataset.labels(), k=10, seed=42)
        b = kfold_plan(len(dataset), dataset.labels(), k=10, seed=42)
        c = kfold_plan(len(dataset), dataset.labels(), k=10, seed=43)
        assert a.assignments == b.assignments
        assert a.assignments != c.assignments

    def test_too_few_instances(self):
        labels = np.array([0, 1, 0])
        with pytest.raises(TooFewInstancesError):
            kfold_plan(3, labels, k=1, seed=0)
        with pytest.raises(TooFewInstancesError):
            kfold_plan(3, labels, k=4, seed=0)

    def test_too_few_per_class(self):
        labels = np.array([0, 0, 0, 1])
        with pytest.raises(TooFewPerClassError):
            kfold_plan(4, labels, k=2, seed=0)


class TestComputeMetrics:
    def test_mixed_confusion_oracle(self):
        # actual: 19 zeros then 15 ones; predictions miss two of the ones
        y_true = np.array([0] * 19 + [1] * 15)
        y_pred = np.array([0] * 19 + [0, 0] + [1] * 13)
        rep = compute_metrics(y_true, y_pred)
        assert rep.confusion == ((19, 0), (2, 13))
        c0, c1 = rep.per_class
        assert c0.precision == pytest.approx(19 / 21)
        assert c0.recall == 1.0
        assert c0.f1 == pytest.approx(2 * (19 / 21) / (19 / 21 + 1))
        assert c0.support == 19
        assert c1.precision == 1.0
        assert c1.recall == pytest.approx(13 / 15)
        assert c1.f1 == pytest.approx(2 * (13 / 15) / (1 + 13 / 15))
        assert c1.support == 15
        assert rep.accuracy == pytest.approx(32 / 34)
        assert rep.error == pytest.approx(2 / 34)
        assert rep.macro_avg.precision == pytest.approx((19 / 21 + 1) / 2)
        assert rep.macro_avg.recall == pytest.approx((1 + 13 / 15) / 2)

    def test_perfect_predictions(self):
        y = np.array([0, 1, 1, 0, 1])
        rep = compute_metrics(y, y)
        assert rep.accuracy == 1.0 and rep.error == 0.0
        for cm in rep.per_class:
            assert cm.precision == 1.0 and cm.recall == 1.0 and cm.f1 == 1.0

    def test_all_predicted_one_class_no_nan(self):
        y_true = np.array([0, 0, 1, 1])
        y_pred = np.zeros(4, dtype=int)
        rep = compute_metrics(y_true, y_pred)
        c0, c1 = rep.per_class
        assert c1.precision == 0.0 and c1.recall == 0.0 and c1.f1 == 0.0
        assert c0.recall == 1.0
        assert rep.accuracy == 0.5

    def test_confusion_sums_match_supports(self):
        rng = np.random.default_rng(11)
        y_true = rng.integers(0, 2, 60)
        y_true[:2] = [0, 1]
        y_pred = rng.integers(0, 2, 60)
        rep = compute_metrics(y_true, y_pred)
        for c in (0, 1):
            assert sum(rep.confusion[c]) == rep.per_class[c].support == int((y_true == c).sum())
        total = sum(sum(row) for row in rep.confusion)
        assert total == 60
        assert rep.error == pytest.approx(1.0 - rep.accuracy, abs=1e-15)

    def test_f1_is_harmonic_mean(self):
        y_true = np.array([0, 0, 0, 1, 1, 1, 1])
        y_pred = np.array([0, 1, 0, 1, 0, 1, 1])
        rep = compute_metrics(y_true, y_pred)
        for cm in rep.per_class:
            if cm.precision + cm.recall > 0:
                expect = 2 * cm.precision * cm.recall / (cm.precision + cm.recall)
            else:
                expect = 0.0
            assert cm.f1 == pytest.approx(expect)

    def test_label_domain_enforced(self):
        with pytest.raises(ValueError):
            compute_metrics(np.array([0, 2]), np.array([0, 1]))
        with pytest.raises(ValueError):
            compute_metrics(np.array([0, 1]), np.array([0, 3]))

    def test_length_mismatch_and_empty(self):
        with pytest.raises(LengthMismatchError):
            compute_metrics(np.array([0, 1]), np.array([0]))
        with pytest.raises(EmptyInputError):
            compute_metrics(np.array([], dtype=int), np.array([], dtype=int))


class TestCrossValidate:
    def test_report_shape_and_coverage(self, dataset):
        rep = cross_validate(ModelSpec("nb"), dataset, k=10, seed=42)
        assert isinstance(rep, CrossValReport)
        assert len(rep.per_fold) == 10
        tested = sum(cm.support for fold in rep.per_fold for cm in fold.per_class)
        assert tested == len(dataset)
        accs = [f.accuracy for f in rep.per_fold]
        assert rep.mean_accuracy == pytest.approx(float(np.mean(accs)))
        assert rep.std_accuracy == pytest.approx(float(np.std(accs)))

    def test_mean_error_complements_mean_accuracy(self, dataset):
        for algo in ("nb", "cart"):
            rep = cross_validate(ModelSpec(algo), dataset, k=10, seed=42)
            assert abs(rep.mean_error - (1.0 - rep.mean_accuracy)) <= 1e-12

    def test_knn_hand_trace_four_points(self):
        # Two tight pairs far apart: any stratified 2-fold split leaves each
        # test point a same-class neighbor, so 1-NN is always perfect.
        d = make_dataset([[0], [1], [3], [4]], [0, 0, 1, 1])
        rep = cross_validate(ModelSpec("knn", {"k": 1}), d, k=2, seed=5)
        assert rep.mean_accuracy == 1.0

    def test_constant_classifier_baseline(self, dataset):
        # Routing every instance to class 0 scores the class-0 prevalence
        # when fold sizes are equal.
        plan = kfold_plan(len(dataset), dataset.labels(), k=10, seed=42)
        y = dataset.labels()
        accs = []
        for f in range(10):
            _, test_idx = fold_indices(plan, f)
            rep = compute_metrics(y[test_idx], np.zeros(len(test_idx), dtype=int))
            accs.append(rep.accuracy)
        counts = dataset.class_counts()
        assert np.mean(accs) == pytest.approx(counts[0] / len(dataset))

    def test_no_leakage_from_held_out_rows(self, dataset):
        # Corrupting the held-out rows must not change what the fold learns.
        plan = kfold_plan(len(dataset), dataset.labels(), k=10, seed=0)
        train_idx, test_idx = fold_indices(plan, 0)
        X = dataset.features()
        y = dataset.labels()
        X_bad = X.copy()
        X_bad[test_idx] = 4 - X_bad[test_idx]
        spec = ModelSpec("lr")
        m_clean = fit_fold(spec, X, y, train_idx)
        m_dirty = fit_fold(spec, X_bad, y, train_idx)
        assert m_clean.params == m_dirty.params
        queries = X[test_idx]
        assert np.array_equal(predict_batch(m_clean, queries), predict_batch(m_dirty, queries))

    def test_fold_fit_error_carries_fold_id(self, dataset):
        # k=200 exceeds every fold's training size, so fold 0 fails to fit
        spec = ModelSpec("knn", {"k": 200})
        with pytest.raises(FoldFitError) as exc_info:
            cross_validate(spec, dataset, k=10, seed=42)
        assert exc_info.value.fold_id == 0

    def test_mean_accuracy_between_fold_extremes(self, dataset):
        rep = cross_validate(ModelSpec("cart"), dataset, k=10, seed=42)
        accs = [f.accuracy for f in rep.per_fold]
        assert min(accs) <= rep.mean_accuracy <= max(accs)
