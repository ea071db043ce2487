import numpy as np
import pytest

from dpskit.data import (
    Dataset,
    DegenerateSplitError,
    EmptyDatasetError,
    MalformedRowError,
    QuestionnaireInstance,
    UnlabeledDataError,
    attribute_histogram,
    load_dataset,
    save_dataset,
    split_train_test,
    standardize_apply,
    standardize_fit,
)
from dpskit.questions import QUESTION_COUNT, question_catalog


def tiny_dataset(rows, width=3):
    return Dataset(
        instances=tuple(QuestionnaireInstance(answers=tuple(a), label=lb) for a, lb in rows),
        attribute_count=width,
    )


class TestQuestionCatalog:
    def test_has_54_items(self):
        catalog = question_catalog()
        assert len(catalog.entries) == QUESTION_COUNT == 54

    def test_indices_are_1_to_54_without_gaps(self):
        catalog = question_catalog()
        assert [e.index for e in catalog.entries] == list(range(1, 55))

    def test_texts_non_empty(self):
        catalog = question_catalog()
        assert all(e.text.strip() for e in catalog.entries)

    def test_lookup_by_index(self):
        catalog = question_catalog()
        assert catalog.text(1).startswith("When one of our")
        with pytest.raises(IndexError):
            catalog.text(55)


class TestInstanceValidation:
    def test_answer_out_of_range(self):
        with pytest.raises(ValueError):
            QuestionnaireInstance(answers=(0, 5), label=0)
        with pytest.raises(ValueError):
            QuestionnaireInstance(answers=(-1,), label=0)

    def test_bad_label(self):
        with pytest.raises(ValueError):
            QuestionnaireInstance(answers=(0,), label=2)

    def test_unlabeled_allowed(self):
        inst = QuestionnaireInstance(answers=(0, 4))
        assert inst.label is None

    def test_width_mismatch_rejected(self):
        with pytest.raises(ValueError):
            Dataset(instances=(QuestionnaireInstance(answers=(0, 1)),), attribute_count=3)


class TestLoading:
    def test_loads_semicolon_with_header(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("Atr1;Atr2;Class\n0;4;1\n1;2;0\n")
        d = load_dataset(str(p), attribute_count=2)
        assert len(d) == 2
        assert d.instances[0].answers == (0, 4)
        assert d.instances[0].label == 1

    def test_loads_comma_without_header(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("0,4,1\n1,2,0\n")
        d = load_dataset(str(p), attribute_count=2)
        assert d.instances[1].answers == (1, 2)

    def test_missing_file(self):
        with pytest.raises(FileNotFoundError):
            load_dataset("/nonexistent/nowhere.csv")

    def test_empty_file(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("")
        with pytest.raises(EmptyDatasetError):
            load_dataset(str(p))

    def test_header_only(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("Atr1;Atr2;Class\n")
        with pytest.raises(EmptyDatasetError):
            load_dataset(str(p), attribute_count=2)

    def test_wrong_field_count_reports_line(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("0;4;1\n1;2\n")
        with pytest.raises(MalformedRowError) as err:
            load_dataset(str(p), attribute_count=2)
        assert err.value.line == 2

    def test_non_integer_token(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("0;x;1\n")
        with pytest.raises(MalformedRowError, match="'x'"):
            load_dataset(str(p), attribute_count=2)

    def test_answer_out_of_range(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("0;7;1\n")
        with pytest.raises(MalformedRowError, match="attribute 2"):
            load_dataset(str(p), attribute_count=2)

    def test_bad_class_code(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("0;1;3\n")
        with pytest.raises(MalformedRowError, match="class code"):
            load_dataset(str(p), attribute_count=2)

    def test_save_load_round_trip(self, tmp_path, dataset):
        p = tmp_path / "copy.csv"
        save_dataset(dataset, str(p))
        again = load_dataset(str(p))
        assert again.instances == dataset.instances

    def test_canonical_file_shape(self, dataset):
        assert len(dataset) == 170
        assert dataset.attribute_count == 54


class TestSplit:
    def test_sizes_136_34(self, dataset):
        train, test = split_train_test(dataset, 0.8, 42)
        assert (len(train), len(test)) == (136, 34)

    def test_stratified_within_one_of_proportionality(self, dataset):
        train, test = split_train_test(dataset, 0.8, 42)
        for c, total in dataset.class_counts().items():
            got = train.class_counts()[c]
            assert abs(got - 0.8 * total) <= 1.0

    def test_partition(self, dataset):
        train, test = split_train_test(dataset, 0.8, 7)
        key = lambda inst: (inst.answers, inst.label)  # noqa: E731
        # Multiset equality: every original instance appears exactly once.
        assert sorted(train.instances + test.instances, key=key) == sorted(
            dataset.instances, key=key
        )

    def test_deterministic_for_fixed_seed(self, dataset):
        a = split_train_test(dataset, 0.8, 42)
        b = split_train_test(dataset, 0.8, 42)
        assert a[0].instances == b[0].instances and a[1].instances == b[1].instances

    def test_seed_changes_membership(self, dataset):
        a = split_train_test(dataset, 0.8, 42)
        b = split_train_test(dataset, 0.8, 43)
        assert a[0].instances != b[0].instances

    def test_two_instances_split_one_one(self):
        d = tiny_dataset([((0, 0, 0), 0), ((1, 1, 1), 1)])
        train, test = split_train_test(d, 0.5, 0)
        assert (len(train), len(test)) == (1, 1)

    def test_single_instance_degenerate(self):
        d = tiny_dataset([((0, 0, 0), 0)])
        with pytest.raises(DegenerateSplitError):
            split_train_test(d, 0.5, 0)

    def test_bad_fraction(self, dataset):
        for f in (0.0, 1.0, -0.2, 1.7):
            with pytest.raises(ValueError):
                split_train_test(dataset, f, 0)

    def test_unlabeled_rejected(self):
        d = Dataset(
            instances=(
                QuestionnaireInstance(answers=(0, 0, 0)),
                QuestionnaireInstance(answers=(1, 1, 1), label=1),
            ),
            attribute_count=3,
        )
        with pytest.raises(UnlabeledDataError):
            split_train_test(d, 0.5, 0)


class TestScaler:
    def test_standardizes_to_zero_mean_unit_std(self, dataset):
        stats = standardize_fit(dataset)
        Z = standardize_apply(stats, dataset.features())
        keep = np.asarray(stats.stds) != 1.0  # skip constant columns
        assert np.allclose(Z.mean(axis=0)[keep], 0.0, atol=1e-12)
        assert np.allclose(Z.std(axis=0)[keep], 1.0, atol=1e-12)

    def test_constant_column_stored_as_unit_std(self):
        d = tiny_dataset([((2, 0, 1), 0), ((2, 4, 3), 1)])
        stats = standardize_fit(d)
        assert stats.stds[0] == 1.0
        Z = standardize_apply(stats, d.features())
        assert np.all(Z[:, 0] == 0.0)

    def test_width_mismatch(self, dataset):
        stats = standardize_fit(dataset)
        with pytest.raises(ValueError):
            standardize_apply(stats, np.zeros((2, 7)))


class TestHistogram:
    def test_counts_sum_to_n(self, dataset):
        h = attribute_histogram(dataset, 1)
        assert sum(h.counts) == len(dataset)
        assert len(h.counts) == 5

    def test_one_based_indexing(self):
        d = tiny_dataset([((0, 4, 2), 0), ((0, 4, 1), 1)])
        assert attribute_histogram(d, 2).counts == (0, 0, 0, 0, 2)

    def test_bad_index(self, dataset):
        for idx in (0, 55):
            with pytest.raises(IndexError):
                attribute_histogram(dataset, idx)
