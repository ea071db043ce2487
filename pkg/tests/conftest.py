import os
import pathlib

import pytest

from dpskit import features, models
from dpskit.artifact import make_artifact, save_model
from dpskit.data import load_dataset

REPO_ROOT = pathlib.Path(__file__).resolve().parents[1]
DEFAULT_DATA = REPO_ROOT / "data" / "dps_synthetic.csv"


def dataset_path() -> str:
    # DPS_DATASET points the suite at a different questionnaire file.
    return os.environ.get("DPS_DATASET", str(DEFAULT_DATA))


@pytest.fixture(scope="session")
def dataset():
    return load_dataset(dataset_path())


@pytest.fixture(scope="session")
def top10_indices(dataset):
    return features.select_top_k(features.anova_f_scores(dataset), 10)


@pytest.fixture(scope="session")
def svm_top10_artifact(dataset, top10_indices):
    """A served-style artifact: SVM over the ten best attributes."""
    proj = features.project(dataset, top10_indices)
    model = models.fit(
        models.ModelSpec("svm"), proj.features(), proj.labels(), feature_indices=top10_indices
    )
    return make_artifact(model, proj, lime_seed=42)


@pytest.fixture(scope="session")
def svm_top10_artifact_path(svm_top10_artifact, tmp_path_factory):
    path = tmp_path_factory.mktemp("artifacts") / "svm_top10.dps.json"
    save_model(svm_top10_artifact, str(path))
    return str(path)
