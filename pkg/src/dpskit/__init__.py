"""Divorce-prediction toolkit: six from-scratch classifiers over the 54-item
Divorce Predictors Scale, a cross-validation harness, ANOVA-F feature
selection, LIME-style local explanations, and a questionnaire web service."""

from . import data, evaluation, features, lime, models, questions
from .data import Dataset, QuestionnaireInstance, load_dataset, save_dataset, split_train_test
from .evaluation import compute_metrics, cross_validate, kfold_plan
from .features import anova_f_scores, project, select_top_k
from .lime import LimeConfig, build_perturbation_stats, explain
from .models import ModelSpec, TrainedModel, fit, predict, predict_proba
from .questions import QUESTION_COUNT, question_catalog

__version__ = "0.1.0"
