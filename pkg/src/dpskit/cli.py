"""Command-line entry points: train, evaluate, select-features, explain, stats, serve."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict

from . import evaluation, features, models
from .artifact import load_model, make_artifact, save_model
from .data import attribute_histogram, load_dataset
from .lime import LimeConfig, explain as lime_explain
from .questions import question_catalog

# Presentation order for the evaluate table.
_ALGO_ORDER = ("lr", "lda", "knn", "cart", "nb", "svm")
_ALGO_LABELS = {a: a.upper() for a in _ALGO_ORDER}


def _cmd_train(args) -> int:
    data = load_dataset(args.data)
    if args.features:
        with open(args.features, encoding="utf-8") as fh:
            indices = [int(i) for i in json.load(fh)]
        data = features.project(data, indices)
        feature_indices = tuple(indices)
    else:
        feature_indices = None

    spec = models.ModelSpec(algorithm=args.model)
    model = models.fit(spec, data.features(), data.labels(), feature_indices=feature_indices)

    try:
        cv = evaluation.cross_validate(spec, data, 10, args.seed)
        cv_mean = cv.mean_accuracy
    except (evaluation.TooFewInstancesError, evaluation.TooFewPerClassError):
        cv_mean = None

    artifact = make_artifact(model, data, cv_mean_accuracy=cv_mean, lime_seed=args.seed)
    save_model(artifact, args.out)
    summary = f", cv mean accuracy {cv_mean:.4f}" if cv_mean is not None else ""
    print(f"saved {args.model} model ({len(data)} training rows{summary}) to {args.out}")
    return 0


def _cmd_evaluate(args) -> int:
    data = load_dataset(args.data)
    print("| Algorithm | Accuracy | Error |")
    print("|-----------|----------|-------|")
    for algo in _ALGO_ORDER:
        report = evaluation.cross_validate(models.ModelSpec(algo), data, args.folds, args.seed)
        print(f"| {_ALGO_LABELS[algo]:<9s} | {report.mean_accuracy:.4f}   | {report.mean_error:.4f} |")
        if args.json_out:
            os.makedirs(args.json_out, exist_ok=True)
            path = os.path.join(args.json_out, f"{algo}.json")
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(asdict(report), fh, indent=2)
                fh.write("\n")
    return 0


def _cmd_select_features(args) -> int:
    data = load_dataset(args.data)
    scores = features.anova_f_scores(data)
    top = features.select_top_k(scores, args.k)
    catalog = question_catalog()
    print(f"{'rank':>4s}  {'attr':>4s}  {'F':>12s}  question")
    for score in scores[: args.k]:
        f_text = "inf" if score.f_statistic == float("inf") else f"{score.f_statistic:.3f}"
        print(f"{score.rank:>4d}  {score.attribute_index:>4d}  {f_text:>12s}  {catalog.text(score.attribute_index)}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(top, fh)
            fh.write("\n")
        print(f"wrote {len(top)} indices to {args.out}")
    return 0


def _cmd_explain(args) -> int:
    artifact = load_model(args.artifact)
    answers = [int(tok) for tok in args.answers.split(",") if tok.strip() != ""]
    cfg = LimeConfig(
        num_features_out=min(10, len(artifact.model.feature_indices)),
        seed=artifact.lime_seed,
    )
    result = lime_explain(artifact.model, answers, artifact.perturbation_stats, cfg)
    proba = models.predict_proba(artifact.model, answers)
    label = artifact.label_for(models.predict(artifact.model, answers))
    print(f"prediction: {label} (class-1 probability {proba:.4f})")
    print(f"surrogate r2: {result.surrogate_r2:.4f}")
    catalog = question_catalog()
    for entry in result.entries:
        print(
            f"  attr {entry.attribute_index:>2d}  weight {entry.weight:+.4f}  "
            f"answer {entry.instance_value}  {catalog.text(entry.attribute_index)}"
        )
    if args.out:
        doc = {
            "entries": [asdict(e) for e in result.entries],
            "intercept": result.intercept,
            "surrogate_r2": result.surrogate_r2,
            "degenerate": result.degenerate,
            "config": asdict(result.config),
        }
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    return 0


def _cmd_stats(args) -> int:
    data = load_dataset(args.data)
    histograms = [
        attribute_histogram(data, idx) for idx in range(1, data.attribute_count + 1)
    ]
    doc = [{"index": h.attribute_index, "counts": list(h.counts)} for h in histograms]
    print(json.dumps(doc))
    return 0


def _cmd_serve(args) -> int:
    from .service import serve

    artifact = load_model(args.artifact)
    port = int(os.environ.get("DPS_PORT", args.port))
    serve(artifact, port=port, host=args.host, static_dir=args.static)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dps", description="divorce prediction toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="fit a model and save it as an artifact")
    p.add_argument("--data", required=True)
    p.add_argument("--model", required=True, choices=_ALGO_ORDER)
    p.add_argument("--features", help="JSON file with 1-based attribute indices")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", required=True, help="artifact path (.dps.json)")
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("evaluate", help="cross-validate all six algorithms")
    p.add_argument("--data", required=True)
    p.add_argument("--folds", type=int, default=10)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--json-out", help="directory for per-algorithm JSON reports")
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("select-features", help="rank attributes by ANOVA F")
    p.add_argument("--data", required=True)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--out", help="JSON file to write the selected indices to")
    p.set_defaults(func=_cmd_select_features)

    p = sub.add_parser("explain", help="explain one prediction from an artifact")
    p.add_argument("--artifact", required=True)
    p.add_argument("--answers", required=True, help="comma-separated answers, served order")
    p.add_argument("--out", help="JSON file for the explanation")
    p.set_defaults(func=_cmd_explain)

    p = sub.add_parser("stats", help="per-attribute answer histograms as JSON")
    p.add_argument("--data", required=True)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("serve", help="serve an artifact over HTTP")
    p.add_argument("--artifact", required=True)
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", help="directory of built UI assets to serve at /")
    p.set_defaults(func=_cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:  # noqa: BLE001 - CLI boundary: fail with a message
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
