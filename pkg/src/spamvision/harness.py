"""Experiment driver: source-text vs perceived-text comparisons and the
stacked-pipeline evaluation, with CSV reports.

The first report trains every classical text classifier twice per corpus
split, once on naive source text and once on the OCR of the rendered
email, exposing how much accuracy the salting tricks cost a source-text
filter. The second evaluates the full stacked architecture under each
candidate meta classifier.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import LabeledCorpus
from .features import build_vocab, featurize
from .metrics import Metrics, Split, compute_metrics
from .stacking import (DEFAULT_CNN_PARAMS, EmailFeatureCache,
                       StackedSpamClassifier, _base_votes, _fit_bases,
                       oof_stack_features)
from .textmodels import (ADABOOST, DT, KNN, LR, NB, SVM, FEATURE_MODE,
                         predict_tokens, train)

TABLE1_KINDS = (NB, DT, LR, SVM, ADABOOST, KNN)
TABLE2_METAS = ("lr", "rf", "dt")


@dataclass
class Table1Row:
    kind: str
    raw_accuracy: float
    ocr_accuracy: float


@dataclass
class Table2Row:
    meta: str
    metrics: Metrics


@dataclass
class ComparisonReport:
    table1: list[Table1Row]
    table2: list[Table2Row]
    base_accuracies: dict


def _mode_tokens(corpus: LabeledCorpus, cache: EmailFeatureCache, raw: bool):
    if raw:
        return [cache.raw_tokens(item.doc) for item in corpus.items]
    return [cache.perceived(item.doc)[0] for item in corpus.items]


def _eval_kind(kind, tokens, y, train_ids, test_ids, min_df, seed):
    train_tokens = [tokens[i] for i in train_ids]
    vocab = build_vocab(train_tokens, min_df=min_df)
    mode = FEATURE_MODE[kind]
    vectors = [featurize(t, vocab, mode) for t in train_tokens]
    params = {"seed": seed} if kind in ("svm", "rf") else {}
    model = train(kind, vectors, y[train_ids], vocab=vocab, **params)
    predictions = np.array(
        [int(predict_tokens(model, tokens[i]).score >= 0.5)
         for i in test_ids], dtype=np.int64)
    return float(np.mean(predictions == y[test_ids]))


def run_table1(corpus: LabeledCorpus, split: Split,
               kinds=TABLE1_KINDS, cache: EmailFeatureCache | None = None,
               min_df: int = 2, seed: int = 0) -> list[Table1Row]:
    """Per classifier kind: accuracy on raw source text vs on OCR text."""
    cache = cache or EmailFeatureCache()
    y = corpus.labels
    raw_tokens = _mode_tokens(corpus, cache, raw=True)
    ocr_tokens = _mode_tokens(corpus, cache, raw=False)
    rows = []
    for kind in kinds:
        raw_acc = _eval_kind(kind, raw_tokens, y, split.train_ids,
                             split.test_ids, min_df, seed)
        ocr_acc = _eval_kind(kind, ocr_tokens, y, split.train_ids,
                             split.test_ids, min_df, seed)
        rows.append(Table1Row(kind=kind, raw_accuracy=raw_acc,
                              ocr_accuracy=ocr_acc))
    return rows


def run_table2(corpus: LabeledCorpus, split: Split, metas=TABLE2_METAS,
               n_folds: int = 5, seed: int = 0,
               cache: EmailFeatureCache | None = None,
               cnn_params: dict | None = None,
               min_df: int = 2) -> ComparisonReport:
    """Stacked-pipeline accuracy per meta classifier.

    The three base models and their out-of-fold stacking features are
    computed once and shared across the meta candidates.
    """
    cache = cache or EmailFeatureCache()
    y = corpus.labels
    docs = corpus.docs
    train_docs = [docs[i] for i in split.train_ids]
    test_docs = [docs[i] for i in split.test_ids]
    y_train = y[split.train_ids]
    y_test = y[split.test_ids]
    params = dict(DEFAULT_CNN_PARAMS, **(cnn_params or {}))
    params.setdefault("seed", seed)

    features = oof_stack_features(train_docs, y_train, n_folds, seed, cache,
                                  min_df, params)
    nb, dt, cnn = _fit_bases(train_docs, y_train, cache, min_df, params)
    test_votes = _base_votes(nb, dt, cnn, test_docs, cache)
    base_accuracies = {
        name: float(np.mean(test_votes[:, i] == y_test))
        for i, name in enumerate(("nb", "dt", "cnn"))
    }

    rows = []
    for meta in metas:
        stacked = StackedSpamClassifier(meta=meta, n_folds=n_folds,
                                        seed=seed)
        stacked.fit_meta(features)
        pred = (stacked.meta_model_.estimator.predict_score(
            test_votes.astype(np.float64)) >= 0.5).astype(np.int64)
        rows.append(Table2Row(meta=meta,
                              metrics=compute_metrics(pred, y_test)))
    report = ComparisonReport(table1=[], table2=rows,
                              base_accuracies=base_accuracies)
    report.stack_parts_ = (features, nb, dt, cnn)
    return report


def table1_csv(rows: list[Table1Row]) -> str:
    lines = ["model,raw_accuracy,ocr_accuracy"]
    for row in rows:
        lines.append(f"{row.kind},{row.raw_accuracy:.4f},"
                     f"{row.ocr_accuracy:.4f}")
    return "\n".join(lines) + "\n"


def table2_csv(rows: list[Table2Row]) -> str:
    lines = ["meta,accuracy,fp_total,fn_total"]
    for row in rows:
        m = row.metrics
        lines.append(f"{row.meta},{m.accuracy:.4f},{m.fp_total:.4f},"
                     f"{m.fn_total:.4f}")
    return "\n".join(lines) + "\n"


def parse_config(text: str) -> dict:
    """``key = value`` configuration lines with ``#`` comments."""
    config = {}
    for raw_line in text.splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"malformed config line: {raw_line!r}")
        config[key.strip()] = value.strip()
    return config
