"""Stacked fusion of the two detection pipelines.

Three base models look at each email: naive Bayes and a decision tree
over the OCR'd (perceived) text, and the CNN over the rendered page
thumbnail. Their binary votes become stacking features for a small meta
classifier. Stacking features are built out-of-fold so no base model
ever votes on an email it trained on; the deployed bases are then
retrained on the full training set.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin

from .cnn import ConvNetClassifier, to_image_tensor
from .dom import raw_text
from .errors import TooFewSamples
from .features import PERCEIVED, RAW_SOURCE, build_vocab, tokenize
from .ocr import OcrConfig, ocr_text
from .render import RenderConfig, render_email
from .textmodels import DT, NB, Prediction, TextModel, fit_text_model, predict_tokens, train

STACK_COLUMNS = ("nb", "dt", "cnn")
META_KINDS = ("lr", "rf", "dt")


class EmailFeatureCache:
    """Per-document render/OCR/tokenize results, computed once per run."""

    def __init__(self, render_cfg: RenderConfig | None = None,
                 ocr_cfg: OcrConfig | None = None):
        self.render_cfg = render_cfg or RenderConfig()
        self.ocr_cfg = ocr_cfg or OcrConfig()
        self._perceived: dict[int, tuple] = {}
        self._raw: dict[int, list] = {}
        self._keep = []  # pin cached docs so ids stay unique

    def perceived(self, doc):
        """(perceived tokens, image tensor, truncated flag) for a document."""
        key = id(doc)
        if key not in self._perceived:
            raster, trace = render_email(doc, self.render_cfg)
            text = ocr_text(raster, self.ocr_cfg).text
            self._perceived[key] = (tokenize(text, PERCEIVED),
                                    to_image_tensor(raster), trace.truncated)
            self._keep.append(doc)
        return self._perceived[key]

    def raw_tokens(self, doc):
        key = id(doc)
        if key not in self._raw:
            self._raw[key] = tokenize(raw_text(doc.body), RAW_SOURCE)
            self._keep.append(doc)
        return self._raw[key]


@dataclass
class StackFeatures:
    """Out-of-fold binary base votes; columns ordered (nb, dt, cnn)."""

    matrix: np.ndarray  # (n, 3) of {0, 1}
    labels: np.ndarray  # (n,) of {0, 1}


def stratified_folds(y, n_folds: int, seed: int) -> np.ndarray:
    """Fold index per sample: seeded shuffle within class, dealt round-robin.

    Requires every fold's complement to contain both classes (so the bases
    stay trainable); raises :class:`TooFewSamples` otherwise.
    """
    y = np.asarray(y)
    n = len(y)
    if n_folds < 2 or n_folds > n:
        raise TooFewSamples(f"cannot make {n_folds} folds from {n} samples")
    rng = np.random.Generator(np.random.PCG64(seed))
    folds = np.empty(n, dtype=np.int64)
    for label in (0, 1):
        members = np.flatnonzero(y == label)
        rng.shuffle(members)
        folds[members] = np.arange(len(members)) % n_folds
    for fold in range(n_folds):
        rest = y[folds != fold]
        if len(np.unique(rest)) < 2:
            raise TooFewSamples(
                f"fold {fold} leaves a single-class training set")
    return folds


def _fit_bases(docs, y, cache: EmailFeatureCache, min_df, cnn_params):
    token_lists = []
    tensors = []
    for doc in docs:
        tokens, tensor, _ = cache.perceived(doc)
        token_lists.append(tokens)
        tensors.append(tensor)
    vocab = build_vocab(token_lists, min_df=min_df)
    nb = fit_text_model(NB, token_lists, y, vocab=vocab)
    dt = fit_text_model(DT, token_lists, y, vocab=vocab)
    cnn = ConvNetClassifier(**cnn_params)
    cnn.fit(np.stack(tensors), np.asarray(y))
    return nb, dt, cnn


def _base_votes(nb: TextModel, dt: TextModel, cnn, docs,
                cache: EmailFeatureCache) -> np.ndarray:
    votes = np.zeros((len(docs), 3), dtype=np.int64)
    tensors = []
    for i, doc in enumerate(docs):
        tokens, tensor, _ = cache.perceived(doc)
        votes[i, 0] = int(predict_tokens(nb, tokens).score >= 0.5)
        votes[i, 1] = int(predict_tokens(dt, tokens).score >= 0.5)
        tensors.append(tensor)
    cnn_scores = cnn.predict_score(np.stack(tensors))
    votes[:, 2] = (cnn_scores >= 0.5).astype(np.int64)
    return votes


DEFAULT_CNN_PARAMS = dict(learning_rate=0.05, epochs=6, batch_size=32,
                          augment_data=True)


def oof_stack_features(docs, y, n_folds: int = 5, seed: int = 0,
                       cache: EmailFeatureCache | None = None,
                       min_df: int = 2,
                       cnn_params: dict | None = None) -> StackFeatures:
    """Binary stacking features where each row is predicted out of fold."""
    cache = cache or EmailFeatureCache()
    y = np.asarray(y, dtype=np.int64)
    params = dict(DEFAULT_CNN_PARAMS, **(cnn_params or {}))
    params.setdefault("seed", seed)
    folds = stratified_folds(y, n_folds, seed)
    matrix = np.full((len(docs), 3), -1, dtype=np.int64)
    for fold in range(n_folds):
        held = np.flatnonzero(folds == fold)
        rest = np.flatnonzero(folds != fold)
        if held.size == 0:
            continue
        nb, dt, cnn = _fit_bases([docs[i] for i in rest], y[rest], cache,
                                 min_df, params)
        matrix[held] = _base_votes(nb, dt, cnn, [docs[i] for i in held],
                                   cache)
    assert (matrix >= 0).all(), "every sample must receive one vote per base"
    return StackFeatures(matrix=matrix, labels=y)


class StackedSpamClassifier(BaseEstimator, ClassifierMixin):
    """The full two-pipeline architecture behind one fit/predict interface.

    ``fit`` takes parsed email documents plus 0/1 labels; ``predict_one``
    returns the fused verdict together with the three base votes.
    """

    def __init__(self, meta: str = "lr", n_folds: int = 5, seed: int = 0,
                 min_df: int = 2, cnn_params: dict | None = None):
        self.meta = meta
        self.n_folds = n_folds
        self.seed = seed
        self.min_df = min_df
        self.cnn_params = cnn_params

    def fit(self, docs, y, cache: EmailFeatureCache | None = None):
        if self.meta not in META_KINDS:
            raise ValueError(f"meta must be one of {META_KINDS}")
        cache = cache or EmailFeatureCache()
        y = np.asarray(y, dtype=np.int64)
        params = dict(DEFAULT_CNN_PARAMS, **(self.cnn_params or {}))
        params.setdefault("seed", self.seed)
        self.stack_features_ = oof_stack_features(
            docs, y, self.n_folds, self.seed, cache, self.min_df, params)
        self.fit_meta(self.stack_features_)
        self.nb_, self.dt_, self.cnn_ = _fit_bases(docs, y, cache,
                                                   self.min_df, params)
        self._cache = cache
        return self

    def fit_meta(self, features: StackFeatures):
        """Train only the meta layer (bases supplied or fit separately)."""
        self.meta_model_ = train(self.meta,
                                 features.matrix.astype(np.float64),
                                 features.labels)
        return self

    def base_scores(self, doc, cache: EmailFeatureCache | None = None):
        cache = cache or getattr(self, "_cache", None) or EmailFeatureCache()
        tokens, tensor, truncated = cache.perceived(doc)
        nb_score = predict_tokens(self.nb_, tokens).score
        dt_score = predict_tokens(self.dt_, tokens).score
        cnn_score = float(self.cnn_.predict_score(tensor[None])[0])
        return (nb_score, dt_score, cnn_score), truncated

    def predict_one(self, doc, cache: EmailFeatureCache | None = None):
        """Fused prediction plus an explanation of the base votes."""
        scores, truncated = self.base_scores(doc, cache)
        votes = np.array([[float(s >= 0.5) for s in scores]])
        final = Prediction(self.meta_model_.estimator.predict_score(votes)[0])
        explanation = {
            "nb_score": scores[0], "dt_score": scores[1],
            "cnn_score": scores[2],
            "nb_vote": int(votes[0, 0]), "dt_vote": int(votes[0, 1]),
            "cnn_vote": int(votes[0, 2]),
            "final": final.label, "truncated_render": truncated,
        }
        return final, explanation

    def predict(self, docs, cache: EmailFeatureCache | None = None):
        return np.array([int(self.predict_one(d, cache)[0].score >= 0.5)
                         for d in docs], dtype=np.int64)


def stack_train(docs, y, meta_kind: str = "lr", n_folds: int = 5,
                seed: int = 0, cache: EmailFeatureCache | None = None,
                cnn_params: dict | None = None) -> StackedSpamClassifier:
    model = StackedSpamClassifier(meta=meta_kind, n_folds=n_folds, seed=seed,
                                  cnn_params=cnn_params)
    return model.fit(docs, y, cache=cache)


def stack_predict(model: StackedSpamClassifier, doc,
                  cache: EmailFeatureCache | None = None):
    return model.predict_one(doc, cache)


def explanation_tsv(explanation: dict) -> str:
    """One tab-separated line: scores, votes and the fused verdict."""
    return "\t".join([
        f"{explanation['nb_score']:.4f}", f"{explanation['dt_score']:.4f}",
        f"{explanation['cnn_score']:.4f}", str(explanation["nb_vote"]),
        str(explanation["dt_vote"]), str(explanation["cnn_vote"]),
        explanation["final"],
    ])
