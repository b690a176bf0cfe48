"""From-scratch text classifiers behind a sklearn-style estimator API.

All estimators consume a CSR (or dense) feature matrix and 0/1 labels
with spam = 1, expose ``fit`` / ``predict`` / ``predict_score`` and keep a
spam-probability-like score in [0, 1] so they stack uniformly. Every
source of randomness is an explicit seed and all tie-breaks are
deterministic (ham on vote ties, lowest feature index on equal Gini).
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp
from sklearn.base import BaseEstimator, ClassifierMixin

from .errors import DegenerateLabels, VocabMismatch
from .features import (COUNTS, PRESENCE, TFIDF, FeatureVector, Vocab,
                       featurize, to_csr)

NB = "nb"
DT = "dt"
LR = "lr"
SVM = "svm"
ADABOOST = "adaboost"
KNN = "knn"
RF = "rf"

TEXT_MODEL_KINDS = (NB, DT, LR, SVM, ADABOOST, KNN, RF)

# Feature representation each algorithm trains on.
FEATURE_MODE = {
    NB: COUNTS, DT: PRESENCE, LR: COUNTS, SVM: TFIDF,
    ADABOOST: PRESENCE, KNN: TFIDF, RF: PRESENCE,
}


def _as_csr(X) -> sp.csr_matrix:
    if sp.issparse(X):
        return X.tocsr()
    return sp.csr_matrix(np.asarray(X, dtype=np.float64))


def _check_labels(y, allow_single_class=False):
    y = np.asarray(y, dtype=np.int64)
    if not allow_single_class and len(np.unique(y)) < 2:
        raise DegenerateLabels("training data holds a single class")
    return y


def _ham_tie(spam_votes, total):
    """Vote fraction with exact ties nudged to the ham side of 0.5."""
    frac = spam_votes / total
    if 2 * spam_votes == total:
        return float(np.nextafter(0.5, 0.0))
    return float(frac)


def _sigmoid(z):
    out = np.empty_like(z, dtype=np.float64)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


class _ScoredClassifier(BaseEstimator, ClassifierMixin):
    def predict(self, X):
        return (self.predict_score(X) >= 0.5).astype(np.int64)


class MultinomialNaiveBayes(_ScoredClassifier):
    """Multinomial NB over token counts with Laplace smoothing."""

    def __init__(self, alpha=1.0):
        self.alpha = alpha

    def fit(self, X, y):
        X = _as_csr(X)
        y = _check_labels(y)
        self.n_features_ = X.shape[1]
        counts = np.vstack([
            np.asarray(X[y == 0].sum(axis=0)).ravel(),
            np.asarray(X[y == 1].sum(axis=0)).ravel(),
        ])
        smoothed = counts + self.alpha
        self.feature_log_prob_ = np.log(smoothed) - np.log(
            smoothed.sum(axis=1, keepdims=True))
        class_counts = np.array([(y == 0).sum(), (y == 1).sum()],
                                dtype=np.float64)
        self.class_log_prior_ = np.log(class_counts) - np.log(class_counts.sum())
        return self

    def joint_log_likelihood(self, X):
        X = _as_csr(X)
        return X @ self.feature_log_prob_.T + self.class_log_prior_

    def predict_score(self, X):
        jll = self.joint_log_likelihood(X)
        top = jll.max(axis=1, keepdims=True)
        norm = top.ravel() + np.log(np.exp(jll - top).sum(axis=1))
        return np.exp(jll[:, 1] - norm)


class CartTree(_ScoredClassifier):
    """CART on binary presence features: Gini impurity, exhaustive scan.

    Splits send feature-absent samples left and feature-present right;
    equal-Gini ties pick the lowest feature index; tied leaves predict ham.
    An optional per-split feature bag (used by the forest) limits the scan.
    """

    def __init__(self, max_depth=20, min_samples_split=2, n_feature_bag=None,
                 seed=0):
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.n_feature_bag = n_feature_bag
        self.seed = seed

    def fit(self, X, y, _rng=None):
        X = _as_csr(X)
        y = _check_labels(y)
        dense = np.asarray(X.todense() != 0)
        self.n_features_ = X.shape[1]
        rng = _rng
        if rng is None and self.n_feature_bag is not None:
            rng = np.random.Generator(np.random.PCG64(self.seed))
        feature = [] ; left = [] ; right = [] ; n_ham = [] ; n_spam = []

        def new_node():
            feature.append(-1); left.append(-1); right.append(-1)
            n_ham.append(0); n_spam.append(0)
            return len(feature) - 1

        def build(idx, depth):
            node = new_node()
            ys = y[idx]
            spam = int(ys.sum())
            n_ham[node] = len(idx) - spam
            n_spam[node] = spam
            if (depth >= self.max_depth or len(idx) < self.min_samples_split
                    or spam == 0 or spam == len(idx)):
                return node
            split = self._best_split(dense, y, idx, rng)
            if split is None:
                return node
            feat, mask = split
            feature[node] = feat
            left_child = build(idx[~mask], depth + 1)
            right_child = build(idx[mask], depth + 1)
            left[node] = left_child
            right[node] = right_child
            return node

        build(np.arange(X.shape[0]), 0)
        self.feature_ = np.array(feature, dtype=np.int64)
        self.left_ = np.array(left, dtype=np.int64)
        self.right_ = np.array(right, dtype=np.int64)
        self.leaf_ham_ = np.array(n_ham, dtype=np.int64)
        self.leaf_spam_ = np.array(n_spam, dtype=np.int64)
        return self

    def _best_split(self, dense, y, idx, rng):
        sub = dense[idx]
        candidates = np.flatnonzero(sub.any(axis=0) & ~sub.all(axis=0))
        if candidates.size == 0:
            return None
        if self.n_feature_bag is not None and rng is not None:
            bag = np.sort(rng.choice(self.n_features_,
                                     size=min(self.n_feature_bag,
                                              self.n_features_),
                                     replace=False))
            candidates = np.intersect1d(candidates, bag)
            if candidates.size == 0:
                return None
        cols = sub[:, candidates]
        spam_rows = y[idx] == 1
        n = len(idx)
        n1 = cols.sum(axis=0, dtype=np.float64)
        s1 = cols[spam_rows].sum(axis=0, dtype=np.float64)
        n0 = n - n1
        s0 = float(spam_rows.sum()) - s1
        with np.errstate(invalid="ignore", divide="ignore"):
            g1 = 1.0 - (s1 / n1) ** 2 - ((n1 - s1) / n1) ** 2
            g0 = 1.0 - (s0 / n0) ** 2 - ((n0 - s0) / n0) ** 2
        weighted = (n1 * g1 + n0 * g0) / n
        best = int(np.argmin(weighted))  # first index wins ties
        feat = int(candidates[best])
        return feat, dense[idx, feat]

    def _leaf_for(self, row_present):
        node = 0
        while self.feature_[node] >= 0:
            node = (self.right_[node] if row_present[self.feature_[node]]
                    else self.left_[node])
        return node

    def predict_score(self, X):
        X = _as_csr(X)
        dense = np.asarray(X.todense() != 0)
        scores = np.empty(dense.shape[0], dtype=np.float64)
        for i, row in enumerate(dense):
            node = self._leaf_for(row)
            scores[i] = _ham_tie(self.leaf_spam_[node],
                                 self.leaf_spam_[node] + self.leaf_ham_[node])
        return scores


class LogisticRegressionGD(_ScoredClassifier):
    """Full-batch gradient descent on L2-regularized logistic loss.

    Inputs are token counts; each row is scaled by 1/max(1, its L1 mass)
    so document length does not dominate. The bias is unregularized.
    """

    def __init__(self, l2=1e-4, learning_rate=0.1, epochs=500,
                 length_normalize=True):
        self.l2 = l2
        self.learning_rate = learning_rate
        self.epochs = epochs
        self.length_normalize = length_normalize

    def _scale(self, X):
        X = _as_csr(X).astype(np.float64)
        if not self.length_normalize:
            return X
        lengths = np.maximum(1.0, np.asarray(X.sum(axis=1)).ravel())
        return sp.diags(1.0 / lengths) @ X

    def loss_and_grad(self, X, y, w, b):
        """Mean logistic loss + (l2/2)||w||^2 and its exact gradient."""
        n = X.shape[0]
        z = X @ w + b
        # log(1 + exp(-|z|)) + max(z, 0) - y*z is the stable form of BCE
        loss = float(np.mean(np.log1p(np.exp(-np.abs(z)))
                             + np.maximum(z, 0.0) - y * z))
        loss += 0.5 * self.l2 * float(w @ w)
        residual = _sigmoid(z) - y
        grad_w = (X.T @ residual) / n + self.l2 * w
        grad_b = float(residual.mean())
        return loss, grad_w, grad_b

    def fit(self, X, y):
        y = _check_labels(y).astype(np.float64)
        X = self._scale(X)
        w = np.zeros(X.shape[1], dtype=np.float64)
        b = 0.0
        history = []
        for _ in range(self.epochs):
            loss, grad_w, grad_b = self.loss_and_grad(X, y, w, b)
            history.append(loss)
            w -= self.learning_rate * grad_w
            b -= self.learning_rate * grad_b
        self.weights_ = w
        self.bias_ = b
        self.loss_history_ = history
        self.n_features_ = X.shape[1]
        return self

    def decision_function(self, X):
        return self._scale(X) @ self.weights_ + self.bias_

    def predict_score(self, X):
        return _sigmoid(self.decision_function(X))


class PegasosSvm(_ScoredClassifier):
    """Linear SVM via Pegasos stochastic subgradient on the hinge loss."""

    def __init__(self, l2=1e-4, epochs=20, seed=0):
        self.l2 = l2
        self.epochs = epochs
        self.seed = seed

    def fit(self, X, y):
        X = _as_csr(X).astype(np.float64)
        y = _check_labels(y)
        sign = np.where(y == 1, 1.0, -1.0)
        rng = np.random.Generator(np.random.PCG64(self.seed))
        w = np.zeros(X.shape[1], dtype=np.float64)
        b = 0.0
        t = 0
        for _ in range(self.epochs):
            order = rng.permutation(X.shape[0])
            for i in order:
                t += 1
                eta = 1.0 / (self.l2 * t)
                row = X.getrow(i)
                margin = sign[i] * (row @ w + b)[0]
                w *= 1.0 - 1.0 / t
                if margin < 1.0:
                    w[row.indices] += eta * sign[i] * row.data
                    b += eta * sign[i]
        self.weights_ = w
        self.bias_ = b
        self.n_features_ = X.shape[1]
        return self

    def decision_function(self, X):
        return _as_csr(X) @ self.weights_ + self.bias_

    def predict_score(self, X):
        return _sigmoid(self.decision_function(X))


class AdaBoostStumps(_ScoredClassifier):
    """AdaBoost over presence stumps: h(x) = +/-1 by one feature's presence."""

    def __init__(self, n_rounds=100):
        self.n_rounds = n_rounds

    def fit(self, X, y):
        X = _as_csr(X)
        y = _check_labels(y)
        dense = np.asarray(X.todense() != 0).astype(np.float64)
        sign = np.where(y == 1, 1.0, -1.0)
        n = len(sign)
        w = np.full(n, 1.0 / n)
        self.stumps_ = []  # (feature, predict_if_present in {+1,-1}, alpha)
        self.round_errors_ = []
        ham_rows = sign < 0
        for _ in range(self.n_rounds):
            pos_mass = (w * ham_rows) @ dense  # mass of present-and-ham
            present_mass = w @ dense
            spam_mass = float(w[~ham_rows].sum())
            # err(j, s=+1): present ham + absent spam
            err_plus = pos_mass + spam_mass - (present_mass - pos_mass)
            err_minus = 1.0 - err_plus
            j_plus = int(np.argmin(err_plus))
            j_minus = int(np.argmin(err_minus))
            if err_plus[j_plus] <= err_minus[j_minus]:
                feat, s, err = j_plus, 1.0, float(err_plus[j_plus])
            else:
                feat, s, err = j_minus, -1.0, float(err_minus[j_minus])
            if err >= 0.5:
                break
            clamped = min(max(err, 1e-10), 1.0 - 1e-10)
            alpha = 0.5 * np.log((1.0 - clamped) / clamped)
            self.stumps_.append((feat, s, float(alpha)))
            self.round_errors_.append(err)
            if err == 0.0:
                break
            h = np.where(dense[:, feat] > 0, s, -s)
            w = w * np.exp(-alpha * sign * h)
            w /= w.sum()
        self.n_features_ = X.shape[1]
        return self

    def decision_function(self, X):
        dense = np.asarray(_as_csr(X).todense() != 0)
        margin = np.zeros(dense.shape[0], dtype=np.float64)
        for feat, s, alpha in self.stumps_:
            margin += alpha * np.where(dense[:, feat], s, -s)
        return margin

    def predict_score(self, X):
        return _sigmoid(self.decision_function(X))


class CosineKnn(_ScoredClassifier):
    """k nearest neighbors by cosine similarity over tf-idf rows."""

    def __init__(self, k=5):
        self.k = k

    def fit(self, X, y):
        self.X_ = _as_csr(X).astype(np.float64)
        self.y_ = _check_labels(y, allow_single_class=True)
        norms = np.sqrt(np.asarray(self.X_.multiply(self.X_).sum(axis=1)).ravel())
        norms[norms == 0] = 1.0
        self.X_ = sp.diags(1.0 / norms) @ self.X_
        self.n_features_ = self.X_.shape[1]
        return self

    def predict_score(self, X):
        X = _as_csr(X).astype(np.float64)
        norms = np.sqrt(np.asarray(X.multiply(X).sum(axis=1)).ravel())
        norms[norms == 0] = 1.0
        sims = np.asarray((sp.diags(1.0 / norms) @ X @ self.X_.T).todense())
        k = min(self.k, sims.shape[1])
        scores = np.empty(sims.shape[0], dtype=np.float64)
        for i, row in enumerate(sims):
            top = np.lexsort((np.arange(len(row)), -row))[:k]
            spam = int(self.y_[top].sum())
            scores[i] = _ham_tie(spam, k)
        return scores


class RandomForestPresence(_ScoredClassifier):
    """Bagged CART trees with sqrt-|V| feature bags; majority vote."""

    def __init__(self, n_trees=100, max_depth=20, seed=0):
        self.n_trees = n_trees
        self.max_depth = max_depth
        self.seed = seed

    def fit(self, X, y):
        X = _as_csr(X)
        y = _check_labels(y)
        n, n_features = X.shape
        bag_size = max(1, round(np.sqrt(n_features)))
        seeds = np.random.SeedSequence(self.seed).spawn(self.n_trees)
        self.trees_ = []
        for tree_seed in seeds:
            rng = np.random.Generator(np.random.PCG64(tree_seed))
            sample = np.sort(rng.integers(0, n, size=n))
            tree = CartTree(max_depth=self.max_depth,
                            n_feature_bag=bag_size)
            tree.fit(X[sample], y[sample], _rng=rng)
            self.trees_.append(tree)
        self.n_features_ = n_features
        return self

    def predict_score(self, X):
        X = _as_csr(X)
        votes = np.zeros(X.shape[0], dtype=np.int64)
        for tree in self.trees_:
            votes += (tree.predict_score(X) >= 0.5).astype(np.int64)
        return np.array([_ham_tie(v, self.n_trees) for v in votes])


_ESTIMATORS = {
    NB: MultinomialNaiveBayes,
    DT: CartTree,
    LR: LogisticRegressionGD,
    SVM: PegasosSvm,
    ADABOOST: AdaBoostStumps,
    KNN: CosineKnn,
    RF: RandomForestPresence,
}


class TextModel:
    """A trained classifier bundled with its vocabulary and feature mode.

    ``source_mode`` records which text the model consumes: "ocr" for the
    perceived-text pipeline, "raw" for naive source text.
    """

    def __init__(self, kind, estimator, vocab: Vocab | None, feature_mode,
                 source_mode: str = "ocr"):
        self.kind = kind
        self.estimator = estimator
        self.vocab = vocab
        self.feature_mode = feature_mode
        self.source_mode = source_mode

    @property
    def n_features(self):
        return self.estimator.n_features_


class Prediction:
    """Binary verdict plus a spam score in [0, 1]; spam iff score >= 0.5."""

    __slots__ = ("label", "score")

    def __init__(self, score: float):
        self.score = float(score)
        self.label = "spam" if self.score >= 0.5 else "ham"

    def __repr__(self):
        return f"Prediction({self.label}, {self.score:.4f})"


def make_estimator(kind: str, **params):
    if kind not in _ESTIMATORS:
        raise ValueError(f"unknown model kind {kind!r}")
    return _ESTIMATORS[kind](**params)


def train(kind: str, X, y, vocab: Vocab | None = None,
          source_mode: str = "ocr", **params) -> TextModel:
    """Train one classifier kind on featurized documents.

    ``X`` may be a list of :class:`FeatureVector` or any matrix. The
    feature mode is fixed per kind (NB counts, trees presence, ...).
    """
    if isinstance(X, (list, tuple)) and X and isinstance(X[0], FeatureVector):
        n_features = len(vocab) if vocab is not None else (
            max((int(v.indices.max()) for v in X if v.nnz), default=0) + 1)
        X = to_csr(X, n_features)
    estimator = make_estimator(kind, **params)
    estimator.fit(X, np.asarray(y))
    return TextModel(kind, estimator, vocab, FEATURE_MODE[kind], source_mode)


def predict(model: TextModel, x: FeatureVector) -> Prediction:
    """Score a single featurized document with a trained model."""
    if x.nnz and int(x.indices.max()) >= model.n_features:
        raise VocabMismatch(
            f"feature index {int(x.indices.max())} >= {model.n_features}")
    row = to_csr([x], model.n_features)
    return Prediction(model.estimator.predict_score(row)[0])


def fit_text_model(kind: str, token_lists, y, min_df: int = 2,
                   vocab: Vocab | None = None, source_mode: str = "ocr",
                   **params) -> TextModel:
    """Convenience: build vocab (unless given), featurize and train."""
    from .features import build_vocab
    if vocab is None:
        vocab = build_vocab(token_lists, min_df=min_df)
    mode = FEATURE_MODE[kind]
    vectors = [featurize(tokens, vocab, mode) for tokens in token_lists]
    return train(kind, vectors, y, vocab=vocab, source_mode=source_mode,
                 **params)


def predict_tokens(model: TextModel, tokens) -> Prediction:
    return predict(model, featurize(tokens, model.vocab, model.feature_mode))
