"""Text serialization for trained models.

Format: header line ``VBSF-MODEL v1 <kind>`` followed by named sections
with whitespace-separated decimal values. Floats are written with repr,
which round-trips exactly, so a saved model scores bit-identically after
loading. Stack files embed the three base models and the meta model as
nested ``begin``/``end`` blocks.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from .cnn import Conv3x3, ConvNetClassifier, Dense, Flatten, MaxPool2, ReLU
from .features import Vocab
from .stacking import StackedSpamClassifier, StackFeatures
from .textmodels import (ADABOOST, DT, KNN, LR, NB, RF, SVM, FEATURE_MODE,
                         AdaBoostStumps, CartTree, CosineKnn,
                         LogisticRegressionGD, MultinomialNaiveBayes,
                         PegasosSvm, RandomForestPresence, TextModel)

MAGIC = "VBSF-MODEL v1"


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


class _Writer:
    def __init__(self):
        self.lines: list[str] = []

    def param(self, name, value):
        self.lines.append(f"param {name} {_fmt(value)}")

    def vector(self, name, values):
        arr = np.asarray(values).ravel()
        self.lines.append(f"vector {name} {arr.size}")
        self.lines.append(" ".join(_fmt(v) for v in arr.tolist()))

    def matrix(self, name, values):
        arr = np.asarray(values)
        self.lines.append(f"matrix {name} {arr.shape[0]} {arr.shape[1]}")
        for row in arr.tolist():
            self.lines.append(" ".join(_fmt(v) for v in row))

    def vocab(self, vocab: Vocab | None):
        if vocab is None:
            self.lines.append("vocab 0 0")
            return
        self.lines.append(f"vocab {len(vocab)} {vocab.n_docs}")
        freqs = vocab.doc_freq
        for token, idx in sorted(vocab.index.items(), key=lambda kv: kv[1]):
            self.lines.append(f"{token} {int(freqs[idx])}")

    def tree(self, tree: CartTree):
        n = len(tree.feature_)
        self.lines.append(f"tree {n}")
        for i in range(n):
            self.lines.append(
                f"{tree.feature_[i]} {tree.left_[i]} {tree.right_[i]} "
                f"{tree.leaf_ham_[i]} {tree.leaf_spam_[i]}")

    def sparse(self, name, matrix: sp.csr_matrix):
        matrix = matrix.tocsr()
        self.lines.append(f"sparse {name} {matrix.shape[0]} "
                          f"{matrix.shape[1]} {matrix.nnz}")
        self.lines.append(" ".join(str(int(v)) for v in matrix.indptr))
        self.lines.append(" ".join(str(int(v)) for v in matrix.indices))
        self.lines.append(" ".join(_fmt(float(v)) for v in matrix.data))

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


class _Reader:
    def __init__(self, lines):
        self.lines = lines
        self.pos = 0

    def peek(self):
        return self.lines[self.pos] if self.pos < len(self.lines) else None

    def take(self):
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def expect(self, keyword):
        parts = self.take().split()
        if parts[0] != keyword:
            raise ValueError(f"expected {keyword!r}, got {parts[0]!r}")
        return parts[1:]

    def param(self, name, cast=float):
        args = self.expect("param")
        if args[0] != name:
            raise ValueError(f"expected param {name}, got {args[0]}")
        if cast is bool:
            return args[1] == "1"
        return cast(args[1])

    def vector(self, name):
        args = self.expect("vector")
        assert args[0] == name
        n = int(args[1])
        values = [float(v) for v in self.take().split()] if n else []
        if n and not values:
            values = []
        return np.array(values, dtype=np.float64)

    def matrix(self, name):
        args = self.expect("matrix")
        assert args[0] == name
        rows, cols = int(args[1]), int(args[2])
        data = [[float(v) for v in self.take().split()] for _ in range(rows)]
        return np.array(data, dtype=np.float64).reshape(rows, cols)

    def vocab(self):
        args = self.expect("vocab")
        size, n_docs = int(args[0]), int(args[1])
        if size == 0:
            return None
        index = {}
        freqs = np.zeros(size, dtype=np.int64)
        for i in range(size):
            token, df = self.take().rsplit(" ", 1)
            index[token] = i
            freqs[i] = int(df)
        return Vocab(index=index, doc_freq=freqs, n_docs=n_docs)

    def tree(self):
        n = int(self.expect("tree")[0])
        rows = np.array([[int(v) for v in self.take().split()]
                         for _ in range(n)], dtype=np.int64).reshape(n, 5)
        tree = CartTree()
        tree.feature_ = rows[:, 0].copy()
        tree.left_ = rows[:, 1].copy()
        tree.right_ = rows[:, 2].copy()
        tree.leaf_ham_ = rows[:, 3].copy()
        tree.leaf_spam_ = rows[:, 4].copy()
        return tree

    def sparse(self, name):
        args = self.expect("sparse")
        assert args[0] == name
        rows, cols, nnz = int(args[1]), int(args[2]), int(args[3])
        indptr = np.array([int(v) for v in self.take().split()],
                          dtype=np.int64)
        indices = np.array([int(v) for v in self.take().split()]
                           if nnz else [], dtype=np.int32)
        data = np.array([float(v) for v in self.take().split()]
                        if nnz else [], dtype=np.float64)
        return sp.csr_matrix((data, indices, indptr), shape=(rows, cols))


# -- per-kind bodies ----------------------------------------------------


def _write_text_body(w: _Writer, model: TextModel):
    est = model.estimator
    kind = model.kind
    w.param("source", model.source_mode)
    w.vocab(model.vocab)
    w.param("n_features", est.n_features_)
    if kind == NB:
        w.param("alpha", est.alpha)
        w.vector("class_log_prior", est.class_log_prior_)
        w.matrix("feature_log_prob", est.feature_log_prob_)
    elif kind == DT:
        w.param("max_depth", est.max_depth)
        w.param("min_samples_split", est.min_samples_split)
        w.tree(est)
    elif kind == LR:
        w.param("l2", est.l2)
        w.param("learning_rate", est.learning_rate)
        w.param("epochs", est.epochs)
        w.param("length_normalize", est.length_normalize)
        w.param("bias", est.bias_)
        w.vector("weights", est.weights_)
    elif kind == SVM:
        w.param("l2", est.l2)
        w.param("epochs", est.epochs)
        w.param("seed", est.seed)
        w.param("bias", est.bias_)
        w.vector("weights", est.weights_)
    elif kind == ADABOOST:
        w.param("n_rounds", est.n_rounds)
        w.lines.append(f"stumps {len(est.stumps_)}")
        for feat, sign, alpha in est.stumps_:
            w.lines.append(f"{feat} {int(sign)} {_fmt(alpha)}")
    elif kind == KNN:
        w.param("k", est.k)
        w.sparse("train", est.X_)
        w.vector("labels", est.y_.astype(np.float64))
    elif kind == RF:
        w.param("n_trees", est.n_trees)
        w.param("max_depth", est.max_depth)
        w.param("seed", est.seed)
        for tree in est.trees_:
            w.tree(tree)
    else:
        raise ValueError(f"unknown text model kind {kind!r}")


def _read_text_body(r: _Reader, kind: str) -> TextModel:
    source_mode = r.param("source", str)
    vocab = r.vocab()
    n_features = r.param("n_features", int)
    if kind == NB:
        est = MultinomialNaiveBayes(alpha=r.param("alpha"))
        est.class_log_prior_ = r.vector("class_log_prior")
        est.feature_log_prob_ = r.matrix("feature_log_prob")
    elif kind == DT:
        max_depth = r.param("max_depth", int)
        min_split = r.param("min_samples_split", int)
        est = r.tree()
        est.max_depth = max_depth
        est.min_samples_split = min_split
    elif kind == LR:
        est = LogisticRegressionGD(
            l2=r.param("l2"), learning_rate=r.param("learning_rate"),
            epochs=r.param("epochs", int),
            length_normalize=r.param("length_normalize", bool))
        est.bias_ = r.param("bias")
        est.weights_ = r.vector("weights")
    elif kind == SVM:
        est = PegasosSvm(l2=r.param("l2"), epochs=r.param("epochs", int),
                         seed=r.param("seed", int))
        est.bias_ = r.param("bias")
        est.weights_ = r.vector("weights")
    elif kind == ADABOOST:
        est = AdaBoostStumps(n_rounds=r.param("n_rounds", int))
        n = int(r.expect("stumps")[0])
        est.stumps_ = []
        for _ in range(n):
            feat, sign, alpha = r.take().split()
            est.stumps_.append((int(feat), float(int(sign)), float(alpha)))
    elif kind == KNN:
        est = CosineKnn(k=r.param("k", int))
        est.X_ = r.sparse("train")
        est.y_ = r.vector("labels").astype(np.int64)
    elif kind == RF:
        est = RandomForestPresence(
            n_trees=r.param("n_trees", int),
            max_depth=r.param("max_depth", int), seed=r.param("seed", int))
        est.trees_ = [r.tree() for _ in range(est.n_trees)]
        for tree in est.trees_:
            tree.n_features_ = n_features
    else:
        raise ValueError(f"unknown text model kind {kind!r}")
    est.n_features_ = n_features
    return TextModel(kind, est, vocab, FEATURE_MODE[kind], source_mode)


_LAYER_TAGS = {Conv3x3: "conv", ReLU: "relu", MaxPool2: "pool",
               Flatten: "flatten", Dense: "dense"}


def _write_cnn_body(w: _Writer, model: ConvNetClassifier):
    w.param("learning_rate", model.learning_rate)
    w.param("epochs", model.epochs)
    w.param("batch_size", model.batch_size)
    w.param("seed", model.seed)
    w.param("augment", model.augment_data)
    specs = []
    for layer in model.layers_:
        tag = _LAYER_TAGS[type(layer)]
        if isinstance(layer, Conv3x3):
            specs.append(f"conv:{layer.in_channels}:{layer.out_channels}")
        elif isinstance(layer, Dense):
            specs.append(f"dense:{layer.in_features}:{layer.out_features}")
        else:
            specs.append(tag)
    w.lines.append("arch " + " ".join(specs))
    for i, layer in enumerate(model.layers_):
        for name, arr, _shape in layer.params:
            if arr.ndim == 1:
                w.vector(f"layer{i}_{name}", arr)
            else:
                w.matrix(f"layer{i}_{name}", arr)


def _read_cnn_body(r: _Reader) -> ConvNetClassifier:
    model = ConvNetClassifier(
        learning_rate=r.param("learning_rate"),
        epochs=r.param("epochs", int), batch_size=r.param("batch_size", int),
        seed=r.param("seed", int), augment_data=r.param("augment", bool))
    specs = r.expect("arch")
    layers = []
    for spec in specs:
        parts = spec.split(":")
        if parts[0] == "conv":
            layers.append(Conv3x3(int(parts[1]), int(parts[2])))
        elif parts[0] == "dense":
            layers.append(Dense(int(parts[1]), int(parts[2])))
        elif parts[0] == "relu":
            layers.append(ReLU())
        elif parts[0] == "pool":
            layers.append(MaxPool2())
        elif parts[0] == "flatten":
            layers.append(Flatten())
        else:
            raise ValueError(f"unknown layer tag {parts[0]!r}")
    model.layers_ = layers
    for i, layer in enumerate(layers):
        if isinstance(layer, Conv3x3):
            layer.weights = r.matrix(f"layer{i}_weights")
            layer.bias = r.vector(f"layer{i}_bias")
        elif isinstance(layer, Dense):
            layer.weights = r.matrix(f"layer{i}_weights")
            layer.bias = r.vector(f"layer{i}_bias")
    return model


# -- public API ----------------------------------------------------------


def save_model(model) -> str:
    """Serialize a TextModel, ConvNetClassifier or StackedSpamClassifier."""
    w = _Writer()
    if isinstance(model, TextModel):
        w.lines.append(f"{MAGIC} {model.kind}")
        _write_text_body(w, model)
    elif isinstance(model, ConvNetClassifier):
        w.lines.append(f"{MAGIC} cnn")
        _write_cnn_body(w, model)
    elif isinstance(model, StackedSpamClassifier):
        w.lines.append(f"{MAGIC} stack")
        w.param("meta_kind", model.meta)
        w.param("n_folds", model.n_folds)
        w.param("seed", model.seed)
        for name, base in (("nb", model.nb_), ("dt", model.dt_)):
            w.lines.append(f"begin base {name}")
            _write_text_body(w, base)
            w.lines.append("end")
        w.lines.append("begin base cnn")
        _write_cnn_body(w, model.cnn_)
        w.lines.append("end")
        w.lines.append(f"begin meta {model.meta}")
        _write_text_body(w, model.meta_model_)
        w.lines.append("end")
    else:
        raise TypeError(f"cannot serialize {type(model).__name__}")
    return w.text()


def load_model(text: str):
    lines = [ln for ln in text.splitlines() if ln]
    r = _Reader(lines)
    header = r.take().split()
    if " ".join(header[:2]) != MAGIC or len(header) != 3:
        raise ValueError("not a VBSF-MODEL v1 file")
    kind = header[2]
    if kind in FEATURE_MODE:
        return _read_text_body(r, kind)
    if kind == "cnn":
        return _read_cnn_body(r)
    if kind == "stack":
        model = StackedSpamClassifier(
            meta=r.param("meta_kind", str), n_folds=r.param("n_folds", int),
            seed=r.param("seed", int))
        assert r.expect("begin") == ["base", "nb"]
        model.nb_ = _read_text_body(r, NB)
        assert r.take() == "end"
        assert r.expect("begin") == ["base", "dt"]
        model.dt_ = _read_text_body(r, DT)
        assert r.take() == "end"
        assert r.expect("begin") == ["base", "cnn"]
        model.cnn_ = _read_cnn_body(r)
        assert r.take() == "end"
        meta_kind = r.expect("begin")[1]
        model.meta_model_ = _read_text_body(r, meta_kind)
        assert r.take() == "end"
        return model
    raise ValueError(f"unknown model kind {kind!r}")


def save_model_file(model, path: str):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(save_model(model))


def load_model_file(path: str):
    with open(path, encoding="utf-8") as fh:
        return load_model(fh.read())
