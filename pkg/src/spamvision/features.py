"""Tokenization, vocabulary building and bag-of-words featurization.

Two tokenizer modes exist because the two detection paths see different
text: ``PERCEIVED`` consumes OCR output (pure ASCII), while ``RAW_SOURCE``
consumes naive source text where homoglyph codepoints must survive inside
tokens (that difference is exactly what the substitution trick exploits).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .errors import EmptyVocab
from .font import HOMOGLYPH_TO_LATIN

PERCEIVED = "perceived"
RAW_SOURCE = "raw_source"

COUNTS = "counts"
PRESENCE = "presence"
TFIDF = "tfidf"

MIN_TOKEN_LEN = 2
MAX_TOKEN_LEN = 24

_HOMOGLYPH_CHARS = "".join(chr(cp) for cp in sorted(HOMOGLYPH_TO_LATIN))
_PERCEIVED_SPLIT = re.compile(r"[^a-z0-9]+")
_RAW_SPLIT = re.compile(rf"[^a-z0-9{_HOMOGLYPH_CHARS}]+")


def tokenize(text: str, mode: str = PERCEIVED) -> list[str]:
    """Lowercase and split into tokens of 2..24 word characters."""
    splitter = _PERCEIVED_SPLIT if mode == PERCEIVED else _RAW_SPLIT
    return [
        tok for tok in splitter.split(text.lower())
        if MIN_TOKEN_LEN <= len(tok) <= MAX_TOKEN_LEN
    ]


@dataclass
class Vocab:
    index: dict[str, int]  # token -> dense index, lexicographic order
    doc_freq: np.ndarray  # document frequency per index
    n_docs: int

    def __len__(self):
        return len(self.index)

    @property
    def tokens(self) -> list[str]:
        return sorted(self.index, key=self.index.get)


def build_vocab(corpus, min_df: int = 2) -> Vocab:
    """Vocabulary of tokens with document frequency >= ``min_df``.

    Indices are assigned in lexicographic token order. Raises
    :class:`EmptyVocab` if nothing survives the cutoff.
    """
    df: dict[str, int] = {}
    n_docs = 0
    for tokens in corpus:
        n_docs += 1
        for tok in set(tokens):
            df[tok] = df.get(tok, 0) + 1
    kept = sorted(tok for tok, freq in df.items() if freq >= min_df)
    if not kept:
        raise EmptyVocab(f"no token reaches min_df={min_df}")
    index = {tok: i for i, tok in enumerate(kept)}
    freqs = np.array([df[tok] for tok in kept], dtype=np.int64)
    return Vocab(index=index, doc_freq=freqs, n_docs=n_docs)


@dataclass
class FeatureVector:
    indices: np.ndarray  # strictly increasing int32
    values: np.ndarray  # positive float64
    mode: str

    @property
    def nnz(self):
        return len(self.indices)


def featurize(tokens, vocab: Vocab, mode: str = COUNTS) -> FeatureVector:
    """Sparse features for one document; out-of-vocabulary tokens ignored."""
    counts: dict[int, int] = {}
    for tok in tokens:
        idx = vocab.index.get(tok)
        if idx is not None:
            counts[idx] = counts.get(idx, 0) + 1
    indices = np.array(sorted(counts), dtype=np.int32)
    if mode == COUNTS:
        values = np.array([counts[i] for i in indices], dtype=np.float64)
    elif mode == PRESENCE:
        values = np.ones(len(indices), dtype=np.float64)
    elif mode == TFIDF:
        values = np.array(
            [counts[i] * math.log((1 + vocab.n_docs) / (1 + vocab.doc_freq[i]))
             for i in indices],
            dtype=np.float64,
        )
        norm = math.sqrt(float(np.dot(values, values)))
        if norm > 0:
            values = values / norm
    else:
        raise ValueError(f"unknown feature mode {mode!r}")
    keep = values > 0
    return FeatureVector(indices=indices[keep], values=values[keep], mode=mode)


def to_csr(vectors, n_features: int) -> sp.csr_matrix:
    """Stack feature vectors into one CSR matrix."""
    vectors = list(vectors)
    indptr = np.zeros(len(vectors) + 1, dtype=np.int64)
    for i, vec in enumerate(vectors):
        indptr[i + 1] = indptr[i] + vec.nnz
    if vectors:
        indices = np.concatenate([v.indices for v in vectors])
        data = np.concatenate([v.values for v in vectors])
    else:
        indices = np.zeros(0, dtype=np.int32)
        data = np.zeros(0, dtype=np.float64)
    return sp.csr_matrix((data, indices, indptr),
                         shape=(len(vectors), n_features))


class BagOfWordsVectorizer:
    """fit/transform wrapper so the featurizer drops into pipelines."""

    def __init__(self, mode: str = COUNTS, min_df: int = 2,
                 tokenizer_mode: str = PERCEIVED):
        self.mode = mode
        self.min_df = min_df
        self.tokenizer_mode = tokenizer_mode
        self.vocab_: Vocab | None = None

    def fit(self, texts, y=None):
        tokenized = [tokenize(t, self.tokenizer_mode) for t in texts]
        self.vocab_ = build_vocab(tokenized, self.min_df)
        return self

    def transform(self, texts) -> sp.csr_matrix:
        if self.vocab_ is None:
            raise RuntimeError("vectorizer is not fitted")
        vecs = [featurize(tokenize(t, self.tokenizer_mode), self.vocab_,
                          self.mode) for t in texts]
        return to_csr(vecs, len(self.vocab_))

    def fit_transform(self, texts, y=None):
        return self.fit(texts).transform(texts)
