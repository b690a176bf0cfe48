"""Evaluation metrics and train/test splitting.

Spam is the positive class: a false positive is legitimate mail filed as
spam. Whole-set FP/FN rates (count over all test samples) are reported
alongside the class-conditional rates, and accuracy + fp_total + fn_total
is exactly 1 by construction over the integer confusion counts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatch, TooFewSamples


@dataclass
class Split:
    train_ids: np.ndarray
    test_ids: np.ndarray
    ratio: float
    stratified: bool
    seed: int


def split(labels, ratio: float = 0.8, stratified: bool = True,
          seed: int = 0) -> Split:
    """Seeded train/test partition over sample indices.

    With stratification, each class is shuffled and cut separately so both
    parts keep class proportions within one sample of the corpus. A ratio
    that leaves an empty part is an error.
    """
    y = np.asarray(labels, dtype=np.int64)
    n = len(y)
    if not 0.0 < ratio < 1.0:
        raise TooFewSamples("split ratio must leave both parts non-empty")
    rng = np.random.Generator(np.random.PCG64(seed))
    train_parts = []
    test_parts = []
    if stratified:
        for label in (0, 1):
            members = np.flatnonzero(y == label)
            if len(members) < 2:
                raise TooFewSamples(
                    f"class {label} needs at least 2 members to stratify")
            rng.shuffle(members)
            take = int(round(ratio * len(members)))
            take = min(max(take, 1), len(members) - 1)
            train_parts.append(members[:take])
            test_parts.append(members[take:])
    else:
        order = rng.permutation(n)
        take = min(max(int(round(ratio * n)), 1), n - 1)
        train_parts.append(order[:take])
        test_parts.append(order[take:])
    return Split(
        train_ids=np.sort(np.concatenate(train_parts)),
        test_ids=np.sort(np.concatenate(test_parts)),
        ratio=ratio, stratified=stratified, seed=seed,
    )


@dataclass
class Metrics:
    tp: int
    fp: int
    tn: int
    fn: int
    fpr_degenerate: bool = False
    fnr_degenerate: bool = False

    @property
    def n(self) -> int:
        return self.tp + self.fp + self.tn + self.fn

    @property
    def accuracy(self) -> float:
        return (self.tp + self.tn) / self.n

    @property
    def fp_total(self) -> float:
        return self.fp / self.n

    @property
    def fn_total(self) -> float:
        return self.fn / self.n

    @property
    def fpr_cond(self) -> float:
        return 0.0 if self.fpr_degenerate else self.fp / (self.fp + self.tn)

    @property
    def fnr_cond(self) -> float:
        return 0.0 if self.fnr_degenerate else self.fn / (self.fn + self.tp)


def compute_metrics(predictions, labels) -> Metrics:
    """Confusion counts and rates; spam (1) is the positive class."""
    pred = np.asarray(predictions, dtype=np.int64)
    y = np.asarray(labels, dtype=np.int64)
    if len(pred) != len(y):
        raise LengthMismatch(f"{len(pred)} predictions vs {len(y)} labels")
    if len(y) == 0:
        raise LengthMismatch("need at least one sample")
    tp = int(np.sum((pred == 1) & (y == 1)))
    fp = int(np.sum((pred == 1) & (y == 0)))
    tn = int(np.sum((pred == 0) & (y == 0)))
    fn = int(np.sum((pred == 0) & (y == 1)))
    return Metrics(tp=tp, fp=fp, tn=tn, fn=fn,
                   fpr_degenerate=(fp + tn) == 0,
                   fnr_degenerate=(fn + tp) == 0)
