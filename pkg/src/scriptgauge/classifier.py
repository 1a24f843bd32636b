"""Class-weighted linear max-margin classifier and its evaluation harness.

Training minimizes

    0.5 * ||w||^2 + c * sum_i weight(y_i) * hinge(y_i, w.x_i + b)

by seeded stochastic subgradient descent (step 1/(lambda*t) with
lambda = 1/(c*n), bias unregularized), which is deterministic and
bit-reproducible for fixed inputs and seed. Evaluation is macro-averaged
F1, the right summary under heavy class imbalance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateInput,
    DimensionMismatch,
    LengthMismatch,
    SingleClass,
    TooFewDocuments,
)

DEFAULT_C_GRID = (0.01, 0.1, 1.0, 10.0, 100.0)
DEFAULT_EPOCHS = 100


@dataclass
class SplitAssignment:
    train: list[str]
    val: list[str]
    test: list[str]
    seed: int


@dataclass
class SvmModel:
    weights: np.ndarray
    bias: float
    c: float
    class_weights: tuple[float, float]  # (w_pos, w_neg)
    seed: int

    @property
    def dim(self) -> int:
        return self.weights.shape[0]


@dataclass
class EvalReport:
    tp: int
    fp: int
    fn: int
    tn: int
    f1_pos: float
    f1_neg: float
    macro_f1: float

    def to_dict(self) -> dict:
        return {
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "tn": self.tn,
            "f1_pos": self.f1_pos,
            "f1_neg": self.f1_neg,
            "macro_f1": self.macro_f1,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EvalReport":
        return cls(**{k: data[k] for k in ("tp", "fp", "fn", "tn", "f1_pos", "f1_neg", "macro_f1")})


def split_dataset(ids, seed: int, labels=None, stratified: bool = False) -> SplitAssignment:
    """Seeded 80/10/10 shuffle split; leftover documents go to train.

    The stratified variant applies the same ratios within each class, which
    steadies tiny validation sets on skewed corpora.
    """
    ids = list(ids)
    n = len(ids)
    if n < 10:
        raise TooFewDocuments(f"need at least 10 documents to split, got {n}")
    rng = np.random.default_rng(seed)

    def cut(pool: list[str]) -> tuple[list[str], list[str], list[str]]:
        m = len(pool)
        n_train, n_val, n_test = (4 * m) // 5, m // 10, m // 10
        train = pool[:n_train]
        val = pool[n_train : n_train + n_val]
        test = pool[n_train + n_val : n_train + n_val + n_test]
        train += pool[n_train + n_val + n_test :]
        return train, val, test

    if not stratified:
        shuffled = [ids[i] for i in rng.permutation(n)]
        train, val, test = cut(shuffled)
    else:
        if labels is None:
            raise ValueError("stratified split needs labels")
        labels = list(labels)
        train, val, test = [], [], []
        for cls in (0, 1):
            pool = [i for i, y in zip(ids, labels) if y == cls]
            pool = [pool[j] for j in rng.permutation(len(pool))]
            tr, va, te = cut(pool) if pool else ([], [], [])
            train += tr
            val += va
            test += te
    return SplitAssignment(train=train, val=val, test=test, seed=seed)


def class_weights(labels) -> tuple[float, float]:
    """Inverse-frequency weights (w_pos, w_neg) with w_c = n / (2 * n_c)."""
    labels = list(labels)
    n_pos = sum(1 for y in labels if y == 1)
    n_neg = len(labels) - n_pos
    if n_pos == 0 or n_neg == 0:
        raise SingleClass(f"both classes required, got {n_pos} positive / {n_neg} negative")
    n = len(labels)
    return n / (2 * n_pos), n / (2 * n_neg)


def train_svm(x, y, c: float, weights: tuple[float, float], seed: int, epochs: int = DEFAULT_EPOCHS) -> SvmModel:
    """Fit the weighted hinge objective by seeded subgradient descent."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=int)
    if x.ndim != 2 or x.shape[0] != y.shape[0]:
        raise DimensionMismatch(f"x shape {x.shape} does not match {y.shape[0]} labels")
    n, dim = x.shape
    if dim == 0:
        raise DegenerateInput("zero-dimension features")
    if len(set(y.tolist())) < 2:
        raise DegenerateInput("training needs both classes")

    signs = np.where(y == 1, 1.0, -1.0)
    gamma = np.where(y == 1, weights[0], weights[1])
    lam = 1.0 / (c * n)
    w = np.zeros(dim)
    b = 0.0
    rng = np.random.default_rng(seed)
    t = 0
    for _ in range(epochs):
        for i in rng.permutation(n):
            t += 1
            eta = 1.0 / (lam * t)
            margin = signs[i] * (x[i] @ w + b)
            w *= 1.0 - 1.0 / t  # regularizer shrink; eta * lam == 1/t
            if margin < 1.0:
                step = eta * gamma[i] * signs[i]
                w += step * x[i]
                b += step
    return SvmModel(weights=w, bias=float(b), c=float(c), class_weights=tuple(weights), seed=seed)


def svm_objective(model: SvmModel, x, y) -> float:
    """Weighted hinge objective of a model on a dataset."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=int)
    signs = np.where(y == 1, 1.0, -1.0)
    gamma = np.where(y == 1, model.class_weights[0], model.class_weights[1])
    hinge = np.maximum(0.0, 1.0 - signs * (x @ model.weights + model.bias))
    return 0.5 * float(model.weights @ model.weights) + model.c * float((gamma * hinge).sum())


def predict(xv, model: SvmModel) -> int:
    """0/1 prediction; a decision value of exactly zero goes to the positive class."""
    xv = np.asarray(xv, dtype=float)
    if xv.shape != (model.dim,):
        raise DimensionMismatch(f"input dim {xv.shape} does not match model dim {model.dim}")
    return 1 if float(model.weights @ xv) + model.bias >= 0.0 else 0


def predict_many(x, model: SvmModel) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim != 2 or x.shape[1] != model.dim:
        raise DimensionMismatch(f"input shape {x.shape} does not match model dim {model.dim}")
    return (x @ model.weights + model.bias >= 0.0).astype(int)


def grid_search(
    x_train,
    y_train,
    x_val,
    y_val,
    c_grid=DEFAULT_C_GRID,
    seed: int = 0,
    weights: tuple[float, float] | None = None,
    epochs: int = DEFAULT_EPOCHS,
) -> tuple[float, float]:
    """Pick the regularization trade-off with the best validation macro-F1.

    Ties go to the smaller c.
    """
    grid = sorted(set(float(c) for c in c_grid))
    if not grid:
        raise ValueError("empty c grid")
    if weights is None:
        weights = class_weights(y_train)
    best_c, best_f1 = None, -1.0
    for c in grid:
        model = train_svm(x_train, y_train, c, weights, seed, epochs)
        report = macro_f1(y_val, predict_many(x_val, model))
        if report.macro_f1 > best_f1:
            best_c, best_f1 = c, report.macro_f1
    return best_c, best_f1


def _f1(tp: int, fp: int, fn: int) -> float:
    # equals 0 when precision + recall is 0, per the rare-class convention
    denom = 2 * tp + fp + fn
    return 2 * tp / denom if denom else 0.0


def macro_f1(y_true, y_pred) -> EvalReport:
    """Confusion counts plus per-class and macro-averaged F1."""
    y_true = list(y_true)
    y_pred = list(y_pred)
    if len(y_true) != len(y_pred) or not y_true:
        raise LengthMismatch(
            f"need equal non-empty label lists, got {len(y_true)} and {len(y_pred)}"
        )
    tp = sum(1 for t, p in zip(y_true, y_pred) if t == 1 and p == 1)
    fp = sum(1 for t, p in zip(y_true, y_pred) if t == 0 and p == 1)
    fn = sum(1 for t, p in zip(y_true, y_pred) if t == 1 and p == 0)
    tn = len(y_true) - tp - fp - fn
    f1_pos = _f1(tp, fp, fn)
    f1_neg = _f1(tn, fn, fp)
    return EvalReport(
        tp=tp, fp=fp, fn=fn, tn=tn, f1_pos=f1_pos, f1_neg=f1_neg, macro_f1=(f1_pos + f1_neg) / 2
    )
