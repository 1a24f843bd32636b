"""Narrative-window text representation.

The representation restricts each document to the tokens inside its nine
structural-point context windows, builds tf-idf over the training corpus,
and keeps only the top-k terms by summed tf-idf mass. The exact variant is
pinned so every consumer (and every oracle) agrees:

    tfidf(t, d) = tf(t, d) * (ln((1 + n_docs) / (1 + df(t))) + 1)

on raw counts, with document vectors L2-normalized after term selection.
Selection is unsupervised (no labels), ties broken lexicographically.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyCorpus
from .parsing import Screenplay
from .segmentation import SegmentPartition, context_windows


def sp_text(screenplay: Screenplay, partition: SegmentPartition, window_pct: float = 1.0) -> list[str]:
    """Concatenated tokens of the nine point-centered windows, overlaps kept."""
    tokens = screenplay.token_list()
    out: list[str] = []
    for window in context_windows(partition, tokens, window_pct):
        out.extend(window.tokens)
    return out


@dataclass
class TfidfModel:
    n_docs: int
    df: dict[str, int]                 # term -> document frequency
    importance: dict[str, float]       # term -> summed tf-idf mass over the corpus
    selected: list[str]                # top-k terms, importance desc then lexicographic
    stopwords: frozenset[str] = frozenset()
    vocabulary: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.vocabulary = {term: i for i, term in enumerate(sorted(self.df))}

    def idf(self, term: str) -> float:
        return math.log((1 + self.n_docs) / (1 + self.df[term])) + 1.0


def fit_tfidf(docs, top_k: int, stopwords=()) -> TfidfModel:
    """Fit document frequencies and select the top_k most important terms.

    Importance of a term is its total tf-idf mass across the corpus. Fit on
    the training split only; the model is immutable afterwards.
    """
    if top_k < 1:
        raise ValueError(f"top_k must be >= 1, got {top_k}")
    stop = frozenset(stopwords)
    docs = [[t for t in doc if t not in stop] for doc in docs]
    if not docs:
        raise EmptyCorpus("cannot fit tf-idf on an empty corpus")
    df: Counter[str] = Counter()
    total_tf: Counter[str] = Counter()
    for doc in docs:
        counts = Counter(doc)
        for term, count in counts.items():
            df[term] += 1
            total_tf[term] += count
    n_docs = len(docs)
    importance = {
        term: total_tf[term] * (math.log((1 + n_docs) / (1 + df[term])) + 1.0) for term in df
    }
    selected = sorted(importance, key=lambda t: (-importance[t], t))[:top_k]
    return TfidfModel(
        n_docs=n_docs,
        df=dict(sorted(df.items())),
        importance=importance,
        selected=selected,
        stopwords=stop,
    )


def transform(doc, model: TfidfModel, normalize: bool = True) -> np.ndarray:
    """tf-idf vector of a token list over the model's selected terms.

    Out-of-vocabulary tokens are ignored; the result is L2-normalized unless
    it is the zero vector (which stays zero).
    """
    counts = Counter(t for t in doc if t not in model.stopwords)
    vec = np.array([counts[t] * model.idf(t) for t in model.selected], dtype=float)
    if normalize:
        norm = np.linalg.norm(vec)
        if norm > 0.0:
            vec /= norm
    return vec


def vocabulary_dump(model: TfidfModel) -> list[tuple[str, int, int, float]]:
    """(term, column index, document frequency, importance) rows in column order."""
    return [
        (term, index, model.df[term], model.importance[term])
        for term, index in model.vocabulary.items()
    ]
