"""Affect lexicon loading with tokenizer-consistent keys.

Three kinds of lexicon feed the feature extractors: word -> (valence,
arousal, dominance) triples, word -> per-emotion intensities, and word ->
lexical-category memberships. Every key is passed through the pipeline
tokenizer at load time, so lookups always agree with document tokens;
terms that do not normalize to exactly one token are dropped.

File formats (UTF-8, '#' comment lines skipped):

* VAD:        term<TAB>valence<TAB>arousal<TAB>dominance, scores in [0, 1]
* intensity:  term<TAB>emotion<TAB>score, emotion one of anger/fear/joy/sadness
* categories: one category per line, "name: word word word ..."
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DataError, EmptyLexicon, ParseError, RangeError
from .parsing import tokenize

EMOTIONS = ("anger", "fear", "joy", "sadness")


@dataclass
class VadLexicon:
    scores: dict[str, tuple[float, float, float]]

    def __contains__(self, token: str) -> bool:
        return token in self.scores


@dataclass
class IntensityLexicon:
    scores: dict[str, dict[str, float]]

    def __contains__(self, token: str) -> bool:
        return token in self.scores


@dataclass
class CategoryLexicon:
    categories: list[str]
    memberships: dict[str, frozenset[int]]

    def __contains__(self, token: str) -> bool:
        return token in self.memberships


@dataclass
class LexiconSet:
    """The lexicons one run needs; members stay None when unused."""

    vad: VadLexicon | None = None
    intensity: IntensityLexicon | None = None
    categories: CategoryLexicon | None = None


def _data_lines(path):
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read lexicon file {path}: {exc}") from exc
    with fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            yield line_no, line


def _normal_term(term: str) -> str | None:
    toks = tokenize(term)
    return toks[0] if len(toks) == 1 else None


def load_vad(path) -> VadLexicon:
    """Load a valence/arousal/dominance lexicon from TSV."""
    scores: dict[str, tuple[float, float, float]] = {}
    for line_no, line in _data_lines(path):
        parts = line.split("\t")
        if len(parts) != 4:
            raise ParseError(f"expected 4 tab-separated fields, got {len(parts)}", line_no=line_no)
        term, *rest = parts
        try:
            v, a, d = (float(x) for x in rest)
        except ValueError as exc:
            raise ParseError(f"non-numeric score in {line!r}", line_no=line_no) from exc
        for score in (v, a, d):
            if not 0.0 <= score <= 1.0:
                raise RangeError(f"{term!r}: score {score} outside [0, 1]")
        token = _normal_term(term)
        if token is None:
            continue
        if token in scores:
            warnings.warn(f"duplicate VAD term {token!r}; keeping the last occurrence")
        scores[token] = (v, a, d)
    return VadLexicon(scores)


def load_intensity(path) -> IntensityLexicon:
    """Load a per-emotion intensity lexicon from TSV.

    Emotions missing for a term stay absent rather than defaulting to zero,
    so window averages only cover tokens that actually carry the emotion.
    """
    scores: dict[str, dict[str, float]] = {}
    for line_no, line in _data_lines(path):
        parts = line.split("\t")
        if len(parts) != 3:
            raise ParseError(f"expected 3 tab-separated fields, got {len(parts)}", line_no=line_no)
        term, emotion, raw = parts
        if emotion not in EMOTIONS:
            raise ParseError(f"unknown emotion {emotion!r}", line_no=line_no)
        try:
            score = float(raw)
        except ValueError as exc:
            raise ParseError(f"non-numeric score in {line!r}", line_no=line_no) from exc
        if not 0.0 <= score <= 1.0:
            raise RangeError(f"{term!r}: score {score} outside [0, 1]")
        token = _normal_term(term)
        if token is None:
            continue
        entry = scores.setdefault(token, {})
        if emotion in entry:
            warnings.warn(f"duplicate intensity entry {token!r}/{emotion}; keeping the last one")
        entry[emotion] = score
    return IntensityLexicon(scores)


def load_categories(path) -> CategoryLexicon:
    """Load a lexical-category lexicon ("name: word word ..." per line)."""
    categories: list[str] = []
    memberships: dict[str, set[int]] = {}
    for line_no, line in _data_lines(path):
        name, sep, words = line.partition(":")
        if not sep:
            raise ParseError("expected 'name: word word ...'", line_no=line_no)
        name = name.strip()
        if not name:
            raise ParseError("empty category name", line_no=line_no)
        if name in categories:
            raise ParseError(f"duplicate category {name!r}", line_no=line_no)
        index = len(categories)
        categories.append(name)
        for word in words.split():
            token = _normal_term(word)
            if token is None:
                continue
            memberships.setdefault(token, set()).add(index)
    if not categories:
        raise EmptyLexicon(f"no category lines in {path}")
    frozen = {tok: frozenset(idx) for tok, idx in memberships.items()}
    return CategoryLexicon(categories=categories, memberships=frozen)


def category_distribution(tokens, lex: CategoryLexicon) -> np.ndarray:
    """Distribution of category hits over a token list.

    A token in several categories counts once per category. When nothing
    matches (or the list is empty) the uniform distribution is returned, so
    downstream change detection always sees a well-defined unit.
    """
    n_cat = len(lex.categories)
    counts = np.zeros(n_cat)
    for tok in tokens:
        for idx in lex.memberships.get(tok, ()):
            counts[idx] += 1.0
    total = counts.sum()
    if total == 0.0:
        return np.full(n_cat, 1.0 / n_cat)
    return counts / total


def category_rates(tokens, lex: CategoryLexicon) -> np.ndarray:
    """Category hits normalized by token count instead of by total hits.

    Magnitude-preserving alternative to category_distribution; zero vector
    for an empty token list.
    """
    n_cat = len(lex.categories)
    counts = np.zeros(n_cat)
    for tok in tokens:
        for idx in lex.memberships.get(tok, ()):
            counts[idx] += 1.0
    if not tokens:
        return counts
    return counts / len(tokens)
