"""Coarse syntactic tagging for the linguistic change signal.

A tagger maps one token to one tag from a fixed tagset; the per-utterance
tag histogram is the "speaking pattern" distribution fed to change
detection. The default tagger is a deterministic stand-in for full
syntactic analysis: a closed-class function-word list plus suffix
heuristics. Any object exposing `tags` and `tag()` can be plugged in.
"""

from __future__ import annotations

from typing import Protocol

import numpy as np


class Tagger(Protocol):
    tags: tuple[str, ...]

    def tag(self, token: str) -> str: ...


class CoarseTagger:
    """Function-word list first, then longest-suffix heuristics, else OTHER."""

    tags = ("NOUNish", "VERBish", "ADJish", "FUNC", "OTHER")

    _FUNCTION_WORDS = frozenset(
        """
        a about above after again against all am an and any are as at be
        because been being below between both but by can could did do does
        down during each few for from further had has have he her here hers
        him his how i if in into is it its just may me might more most must
        my no nor not now of off on once only or other our out over own
        shall she should so some such than that the their them then there
        these they this those through to too under until up upon us very
        was we were what when where which while who whom why will with
        would you your yours
        d ll m re s t ve
        """.split()
    )

    _SUFFIX_RULES = (
        ("NOUNish", ("tion", "sion", "ment", "ness", "ship", "hood", "ance", "ence", "ity", "ism")),
        ("VERBish", ("izing", "ising", "ing", "ized", "ised", "ize", "ise", "ify", "ed")),
        ("ADJish", ("ous", "ful", "less", "able", "ible", "ive", "est", "ish", "al")),
    )

    def tag(self, token: str) -> str:
        if token in self._FUNCTION_WORDS:
            return "FUNC"
        if len(token) > 4:
            for tag, suffixes in self._SUFFIX_RULES:
                if token.endswith(suffixes):
                    return tag
        return "OTHER"


def tag_distribution(tokens, tagger: Tagger) -> np.ndarray:
    """Normalized tag histogram of a token list; uniform when the list is empty."""
    n_tags = len(tagger.tags)
    index = {tag: i for i, tag in enumerate(tagger.tags)}
    counts = np.zeros(n_tags)
    for tok in tokens:
        counts[index[tagger.tag(tok)]] += 1.0
    total = counts.sum()
    if total == 0.0:
        return np.full(n_tags, 1.0 / n_tags)
    return counts / total
