"""Structural-point placement and context windows over a token stream.

Nine structural points sit at equal fractions of the document; the eight
spans between consecutive points are the development segments. Feature
extraction reads a small context window (by default 1% of the document)
centered on each point.

All index arithmetic is exact: positions are computed on rationals and
rounded half-up, so results do not depend on floating-point rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexOutOfRange, InvalidLength

N_STRUCTURAL_POINTS = 9
N_SEGMENTS = 8
N_BOUNDARIES = N_SEGMENTS - 1


def round_half_up(value: Fraction | int) -> int:
    """Nearest integer, with .5 rounded up."""
    return math.floor(value + Fraction(1, 2))


@dataclass
class SegmentPartition:
    n_tokens: int
    sp_indices: list[int]            # 9 non-decreasing token indices
    segments: list[tuple[int, int]]  # 8 half-open [start, end) ranges tiling [0, n)


@dataclass
class ContextWindow:
    sp_ordinal: int
    start: int
    end: int
    tokens: list[str]


def locate_structural_points(n_tokens: int) -> list[int]:
    """Token index of each of the nine structural points.

    Point i sits at round_half_up(i * (n_tokens - 1) / 8).
    """
    if n_tokens < 1:
        raise InvalidLength(f"n_tokens must be >= 1, got {n_tokens}")
    last = n_tokens - 1
    return [round_half_up(Fraction(i * last, N_SEGMENTS)) for i in range(N_STRUCTURAL_POINTS)]


def partition_segments(n_tokens: int) -> SegmentPartition:
    """The eight development segments between consecutive structural points.

    Segment i spans [sp[i], sp[i+1]); the last one is extended to the end of
    the document so the segments tile [0, n_tokens) exactly.
    """
    sp = locate_structural_points(n_tokens)
    segments = [(sp[i], sp[i + 1]) for i in range(N_SEGMENTS - 1)]
    segments.append((sp[N_SEGMENTS - 1], n_tokens))
    return SegmentPartition(n_tokens=n_tokens, sp_indices=sp, segments=segments)


def segment_of(partition: SegmentPartition, token_index: int) -> int:
    """Index of the development segment containing a token position."""
    if not 0 <= token_index < partition.n_tokens:
        raise IndexOutOfRange(f"token index {token_index} outside [0, {partition.n_tokens})")
    for seg, (start, end) in enumerate(partition.segments):
        if start <= token_index < end:
            return seg
    raise IndexOutOfRange(f"token index {token_index} not covered by any segment")


def window_half_width(n_tokens: int, window_pct: float = 1.0) -> int:
    """Half-width of a context window covering window_pct% of the document.

    The window extends half the total size on each side of the point, never
    less than one token.
    """
    pct = Fraction(str(window_pct))
    return max(1, round_half_up(Fraction(n_tokens) * pct / 200))


def context_window(sp_index: int, n_tokens: int, window_pct: float = 1.0) -> tuple[int, int]:
    """Half-open token range of the window centered on one structural point."""
    if n_tokens < 1:
        raise InvalidLength(f"n_tokens must be >= 1, got {n_tokens}")
    if not 0 <= sp_index < n_tokens:
        raise IndexOutOfRange(f"sp index {sp_index} outside [0, {n_tokens})")
    h = window_half_width(n_tokens, window_pct)
    return max(0, sp_index - h), min(n_tokens, sp_index + h + 1)


def context_windows(
    partition: SegmentPartition, tokens: list[str], window_pct: float = 1.0
) -> list[ContextWindow]:
    """All nine point-centered windows with their token slices, in point order."""
    windows = []
    for ordinal, sp in enumerate(partition.sp_indices):
        start, end = context_window(sp, partition.n_tokens, window_pct)
        windows.append(ContextWindow(ordinal, start, end, tokens[start:end]))
    return windows
