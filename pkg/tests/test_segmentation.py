import pytest
from hypothesis import given
from hypothesis import strategies as st

from scriptgauge.errors import IndexOutOfRange, InvalidLength
from scriptgauge.segmentation import (
    N_SEGMENTS,
    N_STRUCTURAL_POINTS,
    context_window,
    context_windows,
    locate_structural_points,
    partition_segments,
    window_half_width,
)


class TestStructuralPoints:
    def test_identity_spacing(self):
        assert locate_structural_points(9) == [0, 1, 2, 3, 4, 5, 6, 7, 8]

    def test_single_token(self):
        assert locate_structural_points(1) == [0] * 9

    def test_n800(self):
        assert locate_structural_points(800) == [0, 100, 200, 300, 400, 499, 599, 699, 799]

    def test_invalid_length(self):
        with pytest.raises(InvalidLength):
            locate_structural_points(0)

    @given(st.integers(min_value=1, max_value=100_000))
    def test_endpoints_and_monotone(self, n):
        sp = locate_structural_points(n)
        assert len(sp) == N_STRUCTURAL_POINTS
        assert sp[0] == 0 and sp[-1] == n - 1
        assert all(a <= b for a, b in zip(sp, sp[1:]))

    @given(st.integers(min_value=1, max_value=50_000))
    def test_monotone_in_n(self, n):
        a, b = locate_structural_points(n), locate_structural_points(n + 1)
        assert all(x <= y for x, y in zip(a, b))


class TestPartition:
    def test_n16(self):
        part = partition_segments(16)
        assert part.sp_indices == [0, 2, 4, 6, 8, 9, 11, 13, 15]
        assert part.segments == [
            (0, 2), (2, 4), (4, 6), (6, 8), (8, 9), (9, 11), (11, 13), (13, 16),
        ]

    def test_n9_last_segment_longer(self):
        part = partition_segments(9)
        assert [end - start for start, end in part.segments] == [1, 1, 1, 1, 1, 1, 1, 2]

    def test_n1_degenerate(self):
        part = partition_segments(1)
        assert part.segments[:-1] == [(0, 0)] * 7
        assert part.segments[-1] == (0, 1)

    @given(st.integers(min_value=1, max_value=100_000))
    def test_tiling(self, n):
        part = partition_segments(n)
        assert len(part.segments) == N_SEGMENTS
        cursor = 0
        for start, end in part.segments:
            assert start == cursor and end >= start
            cursor = end
        assert cursor == n


class TestContextWindow:
    def test_one_percent_of_27k(self):
        assert window_half_width(27_000) == 135
        assert context_window(13_500, 27_000) == (13_365, 13_636)

    def test_clamped_at_start(self):
        assert context_window(0, 1000) == (0, 6)

    def test_minimum_half_width(self):
        assert context_window(50, 100) == (49, 52)

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            context_window(100, 100)

    def test_invalid_length(self):
        with pytest.raises(InvalidLength):
            context_window(0, 0)

    @given(st.integers(min_value=1, max_value=100_000))
    def test_interior_windows_full_width(self, n):
        h = window_half_width(n)
        part = partition_segments(n)
        for sp in part.sp_indices:
            start, end = context_window(sp, n)
            assert start <= sp < end
            assert end - start <= 2 * h + 1
            if sp - h >= 0 and sp + h + 1 <= n:
                assert end - start == 2 * h + 1

    def test_window_tokens_slice(self):
        tokens = [f"t{i}" for i in range(40)]
        part = partition_segments(40)
        windows = context_windows(part, tokens)
        assert len(windows) == N_STRUCTURAL_POINTS
        for w in windows:
            assert w.tokens == tokens[w.start : w.end]
            assert w.tokens  # clamped but never empty
