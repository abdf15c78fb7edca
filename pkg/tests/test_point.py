"""The recursive string family and the assembled recurrent point.

The oracle here rebuilds the point by literal concatenation of family
strings, fully independent of the package's closed-form symbol lookup.
"""

import numpy as np
import pytest

from unpredictable import (DomainError, ResourceError, family, point_symbol,
                           point_window)

RIGHT_TOTAL_24 = 23 * 2 ** 24 + 1       # right-side symbols through level 24
LEFT_TOTAL_24 = RIGHT_TOTAL_24 - 1      # left side omits the level-1 string


def _family(r):
    strings = ["0", "1"]
    for _ in range(r - 1):
        strings = [s + b for s in strings for b in "01"]
    return strings


def right_text(levels):
    """Indices 0, 1, 2, ... : odd-position strings of each level in order."""
    parts = []
    for r in range(1, levels + 1):
        fam = _family(r)
        parts.extend(fam[k] for k in range(0, len(fam), 2))
    return "".join(parts)


def left_text(levels):
    """Indices -N..-1 in reading order: even-position strings, deepest
    level leftmost, descending within each level."""
    parts = []
    for r in range(levels, 1, -1):
        fam = _family(r)
        parts.extend(fam[k] for k in range(len(fam) - 1, 0, -2))
    return "".join(parts)


def as_string(window):
    return "".join(str(int(v)) for v in window.symbols)


class TestFamily:
    def test_level_one(self):
        assert family(1).strings == ("0", "1")

    def test_level_two(self):
        assert family(2).strings == ("00", "01", "10", "11")

    def test_level_three_matches_binary_counting(self):
        assert family(3).strings == tuple(f"{k:03b}" for k in range(8))

    @pytest.mark.parametrize("r", [4, 7, 10])
    def test_children_extend_parents(self, r):
        parents = family(r - 1).strings
        children = family(r).strings
        for k, parent in enumerate(parents):
            assert children[2 * k] == parent + "0"
            assert children[2 * k + 1] == parent + "1"

    def test_level_must_be_positive(self):
        with pytest.raises(DomainError):
            family(0)

    def test_level_cap(self):
        with pytest.raises(ResourceError):
            family(25)

    def test_custom_cap(self):
        with pytest.raises(ResourceError):
            family(9, max_level=8)


class TestPointSymbols:
    def test_origin_holds_the_zero_string(self):
        assert point_symbol(0) == 0

    def test_first_right_symbols(self):
        # 0 . 00 . 10 laid end to end
        assert [point_symbol(i) for i in range(5)] == [0, 0, 0, 1, 0]

    def test_first_left_symbols(self):
        # reading leftward: 01 then 11
        assert [point_symbol(i) for i in (-1, -2, -3, -4)] == [1, 0, 1, 1]

    def test_window_prefix_frozen(self):
        assert as_string(point_window(0, 17)) == "00010000010100110"

    def test_window_matches_symbolwise_lookup(self):
        w = point_window(-40, 80)
        assert [int(v) for v in w.symbols] == \
            [point_symbol(i) for i in range(-40, 40)]

    def test_right_side_equals_concatenation_oracle(self):
        text = right_text(8)
        assert as_string(point_window(0, len(text))) == text

    def test_left_side_equals_concatenation_oracle(self):
        text = left_text(8)
        assert as_string(point_window(-len(text), len(text))) == text

    def test_boundary_of_supported_range(self):
        # rightmost stored string is number 2**24 - 2, which ends in 0;
        # leftmost is number 2**24 - 1, all ones
        assert point_symbol(RIGHT_TOTAL_24 - 1) == 0
        assert point_symbol(-LEFT_TOTAL_24) == 1

    def test_right_resource_limit(self):
        with pytest.raises(ResourceError):
            point_symbol(RIGHT_TOTAL_24)

    def test_left_resource_limit(self):
        with pytest.raises(ResourceError):
            point_symbol(-(LEFT_TOTAL_24 + 1))

    def test_window_length_cap(self):
        with pytest.raises(ResourceError):
            point_window(0, 2 ** 20 + 1)

    def test_window_length_positive(self):
        with pytest.raises(DomainError):
            point_window(0, 0)


class TestEmbeddedPatterns:
    def test_every_odd_family_string_recurs_on_the_right(self):
        text = as_string(point_window(0, len(right_text(12))))
        for r in range(1, 13):
            fam = _family(r)
            for k in range(0, len(fam), 2):
                assert fam[k] in text

    def test_every_even_family_string_recurs_on_the_left(self):
        n = len(left_text(12))
        text = as_string(point_window(-n, n))
        for r in range(2, 13):
            fam = _family(r)
            for k in range(1, len(fam), 2):
                assert fam[k] in text

    def test_all_short_patterns_appear(self):
        # any pattern of length <= 8 occurs within the first few levels
        text = as_string(point_window(0, len(right_text(9))))
        for width in range(1, 9):
            seen = {text[i:i + width] for i in range(len(text) - width + 1)}
            assert len(seen) == 2 ** width
