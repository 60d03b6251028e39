import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import borderless_patterns, independent_pattern_pairs
from subwordcount import (
    NotApplicableError,
    PatternSpec,
    ProblemInstance,
    count_multi,
    count_single,
    enumerate_count,
    iter_copy_counts,
)


class TestCountSingle:
    def test_known_values(self):
        assert count_single(2, 4, 2, 1).total == 10
        assert count_single(2, 2, 2, 0).total == 3
        assert count_single(2, 2, 2, 1).total == 1

    def test_infeasible_count_is_zero_with_no_terms(self):
        breakdown = count_single(3, 5, 2, 3)
        assert breakdown.total == 0
        assert breakdown.terms == ()

    def test_zero_length_word(self):
        assert count_single(4, 0, 3, 0).total == 1
        assert count_single(4, 0, 3, 1).total == 0

    def test_term_indices_and_signs(self):
        breakdown = count_single(2, 6, 2, 1)
        indices = [ix for ix, _ in breakdown.terms]
        assert indices == [(1,), (2,), (3,)]
        values = [v for _, v in breakdown.terms]
        # leading term positive, signs alternating from there
        assert values[0] > 0
        assert all((v > 0) == (i % 2 == 0) for i, v in enumerate(values) if v != 0)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            count_single(1, 4, 2, 1)
        with pytest.raises(ValueError):
            count_single(2, -1, 2, 1)
        with pytest.raises(ValueError):
            count_single(2, 4, 0, 1)
        with pytest.raises(ValueError):
            count_single(2, 4, 2, -1)

    @given(st.integers(2, 3), st.integers(0, 8), st.integers(1, 3), st.integers(0, 4))
    @settings(max_examples=60, deadline=None)
    def test_matches_enumeration(self, q, t, a, x):
        # ones ending in a zero: borderless at every length, two symbols suffice
        pattern = (1,) * (a - 1) + (0,)
        inst = ProblemInstance.from_pairs(q, t, [(pattern, x)])
        assert count_single(q, t, a, x).total == enumerate_count(inst)

    @given(st.integers(2, 5), st.integers(0, 20), st.integers(1, 4))
    @settings(max_examples=40, deadline=None)
    def test_sums_to_all_words_over_all_required_counts(self, q, t, a):
        total = sum(count_single(q, t, a, x).total for x in range(t // a + 1))
        assert total == q**t


class TestCountMulti:
    def test_two_patterns_small(self):
        inst = ProblemInstance.from_pairs(3, 4, [((0, 1), 1), ((2, 1), 1)])
        assert count_multi(inst).total == 2

    def test_mixed_pattern_lengths(self):
        inst = ProblemInstance.from_pairs(3, 4, [((0,), 1), ((1, 2), 1)])
        assert count_multi(inst).total == 12

    def test_rejects_self_intersecting_pattern(self):
        inst = ProblemInstance.from_pairs(2, 6, [((0, 1, 0), 1)])
        with pytest.raises(NotApplicableError) as excinfo:
            count_multi(inst)
        assert excinfo.value.report.per_pattern_self_intersection == (True,)

    def test_rejects_overlapping_pair(self):
        inst = ProblemInstance.from_pairs(3, 6, [((0, 1), 1), ((1, 2), 1)])
        with pytest.raises(NotApplicableError) as excinfo:
            count_multi(inst)
        assert excinfo.value.report.cross_overlap_pairs == ((0, 1),)

    def test_infeasible_requirements_count_zero(self):
        inst = ProblemInstance.from_pairs(3, 4, [((0, 1), 1), ((2, 1), 4)])
        assert count_multi(inst).total == 0
        assert count_multi(inst).terms == ()

    def test_term_indices_are_full_tuples(self):
        inst = ProblemInstance.from_pairs(4, 8, [((0, 1), 1), ((2, 3), 1)])
        breakdown = count_multi(inst)
        assert all(len(ix) == 2 for ix, _ in breakdown.terms)
        assert breakdown.total == enumerate_count(inst)

    @given(st.integers(2, 3), st.integers(0, 10), st.integers(1, 3), st.integers(0, 3))
    @settings(max_examples=60, deadline=None)
    def test_single_pattern_reduction(self, q, t, a, x):
        pattern = (1,) * (a - 1) + (0,)
        inst = ProblemInstance.from_pairs(q, t, [(pattern, x)])
        assert count_multi(inst).total == count_single(q, t, a, x).total

    def test_matches_enumeration_on_independent_pairs(self):
        checked = 0
        for a, b in independent_pattern_pairs(4, 2):
            inst = ProblemInstance.from_pairs(4, 5, [(a, 1), (b, 1)])
            assert count_multi(inst).total == enumerate_count(inst), (a, b)
            checked += 1
        assert checked >= 3


class TestIterCopyCounts:
    def test_single_pattern_range(self):
        specs = (PatternSpec((0, 1), 2),)
        assert list(iter_copy_counts(9, specs)) == [(2,), (3,), (4,)]

    def test_two_patterns_lexicographic_and_feasible(self):
        specs = (PatternSpec((0, 1), 1), PatternSpec((2, 3), 1))
        tuples = list(iter_copy_counts(7, specs))
        assert tuples == sorted(tuples)
        for i1, i2 in tuples:
            assert i1 >= 1 and i2 >= 1
            assert 2 * i1 + 2 * i2 <= 7
        assert (1, 1) in tuples and (2, 1) in tuples

    def test_empty_when_infeasible(self):
        specs = (PatternSpec((0, 1, 2), 4),)
        assert list(iter_copy_counts(5, specs)) == []

    def test_no_specs_rejected(self):
        with pytest.raises(ValueError):
            list(iter_copy_counts(5, ()))


def test_borderless_pattern_helper_is_sound():
    # helper sanity: generated patterns really have no borders
    pats = borderless_patterns(3, 3)
    assert (0, 1) in pats and (0, 1, 1) in pats
    assert (0, 1, 0) not in pats and (0, 0) not in pats
