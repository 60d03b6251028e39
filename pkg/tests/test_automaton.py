import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subwordcount import (
    BudgetExceededError,
    ProblemInstance,
    advance_distribution,
    build_automaton,
    count_matches,
    count_occurrences,
    dp_count,
    enumerate_count,
)


def walk(automaton, word, start=0):
    state = start
    for symbol in word:
        state = automaton.goto[state][symbol]
    return state


class TestBuildAutomaton:
    def test_trie_size_two_disjoint_patterns(self):
        auto = build_automaton(4, [(0, 1), (2, 3)])
        # root plus two states per pattern
        assert auto.state_count == 5
        assert auto.pattern_count == 2

    def test_shared_prefixes_share_states(self):
        auto = build_automaton(2, [(0, 0), (0, 1)])
        assert auto.state_count == 4

    def test_emits_at_pattern_ends(self):
        auto = build_automaton(2, [(0, 1)])
        end = walk(auto, (0, 1))
        assert auto.emits[end] == (0,)
        assert auto.emits[0] == ()

    def test_emit_closure_through_suffix_links(self):
        # after reading 001 both patterns 001 and 01 end
        auto = build_automaton(2, [(0, 0, 1), (0, 1)])
        end = walk(auto, (0, 0, 1))
        assert auto.emits[end] == (0, 1)

    def test_fallback_transitions_reuse_matched_suffix(self):
        auto = build_automaton(2, [(0, 1)])
        # reading 0 0 must stay on the prefix 0, not fall to the root
        assert walk(auto, (0, 0)) == walk(auto, (0,))

    def test_emit_sets_match_suffix_relation(self):
        patterns = [(0, 1), (1, 1, 0), (1,)]
        auto = build_automaton(3, patterns)
        # every automaton state is reachable as some pattern prefix
        prefixes = {()}
        for p in patterns:
            for k in range(1, len(p) + 1):
                prefixes.add(p[:k])
        assert len(prefixes) == auto.state_count
        for prefix in prefixes:
            state = walk(auto, prefix)
            expected = tuple(
                sorted(
                    i
                    for i, p in enumerate(patterns)
                    if len(p) <= len(prefix) and prefix[len(prefix) - len(p) :] == p
                )
            )
            assert auto.emits[state] == expected, prefix

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            build_automaton(0, [(0,)])
        with pytest.raises(ValueError):
            build_automaton(2, [()])
        with pytest.raises(ValueError):
            build_automaton(2, [(0, 2)])


class TestCountMatches:
    def test_simple_scan(self):
        auto = build_automaton(2, [(0, 0), (0, 1)])
        assert count_matches(auto, (0, 0, 0, 1)) == (2, 1)

    @given(
        st.lists(st.integers(0, 2), min_size=0, max_size=12),
        st.lists(
            st.lists(st.integers(0, 2), min_size=1, max_size=3).map(tuple),
            min_size=1,
            max_size=3,
            unique=True,
        ),
    )
    @settings(max_examples=80, deadline=None)
    def test_agrees_with_direct_occurrence_counts(self, word, patterns):
        auto = build_automaton(3, patterns)
        expected = tuple(count_occurrences(word, p) for p in patterns)
        assert count_matches(auto, word) == expected


class TestAdvanceDistribution:
    def test_mass_multiplies_by_alphabet_size(self):
        auto = build_automaton(3, [(0, 1)])
        caps = [2]
        distribution = {(0, (0,)): 1}
        total = 1
        for _ in range(5):
            distribution = advance_distribution(auto, distribution, caps)
            total *= 3
            assert sum(distribution.values()) == total

    def test_tallies_saturate_at_cap(self):
        auto = build_automaton(1, [(0,)])
        distribution = {(0, (0,)): 1}
        for _ in range(6):
            distribution = advance_distribution(auto, distribution, [2])
        ((state_tallies, mass),) = distribution.items()
        assert state_tallies[1] == (2,)
        assert mass == 1


class TestDpCount:
    def test_known_small_case(self):
        inst = ProblemInstance.from_pairs(2, 4, [((0, 1), 1)])
        assert dp_count(inst) == 10

    def test_zero_length_word(self):
        assert dp_count(ProblemInstance.from_pairs(2, 0, [((0,), 0)])) == 1
        assert dp_count(ProblemInstance.from_pairs(2, 0, [((0,), 1)])) == 0

    def test_handles_self_intersecting_patterns(self):
        inst = ProblemInstance.from_pairs(2, 4, [((0, 0), 2)])
        assert dp_count(inst) == 2

    def test_handles_overlapping_pairs(self):
        inst = ProblemInstance.from_pairs(2, 5, [((0, 1), 1), ((1, 0), 1)])
        assert dp_count(inst) == enumerate_count(inst)

    def test_budget_refusal(self):
        inst = ProblemInstance.from_pairs(4, 1000, [((0, 1, 2), 5)])
        with pytest.raises(BudgetExceededError):
            dp_count(inst, step_budget=100)

    @given(
        st.integers(2, 3),
        st.integers(0, 7),
        st.lists(
            st.lists(st.integers(0, 1), min_size=1, max_size=3).map(tuple),
            min_size=1,
            max_size=2,
            unique=True,
        ),
        st.lists(st.integers(0, 2), min_size=2, max_size=2),
    )
    @settings(max_examples=60, deadline=None)
    def test_agrees_with_enumeration(self, q, t, patterns, counts):
        pairs = [(p, x) for p, x in zip(patterns, counts)]
        inst = ProblemInstance.from_pairs(q, t, pairs)
        assert dp_count(inst) == enumerate_count(inst)
