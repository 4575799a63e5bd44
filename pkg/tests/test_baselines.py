import pytest
from hypothesis import given, settings

from seqbdd.baselines import (
    CSV_HEADER, AutomatonStats, SizeBoundError, build_trie, compare_sizes, minimize,
)
from seqbdd.errors import InputError

from conftest import FIG2, phrase_sets
from oracles import all_strings, canonical_node_count, min_dfa_size


def test_trie_fig2():
    trie, stats = build_trie(FIG2)
    assert stats == AutomatonStats(10, 9)
    assert all(trie.accepts(w) for w in FIG2)
    assert not trie.accepts("ab")


@pytest.mark.parametrize("phrases, transitions", [(["a"], 1), (["ab", "cd"], 4)])
def test_trie_small(phrases, transitions):
    assert build_trie(phrases)[1].transitions == transitions


def test_trie_empty():
    with pytest.raises(InputError):
        build_trie([])


def test_minimize_fig2_matches_oracle():
    dfa = minimize(build_trie(FIG2)[0])
    assert (dfa.stats.states, dfa.stats.transitions) == min_dfa_size({tuple(w) for w in FIG2})
    assert dfa.stats.transitions == 8


def test_minimize_single_phrase_unchanged():
    trie, stats = build_trie(["abcd"])
    assert minimize(trie).stats == stats


def test_minimize_shares_suffix():
    dfa = minimize(build_trie(["ab", "cb"])[0])
    # start, after a|c, final
    assert dfa.stats == AutomatonStats(3, 3)
    assert min_dfa_size({("a", "b"), ("c", "b")}) == (3, 3)


def test_compare_fig2():
    r = compare_sizes(FIG2)
    assert r.seqbdd_nodes == 7 <= r.dfa_transitions == 8
    assert r.labeled_objects == {"seqbdd": 7, "dfa": 8}
    assert r.csv_row("fig2") == "fig2,10,9,6,8,7,6"
    assert CSV_HEADER.count(",") == r.csv_row("x").count(",")


@pytest.mark.parametrize("k", [1, 3, 6])
def test_compare_singleton(k):
    r = compare_sizes(["abcdef"[:k]])
    assert (r.trie_transitions, r.dfa_transitions, r.seqbdd_nodes, r.relaxed_nodes) == (k,) * 4


def test_size_bound_error_type():
    assert issubclass(SizeBoundError, Exception)


@settings(max_examples=150, deadline=None)
@given(phrase_sets)
def test_minimize_preserves_language(phrases):
    lang = set(phrases)
    dfa = minimize(build_trie(phrases)[0])
    for w in all_strings("abcde", max(map(len, phrases)) + 1):
        assert dfa.accepts(w) == ("".join(w) in lang)
    assert (dfa.stats.states, dfa.stats.transitions) == min_dfa_size({tuple(p) for p in lang})
    assert dfa.stats.states <= build_trie(phrases)[1].states


@settings(max_examples=150, deadline=None)
@given(phrase_sets)
def test_seqbdd_never_larger_than_dfa(phrases):
    r = compare_sizes(phrases)
    assert r.seqbdd_nodes <= r.dfa_transitions
    assert r.seqbdd_nodes == canonical_node_count({tuple(p) for p in phrases})
