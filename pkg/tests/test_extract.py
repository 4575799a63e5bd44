import pytest
from hypothesis import given, settings, strategies as st

from seqbdd.errors import CapacityError, InputError, StructuralError, TracingError, UsageError
from seqbdd.extract import (
    SLOT, ExtractConfig, FlatDag, PathCandidate, Template, enumerate_paths, extract,
    flatten, format_tsv, label_slots, merge_templates, prune, trace, weight_edges,
)
from seqbdd.fixtures import load
from seqbdd.ingest import TaggedPhrase
from seqbdd.lexicon import WordTable, attach_words
from seqbdd.store import Mode, Store, construct

from conftest import FIG2, FIG6


def _fig8(mode=Mode.RELAXED):
    phrases = load("fig8")
    s, root = construct([p.tags for p in phrases], mode)
    return s, root, phrases


def _by_symbol(dag):
    """Edge weights keyed by symbol pairs (fine when symbols are unique)."""
    return {(dag.symbols[u], dag.symbols[v]): w for (u, v), w in dag.edges.items()}


def _chars(words):
    return [TaggedPhrase.from_chars(w) for w in words]


# -- flatten ---------------------------------------------------------------------


def test_flatten_fig2_first_a():
    s, root = construct(FIG2)
    dag = flatten(s, root)
    assert [dag.symbols[r] for r in dag.roots] == ["a"]
    (a,) = dag.roots
    assert sorted(dag.symbols[v] for v in dag.succ[a]) == ["a", "b", "c"]
    assert all(w == 0 for w in dag.edges.values())


def test_flatten_chain():
    s = Store()
    root = s.chain("abc")
    dag = flatten(s, root)
    assert _by_symbol(dag) == {("a", "b"): 0, ("b", "c"): 0}
    assert [dag.symbols[u] for u in dag.accepting] == ["c"]


def test_flatten_epsilon_residual():
    s, root = construct(["a", "ab"])
    dag = flatten(s, root)
    (a,) = dag.roots
    (b,) = dag.succ[a]
    assert dag.accepting == {a, b}
    assert s.contains(root, "a") and s.contains(root, "ab")


def test_flatten_rejects_cycle():
    s = Store()
    a = s._alloc(s.intern("a").id, 0, 1)
    b = s._alloc(s.intern("b").id, 0, a)
    s._hi[a] = b
    with pytest.raises(StructuralError):
        flatten(s, a)


def test_successor_symbols_distinct():
    s, root = construct(FIG2 + ["bca", "cab"], Mode.RELAXED)
    dag = flatten(s, root)
    for u, vs in dag.succ.items():
        syms = [dag.symbols[v] for v in vs]
        assert len(syms) == len(set(syms))


# -- weight_edges ----------------------------------------------------------------


@pytest.mark.parametrize("mode", list(Mode))
def test_weights_fig8(mode):
    s, root, phrases = _fig8(mode)
    dag = weight_edges(flatten(s, root), phrases)
    assert _by_symbol(dag) == {
        ("VB", "PRP"): 3, ("VB", "DT"): 2, ("DT", "NN"): 2,
        ("PRP", "IN"): 3, ("NN", "IN"): 2,
    }
    assert sum(dag.roots.values()) == 5
    assert sum(dag.accepts.values()) == 5


def test_weights_single_and_repeated():
    s = Store()
    root = s.chain("abc")
    one = weight_edges(flatten(s, root), ["abc"])
    assert set(one.edges.values()) == {1}
    two = weight_edges(flatten(s, root), ["abc", "abc"])
    assert set(two.edges.values()) == {2}


def test_weights_untraceable_phrase():
    s = Store()
    root = s.chain("abc")
    with pytest.raises(TracingError) as err:
        weight_edges(flatten(s, root), ["abd"])
    assert "abd" in str(err.value) or "d" in str(err.value)
    with pytest.raises(TracingError):
        trace(flatten(s, root), "ab")  # b is not accepting


# -- prune -----------------------------------------------------------------------


def test_prune_fig8_keeps_everything():
    s, root, phrases = _fig8()
    dag = weight_edges(flatten(s, root), phrases)
    pruned = prune(dag, 2)
    assert pruned.edges == dag.edges
    assert pruned.symbols == dag.symbols


def test_prune_min_one_is_identity():
    s, root = construct(FIG2)
    dag = weight_edges(flatten(s, root), FIG2)
    pruned = prune(dag, 1)
    assert pruned.edges == dag.edges
    assert pruned.symbols == dag.symbols
    assert pruned.accepts == dag.accepts


def test_prune_all_weight_one():
    s, root = construct(["abc", "abd"])
    dag = weight_edges(flatten(s, root), ["abc", "abd"])
    pruned = prune(dag, 2)
    # a->b carries 2 and survives; b->c and b->d carry 1
    assert _by_symbol(pruned) == {("a", "b"): 2}
    assert sorted(pruned.symbols.values()) == ["a", "b"]
    assert pruned.accepting == set()
    s2 = Store()
    r2 = s2.chain("xy")
    only_ones = prune(weight_edges(flatten(s2, r2), ["xy"]), 2)
    assert only_ones.edges == {} and only_ones.symbols == {}


# -- enumerate_paths -------------------------------------------------------------


def test_paths_fig8():
    s, root, phrases = _fig8()
    dag = prune(weight_edges(flatten(s, root), phrases), 2)
    got = sorted(([dag.symbols[u] for u in p.nodes], p.weight) for p in enumerate_paths(dag))
    assert got == [(["VB", "DT", "NN", "IN"], 2), (["VB", "PRP", "IN"], 3)]


def _line_dag(weights):
    n = len(weights) + 1
    ids = list(range(2, 2 + n))
    dag = FlatDag(
        symbols={u: chr(ord("a") + i) for i, u in enumerate(ids)},
        succ={u: [v] for u, v in zip(ids, ids[1:])},
        edges={(u, v): w for (u, v), w in zip(zip(ids, ids[1:]), weights)},
        roots={ids[0]: max(weights)},
        accepts={ids[-1]: min(weights)},
        accepting={ids[-1]},
    )
    dag.succ[ids[-1]] = []
    return dag


def test_paths_min_rule():
    (p,) = enumerate_paths(_line_dag([5, 2, 7]))
    assert p.weight == 2
    assert len(p.nodes) == 4


def test_paths_none_accepting():
    dag = _line_dag([3, 3])
    dag.accepts = {}
    dag.accepting = set()
    assert enumerate_paths(dag) == []


def test_paths_single_node_uses_accept_count():
    s = Store()
    root = s.chain("a")
    dag = weight_edges(flatten(s, root), ["a"] * 4)
    assert enumerate_paths(dag) == [PathCandidate((root,), 4)]


def test_paths_capacity():
    words = [x + y + z for x in "ab" for y in "cd" for z in "ef"]
    s, root = construct(words)
    dag = weight_edges(flatten(s, root), words * 2)
    assert len(enumerate_paths(dag, max_paths=8)) == 8
    with pytest.raises(CapacityError) as err:
        enumerate_paths(dag, max_paths=7)
    assert "7" in str(err.value)


# -- label_slots -----------------------------------------------------------------


def _words(**nodes):
    t = WordTable()
    for name, counts in nodes.items():
        for w, n in counts.items():
            t.record_word(int(name[1:]), w, n)
    return t


def test_label_fig8_path():
    t = _words(n2={"regard": 3}, n3={"him": 1, "her": 1, "it": 1}, n4={"as": 3})
    tpl = label_slots(PathCandidate((2, 3, 4), 3), t, 0.5)
    assert tpl == Template(("regard", SLOT, "as"), 3)


def test_label_theta_one_single_words():
    t = _words(n2={"a": 2}, n3={"b": 1})
    assert label_slots(PathCandidate((2, 3), 1), t, 1.0).elements == ("a", "b")


def test_label_boundary_inclusive():
    t = _words(n2={"x": 2, "y": 1, "z": 1})
    assert label_slots(PathCandidate((2,), 1), t, 0.5).elements == ("x",)
    assert label_slots(PathCandidate((2,), 1), t, 0.51).elements == (SLOT,)


def test_label_tied_top_word_is_slot():
    t = _words(n2={"the": 1, "some": 1})
    assert label_slots(PathCandidate((2,), 1), t, 0.5).elements == (SLOT,)


def test_label_needs_words():
    with pytest.raises(UsageError):
        label_slots(PathCandidate((9,), 1), WordTable(), 0.5)


# -- merge_templates -------------------------------------------------------------


def test_merge_collapses_slots():
    out = merge_templates([
        Template(("regard", SLOT, "as"), 3),
        Template(("regard", SLOT, SLOT, "as"), 2),
    ])
    assert out == [Template(("regard", SLOT, "as"), 5)]


def test_merge_identical_and_empty():
    assert merge_templates([Template(("a",), 2), Template(("a",), 3)]) == [Template(("a",), 5)]
    assert merge_templates([]) == []


def test_merge_ordering():
    out = merge_templates([Template(("b",), 2), Template(("a",), 2), Template(("c",), 9)])
    assert [t.render() for t in out] == ["c", "a", "b"]


# -- extract -------------------------------------------------------------------


def test_extract_fig8():
    s, root, phrases = _fig8()
    out = extract(s, root, phrases, ExtractConfig(theta=0.5, min_edge_freq=2))
    assert out[0].render() == "regard <slot> as"
    assert out[0].weight == 5
    assert format_tsv(out[:1]) == "1\t5\tregard <slot> as\n"


def test_extract_fig6_derived():
    phrases = _chars(FIG6)
    s, root = construct([p.tags for p in phrases], Mode.RELAXED)
    out = extract(s, root, phrases, ExtractConfig(theta=0.5, min_edge_freq=1))
    # every middle node carries one word once, so no slot appears
    assert len(out) == 9
    assert {t.weight for t in out} == {1}
    assert not any(t.has_slot for t in out)
    assert out[0].render() == "a b e f i"


def test_extract_repeated_phrase():
    phrases = [TaggedPhrase((("go", "VB"), ("home", "NN")))] * 10
    s, root = construct([p.tags for p in phrases], Mode.RELAXED)
    out = extract(s, root, phrases)
    assert out == [Template(("go", "home"), 10)]
    assert extract(s, root, phrases, ExtractConfig(require_slot=True)) == []


def test_extract_top_k():
    s, root, phrases = _fig8()
    cfg = ExtractConfig(theta=1.0, min_edge_freq=1, top_k=1)
    assert len(extract(s, root, phrases, cfg)) == 1


@pytest.mark.parametrize("kw", [{"theta": 0}, {"theta": 1.5}, {"top_k": 0}, {"min_edge_freq": 0}])
def test_config_validation(kw):
    with pytest.raises(InputError):
        ExtractConfig(**kw)


def test_config_for_mode():
    assert ExtractConfig.for_mode("original").theta == 1.0
    assert ExtractConfig.for_mode(Mode.RELAXED).theta == 0.5
    assert ExtractConfig.for_mode("original", theta=0.3, top_k=None).theta == 0.3


def test_extract_deterministic():
    phrases = load("tweetbot")
    runs = []
    for order in (phrases, list(reversed(phrases))):
        s, root = construct([p.tags for p in order], Mode.RELAXED)
        runs.append(format_tsv(extract(s, root, order)))
    assert runs[0] == runs[1]


# -- properties ----------------------------------------------------------------

TAGS = ["DT", "NN", "VB", "IN"]
WORDS = {"DT": ["the", "a"], "NN": ["dog", "cat", "idea"], "VB": ["saw", "had"], "IN": ["of"]}

tagged = st.lists(
    st.lists(st.sampled_from(TAGS), min_size=1, max_size=5).flatmap(
        lambda tags: st.tuples(*[st.sampled_from(WORDS[t]) for t in tags]).map(
            lambda ws, tags=tags: TaggedPhrase(tuple(zip(ws, tags)))
        )
    ),
    min_size=1,
    max_size=30,
)


@settings(max_examples=80, deadline=None)
@given(tagged, st.sampled_from(list(Mode)))
def test_flow_conservation(phrases, mode):
    s, root = construct([p.tags for p in phrases], mode)
    dag = weight_edges(flatten(s, root), phrases)
    for u in dag.symbols:
        out = sum(w for (a, _), w in dag.edges.items() if a == u) + dag.accepts.get(u, 0)
        into = sum(w for (_, b), w in dag.edges.items() if b == u) + dag.roots.get(u, 0)
        assert out == into


@settings(max_examples=80, deadline=None)
@given(tagged, st.sampled_from(list(Mode)), st.integers(1, 3))
def test_path_weights_respect_edges(phrases, mode, k):
    s, root = construct([p.tags for p in phrases], mode)
    dag = prune(weight_edges(flatten(s, root), phrases), k)
    for p in enumerate_paths(dag):
        assert p.weight >= 1
        for e in zip(p.nodes, p.nodes[1:]):
            assert p.weight <= dag.edges[e]
        assert p.weight <= len(phrases)


@settings(max_examples=80, deadline=None)
@given(tagged, st.floats(0.05, 1.0), st.floats(0.05, 1.0))
def test_theta_monotone(phrases, t1, t2):
    lo, hi = sorted((t1, t2))
    s, root = construct([p.tags for p in phrases], Mode.RELAXED)
    words = attach_words(s, root, phrases)
    dag = prune(weight_edges(flatten(s, root), phrases), 1)
    for p in enumerate_paths(dag):
        a = label_slots(p, words, lo).elements
        b = label_slots(p, words, hi).elements
        for x, y in zip(a, b):
            if x is SLOT:
                assert y is SLOT


@settings(max_examples=80, deadline=None)
@given(tagged)
def test_merged_normal_form(phrases):
    s, root = construct([p.tags for p in phrases], Mode.RELAXED)
    out = extract(s, root, phrases, ExtractConfig(min_edge_freq=1, top_k=1000))
    seen = set()
    for t in out:
        assert t.weight >= 1
        assert all(not (a is SLOT and b is SLOT) for a, b in zip(t.elements, t.elements[1:]))
        assert t.elements not in seen
        seen.add(t.elements)
    assert [(-t.weight, t.render()) for t in out] == sorted((-t.weight, t.render()) for t in out)
