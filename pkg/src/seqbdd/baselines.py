"""Trie and minimal acyclic DFA baselines for size comparisons."""
from dataclasses import dataclass

from .errors import InputError, SeqBDDError
from .store import Mode, construct


@dataclass(frozen=True)
class AutomatonStats:
    states: int
    transitions: int


TrieStats = DfaStats = AutomatonStats


class Automaton:
    """Edge-labelled acyclic automaton: ``delta[state]`` maps label -> state."""

    def __init__(self, delta, final, start=0):
        self.delta = delta
        self.final = final
        self.start = start

    @property
    def stats(self):
        return AutomatonStats(len(self.delta), sum(len(d) for d in self.delta))

    def accepts(self, phrase):
        s = self.start
        for label in phrase:
            s = self.delta[s].get(label)
            if s is None:
                return False
        return s in self.final


def build_trie(phrases):
    """Prefix tree over ``phrases``; returns ``(trie, stats)``."""
    phrases = [tuple(p) for p in phrases]
    if not phrases:
        raise InputError("phrase list is empty")
    delta = [{}]
    final = set()
    for p in phrases:
        s = 0
        for label in p:
            nxt = delta[s].get(label)
            if nxt is None:
                nxt = len(delta)
                delta.append({})
                delta[s][label] = nxt
            s = nxt
        final.add(s)
    trie = Automaton(delta, final)
    return trie, trie.stats


def minimize(trie):
    """Minimal acyclic DFA for the trie's language.

    States are merged bottom-up when their finality and canonicalised
    outgoing label -> successor maps coincide.
    """
    order = []
    seen = set()
    stack = [(trie.start, False)]
    while stack:
        s, done = stack.pop()
        if done:
            order.append(s)
            continue
        if s in seen:
            continue
        seen.add(s)
        stack.append((s, True))
        for t in trie.delta[s].values():
            if t not in seen:
                stack.append((t, False))

    canon = {}
    register = {}
    delta = []
    final = set()
    for s in order:  # children first
        edges = tuple(sorted((label, canon[t]) for label, t in trie.delta[s].items()))
        sig = (s in trie.final, edges)
        c = register.get(sig)
        if c is None:
            c = len(delta)
            register[sig] = c
            delta.append(dict(edges))
            if s in trie.final:
                final.add(c)
        canon[s] = c
    return Automaton(delta, final, start=canon[trie.start])


class SizeBoundError(SeqBDDError):
    pass


@dataclass(frozen=True)
class SizeReport:
    trie_states: int
    trie_transitions: int
    dfa_states: int
    dfa_transitions: int
    seqbdd_nodes: int
    relaxed_nodes: int

    # labelled nodes for SeqBDD vs labelled edges for the DFA
    @property
    def labeled_objects(self):
        return {"seqbdd": self.seqbdd_nodes, "dfa": self.dfa_transitions}

    def csv_row(self, input_id):
        fields = (
            input_id,
            self.trie_states,
            self.trie_transitions,
            self.dfa_states,
            self.dfa_transitions,
            self.seqbdd_nodes,
            self.relaxed_nodes,
        )
        return ",".join(str(f) for f in fields)


CSV_HEADER = "input_id,trie_states,trie_transitions,dfa_states,dfa_transitions,seqbdd_nodes,relaxed_nodes"


def compare_sizes(phrases, backend=None):
    phrases = [tuple(p) for p in phrases]
    trie, tstats = build_trie(phrases)
    dstats = minimize(trie).stats
    store, root = construct(phrases, Mode.ORIGINAL, backend=backend)
    rstore, rroot = construct(phrases, Mode.RELAXED, backend=backend)
    report = SizeReport(
        tstats.states,
        tstats.transitions,
        dstats.states,
        dstats.transitions,
        store.node_count(root),
        rstore.node_count(rroot),
    )
    if report.seqbdd_nodes > report.dfa_transitions:
        raise SizeBoundError(
            f"SeqBDD has {report.seqbdd_nodes} nodes but the minimal DFA only "
            f"{report.dfa_transitions} transitions"
        )
    return report
