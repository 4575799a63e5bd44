"""Per-node surface-word multisets and their relative frequencies."""
from collections import Counter

from .errors import TracingError, UsageError


class WordTable:
    """Maps node id -> Counter of surface words."""

    def __init__(self):
        self.entries = {}

    def __contains__(self, u):
        return bool(self.entries.get(u))

    def words(self, u):
        return dict(self.entries.get(u, {}))

    def count(self, u, word):
        return self.entries.get(u, {}).get(word, 0)

    def total(self, u):
        return sum(self.entries.get(u, {}).values())

    def grand_total(self):
        return sum(sum(c.values()) for c in self.entries.values())

    def record_word(self, u, word, n=1):
        if u < 2:
            raise UsageError(f"cannot record words on terminal node {u}")
        self.entries.setdefault(u, Counter())[word] += n

    def merge_words(self, dst, src):
        """Move all of ``src``'s counts onto ``dst``."""
        if dst < 2 or src < 2:
            raise UsageError("merge_words needs two non-terminal nodes")
        if dst == src:
            return
        moved = self.entries.pop(src, None)
        if moved:
            self.entries.setdefault(dst, Counter()).update(moved)

    def rel_freq(self, u, word):
        total = self.total(u)
        if total == 0:
            raise UsageError(f"node {u} has no recorded words")
        return self.entries[u].get(word, 0) / total

    def dominant(self, u):
        """``(word, fraction)`` of the most frequent word; ties go to the smaller word."""
        counts = self.entries.get(u)
        if not counts:
            raise UsageError(f"node {u} has no recorded words")
        word, n = min(counts.items(), key=lambda kv: (-kv[1], kv[0]))
        return word, n / sum(counts.values())


def attach_words(store, root, phrases, table=None):
    """Record every phrase position's word on the node its walk visits.

    ``phrases`` are sequences of ``(word, tag)`` pairs; the graph must have
    been built over the tags.
    """
    table = table if table is not None else WordTable()
    for phrase in phrases:
        tokens = list(phrase)
        tags = [t for _, t in tokens]
        path = store.walk(root, tags)
        if path is None:
            raise TracingError(tags)
        for u, (word, _) in zip(path, tokens):
            table.record_word(u, word)
    return table
