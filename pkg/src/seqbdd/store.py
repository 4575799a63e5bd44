"""Hash-consed SeqBDD node store.

A node is ``<top, lo, hi>``: ``hi`` (the 1-edge) emits ``top`` and continues,
``lo`` (the 0-edge) selects an alternative symbol at the same position.
Alternatives form a 0-chain kept in ascending symbol order; a chain ending
in ONE accepts the empty continuation.
"""
import sys
from array import array
from collections import namedtuple
from contextlib import contextmanager
from enum import Enum

from . import kernels
from .errors import InputError, StructuralError
from .symbols import Alphabet, Symbol

ZERO = 0
ONE = 1

Node = namedtuple("Node", "top lo hi")


class Mode(str, Enum):
    ORIGINAL = "original"
    RELAXED = "relaxed"


@contextmanager
def deep_recursion(limit=100_000):
    old = sys.getrecursionlimit()
    if old < limit:
        sys.setrecursionlimit(limit)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


class Store:
    """Append-only arena of SeqBDD nodes with a unique table.

    In ORIGINAL mode the unique table is keyed on ``(top, lo, hi)``; in
    RELAXED mode on ``(top, lo)`` and ``hi`` may be replaced in place by a
    union (see :mod:`seqbdd.relaxed`).
    """

    def __init__(self, mode=Mode.ORIGINAL, backend=None):
        self.mode = Mode(mode)
        self.backend = backend or kernels.DEFAULT_BACKEND
        self._k = kernels.load(self.backend)
        self.alphabet = Alphabet()
        self._top = array("q", [-1, -1])
        self._lo = array("q", [ZERO, ZERO])
        self._hi = array("q", [ZERO, ZERO])
        self._stamp = array("q", [0, 0])
        self._epoch = 0
        self._unique = {}
        self._union_cache = {}
        self._widening = False
        self._fallback = {}
        # bumped on every in-place hi mutation; invalidates cached analytics
        self.version = 0
        self.merges = 0
        self.rejected_shares = 0
        if self.mode is Mode.RELAXED:
            from .relaxed import _get_node_relaxed

            self._get_node = lambda sid, g0, g1: _get_node_relaxed(self, sid, g0, g1)
        else:
            self._get_node = self._get_node_original

    def __len__(self):
        """Number of non-terminal nodes in the arena (registered or not)."""
        return len(self._top) - 2

    # -- symbols ----------------------------------------------------------

    def intern(self, token):
        return self.alphabet.intern(token)

    def _sid(self, token):
        if isinstance(token, int) and not isinstance(token, bool):
            return token
        return self.alphabet.intern(token).id

    def _sids(self, phrase):
        return [self._sid(t) for t in phrase]

    def _lt(self, a, b):
        text = self.alphabet.text
        return text(a) < text(b)

    # -- node access ------------------------------------------------------

    def node(self, v):
        """Return ``Node(top, lo, hi)`` for a non-terminal ``v``."""
        if v < 2:
            raise ValueError(f"terminal {v} has no top symbol or children")
        return Node(self.alphabet[self._top[v]], self._lo[v], self._hi[v])

    def top(self, v):
        return self.alphabet[self._top[v]]

    def lo(self, v):
        return self._lo[v]

    def hi(self, v):
        return self._hi[v]

    def is_terminal(self, v):
        return v < 2

    def registered(self, v):
        """True iff ``v`` is the unique-table entry for its sharing key."""
        if v < 2:
            return False
        if self.mode is Mode.RELAXED:
            key = (self._top[v], self._lo[v])
        else:
            key = (self._top[v], self._lo[v], self._hi[v])
        return self._unique.get(key) == v

    def unique_items(self):
        return list(self._unique.items())

    def _alloc(self, sid, lo, hi):
        v = len(self._top)
        self._top.append(sid)
        self._lo.append(lo)
        self._hi.append(hi)
        self._stamp.append(0)
        return v

    def _set_hi(self, v, w):
        self._hi[v] = w
        self.version += 1
        self.merges += 1
        self._union_cache.clear()

    # -- construction -----------------------------------------------------

    def get_node(self, top, g0, g1):
        """Zero-suppressed, hash-consed node constructor (mode dependent)."""
        return self._get_node(self._sid(top), g0, g1)

    def _get_node_original(self, sid, g0, g1):
        if g1 == ZERO:
            return g0
        key = (sid, g0, g1)
        v = self._unique.get(key)
        if v is None:
            v = self._alloc(sid, g0, g1)
            self._unique[key] = v
        return v

    def build_unreduced(self, phrases):
        """Tree-shaped, unregistered graph encoding exactly ``phrases``.

        Each prefix's distinct next symbols form an ascending 0-chain, so the
        result does not depend on the input order.
        """
        seqs = _validated(phrases)
        ids = sorted({tuple(self._sids(p)) for p in seqs}, key=self._text_key)
        with deep_recursion():
            return self._build_tree(ids, 0, 0, len(ids))

    def _text_key(self, seq):
        text = self.alphabet.text
        return tuple(text(s) for s in seq)

    def _build_tree(self, seqs, depth, start, stop):
        # seqs[start:stop] share a prefix of length depth and are sorted, so
        # an exhausted sequence (the empty continuation) sorts first
        accept = False
        groups = []
        i = start
        if len(seqs[i]) == depth:
            accept = True
            i += 1
        while i < stop:
            s = seqs[i][depth]
            j = i + 1
            while j < stop and seqs[j][depth] == s:
                j += 1
            groups.append((s, i, j))
            i = j
        tail = ONE if accept else ZERO
        for s, i, j in reversed(groups):
            child = self._build_tree(seqs, depth + 1, i, j)
            tail = self._alloc(s, tail, child)
        return tail

    def reduce(self, v):
        """Bottom-up ``get_node(top, reduce(lo), reduce(hi))``, memoized on input id."""
        memo = {ZERO: ZERO, ONE: ONE}
        lo_col, hi_col, top_col = self._lo, self._hi, self._top
        active = set()
        stack = [v]
        while stack:
            x = stack[-1]
            if x in memo:
                stack.pop()
                continue
            lo, hi = lo_col[x], hi_col[x]
            if x not in active:
                active.add(x)
                pending = False
                # lo is reduced before hi, matching the argument order
                for c in (hi, lo):
                    if c not in memo:
                        if c in active:
                            raise StructuralError(f"cycle through node {c}")
                        stack.append(c)
                        pending = True
                if pending:
                    continue
            stack.pop()
            active.discard(x)
            memo[x] = self._get_node(top_col[x], memo[lo], memo[hi])
        return memo[v]

    def union(self, p, q):
        """Root accepting ``language(p) | language(q)``."""
        with deep_recursion():
            return self._union(p, q)

    def _union(self, p, q):
        if p == ZERO:
            return q
        if q == ZERO:
            return p
        if p == q:
            return p
        key = (p, q)
        w = self._union_cache.get(key)
        if w is not None:
            return w
        version = self.version
        # ONE behaves as an empty 0-chain ending in ONE: its "top" sorts
        # after every symbol
        if p == ONE:
            tq = self._top[q]
            w = self._get_node(tq, self._union(ONE, self._lo[q]), self._hi[q])
        elif q == ONE:
            tp = self._top[p]
            w = self._get_node(tp, self._union(self._lo[p], ONE), self._hi[p])
        else:
            tp, tq = self._top[p], self._top[q]
            if tp == tq:
                w = self._get_node(
                    tp,
                    self._union(self._lo[p], self._lo[q]),
                    self._union(self._hi[p], self._hi[q]),
                )
            elif self._lt(tp, tq):
                w = self._get_node(tp, self._union(self._lo[p], q), self._hi[p])
            else:
                w = self._get_node(tq, self._union(p, self._lo[q]), self._hi[q])
        if self.version == version:
            self._union_cache[key] = w
        return w

    def chain(self, phrase):
        """SeqBDD accepting exactly ``{phrase}``."""
        if not phrase:
            raise InputError("phrase must be non-empty")
        v = ONE
        for sid in reversed(self._sids(phrase)):
            v = self._get_node(sid, ZERO, v)
        return v

    def construct(self, phrases, incremental=False):
        """Reduced SeqBDD for ``phrases``.

        The default path reduces the unreduced tree; ``incremental=True``
        folds union over single-phrase chains in the given order.
        """
        seqs = _validated(phrases)
        with deep_recursion():
            if incremental:
                root = ZERO
                for p in seqs:
                    root = self._union(root, self.chain(p))
                return root
            return self.reduce(self.build_unreduced(seqs))

    # -- queries ----------------------------------------------------------

    def reaches(self, src, dst):
        self._epoch += 1
        return bool(self._k.reaches(self._lo, self._hi, self._stamp, self._epoch, src, dst))

    def walk(self, root, phrase):
        """Nodes visited by ``phrase`` from ``root``, or ``None`` if rejected.

        Unknown symbols reject without being interned.
        """
        sids = array("q")
        for t in phrase:
            if isinstance(t, int) and not isinstance(t, bool):
                sids.append(t)
                continue
            sym = self.alphabet.lookup(t)
            if sym is None:
                return None
            sids.append(sym.id)
        out = array("q", bytes(8 * len(sids)))
        n = self._k.walk(self._top, self._lo, self._hi, root, sids, out)
        if n < 0:
            return None
        return out.tolist()

    def contains(self, root, phrase):
        return self.walk(root, phrase) is not None

    def topo_order(self, root):
        """Reachable non-terminals, children before parents."""
        order = self._k.topo_order(self._lo, self._hi, root)
        if order is None:
            raise StructuralError(f"graph under node {root} is cyclic")
        return order

    def chain_of(self, v):
        """Non-terminals on the 0-chain starting at ``v`` and its terminal."""
        nodes = []
        while v >= 2:
            nodes.append(v)
            v = self._lo[v]
        return nodes, v

    def node_count(self, root):
        return len(self.topo_order(root))

    def count_sequences(self, root):
        counts = {ZERO: 0, ONE: 1}
        for v in self.topo_order(root):
            counts[v] = counts[self._lo[v]] + counts[self._hi[v]]
        return counts[root]

    def enumerate(self, root, limit=None):
        """Accepted sequences (as symbol-text tuples) in lexicographic order."""
        self.topo_order(root)  # rejects cycles
        out = []
        if limit is not None and limit <= 0:
            return out
        text = self.alphabet.text
        prefix = []
        # frames: (chain nodes, next index); the empty continuation sorts first
        stack = []

        def open_frame(v):
            nodes, term = self.chain_of(v)
            if term == ONE:
                out.append(tuple(prefix))
            stack.append([nodes, 0])

        open_frame(root)
        while stack and (limit is None or len(out) < limit):
            frame = stack[-1]
            nodes, i = frame
            if i == len(nodes):
                stack.pop()
                if prefix:
                    prefix.pop()
                continue
            frame[1] = i + 1
            v = nodes[i]
            prefix.append(text(self._top[v]))
            open_frame(self._hi[v])
        if limit is not None:
            del out[limit:]
        return out

    def check_invariants(self, root=None):
        """Raise ``StructuralError`` if a store-wide invariant is violated."""
        for v in range(2, len(self._top)):
            if self._hi[v] == ZERO:
                raise StructuralError(f"node {v} has hi == ZERO")
        seen = {}
        for key, v in self._unique.items():
            if v in seen:
                raise StructuralError(f"node {v} registered under two keys")
            seen[v] = key
        if root is not None:
            for v in self.topo_order(root):
                nodes, _ = self.chain_of(v)
                texts = [self.alphabet.text(self._top[n]) for n in nodes]
                if any(a >= b for a, b in zip(texts, texts[1:])):
                    raise StructuralError(f"0-chain at {v} is not strictly ascending: {texts}")

    # -- export -----------------------------------------------------------

    def to_dot(self, root, name="seqbdd"):
        lines = [f"digraph {name} {{", '  node [shape=circle];']
        order = self.topo_order(root)
        terms = set()
        for v in reversed(order):
            label = self.alphabet.text(self._top[v]).replace('"', '\\"')
            lines.append(f'  n{v} [label="{label}"];')
        for v in reversed(order):
            for child, style in ((self._hi[v], "solid"), (self._lo[v], "dashed")):
                if child < 2:
                    terms.add(child)
                lines.append(f"  n{v} -> n{child} [style={style}];")
        if root < 2:
            terms.add(root)
        for t in sorted(terms):
            lines.append(f'  n{t} [shape=box, label="{t}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _validated(phrases):
    seqs = [tuple(p) for p in phrases]
    if not seqs:
        raise InputError("phrase list is empty")
    for p in seqs:
        if not p:
            raise InputError("phrases must be non-empty")
    return seqs


def construct(phrases, mode=Mode.ORIGINAL, backend=None):
    """Build a fresh store for ``phrases`` and return ``(store, root)``."""
    store = Store(mode, backend=backend)
    if store.mode is Mode.RELAXED:
        from .relaxed import construct_relaxed

        return store, construct_relaxed(store, phrases)
    return store, store.construct(phrases)
