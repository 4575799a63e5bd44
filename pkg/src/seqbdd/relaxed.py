"""Relaxed SeqBDD: node sharing keyed on ``(top, lo)`` with a cycle guard.

When a node with the same top symbol and 0-child already exists, its
1-child is widened in place to ``union(g1, u.hi)`` instead of creating a new
node, so phrases that agree on everything leading to the 0-terminal are
generalised together.
"""
from .store import ONE, ZERO, Mode, Store, _validated, deep_recursion
from .errors import UsageError


def reaches(store, src, dst):
    """True iff ``dst`` is reachable from ``src`` along lo and hi edges."""
    return store.reaches(src, dst)


def get_node_relaxed(store, top, g0, g1):
    if store.mode is not Mode.RELAXED:
        raise UsageError("get_node_relaxed needs a store in relaxed mode")
    with deep_recursion():
        return _get_node_relaxed(store, store._sid(top), g0, g1)


def _get_node_relaxed(store, sid, g0, g1):
    if g1 == ZERO:
        return g0
    key = (sid, g0)
    u = store._unique.get(key)
    if u is None:
        v = store._alloc(sid, g0, g1)
        store._unique[key] = v
        return v
    if store._hi[u] == g1:
        return u
    # The widening union itself runs without widening: nested requests for
    # a taken key fall back to exact sharing. Otherwise each fallback node
    # opens a fresh key one level up and the union need not terminate.
    if not store._widening:
        # u.hi <- union(g1, u.hi) closes a cycle exactly when the new
        # 1-child reaches u; g1 reaching u is the cheap early reject
        if not store.reaches(g1, u):
            old = store._hi[u]
            store._widening = True
            try:
                w = store._union(g1, old)
            finally:
                store._widening = False
            if w == old:
                return u
            if not store.reaches(w, u):
                store._set_hi(u, w)
                return u
    store.rejected_shares += 1
    # the key stays with u; the fallback node is never widened, so it can be
    # hash-consed on the full triple like an original-mode node
    triple = (sid, g0, g1)
    v = store._fallback.get(triple)
    if v is None:
        v = store._fallback[triple] = store._alloc(sid, g0, g1)
    return v


def construct_relaxed(store, phrases, sort_inputs=True):
    """Relaxed SeqBDD for ``phrases`` in ``store`` (which must be relaxed).

    With ``sort_inputs`` (the default) the unreduced tree is reduced, which is
    independent of input order. Without it, chains are unioned one by one in
    the given order, where greedy sharing can depend on that order.
    """
    if store.mode is not Mode.RELAXED:
        raise UsageError("construct_relaxed needs a store in relaxed mode")
    seqs = _validated(phrases)
    return store.construct(seqs, incremental=not sort_inputs)


def new_relaxed_store(backend=None):
    return Store(Mode.RELAXED, backend=backend)
