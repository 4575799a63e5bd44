"""Pure-Python graph kernels.

Same signatures as the compiled ``_ckernels`` module. Node columns are
``array('q')`` objects; ids 0 and 1 are the ZERO and ONE terminals.
"""


def reaches(lo, hi, stamp, epoch, src, dst):
    """True iff ``dst`` is reachable from ``src`` along lo/hi edges.

    ``stamp`` is a scratch column; nodes are marked with ``epoch``, which the
    caller must bump between calls so no clearing pass is needed.
    """
    if src == dst:
        return True
    if src < 2:
        return False
    stamp[src] = epoch
    stack = [src]
    pop = stack.pop
    push = stack.append
    while stack:
        v = pop()
        w = lo[v]
        if w == dst:
            return True
        if w >= 2 and stamp[w] != epoch:
            stamp[w] = epoch
            push(w)
        w = hi[v]
        if w == dst:
            return True
        if w >= 2 and stamp[w] != epoch:
            stamp[w] = epoch
            push(w)
    return False


def walk(top, lo, hi, root, symbols, out):
    """Trace a symbol-id sequence from ``root``.

    Writes the matched node at each position into ``out`` and returns the
    phrase length when the phrase is accepted, -1 otherwise.
    """
    cur = root
    n = len(symbols)
    for i in range(n):
        s = symbols[i]
        v = cur
        while v >= 2 and top[v] != s:
            v = lo[v]
        if v < 2:
            return -1
        out[i] = v
        cur = hi[v]
    while cur >= 2:
        cur = lo[cur]
    return n if cur == 1 else -1


def topo_order(lo, hi, root):
    """Post-order (children first) list of non-terminals reachable from ``root``.

    Returns ``None`` if a cycle is found.
    """
    if root < 2:
        return []
    state = {}  # 1 = on stack, 2 = done
    order = []
    state[root] = 1
    stack = [(root, 0)]
    while stack:
        v, k = stack[-1]
        if k == 2:
            stack.pop()
            state[v] = 2
            order.append(v)
            continue
        stack[-1] = (v, k + 1)
        w = lo[v] if k == 0 else hi[v]
        if w < 2:
            continue
        s = state.get(w, 0)
        if s == 1:
            return None
        if s == 0:
            state[w] = 1
            stack.append((w, 0))
    return order
