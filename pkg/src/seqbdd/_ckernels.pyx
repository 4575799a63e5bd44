# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled graph kernels; drop-in replacement for ``_pykernels``."""
from libc.stdlib cimport malloc, calloc, free


def reaches(const long long[:] lo, const long long[:] hi, long long[:] stamp,
            long long epoch, long long src, long long dst):
    cdef Py_ssize_t n = lo.shape[0]
    cdef long long *stack
    cdef Py_ssize_t sp = 0
    cdef long long v, w
    cdef bint found = False
    if src == dst:
        return True
    if src < 2:
        return False
    # every node is pushed at most once
    stack = <long long *> malloc(n * sizeof(long long))
    if stack == NULL:
        raise MemoryError()
    stamp[src] = epoch
    stack[0] = src
    sp = 1
    while sp > 0:
        sp -= 1
        v = stack[sp]
        w = lo[v]
        if w == dst:
            found = True
            break
        if w >= 2 and stamp[w] != epoch:
            stamp[w] = epoch
            stack[sp] = w
            sp += 1
        w = hi[v]
        if w == dst:
            found = True
            break
        if w >= 2 and stamp[w] != epoch:
            stamp[w] = epoch
            stack[sp] = w
            sp += 1
    free(stack)
    return found


def walk(const long long[:] top, const long long[:] lo, const long long[:] hi,
         long long root, const long long[:] symbols, long long[:] out):
    cdef Py_ssize_t i, n = symbols.shape[0]
    cdef long long cur = root, v, s
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


def topo_order(const long long[:] lo, const long long[:] hi, long long root):
    cdef Py_ssize_t n = lo.shape[0]
    cdef unsigned char *state
    cdef long long *stack
    cdef unsigned char *phase
    cdef Py_ssize_t sp
    cdef long long v, w
    cdef list order = []
    if root < 2:
        return order
    state = <unsigned char *> calloc(n, 1)
    phase = <unsigned char *> calloc(n, 1)
    stack = <long long *> malloc(n * sizeof(long long))
    if state == NULL or phase == NULL or stack == NULL:
        free(state)
        free(phase)
        free(stack)
        raise MemoryError()
    state[root] = 1
    stack[0] = root
    sp = 1
    try:
        while sp > 0:
            v = stack[sp - 1]
            if phase[v] == 2:
                sp -= 1
                state[v] = 2
                order.append(v)
                continue
            w = lo[v] if phase[v] == 0 else hi[v]
            phase[v] += 1
            if w < 2:
                continue
            if state[w] == 1:
                return None
            if state[w] == 0:
                state[w] = 1
                stack[sp] = w
                sp += 1
        return order
    finally:
        free(state)
        free(phase)
        free(stack)
