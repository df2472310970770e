# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-space kernels.

Same contracts as ``syncro._kernels_py``; see that module for semantics.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint32_t, int32_t, int64_t

cnp.import_array()

DEF UNSEEN = -1


def subset_images(column, int n):
    cdef int64_t[::1] col = np.ascontiguousarray(column, dtype=np.int64)
    out_arr = np.zeros(1 << n, dtype=np.uint32)
    cdef uint32_t[::1] out = out_arr
    cdef Py_ssize_t q, s, lo
    cdef uint32_t bit
    for q in range(n):
        lo = 1 << q
        bit = (<uint32_t>1) << col[q]
        for s in range(lo):
            out[lo + s] = out[s] | bit
    return out_arr


def bfs(succ_in, Py_ssize_t start):
    succ_arr = np.ascontiguousarray(succ_in, dtype=np.int64)
    cdef int64_t[:, ::1] succ = succ_arr
    cdef Py_ssize_t k = succ.shape[0], N = succ.shape[1]
    depth_arr = np.full(N, UNSEEN, dtype=np.int32)
    parent_arr = np.full(N, UNSEEN, dtype=np.int64)
    via_arr = np.full(N, UNSEEN, dtype=np.int32)
    order_arr = np.empty(N, dtype=np.int64)
    cdef int32_t[::1] depth = depth_arr
    cdef int64_t[::1] parent = parent_arr
    cdef int32_t[::1] via = via_arr
    cdef int64_t[::1] order = order_arr
    cdef Py_ssize_t head = 0, tail = 0, v, w, a
    depth[start] = 0
    order[tail] = start
    tail += 1
    while head < tail:
        v = order[head]
        head += 1
        for a in range(k):
            w = succ[a, v]
            if depth[w] == UNSEEN:
                depth[w] = depth[v] + 1
                parent[w] = v
                via[w] = <int32_t>a
                order[tail] = w
                tail += 1
    return depth_arr, parent_arr, via_arr, order_arr[:tail].copy()


cdef void _counting_sort(int64_t[::1] key, int64_t[::1] src, int64_t[::1] dst,
                         int64_t[::1] count, Py_ssize_t nkeys) noexcept nogil:
    """Stable sort of the node list ``src`` by ``key[node]`` into ``dst``."""
    cdef Py_ssize_t i, M = src.shape[0]
    cdef int64_t total = 0, c
    for i in range(nkeys + 1):
        count[i] = 0
    for i in range(M):
        count[key[src[i]] + 1] += 1
    for i in range(nkeys):
        count[i + 1] += count[i]
    for i in range(M):
        c = key[src[i]]
        dst[count[c]] = src[i]
        count[c] += 1


def refine(succ_in, init):
    succ_arr = np.ascontiguousarray(succ_in, dtype=np.int64)
    cdef int64_t[:, ::1] succ = succ_arr
    cdef Py_ssize_t k = succ.shape[0], M = succ.shape[1]
    cls_arr = _normalise(np.ascontiguousarray(init, dtype=np.int64))
    cdef int64_t[::1] cls = cls_arr
    new_arr = np.empty(M, dtype=np.int64)
    cdef int64_t[::1] new = new_arr
    key_arr = np.empty(M, dtype=np.int64)
    cdef int64_t[::1] key = key_arr
    buf_a = np.arange(M, dtype=np.int64)
    buf_b = np.empty(M, dtype=np.int64)
    cdef int64_t[::1] src, dst, tmp
    count_arr = np.empty(M + 2, dtype=np.int64)
    cdef int64_t[::1] count = count_arr
    cdef Py_ssize_t i, a, v, u, nclasses, new_count
    cdef bint differs
    if M == 0:
        return np.zeros(0, dtype=np.int32)
    nclasses = 0
    for i in range(M):
        if cls[i] + 1 > nclasses:
            nclasses = cls[i] + 1
    while True:
        src = buf_a
        dst = buf_b
        for i in range(M):
            src[i] = i
        # LSD radix: successor classes from the last letter down, then own class
        for a in range(k - 1, -2, -1):
            for i in range(M):
                key[i] = cls[succ[a, i]] if a >= 0 else cls[i]
            _counting_sort(key, src, dst, count, nclasses)
            tmp = src
            src = dst
            dst = tmp
        new_count = 0
        new[src[0]] = 0
        for i in range(1, M):
            v = src[i]
            u = src[i - 1]
            differs = cls[v] != cls[u]
            a = 0
            while not differs and a < k:
                differs = cls[succ[a, v]] != cls[succ[a, u]]
                a += 1
            if differs:
                new_count += 1
            new[v] = new_count
        new_count += 1
        for i in range(M):
            cls[i] = new[i]
        if new_count == nclasses:
            break
        nclasses = new_count
    return _normalise(cls_arr).astype(np.int32)


def _normalise(cls):
    if not cls.size:
        return cls
    _, first, inverse = np.unique(cls, return_index=True, return_inverse=True)
    rank = np.empty(first.size, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(first.size)
    return rank[inverse.ravel()]
