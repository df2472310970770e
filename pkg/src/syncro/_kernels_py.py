"""Vectorised numpy implementations of the subset-space kernels.

Used when the compiled ``_kernels`` extension is unavailable, and as the
reference the compiled version is tested against. Signatures and return
dtypes match the extension exactly.
"""

import numpy as np

UNSEEN = -1


def subset_images(column, n):
    """Image of every subset of ``[n]`` under one letter.

    ``column[q]`` is the letter's successor of ``q``. Returns a uint32 array of
    length ``2**n`` indexed by subset encoding.
    """
    column = np.asarray(column, dtype=np.int64)
    out = np.zeros(1 << n, dtype=np.uint32)
    for q in range(n):
        lo = 1 << q
        out[lo:2 * lo] = out[:lo] | np.uint32(1 << int(column[q]))
    return out


def bfs(succ, start):
    """Breadth-first search over a successor table.

    ``succ`` has shape ``(k, N)``. Letters are tried in index order and nodes
    are expanded in discovery order, so the parent chain of every node spells
    its lexicographically least shortest word.

    Returns ``(depth, parent, via, order)``: int32 depth (``-1`` when
    unreached), int64 parent node, int32 letter of the last step, and the
    int64 node indices in discovery order.
    """
    succ = np.asarray(succ)
    k, N = succ.shape
    depth = np.full(N, UNSEEN, dtype=np.int32)
    parent = np.full(N, UNSEEN, dtype=np.int64)
    via = np.full(N, UNSEEN, dtype=np.int32)
    depth[start] = 0
    frontier = np.array([start], dtype=np.int64)
    chunks = [frontier]
    level = 0
    while frontier.size:
        level += 1
        # node-major, letter-minor order reproduces FIFO expansion
        cand = succ[:, frontier].T.ravel().astype(np.int64)
        src = np.repeat(frontier, k)
        letter = np.tile(np.arange(k, dtype=np.int32), frontier.size)
        fresh = depth[cand] == UNSEEN
        cand, src, letter = cand[fresh], src[fresh], letter[fresh]
        if not cand.size:
            break
        _, first = np.unique(cand, return_index=True)
        first.sort()
        frontier = cand[first]
        depth[frontier] = level
        parent[frontier] = src[first]
        via[frontier] = letter[first]
        chunks.append(frontier)
    return depth, parent, via, np.concatenate(chunks)


def refine(succ, init):
    """Coarsest partition compatible with ``init`` and stable under ``succ``.

    Moore-style refinement on a compact node space: ``succ`` has shape
    ``(k, M)`` with values in ``[0, M)``; ``init`` holds an initial class per
    node. Returns int32 class ids numbered by each class's smallest node index.
    """
    succ = np.asarray(succ, dtype=np.int64)
    cls = _normalise(np.asarray(init, dtype=np.int64))
    count = int(cls.max()) + 1 if cls.size else 0
    while True:
        keys = [cls[row] for row in succ[::-1]] + [cls]
        order = np.lexsort(keys)
        stacked = np.stack([key[order] for key in keys])
        change = np.any(stacked[:, 1:] != stacked[:, :-1], axis=0)
        new_sorted = np.concatenate(([0], np.cumsum(change)))
        new = np.empty_like(cls)
        new[order] = new_sorted
        new_count = int(new_sorted[-1]) + 1 if new_sorted.size else 0
        cls = new
        if new_count == count:
            break
        count = new_count
    return _normalise(cls).astype(np.int32)


def _normalise(cls):
    if not cls.size:
        return cls
    _, first, inverse = np.unique(cls, return_index=True, return_inverse=True)
    rank = np.empty(first.size, dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(first.size)
    return rank[inverse.ravel()]
