"""Brute-force reference implementations for cross-checking.

Deliberately naive and independent of :mod:`syncro.powerset`: subsets are
sorted tuples of states, reachability is a plain queue search, and
distinguishability is table filling over explicit pairs. Nothing here is
shared with the bit-vector code path.
"""

from collections import deque
from itertools import combinations

ORACLE_CAP = 12


class OracleCapError(ValueError):
    pass


def _guard(A):
    if A.n > ORACLE_CAP:
        raise OracleCapError(f"oracle refuses n = {A.n} > {ORACLE_CAP}")


def _image(A, subset, a):
    return tuple(sorted({A.delta[q][a] for q in subset}))


def _reachable(A):
    start = tuple(range(A.n))
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for a in range(A.k):
            t = _image(A, s, a)
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def oracle_complete_reachable(A):
    """True iff every nonempty subset is reached from the full state set."""
    _guard(A)
    return len(_reachable(A)) == 2 ** A.n - 1


def oracle_sc(A):
    """State count of the minimal complete DFA for the synchronizing words.

    Reachable subsets with all singletons merged into one accepting state,
    then pairwise table filling; the answer is the number of classes.
    """
    _guard(A)
    nodes = sorted(_reachable(A), key=lambda s: (len(s), s))
    sink = "SINK"
    merged = [s for s in nodes if len(s) > 1]
    has_sink = len(merged) < len(nodes)
    states = merged + ([sink] if has_sink else [])

    def step(s, a):
        if s == sink:
            return sink
        t = _image(A, s, a)
        return sink if len(t) == 1 else t

    def accepting(s):
        return s == sink

    # backward table filling via predecessor lists
    preds = {s: [[] for _ in range(A.k)] for s in states}
    for s in states:
        for a in range(A.k):
            preds[step(s, a)][a].append(s)
    marked = set()
    work = []
    for x, y in combinations(states, 2):
        if accepting(x) != accepting(y):
            marked.add(frozenset((x, y)))
            work.append((x, y))
    while work:
        x, y = work.pop()
        for a in range(A.k):
            for u in preds[x][a]:
                for v in preds[y][a]:
                    if u == v:
                        continue
                    pair = frozenset((u, v))
                    if pair not in marked:
                        marked.add(pair)
                        work.append((u, v))
    representatives = []
    for s in states:
        if not any(frozenset((s, r)) not in marked for r in representatives):
            representatives.append(s)
    return len(representatives)


def separating_word(A, first, second):
    """A word sending exactly one of two subsets to a singleton, or None."""
    start = (tuple(sorted(first)), tuple(sorted(second)))
    seen = {start: ()}
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        word = seen[(x, y)]
        if (len(x) == 1) != (len(y) == 1):
            return word
        for a in range(A.k):
            nxt = (_image(A, x, a), _image(A, y, a))
            if nxt not in seen:
                seen[nxt] = word + (a,)
                queue.append(nxt)
    return None


def oracle_2set_distinguishable(A):
    """True iff every two distinct 2-sets have a separating word."""
    _guard(A)
    two_sets = list(combinations(range(A.n), 2))
    for x, y in combinations(two_sets, 2):
        if separating_word(A, x, y) is None:
            return False
    return True
