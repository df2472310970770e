"""Power automaton of a semi-automaton and the exact quantities read off it.

Subsets are integer encodings into flat arrays of length ``2**n``, so every
construction here is exponential in ``n`` and guarded by a size cap.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Callable, Iterable, NamedTuple

import numpy as np

from . import kernels
from .core import AutomatonError, SemiAutomaton, StateSet, Word, from_mask, to_mask

log = logging.getLogger(__name__)

DEFAULT_CAP = 20
MAX_CAP = 24
CAP_ENV = "SYNCRO_CAP"

REACHABLE = "reachable"
FULL = "full"


class CapExceededError(ValueError):
    """The requested construction would exceed the power-set size cap."""


def resolve_cap(cap: int | None = None) -> int:
    """Effective cap: explicit value, else ``$SYNCRO_CAP``, else the default."""
    if cap is None:
        env = os.environ.get(CAP_ENV)
        if env:
            try:
                cap = int(env)
            except ValueError:
                raise CapExceededError(f"{CAP_ENV}={env!r} is not an integer") from None
        else:
            cap = DEFAULT_CAP
    if cap < 1 or cap > MAX_CAP:
        raise CapExceededError(f"power-set cap must lie in [1, {MAX_CAP}], got {cap}")
    return cap


def memory_estimate(n: int, k: int) -> int:
    """Approximate peak bytes for a power automaton on ``n`` states, ``k`` letters."""
    per_node = 4 * k + 8 * k + 4 + 8 + 4 + 8
    return per_node << n


def check_cap(A: SemiAutomaton, cap: int | None = None) -> int:
    cap = resolve_cap(cap)
    if A.n > cap:
        raise CapExceededError(
            f"n = {A.n} exceeds the power-set cap {cap}; "
            f"raise it with --cap or {CAP_ENV} (at most {MAX_CAP})"
        )
    if A.n > DEFAULT_CAP:
        log.warning("power automaton on %d states needs about %.1f MiB",
                    A.n, memory_estimate(A.n, A.k) / 2**20)
    return cap


def _popcounts(n: int) -> np.ndarray:
    counts = np.zeros(1 << n, dtype=np.int8)
    for q in range(n):
        lo = 1 << q
        counts[lo:2 * lo] = counts[:lo] + 1
    return counts


@dataclass(frozen=True, eq=False)
class PowerAutomaton:
    """Subset graph of ``base``, indexed by subset encoding.

    ``succ[a, S]`` is the image of subset ``S`` under letter ``a`` for every
    encoding. ``depth``/``parent``/``via`` hold the breadth-first search tree
    from the full state set; ``depth`` is ``-1`` off the reachable part.
    """

    base: SemiAutomaton
    scope: str
    succ: np.ndarray
    depth: np.ndarray
    parent: np.ndarray
    via: np.ndarray
    order: np.ndarray

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def start(self) -> int:
        return self.base.full_mask

    @cached_property
    def nodes(self) -> np.ndarray:
        """Node encodings in ascending order."""
        if self.scope == FULL:
            return np.arange(1, 1 << self.n, dtype=np.int64)
        return np.sort(self.order)

    @cached_property
    def sizes(self) -> np.ndarray:
        return _popcounts(self.n)

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, S) -> bool:
        mask = to_mask(S, self.n)
        if mask == 0 or mask >= 1 << self.n:
            return False
        return self.scope == FULL or self.depth[mask] >= 0

    def is_reachable(self, S) -> bool:
        mask = to_mask(S, self.n)
        return 0 < mask < 1 << self.n and bool(self.depth[mask] >= 0)

    def successor(self, S, a: int) -> StateSet:
        return from_mask(int(self.succ[a, to_mask(S, self.n)]))

    def depth_of(self, S) -> int | None:
        d = int(self.depth[to_mask(S, self.n)])
        return d if d >= 0 else None

    def word_to(self, S) -> Word | None:
        """Lexicographically least among the shortest words reaching ``S`` from Q."""
        mask = to_mask(S, self.n)
        if self.depth[mask] < 0:
            return None
        letters = []
        while mask != self.start:
            letters.append(int(self.via[mask]))
            mask = int(self.parent[mask])
        return tuple(reversed(letters))

    def edges(self) -> Iterable[tuple[int, int, int]]:
        """``(source, letter, target)`` encodings over the scope's nodes."""
        for s in self.nodes:
            s = int(s)
            for a in range(self.base.k):
                yield s, a, int(self.succ[a, s])


def successor_table(A: SemiAutomaton) -> np.ndarray:
    columns = np.asarray(A.delta, dtype=np.int64)
    return np.stack([kernels.subset_images(columns[:, a], A.n) for a in range(A.k)])


def build_power(A: SemiAutomaton, scope: str = REACHABLE, cap: int | None = None) -> PowerAutomaton:
    """Construct the power automaton (reachable part from Q, or all nonempty subsets)."""
    if scope not in (REACHABLE, FULL):
        raise ValueError(f"scope must be {REACHABLE!r} or {FULL!r}, got {scope!r}")
    check_cap(A, cap)
    succ = successor_table(A)
    depth, parent, via, order = kernels.bfs(succ, A.full_mask)
    return PowerAutomaton(A, scope, succ, depth, parent, via, order)


def _compact(pa: PowerAutomaton, nodes: np.ndarray) -> np.ndarray:
    position = np.full(1 << pa.n, -1, dtype=np.int64)
    position[nodes] = np.arange(len(nodes))
    compact = position[pa.succ[:, nodes]]
    assert (compact >= 0).all(), "node set not closed under the letters"
    return compact


@dataclass(frozen=True, eq=False)
class DistPartition:
    """Nerode classes of power-automaton nodes with singletons as finals.

    ``class_ids[i]`` is the class of ``nodes[i]``; classes are numbered in
    order of their smallest member encoding.
    """

    nodes: np.ndarray
    class_ids: np.ndarray
    count: int

    @cached_property
    def _position(self) -> dict[int, int]:
        return {int(s): i for i, s in enumerate(self.nodes)}

    def class_of(self, S) -> int:
        mask = to_mask(S)
        try:
            return int(self.class_ids[self._position[mask]])
        except KeyError:
            raise KeyError(f"{sorted(from_mask(mask))} is not a node of this partition") from None

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.count)]
        for s, c in zip(self.nodes, self.class_ids):
            out[int(c)].append(int(s))
        return out


def _partition(nodes: np.ndarray, compact_succ: np.ndarray, sizes: np.ndarray) -> DistPartition:
    accepting = (sizes == 1).astype(np.int64)
    class_ids = kernels.refine(compact_succ, accepting)
    count = int(class_ids.max()) + 1 if class_ids.size else 0
    return DistPartition(nodes, class_ids, count)


def dist_partition(A: SemiAutomaton, scope: str = FULL, cap: int | None = None,
                   power: PowerAutomaton | None = None) -> DistPartition:
    """Distinguishability classes over the reachable or full subset space."""
    pa = power if power is not None and power.scope == scope else build_power(A, scope, cap)
    nodes = pa.nodes
    return _partition(nodes, _compact(pa, nodes), pa.sizes[nodes])


def syn_state_complexity(A: SemiAutomaton, cap: int | None = None,
                         power: PowerAutomaton | None = None) -> int:
    """Number of states of the minimal complete DFA accepting Syn(A).

    Reachable singletons are merged into one accepting sink before
    minimisation; that happens automatically since all singletons are
    equivalent. Returns 1 when Syn(A) is empty.
    """
    pa = power if power is not None and power.scope == REACHABLE else build_power(A, REACHABLE, cap)
    partition = dist_partition(A, REACHABLE, power=pa)
    sc = partition.count
    assert sc <= 2 ** A.n - A.n, "sc exceeds 2^n - n"
    return sc


def shortest_reset(A: SemiAutomaton, cap: int | None = None,
                   power: PowerAutomaton | None = None) -> Word | None:
    """A shortest synchronizing word, lexicographically least among those; None if none exists."""
    pa = power if power is not None else build_power(A, REACHABLE, cap)
    sizes = pa.sizes
    for s in pa.order:
        if sizes[s] == 1:
            return pa.word_to(int(s))
    return None


class TwoSetResult(NamedTuple):
    ok: bool
    witness: tuple[StateSet, StateSet] | None


def two_set_partition(A: SemiAutomaton) -> DistPartition:
    """Distinguishability classes restricted to subsets of size one or two.

    Sets of size at most two are closed under every letter, so this subgraph
    decides distinguishability of 2-sets exactly at polynomial cost.
    """
    n = A.n
    masks = [1 << q for q in range(n)] + [(1 << p) | (1 << q) for p in range(n) for q in range(p + 1, n)]
    masks.sort()
    position = {m: i for i, m in enumerate(masks)}
    delta = A.delta
    succ = np.empty((A.k, len(masks)), dtype=np.int64)
    for i, m in enumerate(masks):
        states = from_mask(m)
        for a in range(A.k):
            succ[a, i] = position[sum(1 << t for t in {delta[q][a] for q in states})]
    sizes = np.array([bin(m).count("1") for m in masks], dtype=np.int64)
    return _partition(np.array(masks, dtype=np.int64), succ, sizes)


def all_2sets_distinguishable(A: SemiAutomaton) -> TwoSetResult:
    """Whether every two distinct 2-sets of states are distinguishable."""
    partition = two_set_partition(A)
    seen: dict[int, int] = {}
    for mask, cls in zip(partition.nodes, partition.class_ids):
        mask = int(mask)
        if bin(mask).count("1") != 2:
            continue
        cls = int(cls)
        if cls in seen:
            return TwoSetResult(False, (from_mask(seen[cls]), from_mask(mask)))
        seen[cls] = mask
    return TwoSetResult(True, None)


def all_nonsingletons_distinguishable(A: SemiAutomaton, cap: int | None = None,
                                      power: PowerAutomaton | None = None) -> TwoSetResult:
    """Whether all subsets of size >= 2 are pairwise distinguishable (full power set).

    For completely reachable automata with at least three letters this is
    strictly stronger than the 2-set test: a 3-set can be equivalent to a
    2-set while all 2-sets are pairwise distinguishable.
    """
    partition = dist_partition(A, FULL, cap, power)
    seen: dict[int, int] = {}
    for mask, cls in zip(partition.nodes, partition.class_ids):
        mask = int(mask)
        if bin(mask).count("1") < 2:
            continue
        cls = int(cls)
        if cls in seen:
            return TwoSetResult(False, (from_mask(seen[cls]), from_mask(mask)))
        seen[cls] = mask
    return TwoSetResult(True, None)


class ReachResult(NamedTuple):
    ok: bool
    missing: StateSet | None


def is_completely_reachable(A: SemiAutomaton, cap: int | None = None,
                            power: PowerAutomaton | None = None) -> ReachResult:
    """Whether every nonempty subset is Q·w for some word w.

    ``missing`` is a smallest unreached subset (by size, then encoding).
    """
    pa = power if power is not None else build_power(A, REACHABLE, cap)
    reached = pa.depth[1:] >= 0
    if reached.all():
        return ReachResult(True, None)
    unreached = np.flatnonzero(~reached) + 1
    sizes = pa.sizes[unreached]
    best = unreached[np.lexsort((unreached, sizes))[0]]
    return ReachResult(False, from_mask(int(best)))


def k_level_reachable(A: SemiAutomaton, k: int, cap: int | None = None,
                      power: PowerAutomaton | None = None) -> bool:
    """Whether every subset of size ``k`` is reachable from Q."""
    if not 1 <= k <= A.n:
        raise ValueError(f"level must lie in [1, {A.n}], got {k}")
    pa = power if power is not None else build_power(A, REACHABLE, cap)
    level = pa.sizes == k
    reached = int(np.count_nonzero(level & (pa.depth >= 0)))
    return reached == comb(A.n, k)


class BoundResult(NamedTuple):
    ok: bool
    violator: StateSet | None


def don_bound(n: int, k: int) -> int:
    """Reachability word-length bound n(n - k) for a k-subset."""
    return n * (n - k)


def reach_depth_bound_check(A: SemiAutomaton, bound: Callable[[int, int], int] = don_bound,
                            cap: int | None = None,
                            power: PowerAutomaton | None = None) -> BoundResult:
    """Check depth(S) <= bound(n, |S|) for every nonempty subset S."""
    pa = power if power is not None else build_power(A, REACHABLE, cap)
    if not is_completely_reachable(A, power=pa).ok:
        raise AutomatonError("depth bound check requires a completely reachable automaton")
    n = A.n
    limits = np.array([bound(n, size) for size in range(n + 1)], dtype=np.int64)
    depth = pa.depth[1:].astype(np.int64)
    over = np.flatnonzero(depth > limits[pa.sizes[1:]])
    if over.size:
        return BoundResult(False, from_mask(int(over[0]) + 1))
    return BoundResult(True, None)
