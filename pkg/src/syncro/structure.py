"""Structural analyses that need no power-set construction.

Rank profiles, orbits of the group generated by the permutational letters,
the (n-1)-level reachability characterisation, the binary-alphabet shape test,
search for cyclic words, and Don's reachability precondition.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .core import SemiAutomaton, Transformation, Word, compose
from .powerset import PowerAutomaton, k_level_reachable


@dataclass(frozen=True)
class DefectLetter:
    letter: int
    excluded: int
    collapsed: tuple[int, int]


@dataclass(frozen=True)
class RankProfile:
    ranks: tuple[int, ...]
    permutational: tuple[int, ...]
    defects: tuple[DefectLetter, ...]

    @property
    def m(self) -> int:
        """Number of letters of rank n - 1."""
        return len(self.defects)


def rank_profile(A: SemiAutomaton) -> RankProfile:
    ranks = tuple(f.rank for f in A.letters)
    permutational = tuple(a for a, r in enumerate(ranks) if r == A.n)
    defects = tuple(
        DefectLetter(a, f.excluded_state, f.collapsed_pair)
        for a, f in enumerate(A.letters)
        if A.n > 1 and f.rank == A.n - 1
    )
    return RankProfile(ranks, permutational, defects)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


@dataclass(frozen=True)
class StructReport:
    orbits: tuple[tuple[int, ...], ...]
    covered: bool
    group_nontrivial: bool
    group_transitive: bool
    applicable: bool
    condition: bool


def permutation_orbits(A: SemiAutomaton, letters=None) -> tuple[tuple[int, ...], ...]:
    """Orbits of the group generated by the given (default: all permutational) letters."""
    if letters is None:
        letters = rank_profile(A).permutational
    uf = _UnionFind(A.n)
    for a in letters:
        for q in range(A.n):
            uf.union(q, A.delta[q][a])
    groups: dict[int, list[int]] = {}
    for q in range(A.n):
        groups.setdefault(uf.find(q), []).append(q)
    return tuple(sorted(tuple(g) for g in groups.values()))


def orbit_analysis(A: SemiAutomaton) -> StructReport:
    """Orbit structure of the permutational letters against the defect letters.

    ``condition`` holds when some letter has rank n - 1, the group generated by
    the permutational letters is non-trivial, and every state shares an orbit
    with a state outside the image of some rank n - 1 letter. ``applicable`` is
    false when there are at least as many rank n - 1 letters as states, where
    the condition no longer characterises (n-1)-level reachability.
    """
    profile = rank_profile(A)
    orbits = permutation_orbits(A, profile.permutational)
    excluded = {d.excluded for d in profile.defects}
    covered = bool(excluded) and all(any(s in orb for s in excluded) for orb in orbits)
    nontrivial = any(not A.letters[a].image == tuple(range(A.n)) for a in profile.permutational)
    transitive = len(orbits) == 1
    applicable = profile.m < A.n
    condition = profile.m >= 1 and nontrivial and covered
    return StructReport(orbits, covered, nontrivial, transitive, applicable, condition)


class Prop1Result(NamedTuple):
    applicable: bool
    structural: bool
    reachable_n_minus_1: bool


def prop1_equivalence(A: SemiAutomaton, cap: int | None = None,
                      power: PowerAutomaton | None = None) -> Prop1Result:
    """Compare the orbit condition with exact reachability of all (n-1)-sets."""
    if A.n == 1:
        return Prop1Result(True, True, True)
    report = orbit_analysis(A)
    reachable = k_level_reachable(A, A.n - 1, cap=cap, power=power)
    if report.applicable:
        assert report.condition == reachable, "orbit condition disagrees with (n-1)-level reachability"
    return Prop1Result(report.applicable, report.condition, reachable)


class BinaryStructure(NamedTuple):
    ok: bool
    cyclic_letter: int | None
    defect_letter: int | None
    applicable: bool = True


def binary_structure(A: SemiAutomaton) -> BinaryStructure:
    """One letter a single n-cycle and the other of rank n - 1 (binary, n > 2)."""
    if A.k != 2:
        raise ValueError(f"binary_structure needs exactly two letters, got {A.k}")
    if A.n <= 2:
        return BinaryStructure(False, None, None, applicable=False)
    for c, d in ((0, 1), (1, 0)):
        if A.letters[c].is_cyclic and A.letters[d].rank == A.n - 1:
            return BinaryStructure(True, c, d)
    return BinaryStructure(False, None, None)


def is_circular(A: SemiAutomaton) -> bool:
    """Some letter is a single cycle on all states."""
    return any(f.is_cyclic for f in A.letters)


def cyclic_letters(A: SemiAutomaton) -> list[int]:
    return [a for a, f in enumerate(A.letters) if f.is_cyclic]


def permutation_words(A: SemiAutomaton, max_len: int) -> list[tuple[Word, Transformation]]:
    """Distinct permutations induced by words of length <= max_len, with representatives.

    Only words over permutational letters can induce permutations. The search
    extends words on the left, so among the shortest words for a permutation
    the representative is the least in colexicographic order (compare from the
    last letter).
    """
    perms = rank_profile(A).permutational
    identity = Transformation.identity(A.n)
    found = {identity: ()}
    out = [((), identity)]
    queue = deque([((), identity)])
    while queue:
        word, f = queue.popleft()
        if len(word) >= max_len:
            continue
        for a in perms:
            g = compose(A.letters[a], f)
            if g not in found:
                w = (a,) + word
                found[g] = w
                out.append((w, g))
                queue.append((w, g))
    return out


def cyclic_words(A: SemiAutomaton, max_len: int | None = None) -> list[tuple[Word, Transformation]]:
    """All distinct n-cycles induced by words within the budget (default n^2)."""
    if max_len is None:
        max_len = A.n * A.n
    return [(w, f) for w, f in permutation_words(A, max_len) if f.is_cyclic]


def find_cyclic_word(A: SemiAutomaton, max_len: int | None = None) -> Word | None:
    """A shortest word acting as a single n-cycle, or None within the budget.

    Ties among shortest words are broken colexicographically (see
    :func:`permutation_words`).
    """
    if max_len is None:
        max_len = A.n * A.n
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    found = cyclic_words(A, max_len)
    return found[0][0] if found else None


class DonWitness(NamedTuple):
    a: int
    b: int
    s: int
    t: int
    d: int


def don_precondition(A: SemiAutomaton) -> DonWitness | None:
    """Find letters certifying complete reachability without the power set.

    Requires a cyclic letter ``b`` and a rank n - 1 letter ``a`` such that the
    state ``s`` outside a's image reaches the doubly covered state ``t`` after
    ``d`` steps of ``b`` with gcd(d, n) = 1. Letter pairs are tried in order
    ``(a, b)``.
    """
    n = A.n
    if n < 2:
        return None
    cyclic = cyclic_letters(A)
    for a, f in enumerate(A.letters):
        if f.rank != n - 1:
            continue
        s = f.excluded_state
        t = f.image[f.collapsed_pair[0]]
        for b in cyclic:
            fb = A.letters[b]
            d, x = 0, s
            while x != t:
                x = fb.image[x]
                d += 1
            if 0 < d < n and gcd(d, n) == 1:
                return DonWitness(a, b, s, t, d)
    return None
