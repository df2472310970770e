"""Deterministic complete semi-automata and the transformations words induce.

States are the integers ``0..n-1`` and letters are indices ``0..k-1``; letter
names are display metadata only. A word is a tuple of letter indices, applied
left to right. State sets are exposed as ``frozenset`` and handled internally
as integer bit masks (bit ``q`` set iff state ``q`` is a member).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Word = tuple[int, ...]
StateSet = frozenset[int]

EPSILON = "ε"


class AutomatonError(ValueError):
    """Raised for malformed automata, words, or state sets."""


@dataclass(frozen=True)
class Transformation:
    """A total map ``[n] -> [n]`` given by its image array."""

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if any(not 0 <= x < n for x in self.image):
            raise AutomatonError(f"transformation entries must lie in [0, {n})")

    @classmethod
    def identity(cls, n: int) -> Transformation:
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, q: int) -> int:
        return self.image[q]

    def __len__(self) -> int:
        return len(self.image)

    def then(self, other: Transformation) -> Transformation:
        """Apply ``self`` first, then ``other``."""
        return compose(self, other)

    @cached_property
    def rank(self) -> int:
        return len(set(self.image))

    @property
    def is_permutation(self) -> bool:
        return self.rank == self.n

    @cached_property
    def is_cyclic(self) -> bool:
        """True iff the map is a permutation with a single cycle of length n."""
        if not self.is_permutation:
            return False
        q, steps = self.image[0], 1
        while q != 0:
            q = self.image[q]
            steps += 1
        return steps == self.n

    @property
    def excluded_state(self) -> int | None:
        """For a rank n-1 map, the unique state outside the image."""
        if self.rank != self.n - 1:
            return None
        return (set(range(self.n)) - set(self.image)).pop()

    @property
    def collapsed_pair(self) -> tuple[int, int] | None:
        """For a rank n-1 map, the unique 2-set of states sharing an image."""
        if self.rank != self.n - 1:
            return None
        first: dict[int, int] = {}
        for q, x in enumerate(self.image):
            if x in first:
                return (first[x], q)
            first[x] = q
        raise AssertionError("unreachable")

    def orbit(self, q: int) -> list[int]:
        out = [q]
        x = self.image[q]
        while x != q and x not in out:
            out.append(x)
            x = self.image[x]
        return out

    def power(self, e: int) -> Transformation:
        result = Transformation.identity(self.n)
        base = self
        while e:
            if e & 1:
                result = compose(result, base)
            base = compose(base, base)
            e >>= 1
        return result

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.image)) + "]"


def compose(f: Transformation, g: Transformation) -> Transformation:
    """The transformation ``f`` followed by ``g``."""
    if f.n != g.n:
        raise AutomatonError(f"size mismatch: {f.n} vs {g.n}")
    gi = g.image
    return Transformation(tuple(gi[x] for x in f.image))


def transformation_props(f: Transformation) -> dict:
    return {"rank": f.rank, "is_permutation": f.is_permutation, "is_cyclic": f.is_cyclic}


@dataclass(frozen=True)
class SemiAutomaton:
    """A finite deterministic complete semi-automaton.

    ``delta[q][a]`` is the successor of state ``q`` under letter ``a``.
    """

    n: int
    k: int
    delta: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise AutomatonError("an automaton needs n >= 1 states and k >= 1 letters")
        if len(self.delta) != self.n:
            raise AutomatonError(f"delta has {len(self.delta)} rows, expected n = {self.n}")
        for q, row in enumerate(self.delta):
            if len(row) != self.k:
                raise AutomatonError(f"delta[{q}] has {len(row)} entries, expected k = {self.k}")
            for a, target in enumerate(row):
                if isinstance(target, bool) or not isinstance(target, int):
                    raise AutomatonError(f"delta[{q}][{a}] is not an integer")
                if not 0 <= target < self.n:
                    raise AutomatonError(f"delta[{q}][{a}] = {target} is not a state in [0, {self.n})")
        if not self.names:
            object.__setattr__(self, "names", default_letter_names(self.k))
        if len(self.names) != self.k:
            raise AutomatonError(f"{len(self.names)} letter names given for k = {self.k} letters")
        if len(set(self.names)) != self.k:
            raise AutomatonError("letter names must be distinct")

    @cached_property
    def letters(self) -> tuple[Transformation, ...]:
        """The transformation induced by each letter."""
        return tuple(
            Transformation(tuple(self.delta[q][a] for q in range(self.n))) for a in range(self.k)
        )

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def step(self, q: int, a: int) -> int:
        return self.delta[q][a]

    def word(self, text: str) -> Word:
        return parse_word(self, text)

    def format_word(self, w: Sequence[int]) -> str:
        return format_word(self, w)

    def __repr__(self) -> str:
        return f"SemiAutomaton(n={self.n}, k={self.k}, names={self.names!r})"


def default_letter_names(k: int) -> tuple[str, ...]:
    if k <= 26:
        return tuple(chr(ord("a") + i) for i in range(k))
    return tuple(f"x{i}" for i in range(k))


def make_automaton(
    n: int,
    k: int,
    delta: Sequence[Sequence[int]],
    names: Sequence[str] | None = None,
) -> SemiAutomaton:
    """Build and validate a semi-automaton from an ``n x k`` transition table."""
    try:
        table = tuple(tuple(row) for row in delta)
    except TypeError as exc:
        raise AutomatonError("delta must be a nested sequence of rows") from exc
    return SemiAutomaton(n, k, table, tuple(names) if names else ())


def from_letter_images(images: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> SemiAutomaton:
    """Build an automaton from one image array per letter."""
    if not images:
        raise AutomatonError("need at least one letter")
    n = len(images[0])
    if any(len(img) != n for img in images):
        raise AutomatonError("all letter images must have the same length")
    delta = [[img[q] for img in images] for q in range(n)]
    return make_automaton(n, len(images), delta, names)


# -- words ------------------------------------------------------------------

def check_word(A: SemiAutomaton, w: Iterable[int]) -> Word:
    w = tuple(w)
    for a in w:
        if isinstance(a, bool) or not isinstance(a, int) or not 0 <= a < A.k:
            raise AutomatonError(f"letter index {a!r} out of range for k = {A.k}")
    return w


def parse_word(A: SemiAutomaton, text: str) -> Word:
    """Parse a word written with the automaton's letter names.

    Accepts ``"ababa"``, exponent shorthand such as ``"b^2a^2b"``, and
    whitespace-separated multi-character names. ``""`` and ``"ε"`` denote the
    empty word.
    """
    text = text.strip()
    if text in ("", EPSILON, "eps"):
        return ()
    index = {name: i for i, name in enumerate(A.names)}
    single = all(len(name) == 1 for name in A.names)
    out: list[int] = []
    if single:
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch not in index:
                raise AutomatonError(f"unknown letter {ch!r} in word {text!r}")
            i += 1
            count = 1
            m = re.match(r"\^(\d+)", text[i:])
            if m:
                count = int(m.group(1))
                i += m.end()
            out.extend([index[ch]] * count)
        return tuple(out)
    for token in text.split():
        name, _, exp = token.partition("^")
        if name not in index:
            raise AutomatonError(f"unknown letter {name!r} in word {text!r}")
        out.extend([index[name]] * (int(exp) if exp else 1))
    return tuple(out)


def format_word(A: SemiAutomaton, w: Sequence[int]) -> str:
    if not w:
        return EPSILON
    sep = "" if all(len(name) == 1 for name in A.names) else " "
    return sep.join(A.names[a] for a in w)


def compact_word(A: SemiAutomaton, w: Sequence[int]) -> str:
    """Format with exponents for runs, e.g. ``b^2a^2b``."""
    if not w:
        return EPSILON
    sep = "" if all(len(name) == 1 for name in A.names) else " "
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        run = j - i
        parts.append(A.names[w[i]] + (f"^{run}" if run > 1 else ""))
        i = j
    return sep.join(parts)


# -- state sets -------------------------------------------------------------

def to_mask(S: Iterable[int] | int, n: int | None = None) -> int:
    if isinstance(S, int):
        return S
    mask = 0
    for q in S:
        if n is not None and not 0 <= q < n:
            raise AutomatonError(f"state {q} out of range for n = {n}")
        mask |= 1 << q
    return mask


def from_mask(mask: int) -> StateSet:
    out = []
    q = 0
    while mask:
        if mask & 1:
            out.append(q)
        mask >>= 1
        q += 1
    return frozenset(out)


def format_set(S: Iterable[int] | int) -> str:
    states = sorted(from_mask(S) if isinstance(S, int) else S)
    return "{" + ",".join(map(str, states)) + "}"


def apply_word(A: SemiAutomaton, S: Iterable[int], w: Sequence[int]) -> StateSet:
    """The image of the state set ``S`` under ``w``."""
    w = check_word(A, w)
    current = {q for q in S}
    for q in current:
        if not 0 <= q < A.n:
            raise AutomatonError(f"state {q} out of range for n = {A.n}")
    delta = A.delta
    for a in w:
        current = {delta[q][a] for q in current}
    return frozenset(current)


def preimage_word(A: SemiAutomaton, S: Iterable[int], w: Sequence[int]) -> StateSet:
    """All states that ``w`` maps into ``S``."""
    f = transformation_of(A, w)
    target = frozenset(S)
    return frozenset(q for q in range(A.n) if f.image[q] in target)


def transformation_of(A: SemiAutomaton, w: Sequence[int]) -> Transformation:
    w = check_word(A, w)
    image = list(range(A.n))
    delta = A.delta
    for a in w:
        image = [delta[q][a] for q in image]
    return Transformation(tuple(image))


def is_strongly_connected(A: SemiAutomaton) -> bool:
    """True iff every state reaches every other state."""

    def reach(adj: list[set[int]]) -> set[int]:
        seen = {0}
        stack = [0]
        while stack:
            q = stack.pop()
            for p in adj[q]:
                if p not in seen:
                    seen.add(p)
                    stack.append(p)
        return seen

    forward: list[set[int]] = [set(row) for row in A.delta]
    backward: list[set[int]] = [set() for _ in range(A.n)]
    for q, row in enumerate(A.delta):
        for p in row:
            backward[p].add(q)
    return len(reach(forward)) == A.n and len(reach(backward)) == A.n
