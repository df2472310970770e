"""Constructors for the named automaton families used as ground truth.

Every binary family has letters ``a`` (index 0) and ``b`` (index 1) with
``b(i) = i + 1 mod n``; they differ in the action of ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import AutomatonError, SemiAutomaton, from_letter_images

FAMILIES = ("cerny", "L", "V", "F", "K", "fig3", "gc_footnote")
_ALIASES = {"c": "cerny", "l": "L", "v": "V", "f": "F", "k": "K"}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    n: int | None = None

    def __post_init__(self):
        name = _ALIASES.get(self.name, self.name)
        if name not in FAMILIES:
            raise AutomatonError(f"unknown family {self.name!r}; choose from {', '.join(FAMILIES)}")
        object.__setattr__(self, "name", name)


def _cycle(n: int) -> list[int]:
    return [(i + 1) % n for i in range(n)]


def cerny(n: int) -> SemiAutomaton:
    if n < 2:
        raise AutomatonError("cerny: n must be >= 2")
    a = list(range(n))
    a[n - 1] = 0
    return from_letter_images([a, _cycle(n)], ("a", "b"))


def family_k(n: int) -> SemiAutomaton:
    # 0 jumps to 3, 1..n-3 shift up by one, n-2 and n-1 wrap to 1 and 0
    if n <= 5:
        raise AutomatonError("K: n must be > 5 (maximal state complexity is claimed for odd n)")
    a = [0] * n
    for i in range(1, n - 2):
        a[i] = i + 1
    a[n - 1] = 0
    a[n - 2] = 1
    a[0] = 3
    return from_letter_images([a, _cycle(n)], ("a", "b"))


def family_l(n: int) -> SemiAutomaton:
    if n < 3:
        raise AutomatonError("L: n must be >= 3")
    a = [i + 1 for i in range(n)]
    a[n - 2] = 0
    a[n - 1] = 1
    return from_letter_images([a, _cycle(n)], ("a", "b"))


def family_v(n: int) -> SemiAutomaton:
    if n < 3:
        raise AutomatonError("V: n must be >= 3")
    a = [i + 1 for i in range(n)]
    a[n - 2] = 0
    a[n - 1] = 0
    return from_letter_images([a, _cycle(n)], ("a", "b"))


def family_f(n: int) -> SemiAutomaton:
    if n <= 3 or n % 2 == 0:
        raise AutomatonError("F: n must be odd and > 3")
    a = list(range(n))
    a[n - 2] = 0
    return from_letter_images([a, _cycle(n)], ("a", "b"))


def fig3() -> SemiAutomaton:
    """Four-state circular automaton with maximal sc that no criterion certifies."""
    return from_letter_images([[1, 2, 1, 3], [1, 2, 3, 0]], ("a", "b"))


def gc_footnote() -> SemiAutomaton:
    """Three states, no cyclic letter, but the word ba is a 3-cycle."""
    return from_letter_images([[1, 0, 2], [0, 2, 1]], ("a", "b"))


_SIZED = {"cerny": cerny, "K": family_k, "L": family_l, "V": family_v, "F": family_f}
_FIXED = {"fig3": fig3, "gc_footnote": gc_footnote}
_FIXED_N = {"fig3": 4, "gc_footnote": 3}


def build_family(spec: FamilySpec | str, n: int | None = None) -> SemiAutomaton:
    """Construct a family member from a spec or a name plus size."""
    if isinstance(spec, str):
        spec = FamilySpec(spec, n)
    if spec.name in _FIXED:
        if spec.n is not None and spec.n != _FIXED_N[spec.name]:
            raise AutomatonError(f"{spec.name} has exactly {_FIXED_N[spec.name]} states")
        return _FIXED[spec.name]()
    if spec.n is None:
        raise AutomatonError(f"family {spec.name} needs a state count n")
    return _SIZED[spec.name](spec.n)
