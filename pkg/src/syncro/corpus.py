"""Seeded random automata for property and cross-check suites.

Each sample is drawn from its own generator seeded by ``(seed, index)``, so a
corpus is reproducible and independent of how samples are scheduled.
"""

from __future__ import annotations

import random

from .core import SemiAutomaton, from_letter_images


def sample_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"syncro:{seed}:{index}")


def random_map(rng: random.Random, n: int) -> list[int]:
    return [rng.randrange(n) for _ in range(n)]


def random_cycle(rng: random.Random, n: int) -> list[int]:
    """A uniformly random single n-cycle."""
    order = list(range(n))
    rng.shuffle(order)
    image = [0] * n
    for i, q in enumerate(order):
        image[q] = order[(i + 1) % n]
    return image


def random_permutation(rng: random.Random, n: int) -> list[int]:
    image = list(range(n))
    rng.shuffle(image)
    return image


def random_defect(rng: random.Random, n: int) -> list[int]:
    """A uniformly random map of rank exactly n - 1 (n >= 2)."""
    if n < 2:
        raise ValueError("a rank n - 1 map needs n >= 2")
    image = random_permutation(rng, n)
    p, q = rng.sample(range(n), 2)
    image[q] = image[p]
    return image


def uniform_automaton(rng: random.Random, n: int, k: int) -> SemiAutomaton:
    return from_letter_images([random_map(rng, n) for _ in range(k)])


def structured_automaton(rng: random.Random, n: int, k: int = 2) -> SemiAutomaton:
    """A random cyclic letter, a random rank n - 1 letter, and uniform extras."""
    letters = [random_defect(rng, n), random_cycle(rng, n)]
    letters += [random_map(rng, n) for _ in range(k - 2)]
    return from_letter_images(letters[:k])


def mixed_letter(rng: random.Random, n: int) -> list[int]:
    kind = rng.random()
    if kind < 0.3:
        return random_permutation(rng, n)
    if kind < 0.45:
        return random_cycle(rng, n)
    if kind < 0.8 and n >= 2:
        return random_defect(rng, n)
    return random_map(rng, n)


def mixed_automaton(rng: random.Random, n: int, k: int) -> SemiAutomaton:
    """Letters drawn from permutations, cycles, rank n - 1 maps, and uniform maps."""
    return from_letter_images([mixed_letter(rng, n) for _ in range(k)])


def random_binary(rng: random.Random, n: int) -> SemiAutomaton:
    """Binary automaton: half structured, half mixed, to cover both outcomes."""
    if rng.random() < 0.5:
        return structured_automaton(rng, n, 2)
    return mixed_automaton(rng, n, 2)


def corpus(seed: int, samples: int, n_range: tuple[int, int], k_range: tuple[int, int] = (1, 3),
           kind: str = "uniform"):
    """Yield ``(index, automaton)`` pairs."""
    for i in range(samples):
        rng = sample_rng(seed, i)
        n = rng.randint(*n_range)
        k = rng.randint(*k_range)
        if kind == "uniform":
            yield i, uniform_automaton(rng, n, k)
        elif kind == "structured":
            yield i, structured_automaton(rng, n, max(k, 2))
        elif kind == "mixed":
            yield i, mixed_automaton(rng, n, k)
        elif kind == "binary":
            yield i, random_binary(rng, n)
        else:
            raise ValueError(f"unknown corpus kind {kind!r}")
