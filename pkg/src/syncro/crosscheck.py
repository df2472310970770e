"""Seeded cross-check suites: main code path against the oracle, and the
structural equivalences and implications on random corpora.

Every sample index ``i`` gets its own generator, so results do not depend on
worker scheduling; outcomes are merged in index order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .core import SemiAutomaton, is_strongly_connected
from .corpus import mixed_automaton, random_binary, sample_rng, structured_automaton, uniform_automaton
from .criteria import corollary_word_check, half_cycle_check, theorem1_check
from .oracle import ORACLE_CAP, oracle_2set_distinguishable, oracle_complete_reachable, oracle_sc
from .powerset import (
    all_2sets_distinguishable,
    build_power,
    is_completely_reachable,
    k_level_reachable,
    reach_depth_bound_check,
    syn_state_complexity,
)
from .structure import (
    binary_structure,
    don_precondition,
    is_circular,
    orbit_analysis,
    prop1_equivalence,
    rank_profile,
)

SUITES = (
    "oracle-sc",
    "oracle-complete-reachable",
    "oracle-2sets",
    "lemma1-two-sets",
    "lemma1-two-sets-binary",
    "lemma2-strongly-connected",
    "circular-implies-reachable",
    "binary-structure",
    "prop1-orbits",
    "criteria-soundness",
    "corollary-is-theorem1",
    "don-certificate",
    "single-defect-transitive",
)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failed: int = 0
    first_failure: tuple[int, SemiAutomaton, str] | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class Summary:
    samples: int
    seed: int
    nmax: int
    suites: dict[str, SuiteResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites.values())


def _check_sample(args) -> list[tuple[str, bool, SemiAutomaton, str]]:
    """Run every applicable check on sample ``index``; returns (suite, ok, automaton, note)."""
    seed, index, nmax = args
    rng = sample_rng(seed, index)
    n = rng.randint(2, nmax)
    k = rng.randint(1, 3)
    out = []

    def record(suite, ok, A, note=""):
        out.append((suite, bool(ok), A, note))

    # uniform automaton against the oracle
    U = uniform_automaton(rng, n, k)
    pu = build_power(U)
    sc = syn_state_complexity(U, power=pu)
    cr = is_completely_reachable(U, power=pu).ok
    two = all_2sets_distinguishable(U).ok
    record("oracle-sc", sc == oracle_sc(U), U, f"sc={sc}")
    record("oracle-complete-reachable", cr == oracle_complete_reachable(U), U)
    record("oracle-2sets", two == oracle_2set_distinguishable(U), U)

    # binary structured/mixed automaton for the implication suites
    B = random_binary(rng, max(n, 3))
    M = mixed_automaton(rng, n, k)
    for A in (U, B, M):
        pa = build_power(A)
        sc_a = syn_state_complexity(A, power=pa)
        cr_a = is_completely_reachable(A, power=pa).ok
        max_a = sc_a == 2 ** A.n - A.n
        if cr_a:
            agree = max_a == all_2sets_distinguishable(A).ok
            record("lemma1-two-sets", agree, A, f"sc={sc_a}")
            if A.k == 2:
                record("lemma1-two-sets-binary", agree, A, f"sc={sc_a}")
        if is_strongly_connected(A) and max_a:
            record("lemma2-strongly-connected", cr_a, A)
        if is_circular(A) and max_a:
            record("circular-implies-reachable", cr_a, A)
        if A.k == 2 and A.n >= 3:
            record("binary-structure", k_level_reachable(A, A.n - 1, power=pa) == binary_structure(A).ok, A)
        if A.n >= 2 and rank_profile(A).m < A.n:
            try:
                r = prop1_equivalence(A, power=pa)
                record("prop1-orbits", r.structural == r.reachable_n_minus_1, A)
            except AssertionError as exc:
                record("prop1-orbits", False, A, str(exc))
        don = don_precondition(A)
        if don is not None:
            ok = cr_a and reach_depth_bound_check(A, power=pa).ok
            record("don-certificate", ok, A, str(don))
        profile = rank_profile(A)
        if cr_a and A.n > 2 and len(profile.permutational) == A.k - 1:
            record("single-defect-transitive", orbit_analysis(A).group_transitive, A)

    # criteria soundness and the corollary's special-case relation
    S = structured_automaton(rng, max(n, 3), 2)
    a, b = (0,), (1,)
    t1 = theorem1_check(S, a, b)
    hc = half_cycle_check(S, a, b)
    if (t1.satisfied or hc.satisfied) and is_completely_reachable(S).ok:
        osc = oracle_sc(S)
        record("criteria-soundness", osc == 2 ** S.n - S.n, S, f"oracle sc={osc}")
    cor = corollary_word_check(S, a, b)
    if cor.satisfied:
        record("corollary-is-theorem1", t1.satisfied, S)
    return out


def run(samples: int, seed: int, nmax: int, jobs: int = 1) -> Summary:
    if not 2 <= nmax <= ORACLE_CAP:
        raise ValueError(f"--nmax must lie in [2, {ORACLE_CAP}] (oracle cap), got {nmax}")
    summary = Summary(samples, seed, nmax, {name: SuiteResult(name) for name in SUITES})
    tasks = [(seed, i, nmax) for i in range(samples)]
    if jobs > 1 and samples > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_sample, tasks, chunksize=max(1, samples // (4 * jobs))))
    else:
        results = [_check_sample(t) for t in tasks]
    for index, outcomes in enumerate(results):
        for suite, ok, A, note in outcomes:
            res = summary.suites[suite]
            res.checked += 1
            if not ok:
                res.failed += 1
                if res.first_failure is None:
                    res.first_failure = (index, A, note)
    return summary
